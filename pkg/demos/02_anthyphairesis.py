"""
Reciprocal subtraction and incommensurability
=============================================

Subtract the smaller magnitude from the larger as often as it fits, then
repeat with the remainder. Commensurable pairs stop at a common measure;
the diagonal and side of a square fall into a repeating pattern instead.
"""

from fractions import Fraction

from pythagorean import QuadraticSurd, format_magnitude, parse_magnitude
from pythagorean.anthyphairesis import anth_pair, incomm_certificate, theaetetus_trace

root2 = QuadraticSurd.sqrt(2)

# a commensurable pair ends, and the last remainder measures both
e = anth_pair(Fraction(7, 5), 1)
print("Anth(7/5, 1) =", e.describe(), "measure", format_magnitude(e.common_measure))

# the diagonal against the side repeats after two steps
e = anth_pair(root2, 1)
print("Anth(sqrt2, 1) =", e.describe())
for i, c in enumerate(e.remainders, start=1):
    print(f"  c{i} = {format_magnitude(c)}")

cert = incomm_certificate(e)
print("verdict:", cert.verdict.value, "because", cert.reason.value)

# the same argument laid out step by step
trace = theaetetus_trace()
for claim, holds in trace.checks.items():
    print(f"  {claim:<32} {holds}")
print(trace.chain)

# other quadratic irrationals have longer periods
for text in ["sqrt(3)", "sqrt(7)", "(1+sqrt(5))/2", "sqrt(13)"]:
    print(f"{text:>14}: {anth_pair(parse_magnitude(text), 1).describe()}")
