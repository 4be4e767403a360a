"""
Side and diameter numbers
=========================

Starting from (1, 1), each new side is the old side plus the old diameter and
each new diameter is twice the old side plus the old diameter. The squares of
the diameters miss twice the squares of the sides by one, alternately above
and below.
"""

from pythagorean import QuadraticSurd, format_magnitude
from pythagorean.exact_core import decimal_string
from pythagorean.pell import (
    convergent_anth_check,
    integer_descent,
    no_integer_solution,
    pell_induction_verify,
    side_diameter_pairs,
    surd_descent,
)

print(f"{'n':>3} {'p':>8} {'q':>8}  q^2 - 2p^2   q/p")
for pair in side_diameter_pairs(10):
    ratio = decimal_string(QuadraticSurd(pair.q, 0, 0, pair.p), 10)
    print(f"{pair.n:>3} {pair.p:>8} {pair.q:>8}  {pair.defect:>+10}   {ratio}")

report = pell_induction_verify(256)
print("induction through n = 256:", "ok" if report.ok else f"fails at {report.first_failure}")
print("q_n/p_n are the convergents of sqrt 2 (n <= 32):", all(convergent_anth_check(n) for n in range(1, 33)))

# running the step backwards shrinks every pair until (1, 1)
pair = (408, 577)
while True:
    print("  (m, n) =", pair, "defect", pair[1] ** 2 - 2 * pair[0] ** 2)
    try:
        pair = integer_descent(*pair)
    except ValueError:
        break

# for the true diagonal the same step never stops
trace = surd_descent(5)
for st in trace.steps:
    print(f"  s{st.n} = {format_magnitude(st.s)}, d^2 = 2 s^2: {st.relation}")

print("no n^2 = 2 m^2 with m, n <= 10^4:", no_integer_solution(10_000))
