"""
Exact arithmetic with quadratic surds
=====================================

Every number here is (p + q*sqrt(D)) / r with integer parts, so equality and
order are decided exactly. No floats are involved until something is printed.
"""

from fractions import Fraction

from pythagorean import QuadraticSurd, format_magnitude, parse_magnitude
from pythagorean.exact_core import decimal_string, surd_compare, surd_floor

root2 = QuadraticSurd.sqrt(2)

# canonical form: sqrt(8) is stored as 2*sqrt(2), common factors cancel
print(format_magnitude(parse_magnitude("(2+2*sqrt(8))/2")))

# field operations stay inside Q(sqrt 2)
c1 = root2 - 1
c2 = 3 - 2 * root2
print("c2 / c1 =", format_magnitude(c2 / c1))
print("c1^2 == c2 * 1:", c1 * c1 == c2)

# 1393/985 and 3363/2378 bracket sqrt(2) to within 10^-7; the order is still exact
for q, p in [(1393, 985), (3363, 2378)]:
    side = {-1: "below", 1: "above"}[surd_compare(Fraction(q, p), root2)]
    print(f"{q}/{p} is {side} sqrt(2)")

print("floor(-sqrt 2) =", surd_floor(-root2))
print("sqrt 2 to 40 places:", decimal_string(root2, 40))
