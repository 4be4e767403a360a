"""
Apex angles of the side/diameter triangles
==========================================

The triangle with legs p_n, p_n and base q_n is acute for odd n and obtuse for
even n, and its apex angle closes in on a right angle from both sides. The
cosine of the apex is exact, so no angle is ever measured.
"""

from fractions import Fraction

from pythagorean import QuadraticSurd, format_magnitude
from pythagorean.angles import (
    apex_cosine,
    classify_isosceles,
    omega_cosine,
    omega_kind,
    postulate4_check,
    pythagorean_angle_definition,
)
from pythagorean.pell import elegant_step

for n in range(1, 9):
    print(f"omega_{n}: {omega_kind(n).value:<7} cos = {omega_cosine(n)}")

for a, c in [(1, 1), (2, 3), (5, 7), (1, Fraction(7, 5)), (10, 14)]:
    kind = classify_isosceles(a, c)
    w = pythagorean_angle_definition(a, c)
    loose = pythagorean_angle_definition(a, c, strict=False)
    print(f"({a}, {a}, {c}): {kind.value}, cos {format_magnitude(apex_cosine(a, c))}, "
          f"witness {w.witness_index} (non-strict {loose.witness_index})")

# every right isosceles triangle divides the same way, whatever its size
root2 = QuadraticSurd.sqrt(2)
pairs = [(root2, 1), (3 * root2 / 7, Fraction(3, 7)), elegant_step(root2, 1)]
print("all right angles alike:", postulate4_check(pairs))
