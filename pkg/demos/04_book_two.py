"""
Book II as polynomial identities
================================

Each proposition is an equation between polynomials in the line segments.
Unconditional ones expand to zero; the ones about the diagonal are reduced
modulo a^2 = 2 b^2 first.
"""

from fractions import Fraction

from pythagorean import format_magnitude
from pythagorean.book2 import (
    REGISTRY,
    apply_areas_defect,
    apply_areas_excess,
    gnomon_chain,
    mean_extreme,
    poly_build,
    reduce_modulo,
    verify_identity,
)

for pid, ident in REGISTRY.items():
    tag = "given a^2 = 2b^2" if ident.conditional else "identically"
    print(f"{pid.value:<20} {verify_identity(pid)!s:<5} {tag:<18} {ident.statement}")

# what the reduction does to the elegant relation
diff = poly_build("(a+2*b)^2 - 2*(a+b)^2")
print("expanded:", diff)
print("modulo a^2 = 2b^2:", reduce_modulo(diff, "a", poly_build("2*b^2")))

# application of areas
print("x(2 + x) = 1  ->  x =", format_magnitude(apply_areas_excess(2, 1)))
print("x(4 - x) = 3  ->  x =", [format_magnitude(x) for x in apply_areas_defect(4, 3)])
print("x(5 - x) = 6  ->  x =", [format_magnitude(x) for x in apply_areas_defect(5, Fraction(6))])
print("mean and extreme ratio of 2:", format_magnitude(mean_extreme(2)))

# every remainder of the diagonal/side division is a gnomon of the one before
for step in gnomon_chain(6):
    print(f"  c{step.n} = {format_magnitude(step.remainder):<22} form (1,2,1): {step.holds}")
