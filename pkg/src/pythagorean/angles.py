"""Apex angles of isosceles triangles, judged through exact squared lengths.

For the triangle with legs ``a, a`` and base ``c`` the apex angle is acute,
right or obtuse as ``c**2`` is less than, equal to or greater than ``2 a**2``.
Angles are never measured; two apex angles are compared through their cosines
``(2a^2 - c^2) / (2a^2)``, which are exact surds.

``omega(n)`` is the apex angle of the side/diameter triangle ``(p_n, p_n, q_n)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .anthyphairesis import anth_pair
from .errors import DegenerateTriangle, HypothesisViolated, RangeViolation, RightAngle
from .exact_core import QuadraticSurd, as_surd, format_magnitude
from .pell import side_diameter, side_diameter_pairs

__all__ = [
    "AngleKind",
    "classify_isosceles",
    "apex_cosine",
    "omega_kind",
    "omega_cosine",
    "omega_convergence_check",
    "AngleWitness",
    "pythagorean_angle_definition",
    "postulate4_check",
]


class AngleKind(str, enum.Enum):
    ACUTE = "Acute"
    RIGHT = "Right"
    OBTUSE = "Obtuse"


def _triangle(a, c) -> tuple[QuadraticSurd, QuadraticSurd]:
    a, c = as_surd(a), as_surd(c)
    if a.sign() <= 0 or c.sign() <= 0 or c >= 2 * a:
        raise DegenerateTriangle(f"({a}, {a}, {c}) is not a triangle")
    return a, c


def classify_isosceles(a, c) -> AngleKind:
    a, c = _triangle(a, c)
    order = (c * c - 2 * a * a).sign()
    return (AngleKind.ACUTE, AngleKind.RIGHT, AngleKind.OBTUSE)[order + 1]


def apex_cosine(a, c) -> QuadraticSurd:
    """Law of cosines for the apex: ``(2a^2 - c^2) / (2a^2)``."""
    a, c = _triangle(a, c)
    return (2 * a * a - c * c) / (2 * a * a)


def omega_kind(n: int) -> AngleKind:
    pair = side_diameter(n)
    return classify_isosceles(pair.p, pair.q)


def omega_cosine(n: int) -> Fraction:
    """``cos omega_n = -defect_n / (2 p_n^2)``, so ``|cos omega_n| = 1/(2 p_n^2)``."""
    pair = side_diameter(n)
    return Fraction(-pair.defect, 2 * pair.p * pair.p)


def omega_convergence_check(N: int) -> bool:
    """``|2p_n^2 - q_n^2| == 1`` for ``n <= N`` and ``|cos omega_n|`` strictly decreasing."""
    if N < 2:
        raise RangeViolation("N must be at least 2")
    prev = None
    for pair in side_diameter_pairs(N):
        if abs(2 * pair.p**2 - pair.q**2) != 1:
            return False
        # |q^2/p^2 - 2| = 1/p^2 in every case, whatever the sign of the defect
        if abs(Fraction(pair.q**2, pair.p**2) - 2) != Fraction(1, pair.p**2):
            return False
        cos = abs(Fraction(2 * pair.p**2 - pair.q**2, 2 * pair.p**2))
        if cos != Fraction(1, 2 * pair.p**2):
            return False
        if prev is not None and not cos < prev:
            return False
        prev = cos
    return True


@dataclass(frozen=True)
class AngleWitness:
    kind: AngleKind
    witness_index: int
    strict: bool

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "witness_index": self.witness_index, "strict": self.strict}


def pythagorean_angle_definition(a, c, strict: bool = True) -> AngleWitness:
    """Least side/diameter index that certifies the kind of the apex angle.

    Acute: least odd ``m`` with ``omega < omega_m``. Obtuse: least even ``m``
    with ``omega > omega_m``. With ``strict=False`` equality with ``omega_m``
    also counts as a witness.
    """
    cos = apex_cosine(a, c)
    kind = classify_isosceles(a, c)
    if kind is AngleKind.RIGHT:
        raise RightAngle("a right angle has no witness on either side")
    want = 1 if kind is AngleKind.ACUTE else 0
    for pair in side_diameter_pairs():
        if pair.n % 2 != want:
            continue
        ref = Fraction(-pair.defect, 2 * pair.p * pair.p)
        # omega < omega_m  <=>  cos omega > cos omega_m (cosine decreases on (0, pi))
        diff = (cos - ref).sign() if kind is AngleKind.ACUTE else (ref - cos).sign()
        if diff > 0 or (diff == 0 and not strict):
            return AngleWitness(kind, pair.n, strict)
    raise AssertionError("unreachable")  # pragma: no cover


def postulate4_check(pairs: Iterable, max_steps: Optional[int] = None) -> bool:
    """Every ``(a, b)`` with ``a^2 == 2 b^2`` has anthyphairesis ``[1, period(2)]``."""
    pairs = [(as_surd(a), as_surd(b)) for a, b in pairs]
    bad = [(a, b) for a, b in pairs if a * a != 2 * b * b]
    if bad:
        listing = ", ".join(f"({format_magnitude(a)}, {format_magnitude(b)})" for a, b in bad)
        raise HypothesisViolated(f"not hypotenuse/leg pairs of a right isosceles triangle: {listing}")
    for a, b in pairs:
        e = anth_pair(a, b, max_steps)
        if e.prefix != (1,) or e.period != (2,):
            return False
    return True
