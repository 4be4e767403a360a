"""Side and diameter numbers and the descents built on them.

``p_1 = q_1 = 1``, ``p_{n+1} = p_n + q_n``, ``q_{n+1} = 2 p_n + q_n``.
The pairs satisfy ``q_n**2 - 2 p_n**2 == (-1)**n``; the step from ``n`` to
``n + 1`` is the integer form of Euclid II.10.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator, Optional

from .anthyphairesis import euclid_anth
from .errors import BadIndex, RangeViolation
from .exact_core import QuadraticSurd, as_surd, decimal_string, surd_floor

__all__ = [
    "SideDiameterPair",
    "side_diameter",
    "side_diameter_pairs",
    "InductionReport",
    "pell_induction_verify",
    "elegant_step",
    "subtractive_step",
    "DescentStep",
    "SurdDescent",
    "surd_descent",
    "integer_descent",
    "no_integer_solution",
    "convergent_anth_check",
    "pell_table",
]


@dataclass(frozen=True)
class SideDiameterPair:
    n: int
    p: int
    q: int
    defect: int

    def to_json(self, digits: Optional[int] = None) -> dict:
        row = {"n": self.n, "p": self.p, "q": self.q, "defect": self.defect}
        if digits is not None:
            row["ratio"] = {
                "value": decimal_string(QuadraticSurd(self.q, 0, 0, self.p), digits),
                "display_only": True,
            }
        return row


def side_diameter_pairs(count: Optional[int] = None) -> Iterator[SideDiameterPair]:
    """Pairs ``n = 1, 2, ...``; endless when ``count`` is ``None``."""
    p, q, n = 1, 1, 1
    while count is None or n <= count:
        yield SideDiameterPair(n, p, q, q * q - 2 * p * p)
        p, q = p + q, 2 * p + q
        n += 1


def side_diameter(n: int) -> SideDiameterPair:
    if n < 1:
        raise BadIndex(f"side and diameter numbers start at n = 1, got {n}")
    for pair in side_diameter_pairs(n):
        pass
    return pair


@dataclass(frozen=True)
class InductionReport:
    """Per-index outcome of the inductive Pell check.

    ``identity[i]`` is the II.10 identity at ``n = i + 1`` and ``step[i]`` the
    induced sign flip of the defect; ``pell[i]`` is the Pell property itself
    as concluded by the induction.
    """

    N: int
    base: bool
    identity: tuple[bool, ...]
    step: tuple[bool, ...]
    pell: tuple[bool, ...]
    first_failure: Optional[int]

    @property
    def ok(self) -> bool:
        return self.first_failure is None


def pell_induction_verify(N: int) -> InductionReport:
    """Check ``q_{n+1}^2 + q_n^2 == 2 p_{n+1}^2 + 2 p_n^2`` for ``n <= N`` and
    derive the Pell property inductively from the base ``q_1^2 = 2 p_1^2 - 1``.
    """
    if N < 1:
        raise BadIndex("N must be at least 1")
    pairs = list(side_diameter_pairs(N + 1))
    base = pairs[0].q ** 2 == 2 * pairs[0].p ** 2 - 1
    identity, step, pell = [], [], []
    first = None if base else 1
    defect = -1
    for n in range(1, N + 1):
        cur, nxt = pairs[n - 1], pairs[n]
        ok_id = nxt.q ** 2 + cur.q ** 2 == 2 * nxt.p ** 2 + 2 * cur.p ** 2
        # the identity turns q_n^2 - 2p_n^2 = e into q_{n+1}^2 - 2p_{n+1}^2 = -e
        ok_step = nxt.q ** 2 - 2 * nxt.p ** 2 == -defect
        pell.append(cur.q ** 2 - 2 * cur.p ** 2 == (-1) ** n)
        identity.append(ok_id)
        step.append(ok_step)
        if first is None and not (ok_id and ok_step and pell[-1]):
            first = n
        defect = -defect
    return InductionReport(N, base, tuple(identity), tuple(step), tuple(pell), first)


def elegant_step(a, b) -> tuple[QuadraticSurd, QuadraticSurd]:
    """``(a, b) -> (a + 2b, a + b)``; maps diameter/side pairs to larger ones."""
    a, b = as_surd(a), as_surd(b)
    c, d = a + 2 * b, a + b
    if a * a == 2 * b * b and c * c != 2 * d * d:
        raise AssertionError("elegant step failed to preserve a^2 = 2 b^2")
    return c, d


def subtractive_step(a, b) -> tuple[QuadraticSurd, QuadraticSurd]:
    """``(a, b) -> (2b - a, a - b)`` for ``b < a < 2b``; the inverse of the elegant step."""
    a, b = as_surd(a), as_surd(b)
    if not (b < a < 2 * b):
        raise RangeViolation(f"need b < a < 2b, got a = {a}, b = {b}")
    c, d = 2 * b - a, a - b
    if a * a == 2 * b * b and c * c != 2 * d * d:
        raise AssertionError("subtractive step failed to preserve a^2 = 2 b^2")
    return c, d


@dataclass(frozen=True)
class DescentStep:
    n: int
    d: QuadraticSurd
    s: QuadraticSurd
    relation: bool
    decreasing: bool


@dataclass(frozen=True)
class SurdDescent:
    steps: tuple[DescentStep, ...]
    quotients: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return all(st.relation and st.decreasing and st.s > 0 for st in self.steps)


def surd_descent(max_steps: int) -> SurdDescent:
    """Iterate the subtractive step from ``(d, s) = (sqrt 2, 1)``.

    ``s_{n+1} = d_n - s_n`` and ``d_{n+1} = 2 s_n - d_n``. Each new side is a
    remainder of the diameter-by-side division, so ``s_{n-1} = 2 s_n + s_{n+1}``
    and the quotient stream is ``1, 2, 2, ...``.
    """
    if max_steps < 1:
        raise RangeViolation("max_steps must be at least 1")
    d, s = QuadraticSurd.sqrt(2), QuadraticSurd(1)
    quotients = [surd_floor(d / s)]
    steps = []
    for n in range(1, max_steps + 1):
        d_next, s_next = subtractive_step(d, s)
        quotients.append(surd_floor(s / s_next))
        steps.append(
            DescentStep(n, d_next, s_next, d_next * d_next == 2 * s_next * s_next, s_next < s)
        )
        d, s = d_next, s_next
    return SurdDescent(tuple(steps), tuple(quotients))


def integer_descent(m: int, n: int) -> tuple[int, int]:
    """``(m, n) -> (n - m, 2m - n)`` for ``0 < m < n < 2m``.

    ``n'^2 - 2 m'^2 == -(n^2 - 2 m^2)`` and both coordinates shrink, so a
    solution of ``n^2 = 2 m^2`` would yield a strictly smaller one.
    """
    if not (0 < m < n < 2 * m):
        raise RangeViolation(f"need 0 < m < n < 2m, got m = {m}, n = {n}")
    return n - m, 2 * m - n


def no_integer_solution(bound: int) -> bool:
    """Exhaustive search for ``n**2 == 2*m**2`` with ``1 <= m, n <= bound``.

    For a fixed ``m`` only ``n = isqrt(2 m^2)`` can work, so the scan over
    ``m`` covers every pair.
    """
    if bound < 1:
        raise RangeViolation("bound must be at least 1")
    for m in range(1, bound + 1):
        t = 2 * m * m
        n = isqrt(t)
        if n <= bound and n * n == t:
            return False
    return True


def convergent_anth_check(n: int) -> bool:
    """``Anth(q_n, p_n) == [1] + [2]*(n-1)`` and ``gcd(p_n, q_n) == 1``."""
    pair = side_diameter(n)
    e = euclid_anth(pair.q, pair.p)
    return e.prefix == (1,) + (2,) * (n - 1) and gcd(pair.p, pair.q) == 1


def pell_table(N: int, digits: int = 12) -> list[dict]:
    if N < 1:
        raise BadIndex("N must be at least 1")
    return [pair.to_json(digits) for pair in side_diameter_pairs(N)]
