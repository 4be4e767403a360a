"""Anthyphairesis (reciprocal subtraction) of rational and quadratic-surd magnitudes.

For two magnitudes ``a > b`` the procedure writes::

    a   = k0*b  + c1,   c1 < b
    b   = k1*c1 + c2,   c2 < c1
    c1  = k2*c2 + c3,   c3 < c2
    ...

For commensurable magnitudes a remainder eventually divides its predecessor
and the process stops; the last nonzero remainder is the common measure. For a
quadratic irrational ratio the complete quotients ``c_{n-1}/c_n`` are again
quadratic irrationals of bounded height, so one of them repeats exactly and
the expansion is eventually periodic. An infinite expansion certifies
incommensurability.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Union

from .errors import (
    FieldMismatch,
    HypothesisViolated,
    Inconclusive,
    NonPositiveInput,
    RationalInput,
    StepCapExceeded,
)
from .exact_core import QuadraticSurd, as_surd, format_magnitude, surd_floor

__all__ = [
    "Status",
    "Verdict",
    "Reason",
    "AnthExpansion",
    "Certificate",
    "DEFAULT_MAX_STEPS",
    "euclid_anth",
    "surd_anth",
    "anth_pair",
    "remainder_stream",
    "remainders",
    "incomm_certificate",
    "cross_product_equal_anth",
    "theaetetus_trace",
    "TheaetetusTrace",
]

Magnitude = Union[int, Fraction, QuadraticSurd]


def _default_max_steps() -> int:
    raw = os.environ.get("ANTH_MAX_STEPS")
    if raw:
        try:
            value = int(raw)
        except ValueError:
            value = 0
        if value > 0:
            return value
    return 256


DEFAULT_MAX_STEPS = _default_max_steps()


class Status(str, enum.Enum):
    TERMINATED = "Terminated"
    PERIODIC = "Periodic"
    TRUNCATED = "Truncated"


class Verdict(str, enum.Enum):
    COMMENSURABLE = "Commensurable"
    INCOMMENSURABLE = "Incommensurable"


class Reason(str, enum.Enum):
    FINITE_EXPANSION = "FiniteExpansion"
    PERIODIC_HENCE_INFINITE = "PeriodicHenceInfinite"


@dataclass(frozen=True)
class AnthExpansion:
    """Quotients of an anthyphairesis together with the remainders produced.

    ``period`` is ``None`` unless the expansion closed on itself. ``steps``
    counts the division steps actually carried out.
    """

    prefix: tuple[int, ...]
    period: Optional[tuple[int, ...]]
    status: Status
    remainders: tuple[QuadraticSurd, ...]
    common_measure: Optional[Union[Fraction, QuadraticSurd]] = None
    steps: int = field(default=0, compare=False)

    @property
    def quotients(self) -> tuple[int, ...]:
        """Prefix followed by one copy of the period."""
        return self.prefix + (self.period or ())

    def key(self) -> tuple:
        """The data two expansions must share to count as equal anthyphaireses."""
        return (self.prefix, self.period, self.status)

    def take(self, n: int) -> list[int]:
        """The first ``n`` quotients, unrolling the period as needed."""
        out = list(self.prefix[:n])
        if self.period:
            while len(out) < n:
                out.extend(self.period)
        return out[:n]

    def describe(self) -> str:
        body = ", ".join(map(str, self.prefix))
        if self.period:
            per = ", ".join(map(str, self.period))
            return f"[{body + ', ' if body else ''}period({per})]"
        return f"[{body}]"

    def to_json(self) -> dict:
        measure = self.common_measure
        return {
            "prefix": list(self.prefix),
            "period": list(self.period) if self.period is not None else None,
            "status": self.status.value,
            "remainders": [format_magnitude(c) for c in self.remainders],
            "common_measure": format_magnitude(measure) if measure is not None else None,
        }


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    reason: Reason
    witness: object

    def to_json(self) -> dict:
        if self.verdict is Verdict.COMMENSURABLE:
            witness = {"common_measure": format_magnitude(self.witness)}
        else:
            prefix, period = self.witness
            witness = {"prefix": list(prefix), "period": list(period)}
        return {"verdict": self.verdict.value, "reason": self.reason.value, "witness": witness}


def _positive(x, name: str) -> QuadraticSurd:
    x = as_surd(x)
    if x.sign() <= 0:
        raise NonPositiveInput(f"{name} must be positive, got {x}")
    return x


def _euclid(ratio: Fraction) -> tuple[list[int], list[Fraction], Fraction]:
    """Euclid on ``ratio : 1`` in integers; remainders and measure in units of 1."""
    prev, cur = ratio.numerator, ratio.denominator
    den = cur
    quotients, rems = [], []
    while True:
        k, nxt = divmod(prev, cur)
        quotients.append(k)
        if not nxt:
            return quotients, rems, Fraction(cur, den)
        rems.append(Fraction(nxt, den))
        prev, cur = cur, nxt


def euclid_anth(a, b) -> AnthExpansion:
    """Finite anthyphairesis of two commensurable (rational) magnitudes.

    When ``a < b`` the first quotient is 0, as in the usual continued
    fraction convention; every later quotient is at least 1.

    >>> euclid_anth(7, 5).prefix
    (1, 2, 2)
    """
    a, b = _positive(a, "a"), _positive(b, "b")
    if not (a.is_rational and b.is_rational):
        raise FieldMismatch("euclid_anth takes rational magnitudes; use anth_pair")
    b = b.to_fraction()
    quotients, rems, measure = _euclid(a.to_fraction() / b)
    return AnthExpansion(
        prefix=tuple(quotients),
        period=None,
        status=Status.TERMINATED,
        remainders=tuple(as_surd(c * b) for c in rems),
        common_measure=measure * b,
        steps=len(quotients),
    )


def surd_anth(x, max_steps: Optional[int] = None) -> AnthExpansion:
    """Periodic anthyphairesis of an irrational ``x`` against the unit.

    The complete quotients ``x_{n+1} = 1/(x_n - floor(x_n))`` are kept in
    canonical form; the first exact repeat closes the period, which makes both
    the preperiod and the period minimal. Remainders follow the subtractive
    recurrence ``c_{n+1} = c_{n-1} - k_n*c_n`` with ``c_{-1} = x``, ``c_0 = 1``.

    Raises :class:`StepCapExceeded` carrying a ``Truncated`` expansion if no
    repeat is seen within ``max_steps`` quotients.
    """
    max_steps = DEFAULT_MAX_STEPS if max_steps is None else max_steps
    x = _positive(x, "x")
    if x.is_rational:
        raise RationalInput(f"{x} is rational; its anthyphairesis is finite (use euclid_anth)")
    seen = {x: 0}
    quotients: list[int] = []
    rems: list[QuadraticSurd] = []
    prev, cur = x, QuadraticSurd(1)
    for i in range(max_steps):
        k = surd_floor(x)
        quotients.append(k)
        nxt = prev - k * cur
        rems.append(nxt)
        prev, cur = cur, nxt
        x = (x - k).inverse()
        j = seen.get(x)
        if j is not None:
            return AnthExpansion(
                prefix=tuple(quotients[:j]),
                period=tuple(quotients[j:]),
                status=Status.PERIODIC,
                remainders=tuple(rems),
                steps=i + 1,
            )
        seen[x] = i + 1
    partial = AnthExpansion(
        prefix=tuple(quotients),
        period=None,
        status=Status.TRUNCATED,
        remainders=tuple(rems),
        steps=max_steps,
    )
    raise StepCapExceeded(f"no period within {max_steps} steps", partial)


def anth_pair(a, b, max_steps: Optional[int] = None) -> AnthExpansion:
    """Anthyphairesis of two magnitudes of the same quadratic field.

    Dispatches on whether ``a/b`` is rational. Remainders are reported in the
    units of ``b`` (that is, they are genuine magnitudes ``c1, c2, ...``).
    """
    a, b = _positive(a, "a"), _positive(b, "b")
    ratio = a / b
    if ratio.is_rational:
        quotients, rems, measure = _euclid(ratio.to_fraction())
        measure = b * measure
        return AnthExpansion(
            prefix=tuple(quotients),
            period=None,
            status=Status.TERMINATED,
            remainders=tuple(c * b for c in rems),
            common_measure=measure.to_fraction() if measure.is_rational else measure,
            steps=len(quotients),
        )
    try:
        e = surd_anth(ratio, max_steps)
    except StepCapExceeded as exc:
        part = exc.expansion
        scaled = AnthExpansion(
            part.prefix, None, Status.TRUNCATED, tuple(c * b for c in part.remainders), steps=part.steps
        )
        raise StepCapExceeded(str(exc), scaled) from None
    return AnthExpansion(
        prefix=e.prefix,
        period=e.period,
        status=e.status,
        remainders=tuple(c * b for c in e.remainders),
        steps=e.steps,
    )


def remainder_stream(a, b) -> Iterator[tuple[int, QuadraticSurd]]:
    """Yield ``(k_n, c_{n+1})`` pairs of the raw recurrence, without end for
    incommensurable input and until the zero remainder otherwise.
    """
    prev, cur = _positive(a, "a"), _positive(b, "b")
    while cur:
        k = surd_floor(prev / cur)
        nxt = prev - k * cur
        yield k, nxt
        prev, cur = cur, nxt


def remainders(a, b, count: int) -> list[QuadraticSurd]:
    """The first ``count`` nonzero remainders ``c1, c2, ...`` of ``(a, b)``."""
    out = []
    for _, c in remainder_stream(a, b):
        if not c or len(out) >= count:
            break
        out.append(c)
    return out


def incomm_certificate(e: AnthExpansion) -> Certificate:
    if e.status is Status.TERMINATED:
        return Certificate(Verdict.COMMENSURABLE, Reason.FINITE_EXPANSION, e.common_measure)
    if e.status is Status.PERIODIC:
        return Certificate(Verdict.INCOMMENSURABLE, Reason.PERIODIC_HENCE_INFINITE, (e.prefix, e.period))
    raise Inconclusive("truncated expansion decides nothing; raise max_steps")


def cross_product_equal_anth(a, b, c, d, max_steps: Optional[int] = None) -> bool:
    """If ``a*d == b*c`` the two anthyphaireses coincide; check it by computing both."""
    a, b, c, d = (as_surd(v) for v in (a, b, c, d))
    if a * d != b * c:
        raise HypothesisViolated(f"a*d = {a * d} but b*c = {b * c}")
    return anth_pair(a, b, max_steps).key() == anth_pair(c, d, max_steps).key()


@dataclass(frozen=True)
class TheaetetusTrace:
    a: QuadraticSurd
    b: QuadraticSurd
    c1: QuadraticSurd
    c2: QuadraticSurd
    checks: dict
    expansion: AnthExpansion
    chain: str

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def theaetetus_trace() -> TheaetetusTrace:
    """One and a half division steps on ``a = sqrt(2)``, ``b = 1`` plus the
    ratio condition ``b*c2 == c1**2``, which forces the period.
    """
    b = QuadraticSurd(1)
    a = QuadraticSurd.sqrt(2)
    c1 = a - b
    c2 = 3 * b - 2 * a
    checks = {
        "b < a < 2b": b < a < 2 * b,
        "3b > 2a": 3 * b > 2 * a,
        "b = 2*c1 + c2": b == 2 * c1 + c2,
        "b*c2 = c1^2": b * c2 == c1 * c1,
        "c2 < c1": c2 < c1,
        "c1 = a - b (first step)": a == b + c1 and c1 < b,
    }
    e = anth_pair(a, b)
    head = anth_pair(c1, c2)
    checks["Anth(c1, c2) = Anth(b, c1)"] = head.key() == anth_pair(b, c1).key()
    checks["Anth(a, b) = [1, period(2)]"] = e.prefix == (1,) and e.period == (2,)
    chain = f"Anth(a, b) = [1, 2, Anth(c1, c2)] = [1, 2, {head.describe()[1:-1]}] = {e.describe()}"
    return TheaetetusTrace(a, b, c1, c2, checks, e, chain)
