"""Musical anthyphairesis of 3-smooth intervals.

An interval ``2**e2 * 3**e3`` is stored as its exponent pair, so composition of
intervals is vector addition and "subtracting" the fifth from the octave is
exponent subtraction. The octave-by-fifth expansion never reaches the unison:
each remainder is a power of 2 over a power of 3 or the other way round.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from mpmath import iv

from .errors import NotAscending, NotOrdered, RangeViolation

__all__ = [
    "Interval",
    "UNISON",
    "OCTAVE",
    "FIFTH",
    "FOURTH",
    "TONE",
    "DIESIS",
    "COMMA",
    "interval_compare",
    "MusicalStep",
    "musical_anth",
    "philolaus_table",
    "never_unison_check",
]

# Below this exponent size the comparison is a plain big-integer one.
EXACT_EXPONENT_LIMIT = 4096
# Fraction strings are only expanded up to this exponent magnitude.
DISPLAY_EXPONENT_LIMIT = 10_000
QUOTIENT_BOUND = 100_000

_IV_LOCK = threading.Lock()


@dataclass(frozen=True, order=False)
class Interval:
    e2: int
    e3: int

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.e2 + other.e2, self.e3 + other.e3)

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(self.e2 - other.e2, self.e3 - other.e3)

    def __neg__(self) -> "Interval":
        return Interval(-self.e2, -self.e3)

    def __mul__(self, k: int) -> "Interval":
        return Interval(k * self.e2, k * self.e3)

    __rmul__ = __mul__

    def __lt__(self, other):
        return interval_compare(self, other) < 0

    def __le__(self, other):
        return interval_compare(self, other) <= 0

    def __gt__(self, other):
        return interval_compare(self, other) > 0

    def __ge__(self, other):
        return interval_compare(self, other) >= 0

    @property
    def is_unison(self) -> bool:
        return self.e2 == 0 and self.e3 == 0

    def ratio(self) -> Fraction:
        return Fraction(2) ** self.e2 * Fraction(3) ** self.e3

    def ratio_string(self) -> Optional[str]:
        """``num/den`` text, or ``None`` once the exponents are too large to print."""
        if max(abs(self.e2), abs(self.e3)) > DISPLAY_EXPONENT_LIMIT:
            return None
        r = self.ratio()
        return f"{r.numerator}/{r.denominator}"

    def to_json(self) -> dict:
        out = {"e2": self.e2, "e3": self.e3}
        ratio = self.ratio_string()
        if ratio is not None:
            out["ratio"] = ratio
        return out


UNISON = Interval(0, 0)
OCTAVE = Interval(1, 0)
FIFTH = Interval(-1, 1)
FOURTH = Interval(2, -1)
TONE = Interval(-3, 2)
DIESIS = Interval(8, -5)
COMMA = Interval(-19, 12)


def _sign_of(u: int, v: int) -> int:
    """Sign of ``log(2**u * 3**v)``.

    Small exponents: compare ``2**max(u,0) * 3**max(v,0)`` against the
    negative parts directly. Large exponents: bound ``u log 2 + v log 3``
    with outward-rounded interval arithmetic and double the precision until
    the interval excludes zero. It always does, since ``2**u != 3**-v`` for
    ``(u, v) != (0, 0)``.
    """
    if u == 0 and v == 0:
        return 0
    if max(abs(u), abs(v)) <= EXACT_EXPONENT_LIMIT:
        up = 2 ** max(u, 0) * 3 ** max(v, 0)
        down = 2 ** max(-u, 0) * 3 ** max(-v, 0)
        return (up > down) - (up < down)
    prec = 64 + 2 * max(abs(u), abs(v)).bit_length()
    # the interval context keeps its precision globally
    with _IV_LOCK:
        saved = iv.prec
        try:
            while True:
                iv.prec = prec
                t = iv.mpf(u) * iv.log(2) + iv.mpf(v) * iv.log(3)
                if t.a > 0:
                    return 1
                if t.b < 0:
                    return -1
                prec *= 2
        finally:
            iv.prec = saved


def interval_compare(x: Interval, y: Interval) -> int:
    """``-1``, ``0`` or ``1`` as ``x`` is smaller than, equal to, or larger than ``y``."""
    return _sign_of(x.e2 - y.e2, x.e3 - y.e3)


@dataclass(frozen=True)
class MusicalStep:
    n: int
    dividend: Interval
    divisor: Interval
    quotient: int
    remainder: Interval


def musical_anth(a: Interval, b: Interval, max_steps: int) -> list[MusicalStep]:
    """Divide ``a`` by ``b`` under composition, then ``b`` by the remainder, and so on.

    Each quotient is found by repeated removal of the divisor, every removal
    certified by :func:`interval_compare`. Stops at the unison or after
    ``max_steps`` steps.
    """
    if interval_compare(b, UNISON) <= 0:
        raise NotAscending(f"{b} is not larger than the unison")
    if interval_compare(a, b) <= 0:
        raise NotOrdered("need a > b")
    if max_steps < 1:
        raise RangeViolation("max_steps must be at least 1")
    steps = []
    for n in range(1, max_steps + 1):
        k, r = 0, a
        while interval_compare(r, b) >= 0:
            r = r - b
            k += 1
            if k > QUOTIENT_BOUND:
                raise RangeViolation(f"quotient at step {n} exceeds {QUOTIENT_BOUND}")
        steps.append(MusicalStep(n, a, b, k, r))
        if r.is_unison:
            break
        a, b = b, r
    return steps


_NAMES = ["octave", "fifth", "fourth", "tone", "diesis", "comma"]


def philolaus_table() -> list[dict]:
    """The four attested divisions, each checked by interval arithmetic.

    octave = fifth * fourth, fifth = fourth * tone,
    fourth = tone^2 * diesis, tone = diesis^2 * comma.
    """
    named = dict(zip(_NAMES, [OCTAVE, FIFTH, FOURTH, TONE, DIESIS, COMMA]))
    steps = musical_anth(OCTAVE, FIFTH, 4)
    rows = []
    for st, (big, small, rest) in zip(steps, zip(_NAMES, _NAMES[1:], _NAMES[2:])):
        power = f"^{st.quotient}" if st.quotient > 1 else ""
        rows.append(
            {
                "step": st.n,
                "relation": f"{big} = {small}{power} * {rest}",
                "quotient": st.quotient,
                "remainder_name": rest,
                "remainder": st.remainder.to_json(),
                "verified": (
                    st.dividend == named[big]
                    and st.divisor == named[small]
                    and st.remainder == named[rest]
                    and named[small] * st.quotient + named[rest] == named[big]
                    and named[rest] < named[small]
                ),
            }
        )
    return rows


def never_unison_check(steps: int) -> bool:
    """No remainder is the unison, and every remainder has exponents of
    opposite sign (a power of 2 against a power of 3)."""
    trace = musical_anth(OCTAVE, FIFTH, steps)
    if len(trace) < steps:
        return False
    for st in trace:
        r = st.remainder
        if r.is_unison or r.e2 * r.e3 >= 0:
            return False
        if not interval_compare(r, st.divisor) < 0:
            return False
    return True
