"""Exact rationals and quadratic surds.

Rationals are plain :class:`fractions.Fraction` objects; a ``Fraction`` is
already canonical (positive denominator, lowest terms), so there is no reason
to wrap it. Quadratic surds ``(p + q*sqrt(D))/r`` are implemented here with
a canonical form strong enough that structural equality is value equality.

No floating point is used anywhere. Ordering and floor are decided by integer
square roots and cross-squaring.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction
from functools import lru_cache, total_ordering
from math import gcd, isqrt
from numbers import Rational as _RationalABC

from .errors import DivisionByZero, FieldMismatch, NegativeRadicand, ZeroDenominator

__all__ = [
    "Rational",
    "QuadraticSurd",
    "rational_make",
    "surd_make",
    "surd_field_ops",
    "surd_compare",
    "surd_floor",
    "as_surd",
    "parse_magnitude",
    "format_magnitude",
    "decimal_string",
    "squarefree_split",
    "LT",
    "EQ",
    "GT",
]

Rational = Fraction

LT, EQ, GT = -1, 0, 1


def rational_make(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise ZeroDenominator(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


@lru_cache(maxsize=4096)
def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(f, m)`` with ``n == f*f*m`` and ``m`` squarefree.

    Trial division runs only while the cube of the divisor is at most the
    cofactor. After that the cofactor has at most two prime factors, so it is
    either squarefree or a perfect square.
    """
    if n <= 0:
        raise ValueError("squarefree_split needs a positive integer")
    f, core, m = 1, 1, n
    for p in _wheel():
        if p * p * p > m:
            break
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        f *= p ** (e // 2)
        if e % 2:
            core *= p
    s = isqrt(m)
    if s * s == m:
        return f * s, core
    return f, core * m


def _wheel():
    yield 2
    yield 3
    i = 5
    while True:
        yield i
        yield i + 2
        i += 6


@total_ordering
class QuadraticSurd:
    """The real number ``(p + q*sqrt(D)) / r`` in canonical form.

    Canonical means: ``r > 0``; ``D`` squarefree and ``> 1`` whenever
    ``q != 0``; ``gcd(p, q, r) == 1``; and ``q == 0`` implies ``D == 0``.
    Instances are immutable and hash like the equal ``Fraction`` when rational.
    """

    __slots__ = ("p", "q", "D", "r")

    def __init__(self, p: int, q: int = 0, D: int = 0, r: int = 1):
        # operator.index refuses Fraction and float instead of truncating them
        p, q, D, r = (operator.index(v) for v in (p, q, D, r))
        if r == 0:
            raise ZeroDenominator("surd with zero denominator")
        if q != 0:
            if D < 0:
                raise NegativeRadicand(f"sqrt({D}) is not real")
            if D == 0:
                q = 0
            else:
                f, D = squarefree_split(D)
                q *= f
                if D == 1:
                    p, q = p + q, 0
        if q == 0:
            D = 0
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "r", r // g)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticSurd is immutable")

    @classmethod
    def from_parts(cls, rational, coeff=0, D: int = 0) -> "QuadraticSurd":
        """Build ``rational + coeff*sqrt(D)`` from two rationals."""
        a, b = Fraction(rational), Fraction(coeff)
        r = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        return cls(a.numerator * (r // a.denominator), b.numerator * (r // b.denominator), D, r)

    @classmethod
    def sqrt(cls, x) -> "QuadraticSurd":
        """Exact square root of a nonnegative rational."""
        x = Fraction(x)
        if x < 0:
            raise NegativeRadicand(f"sqrt({x}) is not real")
        # sqrt(n/d) = sqrt(n*d)/d
        return cls(0, 1, x.numerator * x.denominator, x.denominator)

    # -- structure ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    @property
    def rational_part(self) -> Fraction:
        return Fraction(self.p, self.r)

    @property
    def surd_part(self) -> Fraction:
        return Fraction(self.q, self.r)

    def to_fraction(self) -> Fraction:
        if self.q:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, self.r)

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.p, -self.q, self.D, self.r)

    def norm(self) -> Fraction:
        """``x * conjugate(x)``, always rational."""
        return Fraction(self.p * self.p - self.q * self.q * self.D, self.r * self.r)

    def _field(self, other: "QuadraticSurd") -> int:
        if self.q == 0:
            return other.D
        if other.q == 0 or other.D == self.D:
            return self.D
        raise FieldMismatch(f"sqrt({self.D}) and sqrt({other.D}) in one expression")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        D = self._field(other)
        return QuadraticSurd.from_parts(
            self.rational_part + other.rational_part, self.surd_part + other.surd_part, D
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.p, -self.q, self.D, self.r)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        D = self._field(other)
        a, b = self.rational_part, self.surd_part
        c, d = other.rational_part, other.surd_part
        return QuadraticSurd.from_parts(a * c + b * d * D, a * d + b * c, D)

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticSurd":
        if self.p == 0 and self.q == 0:
            raise DivisionByZero("inverse of zero")
        # 1/x = conj(x)/norm(x); norm is nonzero for irrational x
        n = self.norm()
        conj = self.conjugate()
        return QuadraticSurd.from_parts(conj.rational_part / n, conj.surd_part / n, self.D)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        self._field(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = QuadraticSurd(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- order -------------------------------------------------------------

    def sign(self) -> int:
        """Sign of the real value, decided by cross-squaring."""
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        sq = 1 if q > 0 else -1
        if p == 0 or (p > 0) == (q > 0):
            return sq
        # p and q*sqrt(D) have opposite signs: the larger square wins
        return (1 if p > 0 else -1) if p * p > q * q * self.D else sq

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self.p, self.q, self.D, self.r) == (other.p, other.q, other.D, other.r)

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign() < 0

    def __hash__(self):
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.D, self.r))

    def __bool__(self):
        return self.p != 0 or self.q != 0

    def __floor__(self) -> int:
        return surd_floor(self)

    def __reduce__(self):
        return (QuadraticSurd, (self.p, self.q, self.D, self.r))

    # -- text --------------------------------------------------------------

    def __str__(self):
        return format_magnitude(self)

    def __repr__(self):
        return f"QuadraticSurd({self.p}, {self.q}, {self.D}, {self.r})"


def _coerce(x):
    if isinstance(x, QuadraticSurd):
        return x
    if isinstance(x, (int, _RationalABC)):
        x = Fraction(x)
        return QuadraticSurd(x.numerator, 0, 0, x.denominator)
    return NotImplemented


def as_surd(x) -> QuadraticSurd:
    """Embed an int, Fraction or surd as a :class:`QuadraticSurd`."""
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an exact magnitude")
    return s


def surd_make(p: int, q: int, D: int, r: int) -> QuadraticSurd:
    return QuadraticSurd(p, q, D, r)


_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "div": lambda x, y: x / y,
}


def surd_field_ops(x, y, op: str) -> QuadraticSurd:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    return fn(as_surd(x), as_surd(y))


def surd_compare(x, y) -> int:
    """Return ``LT``, ``EQ`` or ``GT`` (``-1``, ``0``, ``1``)."""
    return (as_surd(x) - as_surd(y)).sign()


def surd_floor(x) -> int:
    """Greatest integer not exceeding ``x`` (rounding toward minus infinity)."""
    x = as_surd(x)
    if x.q == 0:
        return x.p // x.r
    # q*sqrt(D) = +-sqrt(q^2 D), irrational, so it lies strictly between
    # consecutive integers and floor(t/r) == floor(floor(t)/r) for r > 0
    s = isqrt(x.q * x.q * x.D)
    top = x.p + s if x.q > 0 else x.p - s - 1
    return top // x.r


# -- text grammar -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt)|([-+*/()]))")


class MagnitudeSyntaxError(ValueError):
    """Raised for text that is not in the magnitude grammar."""


def _tokenize(text: str):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise MagnitudeSyntaxError(f"unexpected character at {pos} in {text!r}")
        out.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise MagnitudeSyntaxError(f"expected {expected or 'a token'}, got {tok!r}")
        self.i += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise ZeroDenominator("division by zero in magnitude")
                value = value / rhs
        return value

    def unary(self):
        if self.peek() in ("+", "-"):
            op = self.take()
            v = self.unary()
            return -v if op == "-" else v
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok is None:
            raise MagnitudeSyntaxError("unexpected end of input")
        if tok.isdigit():
            self.take()
            return QuadraticSurd(int(tok))
        if tok == "sqrt":
            self.take()
            self.take("(")
            arg = self.expr()
            self.take(")")
            if not arg.is_rational:
                raise MagnitudeSyntaxError("nested radicals are not supported")
            return QuadraticSurd.sqrt(arg.to_fraction())
        if tok == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        raise MagnitudeSyntaxError(f"unexpected token {tok!r}")


def parse_magnitude(text: str) -> QuadraticSurd:
    """Parse ``p``, ``p/q``, ``sqrt(D)``, ``(p+q*sqrt(D))/r`` and friends.

    The grammar is closed under ``+ - * /`` and parentheses, so anything the
    formatter prints parses back to the same value.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise MagnitudeSyntaxError("empty magnitude")
    parser = _Parser(tokens)
    value = parser.expr()
    if parser.peek() is not None:
        raise MagnitudeSyntaxError(f"trailing input in {text!r}")
    return value


def format_magnitude(x) -> str:
    if isinstance(x, Fraction) or isinstance(x, int):
        x = as_surd(x)
    if x.q == 0:
        return str(x.p) if x.r == 1 else f"{x.p}/{x.r}"
    return f"({x.p}{x.q:+d}*sqrt({x.D}))/{x.r}"


def decimal_string(x, digits: int = 12) -> str:
    """Correctly rounded decimal expansion, for display only.

    Rounds half up. Irrational values can never sit on a tie, and for rationals
    half-up is the stated convention.
    """
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    x = as_surd(x)
    scaled = surd_floor(x * 10**digits + Fraction(1, 2))
    neg = scaled < 0
    s = str(abs(scaled)).rjust(digits + 1, "0")
    body = s if digits == 0 else f"{s[:-digits]}.{s[-digits:]}"
    return f"-{body}" if neg else body
