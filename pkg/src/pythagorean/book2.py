"""Book II of the Elements as polynomial identities, plus the area constructions.

Identities are stated as text over a fixed, small variable universe and
expanded into sparse integer polynomials. An identity holds when
``LHS - RHS`` expands to the zero polynomial, or, for the conditional ones,
when it reduces to zero after the substitution ``v**2 := R`` that encodes the
hypothesis (``a**2 = 2 b**2`` or the excess form ``b**2 = 2 b c1 + c1**2``).
The hypotheses are monic quadratics, so the substitution is a well-defined
division with remainder.
"""

from __future__ import annotations

import ast
import enum
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Optional, Union

from .anthyphairesis import anth_pair, remainders
from .errors import (
    HypothesisViolated,
    IrrationalInput,
    NonPositiveArea,
    NonPositiveInput,
    NoSolution,
    RangeViolation,
    UnknownProposition,
)
from .exact_core import QuadraticSurd, as_surd

__all__ = [
    "VARIABLES",
    "Poly",
    "poly_build",
    "reduce_modulo",
    "PropositionId",
    "Identity",
    "REGISTRY",
    "verify_identity",
    "lookup",
    "verify_conditional",
    "form_holds",
    "form_preservation_cross",
    "form_lemma_root",
    "apply_areas_excess",
    "apply_areas_defect",
    "mean_extreme",
    "mean_proportional",
    "GnomonStep",
    "gnomon_chain",
    "square_gnomon_growth",
    "excess_anth_agrees",
]

VARIABLES = ("a", "b", "c", "d", "x", "m", "c1", "c2")
_INDEX = {v: i for i, v in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)
_ZERO_EXP = (0,) * _NVARS


class Poly:
    """Sparse multivariate polynomial with integer coefficients.

    ``terms`` maps exponent tuples (one slot per name in ``VARIABLES``) to
    nonzero coefficients; no zero coefficient is ever stored, so equal
    polynomials have equal term maps.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for exp, c in (terms or {}).items():
            if c:
                clean[tuple(exp)] = int(c)
        self.terms = MappingProxyType(clean)

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name: str) -> "Poly":
        try:
            i = _INDEX[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}") from None
        exp = [0] * _NVARS
        exp[i] = 1
        return cls({tuple(exp): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, name: str) -> int:
        i = _INDEX[name]
        return max((e[i] for e in self.terms), default=0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = Poly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def evaluate(self, **values):
        total = 0
        for e, c in self.terms.items():
            term = c
            for name, k in zip(VARIABLES, e):
                if k:
                    term = term * values[name] ** k
            total = total + term
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(VARIABLES, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _lift(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return Poly.const(x)
    raise TypeError(f"cannot use {x!r} in a polynomial")


def _build(node) -> Poly:
    if isinstance(node, ast.Expression):
        return _build(node.body)
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return Poly.const(node.value)
    if isinstance(node, ast.Name):
        return Poly.var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _build(node.operand)
        return -inner if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exp = node.right
            if not (isinstance(exp, ast.Constant) and type(exp.value) is int and exp.value >= 0):
                raise ValueError("exponents must be nonnegative integer literals")
            return _build(node.left) ** exp.value
        left, right = _build(node.left), _build(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
    raise ValueError(f"unsupported expression: {ast.dump(node)}")


def poly_build(expr: Union[str, Poly, int]) -> Poly:
    """Expand an expression over ``VARIABLES`` into canonical form.

    Text uses ``+ - *`` and integer powers written ``^`` or ``**``; a ready
    :class:`Poly` (built with the operators) or an int is passed through.

    >>> poly_build("(a+b)^2")
    a^2 + 2*a*b + b^2
    """
    if isinstance(expr, (Poly, int)):
        return _lift(expr)
    return _build(ast.parse(expr.replace("^", "**"), mode="eval"))


def reduce_modulo(poly: Poly, name: str, replacement: Poly) -> Poly:
    """Rewrite ``name**2 := replacement`` until ``poly`` is at most linear in ``name``.

    ``replacement`` must itself be at most linear in ``name``; this is the
    remainder of division by the monic quadratic ``name**2 - replacement``.
    """
    if replacement.degree_in(name) > 1:
        raise ValueError("replacement must have degree < 2 in the substituted variable")
    i = _INDEX[name]
    while True:
        high = {e: c for e, c in poly.terms.items() if e[i] >= 2}
        if not high:
            return poly
        low = Poly({e: c for e, c in poly.terms.items() if e[i] < 2})
        lifted = {}
        for e, c in high.items():
            e2 = list(e)
            e2[i] -= 2
            lifted[tuple(e2)] = c
        poly = low + Poly(lifted) * replacement


class PropositionId(str, enum.Enum):
    II_1 = "II.1"
    II_2 = "II.2"
    II_3 = "II.3"
    II_4 = "II.4"
    II_5 = "II.5"
    II_6 = "II.6"
    II_7 = "II.7"
    II_8 = "II.8"
    II_9 = "II.9"
    II_10 = "II.10"
    ELEGANT = "Elegant"
    SUBTRACTIVE_ELEGANT = "SubtractiveElegant"
    CHRYSTAL = "Chrystal-9.1.2"
    FOWLER = "Fowler-9.3.2"
    STEP2 = "Step2-11"
    STEP3 = "Step3-11"
    CROSS_PRODUCT = "CrossProduct-9.4.1"


_DIAMETER = ("a", "2*b^2")
_EXCESS = ("b", "2*b*c1 + c1^2")


@dataclass(frozen=True)
class Identity:
    pid: PropositionId
    statement: str
    equations: tuple[tuple[str, str], ...]
    hypothesis: Optional[tuple[str, str]] = None

    @property
    def conditional(self) -> bool:
        return self.hypothesis is not None

    def differences(self) -> list[Poly]:
        return [poly_build(lhs) - poly_build(rhs) for lhs, rhs in self.equations]


def _entry(pid, statement, equations, hypothesis=None):
    return pid, Identity(pid, statement, tuple(equations), hypothesis)


P = PropositionId
# II.5 and II.6 carry a/2; both sides are multiplied by 4 to stay integral.
REGISTRY = MappingProxyType(
    dict(
        [
            _entry(P.II_1, "(a1 + a2 + a3) b = a1 b + a2 b + a3 b", [("(a+c+d)*b", "a*b + c*b + d*b")]),
            _entry(P.II_2, "a = b + c  =>  a^2 = ba + ca", [("(b+c)^2", "b*(b+c) + c*(b+c)")]),
            _entry(P.II_3, "a = b - c  =>  a^2 = ba - ca", [("(b-c)^2", "b*(b-c) - c*(b-c)")]),
            _entry(P.II_4, "(a+b)^2 = a^2 + b^2 + 2ab", [("(a+b)^2", "a^2 + b^2 + 2*a*b")]),
            _entry(P.II_5, "(a/2)^2 - (a/2-x)^2 = x(a-x), times 4", [("a^2 - (a-2*x)^2", "4*x*(a-x)")]),
            _entry(P.II_6, "(a/2+x)^2 = (a/2)^2 + x(a+x), times 4", [("(a+2*x)^2", "a^2 + 4*x*(a+x)")]),
            _entry(P.II_7, "(a-b)^2 = a^2 + b^2 - 2ab", [("(a-b)^2", "a^2 + b^2 - 2*a*b")]),
            _entry(P.II_8, "(a+2b)^2 = a^2 + 4b(a+b)", [("(a+2*b)^2", "a^2 + 4*b*(a+b)")]),
            _entry(
                P.II_9, "a^2 + (2b-a)^2 = 2b^2 + 2(a-b)^2", [("a^2 + (2*b-a)^2", "2*b^2 + 2*(a-b)^2")]
            ),
            _entry(
                P.II_10, "(a+2b)^2 + a^2 = 2(a+b)^2 + 2b^2", [("(a+2*b)^2 + a^2", "2*(a+b)^2 + 2*b^2")]
            ),
            _entry(P.ELEGANT, "a^2 = 2b^2  =>  (a+2b)^2 = 2(a+b)^2", [("(a+2*b)^2", "2*(a+b)^2")], _DIAMETER),
            _entry(
                P.SUBTRACTIVE_ELEGANT,
                "a^2 = 2b^2  =>  (2b-a)^2 = 2(a-b)^2",
                [("(2*b-a)^2", "2*(a-b)^2")],
                _DIAMETER,
            ),
            _entry(
                P.CHRYSTAL,
                "d^2 = 2s^2  =>  (2s-d)^2 = 6s^2 - 4sd = 2(d-s)^2",
                [("(2*b-a)^2", "6*b^2 - 4*a*b"), ("2*(a-b)^2", "6*b^2 - 4*a*b")],
                _DIAMETER,
            ),
            _entry(
                P.FOWLER,
                "d^2 = 2s^2  =>  (d+2s)^2 = 6s^2 + 4sd = 2(d+s)^2",
                [("(a+2*b)^2", "6*b^2 + 4*a*b"), ("2*(a+b)^2", "6*b^2 + 4*a*b")],
                _DIAMETER,
            ),
            _entry(
                P.STEP2,
                "(b+c1)^2 = 2b^2  <=>  x(2c1+x) = c1^2 with x = b - 2c1",
                [
                    ("(b+c1)^2", "b^2 + c1^2 + 2*b*c1"),
                    ("(b+c1)^2 - 2*b^2", "c1^2 - (b-2*c1)*(2*c1 + (b-2*c1))"),
                ],
            ),
            _entry(
                P.STEP3,
                "(2c1+c2)^2 = 2(2c1+c2)c1 + c1^2  <=>  c2^2 = c1(c1-2c2)",
                [("(2*c1+c2)^2 - 2*(2*c1+c2)*c1 - c1^2", "c2^2 + 2*c1*c2 - c1^2")],
            ),
            _entry(
                P.CROSS_PRODUCT,
                "a^2 = 2b^2  =>  a(a+b) = b(a+2b)",
                [("a*(a+b)", "b*(a+2*b)")],
                _DIAMETER,
            ),
        ]
    )
)
del P


def lookup(pid) -> Identity:
    try:
        return REGISTRY[PropositionId(pid)]
    except ValueError:
        raise UnknownProposition(f"no registered proposition {pid!r}") from None


def verify_conditional(pid) -> bool:
    """Reduce every ``LHS - RHS`` modulo the registered hypothesis and test for zero.

    Identities registered without a hypothesis are checked by plain expansion.
    """
    ident = lookup(pid)
    diffs = ident.differences()
    if ident.hypothesis is not None:
        name, repl = ident.hypothesis
        repl_poly = poly_build(repl)
        diffs = [reduce_modulo(d, name, repl_poly) for d in diffs]
    return all(d.is_zero() for d in diffs)


def verify_identity(pid) -> bool:
    """True when the registered statement holds (under its hypothesis, if any)."""
    ident = lookup(pid)
    if ident.conditional:
        return verify_conditional(pid)
    return all(d.is_zero() for d in ident.differences())


# -- application of areas -----------------------------------------------------


def form_holds(A: int, B: int, C: int, x, y) -> bool:
    """``A x^2 == B x y + C y^2``."""
    x, y = as_surd(x), as_surd(y)
    return A * x * x == B * x * y + C * y * y


def form_preservation_cross(A: int, B: int, C: int, a, b, c, d) -> bool:
    """Two pairs in the same area form are in proportion: ``a*d == b*c``."""
    if min(A, B, C) <= 0:
        raise NonPositiveInput("A, B, C must be positive integers")
    a, b, c, d = (as_surd(v) for v in (a, b, c, d))
    if min(v.sign() for v in (a, b, c, d)) <= 0:
        raise NonPositiveInput("magnitudes must be positive")
    if not form_holds(A, B, C, a, b):
        raise HypothesisViolated(f"({a}, {b}) is not in the form ({A},{B},{C})")
    if not form_holds(A, B, C, c, d):
        raise HypothesisViolated(f"({c}, {d}) is not in the form ({A},{B},{C})")
    return a * d == b * c


def form_lemma_root(A: int, B: int, C: int, a) -> QuadraticSurd:
    """The unique positive ``y`` with ``A a^2 == B a y + C y^2``.

    As a quadratic in ``y`` the product of the roots is ``-A a^2 / C < 0``,
    so exactly one root is positive:
    ``y = a (sqrt(B^2 + 4AC) - B) / (2C)``.
    """
    if min(A, B, C) <= 0:
        raise NonPositiveInput("A, B, C must be positive integers")
    a = as_surd(a)
    if a.sign() <= 0:
        raise NonPositiveInput("a must be positive")
    y = a * (QuadraticSurd.sqrt(B * B + 4 * A * C) - B) / (2 * C)
    if not (y > 0 and form_holds(A, B, C, a, y)):
        raise AssertionError("lemma root failed verification")
    return y


def _rational(x, name: str) -> Fraction:
    s = as_surd(x)
    if not s.is_rational:
        raise IrrationalInput(f"{name} must be rational, got {s}")
    return s.to_fraction()


def apply_areas_excess(a, M) -> QuadraticSurd:
    """Positive ``x`` with ``x (a + x) == M``: ``x = sqrt((a/2)^2 + M) - a/2``."""
    a, M = _rational(a, "a"), _rational(M, "M")
    if M <= 0:
        raise NonPositiveArea(f"area must be positive, got {M}")
    if a < 0:
        raise NonPositiveInput(f"a must be nonnegative, got {a}")
    half = a / 2
    x = QuadraticSurd.sqrt(half * half + M) - half
    if x * (a + x) != M:
        raise AssertionError("excess solution failed verification")
    return x


def apply_areas_defect(a, M) -> tuple[QuadraticSurd, QuadraticSurd]:
    """Both roots of ``x (a - x) == M``, smaller first.

    The boundary ``(a/2)^2 == M`` is admitted and gives a double root.
    """
    a, M = _rational(a, "a"), _rational(M, "M")
    if M <= 0:
        raise NonPositiveArea(f"area must be positive, got {M}")
    if a <= 0:
        raise NonPositiveInput(f"a must be positive, got {a}")
    half = a / 2
    disc = half * half - M
    if disc < 0:
        raise NoSolution(f"x(a - x) never reaches {M}: (a/2)^2 = {half * half}")
    root = QuadraticSurd.sqrt(disc)
    lo, hi = half - root, half + root
    for x in (lo, hi):
        if x * (a - x) != M:
            raise AssertionError("defect solution failed verification")
    return lo, hi


def mean_extreme(a) -> QuadraticSurd:
    """The greater segment ``b`` with ``a^2 == a b + b^2``: ``b = a (sqrt 5 - 1) / 2``."""
    a = _rational(a, "a")
    if a <= 0:
        raise NonPositiveInput(f"a must be positive, got {a}")
    b = a * (QuadraticSurd.sqrt(5) - 1) / 2
    if a * a != a * b + b * b:
        raise AssertionError("mean and extreme ratio failed verification")
    return b


def mean_proportional(a, b) -> QuadraticSurd:
    a, b = _rational(a, "a"), _rational(b, "b")
    if a <= 0 or b <= 0:
        raise NonPositiveInput("both lines must be positive")
    m = QuadraticSurd.sqrt(a * b)
    if m * m != a * b:
        raise AssertionError("mean proportional failed verification")
    return m


@dataclass(frozen=True)
class GnomonStep:
    n: int
    previous: QuadraticSurd
    remainder: QuadraticSurd
    holds: bool
    form: tuple[int, int, int] = (1, 2, 1)


def gnomon_chain(k: int) -> list[GnomonStep]:
    """Remainders ``c1..ck`` of ``(sqrt 2, 1)`` and the excess form at each step.

    ``c_{n-1}^2 == c_n (2 c_{n-1} + c_n)`` with ``c_0 = b = 1``; in the
    ``A x^2 = B x y + C y^2`` notation every consecutive pair has
    ``(A, B, C) = (1, 2, 1)``.
    """
    if k < 1:
        raise RangeViolation("k must be at least 1")
    prev = QuadraticSurd(1)
    out = []
    for n, c in enumerate(remainders(QuadraticSurd.sqrt(2), prev, k), start=1):
        out.append(GnomonStep(n, prev, c, prev * prev == c * (2 * prev + c)))
        prev = c
    return out


def square_gnomon_growth(n: int) -> bool:
    if n < 1:
        raise RangeViolation("n must be at least 1")
    return (n + 1) ** 2 == n * n + (2 * n + 1)


def excess_anth_agrees(a, b, c, d, max_steps: Optional[int] = None) -> bool:
    """Pairs in the (1, 2, 1) form have the same anthyphairesis: proportion
    from the form, then equal expansions computed independently."""
    if not form_preservation_cross(1, 2, 1, a, b, c, d):
        return False
    return anth_pair(a, b, max_steps).key() == anth_pair(c, d, max_steps).key()
