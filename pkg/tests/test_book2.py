import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pythagorean.anthyphairesis import anth_pair
from pythagorean.book2 import (
    REGISTRY,
    Poly,
    PropositionId,
    apply_areas_defect,
    apply_areas_excess,
    excess_anth_agrees,
    form_holds,
    form_lemma_root,
    form_preservation_cross,
    gnomon_chain,
    mean_extreme,
    mean_proportional,
    poly_build,
    reduce_modulo,
    square_gnomon_growth,
    verify_conditional,
    verify_identity,
)
from pythagorean.errors import (
    HypothesisViolated,
    IrrationalInput,
    NonPositiveArea,
    NonPositiveInput,
    NoSolution,
    RangeViolation,
    UnknownProposition,
)
from pythagorean.exact_core import QuadraticSurd as S

from conftest import positive_fractions

ROOT2 = S.sqrt(2)
ALL_IDS = list(PropositionId)


class TestPoly:
    def test_build_and_print(self):
        assert repr(poly_build("(a+b)^2 - a^2 - b^2")) == "2*a*b"
        assert poly_build("a - a").is_zero()

    def test_evaluate_matches_python(self):
        p = poly_build("(a+2*b)^2 + a^2 - 2*(a+b)^2 - 2*b^2 + x*m")
        rng = random.Random(7)
        for _ in range(50):
            env = {v: rng.randint(-50, 50) for v in ("a", "b", "x", "m")}
            assert p.evaluate(**env) == env["x"] * env["m"]

    @given(st.integers(-20, 20), st.integers(-20, 20), st.integers(0, 5))
    def test_ring_ops(self, c, d, e):
        a, b = Poly.var("a"), Poly.var("b")
        lhs = (c * a + d * b) ** e
        env = {"a": 3, "b": -2}
        assert lhs.evaluate(**env) == (3 * c - 2 * d) ** e

    def test_reduction(self):
        r = reduce_modulo(poly_build("a^4 - 4*b^4"), "a", poly_build("2*b^2"))
        assert r.is_zero()
        odd = reduce_modulo(poly_build("a^3"), "a", poly_build("2*b^2"))
        assert odd == poly_build("2*a*b^2")

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
    def test_reduction_idempotent_and_sound(self, coeffs):
        a = Poly.var("a")
        p = sum((c * a**i * Poly.var("b") ** (5 - i) for i, c in enumerate(coeffs)), Poly.const(0))
        repl = poly_build("2*b^2")
        once = reduce_modulo(p, "a", repl)
        assert reduce_modulo(once, "a", repl) == once
        assert once.degree_in("a") <= 1
        # at a = sqrt(2) b the reduced and original polynomials agree
        for b in (1, 2, 3):
            val_p = sum(c * ROOT2**i * S(b) ** i * S(b) ** (5 - i) for i, c in enumerate(coeffs))
            terms = once.terms
            val_r = sum(
                (coef * (ROOT2 * b) ** exps[0] * S(b) ** exps[1] for exps, coef in terms.items()), S(0)
            )
            assert val_p == val_r


class TestRegistry:
    def test_all_tags_present(self):
        tags = {pid.value for pid in PropositionId}
        expected = {f"II.{i}" for i in range(1, 11)} | {
            "Elegant",
            "SubtractiveElegant",
            "Chrystal-9.1.2",
            "Fowler-9.3.2",
            "Step2-11",
            "Step3-11",
            "CrossProduct-9.4.1",
        }
        assert tags == expected == set(REGISTRY)

    @pytest.mark.parametrize("pid", ALL_IDS, ids=[p.value for p in ALL_IDS])
    def test_verify_identity(self, pid):
        assert verify_identity(pid)
        assert verify_conditional(pid.value)

    def test_conditional_needs_hypothesis(self):
        # without a^2 = 2b^2 the elegant relation does not expand to zero
        ident = REGISTRY[PropositionId.ELEGANT]
        assert ident.conditional
        assert not all(d.is_zero() for d in ident.differences())

    @pytest.mark.parametrize("pid", [p for p in ALL_IDS if not REGISTRY[p].conditional])
    def test_unconditional_hold_numerically(self, pid):
        rng = random.Random(pid.value)
        for lhs, rhs in REGISTRY[pid].equations:
            for _ in range(20):
                env = {v: rng.randint(-30, 30) for v in ("a", "b", "c", "d", "x", "m", "c1", "c2")}
                assert poly_build(lhs).evaluate(**env) == poly_build(rhs).evaluate(**env)

    def test_unknown(self):
        with pytest.raises(UnknownProposition):
            verify_identity("II.11")


class TestForms:
    def test_preservation(self):
        assert form_preservation_cross(1, 2, 1, 1 + ROOT2, 1, 3 + 2 * ROOT2, 1 + ROOT2)
        with pytest.raises(HypothesisViolated):
            form_preservation_cross(1, 2, 1, 2, 1, 3 + 2 * ROOT2, 1 + ROOT2)
        with pytest.raises(NonPositiveInput):
            form_preservation_cross(0, 2, 1, 1 + ROOT2, 1, 3 + 2 * ROOT2, 1 + ROOT2)

    def test_lemma_root(self):
        assert form_lemma_root(1, 2, 1, 1 + ROOT2) == 1

    @given(st.integers(1, 9), st.integers(1, 9), st.integers(1, 9), positive_fractions)
    def test_lemma_root_unique_positive(self, A, B, C, a):
        y = form_lemma_root(A, B, C, a)
        assert y > 0 and form_holds(A, B, C, a, y)

    @settings(deadline=None)
    @given(positive_fractions, positive_fractions)
    def test_excess_form_gives_equal_anth(self, s, t):
        # (1+sqrt2, 1) is in the (1,2,1) form, so every rescaling shares its expansion
        a, b = (1 + ROOT2) * s, S.from_parts(s)
        c, d = (1 + ROOT2) * t, S.from_parts(t)
        assert excess_anth_agrees(a, b, c, d)
        assert anth_pair(a, b).describe() == "[period(2)]"


class TestAreas:
    def test_examples(self):
        assert apply_areas_excess(2, 1) == ROOT2 - 1
        assert apply_areas_excess(0, 4) == 2
        assert apply_areas_excess(3, 4) == 1
        assert apply_areas_defect(4, 3) == (1, 3)
        assert apply_areas_defect(2, 1) == (1, 1)
        assert mean_extreme(1) == S(-1, 1, 5, 2)
        assert mean_extreme(2) == S(-1, 1, 5, 1)
        assert mean_proportional(2, 8) == 4
        assert mean_proportional(1, 2) == ROOT2
        assert mean_proportional(3, 3) == 3

    def test_errors(self):
        with pytest.raises(NoSolution):
            apply_areas_defect(2, 4)
        with pytest.raises(NonPositiveArea):
            apply_areas_excess(2, 0)
        with pytest.raises(NonPositiveInput):
            mean_extreme(0)
        with pytest.raises(IrrationalInput):
            apply_areas_excess(ROOT2, 1)

    def test_random_solvers(self):
        rng = random.Random(1000)
        for _ in range(1000):
            a = Fraction(rng.randint(0, 200), rng.randint(1, 50))
            M = Fraction(rng.randint(1, 200), rng.randint(1, 50))
            x = apply_areas_excess(a, M)
            assert x > 0 and x * (a + x) == M
            if a > 0 and (a / 2) ** 2 >= M:
                lo, hi = apply_areas_defect(a, M)
                assert lo <= hi and lo * (a - lo) == M and hi * (a - hi) == M
            elif a > 0:
                with pytest.raises(NoSolution):
                    apply_areas_defect(a, M)

    def test_mean_extreme_is_purely_periodic(self):
        e = anth_pair(1, mean_extreme(1))
        assert (e.prefix, e.period) == ((), (1,))


class TestGnomons:
    def test_chain(self):
        steps = gnomon_chain(20)
        assert len(steps) == 20 and all(s.holds and s.form == (1, 2, 1) for s in steps)
        assert steps[0].remainder == ROOT2 - 1
        assert steps[2].remainder == 5 * ROOT2 - 7

    def test_chain_errors(self):
        with pytest.raises(RangeViolation):
            gnomon_chain(0)

    @pytest.mark.parametrize("n", [1, 2, 10, 1000])
    def test_square_growth(self, n):
        assert square_gnomon_growth(n)
