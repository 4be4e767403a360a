from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pythagorean.errors import BadIndex, RangeViolation
from pythagorean.exact_core import QuadraticSurd as S
from pythagorean.pell import (
    convergent_anth_check,
    elegant_step,
    integer_descent,
    no_integer_solution,
    pell_induction_verify,
    pell_table,
    side_diameter,
    side_diameter_pairs,
    subtractive_step,
    surd_descent,
)

ROOT2 = S.sqrt(2)


def powers_of_unit(n):
    """(q_n, p_n) from q + p*sqrt(2) = (1 + sqrt(2))**n, in plain integer pairs."""
    q, p = 1, 1
    for _ in range(n - 1):
        q, p = q + 2 * p, q + p
    return q, p


class TestSideDiameter:
    @pytest.mark.parametrize("n, p, q, defect", [(1, 1, 1, -1), (2, 2, 3, 1), (3, 5, 7, -1), (4, 12, 17, 1)])
    def test_first_pairs(self, n, p, q, defect):
        pair = side_diameter(n)
        assert (pair.p, pair.q, pair.defect) == (p, q, defect)

    def test_bad_index(self):
        with pytest.raises(BadIndex):
            side_diameter(0)

    @pytest.mark.parametrize("n", [1, 2, 10, 64, 256])
    def test_matches_unit_powers(self, n):
        pair = side_diameter(n)
        assert (pair.q, pair.p) == powers_of_unit(n)

    def test_pell_property_and_coprime(self):
        for pair in side_diameter_pairs(256):
            assert pair.q**2 - 2 * pair.p**2 == (-1) ** pair.n
            assert gcd(pair.p, pair.q) == 1

    def test_induction_report(self):
        report = pell_induction_verify(256)
        assert report.ok and report.base
        assert all(report.identity) and all(report.step) and all(report.pell)
        assert len(report.identity) == 256

    @pytest.mark.parametrize("n, lhs", [(1, 9 + 1), (2, 49 + 9), (3, 289 + 49)])
    def test_identity_instances(self, n, lhs):
        a, b = side_diameter(n), side_diameter(n + 1)
        assert b.q**2 + a.q**2 == lhs == 2 * b.p**2 + 2 * a.p**2

    def test_table(self):
        rows = pell_table(3, digits=4)
        assert rows[2] == {"n": 3, "p": 5, "q": 7, "defect": -1, "ratio": {"value": "1.4000", "display_only": True}}


class TestConvergents:
    @pytest.mark.parametrize("n", range(1, 33))
    def test_convergent_anth(self, n):
        assert convergent_anth_check(n)

    def test_best_approximation(self):
        # each q/p is closer to sqrt(2) than any fraction with a smaller denominator
        for pair in side_diameter_pairs(7):
            err = abs(S(pair.q, 0, 0, pair.p) - ROOT2)
            for d in range(1, pair.p):
                for n in range(d, 2 * d + 1):
                    assert abs(S(n, 0, 0, d) - ROOT2) > err


class TestSteps:
    def test_elegant_examples(self):
        assert elegant_step(ROOT2, 1) == (2 + ROOT2, 1 + ROOT2)
        assert elegant_step(3, 2) == (7, 5)
        assert elegant_step(1, 1) == (3, 2)

    def test_subtractive_examples(self):
        assert subtractive_step(2 + ROOT2, 1 + ROOT2) == (ROOT2, 1)
        assert subtractive_step(7, 5) == (3, 2)
        with pytest.raises(RangeViolation):
            subtractive_step(2, 1)

    @given(st.integers(1, 40))
    def test_steps_invert(self, n):
        pair = side_diameter(n)
        up = elegant_step(pair.q, pair.p)
        nxt = side_diameter(n + 1)
        assert up == (nxt.q, nxt.p)
        if n > 1:
            assert subtractive_step(pair.q, pair.p) == tuple(S(v) for v in (side_diameter(n - 1).q, side_diameter(n - 1).p))

    @given(st.integers(1, 30), st.integers(1, 30))
    def test_diameter_relation_preserved(self, k, m):
        a, b = k * ROOT2 / m, S(k, 0, 0, m)
        c, d = elegant_step(a, b)
        assert c * c == 2 * d * d


class TestDescents:
    def test_surd_descent(self):
        trace = surd_descent(20)
        assert trace.ok
        assert trace.quotients == (1,) + (2,) * 20
        assert [st.s for st in trace.steps[:3]] == [ROOT2 - 1, 3 - 2 * ROOT2, 5 * ROOT2 - 7]

    @given(st.integers(2, 10**6), st.data())
    def test_integer_descent(self, m, data):
        n = data.draw(st.integers(m + 1, 2 * m - 1))
        m2, n2 = integer_descent(m, n)
        assert n2 * n2 - 2 * m2 * m2 == -(n * n - 2 * m * m)
        assert 0 < m2 < m and 0 < n2 < n

    def test_integer_descent_range(self):
        with pytest.raises(RangeViolation):
            integer_descent(1, 1)
        with pytest.raises(RangeViolation):
            integer_descent(3, 6)

    @pytest.mark.parametrize("bound", [1, 5, 30, 120])
    def test_no_solution_matches_brute_force(self, bound):
        brute = not any(n * n == 2 * m * m for m in range(1, bound + 1) for n in range(1, bound + 1))
        assert no_integer_solution(bound) == brute is True

    def test_no_solution_large(self):
        assert no_integer_solution(10_000)
