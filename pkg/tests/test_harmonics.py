import threading
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pythagorean.errors import NotAscending, NotOrdered, RangeViolation
from pythagorean.harmonics import (
    COMMA,
    DIESIS,
    FIFTH,
    FOURTH,
    OCTAVE,
    TONE,
    UNISON,
    Interval,
    interval_compare,
    musical_anth,
    never_unison_check,
    philolaus_table,
)

exps = st.integers(-60, 60)
big_exps = st.integers(-(10**15), 10**15)


def log_oracle_quotients(n: int) -> list[int]:
    """Continued fraction of log 2 / log(3/2) at 200 digits."""
    with mpmath.workdps(200):
        x = mpmath.log(2) / mpmath.log(mpmath.mpf(3) / 2)
        out = []
        for _ in range(n):
            k = int(mpmath.floor(x))
            out.append(k)
            x = 1 / (x - k)
    return out


class TestCompare:
    def test_examples(self):
        assert interval_compare(FIFTH, FOURTH) == 1
        assert interval_compare(TONE, DIESIS) == 1
        assert interval_compare(UNISON, UNISON) == 0

    @given(exps, exps, exps, exps)
    def test_matches_fractions(self, a, b, c, d):
        x, y = Interval(a, b), Interval(c, d)
        rx, ry = x.ratio(), y.ratio()
        assert interval_compare(x, y) == (rx > ry) - (rx < ry)

    @given(big_exps, big_exps)
    def test_large_exponents_match_log_oracle(self, u, v):
        x = Interval(u, v)
        with mpmath.workdps(120):
            t = u * mpmath.log(2) + v * mpmath.log(3)
        expected = 0 if u == v == 0 else (1 if t > 0 else -1)
        assert interval_compare(x, UNISON) == expected

    def test_large_exponents_antisymmetric(self):
        x, y = Interval(683381996816440, -431166034846567), Interval(-766512153894657, 483615324366283)
        assert interval_compare(x, y) == -interval_compare(y, x) != 0

    def test_compare_is_thread_safe(self):
        pairs = [(Interval(10**12 + i, -(10**12)), Interval(0, 0)) for i in range(40)]
        expected = [interval_compare(a, b) for a, b in pairs]
        results = [None] * len(pairs)

        def work(i):
            results[i] = interval_compare(*pairs[i])

        threads = [threading.Thread(target=work, args=(i,)) for i in range(len(pairs))]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert results == expected
        assert mpmath.iv.prec == 53


class TestMusicalAnth:
    def test_first_four(self):
        steps = musical_anth(OCTAVE, FIFTH, 4)
        assert [s.quotient for s in steps] == [1, 1, 2, 2]
        assert [s.remainder for s in steps] == [FOURTH, TONE, DIESIS, COMMA]
        assert COMMA.ratio_string() == "531441/524288"
        assert DIESIS.ratio() == Fraction(256, 243)

    def test_quotients_match_log_oracle(self):
        steps = musical_anth(OCTAVE, FIFTH, 30)
        quotients = [s.quotient for s in steps]
        assert quotients[:10] == [1, 1, 2, 2, 3, 1, 5, 2, 23, 2]
        assert quotients == log_oracle_quotients(30)

    def test_division_invariants(self):
        for s in musical_anth(OCTAVE, FIFTH, 30):
            assert s.divisor * s.quotient + s.remainder == s.dividend
            assert s.remainder < s.divisor
            assert s.remainder > UNISON

    def test_never_unison(self):
        assert never_unison_check(30)

    def test_commensurable_intervals_terminate(self):
        # octave against half an octave in exponent space: 4 = 2 * 2
        steps = musical_anth(Interval(2, 0), OCTAVE, 10)
        assert [s.quotient for s in steps] == [2] and steps[-1].remainder.is_unison

    def test_errors(self):
        with pytest.raises(NotAscending):
            musical_anth(OCTAVE, UNISON, 3)
        with pytest.raises(NotOrdered):
            musical_anth(FIFTH, OCTAVE, 3)
        with pytest.raises(RangeViolation):
            musical_anth(OCTAVE, FIFTH, 0)


def test_philolaus_table():
    rows = philolaus_table()
    assert [r["relation"] for r in rows] == [
        "octave = fifth * fourth",
        "fifth = fourth * tone",
        "fourth = tone^2 * diesis",
        "tone = diesis^2 * comma",
    ]
    assert all(r["verified"] for r in rows)
    assert rows[0]["remainder"] == {"e2": 2, "e3": -1, "ratio": "4/3"}
    assert rows[1]["remainder"]["ratio"] == "9/8"


def test_huge_ratio_not_expanded():
    assert Interval(10**6, -1).ratio_string() is None
    assert Interval(10**6, -1).to_json() == {"e2": 10**6, "e3": -1}
