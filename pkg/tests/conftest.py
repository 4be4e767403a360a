from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from pythagorean.exact_core import QuadraticSurd

# exact arithmetic on long periods is slow but not wrong; wall-clock limits only add flakiness
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

small = st.integers(min_value=-60, max_value=60)
positive = st.integers(min_value=1, max_value=60)
radicands = st.sampled_from([2, 3, 5, 6, 7, 10, 11, 13])
fractions = st.builds(Fraction, small, positive)
positive_fractions = st.builds(Fraction, positive, positive)


@st.composite
def surds(draw, D=None, bound=60):
    """Surds of one field, ``D`` drawn once per example unless given."""
    D = draw(radicands) if D is None else D
    coeff = st.integers(-bound, bound)
    return QuadraticSurd(draw(coeff), draw(coeff), D, draw(st.integers(1, bound)))


@st.composite
def positive_surds(draw, D=None, bound=60):
    x = draw(surds(D, bound))
    if x.sign() == 0:
        x = QuadraticSurd(1)
    return abs(x)


@pytest.fixture
def root2():
    return QuadraticSurd.sqrt(2)
