import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from polyadica.hypercomplex import get_algebra
from polyadica.polyadization import ZMatrix
from polyadica.vectoralg import PolyVector

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name):
    return json.loads((FIXTURES / name).read_text())


@pytest.fixture
def fixture():
    return load_fixture


rationals = st.builds(Fraction, st.integers(-10, 10), st.integers(1, 5))
nonzero_rationals = rationals.filter(lambda q: q != 0)


@st.composite
def elements(draw, tag, invertible=False):
    alg = get_algebra(tag)
    x = draw(st.builds(lambda cs: alg.from_coords(cs), st.lists(rationals, min_size=alg.dim, max_size=alg.dim)))
    if invertible:
        from hypothesis import assume

        assume(x.is_invertible())
    return x


@st.composite
def zmatrices(draw, n, tag, invertible=False):
    return ZMatrix(n, tuple(draw(elements(tag, invertible)) for _ in range(n - 1)), tag)


@st.composite
def vectors(draw, m, nonzero=False):
    src = nonzero_rationals if nonzero else rationals
    return PolyVector(tuple(draw(st.lists(src, min_size=m, max_size=m))))
