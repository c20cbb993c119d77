from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyadica import numeric
from polyadica.hypercomplex import UnnormedAlgebra
from polyadica.norms import PolyNorm, polyadic_norm, quer_norm, quer_norm_direct, scaled_norm_sq, triangle_holds
from polyadica.polyadization import NonInvertibleEntry, ZMatrix, nary_mul, polyadic_identity
from polyadica.props import run_suite

from conftest import load_fixture, rationals, zmatrices

shapes = st.tuples(st.sampled_from([3, 4, 5]), st.sampled_from(["R", "C", "H"]))


def test_complex_four_ary():
    z = ZMatrix.of("C", [1, 2], [3, -1], [0, 2])
    assert polyadic_norm(z).value_sq == 5 * 10 * 4
    # the norm itself is 1/200, i.e. one over the product of the squared moduli
    assert quer_norm(z).value_sq == F(1, 200) ** 2


def test_quaternion_ternary():
    z = ZMatrix.of("H", [1, 1, 1, 1], [0, 1, 2, 2])
    assert polyadic_norm(z).value_sq == 4 * 9
    assert quer_norm(z).value_sq == F(1, 36)


def test_unit_norm():
    for n in (3, 4, 5):
        e = polyadic_identity(n, "H")
        assert polyadic_norm(e).value_sq == 1
        assert quer_norm(e).value_sq == 1


def test_float_mode_value():
    z = ZMatrix.of("C", [3, 4], [1, 0], mode=numeric.FLOAT)
    n = polyadic_norm(z)
    assert n.mode == numeric.FLOAT
    assert n.value == numeric.FloatTol(5.0)
    assert n.to_json() == {"norm": 5.0, "norm_sq": 25.0}


def test_rational_has_no_root():
    with pytest.raises(numeric.ModeMismatch):
        polyadic_norm(ZMatrix.of("R", 1, 2)).value


def test_zero_iff_some_entry_zero():
    assert polyadic_norm(ZMatrix.of("C", [1, 1], [0, 0], [2, 2])).is_zero()
    with pytest.raises(NonInvertibleEntry):
        quer_norm(ZMatrix.of("C", [1, 1], [0, 0], [2, 2]))


def test_dual_rejected():
    with pytest.raises(UnnormedAlgebra):
        polyadic_norm(polyadic_identity(4, "dual"))


def test_triangle_counterexample():
    w = load_fixture("witnesses.json")["triangle"]
    a = ZMatrix.of("R", *w["a"], mode=numeric.FLOAT)
    b = ZMatrix.of("R", *w["b"], mode=numeric.FLOAT)
    assert polyadic_norm(a).value == 0 and polyadic_norm(b).value == 0
    assert polyadic_norm(a + b).value == 1
    assert not triangle_holds(a, b)


def test_triangle_fails_on_random_samples():
    # recorded as a measurement: the product norm is not subadditive
    report = run_suite("triangle-inequality", 200, seed=3)
    assert report["failed"] > 0


@given(shapes.flatmap(lambda s: st.tuples(zmatrices(*s), zmatrices(*s))))
def test_componentwise_triangle_bound(pair):
    a, b = pair
    bound = numeric.product(
        (numeric.sqrt(numeric.FloatTol(float(x.norm_sq()))) + numeric.sqrt(numeric.FloatTol(float(y.norm_sq())))) ** 2
        for x, y in zip(a.entries, b.entries)
    )
    assert float(polyadic_norm(a + b).value_sq) <= float(bound) * (1 + 1e-9) + 1e-12


@given(shapes.flatmap(lambda s: st.lists(zmatrices(*s), min_size=s[0], max_size=s[0])))
def test_multiplicative(zs):
    lhs = polyadic_norm(nary_mul(zs)).value_sq
    assert lhs == numeric.product(polyadic_norm(z).value_sq for z in zs)


@given(shapes.flatmap(lambda s: zmatrices(*s)), rationals)
def test_scaling_law(z, lam):
    assert polyadic_norm(z.scale(lam)).value_sq == scaled_norm_sq(z, lam)
    assert scaled_norm_sq(z, lam) == abs(lam) ** (2 * (z.arity - 1)) * polyadic_norm(z).value_sq


@given(shapes.flatmap(lambda s: zmatrices(*s, invertible=True)))
def test_quer_norm_consistent(z):
    assert quer_norm(z) == quer_norm_direct(z)
    assert quer_norm(z).value_sq * polyadic_norm(z).value_sq ** (z.arity - 2) == 1


def test_polynorm_equality():
    assert PolyNorm(3, F(1, 2)) == PolyNorm(3, F(2, 4))
    assert PolyNorm(3, F(1)) != PolyNorm(4, F(1))
