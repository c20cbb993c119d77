from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyadica.polyadization import PatternViolation, DenseMatrix, dense_chain
from polyadica.props import placements
from polyadica.vectoralg import (
    DimensionMismatch,
    PolyVector,
    ZeroCoordinate,
    basis_vector,
    poly_product,
    product_via_matrices,
    quervector,
    reduced_vectorization,
    shift_matrix,
    structure_constants,
    vector_from_json,
)

from conftest import load_fixture, rationals, vectors


def V(*c):
    return PolyVector.of(*c)


def reference_vectors():
    fx = load_fixture("reference_vectors.json")
    return fx, [vector_from_json(f) for f in fx["factors"]]


def test_reference_example_computed_value():
    fx, vs = reference_vectors()
    out = poly_product(vs)
    assert out == V(*(F(c) for c in fx["computed_product"]))
    # third coordinate by hand: x'_3 x''_1 x'''_2 x''''_3 = 4 * 3 * 3 * 2
    assert out.coords[2] == 4 * 3 * 3 * 2
    assert product_via_matrices(vs) == out


def test_reference_quervectors():
    fx, vs = reference_vectors()
    for v, expected in zip(vs, fx["quervectors"]):
        assert quervector(v) == V(*(F(c) for c in expected))


def test_unit():
    ones = V(1, 1, 1)
    assert poly_product([ones] * 4) == ones
    assert quervector(ones) == ones


def test_structure_constants():
    sc = structure_constants(3)
    assert [(i, j) for i, j, _ in sc.nonzero] == [((1, 2, 3, 1), 1), ((2, 3, 1, 2), 2), ((3, 1, 2, 3), 3)]
    assert structure_constants(2).nonzero == (((1, 2, 1), 1, 1), ((2, 1, 2), 2, 1))
    assert sc.value((1, 1, 1, 1), 1) == 0
    with pytest.raises(ValueError):
        structure_constants(1)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_structure_constants_match_basis_products(m):
    import itertools

    sc = structure_constants(m)
    for idx in itertools.product(range(1, m + 1), repeat=m + 1):
        out = poly_product([basis_vector(m, i) for i in idx])
        for j in range(1, m + 1):
            assert out.coords[j - 1] == sc.value(idx, j)


def test_shift_matrix_layout():
    d = shift_matrix(V(7, 8, 9))
    assert (d[0, 1], d[1, 2], d[2, 0]) == (7, 8, 9)
    assert d.nonzero_positions() == {(0, 1), (1, 2), (2, 0)}


def test_reduced_vectorization_rejects_off_pattern():
    with pytest.raises(PatternViolation):
        reduced_vectorization(DenseMatrix(2, [[F(1), F(1)], [F(1), F(0)]]))


def test_errors():
    with pytest.raises(ZeroCoordinate) as info:
        quervector(V(1, 0, 2))
    assert info.value.index == 2
    with pytest.raises(DimensionMismatch):
        poly_product([V(1, 2), V(1, 2, 3), V(1, 2)])
    with pytest.raises(ValueError):
        poly_product([V(1, 2)] * 4)
    with pytest.raises(DimensionMismatch):
        vector_from_json({"dim": 2, "coords": [1, 2, 3]})


def test_zero_coordinate_gives_zero_divisor():
    v = V(2, 0, 3)
    assert poly_product([v] * 4) == V(0, 0, 0)


dims = st.integers(2, 5)


@given(dims.flatmap(lambda m: st.lists(vectors(m), min_size=m + 1, max_size=m + 1)))
def test_homomorphism(vs):
    assert poly_product(vs) == product_via_matrices(vs)
    assert reduced_vectorization(dense_chain([shift_matrix(v) for v in vs])) == poly_product(vs)


@given(dims.flatmap(vectors))
def test_round_trip(v):
    assert reduced_vectorization(shift_matrix(v)) == v


@given(dims.flatmap(lambda m: st.tuples(
    st.lists(vectors(m), min_size=m + 1, max_size=m + 1), vectors(m),
    st.integers(0, m), st.lists(rationals, min_size=m + 1, max_size=m + 1))))
def test_multilinear(args):
    vs, extra, slot, lams = args
    summed = vs[:slot] + [vs[slot] + extra] + vs[slot + 1:]
    other = vs[:slot] + [extra] + vs[slot + 1:]
    assert poly_product(summed) == poly_product(vs) + poly_product(other)
    prod_lam = 1
    for lam in lams:
        prod_lam *= lam
    assert poly_product([v.scale(l) for v, l in zip(vs, lams)]) == poly_product(vs).scale(prod_lam)


@given(st.lists(vectors(3), min_size=7, max_size=7))
def test_total_associativity(vs):
    vals = placements(poly_product, 4, vs)
    assert all(v == vals[0] for v in vals)


@given(dims.flatmap(lambda m: vectors(m, nonzero=True)))
def test_quervector_every_place(v):
    q = quervector(v)
    m = v.dim
    for p in range(m + 1):
        assert poly_product([v] * p + [q] + [v] * (m - p)) == v
