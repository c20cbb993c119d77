"""Seeded property sweeps shared by the CLI and the test suite.

Each suite draws one case at a time from ``random.Random(f"{seed}/{i}")``, so
any single case can be replayed from its index. A suite case returns either
``None`` (property held) or a JSON-ready dict describing the failing input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import numeric
from .hypercomplex import CDElement, get_algebra
from .imaginary import (
    HalfOctonion,
    HalfQuaternion,
    ImaginaryComplex,
    norm_sq_c,
    norm_sq_h,
    norm_sq_o,
    quer_c,
    quer_h,
    quer_o,
    ternary_mul_c,
    ternary_mul_h,
    ternary_mul_h_components,
    ternary_mul_o,
    ternary_mul_o_components,
    two_squares_identity,
)
from .norms import polyadic_norm, quer_norm, quer_norm_direct, scaled_norm_sq, triangle_holds
from .polyadization import (
    ZMatrix,
    dense_chain,
    from_dense,
    nary_mul,
    polyadic_identity,
    querelement,
    to_dense,
    zmatrix_to_json,
)
from .vectoralg import PolyVector, poly_product, product_via_matrices, quervector

RANGE = 10


def scalar(rng: random.Random, mode: str, nonzero: bool = False):
    """Rational: ``p/q`` with ``|p| <= 10``, ``q <= 4``. Float: uniform on [-10, 10]."""
    while True:
        if mode == numeric.FLOAT:
            x = numeric.FloatTol(rng.uniform(-RANGE, RANGE))
        else:
            x = Fraction(rng.randint(-RANGE, RANGE), rng.randint(1, 4))
        if not (nonzero and numeric.is_zero(x)):
            return x


def element(rng, tag: str, mode: str, nonzero: bool = False):
    alg = get_algebra(tag)
    while True:
        x = alg.from_coords([scalar(rng, mode) for _ in range(alg.dim)], mode)
        if not nonzero or x.is_invertible():
            return x


def zmatrix(rng, n: int, tag: str, mode: str, invertible: bool = False) -> ZMatrix:
    return ZMatrix(n, tuple(element(rng, tag, mode, invertible) for _ in range(n - 1)), tag)


def vector(rng, m: int, mode: str, nonzero: bool = False) -> PolyVector:
    return PolyVector(tuple(scalar(rng, mode, nonzero) for _ in range(m)))


def half_q(rng, mode, nonzero=False) -> HalfQuaternion:
    while True:
        x = HalfQuaternion(scalar(rng, mode), scalar(rng, mode))
        if not (nonzero and x.is_zero()):
            return x


def half_o(rng, mode, nonzero=False) -> HalfOctonion:
    while True:
        x = HalfOctonion(*(scalar(rng, mode) for _ in range(4)))
        if not (nonzero and x.is_zero()):
            return x


def placements(mul, n: int, items: list) -> list:
    """All ``n`` ways of nesting one ``n``-ary product inside another over ``2n-1`` items."""
    out = []
    for p in range(n):
        inner = mul(items[p : p + n])
        out.append(mul(items[:p] + [inner] + items[p + n :]))
    return out


def all_equal(values) -> bool:
    return all(v == values[0] for v in values[1:])


def _zm(z):
    return zmatrix_to_json(z)


def _js(x):
    return x.to_json()


# -- suites -------------------------------------------------------------------


def nary_dense_oracle(rng, mode):
    n = rng.choice((3, 4, 5))
    tag = rng.choice(("R", "C", "H", "dual"))
    zs = [zmatrix(rng, n, tag, mode) for _ in range(n)]
    if nary_mul(zs) == from_dense(dense_chain([to_dense(z) for z in zs]), tag):
        return None
    return {"factors": [_zm(z) for z in zs]}


def vector_oracle(rng, mode):
    m = rng.randint(2, 5)
    vs = [vector(rng, m, mode) for _ in range(m + 1)]
    if poly_product(vs) == product_via_matrices(vs):
        return None
    return {"factors": [_js(v) for v in vs]}


def half_octonion_components(rng, mode):
    x, y, z = (half_o(rng, mode) for _ in range(3))
    if ternary_mul_o(x, y, z) == ternary_mul_o_components(x, y, z):
        return None
    return {"factors": [_js(x), _js(y), _js(z)]}


def half_quaternion_components(rng, mode):
    x, y, z = (half_q(rng, mode) for _ in range(3))
    if ternary_mul_h(x, y, z) == ternary_mul_h_components(x, y, z):
        return None
    return {"factors": [_js(x), _js(y), _js(z)]}


def _quer_all_places(mul, n, x, q) -> bool:
    return all(mul([x] * p + [q] + [x] * (n - 1 - p)) == x for p in range(n))


def zmatrix_querelement(rng, mode):
    n = rng.choice((3, 4, 5))
    tag = rng.choice(("R", "C", "H", "dual"))
    z = zmatrix(rng, n, tag, mode, invertible=True)
    if _quer_all_places(nary_mul, n, z, querelement(z)):
        return None
    return {"z": _zm(z)}


def quervector_placements(rng, mode):
    m = rng.randint(2, 5)
    v = vector(rng, m, mode, nonzero=True)
    if _quer_all_places(poly_product, m + 1, v, quervector(v)):
        return None
    return {"v": _js(v)}


def imaginary_querelement(rng, mode):
    mul3 = lambda f: lambda xs: f(*xs)  # noqa: E731
    x = ImaginaryComplex(scalar(rng, mode, nonzero=True))
    h = half_q(rng, mode, nonzero=True)
    o = half_o(rng, mode, nonzero=True)
    ok = (
        _quer_all_places(mul3(ternary_mul_c), 3, x, quer_c(x))
        and _quer_all_places(mul3(ternary_mul_h), 3, h, quer_h(h))
        and _quer_all_places(mul3(ternary_mul_o), 3, o, quer_o(o))
    )
    return None if ok else {"elements": [_js(x), _js(h), _js(o)]}


def _unit_slots(rng, mode, slots):
    n = rng.choice((3, 4, 5))
    tag = rng.choice(("R", "C", "H", "dual"))
    z = zmatrix(rng, n, tag, mode)
    e = polyadic_identity(n, tag, mode)
    lone = all(nary_mul([e] * p + [z] + [e] * (n - 1 - p)) == z for p in slots(n))
    if lone and nary_mul([e] * n) == e:
        return None
    return {"z": _zm(z)}


def polyadic_unit_placement(rng, mode):
    """``Z`` in every slot, ``E`` elsewhere. Middle slots conjugate by the shift."""
    return _unit_slots(rng, mode, lambda n: range(n))


def polyadic_unit_ends(rng, mode):
    """``Z`` in the first or last slot only."""
    return _unit_slots(rng, mode, lambda n: (0, n - 1))


def rotate_weights(z: ZMatrix, p: int) -> ZMatrix:
    """Weights shifted so that entry ``i`` becomes ``z_{i+p}`` (cyclically)."""
    m = z.size
    return ZMatrix(z.arity, tuple(z.entries[(i + p) % m] for i in range(m)), z.algebra)


def polyadic_unit_rotation(rng, mode):
    """With ``Z`` in slot ``p`` and ``E`` elsewhere the product rotates the weights by ``p``."""
    n = rng.choice((3, 4, 5))
    tag = rng.choice(("R", "C", "H", "dual"))
    z = zmatrix(rng, n, tag, mode)
    e = polyadic_identity(n, tag, mode)
    ok = all(nary_mul([e] * p + [z] + [e] * (n - 1 - p)) == rotate_weights(z, p) for p in range(n))
    return None if ok else {"z": _zm(z)}


def norm_multiplicativity(rng, mode):
    n = rng.choice((3, 4, 5))
    tag = rng.choice(("R", "C", "H"))
    zs = [zmatrix(rng, n, tag, mode) for _ in range(n)]
    lhs = polyadic_norm(nary_mul(zs)).value_sq
    rhs = numeric.product(polyadic_norm(z).value_sq for z in zs)
    return None if lhs == rhs else {"factors": [_zm(z) for z in zs]}


def norm_scaling(rng, mode):
    n = rng.choice((3, 4, 5))
    tag = rng.choice(("R", "C", "H"))
    z = zmatrix(rng, n, tag, mode)
    lam = scalar(rng, mode)
    if polyadic_norm(z.scale(lam)).value_sq == scaled_norm_sq(z, lam):
        return None
    return {"z": _zm(z), "lambda": numeric.dump_scalar(lam)}


def quer_norm_law(rng, mode):
    n = rng.choice((3, 4, 5))
    tag = rng.choice(("R", "C", "H"))
    z = zmatrix(rng, n, tag, mode, invertible=True)
    return None if quer_norm(z) == quer_norm_direct(z) else {"z": _zm(z)}


def two_squares(rng, mode):
    x, y, z = (half_q(rng, mode) for _ in range(3))
    lhs, rhs = two_squares_identity(x, y, z)
    return None if lhs == rhs else {"factors": [_js(x), _js(y), _js(z)]}


def zmatrix_associativity(rng, mode):
    n = rng.choice((3, 4))
    tag = rng.choice(("R", "C", "H", "dual"))
    zs = [zmatrix(rng, n, tag, mode) for _ in range(2 * n - 1)]
    return None if all_equal(placements(nary_mul, n, zs)) else {"factors": [_zm(z) for z in zs]}


def vector_associativity(rng, mode):
    vs = [vector(rng, 3, mode) for _ in range(7)]
    return None if all_equal(placements(poly_product, 4, vs)) else {"factors": [_js(v) for v in vs]}


def half_quaternion_associativity(rng, mode):
    xs = [half_q(rng, mode) for _ in range(5)]
    ok = all_equal(placements(lambda t: ternary_mul_h(*t), 3, xs))
    return None if ok else {"factors": [_js(x) for x in xs]}


def half_octonion_associativity(rng, mode):
    xs = [half_o(rng, mode) for _ in range(5)]
    ok = all_equal(placements(lambda t: ternary_mul_o(*t), 3, xs))
    return None if ok else {"factors": [_js(x) for x in xs]}


def imaginary_norm_multiplicativity(rng, mode):
    cs = [ImaginaryComplex(scalar(rng, mode)) for _ in range(3)]
    hs = [half_q(rng, mode) for _ in range(3)]
    ok = norm_sq_c(ternary_mul_c(*cs)) == numeric.product(norm_sq_c(c) for c in cs) and norm_sq_h(
        ternary_mul_h(*hs)
    ) == numeric.product(norm_sq_h(h) for h in hs)
    return None if ok else {"complex": [_js(c) for c in cs], "half_quaternion": [_js(h) for h in hs]}


def half_octonion_norm_multiplicativity(rng, mode):
    xs = [half_o(rng, mode) for _ in range(3)]
    ok = norm_sq_o(ternary_mul_o(*xs)) == numeric.product(norm_sq_o(x) for x in xs)
    return None if ok else {"factors": [_js(x) for x in xs]}


def hurwitz(rng, mode):
    level = rng.randint(0, 3)
    x = CDElement(level, tuple(scalar(rng, mode) for _ in range(2**level)))
    y = CDElement(level, tuple(scalar(rng, mode) for _ in range(2**level)))
    if (x * y).norm_sq() == x.norm_sq() * y.norm_sq():
        return None
    return {"level": level, "x": [numeric.dump_scalar(c) for c in x.coeffs], "y": [numeric.dump_scalar(c) for c in y.coeffs]}


def vector_multilinearity(rng, mode):
    m = rng.randint(2, 5)
    vs = [vector(rng, m, mode) for _ in range(m + 1)]
    slot = rng.randrange(m + 1)
    extra = vector(rng, m, mode)
    lams = [scalar(rng, mode) for _ in range(m + 1)]
    summed = vs[:slot] + [vs[slot] + extra] + vs[slot + 1 :]
    swapped = vs[:slot] + [extra] + vs[slot + 1 :]
    additive = poly_product(summed) == poly_product(vs) + poly_product(swapped)
    scaled = poly_product([v.scale(l) for v, l in zip(vs, lams)]) == poly_product(vs).scale(numeric.product(lams))
    return None if additive and scaled else {"factors": [_js(v) for v in vs], "slot": slot}


def triangle_inequality(rng, mode):
    """Always run in float mode: the norm itself is a square root."""
    n = rng.choice((3, 4, 5))
    tag = rng.choice(("R", "C", "H"))
    a = zmatrix(rng, n, tag, numeric.FLOAT)
    b = zmatrix(rng, n, tag, numeric.FLOAT)
    return None if triangle_holds(a, b) else {"a": _zm(a), "b": _zm(b)}


@dataclass(frozen=True)
class Suite:
    name: str
    check: Callable
    expected_to_hold: bool = True
    about: str = ""


SUITES = {
    s.name: s
    for s in (
        Suite("nary-dense-oracle", nary_dense_oracle, about="n-ary product vs dense matrix chain"),
        Suite("vector-oracle", vector_oracle, about="vector product vs shift-matrix chain"),
        Suite("half-octonion-components", half_octonion_components, about="component formula vs averaged embedding"),
        Suite("half-quaternion-components", half_quaternion_components, about="component formula vs embedding"),
        Suite("zmatrix-querelement", zmatrix_querelement, about="querelement on every placement"),
        Suite("quervector-placements", quervector_placements, about="quervector on every placement"),
        Suite("imaginary-querelement", imaginary_querelement, about="imaginary querelements on every placement"),
        Suite("polyadic-unit", polyadic_unit_placement, expected_to_hold=False,
              about="polyadic unit with Z on every placement; fails in the middle slots"),
        Suite("polyadic-unit-ends", polyadic_unit_ends, about="polyadic unit with Z first or last"),
        Suite("polyadic-unit-rotation", polyadic_unit_rotation, about="middle slots rotate the weights"),
        Suite("norm-multiplicativity", norm_multiplicativity, about="squared polyadic norm is n-ary multiplicative"),
        Suite("norm-scaling", norm_scaling, about="|lam Z|^2 = lam^(2(n-1)) |Z|^2"),
        Suite("quer-norm", quer_norm_law, about="|Z~|^2 = 1/(|Z|^2)^(n-2)"),
        Suite("two-squares", two_squares, about="ternary two-squares identity"),
        Suite("zmatrix-associativity", zmatrix_associativity, about="total associativity, n = 3, 4"),
        Suite("vector-associativity", vector_associativity, about="total associativity of the 4-ary vector product"),
        Suite("half-quaternion-associativity", half_quaternion_associativity),
        Suite("half-octonion-associativity", half_octonion_associativity, expected_to_hold=False,
              about="averaged product is not totally associative"),
        Suite("imaginary-norm-multiplicativity", imaginary_norm_multiplicativity),
        Suite("half-octonion-norm-multiplicativity", half_octonion_norm_multiplicativity, expected_to_hold=False,
              about="measurement only"),
        Suite("hurwitz", hurwitz, about="norm multiplicativity at Cayley-Dickson levels 0-3"),
        Suite("vector-multilinearity", vector_multilinearity),
        Suite("triangle-inequality", triangle_inequality, expected_to_hold=False,
              about="product norm is not subadditive"),
    )
}


class UnknownSuite(KeyError):
    pass


def run_suite(name: str, cases: int = 100, seed: int = 0, mode: str = numeric.RATIONAL, max_failures: int = 10) -> dict:
    """Report ``{suite, mode, seed, cases, failed, failures}``; at most
    ``max_failures`` counterexamples are kept, in case order."""
    if name not in SUITES:
        raise UnknownSuite(name)
    check = SUITES[name].check
    failures = []
    failed = 0
    for i in range(cases):
        bad = check(random.Random(f"{seed}/{i}"), mode)
        if bad is not None:
            failed += 1
            if len(failures) < max_failures:
                failures.append({"case": i, "input": bad})
    return {"suite": name, "mode": mode, "seed": seed, "cases": cases, "failed": failed, "failures": failures}
