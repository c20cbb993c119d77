"""Ternary algebras of imaginary elements: the imaginary tower.

Multiplying a division algebra by the next imaginary unit gives a set that is
closed under triple products but not under binary ones:

* imaginary complexes ``b i1``,
* half-quaternions ``c j + d k`` (embedded as ``(0, 0, c, d)``),
* half-octonions ``a e4 + b e5 + c e6 + d e7`` (embedded as ``(0,0,0,0,a,b,c,d)``).

The octonion triple product is made unambiguous by averaging both
association orders. Each product has an embedding path (ground truth) and a
component-formula path; ``*_printed`` variants reproduce the formulas as they
are typeset in the reference text, typos included, for comparison only.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction

from . import numeric
from .hypercomplex import CDElement


class ZeroElement(ArithmeticError):
    """The zero element has no querelement."""


class SpanEscape(ArithmeticError):
    """An embedded product left the imaginary subspace."""


@dataclass(frozen=True, eq=False)
class _Imag:
    LEVEL = 0
    OFFSET = 0
    KIND = ""

    @classmethod
    def of(cls, *coords, mode: str = numeric.RATIONAL):
        return cls(*(numeric.to_scalar(c, mode) for c in coords))

    @property
    def coords(self) -> tuple:
        return tuple(getattr(self, f.name) for f in fields(self))

    def embed(self) -> CDElement:
        z = numeric.zero(self.mode)
        c = [z] * 2**self.LEVEL
        c[self.OFFSET : self.OFFSET + len(self.coords)] = self.coords
        return CDElement(self.LEVEL, tuple(c))

    @classmethod
    def from_embedding(cls, x: CDElement, check: bool = True):
        if x.level != cls.LEVEL:
            raise ValueError(f"expected level {cls.LEVEL}, got {x.level}")
        k = len(fields(cls))
        if check:
            outside = x.coeffs[: cls.OFFSET] + x.coeffs[cls.OFFSET + k :]
            if not all(numeric.is_zero(v) for v in outside):
                raise SpanEscape(f"{x!r} is not in the span of {cls.__name__}")
        return cls(*x.coeffs[cls.OFFSET : cls.OFFSET + k])

    @property
    def mode(self) -> str:
        return numeric.FLOAT if isinstance(self.coords[0], numeric.FloatTol) else numeric.RATIONAL

    def scale(self, s):
        return type(self)(*(s * v for v in self.coords))

    def __add__(self, other):
        return type(self)(*(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return numeric.seq_close(self.coords, other.coords)

    __hash__ = None

    def is_zero(self) -> bool:
        return all(numeric.is_zero(v) for v in self.coords)

    def norm_sq(self):
        head = self.coords[0]
        return sum((v * v for v in self.coords[1:]), head * head)

    def to_json(self) -> dict:
        out = {"kind": self.KIND}
        for f in fields(self):
            out[f.name] = numeric.dump_scalar(getattr(self, f.name))
        return out

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(v) for v in self.coords)})"


@dataclass(frozen=True, eq=False, repr=False)
class ImaginaryComplex(_Imag):
    b: numeric.Scalar
    LEVEL = 1
    OFFSET = 1
    KIND = "imaginary_complex"


@dataclass(frozen=True, eq=False, repr=False)
class HalfQuaternion(_Imag):
    c: numeric.Scalar
    d: numeric.Scalar
    LEVEL = 2
    OFFSET = 2
    KIND = "half_quaternion"


@dataclass(frozen=True, eq=False, repr=False)
class HalfOctonion(_Imag):
    a: numeric.Scalar
    b: numeric.Scalar
    c: numeric.Scalar
    d: numeric.Scalar
    LEVEL = 3
    OFFSET = 4
    KIND = "half_octonion"


KINDS = {cls.KIND: cls for cls in (ImaginaryComplex, HalfQuaternion, HalfOctonion)}


def imaginary_from_json(obj, mode: str = numeric.RATIONAL) -> _Imag:
    if not isinstance(obj, dict) or obj.get("kind") not in KINDS:
        raise ValueError(f"expected an object with kind in {sorted(KINDS)}, got {obj!r}")
    cls = KINDS[obj["kind"]]
    try:
        vals = [numeric.load_scalar(obj[f.name], mode) for f in fields(cls)]
    except KeyError as exc:
        raise ValueError(f"{cls.KIND} is missing field {exc.args[0]!r}") from None
    return cls(*vals)


# -- imaginary complexes ------------------------------------------------------


def ternary_mul_c(x: ImaginaryComplex, y: ImaginaryComplex, z: ImaginaryComplex) -> ImaginaryComplex:
    return ImaginaryComplex(-(x.b * y.b * z.b))


def ternary_mul_c_embedded(x, y, z) -> ImaginaryComplex:
    return ImaginaryComplex.from_embedding(x.embed() * y.embed() * z.embed())


def quer_c(x: ImaginaryComplex) -> ImaginaryComplex:
    if x.is_zero():
        raise ZeroElement("zero imaginary complex has no querelement")
    return ImaginaryComplex(-numeric.scalar_inv(x.b))


def norm_sq_c(x: ImaginaryComplex):
    return x.b * x.b


# -- half-quaternions ---------------------------------------------------------


def ternary_mul_h(x: HalfQuaternion, y: HalfQuaternion, z: HalfQuaternion) -> HalfQuaternion:
    """Triple quaternion product of the embeddings (associative, so one order)."""
    return HalfQuaternion.from_embedding(x.embed() * y.embed() * z.embed())


def ternary_mul_h_components(x: HalfQuaternion, y: HalfQuaternion, z: HalfQuaternion) -> HalfQuaternion:
    c1, d1 = x.coords
    c2, d2 = y.coords
    c3, d3 = z.coords
    c = d1 * c2 * d3 - c1 * d2 * d3 - d1 * d2 * c3 - c1 * c2 * c3
    d = c1 * d2 * c3 - d1 * c2 * c3 - c1 * c2 * d3 - d1 * d2 * d3
    return HalfQuaternion(c, d)


def ternary_mul_h_printed(x: HalfQuaternion, y: HalfQuaternion, z: HalfQuaternion) -> HalfQuaternion:
    """As typeset: the last ``c`` term reads ``c' c' c'''``."""
    c1, d1 = x.coords
    c2, d2 = y.coords
    c3, d3 = z.coords
    c = d1 * c2 * d3 - c1 * d2 * d3 - d1 * d2 * c3 - c1 * c1 * c3
    d = c1 * d2 * c3 - d1 * c2 * c3 - c1 * c2 * d3 - d1 * d2 * d3
    return HalfQuaternion(c, d)


def quer_h(x: HalfQuaternion) -> HalfQuaternion:
    n = x.norm_sq()
    if numeric.is_zero(n):
        raise ZeroElement("zero half-quaternion has no querelement")
    return x.scale(-numeric.scalar_inv(n))


def norm_sq_h(x: HalfQuaternion):
    return x.norm_sq()


def two_squares_identity(x: HalfQuaternion, y: HalfQuaternion, z: HalfQuaternion, printed: bool = False):
    """``(lhs, rhs)``: sum of the two squared brackets vs the product of ``c^2 + d^2``."""
    c1, d1 = x.coords
    c2, d2 = y.coords
    c3, d3 = z.coords
    last = c1 * c1 * c3 if printed else c1 * c2 * c3
    first = d1 * c2 * d3 - c1 * d2 * d3 - last - d1 * d2 * c3
    second = c1 * d2 * c3 - d1 * c2 * c3 - c1 * c2 * d3 - d1 * d2 * d3
    lhs = first * first + second * second
    rhs = (c1 * c1 + d1 * d1) * (c2 * c2 + d2 * d2) * (c3 * c3 + d3 * d3)
    return lhs, rhs


# -- half-octonions -----------------------------------------------------------


def ternary_mul_o(x: HalfOctonion, y: HalfOctonion, z: HalfOctonion) -> HalfOctonion:
    """Mean of ``(x y) z`` and ``x (y z)`` in the octonions."""
    a, b, c = x.embed(), y.embed(), z.embed()
    total = (a * b) * c + a * (b * c)
    half = Fraction(1, 2) if x.mode == numeric.RATIONAL else numeric.FloatTol(0.5)
    return HalfOctonion.from_embedding(total.scale(half))


def _dot_without(u, v, k):
    return sum((u[i] * v[i] for i in range(4) if i != k), 0)


def ternary_mul_o_components(x: HalfOctonion, y: HalfOctonion, z: HalfOctonion) -> HalfOctonion:
    """Coordinate ``k``: ``y_k (x.z) - z_k (x.y) - x_k (y.z) - x_k y_k z_k``,
    the dot products running over the other three coordinates."""
    u, v, w = x.coords, y.coords, z.coords
    out = []
    for k in range(4):
        out.append(
            v[k] * _dot_without(u, w, k)
            - w[k] * _dot_without(u, v, k)
            - u[k] * _dot_without(v, w, k)
            - u[k] * v[k] * w[k]
        )
    return HalfOctonion(*out)


# sign pattern (y-term, z-term, x-term) of each printed row
_PRINTED_SIGNS = ((1, -1, 1), (1, 1, -1), (1, -1, -1), (1, -1, -1))


def ternary_mul_o_printed(x: HalfOctonion, y: HalfOctonion, z: HalfOctonion) -> HalfOctonion:
    """As typeset: the ``a'`` term of the first row and the ``b'''`` term of the
    second row carry a plus sign."""
    u, v, w = x.coords, y.coords, z.coords
    out = []
    for k, (sy, sz, sx) in enumerate(_PRINTED_SIGNS):
        out.append(
            sy * v[k] * _dot_without(u, w, k)
            + sz * w[k] * _dot_without(u, v, k)
            + sx * u[k] * _dot_without(v, w, k)
            - u[k] * v[k] * w[k]
        )
    return HalfOctonion(*out)


def quer_o(x: HalfOctonion) -> HalfOctonion:
    n = x.norm_sq()
    if numeric.is_zero(n):
        raise ZeroElement("zero half-octonion has no querelement")
    return x.scale(-numeric.scalar_inv(n))


def norm_sq_o(x: HalfOctonion):
    return x.norm_sq()


TERNARY_MUL = {ImaginaryComplex: ternary_mul_c, HalfQuaternion: ternary_mul_h, HalfOctonion: ternary_mul_o}
QUER = {ImaginaryComplex: quer_c, HalfQuaternion: quer_h, HalfOctonion: quer_o}


def ternary_mul(x, y, z):
    if not (type(x) is type(y) is type(z)):
        raise TypeError("all three factors must be the same kind")
    return TERNARY_MUL[type(x)](x, y, z)


def quer(x):
    return QUER[type(x)](x)


def binary_embedded(x: _Imag, y: _Imag) -> CDElement:
    """Plain binary product of two embeddings; generally outside the span."""
    return x.embed() * y.embed()
