"""Binary hypercomplex algebras: the Cayley-Dickson chain and dual numbers.

Coordinates of a level-``l`` element follow the recursive doubling, so the
level-2 basis is ``(1, i1, i2, i1 i2)`` and level 3 appends the
``i3``-multiplied copy. In octonion notation ``e4 = i3, e5 = i1 i3,
e6 = i2 i3, e7 = i1 i2 i3``.

Doubling convention for ``(a', b') * (a'', b'')``::

    (a' a'' - conj(b'') b',  b'' a' + b' conj(a''))
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import numeric
from .numeric import DivisionByZero, Scalar, seq_close

MAX_DIVISION_LEVEL = 3


class LevelMismatch(ValueError):
    pass


class UnnormedAlgebra(TypeError):
    """The coefficient algebra carries no norm (dual numbers)."""


def _conj(x: tuple) -> tuple:
    if len(x) == 1:
        return x
    h = len(x) // 2
    return _conj(x[:h]) + tuple(-v for v in x[h:])


def _add(x: tuple, y: tuple) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def _sub(x: tuple, y: tuple) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def _mul(x: tuple, y: tuple) -> tuple:
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a1, b1, a2, b2 = x[:h], x[h:], y[:h], y[h:]
    first = _sub(_mul(a1, a2), _mul(_conj(b2), b1))
    second = _add(_mul(b2, a1), _mul(b1, _conj(a2)))
    return first + second


@dataclass(frozen=True, eq=False)
class CDElement:
    """Element of the level-``level`` Cayley-Dickson algebra (R, C, H, O, S, ...)."""

    level: int
    coeffs: tuple

    def __post_init__(self):
        if self.level < 0:
            raise ValueError("level must be >= 0")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != 2**self.level:
            raise ValueError(
                f"level {self.level} needs {2 ** self.level} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def of(cls, *coeffs, mode: str = numeric.RATIONAL) -> "CDElement":
        """Build from plain numbers; the level is inferred from the count."""
        n = len(coeffs)
        level = n.bit_length() - 1
        if n == 0 or 2**level != n:
            raise ValueError(f"coefficient count {n} is not a power of two")
        return cls(level, tuple(numeric.to_scalar(c, mode) for c in coeffs))

    @classmethod
    def unit(cls, level: int, mode: str = numeric.RATIONAL) -> "CDElement":
        return cls.basis(level, 0, mode)

    @classmethod
    def zero(cls, level: int, mode: str = numeric.RATIONAL) -> "CDElement":
        return cls(level, (numeric.zero(mode),) * 2**level)

    @classmethod
    def basis(cls, level: int, index: int, mode: str = numeric.RATIONAL) -> "CDElement":
        c = [numeric.zero(mode)] * 2**level
        c[index] = numeric.one(mode)
        return cls(level, tuple(c))

    @property
    def mode(self) -> str:
        return numeric.FLOAT if isinstance(self.coeffs[0], numeric.FloatTol) else numeric.RATIONAL

    def _same_level(self, other: "CDElement"):
        if not isinstance(other, CDElement):
            raise TypeError(f"expected CDElement, got {type(other).__name__}")
        if other.level != self.level:
            raise LevelMismatch(f"level {self.level} vs level {other.level}")

    def __add__(self, other):
        self._same_level(other)
        return CDElement(self.level, _add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._same_level(other)
        return CDElement(self.level, _sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return CDElement(self.level, tuple(-v for v in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, CDElement):
            return cd_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s: Scalar) -> "CDElement":
        return CDElement(self.level, tuple(s * v for v in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, CDElement) or other.level != self.level:
            return NotImplemented
        return seq_close(self.coeffs, other.coeffs)

    __hash__ = None

    def __repr__(self):
        return f"CDElement({self.level}, ({', '.join(str(c) for c in self.coeffs)}))"

    def conj(self) -> "CDElement":
        return cd_conj(self)

    def norm_sq(self) -> Scalar:
        return cd_norm_sq(self)

    def inverse(self) -> "CDElement":
        return cd_inverse(self)

    def is_zero(self) -> bool:
        return all(numeric.is_zero(v) for v in self.coeffs)

    def is_invertible(self) -> bool:
        return self.level <= MAX_DIVISION_LEVEL and not self.is_zero()

    def real(self) -> Scalar:
        return self.coeffs[0]


def cd_mul(x: CDElement, y: CDElement) -> CDElement:
    x._same_level(y)
    return CDElement(x.level, _mul(x.coeffs, y.coeffs))


def cd_conj(x: CDElement) -> CDElement:
    return CDElement(x.level, _conj(x.coeffs))


def cd_norm_sq(x: CDElement) -> Scalar:
    """``conj(x) x``, i.e. the sum of squared coordinates."""
    head = x.coeffs[0]
    return sum((v * v for v in x.coeffs[1:]), head * head)


def cd_inverse(x: CDElement) -> CDElement:
    """``conj(x) / |x|^2``; only defined up to the octonions."""
    if x.level > MAX_DIVISION_LEVEL:
        raise ValueError(
            f"level {x.level} algebra is not a division algebra; inverse refused"
        )
    n = cd_norm_sq(x)
    if numeric.is_zero(n):
        raise DivisionByZero("inverse of zero hypercomplex element")
    return cd_conj(x).scale(numeric.scalar_inv(n))


@dataclass(frozen=True, eq=False)
class DualNumber:
    """``a + b eps`` with ``eps**2 == 0``."""

    a: Scalar
    b: Scalar

    @classmethod
    def of(cls, a, b, mode: str = numeric.RATIONAL) -> "DualNumber":
        return cls(numeric.to_scalar(a, mode), numeric.to_scalar(b, mode))

    @property
    def coeffs(self) -> tuple:
        return (self.a, self.b)

    @property
    def mode(self) -> str:
        return numeric.FLOAT if isinstance(self.a, numeric.FloatTol) else numeric.RATIONAL

    def __add__(self, other):
        return DualNumber(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return DualNumber(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return DualNumber(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, DualNumber):
            return dual_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s: Scalar) -> "DualNumber":
        return DualNumber(s * self.a, s * self.b)

    def __eq__(self, other):
        if not isinstance(other, DualNumber):
            return NotImplemented
        return seq_close(self.coeffs, other.coeffs)

    __hash__ = None

    def __repr__(self):
        return f"DualNumber({self.a}, {self.b})"

    def is_zero(self) -> bool:
        return numeric.is_zero(self.a) and numeric.is_zero(self.b)

    def is_invertible(self) -> bool:
        return not numeric.is_zero(self.a)

    def inverse(self) -> "DualNumber":
        if not self.is_invertible():
            raise DivisionByZero("dual number with zero real part has no inverse")
        ia = numeric.scalar_inv(self.a)
        return DualNumber(ia, -self.b * ia * ia)

    def conj(self) -> "DualNumber":
        return DualNumber(self.a, -self.b)

    def norm_sq(self):
        raise UnnormedAlgebra("dual numbers carry no norm")


def dual_mul(x: DualNumber, y: DualNumber) -> DualNumber:
    return DualNumber(x.a * y.a, x.a * y.b + x.b * y.a)


@dataclass(frozen=True)
class Algebra:
    """Coefficient algebra descriptor used by the matrix constructions."""

    tag: str
    dim: int
    associative: bool
    normed: bool
    level: int | None = None  # Cayley-Dickson level, None for dual numbers

    def from_coords(self, coords: Sequence, mode: str = numeric.RATIONAL):
        if len(coords) != self.dim:
            raise ValueError(f"algebra {self.tag} needs {self.dim} coordinates, got {len(coords)}")
        vals = tuple(numeric.to_scalar(c, mode) for c in coords)
        if self.level is None:
            return DualNumber(*vals)
        return CDElement(self.level, vals)

    def one(self, mode: str = numeric.RATIONAL):
        return self.from_coords([1] + [0] * (self.dim - 1), mode)

    def zero(self, mode: str = numeric.RATIONAL):
        return self.from_coords([0] * self.dim, mode)

    def owns(self, element) -> bool:
        if self.level is None:
            return isinstance(element, DualNumber)
        return isinstance(element, CDElement) and element.level == self.level


ALGEBRAS = {
    "R": Algebra("R", 1, True, True, 0),
    "C": Algebra("C", 2, True, True, 1),
    "H": Algebra("H", 4, True, True, 2),
    "O": Algebra("O", 8, False, True, 3),
    "dual": Algebra("dual", 2, True, False, None),
}


def algebra_of(element) -> Algebra:
    if isinstance(element, DualNumber):
        return ALGEBRAS["dual"]
    if isinstance(element, CDElement):
        for alg in ALGEBRAS.values():
            if alg.level == element.level:
                return alg
        raise ValueError(f"no algebra tag for Cayley-Dickson level {element.level}")
    raise TypeError(f"not a hypercomplex element: {element!r}")


def get_algebra(tag: str) -> Algebra:
    try:
        return ALGEBRAS[tag]
    except KeyError:
        raise ValueError(f"unknown algebra {tag!r}; expected one of {sorted(ALGEBRAS)}") from None


def element_to_json(x) -> dict:
    if isinstance(x, DualNumber):
        return {"a": numeric.dump_scalar(x.a), "b": numeric.dump_scalar(x.b)}
    return {"level": x.level, "coeffs": [numeric.dump_scalar(c) for c in x.coeffs]}


def element_from_json(obj, mode: str = numeric.RATIONAL):
    if not isinstance(obj, dict):
        raise ValueError(f"element must be an object, got {obj!r}")
    if "level" in obj:
        return CDElement(int(obj["level"]), tuple(numeric.load_scalar(c, mode) for c in obj["coeffs"]))
    if "a" in obj and "b" in obj:
        return DualNumber(numeric.load_scalar(obj["a"], mode), numeric.load_scalar(obj["b"], mode))
    raise ValueError(f"unrecognised element {obj!r}")
