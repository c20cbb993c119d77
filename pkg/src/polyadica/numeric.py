"""Scalar field used by every algebra in the package.

Two modes exist:

* ``rational`` -- :class:`fractions.Fraction`, exact. This is what the identity
  checks run on.
* ``float`` -- :class:`FloatTol`, an IEEE double whose ``==`` is a tolerance
  test ``|x - y| <= abs_tol + rel_tol * max(|x|, |y|)``.

Plain ``int`` values are mode-neutral and may be mixed with either mode.
Mixing a ``Fraction`` with a ``FloatTol`` raises :class:`ModeMismatch`.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Iterable, Sequence, Union

RATIONAL = "rational"
FLOAT = "float"
MODES = (RATIONAL, FLOAT)

REL_TOL = 1e-9
ABS_TOL = 1e-12


class ModeMismatch(TypeError):
    """Rational and float scalars were combined in one operation."""


class DivisionByZero(ZeroDivisionError):
    pass


def _raw(other):
    if isinstance(other, FloatTol):
        return other.value
    if isinstance(other, int) and not isinstance(other, bool):
        return float(other)
    if isinstance(other, Fraction):
        raise ModeMismatch("cannot combine rational and float scalars")
    return NotImplemented


class FloatTol:
    """Double-precision scalar with tolerance-based equality."""

    __slots__ = ("value",)

    def __init__(self, value):
        if isinstance(value, Fraction):
            raise ModeMismatch("use to_scalar() to convert a rational to float mode")
        self.value = float(value)

    def __repr__(self):
        return f"FloatTol({self.value!r})"

    def __float__(self):
        return self.value

    def __add__(self, other):
        o = _raw(other)
        return NotImplemented if o is NotImplemented else FloatTol(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = _raw(other)
        return NotImplemented if o is NotImplemented else FloatTol(self.value - o)

    def __rsub__(self, other):
        o = _raw(other)
        return NotImplemented if o is NotImplemented else FloatTol(o - self.value)

    def __mul__(self, other):
        o = _raw(other)
        return NotImplemented if o is NotImplemented else FloatTol(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _raw(other)
        if o is NotImplemented:
            return NotImplemented
        if o == 0.0:
            raise DivisionByZero("float division by zero")
        return FloatTol(self.value / o)

    def __rtruediv__(self, other):
        o = _raw(other)
        if o is NotImplemented:
            return NotImplemented
        if self.value == 0.0:
            raise DivisionByZero("float division by zero")
        return FloatTol(o / self.value)

    def __neg__(self):
        return FloatTol(-self.value)

    def __pos__(self):
        return self

    def __abs__(self):
        return FloatTol(abs(self.value))

    def __pow__(self, k: int):
        return FloatTol(self.value**k)

    def __eq__(self, other):
        o = _raw(other)
        if o is NotImplemented:
            return NotImplemented
        return floats_close(self.value, o)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    # tolerance equality is not transitive, so no hashing
    __hash__ = None

    def __lt__(self, other):
        return self.value < _raw(other)

    def __le__(self, other):
        return self.value <= _raw(other)

    def __gt__(self, other):
        return self.value > _raw(other)

    def __ge__(self, other):
        return self.value >= _raw(other)

    def __bool__(self):
        return self.value != 0.0


Scalar = Union[Fraction, FloatTol]


def floats_close(x: float, y: float, rel_tol: float = None, abs_tol: float = None) -> bool:
    rel_tol = REL_TOL if rel_tol is None else rel_tol
    abs_tol = ABS_TOL if abs_tol is None else abs_tol
    return abs(x - y) <= abs_tol + rel_tol * max(abs(x), abs(y))


def default_mode() -> str:
    mode = os.environ.get("POLYADICA_MODE", RATIONAL).strip().lower()
    if mode not in MODES:
        raise ValueError(f"POLYADICA_MODE must be one of {MODES}, got {mode!r}")
    return mode


def mode_of(x) -> str | None:
    """Mode of a scalar; ``None`` for mode-neutral ints."""
    if isinstance(x, FloatTol):
        return FLOAT
    if isinstance(x, Fraction):
        return RATIONAL
    if isinstance(x, int):
        return None
    raise TypeError(f"not a scalar: {x!r}")


def to_scalar(x, mode: str = RATIONAL) -> Scalar:
    """Coerce ints, strings ``"p/q"``, floats or scalars into ``mode``."""
    if mode == RATIONAL:
        if isinstance(x, FloatTol):
            raise ModeMismatch("float scalar given in rational mode")
        if isinstance(x, float):
            # shortest decimal repr, so 0.1 reads as 1/10
            return Fraction(repr(x))
        return Fraction(x)
    if mode == FLOAT:
        if isinstance(x, FloatTol):
            return x
        if isinstance(x, str):
            return FloatTol(float(Fraction(x)))
        return FloatTol(float(x))
    raise ValueError(f"unknown scalar mode {mode!r}")


def zero(mode: str = RATIONAL) -> Scalar:
    return to_scalar(0, mode)


def one(mode: str = RATIONAL) -> Scalar:
    return to_scalar(1, mode)


def _check_modes(a, b):
    ma, mb = mode_of(a), mode_of(b)
    if ma and mb and ma != mb:
        raise ModeMismatch(f"cannot combine {ma} and {mb} scalars")


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    _check_modes(a, b)
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    _check_modes(a, b)
    return a * b


def scalar_inv(a: Scalar) -> Scalar:
    if is_zero(a):
        raise DivisionByZero("inverse of zero")
    if isinstance(a, FloatTol):
        return FloatTol(1.0 / a.value)
    return 1 / Fraction(a)


def is_zero(a) -> bool:
    """Exact zero test (float mode: the stored double is exactly 0.0)."""
    if isinstance(a, FloatTol):
        return a.value == 0.0
    return a == 0


def sqrt(a: Scalar) -> FloatTol:
    if isinstance(a, Fraction):
        raise ModeMismatch("square roots are only taken in float mode")
    return FloatTol(math.sqrt(float(a)))


def seq_close(xs: Sequence, ys: Sequence) -> bool:
    """Equality of coordinate tuples.

    Rational coordinates compare exactly. Float coordinates compare with the
    scalar tolerance rule applied to the largest coordinate difference against
    the largest coordinate magnitude, so a cancelled near-zero component is
    judged on the scale of the whole element.
    """
    if len(xs) != len(ys):
        return False
    if not any(isinstance(v, FloatTol) for v in (*xs, *ys)):
        return tuple(xs) == tuple(ys)
    fx = [float(v) for v in xs]
    fy = [float(v) for v in ys]
    diff = max((abs(a - b) for a, b in zip(fx, fy)), default=0.0)
    scale = max((abs(v) for v in (*fx, *fy)), default=0.0)
    return diff <= ABS_TOL + REL_TOL * scale


def product(values: Iterable, start=1):
    out = start
    for v in values:
        out = out * v
    return out


def dump_scalar(x):
    """JSON encoding: rationals as ``"p/q"`` strings, floats as numbers."""
    if isinstance(x, FloatTol):
        return x.value
    if isinstance(x, (Fraction, int)):
        return str(Fraction(x))
    raise TypeError(f"not a scalar: {x!r}")


def load_scalar(obj, mode: str = RATIONAL) -> Scalar:
    if isinstance(obj, bool) or not isinstance(obj, (str, int, float)):
        raise ValueError(f"not a JSON scalar: {obj!r}")
    if isinstance(obj, str):
        try:
            Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational literal {obj!r}") from exc
    return to_scalar(obj, mode)
