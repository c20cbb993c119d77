"""Polyadic norm of cyclic shift weighted matrices.

The norm of ``Z`` is the product of the component norms, so in squared form
``|Z|^2 = prod |z_i|^2``. Rational mode keeps only the square; float mode also
exposes the root. This norm has degree ``n - 1``: scaling every weight by
``lam`` multiplies it by ``|lam|^(n-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import numeric
from .hypercomplex import UnnormedAlgebra
from .polyadization import ZMatrix, first_noninvertible, NonInvertibleEntry, querelement


@dataclass(frozen=True, eq=False)
class PolyNorm:
    arity: int
    value_sq: numeric.Scalar

    @property
    def mode(self) -> str:
        return numeric.FLOAT if isinstance(self.value_sq, numeric.FloatTol) else numeric.RATIONAL

    @property
    def value(self) -> numeric.FloatTol:
        """The norm itself; float mode only, since roots of rationals are irrational."""
        return numeric.sqrt(self.value_sq)

    def is_zero(self) -> bool:
        return numeric.is_zero(self.value_sq)

    def __eq__(self, other):
        if not isinstance(other, PolyNorm):
            return NotImplemented
        return self.arity == other.arity and self.value_sq == other.value_sq

    __hash__ = None

    def to_json(self) -> dict:
        if self.mode == numeric.FLOAT:
            return {"norm": self.value.value, "norm_sq": self.value_sq.value}
        return {"norm_sq": numeric.dump_scalar(self.value_sq)}


def _require_normed(z: ZMatrix):
    if not z.alg.normed:
        raise UnnormedAlgebra(f"no polyadic norm is defined over {z.algebra} entries")


def polyadic_norm(z: ZMatrix) -> PolyNorm:
    _require_normed(z)
    return PolyNorm(z.arity, numeric.product(e.norm_sq() for e in z.entries))


def quer_norm(z: ZMatrix) -> PolyNorm:
    """Closed form ``1 / |Z|^(n-2)``, in squared form."""
    _require_normed(z)
    bad = first_noninvertible(z)
    if bad is not None:
        raise NonInvertibleEntry(bad)
    sq = polyadic_norm(z).value_sq
    return PolyNorm(z.arity, numeric.scalar_inv(sq ** (z.arity - 2)))


def quer_norm_direct(z: ZMatrix) -> PolyNorm:
    return polyadic_norm(querelement(z))


def scaled_norm_sq(z: ZMatrix, lam) -> numeric.Scalar:
    """Right-hand side of the scaling law: ``lam^(2(n-1)) |Z|^2``."""
    return (lam * lam) ** (z.arity - 1) * polyadic_norm(z).value_sq


def triangle_holds(a: ZMatrix, b: ZMatrix) -> bool:
    """``|A + B| <= |A| + |B|`` with a small float slack; float-mode inputs only."""
    lhs = polyadic_norm(a + b).value.value
    rhs = polyadic_norm(a).value.value + polyadic_norm(b).value.value
    return lhs <= rhs + numeric.ABS_TOL + numeric.REL_TOL * rhs
