"""Cyclic shift weighted matrices and their nonderived n-ary product.

A ``ZMatrix`` of arity ``n`` is the ``(n-1) x (n-1)`` matrix carrying
``z_1 .. z_{n-1}`` on the cyclic superdiagonal (``z_i`` at row ``i``, column
``i+1``; ``z_{n-1}`` at row ``n-1``, column 1). Only the weights are stored.
Products of exactly ``n`` such matrices have the same shape again, and the
weights of the product are cyclic braided words in the factors' weights.

Entry indices are 1-based in messages and 0-based in storage.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from . import numeric
from .hypercomplex import ALGEBRAS, Algebra, CDElement, algebra_of, element_from_json, element_to_json, get_algebra


class ArityMismatch(ValueError):
    pass


class FactorCountError(ValueError):
    pass


class NonAssociativeAlgebra(TypeError):
    """Octonion (or higher) entries: the cyclic product form needs associativity."""


class NonInvertibleEntry(ArithmeticError):
    def __init__(self, index: int, detail: str = ""):
        self.index = index  # 1-based
        msg = f"entry z_{index} is not invertible"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class PatternViolation(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


def _lift(e):
    if isinstance(e, (Fraction, numeric.FloatTol)) or (isinstance(e, int) and not isinstance(e, bool)):
        return CDElement(0, (e if not isinstance(e, int) else Fraction(e),))
    return e


def _is_zero(x) -> bool:
    if hasattr(x, "is_zero"):
        return x.is_zero()
    return numeric.is_zero(x)


@dataclass(frozen=True, eq=False)
class ZMatrix:
    arity: int
    entries: tuple
    algebra: str = ""

    def __post_init__(self):
        # bare scalars are read as real (level 0) entries
        object.__setattr__(self, "entries", tuple(_lift(e) for e in self.entries))
        if self.arity < 3:
            raise ValueError(f"arity must be >= 3, got {self.arity}")
        if len(self.entries) != self.arity - 1:
            raise ValueError(
                f"arity {self.arity} needs {self.arity - 1} entries, got {len(self.entries)}"
            )
        alg = get_algebra(self.algebra) if self.algebra else algebra_of(self.entries[0])
        object.__setattr__(self, "algebra", alg.tag)
        for i, z in enumerate(self.entries, 1):
            if not alg.owns(z):
                raise TypeError(f"entry z_{i} = {z!r} is not in algebra {alg.tag}")
        if not alg.associative:
            raise NonAssociativeAlgebra(
                f"algebra {alg.tag} is not associative; the n-ary product of its "
                "cyclic shift matrices has no unambiguous component form"
            )

    @classmethod
    def of(cls, algebra: str, *entries, mode: str = numeric.RATIONAL) -> "ZMatrix":
        """Build from coordinate lists (or bare numbers for ``R``)."""
        alg = get_algebra(algebra)
        built = []
        for e in entries:
            coords = e if isinstance(e, (list, tuple)) else [e]
            built.append(alg.from_coords(coords, mode))
        return cls(len(built) + 1, tuple(built), alg.tag)

    @property
    def alg(self) -> Algebra:
        return ALGEBRAS[self.algebra]

    @property
    def size(self) -> int:
        return self.arity - 1

    @property
    def mode(self) -> str:
        return self.entries[0].mode

    @property
    def param_count(self) -> int:
        return self.alg.dim * (self.arity - 1)

    def coords(self) -> tuple:
        """Flat real tuple ``(z_1 coords, z_2 coords, ...)``."""
        return tuple(c for z in self.entries for c in z.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ZMatrix):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.algebra == other.algebra
            and numeric.seq_close(self.coords(), other.coords())
        )

    __hash__ = None

    def __add__(self, other: "ZMatrix") -> "ZMatrix":
        _check_compatible([self, other])
        return ZMatrix(self.arity, tuple(a + b for a, b in zip(self.entries, other.entries)), self.algebra)

    def scale(self, s) -> "ZMatrix":
        return ZMatrix(self.arity, tuple(z.scale(s) for z in self.entries), self.algebra)

    def is_zero(self) -> bool:
        return all(_is_zero(z) for z in self.entries)

    def __repr__(self):
        return f"ZMatrix[{self.arity}, {self.algebra}]{self.entries!r}"


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """Square matrix with every cell stored; only used as an oracle and for display."""

    size: int
    cells: tuple

    def __post_init__(self):
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        if len(cells) != self.size or any(len(r) != self.size for r in cells):
            raise SizeMismatch(f"cells do not form a {self.size}x{self.size} grid")

    def __getitem__(self, rc):
        r, c = rc
        return self.cells[r][c]

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix) or other.size != self.size:
            return NotImplemented
        return all(a == b for ra, rb in zip(self.cells, other.cells) for a, b in zip(ra, rb))

    __hash__ = None

    def nonzero_positions(self) -> set:
        """0-based ``(row, col)`` of nonzero cells."""
        return {
            (r, c) for r in range(self.size) for c in range(self.size) if not _is_zero(self.cells[r][c])
        }


def shift_positions(size: int) -> set:
    """0-based positions of the cyclic superdiagonal."""
    return {(i, (i + 1) % size) for i in range(size)}


def _check_compatible(factors: Sequence[ZMatrix]):
    first = factors[0]
    for k, f in enumerate(factors[1:], 2):
        if f.arity != first.arity:
            raise ArityMismatch(f"factor {k} has arity {f.arity}, factor 1 has arity {first.arity}")
        if f.algebra != first.algebra:
            raise ArityMismatch(f"factor {k} is over {f.algebra}, factor 1 over {first.algebra}")


def nary_mul(factors: Sequence[ZMatrix]) -> ZMatrix:
    """The n-ary product of exactly ``n`` ZMatrices of arity ``n``.

    Output weight ``i`` is ``z'_i z''_{i+1} ... z^{(n)}_{i+n-1}`` with indices
    taken cyclically mod ``n - 1``.
    """
    factors = list(factors)
    if not factors:
        raise FactorCountError("no factors")
    _check_compatible(factors)
    n = factors[0].arity
    if len(factors) != n:
        raise FactorCountError(f"arity {n} product needs exactly {n} factors, got {len(factors)}")
    m = n - 1
    out = []
    for i in range(m):
        acc = factors[0].entries[i]
        for k in range(1, n):
            acc = acc * factors[k].entries[(i + k) % m]
        out.append(acc)
    return ZMatrix(n, tuple(out), factors[0].algebra)


def polyadic_identity(arity: int, algebra: str = "R", mode: str = numeric.RATIONAL) -> ZMatrix:
    """The cyclic permutation matrix with the algebra unit in every weight."""
    alg = get_algebra(algebra)
    return ZMatrix(arity, (alg.one(mode),) * (arity - 1), alg.tag)


def zero_matrix(arity: int, algebra: str = "R", mode: str = numeric.RATIONAL) -> ZMatrix:
    alg = get_algebra(algebra)
    return ZMatrix(arity, (alg.zero(mode),) * (arity - 1), alg.tag)


def is_invertible(z: ZMatrix) -> bool:
    return all(e.is_invertible() for e in z.entries)


def first_noninvertible(z: ZMatrix) -> int | None:
    for i, e in enumerate(z.entries, 1):
        if not e.is_invertible():
            return i
    return None


def querelement(z: ZMatrix) -> ZMatrix:
    """Weight ``i`` is ``z_{i-1}^-1 z_{i-2}^-1 ... z_{i+1}^-1`` (n-2 factors, cyclic)."""
    bad = first_noninvertible(z)
    if bad is not None:
        raise NonInvertibleEntry(bad, f"{z.entries[bad - 1]!r} has no inverse in {z.algebra}")
    m = z.size
    inv = [e.inverse() for e in z.entries]
    out = []
    for i in range(m):
        acc = inv[(i - 1) % m]
        for j in range(2, m):
            acc = acc * inv[(i - j) % m]
        out.append(acc)
    return ZMatrix(z.arity, tuple(out), z.algebra)


def polyadic_power(z: ZMatrix, ell: int = 1) -> ZMatrix:
    """``ell`` nested n-ary products over ``ell*(n-1) + 1`` copies of ``z``."""
    if ell < 1:
        raise ValueError("polyadic power needs ell >= 1")
    n = z.arity
    acc = nary_mul([z] * n)
    for _ in range(ell - 1):
        acc = nary_mul([acc] + [z] * (n - 1))
    return acc


def is_idempotent(z: ZMatrix, ell: int = 1) -> bool:
    return polyadic_power(z, ell) == z


def is_nilpotent(z: ZMatrix, ell: int = 1) -> bool:
    """True when the ``ell``-th polyadic power is the zero matrix (the polyadic zero)."""
    return polyadic_power(z, ell).is_zero()


def is_neutral_polyad(polyad: Sequence[ZMatrix], probe: ZMatrix) -> bool:
    """Does ``mu[probe, *polyad] == probe``?"""
    polyad = list(polyad)
    if len(polyad) != probe.arity - 1:
        raise FactorCountError(f"neutral polyad for arity {probe.arity} has {probe.arity - 1} members")
    return nary_mul([probe] + polyad) == probe


def to_dense(z: ZMatrix) -> DenseMatrix:
    m = z.size
    zero = z.alg.zero(z.mode)
    cells = [[zero] * m for _ in range(m)]
    for i, e in enumerate(z.entries):
        cells[i][(i + 1) % m] = e
    return DenseMatrix(m, cells)


def dense_mul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    if a.size != b.size:
        raise SizeMismatch(f"{a.size}x{a.size} times {b.size}x{b.size}")
    m = a.size
    cells = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = None
            for k in range(m):
                x, y = a.cells[i][k], b.cells[k][j]
                if _is_zero(x) or _is_zero(y):
                    continue
                t = x * y
                acc = t if acc is None else acc + t
            if acc is None:
                acc = a.cells[i][j] - a.cells[i][j]  # a zero of the right kind
            row.append(acc)
        cells.append(row)
    return DenseMatrix(m, cells)


def dense_chain(matrices: Sequence[DenseMatrix]) -> DenseMatrix:
    return reduce(dense_mul, matrices)


def from_dense(d: DenseMatrix, algebra: str | None = None) -> ZMatrix:
    """Read the weights back off a dense matrix with the cyclic shift pattern."""
    extra = d.nonzero_positions() - shift_positions(d.size)
    if extra:
        r, c = min(extra)
        raise PatternViolation(f"nonzero cell at ({r + 1}, {c + 1}) is off the cyclic shift pattern")
    entries = tuple(d.cells[i][(i + 1) % d.size] for i in range(d.size))
    return ZMatrix(d.size + 1, entries, algebra or "")


def zmatrix_to_json(z: ZMatrix) -> dict:
    return {"arity": z.arity, "algebra": z.algebra, "entries": [element_to_json(e) for e in z.entries]}


def zmatrix_from_json(obj, mode: str = numeric.RATIONAL, algebra: str | None = None, arity: int | None = None) -> ZMatrix:
    """Accepts ``{"arity", "algebra", "entries"}`` or a bare list of entries.

    Entries may be element objects, coordinate lists, or bare scalars (``R``).
    """
    if isinstance(obj, list):
        obj = {"entries": obj}
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ValueError(f"not a ZMatrix: {obj!r}")
    tag = obj.get("algebra", algebra)
    if tag is None:
        raise ValueError("ZMatrix algebra not given")
    if algebra is not None and tag != algebra:
        raise ValueError(f"algebra {tag!r} does not match --algebra {algebra!r}")
    alg = get_algebra(tag)
    entries = []
    for e in obj["entries"]:
        if isinstance(e, dict):
            x = element_from_json(e, mode)
        elif isinstance(e, list):
            x = alg.from_coords([numeric.load_scalar(c, mode) for c in e], mode)
        else:
            x = alg.from_coords([numeric.load_scalar(e, mode)], mode)
        entries.append(x)
    n = obj.get("arity", arity if arity is not None else len(entries) + 1)
    if arity is not None and n != arity:
        raise ValueError(f"arity {n} does not match --arity {arity}")
    return ZMatrix(int(n), tuple(entries), alg.tag)
