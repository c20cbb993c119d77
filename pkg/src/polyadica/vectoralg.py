"""The (m+1)-ary product of vectors in an m-dimensional space.

Component ``j`` of the product of ``x', x'', ..., x^(m+1)`` is the cyclic word
``x'_j x''_{j+1} ... x^(m+1)_{j+m}`` with indices read mod ``m``; in other
words the reduced vectorization of the product of the corresponding
shift matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import numeric
from .polyadization import DenseMatrix, PatternViolation, dense_chain, shift_positions


class DimensionMismatch(ValueError):
    pass


class ZeroCoordinate(ArithmeticError):
    def __init__(self, index: int):
        self.index = index  # 1-based
        super().__init__(f"coordinate x_{index} is zero; no quervector")


@dataclass(frozen=True, eq=False)
class PolyVector:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) < 2:
            raise ValueError("vector dimension must be >= 2")

    @classmethod
    def of(cls, *coords, mode: str = numeric.RATIONAL) -> "PolyVector":
        return cls(tuple(numeric.to_scalar(c, mode) for c in coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __add__(self, other: "PolyVector") -> "PolyVector":
        _same_dim([self, other])
        return PolyVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, s) -> "PolyVector":
        return PolyVector(tuple(s * c for c in self.coords))

    def __eq__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        return numeric.seq_close(self.coords, other.coords)

    __hash__ = None

    def __repr__(self):
        return f"PolyVector({', '.join(str(c) for c in self.coords)})"

    def to_json(self) -> dict:
        return {"dim": self.dim, "coords": [numeric.dump_scalar(c) for c in self.coords]}


def vector_from_json(obj, mode: str = numeric.RATIONAL) -> PolyVector:
    coords = obj["coords"] if isinstance(obj, dict) else obj
    if not isinstance(coords, list):
        raise ValueError(f"not a vector: {obj!r}")
    v = PolyVector(tuple(numeric.load_scalar(c, mode) for c in coords))
    if isinstance(obj, dict) and "dim" in obj and obj["dim"] != v.dim:
        raise DimensionMismatch(f"dim {obj['dim']} but {v.dim} coordinates")
    return v


def _same_dim(vs: Sequence[PolyVector]):
    m = vs[0].dim
    for k, v in enumerate(vs[1:], 2):
        if v.dim != m:
            raise DimensionMismatch(f"factor {k} has dimension {v.dim}, factor 1 has {m}")


def poly_product(factors: Sequence[PolyVector]) -> PolyVector:
    factors = list(factors)
    if not factors:
        raise ValueError("no factors")
    _same_dim(factors)
    m = factors[0].dim
    if len(factors) != m + 1:
        raise ValueError(f"dimension {m} product needs exactly {m + 1} factors, got {len(factors)}")
    out = []
    for j in range(m):
        acc = factors[0].coords[j]
        for k in range(1, m + 1):
            acc = acc * factors[k].coords[(j + k) % m]
        out.append(acc)
    return PolyVector(tuple(out))


@dataclass(frozen=True)
class StructureConstants:
    dim: int
    nonzero: tuple  # ((i_1, ..., i_{m+1}), j, value), 1-based indices

    def value(self, indices: Sequence[int], j: int) -> int:
        for idx, out, val in self.nonzero:
            if tuple(indices) == idx and out == j:
                return val
        return 0


def structure_constants(m: int) -> StructureConstants:
    if m < 2:
        raise ValueError("m must be >= 2")
    entries = []
    for j in range(m):
        idx = tuple((j + k) % m + 1 for k in range(m + 1))
        entries.append((idx, j + 1, 1))
    return StructureConstants(m, tuple(entries))


def basis_vector(m: int, i: int, mode: str = numeric.RATIONAL) -> PolyVector:
    """``e_i`` with 1-based ``i``."""
    return PolyVector.of(*[1 if k == i - 1 else 0 for k in range(m)], mode=mode)


def quervector(v: PolyVector) -> PolyVector:
    """Component ``j`` is ``1 / (x_{j+1} ... x_{j-1})`` (the other m-1 coordinates)."""
    for j, x in enumerate(v.coords, 1):
        if numeric.is_zero(x):
            raise ZeroCoordinate(j)
    m = v.dim
    out = []
    for j in range(m):
        rest = numeric.product(v.coords[(j + k) % m] for k in range(1, m))
        out.append(numeric.scalar_inv(rest))
    return PolyVector(tuple(out))


def shift_matrix(v: PolyVector) -> DenseMatrix:
    m = v.dim
    zero = v.coords[0] - v.coords[0]
    cells = [[zero] * m for _ in range(m)]
    for i, x in enumerate(v.coords):
        cells[i][(i + 1) % m] = x
    return DenseMatrix(m, cells)


def reduced_vectorization(d: DenseMatrix) -> PolyVector:
    extra = d.nonzero_positions() - shift_positions(d.size)
    if extra:
        r, c = min(extra)
        raise PatternViolation(f"nonzero cell at ({r + 1}, {c + 1}) is off the cyclic shift pattern")
    return PolyVector(tuple(d.cells[i][(i + 1) % d.size] for i in range(d.size)))


def product_via_matrices(factors: Sequence[PolyVector]) -> PolyVector:
    """Oracle: vectorize the dense product of the shift matrices."""
    return reduced_vectorization(dense_chain([shift_matrix(v) for v in factors]))
