"""Polyadic Cayley-Dickson tower: arity chains, dimensions and block-shift shapes.

A tower is a chain of arities ``(n_0, ..., n_l)``. Stage ``k`` contributes an
``(n_k - 1)``-cycle, and each step doubles the coefficient algebra, so a cell
holds ``2^l`` real coordinates. The shape nests with the last stage outermost:
each star of the ``(n_l - 1)``-cycle is replaced by the whole shape of the
first ``l`` stages.

Positions are 0-based internally; ``pattern_1based`` gives the figure's view.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Sequence


class ChainBroken(ValueError):
    def __init__(self, index: int, lower: int, upper: int):
        self.index = index
        self.ratio = Fraction(upper - 1, lower - 1)
        super().__init__(
            f"stages {index} -> {index + 1}: ({upper}-1)/({lower}-1) = {self.ratio} is not an integer"
        )


class ChainWarning(UserWarning):
    pass


@dataclass(frozen=True)
class TowerSpec:
    stages: tuple
    kappa_chain: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(int(n) for n in self.stages))
        if not self.stages:
            raise ValueError("a tower needs at least one stage")
        for n in self.stages:
            if n < 3:
                raise ValueError(f"every stage arity must be >= 3, got {n}")
        if self.kappa_chain is not None:
            kc = tuple(int(k) for k in self.kappa_chain)
            object.__setattr__(self, "kappa_chain", kc)
            if len(kc) != len(self.stages) - 1:
                raise ValueError("kappa_chain needs one entry per adjacent pair of stages")
            for i, (k, lo, hi) in enumerate(zip(kc, self.stages, self.stages[1:])):
                if k < 1 or hi != k * (lo - 1) + 1:
                    raise ValueError(f"stage {i + 1} arity {hi} != {k}*({lo}-1)+1")

    @classmethod
    def parse(cls, text: str) -> "TowerSpec":
        """``"5,3,4"`` -> ``TowerSpec((5, 3, 4))``."""
        try:
            stages = tuple(int(t) for t in text.split(","))
        except ValueError:
            raise ValueError(f"bad arity list {text!r}") from None
        return cls(stages)

    @property
    def ell(self) -> int:
        return len(self.stages) - 1

    @property
    def size(self) -> int:
        return prod(n - 1 for n in self.stages)


@dataclass(frozen=True)
class TowerShape:
    size: int
    pattern: frozenset
    coeff_dim: int
    block_sizes: tuple = field(default=())  # side length of the blocks at each nesting depth

    def is_monomial(self) -> bool:
        rows = [r for r, _ in self.pattern]
        cols = [c for _, c in self.pattern]
        full = set(range(self.size))
        return len(self.pattern) == self.size and set(rows) == full and set(cols) == full

    def column_of(self, row: int) -> int:
        for r, c in self.pattern:
            if r == row:
                return c
        raise KeyError(row)

    def pattern_1based(self) -> list:
        return sorted((r + 1, c + 1) for r, c in self.pattern)


def tower_dimension(spec: TowerSpec) -> int:
    return 2**spec.ell * spec.size


def validate_arity_chain(spec: TowerSpec, strict: bool = False) -> list:
    """Integral ratios ``(n_{i+1}-1)/(n_i-1)``.

    A non-integral step is reported as a :class:`ChainWarning` and recorded as
    ``None`` unless ``strict``, in which case :class:`ChainBroken` is raised.
    """
    out = []
    for i, (lo, hi) in enumerate(zip(spec.stages, spec.stages[1:])):
        if (hi - 1) % (lo - 1) == 0:
            out.append((hi - 1) // (lo - 1))
            continue
        err = ChainBroken(i, lo, hi)
        if strict:
            raise err
        warnings.warn(str(err), ChainWarning, stacklevel=2)
        out.append(None)
    return out


def cycle_pattern(m: int) -> set:
    return {(i, (i + 1) % m) for i in range(m)}


def embed_pattern(inner: set, inner_size: int, outer_cycle: int) -> set:
    """Replace each star of an ``outer_cycle``-cycle by a copy of ``inner``."""
    out = set()
    for br, bc in cycle_pattern(outer_cycle):
        for r, c in inner:
            out.add((br * inner_size + r, bc * inner_size + c))
    return out


def build_shape(spec: TowerSpec) -> TowerShape:
    m0 = spec.stages[0] - 1
    pattern, size = cycle_pattern(m0), m0
    blocks = [1]
    for n in spec.stages[1:]:
        blocks.append(size)
        pattern = embed_pattern(pattern, size, n - 1)
        size *= n - 1
    return TowerShape(size, frozenset(pattern), 2**spec.ell, tuple(reversed(blocks)))


@dataclass(frozen=True)
class FinalArity:
    outer: int
    flat: int
    note: str = ""


# The worked (5,3,4) example is described in prose as a 13-ary algebra, which
# matches neither the outer stage arity (4) nor the flat shift arity (25).
_ARITY_NOTES = {
    (5, 3, 4): "reference text calls this a 13-ary algebra; neither outer (4) nor flat (25) arity gives 13",
}


def final_arity(spec: TowerSpec) -> FinalArity:
    return FinalArity(spec.stages[-1], spec.size + 1, _ARITY_NOTES.get(spec.stages, ""))


STAR = "★"
DOT = "·"


def render_shape(shape: TowerShape, separators: bool = True) -> str:
    """Text art: ``STAR`` for a nonzero cell, ``DOT`` for zero.

    With ``separators`` the outermost block boundaries are drawn with ``|``
    and ``-`` (one level only, so the figure stays readable).
    """
    outer = shape.block_sizes[0] if shape.block_sizes and 1 < shape.block_sizes[0] < shape.size else None
    lines = []
    for r in range(shape.size):
        if separators and outer and r and r % outer == 0:
            width = shape.size + shape.size // outer - 1
            lines.append("-" * width)
        row = []
        for c in range(shape.size):
            if separators and outer and c and c % outer == 0:
                row.append("|")
            row.append(STAR if (r, c) in shape.pattern else DOT)
        lines.append("".join(row))
    return "\n".join(lines)


def invertible_cells(cells: Sequence) -> bool:
    """A tower matrix with the given nonzero cells lies in the division subset
    exactly when every cell is invertible in its coefficient algebra."""
    return all(c.is_invertible() for c in cells)
