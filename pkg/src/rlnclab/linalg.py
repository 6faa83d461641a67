"""Exact dense vector/matrix algebra over GF(q).

Everything runs on canonical integer entries with the field's table-backed
arithmetic; there is no floating point and therefore no tolerance anywhere.
Elimination uses the first nonzero pivot, which is deterministic and all an
exact field needs.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .gf import Field


@dataclass(frozen=True, slots=True)
class Vec:
    """A vector in F^r with canonical integer entries."""

    field: Field
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __add__(self, other: "Vec") -> "Vec":
        _check_peer(self, other)
        add = self.field.add
        return Vec(self.field, tuple(add(a, b) for a, b in zip(self.values, other.values)))

    def scale(self, c: int) -> "Vec":
        mul = self.field.mul
        return Vec(self.field, tuple(mul(c, v) for v in self.values))

    def project(self, coords: Iterable[int]) -> "Vec":
        """Zero every entry whose index is outside coords."""
        keep = frozenset(coords)
        for i in keep:
            if not 0 <= i < len(self.values):
                raise ValueError(f"coordinate {i} out of range for dimension {len(self.values)}")
        return Vec(self.field, tuple(v if i in keep else 0 for i, v in enumerate(self.values)))

    def is_zero(self) -> bool:
        return not any(self.values)


def zero(field: Field, dim: int) -> Vec:
    return Vec(field, (0,) * dim)


def unit(field: Field, dim: int, index: int) -> Vec:
    if not 0 <= index < dim:
        raise ValueError(f"unit index {index} out of range for dimension {dim}")
    return Vec(field, tuple(1 if i == index else 0 for i in range(dim)))


def project(v: Vec, coords: Iterable[int]) -> Vec:
    return v.project(coords)


def complement(coords: Iterable[int], dim: int) -> frozenset[int]:
    """The complementary coordinate set, so the two projections sum back to v."""
    keep = frozenset(coords)
    return frozenset(i for i in range(dim) if i not in keep)


def _check_peer(a: Vec, b: Vec) -> None:
    if a.field != b.field:
        raise ValueError("vectors belong to different fields")
    if len(a.values) != len(b.values):
        raise ValueError(f"dimension mismatch: {len(a.values)} vs {len(b.values)}")


def _common_field(vectors: Sequence[Vec]) -> tuple[Field, int]:
    field, dim = vectors[0].field, len(vectors[0].values)
    for v in vectors[1:]:
        if v.field != field or len(v.values) != dim:
            raise ValueError("vectors must share one field and dimension")
    return field, dim


def _echelon(field: Field, rows: list[list[int]], n_pivot_cols: int) -> list[int]:
    """Gauss-Jordan in place, pivots restricted to the first n columns.

    Row operations apply to the full row width, so augmented columns are
    reduced along with the pivot block.  Returns the pivot columns in order.
    """
    mul, sub, inv = field.mul, field.sub, field.inv
    pivots: list[int] = []
    pr = 0
    for col in range(n_pivot_cols):
        hit = -1
        for i in range(pr, len(rows)):
            if rows[i][col]:
                hit = i
                break
        if hit < 0:
            continue
        rows[pr], rows[hit] = rows[hit], rows[pr]
        lead = rows[pr][col]
        if lead != 1:
            scale = inv(lead)
            rows[pr] = [mul(scale, v) for v in rows[pr]]
        top = rows[pr]
        for i in range(len(rows)):
            if i != pr and rows[i][col]:
                f = rows[i][col]
                rows[i] = [sub(a, mul(f, b)) for a, b in zip(rows[i], top)]
        pivots.append(col)
        pr += 1
        if pr == len(rows):
            break
    return pivots


def _residual(field: Field, row: list[int], ech: list[list[int]], pivots: list[int]) -> list[int]:
    """Reduce row against an echelon basis; zero residual means in-span."""
    mul, sub = field.mul, field.sub
    row = list(row)
    for r, col in zip(ech, pivots):
        f = row[col]
        if f:
            row = [sub(a, mul(f, b)) for a, b in zip(row, r)]
    return row


def rank(vectors: Sequence[Vec]) -> int:
    """Rank of a vector collection by exact Gaussian elimination."""
    vectors = list(vectors)
    if not vectors:
        return 0
    field, dim = _common_field(vectors)
    rows = [list(v.values) for v in vectors]
    return len(_echelon(field, rows, dim))


def in_span(target: Vec, generators: Sequence[Vec]) -> bool:
    return span_contains_all(generators, [target])


def span_contains_all(generators: Sequence[Vec], targets: Sequence[Vec]) -> bool:
    """True iff every target lies in the span of the generators.

    The generators are eliminated once and each target reduced against the
    echelon basis, so checking many targets costs one elimination.
    """
    targets = list(targets)
    if not targets:
        return True
    field, dim = _common_field(list(generators) + targets)
    rows = [list(v.values) for v in generators]
    pivots = _echelon(field, rows, dim)
    ech = rows[: len(pivots)]
    return all(not any(_residual(field, list(t.values), ech, pivots)) for t in targets)


def solve_for_targets(
    generators: Sequence[Vec], targets: Sequence[Vec]
) -> tuple[tuple[int, ...], ...] | None:
    """Coefficient matrix D with D . generators = targets row-wise, or None.

    Returns None when some target is outside the span (FAIL as a value).
    The result is re-multiplied against the generators before returning.
    """
    generators, targets = list(generators), list(targets)
    if not targets:
        return ()
    field, dim = _common_field(generators + targets)
    n, m = len(generators), len(targets)
    # Solve x . G = t for each t: eliminate G^T augmented with all target columns.
    rows = [[g.values[r] for g in generators] + [t.values[r] for t in targets] for r in range(dim)]
    pivots = _echelon(field, rows, n)
    solution: list[list[int]] = [[0] * n for _ in range(m)]
    for r in range(dim):
        for j in range(m):
            rhs = rows[r][n + j]
            if r < len(pivots):
                solution[j][pivots[r]] = rhs
            elif rhs:
                return None  # inconsistent: target has weight outside the span
    add, mul = field.add, field.mul
    for j in range(m):
        acc = [0] * dim
        for c, g in zip(solution[j], generators):
            if c:
                acc = [add(a, mul(c, v)) for a, v in zip(acc, g.values)]
        if tuple(acc) != targets[j].values:
            raise RuntimeError("solver self-check failed: D . G != T after consistent solve")
    return tuple(tuple(row) for row in solution)
