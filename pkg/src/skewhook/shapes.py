"""Partitions, skew shapes, cells, hooks, contents, diagonals and Durfee rectangles.

Cells are 1-based ``(row, col)`` pairs with row 1 on top.  The diagonal
index of a cell is its content ``col - row``.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import ValidationError


class Cell(NamedTuple):
    row: int
    col: int


def content(cell: tuple[int, int]) -> int:
    return cell[1] - cell[0]


@dataclass(frozen=True)
class Partition:
    """An integer partition, stored without trailing zeros."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        try:
            parts = tuple(int(p) for p in self.parts)
        except (TypeError, ValueError):
            raise ValidationError(f"partition parts must be integers: {self.parts!r}") from None
        for p, orig in zip(parts, self.parts):
            if p != orig:
                raise ValidationError(f"partition parts must be integers: {self.parts!r}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p < 0:
                raise ValidationError(f"negative part at row {i + 1}: {p}")
            if p == 0 or (i > 0 and p > parts[i - 1]):
                raise ValidationError(f"parts not weakly decreasing at row {i + 1}: {parts!r}")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def part(self, i: int) -> int:
        """The 1-based part lambda_i, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @cached_property
    def size(self) -> int:
        return sum(self.parts)

    @cached_property
    def conjugate(self) -> "Partition":
        width = self.parts[0] if self.parts else 0
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, width + 1)))

    def col_length(self, j: int) -> int:
        return self.conjugate.part(j)

    def contains(self, cell: tuple[int, int]) -> bool:
        i, j = cell
        return i >= 1 and j >= 1 and j <= self.part(i)

    def contains_partition(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(p <= self.part(i) for i, p in enumerate(other.parts, 1))

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        return tuple(Cell(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1))

    def hook(self, cell: tuple[int, int]) -> int:
        i, j = cell
        if not self.contains(cell):
            raise ValidationError(f"cell {tuple(cell)} is outside the shape {self}")
        return self.part(i) - i + self.col_length(j) - j + 1

    @cached_property
    def hooks(self) -> dict[Cell, int]:
        return {c: self.hook(c) for c in self.cells}


def as_partition(value) -> Partition:
    if isinstance(value, Partition):
        return value
    return Partition(tuple(value))


def conjugate(lam) -> Partition:
    return as_partition(lam).conjugate


def hook_length(lam, cell: tuple[int, int]) -> int:
    return as_partition(lam).hook(cell)


def b_statistic(lam) -> int:
    """Sum of (i - 1) * lambda_i."""
    return sum(i * p for i, p in enumerate(as_partition(lam).parts))


@dataclass(frozen=True)
class SkewShape:
    """The skew shape lambda/mu; ``mu`` defaults to the empty partition."""

    lam: Partition
    mu: Partition = Partition()

    def __post_init__(self):
        lam, mu = as_partition(self.lam), as_partition(self.mu)
        if len(mu) > len(lam):
            raise ValidationError(
                f"mu is not contained in lambda: row {len(lam) + 1} has mu={mu.part(len(lam) + 1)} > lambda=0"
            )
        for i, p in enumerate(mu.parts, 1):
            if p > lam.part(i):
                raise ValidationError(
                    f"mu is not contained in lambda: row {i} has mu={p} > lambda={lam.part(i)}"
                )
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @classmethod
    def of(cls, lam: Iterable[int], mu: Iterable[int] = ()) -> "SkewShape":
        return cls(Partition(tuple(lam)), Partition(tuple(mu)))

    def __str__(self) -> str:
        return f"{self.lam}/{self.mu}"

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        return tuple(
            Cell(i, j)
            for i, p in enumerate(self.lam.parts, 1)
            for j in range(self.mu.part(i) + 1, p + 1)
        )

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    @cached_property
    def size(self) -> int:
        return self.lam.size - self.mu.size

    def contains(self, cell: tuple[int, int]) -> bool:
        return self.lam.contains(cell) and not self.mu.contains(cell)

    def diagonal_range(self) -> range:
        """All k with 1 - l(lambda) <= k <= lambda_1 - 1."""
        if not self.lam.parts:
            return range(0)
        return range(1 - len(self.lam), self.lam.part(1))

    def diagonal_length(self, k: int) -> int:
        return len(diagonal_cells(self, k))

    def to_json(self) -> dict:
        return {"lambda": list(self.lam.parts), "mu": list(self.mu.parts)}


def diagonal_cells(shape: SkewShape, k: int) -> list[Cell]:
    """Cells of lambda/mu with col - row = k, top to bottom."""
    return [c for c in shape.cells if c.col - c.row == k]


def durfee_rectangle(lam, k: int) -> tuple[int, int]:
    """Dimensions (i, i + k) of the largest such rectangle inside [lambda] at (1, 1).

    Returns (0, 0) when k is outside 1 - l(lambda) <= k <= lambda_1 - 1.
    """
    lam = as_partition(lam)
    best = 0
    i = max(1, 1 - k)
    while lam.part(i) >= i + k:
        best = i
        i += 1
    return (best, best + k) if best else (0, 0)


def durfee_cells(lam, k: int) -> frozenset[Cell]:
    rows, cols = durfee_rectangle(lam, k)
    return frozenset(Cell(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1))


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions fitting in a rows x cols box, in lexicographic order."""
    out = []

    def rec(prefix: list[int], cap: int):
        out.append(Partition(tuple(prefix)))
        if len(prefix) == rows:
            return
        for p in range(1, cap + 1):
            prefix.append(p)
            rec(prefix, p)
            prefix.pop()

    rec([], cols)
    return sorted(out, key=lambda p: p.parts)


def partitions_of(n: int) -> list[Partition]:
    out = []

    def rec(prefix: list[int], remaining: int, cap: int):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            rec(prefix, remaining - p, p)
            prefix.pop()

    rec([], n, n)
    return out


def subpartitions(lam) -> list[Partition]:
    """All mu contained in lambda."""
    lam = as_partition(lam)
    out = []

    def rec(prefix: list[int]):
        out.append(Partition(tuple(prefix)))
        i = len(prefix) + 1
        if i > len(lam):
            return
        cap = min(lam.part(i), prefix[-1] if prefix else lam.part(i))
        for p in range(1, cap + 1):
            prefix.append(p)
            rec(prefix)
            prefix.pop()

    rec([])
    return sorted(out, key=lambda p: p.parts)


def skew_shapes_in_box(rows: int, cols: int) -> list[SkewShape]:
    return [SkewShape(lam, mu) for lam in partitions_in_box(rows, cols) for mu in subpartitions(lam)]
