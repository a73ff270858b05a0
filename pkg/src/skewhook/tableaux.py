"""Tableaux on skew shapes, brute-force enumerators and tableau statistics.

SSYT and RPP entries are nonnegative integers (starting at 0); SYT use 1..n.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterator

from . import config
from .errors import ValidationError
from .series import BivariateSeries, TruncatedSeries
from .shapes import Cell, Partition, SkewShape


class TableauClass(Enum):
    RPP = "rpp"
    SSYT = "ssyt"
    SYT = "syt"


@dataclass(frozen=True)
class Tableau:
    """Entries on the cells of lambda/mu, stored row by row (skew cells only)."""

    shape: SkewShape
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = self.shape
        values = tuple(tuple(int(v) for v in row) for row in self.values)
        expected = tuple(shape.lam.part(i) - shape.mu.part(i) for i in range(1, len(shape.lam) + 1))
        if tuple(len(r) for r in values) != expected:
            raise ValidationError(f"tableau rows {tuple(len(r) for r in values)} do not fit the shape {shape}")
        if any(v < 0 for r in values for v in r):
            raise ValidationError("tableau entries must be nonnegative")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_entries(cls, shape: SkewShape, entries: dict) -> "Tableau":
        rows = []
        for i in range(1, len(shape.lam) + 1):
            rows.append(tuple(entries[(i, j)] for j in range(shape.mu.part(i) + 1, shape.lam.part(i) + 1)))
        return cls(shape, tuple(rows))

    @classmethod
    def from_rows(cls, rows, mu=()) -> "Tableau":
        """Build from a ragged matrix; ``None`` marks cells of mu.

        If ``mu`` is empty it is inferred from the leading ``None`` entries.
        """
        rows = [list(r) for r in rows]
        inferred = [sum(1 for _ in _leading_none(r)) for r in rows]
        lam = Partition(tuple(len(r) for r in rows))
        mu_part = Partition(tuple(mu)) if tuple(mu) else Partition(tuple(inferred))
        shape = SkewShape(lam, mu_part)
        out = []
        for i, r in enumerate(rows, 1):
            m = mu_part.part(i)
            if any(v is not None for v in r[:m]) and tuple(mu):
                raise ValidationError(f"row {i}: cells of mu must be null")
            tail = r[m:]
            if any(v is None for v in tail):
                raise ValidationError(f"row {i}: null entry outside mu")
            out.append(tuple(tail))
        return cls(shape, tuple(out))

    def entry(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.values[i - 1][j - self.shape.mu.part(i) - 1]

    @property
    def entries(self) -> dict[Cell, int]:
        return {c: self.entry(c) for c in self.shape.cells}

    @property
    def size(self) -> int:
        return sum(sum(r) for r in self.values)

    def to_rows(self) -> list[list[int | None]]:
        mu = self.shape.mu
        return [[None] * mu.part(i) + list(r) for i, r in enumerate(self.values, 1)]

    def padded(self) -> "Tableau":
        """The straight-shape tableau with the cells of mu set to zero."""
        lam = self.shape.lam
        return Tableau(SkewShape(lam), tuple(tuple(0 if v is None else v for v in r) for r in self.to_rows()))


def _leading_none(row):
    for v in row:
        if v is not None:
            return
        yield v


def validate(t: Tableau, cls: TableauClass) -> bool:
    shape = t.shape
    e = t.entries
    for (i, j), v in e.items():
        right = e.get((i, j + 1))
        below = e.get((i + 1, j))
        if cls is TableauClass.SYT:
            if (right is not None and right <= v) or (below is not None and below <= v):
                return False
        else:
            if right is not None and right < v:
                return False
            if below is not None and (below < v or (cls is TableauClass.SSYT and below == v)):
                return False
    if cls is TableauClass.SYT:
        return sorted(e.values()) == list(range(1, shape.size + 1))
    return True


# ---------------------------------------------------------------- SYT


def enumerate_syt(shape: SkewShape) -> list[Tableau]:
    """All standard fillings by backtracking over addable cells."""
    n = shape.size
    config.check_guard("syt_enum", n)
    lam = shape.lam
    rows = list(shape.mu.part(i) for i in range(1, len(lam) + 1))
    entries: dict[Cell, int] = {}
    out = []

    def rec(k: int):
        if k > n:
            out.append(Tableau.from_entries(shape, entries))
            return
        for i in range(len(rows)):
            j = rows[i] + 1
            if j <= lam.part(i + 1) and (i == 0 or rows[i - 1] >= j):
                rows[i] += 1
                entries[Cell(i + 1, j)] = k
                rec(k + 1)
                del entries[Cell(i + 1, j)]
                rows[i] -= 1

    rec(1)
    return sorted(out, key=lambda t: t.values)


def count_syt_bruteforce(shape: SkewShape) -> int:
    """Count standard fillings by memoized backtracking through intermediate shapes."""
    config.check_guard("syt_count", shape.size)
    lam = shape.lam.parts

    @lru_cache(maxsize=None)
    def count(nu: tuple[int, ...]) -> int:
        if nu == lam:
            return 1
        total = 0
        for i in range(len(nu)):
            if nu[i] < lam[i] and (i == 0 or nu[i - 1] > nu[i]):
                total += count(nu[:i] + (nu[i] + 1,) + nu[i + 1:])
        return total

    return count(tuple(shape.mu.part(i) for i in range(1, len(lam) + 1)))


def _position(t: Tableau) -> dict[int, Cell]:
    return {v: c for c, v in t.entries.items()}


def tmaj(t: Tableau) -> int:
    """Sum of i such that i + 1 sits in a strictly lower row than i."""
    if not validate(t, TableauClass.SYT):
        raise ValidationError("tmaj needs a standard Young tableau")
    pos = _position(t)
    return sum(i for i in range(1, t.shape.size) if pos[i + 1].row > pos[i].row)


def maj_of_extension(t: Tableau) -> int:
    """maj of the linear extension of the cell poset determined by ``t``.

    The poset is oriented so that reverse plane partitions are order-reversing
    maps: cells toward the north-west are larger.  A linear extension then lists
    the cells holding n, n-1, ..., 1, and the natural labelling gives cell c the
    label n + 1 - (row-major index of c).  Position i is a descent when its label
    exceeds the next one.
    """
    n = t.shape.size
    label = {c: n - k for k, c in enumerate(t.shape.cells)}
    pos = _position(t)
    w = [label[pos[v]] for v in range(n, 0, -1)]
    return sum(i for i in range(1, n) if w[i - 1] > w[i])


def _stat_polynomial(shape: SkewShape, stat: Callable[[Tableau], int]) -> TruncatedSeries:
    n = shape.size
    N = n * (n - 1) // 2
    coeffs = [0] * (N + 1)
    for t in enumerate_syt(shape):
        coeffs[stat(t)] += 1
    return TruncatedSeries(coeffs, N)


def tmaj_polynomial(shape: SkewShape) -> TruncatedSeries:
    """Sum over SYT of q^tmaj, exact up to its maximal degree n(n-1)/2."""
    return _stat_polynomial(shape, tmaj)


def maj_linear_extensions(shape: SkewShape) -> TruncatedSeries:
    """Sum over linear extensions of q^maj, exact up to degree n(n-1)/2."""
    config.check_guard("maj_cells", shape.size)
    return _stat_polynomial(shape, maj_of_extension)


# ---------------------------------------------------------------- RPP / SSYT


def trace_k(t: Tableau, k: int) -> int:
    """Sum of the entries on the diagonal col - row = k."""
    return sum(v for c, v in t.entries.items() if c.col - c.row == k)


def minimal_ssyt_values(shape: SkewShape) -> dict[Cell, int]:
    """Entries of the minimal SSYT T_0: each column of lambda/mu reads 0, 1, 2, ..."""
    mu = shape.mu
    return {c: c.row - mu.col_length(c.col) - 1 for c in shape.cells}


def minimal_ssyt(shape: SkewShape) -> Tableau:
    return Tableau.from_entries(shape, minimal_ssyt_values(shape))


def iter_fillings(
    shape: SkewShape,
    strict_columns: bool,
    max_size: int | None = None,
    max_entry: int | None = None,
) -> Iterator[tuple[dict[Cell, int], int]]:
    """Yield (entries, size) for every RPP/SSYT within the bounds.

    The yielded dict is reused between iterations; copy it to keep it.
    At least one of ``max_size`` and ``max_entry`` must be given.
    """
    if max_size is None and max_entry is None:
        raise ValidationError("an entry or size bound is required")
    cells = shape.cells
    floor = minimal_ssyt_values(shape) if strict_columns else {c: 0 for c in cells}
    # minimal total of the cells after position idx
    tail = [0] * (len(cells) + 1)
    for idx in range(len(cells) - 1, -1, -1):
        tail[idx] = tail[idx + 1] + floor[cells[idx]]
    budget = max_size if max_size is not None else None
    values: dict[Cell, int] = {}
    step = 1 if strict_columns else 0

    def rec(idx: int, total: int):
        if idx == len(cells):
            yield values, total
            return
        c = cells[idx]
        lo = floor[c]
        left = values.get(Cell(c.row, c.col - 1))
        if left is not None and left > lo:
            lo = left
        up = values.get(Cell(c.row - 1, c.col))
        if up is not None and up + step > lo:
            lo = up + step
        hi = max_entry if max_entry is not None else None
        if budget is not None:
            room = budget - total - tail[idx + 1]
            hi = room if hi is None else min(hi, room)
        v = lo
        while v <= hi:
            values[c] = v
            yield from rec(idx + 1, total + v)
            v += 1
        values.pop(c, None)

    yield from rec(0, 0)


def _collect(shape: SkewShape, strict: bool, max_size, max_entry) -> list[Tableau]:
    limit = config.get_guard("enum_results")
    out = []
    for values, _ in iter_fillings(shape, strict, max_size, max_entry):
        out.append(Tableau.from_entries(shape, values))
        if len(out) > limit:
            config.check_guard("enum_results", len(out))
    return sorted(out, key=lambda t: (t.size, t.values))


def enumerate_rpp_bounded(shape: SkewShape, max_size: int) -> list[Tableau]:
    """All RPP of the shape with |pi| <= max_size."""
    return _collect(shape, False, max_size, None)


def enumerate_ssyt_bounded(
    shape: SkewShape, max_size: int | None = None, max_entry: int | None = None
) -> list[Tableau]:
    """All SSYT with |T| <= max_size and/or every entry <= max_entry."""
    return _collect(shape, True, max_size, max_entry)


def _series_by_size(shape: SkewShape, strict: bool, N: int, max_entry=None) -> TruncatedSeries:
    coeffs = [0] * (N + 1)
    for _, size in iter_fillings(shape, strict, N, max_entry):
        coeffs[size] += 1
    return TruncatedSeries(coeffs, N)


def _series_by_trace(shape: SkewShape, strict: bool, N: int) -> BivariateSeries:
    table = [[0] * (N + 1) for _ in range(N + 1)]
    diag = [c for c in shape.cells if c.row == c.col]
    for values, size in iter_fillings(shape, strict, N):
        table[size][sum(values[c] for c in diag)] += 1
    return BivariateSeries(table, N)


def ssyt_series_bruteforce(shape: SkewShape, N: int, max_entry: int | None = None) -> TruncatedSeries:
    """Sum of q^|T| over SSYT (entries >= 0, optionally <= max_entry), truncated at N."""
    return _series_by_size(shape, True, N, max_entry)


def rpp_series_bruteforce(shape: SkewShape, N: int) -> TruncatedSeries:
    return _series_by_size(shape, False, N)


def ssyt_trace_series_bruteforce(shape: SkewShape, N: int) -> BivariateSeries:
    """Sum of q^|T| t^{tr(T)} over SSYT, with tr the sum on the main diagonal."""
    return _series_by_trace(shape, True, N)


def rpp_trace_series_bruteforce(shape: SkewShape, N: int) -> BivariateSeries:
    return _series_by_trace(shape, False, N)


def random_rpp(shape: SkewShape, max_entry: int, rng) -> Tableau:
    """An RPP with entries in 0..max_entry, filled row-major with uniform choices above the floor."""
    values: dict[Cell, int] = {}
    for c in shape.cells:
        lo = max(values.get(Cell(c.row, c.col - 1), 0), values.get(Cell(c.row - 1, c.col), 0))
        values[c] = rng.randint(lo, max_entry)
    return Tableau.from_entries(shape, values)
