"""Excited diagrams, flagged tableaux, excited arrays and peaks, pleasant diagrams.

An excited diagram of lambda/mu is a set of |mu| cells of [lambda] reached
from [mu] by moves (i, j) -> (i+1, j+1), each allowed when the three cells
(i+1, j), (i, j+1), (i+1, j+1) lie in [lambda] and outside the diagram.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from . import config
from .errors import InvariantViolation, PreconditionError, ValidationError
from .linalg import det
from .shapes import Cell, Partition, SkewShape, durfee_cells, subpartitions

Diagram = frozenset  # frozenset[Cell]


def sorted_cells(cells) -> tuple[Cell, ...]:
    return tuple(sorted(Cell(*c) for c in cells))


def as_diagram(cells) -> frozenset[Cell]:
    return frozenset(Cell(*c) for c in cells)


@dataclass(frozen=True)
class ExcitedDiagram:
    shape: SkewShape
    cells: frozenset[Cell]

    def __post_init__(self):
        object.__setattr__(self, "cells", as_diagram(self.cells))

    @property
    def key(self) -> tuple[Cell, ...]:
        return sorted_cells(self.cells)

    def __lt__(self, other: "ExcitedDiagram") -> bool:
        return self.key < other.key

    def complement(self) -> frozenset[Cell]:
        return frozenset(self.shape.lam.cells) - self.cells


def _is_free(shape: SkewShape, cells: frozenset, c: tuple[int, int]) -> bool:
    return shape.lam.contains(c) and c not in cells


def _active(shape: SkewShape, cells: frozenset) -> list[Cell]:
    return [
        u for u in sorted(cells)
        if _is_free(shape, cells, (u.row + 1, u.col))
        and _is_free(shape, cells, (u.row, u.col + 1))
        and _is_free(shape, cells, (u.row + 1, u.col + 1))
    ]


def active_cells(D: ExcitedDiagram) -> list[Cell]:
    return _active(D.shape, D.cells)


def excited_move(D: ExcitedDiagram, u: tuple[int, int]) -> ExcitedDiagram:
    u = Cell(*u)
    if u not in active_cells(D):
        raise PreconditionError(f"cell {tuple(u)} is not active in the diagram")
    return ExcitedDiagram(D.shape, (D.cells - {u}) | {Cell(u.row + 1, u.col + 1)})


def excited_array_of_mu(shape: SkewShape) -> frozenset[Cell]:
    """Support of A_mu: cells of lambda/mu on the diagonals of content mu_t - t."""
    lam, mu = shape.lam, shape.mu
    contents = {mu.part(t) - t for t in range(1, len(lam) + 1)}
    return frozenset(c for c in shape.cells if c.col - c.row in contents)


@dataclass(frozen=True)
class _Entry:
    peaks: frozenset[Cell]
    array: frozenset[Cell]


def _beta(shape: SkewShape, support: frozenset, u: Cell) -> frozenset:
    i, j = u
    below, diag = Cell(i + 1, j), Cell(i + 1, j + 1)
    if diag not in support or below in support:
        raise InvariantViolation(f"beta move at {tuple(u)} is not applicable to the excited array")
    return (support - {diag}) | {below}


def _peaks_after(peaks: frozenset, u: Cell) -> frozenset:
    i, j = u
    return (peaks - {Cell(i, j + 1), Cell(i + 1, j)}) | {u}


@lru_cache(maxsize=512)
def _closure(shape: SkewShape, verify: bool) -> dict[frozenset, _Entry]:
    """BFS over excited diagrams, tracking peaks and excited arrays.

    With ``verify`` every edge of the move graph is replayed, so the tracked
    data must agree along all move sequences.
    """
    start = frozenset(shape.mu.cells)
    seen = {start: _Entry(frozenset(), excited_array_of_mu(shape))}
    queue = deque([start])
    while queue:
        cells = queue.popleft()
        entry = seen[cells]
        for u in _active(shape, cells):
            nxt = (cells - {u}) | {Cell(u.row + 1, u.col + 1)}
            if nxt in seen and not verify:
                continue
            new = _Entry(_peaks_after(entry.peaks, u), _beta(shape, entry.array, u))
            if nxt in seen:
                if seen[nxt] != new:
                    raise InvariantViolation("excited peaks or arrays depend on the move sequence")
                continue
            seen[nxt] = new
            queue.append(nxt)
    return seen


def enumerate_excited(shape: SkewShape, verify: bool = False) -> list[ExcitedDiagram]:
    """All excited diagrams of the shape, sorted by their row-major cell lists."""
    return sorted(ExcitedDiagram(shape, cells) for cells in _closure(shape, verify))


def _entry(D: ExcitedDiagram) -> _Entry:
    try:
        return _closure(D.shape, False)[D.cells]
    except KeyError:
        raise ValidationError("cells do not form an excited diagram of the shape") from None


def is_excited(shape: SkewShape, cells) -> bool:
    return as_diagram(cells) in _closure(shape, False)


def excited_peaks(D: ExcitedDiagram) -> frozenset[Cell]:
    return _entry(D).peaks


def excited_array(D: ExcitedDiagram) -> frozenset[Cell]:
    """Support of the 0-1 excited array A_D."""
    return _entry(D).array


def excited_array_matrix(D: ExcitedDiagram) -> list[list[int]]:
    support = excited_array(D)
    return [[int(Cell(i, j) in support) for j in range(1, p + 1)] for i, p in enumerate(D.shape.lam.parts, 1)]


def omega(lam: Partition, values: dict) -> int:
    """Hook weight sum A_u h(u) of an array on [lambda]."""
    return sum(v * lam.hook(u) for u, v in values.items() if v)


def a_statistic(D: ExcitedDiagram) -> int:
    lam = D.shape.lam
    return sum(lam.col_length(c.col) - c.row for c in D.complement())


def a_prime_statistic(D: ExcitedDiagram) -> int:
    lam = D.shape.lam
    return sum(lam.hook(u) for u in excited_peaks(D))


def interlacing(cells) -> bool:
    """Between consecutive cells of a diagonal, both neighbouring diagonals have a cell.

    For consecutive (i, j), (i+m, j+m) on diagonal k, there must be cells on
    diagonals k - 1 and k + 1 with column in [j, j + m].
    """
    by_diag: dict[int, list[Cell]] = {}
    for c in sorted(as_diagram(cells)):
        by_diag.setdefault(c.col - c.row, []).append(c)
    for k, diag in by_diag.items():
        for a, b in zip(diag, diag[1:]):
            for side in (k - 1, k + 1):
                if not any(a.col <= c.col <= b.col for c in by_diag.get(side, ())):
                    return False
    return True


def correspondence(D: ExcitedDiagram) -> dict[Cell, Cell] | None:
    """Map each cell of [mu] to its cell of D, matched in order along diagonals."""
    by_diag: dict[int, list[Cell]] = {}
    for c in sorted(D.cells):
        by_diag.setdefault(c.col - c.row, []).append(c)
    out = {}
    mu_diag: dict[int, list[Cell]] = {}
    for c in D.shape.mu.cells:
        mu_diag.setdefault(c.col - c.row, []).append(c)
    if {k: len(v) for k, v in by_diag.items()} != {k: len(v) for k, v in mu_diag.items()}:
        return None
    for k, cells in mu_diag.items():
        for a, b in zip(cells, by_diag[k]):
            out[a] = b
    return out


# ---------------------------------------------------------------- flagged tableaux


@dataclass(frozen=True)
class FlaggedTableau:
    """SSYT of straight shape mu with row-i entries bounded by flags[i-1]."""

    shape: Partition
    entries: tuple[tuple[int, ...], ...]
    flags: tuple[int, ...]

    def value(self, cell: tuple[int, int]) -> int:
        return self.entries[cell[0] - 1][cell[1] - 1]

    def is_valid(self) -> bool:
        mu = self.shape
        if tuple(len(r) for r in self.entries) != mu.parts or len(self.flags) != len(mu):
            return False
        for i, row in enumerate(self.entries, 1):
            for j, v in enumerate(row, 1):
                if not isinstance(v, int) or v < 1 or v > self.flags[i - 1]:
                    return False
                if j > 1 and row[j - 2] > v:
                    return False
                if i > 1 and self.entries[i - 2][j - 1] >= v:
                    return False
        return True


def flag_vector(shape: SkewShape) -> tuple[int, ...]:
    """Flags f_i = last row of lambda on the diagonal through the corner of mu at or below row i."""
    lam, mu = shape.lam, shape.mu
    corners = [k for k in range(1, len(mu) + 1) if mu.part(k) > mu.part(k + 1)]

    def last_row(k: int) -> int:
        r, c = k, mu.part(k)
        while lam.contains((r + 1, c + 1)):
            r, c = r + 1, c + 1
        return r

    flags = []
    for i in range(1, len(mu) + 1):
        k = min(c for c in corners if c >= i)
        flags.append(last_row(k))
    return tuple(flags)


def count_excited_determinant(shape: SkewShape) -> int:
    """det[h_{mu_i - i + j}(1^{f_i})] over 1..l(mu)."""
    mu = shape.mu
    f = flag_vector(shape)
    n = len(mu)

    def h(m: int, k: int) -> int:
        return comb(k + m - 1, m) if m >= 0 else 0

    matrix = [[h(mu.part(i) - i + j, f[i - 1]) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return det(matrix, 0, 1)


def to_flagged_tableau(D: ExcitedDiagram) -> FlaggedTableau:
    corr = correspondence(D)
    if corr is None:
        raise ValidationError("diagram does not match the diagonals of mu")
    mu = D.shape.mu
    rows = tuple(tuple(corr[Cell(x, y)].row for y in range(1, p + 1)) for x, p in enumerate(mu.parts, 1))
    return FlaggedTableau(mu, rows, flag_vector(D.shape))


def from_flagged_tableau(T: FlaggedTableau, shape: SkewShape) -> ExcitedDiagram:
    if T.shape != shape.mu or T.flags != flag_vector(shape) or not T.is_valid():
        raise ValidationError("not a flagged tableau for this shape")
    cells = set()
    for x, row in enumerate(T.entries, 1):
        for y, t in enumerate(row, 1):
            cells.add(Cell(t, y + t - x))
    if not is_excited(shape, cells):
        raise InvariantViolation("flagged tableau did not map to an excited diagram")
    return ExcitedDiagram(shape, cells)


def enumerate_flagged_tableaux(mu: Partition, flags: tuple[int, ...]) -> list[FlaggedTableau]:
    """All flagged SSYT by direct backtracking (independent of excited moves)."""
    cells = mu.cells
    values: dict[Cell, int] = {}
    out = []

    def rec(idx: int):
        if idx == len(cells):
            rows = tuple(tuple(values[Cell(x, y)] for y in range(1, p + 1)) for x, p in enumerate(mu.parts, 1))
            out.append(FlaggedTableau(mu, rows, tuple(flags)))
            return
        x, y = cells[idx]
        lo = 1
        if y > 1:
            lo = max(lo, values[Cell(x, y - 1)])
        if x > 1:
            lo = max(lo, values[Cell(x - 1, y)] + 1)
        for v in range(lo, flags[x - 1] + 1):
            values[Cell(x, y)] = v
            rec(idx + 1)
        values.pop(Cell(x, y), None)

    rec(0)
    return out


# ---------------------------------------------------------------- pleasant diagrams


def longest_descending_chain(cells) -> int:
    """Longest chain with strictly increasing rows and strictly increasing columns."""
    cs = sorted(cells)
    best: list[int] = []
    for a, u in enumerate(cs):
        b = 1
        for c in range(a):
            v = cs[c]
            if v.row < u.row and v.col < u.col and best[c] + 1 > b:
                b = best[c] + 1
        best.append(b)
    return max(best, default=0)


def is_pleasant(shape: SkewShape, S) -> bool:
    S = as_diagram(S)
    lam = shape.lam
    for c in S:
        if not lam.contains(c):
            raise ValidationError(f"cell {tuple(c)} is outside [lambda]")
    for k in shape.diagonal_range():
        box = durfee_cells(lam, k)
        if longest_descending_chain(S & box) > shape.diagonal_length(k):
            return False
    return True


def enumerate_pleasant(shape: SkewShape, max_weight: int | None = None) -> list[frozenset[Cell]]:
    """Union over excited D of all subsets of [lambda] minus D.

    With ``max_weight`` only subsets whose hook sum is at most that bound are
    produced, which keeps the output small and skips the size guard.
    """
    if max_weight is None:
        config.check_guard("pleasant_cells", shape.lam.size)
    lam = shape.lam
    out: set[frozenset] = set()
    for D in enumerate_excited(shape):
        comp = sorted(D.complement())
        if max_weight is None:
            for r in range(len(comp) + 1):
                for sub in combinations(comp, r):
                    out.add(frozenset(sub))
            continue
        hooks = [lam.hook(u) for u in comp]
        chosen: list[Cell] = []

        def rec(idx: int, left: int):
            out.add(frozenset(chosen))
            for m in range(idx, len(comp)):
                if hooks[m] <= left:
                    chosen.append(comp[m])
                    rec(m + 1, left - hooks[m])
                    chosen.pop()

        rec(0, max_weight)
    return sorted(out, key=lambda s: (len(s), sorted_cells(s)))


def enumerate_pleasant_bruteforce(shape: SkewShape) -> list[frozenset[Cell]]:
    """Filter all subsets of [lambda] by the descending-chain condition."""
    config.check_guard("pleasant_cells", shape.lam.size)
    cells = shape.lam.cells
    out = []
    for r in range(len(cells) + 1):
        for sub in combinations(cells, r):
            if is_pleasant(shape, sub):
                out.append(frozenset(sub))
    return sorted(out, key=lambda s: (len(s), sorted_cells(s)))


def count_pleasant(shape: SkewShape) -> int:
    n = shape.size
    return sum(2 ** (n - len(excited_peaks(D))) for D in enumerate_excited(shape))


# ---------------------------------------------------------------- shadow lines


@dataclass(frozen=True)
class ShadowLine:
    level: int
    cells: tuple[Cell, ...]  # lattice path from south-west to north-east
    peaks: tuple[Cell, ...]


def _upset(lam: Partition, points) -> frozenset[Cell]:
    pts = list(points)
    return frozenset(c for c in lam.cells if any(p.row <= c.row and p.col <= c.col for p in pts))


def _components(cells: frozenset) -> list[list[Cell]]:
    left = set(cells)
    comps = []
    while left:
        start = min(left)
        stack, comp = [start], {start}
        left.discard(start)
        while stack:
            i, j = stack.pop()
            for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                nb = Cell(*nb)
                if nb in left:
                    left.discard(nb)
                    comp.add(nb)
                    stack.append(nb)
        comps.append(comp)
    paths = []
    for comp in comps:
        path = sorted(comp, key=lambda c: (c.col - c.row, c.col))
        for a, b in zip(path, path[1:]):
            if (b.row, b.col) not in ((a.row - 1, a.col), (a.row, a.col + 1)):
                raise InvariantViolation("shadow boundary is not a lattice path")
        paths.append(path)
    return sorted(paths, key=lambda p: (p[0].col - p[0].row, p[0]))


def shadow_lines(shape: SkewShape, S) -> list[ShadowLine]:
    """Iterated shadow-boundary decomposition of S inside [lambda].

    At each level the shadow region is the set of cells of [lambda] weakly
    south-east of some remaining point of S.  The line cells are the region
    cells whose north-west diagonal neighbour lies outside the region; they
    split into lattice paths.  Points of S on these paths are then removed.
    """
    lam = shape.lam
    remaining = as_diagram(S)
    for c in remaining:
        if not lam.contains(c):
            raise ValidationError(f"cell {tuple(c)} is outside [lambda]")
    lines = []
    level = 1
    while remaining:
        region = _upset(lam, remaining)
        boundary = frozenset(c for c in region if Cell(c.row - 1, c.col - 1) not in region)
        for path in _components(boundary):
            peaks = tuple(
                c for c in path
                if Cell(c.row - 1, c.col) not in region and Cell(c.row, c.col - 1) not in region
            )
            lines.append(ShadowLine(level, tuple(path), peaks))
        used = remaining & boundary
        if not used:
            raise InvariantViolation("shadow lines made no progress")
        remaining = remaining - used
        level += 1
    return lines


def shadow_peaks(shape: SkewShape, S) -> frozenset[Cell]:
    return frozenset(p for line in shadow_lines(shape, S) for p in line.peaks)


def _reverse_ladder(lam: Partition, cells: set) -> set:
    """Apply moves (i+1,j+1) -> (i,j) while (i+1,j), (i,j+1) stay in the set."""
    cells = set(cells)
    changed = True
    while changed:
        changed = False
        for c in sorted(cells):
            i, j = c
            if (
                Cell(i + 1, j) in cells
                and Cell(i, j + 1) in cells
                and Cell(i + 1, j + 1) not in cells
                and lam.contains((i + 1, j + 1))
            ):
                cells.remove(c)
                cells.add(Cell(i + 1, j + 1))
                changed = True
                break
    return cells


def _as_young_diagram(cells: frozenset) -> Partition | None:
    rows: dict[int, int] = {}
    for c in cells:
        rows[c.row] = rows.get(c.row, 0) + 1
    parts = [rows.get(i, 0) for i in range(1, max(rows, default=0) + 1)]
    try:
        p = Partition(tuple(parts))
    except ValidationError:
        return None
    return p if frozenset(p.cells) == cells else None


def rho1(shape: SkewShape, S) -> tuple[Partition, ExcitedDiagram]:
    """Send a pleasant diagram S to (nu, D*) with D* an excited diagram of lambda/nu.

    S* is S together with its shadow lines; ladder moves push the complement of
    S* back to a Young diagram [nu].  The diagram D* is [lambda] minus S*.
    """
    lam = shape.lam
    S = as_diagram(S)
    star = set(S)
    for line in shadow_lines(shape, S):
        star.update(line.cells)
    complement = frozenset(lam.cells) - frozenset(star)
    moved = frozenset(lam.cells) - frozenset(_reverse_ladder(lam, star))
    nu = _as_young_diagram(moved)
    if nu is None:
        raise InvariantViolation("reverse ladder moves did not produce a Young diagram")
    if not nu.contains_partition(shape.mu):
        raise InvariantViolation("nu does not contain mu")
    outer = SkewShape(lam, nu)
    if not is_excited(outer, complement):
        raise InvariantViolation("complement of S* is not an excited diagram")
    return nu, ExcitedDiagram(outer, complement)


def rho2(shape: SkewShape, S) -> ExcitedDiagram:
    """Send a pleasant diagram S to the excited diagram of lambda/mu under it.

    On each diagonal keep the top cells of D* (from :func:`rho1`), as many as
    [mu] has there.
    """
    nu, dstar = rho1(shape, S)
    by_diag: dict[int, list[Cell]] = {}
    for c in sorted(dstar.cells):
        by_diag.setdefault(c.col - c.row, []).append(c)
    need: dict[int, int] = {}
    for c in shape.mu.cells:
        need[c.col - c.row] = need.get(c.col - c.row, 0) + 1
    cells = set()
    for k, m in need.items():
        cells.update(by_diag.get(k, [])[:m])
    if not is_excited(shape, cells):
        raise InvariantViolation("truncated diagram is not excited")
    return ExcitedDiagram(shape, cells)


def pleasant_excited_sum(shape: SkewShape) -> int:
    """Sum over nu between mu and lambda of sum_D 2^{|lambda/nu| - shpeaks(D)}."""
    total = 0
    for nu in subpartitions(shape.lam):
        if not nu.contains_partition(shape.mu):
            continue
        outer = SkewShape(shape.lam, nu)
        for D in enumerate_excited(outer):
            total += 2 ** (outer.size - len(shadow_peaks(outer, D.complement())))
    return total
