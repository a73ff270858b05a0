"""The Hillman-Grassl correspondence, RSK, and Greene's chain statistics."""

from collections import deque
from dataclasses import dataclass

from . import config
from .diagrams import ExcitedDiagram, enumerate_excited, excited_array
from .errors import InvariantViolation, ValidationError
from .shapes import Cell, Partition, SkewShape, durfee_rectangle
from .tableaux import Tableau, TableauClass, enumerate_ssyt_bounded, validate


@dataclass(frozen=True)
class HGArray:
    """Nonnegative integer array on the cells of [lambda]."""

    shape: Partition
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        values = tuple(tuple(int(v) for v in r) for r in self.values)
        if tuple(len(r) for r in values) != self.shape.parts:
            raise ValidationError(f"array rows do not fit the shape {self.shape}")
        if any(v < 0 for r in values for v in r):
            raise ValidationError("array entries must be nonnegative")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_rows(cls, rows) -> "HGArray":
        rows = tuple(tuple(r) for r in rows)
        return cls(Partition(tuple(len(r) for r in rows)), rows)

    @classmethod
    def from_entries(cls, lam: Partition, entries: dict) -> "HGArray":
        return cls(lam, tuple(
            tuple(entries.get((i, j), 0) for j in range(1, p + 1)) for i, p in enumerate(lam.parts, 1)
        ))

    def entry(self, cell: tuple[int, int]) -> int:
        return self.values[cell[0] - 1][cell[1] - 1]

    @property
    def entries(self) -> dict[Cell, int]:
        return {c: self.entry(c) for c in self.shape.cells}

    def support(self) -> frozenset[Cell]:
        return frozenset(c for c, v in self.entries.items() if v)

    @property
    def size(self) -> int:
        """|A|, the plain sum of entries."""
        return sum(map(sum, self.values))

    def weight(self) -> int:
        """omega(A) = sum of A_u h(u)."""
        lam = self.shape
        return sum(v * lam.hook(c) for c, v in self.entries.items() if v)

    def restrict(self, k: int) -> list[list[int]]:
        """The subarray A_k on the Durfee rectangle of index k."""
        rows, cols = durfee_rectangle(self.shape, k)
        return [[self.values[i][j] for j in range(cols)] for i in range(rows)]

    def to_rows(self) -> list[list[int]]:
        return [list(r) for r in self.values]


def _as_straight_rpp(pi: Tableau) -> list[list[int]]:
    if not validate(pi, TableauClass.RPP):
        raise ValidationError("input is not a reverse plane partition")
    return [[0 if v is None else v for v in row] for row in pi.to_rows()]


def hg_forward(pi: Tableau) -> HGArray:
    """Hillman-Grassl map Phi; skew RPP are zero-padded to the straight shape first."""
    lam = pi.shape.lam
    conj = lam.conjugate
    p = _as_straight_rpp(pi)
    counts: dict[Cell, int] = {}
    while True:
        start_col = next((j for j in range(1, lam.part(1) + 1) if p[conj.part(j) - 1][j - 1]), None)
        if start_col is None:
            break
        i, j = conj.part(start_col), start_col
        path = []
        while True:
            path.append((i, j))
            if i > 1 and p[i - 2][j - 1] == p[i - 1][j - 1]:
                i -= 1
            elif j < lam.part(i):
                j += 1
            else:
                break
        for a, b in path:
            p[a - 1][b - 1] -= 1
            if p[a - 1][b - 1] < 0:
                raise InvariantViolation("Hillman-Grassl path produced a negative entry")
        key = Cell(i, start_col)
        counts[key] = counts.get(key, 0) + 1
    return HGArray.from_entries(lam, counts)


def hg_inverse(A: HGArray, mu=()) -> Tableau:
    """Inverse map Omega, producing an RPP of shape lambda (or lambda/mu when given).

    With ``mu`` the result must vanish on [mu]; the zero cells are dropped.
    """
    lam = A.shape
    conj = lam.conjugate
    p = [[0] * n for n in lam.parts]
    order = sorted(
        ((c, v) for c, v in A.entries.items() if v),
        key=lambda cv: (-cv[0].col, cv[0].row),
    )
    for (r, c), mult in order:
        for _ in range(mult):
            i, j = r, lam.part(r)
            path = []
            while True:
                path.append((i, j))
                if i < len(lam) and j <= lam.part(i + 1) and p[i][j - 1] == p[i - 1][j - 1]:
                    i += 1
                elif j > c:
                    j -= 1
                else:
                    break
            if i != conj.part(c):
                raise InvariantViolation(f"inverse path from row {r} ended at row {i}, not the bottom of column {c}")
            for a, b in path:
                p[a - 1][b - 1] += 1
    pi = Tableau(SkewShape(lam), tuple(tuple(r) for r in p))
    mu = Partition(tuple(mu))
    if not mu.parts:
        return pi
    shape = SkewShape(lam, mu)
    if any(pi.entry(c) for c in mu.cells):
        raise ValidationError("array does not come from an RPP of the skew shape")
    return Tableau.from_entries(shape, {c: pi.entry(c) for c in shape.cells})


# ---------------------------------------------------------------- RSK


@dataclass(frozen=True)
class BiTableauPair:
    insertion: tuple[tuple[int, ...], ...]
    recording: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.insertion))


def _check_rect(M) -> list[list[int]]:
    M = [list(map(int, r)) for r in M]
    if M and any(len(r) != len(M[0]) for r in M):
        raise ValidationError("matrix must be rectangular")
    if any(v < 0 for r in M for v in r):
        raise ValidationError("matrix entries must be nonnegative")
    return M


def rsk(M) -> BiTableauPair:
    """Row-insertion RSK on the biword of M read row by row, left to right."""
    M = _check_rect(M)
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for i, row in enumerate(M, 1):
        for j, mult in enumerate(row, 1):
            for _ in range(mult):
                x = j
                r = 0
                while True:
                    if r == len(P):
                        P.append([x])
                        Q.append([i])
                        break
                    line = P[r]
                    pos = next((k for k, y in enumerate(line) if y > x), None)
                    if pos is None:
                        line.append(x)
                        Q[r].append(i)
                        break
                    line[pos], x = x, line[pos]
                    r += 1
    return BiTableauPair(tuple(map(tuple, P)), tuple(map(tuple, Q)))


def flip_rows(M) -> list[list[int]]:
    """Reverse the order of the rows (bottom row becomes the top row)."""
    return [list(r) for r in reversed(M)]


def flip_cols(M) -> list[list[int]]:
    """Reverse each row (rightmost column becomes the leftmost)."""
    return [list(reversed(r)) for r in M]


# ---------------------------------------------------------------- Greene statistics


def _chain_profile(M, ascending: bool, tmax: int) -> list[int]:
    """Best combined chain lengths for t = 0..tmax via successive shortest paths.

    Ascending chains move weakly north and weakly east and may reuse a cell as
    often as its entry; descending chains move strictly south-east and take at
    most one copy of a cell per chain.
    """
    cells = [(i, j, v) for i, r in enumerate(M) for j, v in enumerate(r) if v]
    n = len(cells)
    src, dst = 2 * n, 2 * n + 1
    graph: list[list[list[int]]] = [[] for _ in range(2 * n + 2)]

    def arc(a: int, b: int, cap: int, cost: int):
        graph[a].append([b, cap, cost, len(graph[b])])
        graph[b].append([a, 0, -cost, len(graph[a]) - 1])

    for k, (i, j, v) in enumerate(cells):
        arc(src, 2 * k, tmax, 0)
        arc(2 * k + 1, dst, tmax, 0)
        if ascending:
            arc(2 * k, 2 * k + 1, 1, -v)
        else:
            arc(2 * k, 2 * k + 1, v, -1)
        for m, (a, b, _) in enumerate(cells):
            if m == k:
                continue
            if ascending:
                ok = a <= i and b >= j
            else:
                ok = a > i and b > j
            if ok:
                arc(2 * k + 1, 2 * m, tmax, 0)

    profile = [0]
    total = 0
    for _ in range(tmax):
        dist = [None] * len(graph)
        prev: list[tuple[int, int] | None] = [None] * len(graph)
        dist[src] = 0
        queue = deque([src])
        queued = [False] * len(graph)
        queued[src] = True
        while queue:
            a = queue.popleft()
            queued[a] = False
            for idx, (b, cap, cost, _) in enumerate(graph[a]):
                if cap > 0 and (dist[b] is None or dist[a] + cost < dist[b]):
                    dist[b] = dist[a] + cost
                    prev[b] = (a, idx)
                    if not queued[b]:
                        queued[b] = True
                        queue.append(b)
        if dist[dst] is None or dist[dst] >= 0:
            profile.append(total)
            continue
        node = dst
        while node != src:
            a, idx = prev[node]
            e = graph[a][idx]
            e[1] -= 1
            graph[node][e[3]][1] += 1
            node = a
        total -= dist[dst]
        profile.append(total)
    return profile


def greene_profile(M, tmax: int) -> tuple[list[int], list[int]]:
    """Lists (ac_0..ac_tmax, dc_0..dc_tmax)."""
    M = _check_rect(M)
    config.check_guard("greene_area", sum(len(r) for r in M))
    return _chain_profile(M, True, tmax), _chain_profile(M, False, tmax)


def greene_stats(M, t: int) -> tuple[int, int]:
    """(ac_t(M), dc_t(M)): the largest combined sizes of t ascending / descending chains."""
    if t < 1:
        raise ValidationError("t must be positive")
    ac, dc = greene_profile(M, t)
    return ac[t], dc[t]


def diagonal_partition(pi: Tableau, k: int) -> Partition:
    """The entries of the zero-padded RPP on diagonal k, sorted decreasingly."""
    p = pi.padded()
    vals = sorted((v for c, v in p.entries.items() if c.col - c.row == k), reverse=True)
    return Partition(tuple(v for v in vals if v))


# ---------------------------------------------------------------- restricted bijection


def matching_excited_diagram(shape: SkewShape, A: HGArray) -> ExcitedDiagram | None:
    """The excited diagram D with supp(A) outside D and A positive on supp(A_D), if unique."""
    support = A.support()
    found = [
        D for D in enumerate_excited(shape)
        if not (support & D.cells) and excited_array(D) <= support
    ]
    if len(found) > 1:
        raise InvariantViolation("array matches several excited diagrams")
    return found[0] if found else None


def restricted_image_check(shape: SkewShape, T: Tableau) -> ExcitedDiagram:
    if T.shape != shape or not validate(T, TableauClass.SSYT):
        raise ValidationError("input is not a semistandard tableau of the shape")
    D = matching_excited_diagram(shape, hg_forward(T))
    if D is None:
        raise InvariantViolation("Hillman-Grassl image of the SSYT lies in no excited class")
    return D


def excited_arrays_up_to(shape: SkewShape, max_weight: int) -> set[HGArray]:
    """Every A in the union of the classes A*_D with omega(A) <= max_weight.

    Each class is A_D plus an arbitrary nonnegative array supported off D.
    """
    lam = shape.lam
    out: set[HGArray] = set()
    for D in enumerate_excited(shape):
        base = {c: 1 for c in excited_array(D)}
        budget = max_weight - sum(lam.hook(c) for c in base)
        if budget < 0:
            continue
        free = [c for c in lam.cells if c not in D.cells]
        values = dict(base)

        def rec(idx: int, left: int):
            if idx == len(free):
                out.add(HGArray.from_entries(lam, values))
                return
            c = free[idx]
            h = lam.hook(c)
            start = values.get(c, 0)
            for extra in range(left // h + 1):
                values[c] = start + extra
                rec(idx + 1, left - extra * h)
            values[c] = start

        rec(0, budget)
    return out


def restricted_bijection_check(shape: SkewShape, max_weight: int) -> int:
    """Compare Phi(SSYT with |T| <= W) with the excited arrays of weight <= W.

    Returns the common size; a mismatch raises an invariant violation.
    """
    images = {hg_forward(T) for T in enumerate_ssyt_bounded(shape, max_size=max_weight)}
    arrays = excited_arrays_up_to(shape, max_weight)
    if images != arrays:
        raise InvariantViolation(
            f"restricted Hillman-Grassl images differ from the excited arrays for {shape}: "
            f"{len(images - arrays)} images outside, {len(arrays - images)} arrays missed"
        )
    return len(images)
