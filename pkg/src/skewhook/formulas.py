"""Hook-length formulas for skew shapes and the identities around them.

Counts are computed with exact rationals and checked for integrality;
generating functions are truncated series in q (and t for traces).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial, prod
from typing import Sequence

from . import config
from .diagrams import (
    a_prime_statistic,
    a_statistic,
    enumerate_excited,
    enumerate_pleasant,
    excited_array,
    excited_peaks,
)
from .errors import InvariantViolation, ValidationError
from .linalg import det
from .series import (
    BivariateSeries,
    TruncatedSeries,
    complete_homogeneous,
    mul_geom,
    q_binomial,
    q_factorial_product,
    series_limit_q1,
)
from .shapes import Cell, Partition, SkewShape, b_statistic, durfee_cells, as_partition
from .tableaux import count_syt_bruteforce


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise InvariantViolation(f"{what} is not an integer: {x}")
    return x.numerator


# ---------------------------------------------------------------- counts


def hlf_straight(lam) -> int:
    """f^lambda = n! / prod of hooks."""
    lam = as_partition(lam)
    return _integral(Fraction(factorial(lam.size), prod(lam.hooks.values())), "hook-length count")


def nhlf_terms(shape: SkewShape) -> list[Fraction]:
    """The summands prod_{u outside D} 1/h(u), one per excited diagram."""
    lam = shape.lam
    return [Fraction(1, prod(lam.hook(u) for u in D.complement())) for D in enumerate_excited(shape)]


def nhlf(shape: SkewShape) -> int:
    """|lambda/mu|! times the sum over excited diagrams of inverse hook products."""
    return _integral(factorial(shape.size) * sum(nhlf_terms(shape), Fraction(0)), "excited-diagram count")


@dataclass(frozen=True)
class ReverseTableau:
    """Filling of mu with entries in 1..ell, rows weakly and columns strictly decreasing."""

    shape: Partition
    entries: tuple[tuple[int, ...], ...]

    def value(self, cell: tuple[int, int]) -> int:
        return self.entries[cell[0] - 1][cell[1] - 1]


def reverse_tableaux(mu, ell: int) -> list[ReverseTableau]:
    mu = as_partition(mu)
    cells = mu.cells
    vals: dict[Cell, int] = {}
    out = []

    def rec(idx: int):
        if idx == len(cells):
            out.append(ReverseTableau(mu, tuple(
                tuple(vals[Cell(i, j)] for j in range(1, p + 1)) for i, p in enumerate(mu.parts, 1)
            )))
            return
        i, j = cells[idx]
        hi = ell
        if j > 1:
            hi = min(hi, vals[Cell(i, j - 1)])
        if i > 1:
            hi = min(hi, vals[Cell(i - 1, j)] - 1)
        for v in range(1, hi + 1):
            vals[Cell(i, j)] = v
            rec(idx + 1)
        vals.pop(Cell(i, j), None)

    rec(0)
    return out


def okounkov_olshanski_terms(shape: SkewShape) -> list[int]:
    lam, mu = shape.lam, shape.mu
    return [
        prod(lam.part(T.value(u)) - (u.col - u.row) for u in mu.cells)
        for T in reverse_tableaux(mu, len(lam))
    ]


def reverse_tableau_totals(shape: SkewShape) -> tuple[int, int]:
    """(sum of the weights, number of tableaux) over RT(mu, l(lambda)).

    Column-by-column transfer: each column of mu is a strictly decreasing
    sequence, and neighbouring columns must satisfy the weak row condition.
    """
    lam, mu = shape.lam, shape.mu
    ell = len(lam)
    conj = mu.conjugate
    states: dict[tuple[int, ...], tuple[int, int]] = {(): (1, 1)}
    for j in range(1, mu.part(1) + 1):
        height = conj.part(j)
        new: dict[tuple[int, ...], tuple[int, int]] = {}
        for col in combinations(range(ell, 0, -1), height):
            w = prod(lam.part(col[i - 1]) - (j - i) for i in range(1, height + 1))
            for prev, (total, count) in states.items():
                if prev and any(col[i] > prev[i] for i in range(height)):
                    continue
                t, c = new.get(col, (0, 0))
                new[col] = (t + total * w, c + count)
        states = new
    return sum(t for t, _ in states.values()), sum(c for _, c in states.values())


def okounkov_olshanski(shape: SkewShape) -> int:
    lam = shape.lam
    weight, _ = reverse_tableau_totals(shape)
    total = Fraction(factorial(shape.size), prod(lam.hooks.values())) * weight
    return _integral(total, "reverse-tableau count")


def jt_count(shape: SkewShape) -> int:
    """f^{lambda/mu} as the q = 1 value of s(1, q, ...) * prod_{i<=n} (1 - q^i)."""
    n = shape.size
    N = n * (n - 1) // 2
    numerator = jt_series(shape, N) * q_factorial_product(n, N)
    return _integral(series_limit_q1(numerator, N), "Jacobi-Trudi count")


def jt_nonzero_terms(shape: SkewShape) -> int:
    """Number of permutations giving a nonzero term of the Jacobi-Trudi determinant."""
    lam, mu = shape.lam, shape.mu
    n = len(lam)
    return sum(
        1 for sigma in permutations(range(1, n + 1))
        if all(lam.part(i) - mu.part(sigma[i - 1]) - i + sigma[i - 1] >= 0 for i in range(1, n + 1))
    )


COUNT_METHODS = ("nhlf", "oo", "brute", "jt")


def count_syt(shape: SkewShape, method: str) -> tuple[int, int]:
    """(f^{lambda/mu}, number of summands) by the chosen method."""
    if method == "nhlf":
        return nhlf(shape), len(enumerate_excited(shape))
    if method == "oo":
        return okounkov_olshanski(shape), reverse_tableau_totals(shape)[1]
    if method == "brute":
        f = count_syt_bruteforce(shape)
        return f, f
    if method == "jt":
        config.check_guard("series_degree", shape.size * (shape.size - 1) // 2)
        return jt_count(shape), jt_nonzero_terms(shape)
    raise ValidationError(f"unknown counting method {method!r}")


# ---------------------------------------------------------------- q-series


def _hook_product(lam: Partition, cells, N: int, start: TruncatedSeries | None = None) -> TruncatedSeries:
    s = start if start is not None else TruncatedSeries.one(N)
    for u in cells:
        s = mul_geom(s, lam.hook(u))
    return s


def stanley_product(lam, N: int) -> TruncatedSeries:
    """s_lambda(1, q, q^2, ...) = q^{b(lambda)} prod 1/(1 - q^h)."""
    lam = as_partition(lam)
    return _hook_product(lam, lam.cells, N).shift(b_statistic(lam))


def rpp_product(lam, N: int) -> TruncatedSeries:
    """RPP generating function of a straight shape: prod 1/(1 - q^h)."""
    lam = as_partition(lam)
    return _hook_product(lam, lam.cells, N)


def ssyt_series_excited(shape: SkewShape, N: int) -> TruncatedSeries:
    """Sum over excited D of q^{a(D)} prod_{u outside D} 1/(1 - q^{h(u)})."""
    lam = shape.lam
    total = TruncatedSeries.zero(N)
    for D in enumerate_excited(shape):
        a = a_statistic(D)
        if a > N:
            continue
        total = total + _hook_product(lam, D.complement(), N).shift(a)
    return total


def _h_series(N: int, kmax: int) -> list[TruncatedSeries]:
    """h_k(1, q, q^2, ...) = prod_{i<=k} 1/(1 - q^i) for k = 0..kmax."""
    out = [TruncatedSeries.one(N)]
    for k in range(1, kmax + 1):
        out.append(mul_geom(out[-1], k))
    return out


def jt_series(shape: SkewShape, N: int) -> TruncatedSeries:
    """det[h_{lambda_i - mu_j - i + j}] with h specialized at 1, q, q^2, ..."""
    lam, mu = shape.lam, shape.mu
    n = len(lam)
    h = _h_series(N, lam.part(1) + n)
    zero = TruncatedSeries.zero(N)
    matrix = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            k = lam.part(i) - mu.part(j) - i + j
            row.append(h[k] if k >= 0 else zero)
        matrix.append(row)
    return det(matrix, zero, TruncatedSeries.one(N))


def rpp_series_excited(shape: SkewShape, N: int) -> TruncatedSeries:
    """Sum over excited D of q^{a'(D)} prod_{u outside D} 1/(1 - q^{h(u)})."""
    lam = shape.lam
    total = TruncatedSeries.zero(N)
    for D in enumerate_excited(shape):
        a = a_prime_statistic(D)
        if a > N:
            continue
        total = total + _hook_product(lam, D.complement(), N).shift(a)
    return total


def rpp_series_pleasant(shape: SkewShape, N: int) -> TruncatedSeries:
    """Sum over pleasant S of prod_{u in S} q^{h(u)} / (1 - q^{h(u)})."""
    lam = shape.lam
    total = TruncatedSeries.zero(N)
    for S in enumerate_pleasant(shape, max_weight=N):
        a = sum(lam.hook(u) for u in S)
        if a > N:
            continue
        total = total + _hook_product(lam, S, N).shift(a)
    return total


def _split_product(lam: Partition, cells, box, N: int, start: BivariateSeries) -> BivariateSeries:
    s = start
    for u in cells:
        s = s.mul_geom(lam.hook(u), u in box)
    return s


def gansner_product(lam, N: int) -> BivariateSeries:
    """prod_{u in Durfee square} 1/(1 - t q^h) prod_{other u} 1/(1 - q^h)."""
    lam = as_partition(lam)
    return _split_product(lam, lam.cells, durfee_cells(lam, 0), N, BivariateSeries.one(N))


def trace_series_rpp(shape: SkewShape, N: int, method: str = "excited") -> BivariateSeries:
    """Sum over RPP of q^{|pi|} t^{tr(pi)}, from excited diagrams or pleasant diagrams."""
    lam = shape.lam
    box = durfee_cells(lam, 0)
    total = BivariateSeries.zero(N)
    if method == "excited":
        for D in enumerate_excited(shape):
            peaks = excited_peaks(D)
            a = sum(lam.hook(u) for u in peaks)
            if a > N:
                continue
            start = BivariateSeries.monomial(a, len(peaks & box), N)
            total = total + _split_product(lam, D.complement(), box, N, start)
    elif method == "pleasant":
        for S in enumerate_pleasant(shape, max_weight=N):
            a = sum(lam.hook(u) for u in S)
            if a > N:
                continue
            start = BivariateSeries.monomial(a, len(S & box), N)
            total = total + _split_product(lam, S, box, N, start)
    else:
        raise ValidationError(f"unknown method {method!r}")
    return total


def trace_series_ssyt(shape: SkewShape, N: int) -> BivariateSeries:
    """Sum over excited D of q^{a(D)} t^{c(D)} with Durfee-split hook factors."""
    lam = shape.lam
    box = durfee_cells(lam, 0)
    total = BivariateSeries.zero(N)
    for D in enumerate_excited(shape):
        a = a_statistic(D)
        if a > N:
            continue
        start = BivariateSeries.monomial(a, len(excited_array(D) & box), N)
        total = total + _split_product(lam, D.complement(), box, N, start)
    return total


def hook_content_series(lam, M: int, N: int) -> TruncatedSeries:
    """SSYT of straight shape with entries in 0..M: q^b prod (1 - q^{M+1+c}) / (1 - q^h)."""
    lam = as_partition(lam)
    if len(lam) > M + 1:
        # the first column holds a cell with M + 1 + c = 0, a vanishing factor
        return TruncatedSeries.zero(N)
    s = stanley_product(lam, N)
    for u in lam.cells:
        e = M + 1 + u.col - u.row
        if e <= N:
            s = s - s.shift(e)
    return s


# ---------------------------------------------------------------- bounded parts


def _path_cells(shape: SkewShape, D) -> list[Cell]:
    """Cells of [lambda] outside D as a lattice path from (lambda'_1, 1) to (1, lambda_1)."""
    lam = shape.lam
    cells = sorted(D.complement(), key=lambda c: (c.col - c.row, c.col))
    if not cells or cells[0] != (len(lam), 1) or cells[-1] != (1, lam.part(1)):
        raise InvariantViolation("excited complement does not run between the extreme cells")
    for a, b in zip(cells, cells[1:]):
        if (b.row, b.col) not in ((a.row - 1, a.col), (a.row, a.col + 1)):
            raise InvariantViolation("excited complement of a border strip is not a lattice path")
    return cells


def inverted_hook_paths(k: int, d: int) -> list[tuple[list[Cell], frozenset[Cell], int]]:
    """(path, forced cells, a) for each path of the inverted hook k^d/(k-1)^(d-1)."""
    shape = SkewShape(Partition((k,) * d), Partition((k - 1,) * (d - 1)))
    out = []
    for D in enumerate_excited(shape):
        path = _path_cells(shape, D)
        forced = excited_array(D)
        out.append((path, forced, a_statistic(D)))
    return out


def bounded_parts_inverted_hook(k: int, d: int, M: int, N: int) -> TruncatedSeries:
    """SSYT of k^d/(k-1)^(d-1) with entries in 0..M, as a sum over lattice paths.

    Each path contributes q^{a} h_{M-d+1}(1, q^{h(u_1)}, ..., q^{h(u_{k+d-1})}).
    """
    if k < 1 or d < 1 or M < 0:
        raise ValidationError("need k, d >= 1 and M >= 0")
    lam = Partition((k,) * d)
    total = TruncatedSeries.zero(N)
    for path, _, a in inverted_hook_paths(k, d):
        if a > N:
            continue
        exps = [0] + [lam.hook(u) for u in path]
        total = total + complete_homogeneous(M - d + 1, exps, N).shift(a)
    return total


def is_border_strip(shape: SkewShape) -> bool:
    cells = shape.cell_set
    if not cells:
        return False
    for i, j in cells:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells:
            return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def trim_skew_shape(shape: SkewShape) -> SkewShape:
    """Drop top rows and left columns lying entirely in mu.

    This translates the cells of lambda/mu without changing them otherwise, so
    tableaux of the two shapes correspond entry for entry.
    """
    lam, mu = list(shape.lam.parts), list(shape.mu.parts) + [0] * len(shape.lam)
    mu = mu[: len(lam)]
    while lam and lam[0] == mu[0]:
        lam.pop(0)
        mu.pop(0)
    while lam and all(m >= 1 for m in mu):
        lam = [p - 1 for p in lam if p > 1]
        mu = [m - 1 for m in mu][: len(lam)]
    return SkewShape(Partition(tuple(lam)), Partition(tuple(mu)))


def outer_corners(lam: Partition) -> list[Cell]:
    return [Cell(i, lam.part(i)) for i in range(1, len(lam) + 1) if lam.part(i) > lam.part(i + 1)]


def bounded_parts_border_strip(shape: SkewShape, M: int, N: int) -> TruncatedSeries:
    """SSYT of a border strip with entries in 0..M, summed over lattice paths.

    For each path the array on it is A_D plus nonnegative extras g.  The entry
    of the tableau at an outer corner (x, y) of lambda is the sum of the array
    over the path cells in [1..x] x [1..y]; all of these must be <= M.
    """
    if not is_border_strip(shape):
        raise ValidationError(f"{shape} is not a border strip")
    if M < 0:
        raise ValidationError("M must be nonnegative")
    shape = trim_skew_shape(shape)
    lam = shape.lam
    corners = outer_corners(lam)
    total = [0] * (N + 1)
    for D in enumerate_excited(shape):
        path = _path_cells(shape, D)
        forced = excited_array(D)
        base = sum(lam.hook(u) for u in forced)
        if base > N:
            continue
        hooks = [lam.hook(u) for u in path]
        # which corner rectangles contain each path cell
        member = [[k for k, (x, y) in enumerate(corners) if u.row <= x and u.col <= y] for u in path]
        load = [0] * len(corners)
        for idx, u in enumerate(path):
            if u in forced:
                for k in member[idx]:
                    load[k] += 1
        if any(v > M for v in load):
            continue

        def rec(idx: int, weight: int):
            if idx == len(path):
                total[weight] += 1
                return
            h = hooks[idx]
            g = 0
            while weight + g * h <= N:
                if any(load[k] + g > M for k in member[idx]):
                    break
                for k in member[idx]:
                    load[k] += g
                rec(idx + 1, weight + g * h)
                for k in member[idx]:
                    load[k] -= g
                g += 1

        rec(0, base)
    return TruncatedSeries(total, N)


# ---------------------------------------------------------------- factorial Schur


def factorial_schur(mu, d: int, x: Sequence, a: Sequence) -> Fraction:
    """det[(x_j - a_1) ... (x_j - a_{mu_i + d - i})] / prod_{i<j} (x_i - x_j)."""
    mu = as_partition(mu)
    if len(mu) > d:
        raise ValidationError("mu has more than d rows")
    if len(x) != d:
        raise ValidationError(f"need exactly d = {d} values of x")
    x = [Fraction(v) for v in x]
    a = [Fraction(v) for v in a]
    if len(set(x)) != d:
        raise ValidationError("x values must be distinct (the Vandermonde denominator vanishes)")
    need = mu.part(1) + d - 1
    if len(a) < need:
        raise ValidationError(f"need at least {need} shift parameters a")
    matrix = [
        [prod((x[j] - a[p] for p in range(mu.part(i) + d - i)), start=Fraction(1)) for j in range(d)]
        for i in range(1, d + 1)
    ]
    num = det(matrix, Fraction(0), Fraction(1))
    den = prod((x[i] - x[j] for i in range(d) for j in range(i + 1, d)), start=Fraction(1))
    return num / den


@dataclass(frozen=True)
class GrassmannianPair:
    d: int
    n: int
    v: tuple[int, ...]
    w: tuple[int, ...]


def grassmannian_permutation(lam, d: int, n: int) -> tuple[int, ...]:
    """v with v(d+1-i) = lambda_i + d + 1 - i, the other values increasing after position d."""
    lam = as_partition(lam)
    if len(lam) > d or lam.part(1) > n - d:
        raise ValidationError(f"{lam} does not fit in a {d} x {n - d} box")
    head = [lam.part(d + 1 - p) + p for p in range(1, d + 1)]
    tail = [m for m in range(1, n + 1) if m not in head]
    return tuple(head + tail)


def grassmannian_from_shape(lam, mu, d: int, n: int) -> GrassmannianPair:
    return GrassmannianPair(d, n, grassmannian_permutation(lam, d, n), grassmannian_permutation(mu, d, n))


def factorial_schur_identity_sides(shape: SkewShape, d: int, n: int, y: Sequence) -> tuple[Fraction, Fraction]:
    """Both sides of s_mu(y_{v(1)}, ..., y_{v(d)} | y_1, ..., y_{n-1}) = sum_D prod (y_{v(d-i+1)} - y_{v(d+j)})."""
    v = grassmannian_permutation(shape.lam, d, n)
    if len(y) < n:
        raise ValidationError(f"need {n} values y_1..y_n")
    Y = [None] + [Fraction(t) for t in y]
    lhs = factorial_schur(shape.mu, d, [Y[v[j]] for j in range(d)], Y[1:n])
    rhs = Fraction(0)
    for D in enumerate_excited(shape):
        rhs += prod((Y[v[d - i]] - Y[v[d + j - 1]] for i, j in D.cells), start=Fraction(1))
    return lhs, rhs


# ---------------------------------------------------------------- inverted hook identities


def reverse_hook_identity_check(k: int, d: int) -> bool:
    """Check the lattice-path identities behind the inverted hook k^d/(k-1)^(d-1).

    * the paths are the excited complements and there are C(k+d-2, k-1) of them;
    * sum_paths prod_{(i,j) on path} 1/(i+j-1) = C(k+d-2, k-1) / (k+d-1)!;
    * a(D) = C(d, 2) + (cells of the box south-east of the path);
    * prod_{i<=k+d-1} (1 - q^i) sum_paths q^{area} prod_{u on path} 1/(1 - q^{h(u)})
      equals the q-binomial [k+d-2 choose k-1].
    """
    if k < 1 or d < 1:
        raise ValidationError("need k, d >= 1")
    lam = Partition((k,) * d)
    paths = inverted_hook_paths(k, d)
    count = comb(k + d - 2, k - 1)
    if len(paths) != count:
        return False
    n = k + d - 1
    rational = sum((Fraction(1, prod(i + j - 1 for i, j in path)) for path, _, _ in paths), Fraction(0))
    if rational != Fraction(count, factorial(n)):
        return False
    N = (k - 1) * (d - 1) + 2
    total = TruncatedSeries.zero(N)
    for path, _, a in paths:
        on_path = set(path)
        area = sum(1 for c in lam.cells if c not in on_path and any(
            p.row < c.row and p.col == c.col for p in path))
        if a != comb(d, 2) + area:
            return False
        total = total + _hook_product(lam, path, N).shift(area)
    return total * q_factorial_product(n, N) == q_binomial(k + d - 2, k - 1, N)
