"""Oracle-equivalence suites over small universes of shapes.

Each suite checks that independent computations agree on every case and
returns a summary; the first disagreement raises ``InvariantViolation``.
"""

import random
from dataclasses import dataclass, field

from .diagrams import (
    count_excited_determinant,
    count_pleasant,
    enumerate_excited,
    enumerate_flagged_tableaux,
    enumerate_pleasant,
    enumerate_pleasant_bruteforce,
    flag_vector,
    from_flagged_tableau,
    is_pleasant,
    pleasant_excited_sum,
)
from .errors import InvariantViolation, ValidationError
from .formulas import (
    bounded_parts_border_strip,
    factorial_schur_identity_sides,
    is_border_strip,
    jt_count,
    jt_series,
    nhlf,
    okounkov_olshanski,
    rpp_series_excited,
    rpp_series_pleasant,
    ssyt_series_excited,
    trace_series_rpp,
    trace_series_ssyt,
)
from .hillman_grassl import (
    HGArray,
    diagonal_partition,
    flip_cols,
    flip_rows,
    greene_profile,
    hg_forward,
    hg_inverse,
    restricted_bijection_check,
    rsk,
)
from .shapes import Partition, SkewShape, partitions_of, skew_shapes_in_box, subpartitions
from .tableaux import (
    count_syt_bruteforce,
    random_rpp,
    rpp_series_bruteforce,
    rpp_trace_series_bruteforce,
    ssyt_series_bruteforce,
    ssyt_trace_series_bruteforce,
    trace_k,
)

# straight shape classes for the randomized Hillman-Grassl suite
HG_SHAPES: tuple[tuple[int, ...], ...] = (
    (3, 3, 3, 3),
    (4, 3, 2, 1),
    (5, 4, 2, 1),
    (6, 3, 2, 1),
    (4, 4, 3, 1),
    (5, 1, 1, 1, 1),
    (6, 6),
    (4, 3, 2, 1, 1, 1),
)
# skew shapes for the pleasant-support check
HG_SKEW_SHAPES: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = (
    ((4, 4, 3, 1), (2, 1)),
    ((3, 3, 3, 3), (2, 2)),
    ((5, 4, 2, 1), (3,)),
    ((2, 2, 2, 1), (1, 1)),
)


@dataclass
class SuiteResult:
    suite: str
    cases: int
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "details": self.details}


def _universe(rows: int, cols: int, max_cells: int | None) -> list[SkewShape]:
    return [s for s in skew_shapes_in_box(rows, cols) if max_cells is None or s.lam.size <= max_cells]


def _fail(suite: str, shape: SkewShape, what: str):
    raise InvariantViolation(f"{suite} suite: {what} disagree on {shape}")


def counts_suite(max_cells: int | None = None, seed: int = 0, jt_cells: int = 12, extras: bool = True) -> SuiteResult:
    """SYT counts by NHLF, reverse tableaux and brute force, for lambda in 5x5.

    With ``extras`` the Jacobi-Trudi count (for |lambda/mu| <= jt_cells), the
    three excited-diagram counts and the flagged-tableau bijection are checked too.
    """
    shapes = _universe(5, 5, max_cells)
    for s in shapes:
        f = nhlf(s)
        if not f == okounkov_olshanski(s) == count_syt_bruteforce(s):
            _fail("counts", s, "SYT counts")
        if not extras:
            continue
        if s.size <= jt_cells and jt_count(s) != f:
            _fail("counts", s, "Jacobi-Trudi and hook-length counts")
        excited = enumerate_excited(s)
        flagged = enumerate_flagged_tableaux(s.mu, flag_vector(s))
        if not len(excited) == count_excited_determinant(s) == len(flagged):
            _fail("counts", s, "excited-diagram counts")
        if {from_flagged_tableau(T, s) for T in flagged} != set(excited):
            _fail("counts", s, "flagged tableaux and excited diagrams")
    return SuiteResult("counts", len(shapes), {"jt_cells": jt_cells if extras else None})


def series_suite(max_cells: int | None = None, seed: int = 0, deg: int = 12) -> SuiteResult:
    """SSYT, RPP and trace series by formula and by enumeration, for lambda in 4x4."""
    shapes = _universe(4, 4, max_cells)
    for s in shapes:
        if not ssyt_series_excited(s, deg) == jt_series(s, deg) == ssyt_series_bruteforce(s, deg):
            _fail("series", s, "SSYT series")
        if not rpp_series_pleasant(s, deg) == rpp_series_excited(s, deg) == rpp_series_bruteforce(s, deg):
            _fail("series", s, "RPP series")
        rpp_trace = rpp_trace_series_bruteforce(s, deg)
        if not trace_series_rpp(s, deg) == trace_series_rpp(s, deg, "pleasant") == rpp_trace:
            _fail("series", s, "RPP trace series")
        if trace_series_ssyt(s, deg) != ssyt_trace_series_bruteforce(s, deg):
            _fail("series", s, "SSYT trace series")
    return SuiteResult("series", len(shapes), {"deg": deg})


def _random_array(lam: Partition, max_entry: int, rng: random.Random, support=None) -> HGArray:
    cells = lam.cells if support is None else sorted(support)
    return HGArray.from_entries(lam, {c: rng.randint(0 if support is None else 1, max_entry) for c in cells})


def _check_hg_invariants(pi, A: HGArray) -> None:
    lam = A.shape
    if A.weight() != pi.size:
        raise InvariantViolation(f"hg suite: weight not preserved on {lam}")
    for k in SkewShape(lam).diagonal_range():
        Ak = A.restrict(k)
        if trace_k(pi, k) != sum(map(sum, Ak)):
            raise InvariantViolation(f"hg suite: trace {k} differs on {lam}")
        nu = diagonal_partition(pi, k)
        tmax = max(len(nu), nu.part(1), 1)
        ac, dc = greene_profile(Ak, tmax)
        conj = nu.conjugate
        for t in range(1, tmax + 1):
            if ac[t] != sum(nu.parts[:t]) or dc[t] != sum(conj.parts[:t]):
                raise InvariantViolation(f"hg suite: Greene statistics differ on {lam}, diagonal {k}, t={t}")
        if not rsk(flip_rows(Ak)).shape == nu == rsk(flip_cols(Ak)).shape:
            raise InvariantViolation(f"hg suite: RSK shape differs on {lam}, diagonal {k}")


def hg_suite(max_cells: int | None = 12, seed: int = 0, trials: int = 1000, max_entry: int = 5) -> SuiteResult:
    """Round trips, weight, trace, Greene and RSK invariants on random RPP and arrays."""
    rng = random.Random(seed)
    shapes = [Partition(p) for p in HG_SHAPES if max_cells is None or sum(p) <= max_cells]
    for lam in shapes:
        shape = SkewShape(lam)
        for _ in range(trials):
            pi = random_rpp(shape, max_entry, rng)
            A = hg_forward(pi)
            if hg_inverse(A) != pi:
                raise InvariantViolation(f"hg suite: inverse does not undo the forward map on {lam}")
            _check_hg_invariants(pi, A)
            B = _random_array(lam, max_entry, rng)
            if hg_forward(hg_inverse(B)) != B:
                raise InvariantViolation(f"hg suite: forward map does not undo the inverse on {lam}")
    skew = [SkewShape.of(l, m) for l, m in HG_SKEW_SHAPES if max_cells is None or sum(l) <= max_cells]
    for shape in skew:
        pleasant = enumerate_pleasant(shape)
        for _ in range(trials):
            pi = random_rpp(shape, max_entry, rng)
            if not is_pleasant(shape, hg_forward(pi).support()):
                raise InvariantViolation(f"hg suite: support of a skew RPP image is not pleasant on {shape}")
            S = rng.choice(pleasant)
            try:
                hg_inverse(_random_array(shape.lam, max_entry, rng, S), shape.mu.parts)
            except ValidationError:
                raise InvariantViolation(f"hg suite: pleasant-supported array is not a skew RPP image on {shape}")
    return SuiteResult("hg", len(shapes) + len(skew), {"trials": trials, "max_entry": max_entry, "seed": seed})


def pleasant_suite(max_cells: int | None = 9, seed: int = 0) -> SuiteResult:
    """Brute force over all subsets vs excited complements vs both counting formulas."""
    limit = 9 if max_cells is None else max_cells
    shapes = [SkewShape(lam, mu) for n in range(limit + 1) for lam in partitions_of(n) for mu in subpartitions(lam)]
    for s in shapes:
        found = enumerate_pleasant(s)
        if found != enumerate_pleasant_bruteforce(s):
            _fail("pleasant", s, "pleasant diagram sets")
        if not len(found) == count_pleasant(s) == pleasant_excited_sum(s):
            _fail("pleasant", s, "pleasant counts")
    return SuiteResult("pleasant", len(shapes))


def factorial_suite(max_cells: int | None = None, seed: int = 0, points: int = 10) -> SuiteResult:
    """Factorial Schur identity at random integer points for lambda in 3x3."""
    rng = random.Random(seed)
    shapes = _universe(3, 3, max_cells)
    for s in shapes:
        for _ in range(points):
            y = rng.sample(range(-50, 51), 6)
            lhs, rhs = factorial_schur_identity_sides(s, 3, 6, y)
            if lhs != rhs:
                _fail("factorial", s, f"identity sides at y={y}")
    return SuiteResult("factorial", len(shapes), {"points": points, "seed": seed})


def bounded_suite(max_cells: int | None = None, seed: int = 0, deg: int = 10, max_m: int = 5) -> SuiteResult:
    """Bounded-parts border strip series vs bounded SSYT enumeration, border strips in 4x4."""
    shapes = [s for s in _universe(4, 4, max_cells) if is_border_strip(s)]
    for s in shapes:
        for M in range(max_m + 1):
            if bounded_parts_border_strip(s, M, deg) != ssyt_series_bruteforce(s, deg, max_entry=M):
                _fail("bounded", s, f"bounded series with M={M}")
    return SuiteResult("bounded", len(shapes), {"deg": deg, "max_m": max_m})


def bijection_suite(max_cells: int | None = None, seed: int = 0, weight: int = 10) -> SuiteResult:
    """Restricted Hillman-Grassl images vs excited arrays, lambda in 4x4."""
    shapes = _universe(4, 4, max_cells)
    total = sum(restricted_bijection_check(s, weight) for s in shapes)
    return SuiteResult("bijection", len(shapes), {"weight": weight, "arrays": total})


SUITES = {
    "counts": counts_suite,
    "series": series_suite,
    "hg": hg_suite,
    "pleasant": pleasant_suite,
    "factorial": factorial_suite,
    "bounded": bounded_suite,
    "bijection": bijection_suite,
}


def run_suite(name: str, max_cells: int | None = None, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise ValidationError(f"unknown suite {name!r}")
    if max_cells is None:
        return SUITES[name](seed=seed)
    return SUITES[name](max_cells=max_cells, seed=seed)
