"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py`` (or ``python tests/test_acceptance.py``);
the terminal summary lists one PASS/FAIL line per criterion.
"""

import time
from fractions import Fraction
from math import comb, factorial, prod

import pytest

from skewhook.diagrams import (
    a_statistic,
    count_pleasant,
    enumerate_excited,
    enumerate_pleasant,
    enumerate_pleasant_bruteforce,
)
from skewhook.formulas import inverted_hook_paths, jt_series, nhlf, nhlf_terms, okounkov_olshanski
from skewhook.hillman_grassl import HGArray, flip_cols, flip_rows, hg_forward, hg_inverse, rsk
from skewhook.series import TruncatedSeries, q_factorial_product
from skewhook.shapes import Partition, SkewShape
from skewhook.suites import (
    bijection_suite,
    bounded_suite,
    counts_suite,
    factorial_suite,
    hg_suite,
    pleasant_suite,
    series_suite,
)
from skewhook.tableaux import Tableau, count_syt_bruteforce

criterion = pytest.mark.criterion
EX = SkewShape.of((2, 2, 2, 1), (1, 1))


@criterion("1.1 f of (2,2,2,1)/(1,1) is 9 by NHLF, reverse tableaux and brute force")
def test_example_count():
    assert nhlf(EX) == okounkov_olshanski(EX) == count_syt_bruteforce(EX) == 9


@criterion("1.2 three excited diagrams of (2,2,2,1)/(1,1), excluded hooks and a(D)")
def test_example_excited_diagrams():
    diagrams = enumerate_excited(EX)
    assert len(diagrams) == 3
    hooks = {frozenset(EX.lam.hook(u) for u in D.cells) for D in diagrams}
    assert hooks == {frozenset({5, 4}), frozenset({5, 1}), frozenset({2, 1})}
    assert sorted(a_statistic(D) for D in diagrams) == [4, 6, 8]


JT_XFAIL = (
    "the displayed polynomial is the reversal q^a -> q^(10-a) of the computed numerator "
    "q^4+q^5+2q^6+2q^7+2q^8+q^9; the excited-diagram sum starts at q^4, confirming the computed one"
)


@criterion("1.3 Jacobi-Trudi numerator of (2,2,2,1)/(1,1) is q+2q^2+2q^3+2q^4+q^5+q^6")
@pytest.mark.xfail(strict=True, reason=JT_XFAIL)
def test_example_jt_numerator():
    N = 10
    num = jt_series(EX, N) * q_factorial_product(5, N)
    assert num == TruncatedSeries([0, 1, 2, 2, 2, 1, 1], N)


@criterion("1.4 inverted hooks: C(k+d-2,k-1) excited diagrams and the rational path identity, 2<=k,d<=5")
def test_inverted_hook_counts():
    for k in range(2, 6):
        for d in range(2, 6):
            shape = SkewShape.of((k,) * d, (k - 1,) * (d - 1))
            count = comb(k + d - 2, k - 1)
            assert len(enumerate_excited(shape)) == count
            total = sum((Fraction(1, prod(i + j - 1 for i, j in p)) for p, _, _ in inverted_hook_paths(k, d)), Fraction(0))
            assert total * factorial(k + d - 1) == count


@criterion("1.5 twelve pleasant diagrams of (2,2)/(1) by brute force, characterization and formula")
def test_pleasant_twelve():
    shape = SkewShape.of((2, 2), (1,))
    brute = enumerate_pleasant_bruteforce(shape)
    assert len(brute) == 12
    assert enumerate_pleasant(shape) == brute
    assert count_pleasant(shape) == 12


@criterion("1.6 2816 pleasant diagrams of (4,4,4)/(2) by the counting formula")
def test_pleasant_2816():
    assert count_pleasant(SkewShape.of((4, 4, 4), (2,))) == 2816


@criterion("1.7 seven excited diagrams of (4,4,4,2)/(3,1) with a(D) = {8,9,9,10,11,12,13}")
def test_figure_excited_diagrams():
    diagrams = enumerate_excited(SkewShape.of((4, 4, 4, 2), (3, 1)))
    assert len(diagrams) == 7
    assert sorted(a_statistic(D) for D in diagrams) == [8, 9, 9, 10, 11, 12, 13]


@criterion("1.8 Hillman-Grassl worked example, its inverse, RSK shapes (7,3) and (5,1)")
def test_hillman_grassl_example():
    pi = Tableau.from_rows([[0, 1, 3, 4], [1, 3, 5, 6], [3, 6, 7], [3]])
    A = HGArray.from_rows([[0, 2, 1, 1], [1, 1, 1, 2], [2, 1, 1], [0]])
    assert hg_forward(pi) == A
    assert hg_inverse(A) == pi
    for flip in (flip_rows, flip_cols):
        assert rsk(flip(A.restrict(0))).shape == Partition((7, 3))
        assert rsk(flip(A.restrict(1))).shape == Partition((5, 1))


@criterion("1.9 f of (2,2)/(1) is 2 with NHLF weights 3+1")
def test_small_nhlf():
    shape = SkewShape.of((2, 2), (1,))
    assert nhlf(shape) == 2
    assert sorted(t * 12 for t in nhlf_terms(shape)) == [1, 3]


@criterion("2.1 NHLF = reverse tableaux = brute force for lambda in 5x5, within 120 s")
def test_counts_sweep():
    start = time.perf_counter()
    result = counts_suite(extras=False)
    elapsed = time.perf_counter() - start
    assert result.cases == 19404
    assert elapsed < 120, f"sweep took {elapsed:.1f} s"


@criterion("2.2 SSYT, RPP and trace series equalities to degree 12 for lambda in 4x4")
def test_series_sweep():
    assert series_suite(deg=12).cases == 1764


@criterion("2.3 Hillman-Grassl round trips and invariants, 1000 random RPP per shape class")
def test_hillman_grassl_random():
    result = hg_suite(max_cells=12, trials=1000, max_entry=5)
    assert result.cases > 0 and result.details["trials"] == 1000


@criterion("2.4 restricted bijection double enumeration up to weight 10 for lambda in 4x4")
def test_restricted_bijection():
    assert bijection_suite(weight=10).cases == 1764


@criterion("2.5 pleasant brute force vs characterization vs formula for |lambda| <= 9")
def test_pleasant_sweep():
    assert pleasant_suite(max_cells=9).cases > 1000


@criterion("2.6 bounded-parts border strip series vs bounded enumeration, 4x4, M <= 5, degree 10")
def test_bounded_sweep():
    assert bounded_suite(deg=10, max_m=5).cases > 0


@criterion("2.7 factorial Schur identity at 10 random points for mu in lambda in 3x3")
def test_factorial_sweep():
    assert factorial_suite(points=10).cases == 175


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
