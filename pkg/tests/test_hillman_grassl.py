import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import partitions, skew_shapes
from skewhook.diagrams import ExcitedDiagram, enumerate_excited, excited_array_matrix, is_pleasant
from skewhook.errors import GuardError, InvariantViolation, ValidationError
from skewhook.hillman_grassl import (
    HGArray,
    diagonal_partition,
    excited_arrays_up_to,
    flip_cols,
    flip_rows,
    greene_profile,
    greene_stats,
    hg_forward,
    hg_inverse,
    matching_excited_diagram,
    restricted_bijection_check,
    restricted_image_check,
    rsk,
)
from skewhook.shapes import Partition, SkewShape
from skewhook.tableaux import Tableau, enumerate_ssyt_bounded, minimal_ssyt, random_rpp, trace_k

PI = Tableau.from_rows([[0, 1, 3, 4], [1, 3, 5, 6], [3, 6, 7], [3]])
A = HGArray.from_rows([[0, 2, 1, 1], [1, 1, 1, 2], [2, 1, 1], [0]])


def test_forward_example():
    assert hg_forward(PI) == A
    assert A.weight() == PI.size == 42


def test_inverse_example():
    assert hg_inverse(A) == PI


def test_zero_inputs():
    lam = Partition((3, 2))
    zero_pi = Tableau.from_rows([[0, 0, 0], [0, 0]])
    assert hg_forward(zero_pi) == HGArray.from_entries(lam, {})
    assert hg_inverse(HGArray.from_entries(lam, {})) == zero_pi


def test_forward_rejects_non_rpp():
    with pytest.raises(ValidationError):
        hg_forward(Tableau.from_rows([[1, 0]]))


def test_array_validation():
    with pytest.raises(ValidationError):
        HGArray(Partition((2,)), ((1,),))
    with pytest.raises(ValidationError):
        HGArray.from_rows([[-1]])


def test_minimal_ssyt_maps_to_a_mu():
    for shape in (SkewShape.of((2, 2, 2, 1), (1, 1)), SkewShape.of((4, 4, 4, 2), (3, 1)), SkewShape.of((3, 3, 3), (2, 2))):
        T0 = minimal_ssyt(shape)
        D0 = ExcitedDiagram(shape, shape.mu.cells)
        assert hg_forward(T0).to_rows() == excited_array_matrix(D0)
        assert hg_inverse(hg_forward(T0), shape.mu.parts) == T0
        assert restricted_image_check(shape, T0) == D0


@settings(max_examples=150, deadline=None)
@given(partitions(4, 4), st.randoms(use_true_random=False))
def test_round_trips(lam, rng):
    shape = SkewShape(lam)
    pi = random_rpp(shape, 4, rng)
    image = hg_forward(pi)
    assert hg_inverse(image) == pi
    assert image.weight() == pi.size
    B = HGArray.from_entries(lam, {c: rng.randint(0, 3) for c in lam.cells})
    assert hg_forward(hg_inverse(B)) == B


@settings(max_examples=80, deadline=None)
@given(partitions(4, 5), st.randoms(use_true_random=False))
def test_trace_greene_and_rsk(lam, rng):
    pi = random_rpp(SkewShape(lam), 4, rng)
    image = hg_forward(pi)
    for k in SkewShape(lam).diagonal_range():
        Ak = image.restrict(k)
        assert trace_k(pi, k) == sum(map(sum, Ak))
        nu = diagonal_partition(pi, k)
        tmax = max(len(nu), nu.part(1), 1)
        ac, dc = greene_profile(Ak, tmax)
        for t in range(1, tmax + 1):
            assert ac[t] == sum(nu.parts[:t])
            assert dc[t] == sum(nu.conjugate.parts[:t])
        assert rsk(flip_rows(Ak)).shape == nu == rsk(flip_cols(Ak)).shape


def test_rsk_examples():
    A0 = A.restrict(0)
    A1 = A.restrict(1)
    assert flip_cols(A1) == [[1, 2, 0], [1, 1, 1]]
    assert rsk(flip_cols(A1)).insertion == ((1, 1, 2, 2, 3), (2,))
    assert rsk(flip_cols(A0)).insertion == ((1, 1, 1, 2, 2, 3, 3), (2, 2, 3))
    assert rsk(flip_rows(A0)).shape == Partition((7, 3))
    assert rsk(flip_rows(A1)).shape == Partition((5, 1))
    empty = rsk([[0, 0], [0, 0]])
    assert empty.insertion == () and empty.recording == ()


def test_rsk_rejects_bad_matrices():
    with pytest.raises(ValidationError):
        rsk([[1, 2], [3]])
    with pytest.raises(ValidationError):
        rsk([[-1]])


def test_greene_examples():
    assert greene_stats(A.restrict(0), 1) == (7, 2)
    assert greene_stats([[0, 0], [0, 0]], 1) == (0, 0)
    perm = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert greene_stats(perm, 3)[0] == 3
    with pytest.raises(ValidationError):
        greene_stats(perm, 0)


def test_greene_guard():
    with pytest.raises(GuardError):
        greene_stats([[1] * 9] * 8, 1)


@settings(max_examples=60, deadline=None)
@given(skew_shapes(4, 4), st.randoms(use_true_random=False))
def test_skew_rpp_images_have_pleasant_support(shape, rng):
    pi = random_rpp(shape, 3, rng)
    assert is_pleasant(shape, hg_forward(pi).support())


def test_pleasant_supported_arrays_give_skew_rpp():
    shape = SkewShape.of((3, 3, 2), (2, 1))
    rng = random.Random(3)
    from skewhook.diagrams import enumerate_pleasant

    for S in enumerate_pleasant(shape):
        B = HGArray.from_entries(shape.lam, {c: rng.randint(1, 3) for c in S})
        pi = hg_inverse(B, shape.mu.parts)
        assert pi.shape == shape


def test_non_pleasant_support_is_rejected_for_skew_shape():
    shape = SkewShape.of((2, 2), (1,))
    B = HGArray.from_entries(shape.lam, {(1, 1): 1, (2, 2): 1})
    assert not is_pleasant(shape, B.support())
    with pytest.raises(ValidationError):
        hg_inverse(B, shape.mu.parts)


def test_restricted_image_on_example_shape():
    shape = SkewShape.of((2, 2, 2, 1), (1, 1))
    seen = set()
    for T in enumerate_ssyt_bounded(shape, max_entry=3):
        seen.add(restricted_image_check(shape, T))
    assert seen == set(enumerate_excited(shape))


def test_restricted_image_straight_shape():
    shape = SkewShape.of((3, 1))
    T = Tableau.from_rows([[0, 0, 2], [1]])
    assert restricted_image_check(shape, T).cells == frozenset()


def test_restricted_image_rejects_non_ssyt():
    shape = SkewShape.of((2, 2))
    with pytest.raises(ValidationError):
        restricted_image_check(shape, Tableau.from_rows([[0, 0], [0, 0]]))


def test_matching_excited_diagram_none_for_foreign_array():
    shape = SkewShape.of((2, 2), (1,))
    assert matching_excited_diagram(shape, HGArray.from_rows([[0, 0], [0, 0]])) is None


@pytest.mark.parametrize("lam,mu", [((2, 2), (1,)), ((3, 3, 2), (2, 1)), ((2, 2, 2, 1), (1, 1)), ((3, 3), ())])
def test_restricted_bijection_small(lam, mu):
    shape = SkewShape.of(lam, mu)
    n = restricted_bijection_check(shape, 8)
    assert n == len(excited_arrays_up_to(shape, 8))
    assert n == len(enumerate_ssyt_bounded(shape, max_size=8))


def test_restricted_bijection_detects_mismatch(monkeypatch):
    import skewhook.hillman_grassl as hg

    monkeypatch.setattr(hg, "excited_arrays_up_to", lambda shape, w: set())
    with pytest.raises(InvariantViolation):
        hg.restricted_bijection_check(SkewShape.of((2, 2), (1,)), 4)
