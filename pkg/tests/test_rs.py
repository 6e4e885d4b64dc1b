from itertools import permutations

import pytest

from affcells.affine_perm import from_window, identity, inverse, random_element, s, tau
from affcells.rs import (
    DuplicateEntry,
    StabilizationFailure,
    affine_p,
    affine_q,
    cell_shape,
    insertion_tableau,
    rs_insert,
)
from affcells.verify import random_samples


def test_rs_insert_examples():
    p, q = rs_insert([1, 2, 3, 4])
    assert p == ((1, 2, 3, 4),) and q == ((1, 2, 3, 4),)
    assert rs_insert([2, 1]) == (((1,), (2,)), ((1,), (2,)))
    p, _ = rs_insert([1, 2, 5, 3, 4, 6, 7])
    assert p == ((1, 2, 3, 4, 6, 7), (5,))
    with pytest.raises(DuplicateEntry):
        rs_insert([1, 2, 1])


@pytest.mark.parametrize("n", range(1, 7))
def test_rs_is_a_bijection_with_standard_pairs(n):
    seen = set()
    for perm in permutations(range(1, n + 1)):
        p, q = rs_insert(perm)
        assert tuple(map(len, p)) == q.shape
        assert q.is_standard()
        for upper, lower in zip(p, p[1:]):
            assert all(upper[j] < lower[j] for j in range(len(lower)))
        assert sorted(x for r in p for x in r) == list(range(1, n + 1))
        seen.add((p, q))
        # P(w^-1) == Q(w)
        inv = [0] * n
        for i, v in enumerate(perm, start=1):
            inv[v - 1] = i
        assert insertion_tableau(inv) == q
    assert len(seen) == len(list(permutations(range(n))))


def test_affine_q_examples():
    assert affine_q(identity(4)) == ((1, 2, 3, 4),)
    assert affine_q(s(1, 2)) == ((1,), (2,))
    assert affine_q(s(1, 3)) == ((1, 3), (2,))


def test_affine_p_examples():
    assert affine_p(identity(3)) == ((1, 2, 3),)
    assert affine_p(tau(4)) == ((1, 2, 3, 4),)
    assert affine_p(s(1, 3)) == ((1, 3), (2,))


def test_cell_shape_examples():
    assert cell_shape(identity(5)) == (5,)
    assert cell_shape(s(0, 3)) == (2, 1)
    assert cell_shape(tau(3)) == (3,)


@pytest.mark.parametrize("n", range(1, 5))
def test_finite_elements_match_classical_rs(n):
    for perm in permutations(range(1, n + 1)):
        w = from_window(n, perm)
        _, q_of_inverse = rs_insert(inverse(w).window)
        assert affine_q(w) == q_of_inverse


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_p_and_q_share_shape(n):
    for w in random_samples(n, 60, seed=11):
        assert affine_p(w).shape == affine_q(w).shape


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_tau_stability_of_cells(n):
    for w in random_samples(n, 40, seed=5):
        assert cell_shape(tau(n) * w) == cell_shape(w)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_window_schedule_independence(n):
    for w in random_samples(n, 60, seed=3):
        assert affine_q(w, step=2) == affine_q(w)


def test_limit_matches_large_window():
    from affcells.rs import _window_tabloid

    for n in (3, 4):
        for w in random_samples(n, 80, seed=21):
            assert affine_q(w) == _window_tabloid(w, 60)[0]


def test_known_slow_stabilizers():
    # transient tabloids of non-partition shape repeat over consecutive windows here
    assert affine_q(from_window(3, [6, -1, 7])) == ((1, 2), (3,))
    assert affine_q(from_window(3, [-6, -5, 11])) == ((1, 3), (2,))


def test_stabilization_cap():
    w = random_element(4, 15, 2, 8)
    with pytest.raises(StabilizationFailure):
        affine_q(w, cap=1)
