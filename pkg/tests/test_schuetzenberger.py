import random
from itertools import product

import pytest

from affcells.affine_perm import identity, omega_perm, s, tau
from affcells.rmatrix import ShapeMismatch, r_adjacent, reading_word, sort_to_shape
from affcells.rs import affine_q, insertion_tableau
from affcells.schuetzenberger import (
    NotStandard,
    affine_omega,
    evacuation,
    is_fixed_by_characterization,
    is_omega_fixed,
    phi,
    rectify,
    rotate_complement,
)
from affcells.shapes import enumerate_rsyt, enumerate_syt, partitions_of, union_partitions
from affcells.verify import random_samples


def compositions(n):
    for r in range(1, n + 1):
        for c in product(range(1, n + 1), repeat=r):
            if sum(c) == n:
                yield c


def evacuation_by_insertion(t):
    """evac(P(w)) = P(reverse-complement of w)."""
    n = sum(map(len, t))
    return insertion_tableau([n + 1 - x for x in reversed(reading_word(t))])


def test_evacuation_examples():
    assert evacuation([[1]]) == ((1,),)
    assert evacuation([[1, 2], [3]]) == ((1, 3), (2,))
    for t in enumerate_syt((2, 2)):
        assert evacuation(t) == t
    with pytest.raises(NotStandard):
        evacuation([[2], [1]])


def test_rectify_skew():
    # skew shape (2,1)/(1): entries 1 at (0,1), 2 at (1,0)
    assert rectify({(0, 1): 1, (1, 0): 2}) == ((1,), (2,))
    assert rectify({(0, 1): 2, (1, 0): 1}) == ((1, 2),)


@pytest.mark.parametrize("n", range(1, 8))
def test_evacuation_matches_insertion_route(n):
    for lam in partitions_of(n):
        for t in enumerate_syt(lam):
            e = evacuation(t)
            assert e == evacuation_by_insertion(t)
            assert evacuation(e) == t


def test_affine_omega_examples():
    assert affine_omega([[1, 2, 3, 4]]) == ((1, 2, 3, 4),)
    assert affine_omega([[2, 3], [1]]) == ((2, 3), (1,))
    assert affine_omega([[1, 2], [3]]) == ((1, 3), (2,))
    assert affine_omega([[1, 3], [2]]) == ((1, 2), (3,))
    assert affine_omega([[1], [2]]) == ((1,), (2,))
    assert affine_omega([[2], [1]]) == ((2,), (1,))


def test_rotate_complement():
    assert rotate_complement([[1, 4], [2, 3, 5]]) == ((1, 3, 4), (2, 5))


@pytest.mark.parametrize("n", range(1, 8))
def test_involution_and_shape(n):
    for comp in compositions(n):
        for t in enumerate_rsyt(comp):
            u = affine_omega(t)
            assert u.shape == t.shape
            assert affine_omega(u) == t


@pytest.mark.parametrize("n", range(1, 8))
def test_agrees_with_evacuation_on_syt(n):
    for lam in partitions_of(n):
        for t in enumerate_syt(lam):
            assert affine_omega(t) == evacuation(t)


@pytest.mark.parametrize("n", range(2, 8))
def test_commutes_with_r_matrix(n):
    for comp in compositions(n):
        for t in enumerate_rsyt(comp):
            w = affine_omega(t)
            for i in range(1, len(comp)):
                assert affine_omega(r_adjacent(t, i)) == r_adjacent(w, i)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_rs_compatibility(n):
    for w in random_samples(n, 200, seed=2024):
        assert affine_omega(affine_q(w)) == affine_q(omega_perm(w))


def test_rs_compatibility_on_generators():
    for n in (3, 4):
        for w in (identity(n), tau(n), s(0, n)):
            assert affine_omega(affine_q(w)) == affine_q(omega_perm(w))


def test_phi_examples():
    t = [[3, 9], [1, 2, 7, 11], [5, 6, 10], [4, 8]]
    assert phi(t) == ((1, 2, 5, 7), (3, 4, 6))
    assert phi([[1, 4], [2, 3]]) == ()
    assert phi([[1], [2], [3]]) == ((1,),)
    with pytest.raises(ShapeMismatch):
        phi([[1, 2], [3]])


def test_characterization_small():
    assert is_fixed_by_characterization([[1], [2]])
    assert is_fixed_by_characterization([[2], [1]])
    for t in enumerate_rsyt((1, 2, 2, 1)):
        assert is_fixed_by_characterization(t) == is_omega_fixed(t)


@pytest.mark.parametrize("n", range(2, 9))
def test_characterization_matches_direct(n):
    for k in range(1, n // 2 + 1):
        for lam in partitions_of(n - 2 * k):
            for t in enumerate_rsyt((k,) + tuple(lam) + (k,)):
                assert is_fixed_by_characterization(t) == is_omega_fixed(t)


@pytest.mark.parametrize("n", range(2, 9))
def test_fixed_counts_survive_moving_kk_outward(n):
    for k in range(1, n // 2 + 1):
        for lam in partitions_of(n - 2 * k):
            inner = sum(is_omega_fixed(t) for t in enumerate_rsyt(union_partitions(lam, (k, k))))
            outer = sum(is_omega_fixed(t) for t in enumerate_rsyt((k,) + tuple(lam) + (k,)))
            assert inner == outer


def test_random_composition_roundtrip():
    rng = random.Random(4)
    for _ in range(50):
        comp = [rng.randint(1, 3) for _ in range(rng.randint(1, 5))]
        t = next(iter(enumerate_rsyt(comp)))
        assert affine_omega(affine_omega(t)) == t
        assert sort_to_shape(sort_to_shape(t, sorted(comp)), comp) == t
