from math import comb

import pytest

from affcells.affine_perm import identity, omega_perm, s, tau
from affcells.rs import affine_q
from affcells.schuetzenberger import affine_omega
from affcells.shapes import enumerate_rsyt, partitions_of, rsyt_count
from affcells.symfun import green_at_minus_one
from affcells.verify import (
    VerificationRow,
    count_fixed,
    main_theorem_row,
    partition_order_key,
    random_samples,
    verify_evacuation_domino,
    verify_main_theorem,
    verify_prop_grind,
    verify_prop_str,
    verify_rs_omega,
)


def brute_fixed(lam):
    return [t for t in enumerate_rsyt(lam) if affine_omega(t) == t]


def test_count_fixed_examples():
    assert count_fixed((6,)) == 1
    assert count_fixed((2, 1)) == len(brute_fixed((2, 1))) == 1
    assert count_fixed((1, 1)) == 2
    assert count_fixed(()) == 1


def test_main_theorem_small():
    rows = verify_main_theorem(3).rows
    got = [(tuple(r["lambda"]), r["fixed_count"], r["green_value"]) for r in rows]
    assert got == [((1,), 1, 1), ((2,), 1, 1), ((1, 1), 2, 2), ((3,), 1, 1), ((2, 1), 1, 1), ((1, 1, 1), 2, 2)]
    assert all(r["match"] for r in rows)
    assert all(r["rsyt_total"] == rsyt_count(r["lambda"]) for r in rows)


def test_main_theorem_lambda_filter():
    report = verify_main_theorem(8, lambdas=[(2, 2), (3, 1)])
    assert [r["lambda"] for r in report.rows] == [[3, 1], [2, 2]]
    assert report.all_match


def test_parallel_matches_serial():
    a = verify_main_theorem(6, jobs=1).to_json()
    b = verify_main_theorem(6, jobs=3).to_json()
    assert a == b


def test_row_ordering_key():
    lams = [lam for n in range(1, 6) for lam in partitions_of(n)]
    assert sorted(lams, key=partition_order_key) == lams


def test_mismatch_row_carries_counterexamples(monkeypatch):
    import affcells.verify as v

    monkeypatch.setattr(v, "green_at_minus_one", lambda lam: green_at_minus_one(lam) + 1)
    row = v.main_theorem_row((1, 1, 1, 1))
    assert not row.match
    assert 0 < len(row.counterexamples) <= 10
    assert row.to_json()["counterexamples"][0] == [list(r) for r in brute_fixed((1, 1, 1, 1))[0]]


def test_verification_row_json():
    row = VerificationRow(2, (1, 1), 2, 2, 2, True)
    assert row.to_json() == {"n": 2, "lambda": [1, 1], "rsyt_total": 2, "fixed_count": 2,
                             "green_value": 2, "match": True}
    assert main_theorem_row((1, 1)).to_json() == row.to_json()


def test_prop_str():
    report = verify_prop_str(6)
    assert report.all_match
    first = report.rows[0]
    assert (first["n"], first["k"], first["lambda"], first["lhs"], first["rhs"]) == (2, 1, [], 2, 2)
    row = next(r for r in report.rows if r["n"] == 3 and r["k"] == 1)
    assert (row["lambda"], row["lhs"], row["rhs"]) == ([1], 2, 2)
    row = next(r for r in report.rows if r["n"] == 4 and r["k"] == 2)
    assert row["lhs"] == count_fixed((2, 2)) == comb(2, 2) * 4


def test_prop_grind():
    report = verify_prop_grind(6)
    assert report.all_match
    assert any(r["k"] == 0 for r in report.rows)
    row = next(r for r in report.rows if r["n"] == 3 and r["k"] == 1)
    assert (row["green_lhs"], row["green_rhs"]) == (2, 2)


def test_rs_omega_report():
    report = verify_rs_omega([2, 3], samples=30, seed=1)
    assert report.all_match
    assert [(r["passed"], r["skipped"]) for r in report.rows] == [(30, 0), (30, 0)]
    with pytest.raises(ValueError):
        verify_rs_omega([1], samples=1)


def test_rs_omega_examples():
    for w in (identity(3), tau(3), s(0, 3)):
        assert affine_omega(affine_q(w)) == affine_q(omega_perm(w))
    assert affine_q(tau(3)) == affine_q(omega_perm(tau(3))) == ((1, 2, 3),)


def test_random_samples_deterministic():
    assert list(random_samples(4, 10, 3)) == list(random_samples(4, 10, 3))
    assert list(random_samples(4, 10, 3)) != list(random_samples(4, 10, 4))


def test_evac_domino():
    report = verify_evacuation_domino(4)
    assert report.all_match
    by = {tuple(r["lambda"]): r for r in report.rows}
    assert (by[(2, 2)]["self_evacuating"], by[(2, 2)]["domino_count"]) == (2, 2)
    assert (by[(2, 1)]["self_evacuating"], by[(2, 1)]["domino_count"]) == (0, 0)
    assert (by[(1, 1)]["self_evacuating"], by[(1, 1)]["domino_count"]) == (1, 1)
