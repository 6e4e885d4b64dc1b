"""Exhaustive verification runs: fixed-point counts against Green values and friends."""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .affine_perm import omega_perm, random_element
from .rs import DEFAULT_CAP, StabilizationFailure, affine_q
from .schuetzenberger import affine_omega, evacuation
from .shapes import (
    Shape,
    domino_count,
    enumerate_rsyt,
    enumerate_syt,
    partitions_of,
    rho2,
    rsyt_count,
    union_partitions,
)
from .symfun import (
    GREEN_CACHE,
    green_at_minus_one,
    green_polynomial,
    multiply,
    plethysm_sk_p2,
    qprime_at_minus_one,
)
log = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 10


@dataclass
class VerificationRow:
    n: int
    lam: tuple[int, ...]
    rsyt_total: int
    fixed_count: int
    green_value: int
    match: bool
    counterexamples: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "lambda": list(self.lam),
            "rsyt_total": self.rsyt_total,
            "fixed_count": self.fixed_count,
            "green_value": self.green_value,
            "match": self.match,
        }
        if self.counterexamples:
            out["counterexamples"] = self.counterexamples
        return out


@dataclass
class Report:
    command: str
    params: dict
    rows: list[dict]
    elapsed_ms: int = 0

    @property
    def all_match(self) -> bool:
        return all(r["match"] for r in self.rows)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "rows": self.rows,
            "all_match": self.all_match,
            "elapsed_ms": self.elapsed_ms,
        }


def fixed_tabloids(lam: Sequence[int]):
    for t in enumerate_rsyt(lam):
        if affine_omega(t) == t:
            yield t


def count_fixed(lam: Sequence[int]) -> int:
    """Number of omega-fixed row-standard tabloids of shape ``lam`` (streaming)."""
    return sum(1 for _ in fixed_tabloids(lam))


@lru_cache(maxsize=None)
def _count_fixed_cached(lam: tuple[int, ...]) -> int:
    return count_fixed(lam)


def partition_order_key(lam: Sequence[int]) -> tuple:
    """Sort by size, then reverse-lexicographically."""
    return (sum(lam), tuple(-x for x in lam))


def main_theorem_row(lam: Sequence[int]) -> VerificationRow:
    lam = tuple(lam)
    fixed = count_fixed(lam)
    green = green_at_minus_one(lam)
    row = VerificationRow(sum(lam), lam, rsyt_count(lam), fixed, green, fixed == green)
    if not row.match:
        row.counterexamples = [
            t.to_json() for _, t in zip(range(MAX_COUNTEREXAMPLES), fixed_tabloids(lam))
        ]
    return row


def _worker_init(cache_dir: str | None) -> None:
    GREEN_CACHE.attach(cache_dir)


def _worker_row(lam: tuple[int, ...]) -> tuple[VerificationRow, tuple[int, ...]]:
    row = main_theorem_row(lam)
    coeffs = green_polynomial(lam, rho2(sum(lam))).coeffs
    return row, coeffs


def verify_main_theorem(
    n_max: int,
    lambdas: Iterable[Sequence[int]] | None = None,
    jobs: int = 1,
    cache_dir: str | None = None,
) -> Report:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if lambdas is None:
        todo = [tuple(lam) for n in range(1, n_max + 1) for lam in partitions_of(n)]
    else:
        todo = [tuple(lam) for lam in lambdas]
    GREEN_CACHE.attach(cache_dir)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_worker_init, initargs=(cache_dir,)) as pool:
            results = list(pool.map(_worker_row, todo))
    else:
        results = [_worker_row(lam) for lam in todo]
    for row, coeffs in results:
        GREEN_CACHE.put(GREEN_CACHE.key(row.lam, tuple(rho2(row.n))), coeffs)
    GREEN_CACHE.flush()
    rows = sorted((r for r, _ in results), key=lambda r: partition_order_key(r.lam))
    params = {"n_max": n_max, "lambda": None if lambdas is None else [list(x) for x in todo]}
    return Report("verify-main", params, [r.to_json() for r in rows])


def verify_prop_str(n_max: int) -> Report:
    """fixed(lam u (k,k)) == C(n//2, k) 2^k fixed(lam) for every admissible (lam, k)."""
    rows = []
    for n in range(2, n_max + 1):
        for k in range(1, n // 2 + 1):
            for lam in partitions_of(n - 2 * k):
                big = union_partitions(lam, (k, k))
                lhs = _count_fixed_cached(tuple(big))
                rhs = comb(n // 2, k) * 2**k * (_count_fixed_cached(tuple(lam)) if lam else 1)
                rows.append(
                    {"n": n, "k": k, "lambda": list(lam), "union": list(big),
                     "lhs": lhs, "rhs": rhs, "match": lhs == rhs}
                )
    return Report("verify-prop-str", {"n_max": n_max}, rows)


def verify_prop_grind(n_max: int) -> Report:
    """The LLT power-sum identity and the Green recursion, for |lam| + 2k <= n_max."""
    rows = []
    for n in range(0, n_max + 1):
        for k in range(0, n // 2 + 1):
            for lam in partitions_of(n - 2 * k):
                big = union_partitions(lam, (k, k)) if k else Shape(lam)
                if not big:
                    continue
                lhs = qprime_at_minus_one(big)
                rhs = multiply(qprime_at_minus_one(lam), plethysm_sk_p2(k)).scale((-1) ** k)
                llt = lhs == rhs
                g_lhs = green_at_minus_one(big)
                g_rhs = comb(n // 2, k) * 2**k * green_at_minus_one(lam) if k else g_lhs
                rows.append(
                    {"n": n, "k": k, "lambda": list(lam), "union": list(big), "llt_match": llt,
                     "green_lhs": g_lhs, "green_rhs": g_rhs, "match": llt and g_lhs == g_rhs}
                )
    return Report("verify-prop-grind", {"n_max": n_max}, rows)


def random_samples(n: int, samples: int, seed: int, max_word: int = 15, max_tau: int = 2):
    """Deterministic stream of random affine permutations for period ``n``."""
    rng = random.Random(f"{seed}:{n}")
    for _ in range(samples):
        length = rng.randint(0, max_word)
        power = rng.randint(-max_tau, max_tau)
        yield random_element(n, length, power, rng.randrange(2**32))


def verify_rs_omega(
    n_list: Sequence[int], samples: int = 200, seed: int = 0, cap: int = DEFAULT_CAP
) -> Report:
    """omega(Q(w)) == Q(omega(w)) on seeded random elements."""
    rows = []
    for n in n_list:
        if n < 2:
            raise ValueError("each n must be at least 2")
        passed = failed = skipped = 0
        bad = []
        for w in random_samples(n, samples, seed):
            try:
                left = affine_omega(affine_q(w, cap=cap))
                right = affine_q(omega_perm(w), cap=cap)
            except StabilizationFailure as exc:
                log.warning("skipped %s: %s", w.window, exc)
                skipped += 1
                continue
            if left == right:
                passed += 1
            else:
                failed += 1
                if len(bad) < MAX_COUNTEREXAMPLES:
                    bad.append(w.to_json())
        row = {"n": n, "samples": samples, "passed": passed, "failed": failed,
               "skipped": skipped, "match": failed == 0}
        if bad:
            row["counterexamples"] = bad
        rows.append(row)
    return Report("verify-rs-omega", {"n_list": list(n_list), "samples": samples, "seed": seed}, rows)


def verify_evacuation_domino(n_max: int) -> Report:
    """Self-evacuating SYT vs domino tableaux, and affine omega vs evacuation on SYT."""
    rows = []
    for n in range(1, n_max + 1):
        for lam in partitions_of(n):
            total = fixed = 0
            disagree = []
            for t in enumerate_syt(lam):
                total += 1
                e = evacuation(t)
                fixed += e == t
                if affine_omega(t) != e and len(disagree) < MAX_COUNTEREXAMPLES:
                    disagree.append(t.to_json())
            dom = domino_count(lam)
            row = {"n": n, "lambda": list(lam), "syt_total": total, "self_evacuating": fixed,
                   "domino_count": dom, "omega_agrees": not disagree,
                   "match": fixed == dom and not disagree}
            if disagree:
                row["counterexamples"] = disagree
            rows.append(row)
    return Report("verify-evac-domino", {"n_max": n_max}, rows)


__all__ = [
    "Report",
    "VerificationRow",
    "count_fixed",
    "main_theorem_row",
    "verify_evacuation_domino",
    "verify_main_theorem",
    "verify_prop_grind",
    "verify_prop_str",
    "verify_rs_omega",
]
