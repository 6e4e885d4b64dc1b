"""Robinson-Schensted insertion and its affine (periodic window) extension."""

from __future__ import annotations

from bisect import bisect_left
from typing import Sequence

from .affine_perm import AffinePermutation, inverse
from .shapes import Shape, Tabloid

InsertionTableau = tuple[tuple[int, ...], ...]

DEFAULT_CAP = 64


class DuplicateEntry(ValueError):
    pass


class StabilizationFailure(RuntimeError):
    pass


def insertion_tableau(word: Sequence[int]) -> InsertionTableau:
    """P-side of row insertion; entries must be distinct (not checked)."""
    rows: list[list[int]] = []
    for x in word:
        for row in rows:
            j = bisect_left(row, x)
            if j == len(row):
                row.append(x)
                break
            row[j], x = x, row[j]
        else:
            rows.append([x])
    return tuple(tuple(r) for r in rows)


def rs_insert(word: Sequence[int]) -> tuple[InsertionTableau, Tabloid]:
    """Row-insert ``word``; returns (P, Q) with Q recording positions 1..len(word)."""
    if len(set(word)) != len(word):
        raise DuplicateEntry(f"word {tuple(word)} has repeated entries")
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(word, start=1):
        for i, row in enumerate(p_rows):
            j = bisect_left(row, x)
            if j == len(row):
                row.append(x)
                q_rows[i].append(step)
                break
            row[j], x = x, row[j]
        else:
            p_rows.append([x])
            q_rows.append([step])
    return tuple(tuple(r) for r in p_rows), Tabloid(q_rows)


PERIOD_BLOCKS = 2


def _window_tabloid(w: AffinePermutation, i: int) -> tuple[Tabloid, bool]:
    """Extract rows over {1..n} from the insertion tableau of w(1-i*n), ..., w(i*n).

    The flag reports whether every row carrying entries in {1..n} repeats the
    same pattern, shifted by multiples of n, over the blocks
    (k*n, (k+1)*n] for |k| <= PERIOD_BLOCKS, i.e. looks like its periodic limit
    around the middle. Rows with nothing in {1..n} are boundary debris.
    """
    n = w.n
    p = insertion_tableau([w(k) for k in range(1 - i * n, i * n + 1)])
    rows = []
    periodic = True
    for row in p:
        middle = tuple(x for x in row if 0 < x <= n)
        if not middle:
            continue
        rows.append(middle)
        for k in range(-PERIOD_BLOCKS, PERIOD_BLOCKS + 1):
            if k and tuple(x - k * n for x in row if k * n < x <= (k + 1) * n) != middle:
                periodic = False
    return Tabloid(rows), periodic


def affine_q(w: AffinePermutation, cap: int = DEFAULT_CAP, step: int = 1) -> Tabloid:
    """Q(w): the limit of row insertion over the windows [1 - i*n, i*n].

    Accepted at window i when it agrees with the previous window, its entries
    are exactly {1..n}, its shape is a partition and every row is periodic
    around the middle (see ``_window_tabloid``).
    """
    n = w.n
    prev = None
    for i in range(1, cap + 1, step):
        t, periodic = _window_tabloid(w, i)
        if periodic and t == prev and t.n == n and t.shape.is_partition():
            return t
        prev = t
    raise StabilizationFailure(f"Q({list(w.window)}) did not stabilize within {cap} windows")


def affine_p(w: AffinePermutation, cap: int = DEFAULT_CAP) -> Tabloid:
    return affine_q(inverse(w), cap=cap)


def cell_shape(w: AffinePermutation, cap: int = DEFAULT_CAP) -> Shape:
    """Partition labelling the two-sided cell of ``w``."""
    return affine_q(w, cap=cap).shape
