"""Combinatorial R-matrix on adjacent rows of a tabloid."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .rs import insertion_tableau
from .shapes import Shape, Tabloid

Row = tuple[int, ...]

ORACLE_MAX_SIZE = 14


class MalformedRow(ValueError):
    pass


class OracleAmbiguity(RuntimeError):
    pass


class ShapeMismatch(ValueError):
    pass


def reading_word(t: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Rows from bottom to top, each left to right."""
    return tuple(x for row in reversed(t) for x in row)


def _check_rows(top: Sequence[int], bottom: Sequence[int]) -> None:
    for row in (top, bottom):
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            raise MalformedRow(f"row {tuple(row)} is not strictly increasing")
    if set(top) & set(bottom):
        raise MalformedRow(f"rows {tuple(top)} and {tuple(bottom)} share entries")


def r_two_row(top: Sequence[int], bottom: Sequence[int], check: bool = True) -> tuple[Row, Row]:
    """Swap the lengths of two increasing rows by the sliding rule.

    Longer top row: every bottom box, largest first, slides right under the
    largest free top entry smaller than it; the a - b leftmost top entries
    left without a partner drop into the bottom row. A longer bottom row is
    the mirror image: top boxes slide left over the smallest free larger
    bottom entry and the b - a rightmost unpartnered bottom entries rise.
    """
    if check:
        _check_rows(top, bottom)
    a, b = len(top), len(bottom)
    if a == b:
        return tuple(top), tuple(bottom)
    if a > b:
        paired = [False] * a
        j = a - 1
        for x in reversed(bottom):
            while j >= 0 and top[j] > x:
                j -= 1
            if j < 0:
                break
            paired[j] = True
            j -= 1
        free = [idx for idx in range(a) if not paired[idx]]
        drop = set(free[: a - b])
        new_top = tuple(top[idx] for idx in range(a) if idx not in drop)
        new_bottom = tuple(sorted(tuple(bottom) + tuple(top[idx] for idx in drop)))
        return new_top, new_bottom
    paired = [False] * b
    j = 0
    for y in top:
        while j < b and bottom[j] < y:
            j += 1
        if j == b:
            break
        paired[j] = True
        j += 1
    free = [idx for idx in range(b) if not paired[idx]]
    rise = set(free[len(free) - (b - a):])
    new_bottom = tuple(bottom[idx] for idx in range(b) if idx not in rise)
    new_top = tuple(sorted(tuple(top) + tuple(bottom[idx] for idx in rise)))
    return new_top, new_bottom


def r_two_row_oracle(top: Sequence[int], bottom: Sequence[int]) -> tuple[Row, Row]:
    """Brute force: the unique length-swapped split with the same insertion tableau."""
    _check_rows(top, bottom)
    a, b = len(top), len(bottom)
    if a + b > ORACLE_MAX_SIZE:
        raise ValueError(f"oracle limited to {ORACLE_MAX_SIZE} entries")
    if a == b:
        return tuple(top), tuple(bottom)
    target = insertion_tableau(reading_word((top, bottom)))
    entries = sorted(tuple(top) + tuple(bottom))
    hits = []
    for chosen in combinations(entries, b):
        rest = tuple(x for x in entries if x not in chosen)
        if insertion_tableau(rest + chosen) == target:
            hits.append((chosen, rest))
    if len(hits) != 1:
        raise OracleAmbiguity(f"{len(hits)} candidate images for {(tuple(top), tuple(bottom))}")
    return hits[0]


def r_adjacent(t: Sequence[Sequence[int]], i: int) -> Tabloid:
    """Apply R_i (1-based) to rows i and i+1."""
    if not 1 <= i < len(t):
        raise IndexError(f"R_{i} undefined on {len(t)} rows")
    rows = list(t)
    rows[i - 1], rows[i] = r_two_row(rows[i - 1], rows[i], check=False)
    return Tabloid(rows)


def sorting_sequence(current: Sequence[int], target: Sequence[int]) -> list[int]:
    """Adjacent swaps (1-based R indices) rearranging ``current`` into ``target``.

    Bubble sort keyed on target positions: the leftmost out-of-order part is
    carried rightward, one swap at a time. Equal parts never swap.
    """
    if sorted(current) != sorted(target):
        raise ShapeMismatch(f"{tuple(target)} is not a rearrangement of {tuple(current)}")
    # stable assignment of each current part to a target slot
    slots: dict[int, list[int]] = {}
    for pos, part in enumerate(target):
        slots.setdefault(part, []).append(pos)
    keys = [slots[part].pop(0) for part in current]
    seq = []
    swapped = True
    while swapped:
        swapped = False
        for j in range(len(keys) - 1):
            if keys[j] > keys[j + 1]:
                keys[j], keys[j + 1] = keys[j + 1], keys[j]
                seq.append(j + 1)
                swapped = True
    return seq


def sort_to_shape(t: Sequence[Sequence[int]], target: Sequence[int]) -> Tabloid:
    rows = [tuple(r) for r in t]
    for i in sorting_sequence([len(r) for r in rows], target):
        rows[i - 1], rows[i] = r_two_row(rows[i - 1], rows[i], check=False)
    return Tabloid(rows)


def apply_sequence(t: Sequence[Sequence[int]], seq: Sequence[int]) -> Tabloid:
    rows = [tuple(r) for r in t]
    for i in seq:
        rows[i - 1], rows[i] = r_two_row(rows[i - 1], rows[i], check=False)
    return Tabloid(rows)


def shape_of(t: Sequence[Sequence[int]]) -> Shape:
    return Shape(len(r) for r in t)
