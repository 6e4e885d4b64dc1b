"""Evacuation, the affine Schuetzenberger involution on tabloids, and the Phi map."""

from __future__ import annotations

from typing import Sequence

from .rmatrix import ShapeMismatch, sort_to_shape
from .shapes import Tabloid


class NotStandard(ValueError):
    pass


def rectify(cells: dict[tuple[int, int], int]) -> Tabloid:
    """Jeu de taquin rectification of a skew standard filling.

    ``cells`` maps (row, col) to entries; the holes must form a Young diagram
    anchored at (0, 0).
    """
    cells = dict(cells)
    while True:
        holes = _inner_corners(cells)
        if not holes:
            break
        r, c = holes[-1]
        while True:
            right = cells.get((r, c + 1))
            below = cells.get((r + 1, c))
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                cells[(r, c)] = cells.pop((r, c + 1))
                c += 1
            else:
                cells[(r, c)] = cells.pop((r + 1, c))
                r += 1
    nrows = max((r for r, _ in cells), default=-1) + 1
    return Tabloid(
        tuple(cells[(r, c)] for c in sorted(c for rr, c in cells if rr == r))
        for r in range(nrows)
    )


def _inner_corners(cells: dict[tuple[int, int], int]) -> list[tuple[int, int]]:
    """Holes (r, c) of the inner shape whose removal keeps it a partition."""
    inner = []
    nrows = max((r for r, _ in cells), default=-1) + 1
    for r in range(nrows):
        cols = [c for rr, c in cells if rr == r]
        inner.append(min(cols) if cols else 0)
    # an empty row below filled rows contributes no holes
    corners = []
    for r, width in enumerate(inner):
        if width == 0:
            continue
        below = inner[r + 1] if r + 1 < len(inner) else 0
        if width > below:
            corners.append((r, width - 1))
    return corners


def evacuation(t: Sequence[Sequence[int]]) -> Tabloid:
    """Rotate by 180 degrees, complement i -> n+1-i, rectify."""
    t = Tabloid(t)
    if not t.is_standard():
        raise NotStandard(f"{t!r} is not a standard Young tableau")
    n = t.n
    if n == 0:
        return t
    nrows, width = len(t), len(t[0])
    cells = {}
    for i, row in enumerate(t):
        for j, x in enumerate(row):
            cells[(nrows - 1 - i, width - 1 - j)] = n + 1 - x
    return rectify(cells)


def rotate_complement(t: Sequence[Sequence[int]]) -> Tabloid:
    """Reverse the row order, then send every entry i to n+1-i."""
    n = sum(len(r) for r in t)
    return Tabloid(tuple(n + 1 - x for x in reversed(row)) for row in reversed(t))


def affine_omega(t: Sequence[Sequence[int]]) -> Tabloid:
    """Rotate-complement, then R-matrices back to the original row lengths."""
    return sort_to_shape(rotate_complement(t), [len(r) for r in t])


def is_omega_fixed(t: Sequence[Sequence[int]]) -> bool:
    return affine_omega(t) == tuple(tuple(r) for r in t)


def phi(t: Sequence[Sequence[int]]) -> Tabloid:
    """Drop the first and last rows (of equal length) and renormalize to 1..m."""
    if len(t) < 2 or len(t[0]) != len(t[-1]):
        raise ShapeMismatch("first and last rows must exist and have equal length")
    middle = t[1:-1]
    rank = {x: i for i, x in enumerate(sorted(x for row in middle for x in row), start=1)}
    return Tabloid(tuple(rank[x] for x in row) for row in middle)


def is_fixed_by_characterization(t: Sequence[Sequence[int]]) -> bool:
    """Fixed-point test for shapes (k, ..., k) through the Phi recursion."""
    if len(t) < 2 or len(t[0]) != len(t[-1]):
        raise ShapeMismatch("first and last rows must exist and have equal length")
    n = sum(len(r) for r in t)
    first, last = tuple(t[0]), tuple(t[-1])
    mirror = tuple(n + 1 - a for a in reversed(first))
    if last != mirror:
        return False
    if set(first) & set(mirror):
        return False
    return is_omega_fixed(phi(t))
