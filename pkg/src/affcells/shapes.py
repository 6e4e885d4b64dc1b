"""Partitions, compositions and row-standard tabloids."""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence


class Shape(tuple):
    """A finite sequence of positive integers; a partition when weakly decreasing."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"shape parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def n(self) -> int:
        return sum(self)

    def is_partition(self) -> bool:
        return all(self[i] >= self[i + 1] for i in range(len(self) - 1))

    def reverse(self) -> Shape:
        return Shape(self[::-1])

    def __repr__(self) -> str:
        return f"Shape({tuple(self)!r})"


class Tabloid(tuple):
    """Rows of strictly increasing integers that together partition {1..n}.

    Stored as a tuple of row tuples. Construction does not validate, so the
    enumeration and involution code can build tabloids cheaply; call
    :meth:`validate` (or use :meth:`from_rows`) on untrusted input.
    """

    def __new__(cls, rows: Iterable[Iterable[int]] = ()):
        return super().__new__(cls, tuple(tuple(r) for r in rows))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> Tabloid:
        t = cls(rows)
        t.validate()
        return t

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self)

    @property
    def shape(self) -> Shape:
        return Shape(len(r) for r in self)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self)

    def validate(self) -> None:
        entries = []
        for row in self:
            if not row:
                raise ValueError("tabloid rows must be nonempty")
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"row {row} is not strictly increasing")
            entries.extend(row)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries of {tuple(self)} are not exactly 1..n")

    def is_standard(self) -> bool:
        """Partition shape with strictly increasing columns."""
        if not self.shape.is_partition():
            return False
        for upper, lower in zip(self, self[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self]

    def __repr__(self) -> str:
        return f"Tabloid({[list(r) for r in self]!r})"


def partitions_of(n: int) -> list[Shape]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Shape(p) for p in _partitions(n, n)]


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def rsyt_count(shape: Sequence[int]) -> int:
    total = factorial(sum(shape))
    for part in shape:
        total //= factorial(part)
    return total


def enumerate_rsyt(shape: Sequence[int]) -> Iterator[Tabloid]:
    """Stream every row-standard tabloid of ``shape`` exactly once.

    Entries n, n-1, ..., 1 are assigned a row index in turn; the sequences of
    row indices come out in lexicographic order. Memory stays O(n).
    """
    shape = tuple(shape)
    n = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]
    room = list(shape)

    def place(entry: int) -> Iterator[Tabloid]:
        if entry == 0:
            yield Tabloid(tuple(reversed(r)) for r in rows)
            return
        for i in range(len(shape)):
            if room[i]:
                room[i] -= 1
                rows[i].append(entry)
                yield from place(entry - 1)
                rows[i].pop()
                room[i] += 1

    yield from place(n)


def enumerate_syt(partition: Sequence[int]) -> Iterator[Tabloid]:
    """Stream the standard Young tableaux of ``partition``, in RSYT order."""
    if not Shape(partition).is_partition():
        raise ValueError(f"{tuple(partition)} is not a partition")
    for t in enumerate_rsyt(partition):
        if t.is_standard():
            yield t


def rho2(k: int) -> Shape:
    """(2,...,2) or (2,...,2,1): the cycle type of the longest element of S_k."""
    if k < 1:
        raise ValueError("k must be positive")
    return Shape((2,) * (k // 2) + (1,) * (k % 2))


def union_partitions(a: Sequence[int], b: Sequence[int]) -> Shape:
    return Shape(sorted(tuple(a) + tuple(b), reverse=True))


def domino_count(partition: Sequence[int]) -> int:
    """Number of standard domino tableaux of ``partition``.

    For odd size the single monomino is pinned to the corner cell (1,1),
    which is the convention under which these count the left cells of the
    type B/C Weyl group; an even-size shape has no monomino.
    """
    p = Shape(partition)
    if not p.is_partition():
        raise ValueError(f"{tuple(p)} is not a partition")
    if p.n % 2:
        return _dominoes_with_corner_monomino(tuple(p))
    return _dominoes(tuple(p))


@lru_cache(maxsize=None)
def _dominoes(p: tuple[int, ...]) -> int:
    if not p:
        return 1
    total = 0
    for q in _domino_removals(p):
        total += _dominoes(q)
    return total


@lru_cache(maxsize=None)
def _dominoes_with_corner_monomino(p: tuple[int, ...]) -> int:
    if p == (1,):
        return 1
    total = 0
    for q in _domino_removals(p):
        if q:
            total += _dominoes_with_corner_monomino(q)
    return total


def _domino_removals(p: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Partitions obtained from ``p`` by deleting one domino."""
    r = len(p)
    for i in range(r):
        below = p[i + 1] if i + 1 < r else 0
        # horizontal domino at the end of row i
        if p[i] - 2 >= below:
            q = list(p)
            q[i] -= 2
            yield tuple(x for x in q if x)
        # vertical domino in rows i, i+1
        if i + 1 < r and p[i] == p[i + 1]:
            below2 = p[i + 2] if i + 2 < r else 0
            if p[i + 1] - 1 >= below2:
                q = list(p)
                q[i] -= 1
                q[i + 1] -= 1
                yield tuple(x for x in q if x)
