"""Exact symmetric-function kernel: characters, charge, Green polynomials, power sums."""

from __future__ import annotations

import json
import os
import tempfile
import threading
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

from .shapes import Shape, partitions_of


class SizeMismatch(ValueError):
    pass


def _part(p: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted((int(x) for x in p), reverse=True))


class IntPolynomial:
    """Dense integer polynomial in t; coeffs[d] multiplies t**d."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (m - len(self.coeffs))
        b = other.coeffs + (0,) * (m - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


class PowerSumVector:
    """Finite rational combination of power sums p_rho, keyed by partitions."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None):
        self.terms: dict[tuple[int, ...], Fraction] = {}
        for key, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                k = _part(key)
                self.terms[k] = self.terms.get(k, Fraction(0)) + coeff
                if not self.terms[k]:
                    del self.terms[k]

    @classmethod
    def one(cls) -> PowerSumVector:
        return cls({(): 1})

    def __getitem__(self, key: Sequence[int]) -> Fraction:
        return self.terms.get(_part(key), Fraction(0))

    def __add__(self, other: PowerSumVector) -> PowerSumVector:
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return PowerSumVector(terms)

    def scale(self, c) -> PowerSumVector:
        return PowerSumVector({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PowerSumVector):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __neg__(self) -> PowerSumVector:
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, PowerSumVector) and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(f"({c})p{list(k)}" for k, c in sorted(self.terms.items()))
        return f"PowerSumVector({body or '0'})"


def multiply(a: PowerSumVector, b: PowerSumVector) -> PowerSumVector:
    out: dict[tuple[int, ...], Fraction] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            k = _part(ka + kb)
            out[k] = out.get(k, Fraction(0)) + ca * cb
    return PowerSumVector(out)


def scalar_product(a: PowerSumVector, b: PowerSumVector) -> Fraction:
    """Hall inner product, <p_rho, p_sigma> = z_rho if rho == sigma else 0."""
    total = Fraction(0)
    for k, c in a.terms.items():
        d = b.terms.get(k)
        if d:
            total += c * d * z_of(k)
    return total


@lru_cache(maxsize=None)
def z_of(rho: Sequence[int]) -> int:
    out = 1
    for i, m in Counter(rho).items():
        out *= i**m * factorial(m)
    return out


def b_of(lam: Sequence[int]) -> int:
    return sum(i * part for i, part in enumerate(lam))


def character(mu: Sequence[int], rho: Sequence[int]) -> int:
    """chi^mu at cycle type rho by Murnaghan-Nakayama on beta-sets."""
    mu, rho = _part(mu), _part(rho)
    if sum(mu) != sum(rho):
        raise SizeMismatch(f"|{mu}| != |{rho}|")
    return _mn(mu, rho)


@lru_cache(maxsize=None)
def _mn(mu: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    length = len(mu)
    beta = [mu[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # each bead jumped over adds one to the leg length
        height = sum(1 for x in beta if target < x < b)
        new_beta = sorted((x if x != b else target for x in beta), reverse=True)
        nu = tuple(x - (length - 1 - i) for i, x in enumerate(new_beta))
        nu = tuple(p for p in nu if p > 0)
        total += (-1) ** height * _mn(nu, rest)
    return total


def semistandard_tableaux(shape: Sequence[int], content: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """SSYT of ``shape`` and ``content``, built letter by letter as horizontal strips."""
    shape = tuple(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        return
    rows: list[list[int]] = [[] for _ in shape]

    def strips(letter: int, left: int, r: int) -> Iterator[None]:
        # distribute ``left`` copies of ``letter`` over rows r, r+1, ...
        if left == 0:
            yield
            return
        if r == len(shape):
            return
        cur = len(rows[r])
        limit = shape[r] - cur
        if r:
            # cells added in row r must sit under cells filled with smaller letters
            limit = min(limit, _prefix_below(rows[r - 1], letter) - cur)
        for k in range(min(limit, left), -1, -1):
            rows[r].extend([letter] * k)
            yield from strips(letter, left - k, r + 1)
            del rows[r][cur:]

    def fill(idx: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if idx == len(content):
            yield tuple(tuple(r) for r in rows if r)
            return
        for _ in strips(idx + 1, content[idx], 0):
            yield from fill(idx + 1)

    yield from fill(0)


def _prefix_below(row: list[int], letter: int) -> int:
    """Number of cells in ``row`` holding letters strictly smaller than ``letter``."""
    count = 0
    for x in row:
        if x < letter:
            count += 1
        else:
            break
    return count


def charge(word: Sequence[int]) -> int:
    """Lascoux-Schuetzenberger charge of a word with partition content."""
    letters = list(word)
    total = 0
    while letters:
        top = max(letters)
        used = [False] * len(letters)
        pos = len(letters)
        index = 0
        for letter in range(1, top + 1):
            # scan leftwards cyclically from pos - 1 for ``letter``
            found = None
            for p in range(pos - 1, -1, -1):
                if not used[p] and letters[p] == letter:
                    found = p
                    break
            if found is None:
                index += 1
                for p in range(len(letters) - 1, pos - 1, -1):
                    if not used[p] and letters[p] == letter:
                        found = p
                        break
            if found is None:
                raise ValueError(f"content of {tuple(word)} is not a partition")
            if letter > 1:
                total += index
            used[found] = True
            pos = found
        letters = [x for x, u in zip(letters, used) if not u]
    return total


@lru_cache(maxsize=None)
def _kostka_foulkes(mu: tuple[int, ...], lam: tuple[int, ...]) -> IntPolynomial:
    counts: Counter[int] = Counter()
    for t in semistandard_tableaux(mu, lam):
        counts[charge([x for row in reversed(t) for x in row])] += 1
    top = max(counts, default=-1)
    return IntPolynomial(counts.get(d, 0) for d in range(top + 1))


def kostka_foulkes(mu: Sequence[int], lam: Sequence[int]) -> IntPolynomial:
    """K_{mu,lam}(t) as the charge generating function over SSYT(mu, lam)."""
    mu, lam = _part(mu), _part(lam)
    if sum(mu) != sum(lam):
        raise SizeMismatch(f"|{mu}| != |{lam}|")
    return _kostka_foulkes(mu, lam)


class _GreenCache:
    """Memo of Green polynomials, optionally mirrored to a JSON file."""

    def __init__(self):
        self._lock = threading.Lock()
        self._table: dict[str, tuple[int, ...]] = {}
        self._path: str | None = None

    @staticmethod
    def key(lam: tuple[int, ...], rho: tuple[int, ...]) -> str:
        return ",".join(map(str, lam)) + "|" + ",".join(map(str, rho))

    def attach(self, cache_dir: str | None) -> None:
        if cache_dir is None:
            self._path = None
            return
        os.makedirs(cache_dir, exist_ok=True)
        self._path = os.path.join(cache_dir, "green.json")
        if os.path.exists(self._path):
            with open(self._path) as fh:
                loaded = json.load(fh)
            with self._lock:
                for k, v in loaded.items():
                    self._table.setdefault(k, tuple(v))

    def get(self, key: str) -> tuple[int, ...] | None:
        with self._lock:
            return self._table.get(key)

    def put(self, key: str, coeffs: tuple[int, ...]) -> None:
        with self._lock:
            self._table[key] = coeffs

    def flush(self) -> None:
        if self._path is None:
            return
        with self._lock:
            data = {k: list(v) for k, v in sorted(self._table.items())}
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(self._path), suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh)
        os.replace(tmp, self._path)

    def clear(self) -> None:
        with self._lock:
            self._table.clear()


GREEN_CACHE = _GreenCache()


def green_polynomial(lam: Sequence[int], rho: Sequence[int]) -> IntPolynomial:
    """X^lam_rho(t) = sum_mu chi^mu(rho) t^{b(lam)} K_{mu,lam}(1/t)."""
    lam, rho = _part(lam), _part(rho)
    if sum(lam) != sum(rho):
        raise SizeMismatch(f"|{lam}| != |{rho}|")
    key = GREEN_CACHE.key(lam, rho)
    hit = GREEN_CACHE.get(key)
    if hit is not None:
        return IntPolynomial(hit)
    b = b_of(lam)
    coeffs = [0] * (b + 1)
    for mu in partitions_of(sum(lam)):
        chi = character(mu, rho)
        if not chi:
            continue
        k = kostka_foulkes(mu, lam)
        if k.degree > b:
            raise ArithmeticError(f"deg K_{mu},{lam} exceeds b({lam})")
        for d, c in enumerate(k.coeffs):
            coeffs[b - d] += chi * c
    poly = IntPolynomial(coeffs)
    GREEN_CACHE.put(key, poly.coeffs)
    return poly


def green_at_minus_one(lam: Sequence[int]) -> int:
    from .shapes import rho2

    lam = _part(lam)
    if not lam:
        return 1
    return green_polynomial(lam, rho2(sum(lam)))(-1)


def qprime_at_minus_one(lam: Sequence[int]) -> PowerSumVector:
    """sum_rho z_rho^-1 (-1)^{b(lam)} X^lam_rho(-1) p_rho."""
    lam = _part(lam)
    if not lam:
        return PowerSumVector.one()
    sign = (-1) ** b_of(lam)
    return PowerSumVector(
        {rho: Fraction(sign * green_polynomial(lam, rho)(-1), z_of(rho)) for rho in partitions_of(sum(lam))}
    )


def plethysm_sk_p2(k: int) -> PowerSumVector:
    """h_k[p_2] = sum_{rho |- k} z_rho^-1 p_{2 rho}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return PowerSumVector({tuple(2 * x for x in rho): Fraction(1, z_of(rho)) for rho in partitions_of(k)})


def schur_to_powersum(mu: Sequence[int]) -> PowerSumVector:
    mu = _part(mu)
    return PowerSumVector({rho: Fraction(character(mu, rho), z_of(rho)) for rho in partitions_of(sum(mu))})


def power_sum(rho: Sequence[int]) -> PowerSumVector:
    return PowerSumVector({_part(rho): 1})


__all__ = [
    "IntPolynomial",
    "PowerSumVector",
    "Shape",
    "SizeMismatch",
    "b_of",
    "character",
    "charge",
    "green_at_minus_one",
    "green_polynomial",
    "kostka_foulkes",
    "multiply",
    "plethysm_sk_p2",
    "power_sum",
    "qprime_at_minus_one",
    "scalar_product",
    "schur_to_powersum",
    "semistandard_tableaux",
    "z_of",
]
