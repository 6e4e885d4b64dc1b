"""Extended affine symmetric group in window notation."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence


class InvalidWindow(ValueError):
    pass


class PeriodMismatch(ValueError):
    pass


@dataclass(frozen=True)
class AffinePermutation:
    """A bijection w of Z with w(k + n) = w(k) + n, stored as [w(1), ..., w(n)]."""

    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidWindow("period must be positive")
        object.__setattr__(self, "window", tuple(int(v) for v in self.window))
        if len(self.window) != self.n:
            raise InvalidWindow(f"window has length {len(self.window)}, expected {self.n}")
        if len({v % self.n for v in self.window}) != self.n:
            raise InvalidWindow(f"window {self.window} does not hit every residue mod {self.n}")

    def __call__(self, k: int) -> int:
        q, r = divmod(k - 1, self.n)
        return self.window[r] + q * self.n

    @property
    def shift(self) -> int:
        """Shift index c; zero exactly on the non-extended group."""
        return (sum(self.window) - self.n * (self.n + 1) // 2) // self.n

    def __mul__(self, other: AffinePermutation) -> AffinePermutation:
        return compose(self, other)

    def to_json(self) -> dict:
        return {"n": self.n, "window": list(self.window)}


def from_window(n: int, values: Sequence[int]) -> AffinePermutation:
    return AffinePermutation(n, tuple(values))


def apply(w: AffinePermutation, k: int) -> int:
    return w(k)


def identity(n: int) -> AffinePermutation:
    return AffinePermutation(n, tuple(range(1, n + 1)))


def s(i: int, n: int) -> AffinePermutation:
    """Simple reflection s_i, 0 <= i < n; s_0 swaps 0 and 1 (mod n)."""
    if not 0 <= i < n:
        raise ValueError(f"generator index {i} out of range for n={n}")
    window = list(range(1, n + 1))
    if i == 0:
        if n == 1:
            raise ValueError("s_0 needs n >= 2")
        window[0] -= 1
        window[-1] += 1
    else:
        window[i - 1], window[i] = window[i], window[i - 1]
    return AffinePermutation(n, tuple(window))


def tau(n: int) -> AffinePermutation:
    """The shift k -> k + 1."""
    return AffinePermutation(n, tuple(range(2, n + 2)))


def compose(u: AffinePermutation, v: AffinePermutation) -> AffinePermutation:
    """(u o v)(k) = u(v(k))."""
    if u.n != v.n:
        raise PeriodMismatch(f"cannot compose periods {u.n} and {v.n}")
    return AffinePermutation(u.n, tuple(u(x) for x in v.window))


def inverse(w: AffinePermutation) -> AffinePermutation:
    n = w.n
    window = [0] * n
    for k, v in enumerate(w.window, start=1):
        q, r = divmod(v - 1, n)
        window[r] = k - q * n
    return AffinePermutation(n, tuple(window))


def power(w: AffinePermutation, e: int) -> AffinePermutation:
    base = w if e >= 0 else inverse(w)
    out = identity(w.n)
    for _ in range(abs(e)):
        out = compose(out, base)
    return out


def omega_perm(w: AffinePermutation) -> AffinePermutation:
    """Conjugation by k -> 1 - k, i.e. omega(w)(k) = 1 - w(1 - k)."""
    return AffinePermutation(w.n, tuple(1 - w(1 - k) for k in range(1, w.n + 1)))


def random_element(
    n: int,
    word_length: int,
    tau_power: int = 0,
    rng_seed: int | None = None,
    generators: Sequence[int] | None = None,
) -> AffinePermutation:
    """Product of ``word_length`` random simple reflections times tau**tau_power.

    ``generators`` restricts the indices drawn from (default: 0..n-1).
    """
    if word_length < 0:
        raise ValueError("word_length must be nonnegative")
    rng = random.Random(rng_seed)
    pool = list(range(n)) if generators is None else list(generators)
    if n == 1:
        pool = [i for i in pool if i != 0]
    w = identity(n)
    for _ in range(word_length):
        if not pool:
            break
        w = compose(w, s(rng.choice(pool), n))
    return compose(w, power(tau(n), tau_power))
