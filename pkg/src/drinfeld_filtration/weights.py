"""Root and weight combinatorics for GL_{d+1}.

Weights are plain tuples of ints indexed 0..d.  Weyl group elements are
permutations of positions: ``perm[k]`` is the position that coordinate ``k``
is moved to.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DimensionError, PreconditionError

Weight = tuple[int, ...]
Perm = tuple[int, ...]


def weight(entries: Iterable[int]) -> Weight:
    w = tuple(int(x) for x in entries)
    if not w:
        raise DimensionError("weight must have length >= 1")
    return w


def is_dominant(mu: Sequence[int]) -> bool:
    return all(mu[k] >= mu[k + 1] for k in range(len(mu) - 1))


def is_levi_1d_dominant(lam: Sequence[int]) -> bool:
    """Dominance for L_(1,d): only lam_1 >= ... >= lam_d is required."""
    return is_dominant(lam[1:])


def rho(d: int) -> Weight:
    return tuple(-k for k in range(d + 1))


@dataclass(frozen=True)
class RootSystem:
    d: int

    @cached_property
    def rho(self) -> Weight:
        return rho(self.d)

    def root(self, i: int, j: int) -> Weight:
        """alpha_{i,j} = eps_i - eps_j."""
        if i == j:
            raise ValueError("alpha_{i,i} is not a root")
        v = [0] * (self.d + 1)
        v[i] += 1
        v[j] -= 1
        return tuple(v)

    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        # alpha_i = alpha_{i+1,i}
        return tuple(self.root(i + 1, i) for i in range(self.d))

    @cached_property
    def all_roots(self) -> tuple[Weight, ...]:
        n = self.d + 1
        return tuple(self.root(i, j) for i in range(n) for j in range(n) if i != j)


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def transposition(n: int, k: int) -> Perm:
    """s_k: swaps positions k-1 and k (1 <= k <= n-1)."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"s_{k} undefined for n={n}")
    p = list(range(n))
    p[k - 1], p[k] = k, k - 1
    return tuple(p)


def compose(w: Perm, v: Perm) -> Perm:
    """The product w*v, acting as w(v(x))."""
    if len(w) != len(v):
        raise DimensionError("permutation sizes differ")
    return tuple(w[v[k]] for k in range(len(v)))


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for k, t in enumerate(w):
        inv[t] = k
    return tuple(inv)


def act(w: Perm, v: Sequence[int]) -> Weight:
    if len(w) != len(v):
        raise DimensionError(f"permutation of size {len(w)} applied to weight of length {len(v)}")
    out = [0] * len(v)
    for k, t in enumerate(w):
        out[t] = v[k]
    return tuple(out)


@dataclass(frozen=True)
class WeylWord:
    """w_i = s_i s_{i-1} ... s_1 in the Weyl group of GL_{d+1}."""

    i: int
    d: int

    def __post_init__(self) -> None:
        if not 0 <= self.i <= self.d:
            raise ValueError(f"w_{self.i} undefined for d={self.d}")

    @cached_property
    def perm(self) -> Perm:
        n = self.d + 1
        p = identity_perm(n)
        for k in range(1, self.i + 1):
            p = compose(transposition(n, k), p)
        return p

    @property
    def length(self) -> int:
        return sum(1 for a in range(len(self.perm)) for b in range(a + 1, len(self.perm))
                   if self.perm[a] > self.perm[b])


def dot_perm(w: Perm, lam: Sequence[int]) -> Weight:
    r = rho(len(lam) - 1)
    shifted = act(w, [a + b for a, b in zip(lam, r)])
    return tuple(a - b for a, b in zip(shifted, r))


def dot_action(w: WeylWord | Perm, lam: Sequence[int]) -> Weight:
    """w * lam = w(lam + rho) - rho."""
    if isinstance(w, WeylWord):
        if len(lam) != w.d + 1:
            raise DimensionError(f"weight of length {len(lam)} for rank d={w.d}")
        w = w.perm
    return dot_perm(w, lam)


def w_dot(i: int, lam: Sequence[int]) -> Weight:
    return dot_action(WeylWord(i, len(lam) - 1), lam)


def find_i0(d: int, lam: Sequence[int]) -> tuple[int, str]:
    """Bott integer and case tag ('dominant-regular' or 'degenerate')."""
    if len(lam) != d + 1:
        raise DimensionError(f"weight of length {len(lam)} for rank d={d}")
    if not is_levi_1d_dominant(lam):
        raise PreconditionError(f"{tuple(lam)} is not L_(1,d)-dominant")
    images = [w_dot(i, lam) for i in range(d + 1)]
    hits = [i for i, mu in enumerate(images) if is_dominant(mu)]
    if len(hits) > 1:
        raise AssertionError(f"several dominant w_i*lam for {tuple(lam)}")
    if hits:
        return hits[0], "dominant-regular"
    for i in range(d):
        if images[i] == images[i + 1]:
            return i, "degenerate"
    raise AssertionError(f"no dominant image and no collision for {tuple(lam)}")


def dominance_compare(mu: Sequence[int], nu: Sequence[int]) -> str:
    if len(mu) != len(nu):
        raise DimensionError("weights of different length")
    if tuple(mu) == tuple(nu):
        return "equal"
    if sum(mu) != sum(nu):
        return "incomparable"
    partial, ge, le = 0, True, True
    for a, b in zip(mu, nu):
        partial += a - b
        ge &= partial >= 0
        le &= partial <= 0
    if ge:
        return "greater"
    if le:
        return "less"
    return "incomparable"
