"""Borel-Weil-Bott on P^d, Weyl dimensions and torus characters.

A :class:`Character` is a finitely supported weight -> multiplicity map.  The
modules of interest are infinite dimensional, so a character carries a
:class:`Region`: the set of weights on which its multiplicities are known to be
complete.  Comparing characters is only meaningful on the common region.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import DimensionError, NotACharacterError, PreconditionError, UncertifiedError
from .weights import Weight, find_i0, is_dominant, w_dot


# -- certified regions ------------------------------------------------------

def _l1(mu: Sequence[int]) -> int:
    return sum(abs(x) for x in mu)


def _pole(mu: Sequence[int]) -> int:
    return sum(-x for x in mu if x < 0)


@dataclass(frozen=True)
class Constraint:
    """One half-space-like cut ``measure(weight) <= bound``.

    kind is one of ``l1`` (sum of |entries|), ``pole`` (sum of negative parts)
    or ``prefix`` (sum of the first ``arg`` entries).
    """

    kind: str
    bound: int
    arg: int = 0

    def measure(self, mu: Sequence[int]) -> int:
        if self.kind == "l1":
            return _l1(mu)
        if self.kind == "pole":
            return _pole(mu)
        if self.kind == "prefix":
            return sum(mu[: self.arg])
        raise ValueError(f"unknown constraint kind {self.kind!r}")

    def contains(self, mu: Sequence[int]) -> bool:
        return self.measure(mu) <= self.bound


@dataclass(frozen=True)
class Region:
    """Conjunction of constraints; the empty conjunction is the whole lattice."""

    constraints: frozenset[Constraint] = frozenset()

    @staticmethod
    def everything() -> "Region":
        return Region()

    @staticmethod
    def l1(bound: int) -> "Region":
        return Region(frozenset({Constraint("l1", bound)}))

    @staticmethod
    def pole(bound: int) -> "Region":
        return Region(frozenset({Constraint("pole", bound)}))

    @staticmethod
    def prefix(length: int, bound: int) -> "Region":
        return Region(frozenset({Constraint("prefix", bound, length)}))

    def contains(self, mu: Sequence[int]) -> bool:
        return all(c.contains(mu) for c in self.constraints)

    def __and__(self, other: "Region") -> "Region":
        best: dict[tuple[str, int], int] = {}
        for c in self.constraints | other.constraints:
            key = (c.kind, c.arg)
            best[key] = min(best.get(key, c.bound), c.bound)
        return Region(frozenset(Constraint(k, b, a) for (k, a), b in best.items()))

    def is_full(self) -> bool:
        return not self.constraints

    def describe(self) -> str:
        if not self.constraints:
            return "all"
        parts = []
        for c in sorted(self.constraints, key=lambda c: (c.kind, c.arg)):
            name = f"prefix{c.arg}" if c.kind == "prefix" else c.kind
            parts.append(f"{name}<={c.bound}")
        return ",".join(parts)


# -- characters -------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    terms: Mapping[Weight, int] = field(default_factory=dict)
    region: Region = field(default_factory=Region)

    def __post_init__(self) -> None:
        clean: dict[Weight, int] = {}
        for w, m in self.terms.items():
            if m < 0:
                raise NotACharacterError(f"negative multiplicity {m} at {w}")
            if m and self.region.contains(w):
                clean[tuple(w)] = int(m)
        object.__setattr__(self, "terms", clean)

    @staticmethod
    def from_weights(weights: Iterable[Sequence[int]], region: Region | None = None) -> "Character":
        return Character(Counter(tuple(w) for w in weights), region or Region())

    def mass(self) -> int:
        return sum(self.terms.values())

    def __getitem__(self, w: Sequence[int]) -> int:
        return self.terms.get(tuple(w), 0)

    def __iter__(self) -> Iterator[Weight]:
        return iter(sorted(self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def restrict(self, region: Region) -> "Character":
        return Character(self.terms, self.region & region)

    def __add__(self, other: "Character") -> "Character":
        reg = self.region & other.region
        out = Counter()
        for src in (self.terms, other.terms):
            for w, m in src.items():
                if reg.contains(w):
                    out[w] += m
        return Character(out, reg)

    def scale(self, k: int) -> "Character":
        return Character({w: k * m for w, m in self.terms.items()}, self.region)

    def minus(self, other: "Character") -> "Character":
        """Coefficient-wise difference on the common region; raises if negative."""
        reg = self.region & other.region
        out = Counter({w: m for w, m in self.terms.items() if reg.contains(w)})
        for w, m in other.terms.items():
            if reg.contains(w):
                out[w] -= m
        bad = {w: m for w, m in out.items() if m < 0}
        if bad:
            w = min(bad)
            raise NotACharacterError(f"difference negative at {w}: {bad[w]}")
        return Character(out, reg)

    def signed_minus(self, other: "Character") -> dict[Weight, int]:
        reg = self.region & other.region
        out = Counter({w: m for w, m in self.terms.items() if reg.contains(w)})
        for w, m in other.terms.items():
            if reg.contains(w):
                out[w] -= m
        return {w: m for w, m in out.items() if m}

    def equal_on_common_region(self, other: "Character") -> bool:
        return not self.signed_minus(other)

    def dominated_by(self, other: "Character") -> bool:
        return all(m <= 0 for m in self.signed_minus(other).values())

    def map_weights(self, f: Callable[[Weight], Weight], region: Region | None = None) -> "Character":
        out = Counter()
        for w, m in self.terms.items():
            out[f(w)] += m
        return Character(out, region if region is not None else Region())

    def by_measure(self, measure: Callable[[Weight], int]) -> dict[int, int]:
        out: Counter = Counter()
        for w, m in self.terms.items():
            out[measure(w)] += m
        return dict(sorted(out.items()))


def convolve(a: Character, b: Character, region: Region | None = None) -> Character:
    """Weight-wise product.  With truncated factors the caller passes the
    region on which the product is known to be complete."""
    if not (a.region.is_full() and b.region.is_full()) and region is None:
        raise UncertifiedError("convolution of truncated characters needs an explicit region")
    reg = region or Region()
    out: Counter = Counter()
    for w1, m1 in a.terms.items():
        for w2, m2 in b.terms.items():
            if len(w1) != len(w2):
                raise DimensionError("weights of different length")
            w = tuple(x + y for x, y in zip(w1, w2))
            if reg.contains(w):
                out[w] += m1 * m2
    return Character(out, reg)


def signed_sum(parts: Iterable[tuple[int, Character]], region: Region) -> dict[Weight, int]:
    out: Counter = Counter()
    for sign, ch in parts:
        for w, m in ch.terms.items():
            if region.contains(w):
                out[w] += sign * m
    return {w: m for w, m in out.items() if m}


# -- Weyl dimension and irreducible characters ------------------------------

def weyl_dim(mu: Sequence[int]) -> int:
    if not is_dominant(mu):
        raise PreconditionError(f"{tuple(mu)} is not dominant")
    n = len(mu)
    num = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            num *= Fraction(mu[i] - mu[j] + j - i, j - i)
    assert num.denominator == 1
    return int(num)


@lru_cache(maxsize=None)
def _gt_weights(mu: Weight) -> tuple[tuple[Weight, int], ...]:
    """Weights of a polynomial irrep by branching GL_n -> GL_{n-1}.

    The interlacing rows are exactly the horizontal strips that peel off the
    entries n of a semistandard tableau.
    """
    n = len(mu)
    if n == 1:
        return ((mu, 1),)
    out: Counter = Counter()
    ranges = [range(mu[k + 1], mu[k] + 1) for k in range(n - 1)]

    def rec(k: int, nu: list[int]) -> None:
        if k == n - 1:
            last = sum(mu) - sum(nu)
            for w, m in _gt_weights(tuple(nu)):
                out[w + (last,)] += m
            return
        for x in ranges[k]:
            nu.append(x)
            rec(k + 1, nu)
            nu.pop()

    rec(0, [])
    return tuple(sorted(out.items()))


def irrep_character(mu: Sequence[int]) -> Character:
    mu = tuple(int(x) for x in mu)
    if not is_dominant(mu):
        raise PreconditionError(f"{mu} is not dominant")
    shift = mu[-1]
    base = tuple(x - shift for x in mu)
    return Character({tuple(x + shift for x in w): m for w, m in _gt_weights(base)})


def decompose_character(chi: Character) -> list[tuple[Weight, int]]:
    """Greedy peeling by the lexicographically largest weight."""
    rest = Counter(chi.terms)
    out: list[tuple[Weight, int]] = []
    while rest:
        top = max(rest)
        m = rest[top]
        if m < 0 or not is_dominant(top):
            raise NotACharacterError(f"cannot peel weight {top} with multiplicity {m}")
        for w, k in irrep_character(top).terms.items():
            rest[w] -= m * k
            if rest[w] == 0:
                del rest[w]
        out.append((top, m))
    return out


# -- Bott cohomology ----------------------------------------------------------

@dataclass(frozen=True)
class CohomologyResult:
    degree: int | None
    highest_weight: Weight | None
    dimension: int

    @property
    def present(self) -> bool:
        return self.degree is not None

    def euler_characteristic(self) -> int:
        return 0 if self.degree is None else (-1) ** self.degree * self.dimension


def bwb_cohomology(d: int, lam: Sequence[int]) -> CohomologyResult:
    i0, case = find_i0(d, lam)
    if case == "degenerate":
        return CohomologyResult(None, None, 0)
    mu = w_dot(i0, lam)
    return CohomologyResult(i0, mu, weyl_dim(mu))


def cohomology_character(d: int, lam: Sequence[int]) -> tuple[int | None, Character]:
    res = bwb_cohomology(d, lam)
    if res.degree is None:
        return None, Character()
    return res.degree, irrep_character(res.highest_weight)
