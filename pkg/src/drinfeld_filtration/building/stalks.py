"""Tubes over unramified extension rings and the stalk complexes."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterator, Sequence

from ..errors import PreconditionError
from .homology import HomologyResult, order_complex_homology
from .modules import FiniteModule, enumerate_submodules, is_prime
from .posets import FlagPoset

RingElt = tuple[int, ...]


def _poly_mod_p_irreducible(f: Sequence[int], p: int) -> bool:
    """Monic f (coefficients low to high) has no factor of degree <= deg/2 mod p."""
    deg = len(f) - 1
    f = [c % p for c in f]
    if deg <= 0 or f[-1] != 1:
        return False

    def divides(g: list[int]) -> bool:
        r = list(f)
        while len(r) >= len(g) and any(r):
            if r[-1] == 0:
                r.pop()
                continue
            c = r[-1]
            shift = len(r) - len(g)
            for i, x in enumerate(g):
                r[shift + i] = (r[shift + i] - c * x) % p
            r.pop()
        return not any(r)

    for k in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=k):
            if divides(list(low) + [1]):
                return False
    return True


@dataclass(frozen=True)
class ExtensionRing:
    """(Z/p^n)[t]/(f) with f monic and irreducible mod p; elements are coefficient tuples."""

    p: int
    n: int
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise PreconditionError(f"{self.p} is not prime")
        if not _poly_mod_p_irreducible(self.f, self.p):
            raise PreconditionError(f"{self.f} is not monic irreducible mod {self.p}")

    @staticmethod
    def quadratic(p: int, n: int) -> "ExtensionRing":
        for a, b in product(range(p), repeat=2):
            try:
                return ExtensionRing(p, n, (b, a, 1))
            except PreconditionError:
                continue
        raise AssertionError("no irreducible quadratic found")

    @property
    def degree(self) -> int:
        return len(self.f) - 1

    @property
    def modulus(self) -> int:
        return self.p ** self.n

    def elements(self) -> Iterator[RingElt]:
        return product(range(self.modulus), repeat=self.degree)

    def is_unit(self, x: RingElt) -> bool:
        # the ring is local with maximal ideal pR
        return any(c % self.p for c in x)

    def mul(self, x: RingElt, y: RingElt) -> RingElt:
        N, e = self.modulus, self.degree
        prod_ = [0] * (2 * e - 1)
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                prod_[i + j] += a * b
        for k in range(len(prod_) - 1, e - 1, -1):
            c = prod_[k]
            if c:
                for i in range(e):
                    prod_[k - e + i] -= c * self.f[i]
        return tuple(c % N for c in prod_[:e])

    @cached_property
    def units(self) -> tuple[RingElt, ...]:
        return tuple(x for x in self.elements() if self.is_unit(x))

    def inverse(self, x: RingElt) -> RingElt:
        one = (1,) + (0,) * (self.degree - 1)
        for y in self.units:
            if self.mul(x, y) == one:
                return y
        raise ValueError(f"{x} is not a unit")

    def generator(self) -> RingElt:
        """The class of t."""
        return (0, 1) + (0,) * (self.degree - 2)


@dataclass(frozen=True)
class RingLine:
    """The R-line spanned by a primitive vector of R^m."""

    ring: ExtensionRing
    vector: tuple[RingElt, ...]

    def __post_init__(self) -> None:
        if not any(self.ring.is_unit(x) for x in self.vector):
            raise PreconditionError("line generator must be primitive")

    @property
    def m(self) -> int:
        return len(self.vector)

    def components(self) -> list[tuple[int, ...]]:
        """v = sum_s v_s t^s with v_s in (Z/p^n)^m."""
        return [tuple(x[s] for x in self.vector) for s in range(self.ring.degree)]

    def component_span(self) -> FiniteModule:
        R = self.ring
        return FiniteModule.span(self.components(), R.p, R.n, self.m)


def tube_member(U: FiniteModule, L: RingLine) -> bool:
    """Is L contained in U (x) R?  R is free over Z/p^n on 1, t, ..., so this
    holds iff every coordinate component of the generator lies in U."""
    R = L.ring
    if (U.p, U.n, U.m) != (R.p, R.n, L.m):
        raise PreconditionError("module and line live over different rings or ranks")
    return all(U.contains(c) for c in L.components())


def tube_member_bruteforce(U: FiniteModule, L: RingLine) -> bool:
    """Search all R-combinations of the generators of U for the line generator."""
    R = L.ring
    gens = list(U.rows)
    if not gens:
        return not any(any(x) for x in L.vector)
    target = L.vector
    N = R.modulus
    for coeffs in product(list(R.elements()), repeat=len(gens)):
        acc = [tuple([0] * R.degree) for _ in range(L.m)]
        for a, g in zip(coeffs, gens):
            for k in range(L.m):
                term = R.mul(a, (g[k],) + (0,) * (R.degree - 1))
                acc[k] = tuple((x + y) % N for x, y in zip(acc[k], term))
        if tuple(acc) == target:
            return True
    return False


def enumerate_lines(R: ExtensionRing, m: int) -> Iterator[RingLine]:
    """One normalized generator per point of P^{m-1}(R): first unit coordinate is 1."""
    one = (1,) + (0,) * (R.degree - 1)
    nonunits = [x for x in R.elements() if not R.is_unit(x)]
    everything = list(R.elements())
    for lead in range(m):
        for head in product(nonunits, repeat=lead):
            for tail in product(everything, repeat=m - lead - 1):
                yield RingLine(R, head + (one,) + tail)


@lru_cache(maxsize=None)
def _posets(p: int, n: int, m: int) -> tuple[FlagPoset, FlagPoset]:
    lt = lambda a, b: a < b  # noqa: E731
    T = FlagPoset.from_relation(enumerate_submodules(p, n, m, "T"), lt)
    F = FlagPoset.from_relation(enumerate_submodules(p, n, m, "T_free"), lt)
    return T, F


def stalk_poset(S: FiniteModule, variant: str) -> FlagPoset:
    """C^0 = members of T (all_submodules) or T_free (free_flags) containing S."""
    T, F = _posets(S.p, S.n, S.m)
    P = {"all_submodules": T, "free_flags": F}.get(variant)
    if P is None:
        raise ValueError(f"unknown variant {variant!r}")
    keep = [k for k, U in enumerate(P.elements) if U.contains_module(S)]
    return P.sub(keep)


@dataclass(frozen=True)
class StalkResult:
    in_tube: bool
    size: int
    homology: HomologyResult | None

    def vanishes(self) -> bool:
        return (not self.in_tube) or self.homology.is_acyclic()


def stalk_complex_homology(p: int, n: int, d: int, L: RingLine, variant: str) -> StalkResult:
    R = L.ring
    if (R.p, R.n, L.m) != (p, n, d + 1):
        raise PreconditionError("line does not match (p, n, d)")
    P = stalk_poset(L.component_span(), variant)
    if len(P) == 0:
        return StalkResult(False, 0, None)
    return StalkResult(True, len(P), order_complex_homology(P))


def covering_free_modules(S: FiniteModule) -> dict[int, int]:
    """Number of free members of T_free containing S, by rank."""
    _, F = _posets(S.p, S.n, S.m)
    out: dict[int, int] = {}
    for U in F.elements:
        if U.contains_module(S):
            r = U.ranks()[0]
            out[r] = out.get(r, 0) + 1
    return out


def quillen_certify(P: FlagPoset) -> object | None:
    """Look for x0 among the minimal elements with f(U) = U cap x0 a valid
    Quillen retraction; return x0 or None."""
    from .posets import quillen_check

    minimal = [P.elements[k] for k in range(len(P)) if not P.less[:, k].any()]
    for x0 in minimal:
        try:
            if quillen_check(P, lambda U, x0=x0: U.intersect(x0), x0):
                return x0
        except PreconditionError:
            continue
    return None
