"""Submodules of (Z/p^n)^m in Howell normal form."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

from ..errors import DimensionError, FeasibilityError, PreconditionError

Vector = tuple[int, ...]

ENUMERATION_GUARD = 10 ** 6


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def valuation(x: int, p: int, n: int) -> int:
    """p-adic valuation of x in Z/p^n (n for zero)."""
    x %= p ** n
    if x == 0:
        return n
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def howell_form(rows: Iterable[Sequence[int]], p: int, n: int, m: int) -> tuple[Vector, ...]:
    """Howell normal form over the local ring Z/p^n.

    Pivots are powers of p, entries above a pivot p^v lie in [0, p^v), and
    after each pivot step p^{n-v} times the pivot row is fed back into the
    remaining rows so that every element with leading zeros is reachable.
    """
    N = p ** n
    work = [[x % N for x in r] for r in rows]
    for r in work:
        if len(r) != m:
            raise DimensionError(f"row of length {len(r)} in ambient rank {m}")
    work = [r for r in work if any(r)]
    done: list[list[int]] = []
    pivcols: list[int] = []
    for c in range(m):
        cand = [r for r in work if r[c] % N]
        if not cand:
            continue
        best = min(cand, key=lambda r: valuation(r[c], p, n))
        v = valuation(best[c], p, n)
        unit = best[c] // p ** v
        inv = pow(unit, -1, N)
        piv = [(x * inv) % N for x in best]
        rest = []
        for r in work:
            if r is best:
                continue
            f = r[c] // p ** v
            r2 = [(a - f * b) % N for a, b in zip(r, piv)]
            if any(r2):
                rest.append(r2)
        extra = [(x * p ** (n - v)) % N for x in piv]
        if any(extra):
            rest.append(extra)
        done.append(piv)
        pivcols.append(c)
        work = rest
    # reduce above pivots; row k only touches columns >= its pivot column,
    # so ascending order never disturbs an earlier reduction
    for k in range(len(done)):
        c = pivcols[k]
        pv = done[k][c]
        for t in range(k):
            f = done[t][c] // pv
            if f:
                done[t] = [(a - f * b) % N for a, b in zip(done[t], done[k])]
    return tuple(tuple(r) for r in done)


@dataclass(frozen=True)
class FiniteModule:
    """A submodule of (Z/p^n)^m, identified by its Howell normal form."""

    p: int
    n: int
    m: int
    rows: tuple[Vector, ...]

    @staticmethod
    def span(vectors: Iterable[Sequence[int]], p: int, n: int, m: int) -> "FiniteModule":
        return FiniteModule(p, n, m, howell_form(vectors, p, n, m))

    @staticmethod
    def ambient(p: int, n: int, m: int) -> "FiniteModule":
        return FiniteModule.span([tuple(int(a == b) for b in range(m)) for a in range(m)], p, n, m)

    @staticmethod
    def zero(p: int, n: int, m: int) -> "FiniteModule":
        return FiniteModule(p, n, m, ())

    @property
    def modulus(self) -> int:
        return self.p ** self.n

    @cached_property
    def pivots(self) -> tuple[tuple[int, int], ...]:
        """(column, valuation of pivot) per row."""
        out = []
        for r in self.rows:
            c = next(i for i, x in enumerate(r) if x)
            out.append((c, valuation(r[c], self.p, self.n)))
        return tuple(out)

    @cached_property
    def order(self) -> int:
        # with the Howell property the pivot exponents give the size directly
        return self.p ** sum(self.n - v for _, v in self.pivots)

    def contains(self, v: Sequence[int]) -> bool:
        N = self.modulus
        w = [x % N for x in v]
        for r, (c, e) in zip(self.rows, self.pivots):
            pe = self.p ** e
            if w[c] % pe:
                return False
            f = w[c] // pe
            if f:
                w = [(a - f * b) % N for a, b in zip(w, r)]
        return not any(w)

    def contains_module(self, other: "FiniteModule") -> bool:
        return all(self.contains(r) for r in other.rows)

    def __le__(self, other: "FiniteModule") -> bool:
        return other.contains_module(self)

    def __lt__(self, other: "FiniteModule") -> bool:
        return self != other and self <= other

    def __add__(self, other: "FiniteModule") -> "FiniteModule":
        return FiniteModule.span(self.rows + other.rows, self.p, self.n, self.m)

    def elements(self) -> Iterator[Vector]:
        """All elements (small modules only)."""
        N = self.modulus
        ranges = [range(self.p ** (self.n - e)) for _, e in self.pivots]
        for coeffs in product(*ranges):
            v = [0] * self.m
            for a, r in zip(coeffs, self.rows):
                if a:
                    v = [(x + a * y) % N for x, y in zip(v, r)]
            yield tuple(v)

    def intersect(self, other: "FiniteModule") -> "FiniteModule":
        small, big = (self, other) if self.order <= other.order else (other, self)
        return FiniteModule.span([v for v in small.elements() if big.contains(v)], self.p, self.n, self.m)

    def ranks(self) -> tuple[int, int]:
        return module_ranks(self)

    def is_free(self) -> bool:
        a, b = self.ranks()
        return a == b

    def sort_key(self) -> tuple:
        return (self.order, self.rows)


def _rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    from .._kernels import rank_mod_p
    import numpy as np
    if not rows:
        return 0
    return rank_mod_p(np.array(rows, dtype=np.int64) % p, p)


def module_ranks(U: FiniteModule) -> tuple[int, int]:
    """(rk, rk') with rk = dim (U + pM)/pM and rk' = dim U/pU = log_p |U/pU|."""
    rk = _rank_mod_p(U.rows, U.p)
    pU = FiniteModule.span([[x * U.p for x in r] for r in U.rows], U.p, U.n, U.m)
    ratio = U.order // pU.order
    rk_prime = 0
    while ratio > 1:
        ratio //= U.p
        rk_prime += 1
    return rk, rk_prime


def cyclic_submodules(p: int, n: int, m: int) -> list[FiniteModule]:
    seen = {FiniteModule.span([v], p, n, m) for v in product(range(p ** n), repeat=m)}
    return sorted(seen, key=FiniteModule.sort_key)


def _keep(U: FiniteModule, filter: str) -> bool:
    if filter == "all":
        return True
    rk, rk2 = module_ranks(U)
    if filter == "T":
        return rk >= 1 and rk2 <= U.m - 1
    return rk >= 1 and rk == rk2 and rk2 <= U.m - 1


def iter_submodules(p: int, n: int, m: int, filter: str = "all") -> Iterator[FiniteModule]:
    """Stream the submodules in canonical form, breadth first by joins of cyclic
    submodules.  Each module is yielded once; the order is deterministic."""
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if n < 1 or m < 2:
        raise PreconditionError("need n >= 1 and ambient rank >= 2")
    size = p ** (n * m)
    if size > ENUMERATION_GUARD:
        raise FeasibilityError(f"(Z/{p}^{n})^{m} has {size} elements, above the guard {ENUMERATION_GUARD}")
    if filter not in ("all", "T", "T_free"):
        raise ValueError(f"unknown filter {filter!r}")
    cyc = cyclic_submodules(p, n, m)
    zero = FiniteModule.zero(p, n, m)
    found = {zero}
    frontier = [zero]
    if _keep(zero, filter):
        yield zero
    while frontier:
        nxt = []
        for S in frontier:
            for C in cyc:
                if S.contains_module(C):
                    continue
                U = S + C
                if U not in found:
                    found.add(U)
                    nxt.append(U)
                    if _keep(U, filter):
                        yield U
        frontier = nxt


def enumerate_submodules(p: int, n: int, m: int, filter: str = "all") -> list[FiniteModule]:
    """All submodules, optionally filtered to T (rk >= 1, rk' <= m-1) or
    T_free (free proper nonzero submodules; over Z/p^n these are exactly the
    U with U and M/U free)."""
    return sorted(iter_submodules(p, n, m, filter), key=FiniteModule.sort_key)
