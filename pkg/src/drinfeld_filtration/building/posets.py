"""Finite posets, their order complexes, core reduction and Quillen's criterion."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Generic, Hashable, Iterator, Mapping, Sequence, TypeVar

import numpy as np

from ..errors import PreconditionError

E = TypeVar("E", bound=Hashable)


@dataclass(frozen=True)
class FlagPoset(Generic[E]):
    """Elements in a fixed order plus the strict relation as a boolean matrix."""

    elements: tuple
    less: np.ndarray = field(compare=False, repr=False)

    @staticmethod
    def from_relation(elements: Sequence[E], lt: Callable[[E, E], bool]) -> "FlagPoset[E]":
        els = tuple(elements)
        k = len(els)
        rel = np.zeros((k, k), dtype=bool)
        for a in range(k):
            for b in range(k):
                if a != b and lt(els[a], els[b]):
                    rel[a, b] = True
        P = FlagPoset(els, rel)
        P.check()
        return P

    @staticmethod
    def chain(k: int) -> "FlagPoset[int]":
        return FlagPoset.from_relation(list(range(k)), lambda a, b: a < b)

    def check(self) -> None:
        rel = self.less
        if rel.size and np.any(np.diag(rel)):
            raise PreconditionError("relation is not irreflexive")
        if rel.size and np.any(rel & rel.T):
            raise PreconditionError("relation is not antisymmetric")
        two = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0 if rel.size else rel
        if rel.size and np.any(two & ~rel):
            raise PreconditionError("relation is not transitive")

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> dict:
        return {e: k for k, e in enumerate(self.elements)}

    def lt(self, a: E, b: E) -> bool:
        return bool(self.less[self.index[a], self.index[b]])

    def le(self, a: E, b: E) -> bool:
        return a == b or self.lt(a, b)

    def sub(self, keep: Sequence[int]) -> "FlagPoset[E]":
        keep = list(keep)
        return FlagPoset(tuple(self.elements[k] for k in keep), self.less[np.ix_(keep, keep)])

    def up_set(self, x: E, strict: bool = False) -> "FlagPoset[E]":
        k = self.index[x]
        keep = [t for t in range(len(self)) if self.less[k, t] or (not strict and t == k)]
        return self.sub(keep)

    def chains(self) -> Iterator[tuple[int, ...]]:
        """All nonempty chains as increasing index tuples (x_0 < x_1 < ...)."""
        succ = [np.nonzero(self.less[k])[0].tolist() for k in range(len(self))]

        def grow(ch: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            yield ch
            for t in succ[ch[-1]]:
                yield from grow(ch + (t,))

        for k in range(len(self)):
            yield from grow((k,))

    def chain_counts(self) -> list[int]:
        """Number of chains of each length (= simplices per dimension)."""
        k = len(self)
        if k == 0:
            return []
        rel = self.less.astype(object)
        counts = []
        vec = np.ones(k, dtype=object)  # chains ending at each element, current length
        while any(vec):
            counts.append(int(sum(vec)))
            vec = rel.T.dot(vec)
        return counts


def _has_extremum(rel: np.ndarray, members: np.ndarray, minimum: bool) -> bool:
    sub = rel[np.ix_(members, members)]
    if not minimum:
        sub = sub.T
    k = members.size
    # c is the minimum iff c < y for all other members y
    return bool(np.any(sub.sum(axis=1) == k - 1))


def beat_points(P: FlagPoset) -> list[int]:
    """Indices x such that {y > x} has a minimum or {y < x} has a maximum."""
    rel = P.less
    out = []
    for x in range(len(P)):
        up, down = np.nonzero(rel[x])[0], np.nonzero(rel[:, x])[0]
        if (up.size and _has_extremum(rel, up, True)) or (down.size and _has_extremum(rel, down, False)):
            out.append(x)
    return out


def core(P: FlagPoset) -> FlagPoset:
    """Remove beat points one at a time until none remain (Stong core).

    The order complex of the core is homotopy equivalent to that of P.
    """
    cur = P
    while True:
        bp = beat_points(cur)
        if not bp:
            return cur
        drop = bp[0]
        cur = cur.sub([k for k in range(len(cur)) if k != drop])


def quillen_check(P: FlagPoset, f: Callable | Mapping, x0) -> bool:
    """True iff f is an order-preserving self-map with f(x) <= x and f(x) <= x0.

    Then id >= f <= const_{x0} and the order complex is contractible.
    """
    fn = f.__getitem__ if isinstance(f, Mapping) else f
    if x0 not in P.index:
        raise PreconditionError("x0 is not an element of P")
    img = {}
    for x in P.elements:
        y = fn(x)
        if y not in P.index:
            raise PreconditionError(f"f does not map {x!r} into P")
        img[x] = y
    for a in P.elements:
        for b in P.elements:
            if P.lt(a, b) and not P.le(img[a], img[b]):
                return False
    return all(P.le(img[x], x) and P.le(img[x], x0) for x in P.elements)
