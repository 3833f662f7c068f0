"""Pieri rule, its dual, and the two-block outer tensor version."""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterator, Sequence

from .bott import weyl_dim
from .errors import DimensionError, PreconditionError
from .weights import Weight, is_dominant


@dataclass(frozen=True)
class LeviShape:
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.blocks or any(b <= 0 for b in self.blocks):
            raise ValueError(f"bad Levi shape {self.blocks}")

    @property
    def rank(self) -> int:
        return sum(self.blocks)

    def split(self, mu: Sequence[int]) -> tuple[Weight, ...]:
        if len(mu) != self.rank:
            raise DimensionError(f"weight of length {len(mu)} for shape {self.blocks}")
        out, pos = [], 0
        for b in self.blocks:
            out.append(tuple(mu[pos:pos + b]))
            pos += b
        return tuple(out)


@dataclass(frozen=True)
class IrrepDescriptor:
    shape: LeviShape
    block_weights: tuple[Weight, ...]
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if len(self.block_weights) != len(self.shape.blocks):
            raise DimensionError("one weight per block expected")
        for b, w in zip(self.shape.blocks, self.block_weights):
            if len(w) != b:
                raise DimensionError(f"block weight {w} does not fit block size {b}")
            if not is_dominant(w):
                raise PreconditionError(f"block weight {w} is not dominant")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")

    @property
    def dimension(self) -> int:
        return prod(weyl_dim(w) for w in self.block_weights)

    @property
    def weight(self) -> Weight:
        return tuple(x for w in self.block_weights for x in w)

    @staticmethod
    def from_weight(shape: LeviShape, mu: Sequence[int], multiplicity: int = 1) -> "IrrepDescriptor":
        return IrrepDescriptor(shape, shape.split(mu), multiplicity)


def _compositions(k: int, caps: Sequence[int | None]) -> Iterator[tuple[int, ...]]:
    """Nonnegative c with sum k and c[i] <= caps[i] (None = unbounded)."""
    n = len(caps)
    if n == 0:
        if k == 0:
            yield ()
        return
    cap = caps[0]
    top = k if cap is None else min(k, cap)
    for c in range(top, -1, -1):
        for rest in _compositions(k - c, caps[1:]):
            yield (c,) + rest


def pieri_decompose(k: int, nu: Sequence[int], n: int | None = None) -> list[Weight]:
    """Summands of Sym^k (K^n) (x) V_nu, each with multiplicity one."""
    nu = tuple(nu)
    n = len(nu) if n is None else n
    if len(nu) != n:
        raise DimensionError(f"weight of length {len(nu)} for rank {n}")
    if not is_dominant(nu):
        raise PreconditionError(f"{nu} is not dominant")
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    caps = [None] + [nu[i] - nu[i + 1] for i in range(n - 1)]
    return [tuple(a + c for a, c in zip(nu, cs)) for cs in _compositions(k, caps)]


def dual(mu: Sequence[int]) -> Weight:
    return tuple(-x for x in reversed(mu))


def dual_pieri_decompose(k: int, mu: Sequence[int], n: int | None = None) -> list[Weight]:
    """Summands of V_(0,...,0,-k) (x) V_mu, via duality."""
    return [dual(w) for w in pieri_decompose(k, dual(mu), n)]


def levi_tensor_decompose(k: int, v: IrrepDescriptor) -> list[IrrepDescriptor]:
    """(V_(0..0,-k) (x) V_mu') boxtimes (V_(k,0..0) (x) V_mu'')."""
    if len(v.shape.blocks) != 2:
        raise PreconditionError("levi_tensor_decompose needs a two-block shape")
    mu1, mu2 = v.block_weights
    return [IrrepDescriptor(v.shape, (a, b), v.multiplicity)
            for a in dual_pieri_decompose(k, mu1) for b in pieri_decompose(k, mu2)]
