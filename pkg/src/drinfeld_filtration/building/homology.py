"""Integer chain complexes and certified rational Betti numbers.

Ranks are computed modulo a large prime first.  Since rank_p <= rank_Q for
integer matrices, the mod-p Betti numbers are upper bounds for the rational
ones while the Euler characteristic is the same for both.  When the mod-p
Betti numbers vanish or sit in a single degree they are therefore exact;
otherwise the ranks are recomputed over Z by fraction-free elimination.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .._kernels import DEFAULT_PRIME, rank_mod_p
from .posets import FlagPoset, core


def exact_rank(a: np.ndarray) -> int:
    """Rank over Q by Bareiss elimination on Python integers."""
    rows = [[int(x) for x in r] for r in np.asarray(a)]
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    r, prev = 0, 1
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, m):
            rows[i] = [(rows[r][c] * rows[i][k] - rows[i][c] * rows[r][k]) // prev for k in range(n)]
        prev = rows[r][c]
        r += 1
        if r == m:
            break
    return r


@dataclass(frozen=True)
class ChainComplexData:
    """C_lo <- ... <- C_hi with boundaries[k] : C_{lo+k+1} -> C_{lo+k}."""

    dims: tuple[int, ...]
    boundaries: tuple[np.ndarray, ...]
    lowest_degree: int = 0

    def __post_init__(self) -> None:
        if len(self.boundaries) != max(0, len(self.dims) - 1):
            raise ValueError("need one boundary between consecutive degrees")
        for k, b in enumerate(self.boundaries):
            if b.shape != (self.dims[k], self.dims[k + 1]):
                raise ValueError(f"boundary {k} has shape {b.shape}, expected {(self.dims[k], self.dims[k + 1])}")
        for k in range(len(self.boundaries) - 1):
            a, b = self.boundaries[k], self.boundaries[k + 1]
            if a.size and b.size and np.any(a.astype(np.int64) @ b.astype(np.int64)):
                raise AssertionError(f"boundary squared is nonzero in degree {self.lowest_degree + k + 2}")


@dataclass(frozen=True)
class HomologyResult:
    """Betti numbers b[k] in degree lowest_degree + k."""

    betti: tuple[int, ...]
    lowest_degree: int
    method: str
    notes: tuple[str, ...] = field(default_factory=tuple)

    def degree(self, k: int) -> int:
        idx = k - self.lowest_degree
        return self.betti[idx] if 0 <= idx < len(self.betti) else 0

    def is_acyclic(self) -> bool:
        return not any(self.betti)

    def nonzero(self) -> dict[int, int]:
        return {self.lowest_degree + k: b for k, b in enumerate(self.betti) if b}


def complex_homology(cc: ChainComplexData, prime: int = DEFAULT_PRIME) -> HomologyResult:
    ranks_p = [rank_mod_p(np.asarray(b, dtype=np.int64) % prime, prime) for b in cc.boundaries]

    def betti(ranks: Sequence[int]) -> list[int]:
        out = []
        for k, c in enumerate(cc.dims):
            out_rank = ranks[k - 1] if k >= 1 else 0  # boundary leaving C_k
            in_rank = ranks[k] if k < len(ranks) else 0  # boundary entering C_k
            out.append(c - out_rank - in_rank)
        return out

    bp = betti(ranks_p)
    if sum(1 for x in bp if x) <= 1:
        return HomologyResult(tuple(bp), cc.lowest_degree, f"mod-{prime} rank, certified by Euler characteristic")
    ranks_q = [exact_rank(b) for b in cc.boundaries]
    return HomologyResult(tuple(betti(ranks_q)), cc.lowest_degree, "exact integer elimination")


def order_complex(P: FlagPoset) -> ChainComplexData:
    """Augmented simplicial chain complex of the order complex (degree -1 = empty chain)."""
    by_dim: list[list[tuple[int, ...]]] = []
    for ch in P.chains():
        k = len(ch) - 1
        while len(by_dim) <= k:
            by_dim.append([])
        by_dim[k].append(ch)
    for lst in by_dim:
        lst.sort()
    dims = [1] + [len(lst) for lst in by_dim]
    index = [{ch: t for t, ch in enumerate(lst)} for lst in by_dim]
    bounds = []
    if by_dim:
        bounds.append(np.ones((1, dims[1]), dtype=np.int64))
    for k in range(1, len(by_dim)):
        b = np.zeros((dims[k], dims[k + 1]), dtype=np.int64)
        for col, ch in enumerate(by_dim[k]):
            for pos in range(len(ch)):
                face = ch[:pos] + ch[pos + 1:]
                b[index[k - 1][face], col] += (-1) ** pos
        bounds.append(b)
    return ChainComplexData(tuple(dims), tuple(bounds), lowest_degree=-1)


def order_complex_homology(P: FlagPoset, reduce: bool = False) -> HomologyResult:
    """Reduced Betti numbers over Q, starting in degree -1.

    The empty poset has b~_{-1} = 1.  With ``reduce`` the poset is first
    replaced by its core (beat points removed), which has the same homotopy type.
    """
    Q = core(P) if reduce else P
    res = complex_homology(order_complex(Q))
    if reduce:
        return HomologyResult(res.betti, res.lowest_degree, res.method,
                              (f"core of {len(P)} elements has {len(Q)}",))
    return res
