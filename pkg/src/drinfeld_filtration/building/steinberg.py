"""The complex of permutation modules K[G/P_I] for G = GL_{d+1}(F_q)."""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

import numpy as np

from ..errors import FeasibilityError, PreconditionError
from .homology import ChainComplexData, HomologyResult, complex_homology
from .modules import FiniteModule, enumerate_submodules, is_prime

FLAG_GUARD = 200_000


def subspaces_by_dim(q: int, m: int) -> dict[int, list[FiniteModule]]:
    if not is_prime(q):
        raise PreconditionError(f"only prime fields are supported, got q={q}")
    out: dict[int, list[FiniteModule]] = {}
    for U in enumerate_submodules(q, 1, m, "all"):
        out.setdefault(len(U.rows), []).append(U)
    return out


def partial_flags(q: int, m: int, dims: Sequence[int]) -> list[tuple[FiniteModule, ...]]:
    """Chains V_1 < V_2 < ... with dim V_k = dims[k] (dims increasing, inside 1..m-1)."""
    subs = subspaces_by_dim(q, m)
    flags: list[tuple[FiniteModule, ...]] = [()]
    for dim in dims:
        nxt = []
        for fl in flags:
            for U in subs.get(dim, []):
                if not fl or fl[-1] < U:
                    nxt.append(fl + (U,))
        flags = nxt
        if len(flags) > FLAG_GUARD:
            raise FeasibilityError(f"more than {FLAG_GUARD} partial flags")
    return flags


def _flag_dims(d: int, I: frozenset[int]) -> tuple[int, ...]:
    # G/P_I: flags with the subspaces of dimension i+1 for the simple roots alpha_i not in I
    return tuple(i + 1 for i in range(d) if i not in I)


def steinberg_complex(q: int, d: int, j: int) -> tuple[ChainComplexData, list[frozenset[int]]]:
    """C_t = sum over I with I_min <= I <= Delta and |I - I_min| = t of K[G/P_I],
    I_min = {alpha_0, ..., alpha_{d-j-1}}; the maps forget subspaces with signs."""
    if not 0 <= j <= d:
        raise PreconditionError(f"j={j} outside 0..{d}")
    m = d + 1
    base = frozenset(range(d - j))
    free_roots = [i for i in range(d) if i not in base]
    levels: list[list[frozenset[int]]] = []
    for t in range(len(free_roots) + 1):
        levels.append([base | frozenset(c) for c in combinations(free_roots, t)])
    flags = {I: partial_flags(q, m, _flag_dims(d, I)) for lvl in levels for I in lvl}
    offsets = []
    for lvl in levels:
        off, acc = {}, 0
        for I in lvl:
            off[I] = acc
            acc += len(flags[I])
        offsets.append((off, acc))
    dims = tuple(acc for _, acc in offsets)
    bounds = []
    for t in range(len(levels) - 1):
        b = np.zeros((dims[t + 1], dims[t]), dtype=np.int64)
        src_off, _ = offsets[t]
        dst_off, _ = offsets[t + 1]
        for I in levels[t]:
            src_dims = _flag_dims(d, I)
            for a in free_roots:
                if a in I:
                    continue
                J = I | {a}
                sign = (-1) ** sum(1 for x in I - base if x < a)
                keep = [k for k, dim in enumerate(src_dims) if dim != a + 1]
                target_index = {fl: k for k, fl in enumerate(flags[J])}
                for k, fl in enumerate(flags[I]):
                    img = tuple(fl[x] for x in keep)
                    b[dst_off[J] + target_index[img], src_off[I] + k] += sign
        bounds.append(b)
    # ChainComplexData stores maps C_{k+1} -> C_k, so reverse the numbering:
    # position t of the sequence above becomes homological degree (top - t)
    top = len(levels) - 1
    rev_dims = tuple(reversed(dims))
    rev_bounds = tuple(reversed(bounds))
    return ChainComplexData(rev_dims, rev_bounds, lowest_degree=0), levels


def steinberg_complex_homology(q: int, d: int, j: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(dims, homology) listed from the K[G/P_{I_min}] end to the K[G/G] end."""
    cc, _ = steinberg_complex(q, d, j)
    res: HomologyResult = complex_homology(cc)
    return tuple(reversed(cc.dims)), tuple(reversed(res.betti))


def inclusion_exclusion_dim(q: int, d: int, j: int) -> int:
    base = frozenset(range(d - j))
    free_roots = [i for i in range(d) if i not in base]
    total = 0
    for t in range(len(free_roots) + 1):
        for c in combinations(free_roots, t):
            J = base | frozenset(c)
            total += (-1) ** t * len(partial_flags(q, d + 1, _flag_dims(d, J)))
    return total


def gaussian_binomial(m: int, k: int, q: int) -> int:
    num, den = 1, 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
