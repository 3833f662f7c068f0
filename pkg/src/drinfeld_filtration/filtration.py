"""Weight sets and modules of the filtration subquotients.

Index conventions.  ``phi_set(i)``/``psi_set(i)``/``n_module(i)`` use the
Schubert index i = 1..d; the module ``n_module(j)`` has Levi blocks
(d+1-j, j).  In the P^k picture (local cohomology supported on P^k) the
same module is called N_k with k = d - j; :class:`SubquotientDescriptor`
stores both numbers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .bott import CohomologyResult, bwb_cohomology
from .errors import PreconditionError
from .pieri import IrrepDescriptor, LeviShape, dual_pieri_decompose, pieri_decompose
from .weights import Weight, find_i0, w_dot


@dataclass(frozen=True)
class BlockSwap:
    """z_i: turns block structure (i, d+1-i) into (d+1-i, i)."""

    i: int
    d: int

    def apply(self, v: Sequence[int]) -> Weight:
        # z_i has the identity blocks in the upper right (size i) and lower left
        cut = self.d + 1 - self.i
        return tuple(v[cut:]) + tuple(v[:cut])

    def apply_inverse(self, v: Sequence[int]) -> Weight:
        return tuple(v[self.i:]) + tuple(v[:self.i])


def _check(j: int, d: int, lam: Sequence[int]) -> None:
    if len(lam) != d + 1:
        raise PreconditionError(f"weight {tuple(lam)} does not have length d+1={d + 1}")
    if not 1 <= j <= d:
        raise PreconditionError(f"index {j} outside 1..{d}")


def mu_weight(j: int, d: int, lam: Sequence[int]) -> Weight:
    _check(j, d, lam)
    i0, _ = find_i0(d, lam)
    mu = w_dot(j - 1, lam) if j <= i0 else w_dot(j, lam)
    head, tail = mu[:j], mu[j:]
    assert all(a >= b for a, b in zip(head, head[1:])), mu
    assert all(a >= b for a, b in zip(tail, tail[1:])), mu
    return mu


PHI_RULES = ("strict", "literal")


def phi_set(i: int, d: int, lam: Sequence[int], rule: str = "strict") -> list[Weight]:
    """All (mu' - (d_i..d_1), mu'' + c) with |c| = |d| = k <= mu''_1 - mu''_last
    and the Pieri interlacing bounds on both sides.

    ``strict`` requires c_1 = 0; this reproduces the weight sets of the
    structure sheaf, the canonical bundle and the cotangent bundle.
    ``literal`` allows c_1 != 0 whenever d_1 = 0, which adds weights for the
    cotangent bundle when 2 <= i <= d-1.
    """
    if rule not in PHI_RULES:
        raise ValueError(f"unknown rule {rule!r}")
    mu = mu_weight(i, d, lam)
    mu1, mu2 = mu[:i], mu[i:]
    out: set[Weight] = set()
    for k in range(mu2[0] - mu2[-1] + 1):
        for top in pieri_decompose(k, mu2):
            c1 = top[0] - mu2[0]
            for bottom in dual_pieri_decompose(k, mu1):
                d1 = mu1[-1] - bottom[-1]
                if c1 == 0 or (rule == "literal" and d1 == 0):
                    out.add(bottom + top)
    return sorted(out, reverse=True)


def psi_set(j: int, d: int, lam: Sequence[int], rule: str = "strict") -> list[Weight]:
    z = BlockSwap(j, d)
    return sorted((z.apply_inverse(mu) for mu in phi_set(j, d, lam, rule)), reverse=True)


@dataclass(frozen=True)
class ModuleDescriptor:
    summands: tuple[IrrepDescriptor, ...]

    @property
    def total_dimension(self) -> int:
        return sum(s.multiplicity * s.dimension for s in self.summands)

    def highest_weights(self) -> list[Weight]:
        return [s.weight for s in self.summands]


def n_module(j: int, d: int, lam: Sequence[int], rule: str = "strict") -> ModuleDescriptor:
    shape = LeviShape((d + 1 - j, j))
    return ModuleDescriptor(tuple(IrrepDescriptor.from_weight(shape, mu) for mu in psi_set(j, d, lam, rule)))


@dataclass(frozen=True)
class AlgebraicPart:
    """v^G_{P_(d+1-j,1^j)}(H^j(P^d, F)); finite-group coefficient dimension only."""

    tag: str
    parabolic: tuple[int, ...]
    coefficient_dim: int
    infinite_dimensional: bool = True


@dataclass(frozen=True)
class KernelHandle:
    """Lazy access to the truncated character of the kernel d_k, k = d - j."""

    d: int
    k: int
    lam: Weight

    def character(self, bound: int, seed: ModuleDescriptor | None = None):
        from .localcoh import verma_kernel_character
        seed = seed if seed is not None else n_module(self.d - self.k, self.d, self.lam)
        return verma_kernel_character(self.d, self.k, self.lam, seed, bound)


@dataclass(frozen=True)
class AnalyticPart:
    module: ModuleDescriptor
    module_index_p_picture: int
    steinberg_tag: str
    kernel: KernelHandle
    infinite_dimensional: bool = True


@dataclass(frozen=True)
class SubquotientDescriptor:
    j: int
    parabolic: LeviShape
    algebraic_part: AlgebraicPart | None
    analytic_part: AnalyticPart


@dataclass(frozen=True)
class FiltrationReport:
    d: int
    lam: Weight
    i0: int
    case: str
    cohomology: CohomologyResult
    floor_dim: int
    subquotients: tuple[SubquotientDescriptor, ...] = field(default_factory=tuple)


def _steinberg_parabolic(d: int, j: int) -> tuple[int, ...]:
    return (d + 1 - j,) + (1,) * j


def filtration_report(d: int, lam: Sequence[int]) -> FiltrationReport:
    lam = tuple(int(x) for x in lam)
    i0, case = find_i0(d, lam)
    coh = bwb_cohomology(d, lam)
    subs = []
    for j in range(1, d + 1):
        alg = None
        if coh.degree == j:
            par = _steinberg_parabolic(d, j)
            alg = AlgebraicPart("v^G_P(" + ",".join(map(str, par)) + ")", par, coh.dimension)
        ana = AnalyticPart(n_module(j, d, lam), d - j, f"St_{j}", KernelHandle(d, d - j, lam))
        subs.append(SubquotientDescriptor(j, LeviShape((d + 1 - j, j)), alg, ana))
    floor = coh.dimension if coh.degree == 0 else 0
    return FiltrationReport(d, lam, i0, case, coh, floor, tuple(subs))
