"""Property suites behind ``verify``.  Each check reports how many oracle
comparisons it made and the first counterexample if any."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from .bott import Character, bwb_cohomology, convolve, decompose_character, irrep_character, weyl_dim
from .errors import PreconditionError


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    comparisons: int
    detail: str = ""


class _Check:
    def __init__(self, suite: str, name: str) -> None:
        self.suite, self.name = suite, name
        self.count = 0
        self.failure: str | None = None

    def expect(self, cond: bool, where: object) -> None:
        self.count += 1
        if not cond and self.failure is None:
            self.failure = repr(where)

    def result(self) -> CheckResult:
        return CheckResult(self.suite, self.name, self.failure is None, self.count,
                           "" if self.failure is None else f"counterexample: {self.failure}")


def _lambda_grid(d: int, bound: int) -> Iterator[tuple[int, ...]]:
    for lam in product(range(-bound, bound + 1), repeat=d + 1):
        if all(lam[k] >= lam[k + 1] for k in range(1, d)):
            yield lam


def _dominant_grid(n: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    for mu in product(range(lo, hi + 1), repeat=n):
        if all(mu[k] >= mu[k + 1] for k in range(n - 1)):
            yield mu


# -- weights -------------------------------------------------------------------

def weights_suite(size: str) -> list[CheckResult]:
    from .weights import (compose, dominance_compare, dot_perm, find_i0, identity_perm, rho, transposition,
                          w_dot)
    dmax, ent = (2, 2) if size == "smoke" else (4, 4)
    table, orbit, uniq, chain, comp = (_Check("weights", n) for n in
                                       ("dot-action closed form", "orbit", "uniqueness", "dominance chain",
                                        "composition"))
    for d in range(1, dmax + 1):
        r = rho(d)
        for lam in _lambda_grid(d, ent):
            for i in range(d + 1):
                closed = tuple(x - 1 for x in lam[1:i + 1]) + (lam[0] + i,) + lam[i + 1:]
                got = w_dot(i, lam)
                table.expect(got == closed, (d, lam, i))
                orbit.expect(sorted(a + b for a, b in zip(got, r)) == sorted(a + b for a, b in zip(lam, r)), (lam, i))
            imgs = [w_dot(i, lam) for i in range(d + 1)]
            dom = [i for i, mu in enumerate(imgs) if all(mu[k] >= mu[k + 1] for k in range(d))]
            coll = [i for i in range(d) if imgs[i] == imgs[i + 1]]
            uniq.expect(len(dom) <= 1 and (bool(dom) != bool(coll)), lam)
            i0, case = find_i0(d, lam)
            for i in range(d):
                rel = dominance_compare(imgs[i], imgs[i + 1])
                if case == "degenerate" and i == i0:
                    chain.expect(rel == "equal", (lam, i))
                elif i >= i0:
                    chain.expect(rel == "greater", (lam, i))
                else:
                    chain.expect(rel == "less", (lam, i))
        # (w w') * lam = w * (w' * lam) for words in the simple transpositions
        n = d + 1
        words = [identity_perm(n)] + [transposition(n, k) for k in range(1, n)]
        pairs = [(a, b) for a in words for b in words]
        for lam in list(_lambda_grid(d, min(ent, 2))):
            for a, b in pairs:
                comp.expect(dot_perm(compose(a, b), lam) == dot_perm(a, dot_perm(b, lam)), (lam, a, b))
    return [c.result() for c in (table, orbit, uniq, chain, comp)]


# -- bott ----------------------------------------------------------------------

def bott_suite(size: str) -> list[CheckResult]:
    from .localcoh import euler_characteristic_oracle
    from .weights import find_i0
    nmax = 3 if size == "smoke" else 4
    mass, euler, rt, degen = (_Check("bott", n) for n in
                              ("irrep mass = Weyl dimension", "Euler characteristic vs ind-lim oracle",
                               "decomposition round trip", "degenerate vanishing"))
    for n in range(1, nmax + 1):
        for mu in _dominant_grid(n, -3, 4 if size == "desk" else 2):
            mass.expect(irrep_character(mu).mass() == weyl_dim(mu), mu)
    for d in range(1, 4):
        for r in range(-d - 1, 4):
            lam = (r,) + (0,) * d
            euler.expect(bwb_cohomology(d, lam).euler_characteristic() == euler_characteristic_oracle(d, r), (d, r))
    import random
    rng = random.Random(20240611)
    for _ in range(20 if size == "smoke" else 200):
        n = rng.randint(1, 3)
        pool = list(_dominant_grid(n, -2, 2))
        chosen = Counter(rng.choice(pool) for _ in range(rng.randint(1, 4)))
        total = Counter()
        for mu, m in chosen.items():
            for w, k in irrep_character(mu).terms.items():
                total[w] += m * k
        got = dict(decompose_character(Character(total)))
        rt.expect(got == dict(chosen), dict(chosen))
    for d in range(1, 4):
        for lam in _lambda_grid(d, 3):
            if find_i0(d, lam)[1] == "degenerate":
                degen.expect(not bwb_cohomology(d, lam).present, lam)
                if all(x == 0 for x in lam[1:]):
                    degen.expect(euler_characteristic_oracle(d, lam[0]) == 0, lam)
    return [c.result() for c in (mass, euler, rt, degen)]


# -- pieri ---------------------------------------------------------------------

def pieri_suite(size: str) -> list[CheckResult]:
    from .pieri import dual, dual_pieri_decompose, pieri_decompose
    nmax, kmax = (3, 2) if size == "smoke" else (4, 4)
    oracle, dual_oracle, dims, duality, free = (_Check("pieri", n) for n in
                                                ("Pieri vs convolution", "dual Pieri vs convolution",
                                                 "dimension product", "duality", "multiplicity free"))
    for n in range(1, nmax + 1):
        for k in range(kmax + 1):
            sym = irrep_character((k,) + (0,) * (n - 1))
            dsym = irrep_character((0,) * (n - 1) + (-k,))
            for nu in _dominant_grid(n, -2, 3):
                got = pieri_decompose(k, nu)
                want = decompose_character(convolve(sym, irrep_character(nu)))
                oracle.expect(sorted(got) == sorted(w for w, _ in want) and all(m == 1 for _, m in want), (k, nu))
                free.expect(len(set(got)) == len(got), (k, nu))
                dims.expect(sum(weyl_dim(w) for w in got) == weyl_dim(nu) * sym.mass(), (k, nu))
                dgot = dual_pieri_decompose(k, nu)
                dwant = decompose_character(convolve(dsym, irrep_character(nu)))
                dual_oracle.expect(sorted(dgot) == sorted(w for w, _ in dwant), (k, nu))
                duality.expect(sorted(dgot) == sorted(dual(w) for w in pieri_decompose(k, dual(nu))), (k, nu))
    return [c.result() for c in (oracle, dual_oracle, dims, duality, free)]


# -- filtration ----------------------------------------------------------------

def filtration_suite(size: str) -> list[CheckResult]:
    from .filtration import BlockSwap, filtration_report, mu_weight, phi_set, psi_set
    dmax, ent = (3, 2) if size == "smoke" else (4, 3)
    swap, blockdom, base, card, report, golden = (_Check("filtration", n) for n in
                                                  ("Psi = z^-1 Phi", "block dominance", "k = 0 element present",
                                                   "structure sheaf cardinality", "report consistency",
                                                   "worked examples"))
    for d in range(1, dmax + 1):
        for lam in _lambda_grid(d, ent):
            rep = filtration_report(d, lam)
            algs = [s.j for s in rep.subquotients if s.algebraic_part is not None]
            report.expect(algs == ([] if rep.cohomology.degree in (None, 0) else [rep.cohomology.degree]), lam)
            for j in range(1, d + 1):
                phi, psi = phi_set(j, d, lam), psi_set(j, d, lam)
                z = BlockSwap(j, d)
                swap.expect(sorted(psi) == sorted(z.apply_inverse(m) for m in phi), (lam, j))
                swap.expect(all(z.apply(z.apply_inverse(m)) == m for m in phi), (lam, j))
                for m in phi:
                    a, b = m[:j], m[j:]
                    blockdom.expect(all(x >= y for x, y in zip(a, a[1:])) and all(x >= y for x, y in zip(b, b[1:])), (lam, j, m))
                base.expect(mu_weight(j, d, lam) in phi, (lam, j))
        for j in range(1, d + 1):
            want = j + 1 if j < d else 1
            card.expect(len(psi_set(j, d, (0,) * (d + 1))) == want, (d, j))
    for d in range(2, 5):
        for j in range(1, d + 1):
            lam = (-d,) + (1,) * d
            golden.expect(phi_set(j, d, lam) == [mu_weight(j, d, lam)], ("canonical", d, j))
            if j == d:
                continue
            lam = (-1, 1) + (0,) * (d - 1)
            mu = mu_weight(j, d, lam)
            if j == 1:
                want = {lam, (-2, 1, 1) + (0,) * (d - 2)}
            else:
                want = {mu} | {(l,) + (-1,) * (j - 2) + (-1 - l - k,) + (j - 1, k) + (0,) * (d - j - 1)
                               for k in range(1, j) for l in (0, -1)}
            golden.expect(set(phi_set(j, d, lam)) == want, ("cotangent", d, j))
            want = {(-1,) * (j - 1) + (-1 - k,) + (j, k) + (0,) * (d - j - 1) for k in range(j + 1)}
            golden.expect(set(phi_set(j, d, (0,) * (d + 1))) == want, ("structure sheaf", d, j))
    return [c.result() for c in (swap, blockdom, base, card, report, golden)]


# -- localcoh ------------------------------------------------------------------

def localcoh_suite(size: str) -> list[CheckResult]:
    from .filtration import n_module
    from .localcoh import (LaurentModule, LieGenerator, canonical_seed, euler_defect, indlim_oracle,
                           lie_apply, lie_apply_product, quotient_containment, structure_sheaf_seed,
                           twisted_localcoh_character, verma_kernel_character, generation_saturate,
                           pole_order)
    dmax = 2 if size == "smoke" else 3
    pole = 3 if size == "smoke" else 5
    l1 = 5 if size == "smoke" else 7
    oracle, additivity, leibniz, euler, contain, sat, kern = (_Check("localcoh", n) for n in
        ("monomial model vs ind-lim oracle", "weight additivity", "Leibniz rule", "Cousin Euler identity",
         "quotient containment", "generation saturation", "Verma kernel"))
    for d in range(1, dmax + 1):
        for j in range(d):
            for r in range(-d - 1, 3):
                a = twisted_localcoh_character(d, j, r, pole)
                b = indlim_oracle(d, j, r, pole + 1)
                oracle.expect(a.equal_on_common_region(b) and a.region == b.region, (d, j, r))
                m = LaurentModule(d, r, j, pole)
                for k in m.basis():
                    for g in m.generators():
                        for w in lie_apply(g, k).terms:
                            additivity.expect(tuple(x - y for x, y in zip(w, k)) ==
                                              tuple(int(t == g.a) - int(t == g.b) for t in range(d + 1)), (g, k))
        small = [w for w in product(range(-2, 3), repeat=d + 1)]
        for g in LaurentModule(d, 0, 0, 1).generators():
            for k1, k2 in zip(small[::7], small[3::11]):
                direct = lie_apply(g, tuple(x + y for x, y in zip(k1, k2))).terms
                leibniz.expect(direct == lie_apply_product(g, k1, k2), (g, k1, k2))
    for d in range(1, dmax + 1):
        lams = [(0,) * (d + 1), (-d,) + (1,) * d, (-1, 1) + (0,) * (d - 1)] + [(r,) + (0,) * d for r in (-d - 2, -1, 2)]
        for lam in lams:
            euler.expect(euler_defect(d, lam, l1) == {}, (d, lam))
            for i in range(1, d + 1):
                contain.expect(quotient_containment(d, i, lam, l1).holds, (d, i, lam))
        for j in range(d):
            for r, seeds in ((0, structure_sheaf_seed(d, j)), (-d - 1, canonical_seed(d, j))):
                lo = min(pole_order(s) for s in seeds)
                for bound in sorted({max(lo, 4), lo + (2 if size == "smoke" else 4)}):
                    sat.expect(generation_saturate(LaurentModule(d, r, j, bound), seeds).covers, (d, j, r, bound))
    from .filtration import BlockSwap, ModuleDescriptor, mu_weight
    from .pieri import IrrepDescriptor, LeviShape
    for d in range(2, dmax + 2):
        lam = (-1, 1) + (0,) * (d - 1)
        seed = ModuleDescriptor((IrrepDescriptor.from_weight(LeviShape((d, 1)),
                                                             BlockSwap(1, d).apply_inverse(mu_weight(1, d, lam))),))
        kern.expect(verma_kernel_character(d, d - 1, lam, seed, 3).mass() == 0, ("iso", d))
    for d in range(1, dmax + 1):
        for lam in [(0,) * (d + 1), (-d,) + (1,) * d, (-1, 1) + (0,) * (d - 1)]:
            for j in range(d):
                try:
                    verma_kernel_character(d, j, lam, n_module(d - j, d, lam), 2)
                    kern.expect(True, (d, lam, j))
                except Exception as exc:  # negative coefficient or uncertified region
                    kern.expect(False, (d, lam, j, str(exc)))
    return [c.result() for c in (oracle, additivity, leibniz, euler, contain, sat, kern)]


# -- building ------------------------------------------------------------------

def building_suite(size: str) -> list[CheckResult]:
    from .building import (ExtensionRing, FiniteModule, FlagPoset, RingLine, covering_free_modules,
                           enumerate_lines, enumerate_submodules, inclusion_exclusion_dim,
                           order_complex_homology, quillen_certify, stalk_complex_homology, stalk_poset,
                           steinberg_complex_homology)
    counter, fix, allstalks, predict, quillen, solomon, stein, agree = (_Check("building", n) for n in
        ("free-flag counterexample", "refined complex at the example point", "refined stalks acyclic",
         "free-flag failure prediction", "Quillen soundness", "Solomon-Tits", "Steinberg complex",
         "T vs T_free at n = 1"))
    R = ExtensionRing.quadratic(2, 2)
    t, z, one = R.generator(), (0, 0), (1, 0)
    L = RingLine(R, ((2, 0), z, t))
    ff = stalk_complex_homology(2, 2, 2, L, "free_flags")
    cov = covering_free_modules(L.component_span())
    counter.expect(not ff.vanishes() and cov.get(2, 0) >= 2 and cov.get(1, 0) == 0, cov)
    fix.expect(stalk_complex_homology(2, 2, 2, L, "all_submodules").vanishes(), "example point")
    rings = [(2, 1), (2, 2)] + ([] if size == "smoke" else [(3, 1), (3, 2)])
    for p, n in rings:
        ring = ExtensionRing.quadratic(p, n)
        spans = {}
        for line in enumerate_lines(ring, 3):
            spans.setdefault(line.component_span(), line)
        for S, line in spans.items():
            a = stalk_complex_homology(p, n, 2, line, "all_submodules")
            allstalks.expect(a.vanishes(), (p, n, S.rows))
            f = stalk_complex_homology(p, n, 2, line, "free_flags")
            c = covering_free_modules(S)
            predict.expect((not f.vanishes()) == (c.get(1, 0) == 0 and c.get(2, 0) >= 2), (p, n, S.rows))
            for variant in ("all_submodules", "free_flags"):
                P = stalk_poset(S, variant)
                if len(P) and quillen_certify(P) is not None:
                    quillen.expect(order_complex_homology(P).is_acyclic(), (p, n, S.rows, variant))
    for q in (2, 3):
        F = FlagPoset.from_relation(enumerate_submodules(q, 1, 3, "T_free"), lambda a, b: a < b)
        T = FlagPoset.from_relation(enumerate_submodules(q, 1, 3, "T"), lambda a, b: a < b)
        hf = order_complex_homology(F)
        solomon.expect(hf.nonzero() == {1: q ** 3}, (q, hf.nonzero()))
        agree.expect(order_complex_homology(T).betti == hf.betti, q)
    dims, hom = steinberg_complex_homology(2, 2, 2)
    stein.expect(dims == (21, 14, 1) and hom == (8, 0, 0), (dims, hom))
    for q, d in ((2, 2), (3, 2)) + ((2, 3),) * (size == "desk"):
        for j in range(d + 1):
            dims, hom = steinberg_complex_homology(q, d, j)
            stein.expect(all(h == 0 for h in hom[1:]) and hom[0] == inclusion_exclusion_dim(q, d, j), (q, d, j, hom))
    return [c.result() for c in (counter, fix, allstalks, predict, quillen, solomon, stein, agree)]


SUITES: dict[str, Callable[[str], list[CheckResult]]] = {
    "weights": weights_suite,
    "bott": bott_suite,
    "pieri": pieri_suite,
    "filtration": filtration_suite,
    "localcoh": localcoh_suite,
    "building": building_suite,
}


def run_suites(name: str, size: str) -> list[CheckResult]:
    if size not in ("smoke", "desk"):
        raise PreconditionError(f"unknown size {size!r}")
    names = list(SUITES) if name == "all" else [name]
    for n in names:
        if n not in SUITES:
            raise PreconditionError(f"unknown suite {n!r}")
    out: list[CheckResult] = []
    for n in names:
        out.extend(SUITES[n](size))
    return out
