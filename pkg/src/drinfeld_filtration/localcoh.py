"""Character and monomial models of algebraic local cohomology on P^d.

Weights of Laurent monomials X^k are the exponent vectors k.  The local
cohomology of O(r) supported on P^j = V(X_{j+1}, ..., X_d) has the monomial
basis k_0..k_j >= 0, k_{j+1}..k_d < 0, sum k = r.  The pole order of k is
the sum of its negative parts.

Characters of the general homogeneous bundles F_lambda are obtained from the
Grothendieck-Cousin complex along the Schubert cells: since the complex has
cohomology only in the Bott degree, the images of its differentials follow
weight by weight from the cell characters.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .bott import Character, Region, bwb_cohomology, cohomology_character, convolve, irrep_character, signed_sum
from .errors import NotACharacterError, PreconditionError, UncertifiedError
from .filtration import BlockSwap, ModuleDescriptor, mu_weight
from .pieri import LeviShape
from .weights import Weight, WeylWord, act, is_levi_1d_dominant


def pole_order(k: Sequence[int]) -> int:
    return sum(-x for x in k if x < 0)


def compositions(n: int, total: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer n-tuples with the given sum (stars and bars)."""
    if n == 0:
        if total == 0:
            yield ()
        return
    if total < 0:
        return
    for bars in combinations(range(total + n - 1), n - 1):
        prev, out = -1, []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + n - 2 - prev)
        yield tuple(out)


# -- monomial models ----------------------------------------------------------

def twisted_localcoh_character(d: int, j: int, r: int, pole_bound: int) -> Character:
    """Monomials k_0..k_j >= 0, k_{j+1}..k_d < 0, sum r, pole order <= pole_bound."""
    if not 0 <= j <= d - 1:
        raise PreconditionError(f"support index j={j} outside 0..{d - 1}")
    tail = d - j
    weights = []
    for pole in range(tail, pole_bound + 1):
        head_sum = r + pole
        if head_sum < 0:
            continue
        for neg in compositions(tail, pole - tail):
            t = tuple(-1 - x for x in neg)
            for h in compositions(j + 1, head_sum):
                weights.append(h + t)
    return Character.from_weights(weights, Region.pole(pole_bound))


def indlim_oracle(d: int, j: int, r: int, n_max: int) -> Character:
    """Direct limit of (S(r)/(X_{j+1}^n, ..., X_d^n))^0 computed stage by stage.

    Stage n is spanned by the standard monomials X^a of degree r + n(d-j)
    with a_m < n for m > j; the class of X^a is the generalized fraction
    X^a / (X_{j+1}...X_d)^n.  The transition to stage n+1 multiplies by
    X_{j+1}...X_d.  A class is counted once it has survived from stage
    n_max - 1 into stage n_max, which certifies every weight of pole order
    <= n_max - 1.  ``j = -1`` gives the top cohomology H^d(P^d, O(r)).
    """
    if n_max < 2:
        raise PreconditionError("n_max must be at least 2")
    if not -1 <= j <= d - 1:
        raise PreconditionError(f"support index j={j} outside -1..{d - 1}")
    tail = list(range(j + 1, d + 1))

    def stage(n: int) -> set[tuple[int, ...]]:
        deg = r + n * len(tail)
        if deg < 0:
            return set()
        return {a for a in compositions(d + 1, deg) if all(a[m] < n for m in tail)}

    def transition(a: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(x + 1 if m in tail else x for m, x in enumerate(a))

    def fraction_weight(a: tuple[int, ...], n: int) -> Weight:
        return tuple(x - n if m in tail else x for m, x in enumerate(a))

    lower, upper = stage(n_max - 1), stage(n_max)
    survivors = []
    for a in lower:
        b = transition(a)
        if b in upper:  # nonzero image in the next quotient
            w = fraction_weight(b, n_max)
            assert w == fraction_weight(a, n_max - 1)
            survivors.append(w)
    return Character.from_weights(survivors, Region.pole(n_max - 1))


def euler_characteristic_oracle(d: int, r: int) -> int:
    """chi(P^d, O(r)) from H^0 = S_r and H^d as the direct limit at j = -1."""
    h0 = sum(1 for _ in compositions(d + 1, r)) if r >= 0 else 0
    top = indlim_oracle(d, -1, r, max(2, -r + 1))
    return h0 + (-1) ** d * top.mass()


# -- Lie algebra action on Laurent monomials ---------------------------------

@dataclass(frozen=True)
class LieGenerator:
    """L_(a,b) = X_a d/dX_b, of weight alpha_{a,b}."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError("root generators need a != b")


@dataclass(frozen=True)
class LaurentModule:
    d: int
    r: int
    j: int
    pole_bound: int

    @cached_property
    def nonneg(self) -> tuple[bool, ...]:
        return tuple(m <= self.j for m in range(self.d + 1))

    def in_basis(self, k: Sequence[int]) -> bool:
        return (len(k) == self.d + 1 and sum(k) == self.r
                and all((x >= 0) == s for x, s in zip(k, self.nonneg)))

    def in_region(self, k: Sequence[int]) -> bool:
        return self.in_basis(k) and pole_order(k) <= self.pole_bound

    def character(self) -> Character:
        return twisted_localcoh_character(self.d, self.j, self.r, self.pole_bound)

    def basis(self) -> list[Weight]:
        return sorted(self.character().terms)

    def generators(self) -> list[LieGenerator]:
        n = self.d + 1
        return [LieGenerator(a, b) for a in range(n) for b in range(n) if a != b]


@dataclass(frozen=True)
class LieResult:
    terms: dict[Weight, int]
    escaped: bool = False


def lie_apply(g: LieGenerator, k: Sequence[int], module: LaurentModule | None = None) -> LieResult:
    """X^k -> k_b X^{k + e_a - e_b}; terms outside the sign pattern vanish."""
    k = tuple(k)
    coeff = k[g.b]
    if coeff == 0:
        return LieResult({})
    out = list(k)
    out[g.a] += 1
    out[g.b] -= 1
    out = tuple(out)
    if module is None:
        return LieResult({out: coeff})
    if not module.in_basis(out):
        return LieResult({})
    if pole_order(out) > module.pole_bound:
        return LieResult({out: coeff}, escaped=True)
    return LieResult({out: coeff})


def torus_apply(t: Sequence[int], k: Sequence[int]) -> dict[Weight, int]:
    c = sum(a * b for a, b in zip(t, k))
    return {tuple(k): c} if c else {}


def lie_apply_product(g: LieGenerator, k1: Sequence[int], k2: Sequence[int]) -> dict[Weight, int]:
    """Leibniz expansion x(ab) = a(xb) + (xa)b on monomials, without a module."""
    out: Counter = Counter()
    for w, c in lie_apply(g, k2).terms.items():
        out[tuple(x + y for x, y in zip(k1, w))] += c
    for w, c in lie_apply(g, k1).terms.items():
        out[tuple(x + y for x, y in zip(w, k2))] += c
    return {w: c for w, c in out.items() if c}


@dataclass(frozen=True)
class SaturationResult:
    covers: bool
    reached: Character
    frontier: Character


def generation_saturate(m: LaurentModule, seed: Iterable[Sequence[int]], degree_bound: int | None = None) -> SaturationResult:
    """Closure of the seed monomials under all root generators inside the region.

    Every generator sends a monomial to a nonzero multiple of a monomial or
    to zero, so the U(g)-span of the seed is spanned by the reachable
    monomials.  Paths are kept inside the truncation, so ``covers`` is a
    certified statement.
    """
    bound = m.pole_bound if degree_bound is None else min(degree_bound, m.pole_bound)
    region = Region.pole(bound)
    seen: set[Weight] = set()
    work = []
    for s in seed:
        s = tuple(s)
        if not m.in_basis(s) or pole_order(s) > bound:
            raise PreconditionError(f"seed element {s} outside the certified region")
        if s not in seen:
            seen.add(s)
            work.append(s)
    gens = m.generators()
    while work:
        k = work.pop()
        for g in gens:
            for w in lie_apply(g, k, m).terms:
                if pole_order(w) <= bound and w not in seen:
                    seen.add(w)
                    work.append(w)
    full = twisted_localcoh_character(m.d, m.j, m.r, bound)
    reached = Character.from_weights(seen, region)
    frontier = full.minus(reached)
    return SaturationResult(frontier.mass() == 0, reached, frontier)


# -- Grothendieck-Cousin cells -------------------------------------------------

def _l1(w: Sequence[int]) -> int:
    return sum(abs(x) for x in w)


def fibre_character(lam: Sequence[int]) -> Character:
    """V_lambda as L_(1,d)-module: weights (lambda_0, nu), nu a weight of V_{lambda'}."""
    lam = tuple(lam)
    if not is_levi_1d_dominant(lam):
        raise PreconditionError(f"{lam} is not L_(1,d)-dominant")
    if len(lam) == 1:
        return Character({lam: 1})
    return Character({(lam[0],) + w: m for w, m in irrep_character(lam[1:]).terms.items()})


def _cell_structure_weights(d: int, i: int, max_degree: int) -> Iterator[Weight]:
    """Weights of H^i_{X_{w_i}}(P^d, O): k_{<i} < 0, k_{>i} >= 0, sum 0,
    with (sum of negative parts) + (sum of k_{>i}) <= max_degree."""
    for total in range(i, max_degree + 1):
        for split in range(i, total + 1):
            for neg in compositions(i, split - i):
                b = tuple(-1 - x for x in neg)
                for a in compositions(d - i, total - split):
                    ki = split - sum(a)
                    yield b + (ki,) + a


def cousin_cell_character(d: int, i: int, lam: Sequence[int], bound: int) -> Character:
    """Character of H^i_{X_{w_i}}(P^d, F_lambda), complete on the l1-ball of radius bound."""
    if not 0 <= i <= d:
        raise PreconditionError(f"cell index {i} outside 0..{d}")
    perm = WeylWord(i, d).perm
    fib = fibre_character(lam).map_weights(lambda v: act(perm, v))
    reach = bound + max(_l1(w) for w in fib.terms)
    geo = Character.from_weights(_cell_structure_weights(d, i, reach))
    return convolve(geo, fib, Region.l1(bound))


def _cohomology_in_region(d: int, lam: Sequence[int], region: Region) -> tuple[int | None, Character]:
    deg, ch = cohomology_character(d, lam)
    return deg, ch.restrict(region)


def euler_defect(d: int, lam: Sequence[int], bound: int) -> dict[Weight, int]:
    """sum (-1)^i char(cell_i) - sum (-1)^i char(H^i) on the l1-ball; {} when the identity holds."""
    region = Region.l1(bound)
    parts = [((-1) ** i, cousin_cell_character(d, i, lam, bound)) for i in range(d + 1)]
    deg, h = _cohomology_in_region(d, lam, region)
    if deg is not None:
        parts.append((-(-1) ** deg, h))
    return signed_sum(parts, region)


def tilde_characters(d: int, lam: Sequence[int], bound: int) -> list[Character]:
    """[char(im delta_{i-1}) for i = 0..d] on the l1-ball (entry 0 is zero)."""
    if bound < 0:
        raise UncertifiedError("negative truncation bound")
    region = Region.l1(bound)
    deg, h = _cohomology_in_region(d, lam, region)
    image = Character(region=region)
    out = [image]
    for i in range(d):
        kernel = image + h if deg == i else image
        cell = cousin_cell_character(d, i, lam, bound)
        try:
            image = cell.minus(kernel)
        except NotACharacterError as exc:
            raise UncertifiedError(f"Cousin recursion inconsistent at cell {i}: {exc}") from exc
        out.append(image)
    last = cousin_cell_character(d, d, lam, bound)
    top = image + h if deg == d else image
    if not top.equal_on_common_region(last):
        raise UncertifiedError("top cell does not match the recursion")
    return out


def tilde_schubert_character(d: int, i: int, lam: Sequence[int], bound: int) -> Character:
    if not 1 <= i <= d:
        raise PreconditionError(f"Schubert index {i} outside 1..{d}")
    return tilde_characters(d, lam, bound)[i]


# -- the quotient presentation -------------------------------------------------

def levi_irrep_character(shape: LeviShape, mu: Sequence[int]) -> Character:
    parts = shape.split(mu)
    ch = Character({(): 1})
    for p in parts:
        blk = irrep_character(p)
        ch = Character({a + b: m1 * m2 for a, m1 in ch.terms.items() for b, m2 in blk.terms.items()})
    return ch


def _root_vector(n: int, a: int, b: int) -> Weight:
    v = [0] * n
    v[a] += 1
    v[b] -= 1
    return tuple(v)


def polynomial_character(roots: Sequence[Weight], max_degree: int) -> Character:
    """Symmetric algebra on root vectors, graded by degree <= max_degree."""
    n = len(roots[0]) if roots else 0
    out: Counter = Counter()
    for deg in range(max_degree + 1):
        for c in compositions(len(roots), deg):
            w = [0] * n
            for mult, rt in zip(c, roots):
                if mult:
                    for t in range(n):
                        w[t] += mult * rt[t]
            out[tuple(w)] += 1
    return Character(out)


@dataclass(frozen=True)
class ContainmentResult:
    holds: bool
    defect: dict[Weight, int]
    region: Region

    def defect_mass(self) -> int:
        return sum(self.defect.values())


def quotient_containment(d: int, i: int, lam: Sequence[int], bound: int) -> ContainmentResult:
    """char(H~^i) <= char(K[X_m/X_n : m >= i > n]) * char(V_{i,lambda}) on the l1-ball."""
    mu = mu_weight(i, d, lam)
    v = levi_irrep_character(LeviShape((i, d + 1 - i)), mu)
    roots = [_root_vector(d + 1, m, n) for m in range(i, d + 1) for n in range(i)]
    # a product of t variables has l1-norm 2t, so |p + v| >= 2t - |v|
    vmax = max(_l1(w) for w in v.terms)
    poly = polynomial_character(roots, (bound + vmax) // 2)
    region = Region.l1(bound)
    upper = convolve(poly, v, region)
    tilde = tilde_schubert_character(d, i, lam, bound)
    defect = upper.signed_minus(tilde)
    return ContainmentResult(all(x >= 0 for x in defect.values()), defect, region)


def verma_kernel_character(d: int, j: int, lam: Sequence[int], seed_module: ModuleDescriptor, bound: int) -> Character:
    """Truncated char of the kernel of U(u+) (x) N -> H~^{d-j}_{P^j}(P^d, F_lambda).

    Weights are graded by s = mu_0 + ... + mu_j; every root of u+ raises s by
    one.  The result is certified for s <= s_min + bound, where s_min is the
    s-value of the generating weights.  The l1-radius used for the Cousin
    recursion is taken from the quotient presentation of H~.
    """
    if not 0 <= j <= d - 1:
        raise PreconditionError(f"support index j={j} outside 0..{d - 1}")
    if bound < 0:
        raise PreconditionError("bound must be nonnegative")
    i = d - j
    z = BlockSwap(i, d)
    mu = mu_weight(i, d, lam)
    vi = levi_irrep_character(LeviShape((i, d + 1 - i)), mu)
    s_min = sum(z.apply_inverse(mu)[: j + 1])
    radius = 2 * bound + max(_l1(w) for w in vi.terms)
    region = Region.prefix(j + 1, s_min + bound)
    tilde = tilde_schubert_character(d, i, lam, radius).map_weights(z.apply_inverse)
    tilde = Character({w: m for w, m in tilde.terms.items() if region.contains(w)}, region)
    roots = [_root_vector(d + 1, m, n) for m in range(j + 1) for n in range(j + 1, d + 1)]
    n_char = Counter()
    for s in seed_module.summands:
        if s.shape.blocks != (j + 1, d - j):
            raise PreconditionError(f"seed summand has shape {s.shape.blocks}, expected {(j + 1, d - j)}")
        for w, m in levi_irrep_character(s.shape, s.weight).terms.items():
            n_char[w] += m * s.multiplicity
    n_char = Character(n_char)
    s_low = min((sum(w[: j + 1]) for w in n_char.terms), default=s_min)
    upoly = polynomial_character(roots, max(0, s_min + bound - s_low))
    total = convolve(upoly, n_char, region)
    try:
        return total.minus(tilde)
    except NotACharacterError as exc:
        raise NotACharacterError(f"seed module does not surject onto H~: {exc}") from exc


def kernel_by_degree(ch: Character, j: int) -> dict[int, int]:
    return ch.by_measure(lambda w: sum(w[: j + 1]))


# -- golden seed modules -------------------------------------------------------

def structure_sheaf_seed(d: int, j: int) -> list[Weight]:
    """P / (X_{j+1}...X_d), P of degree d-j in X_0..X_j."""
    return [h + (-1,) * (d - j) for h in compositions(j + 1, d - j)]


def canonical_seed(d: int, j: int) -> list[Weight]:
    """(X_0...X_j) / (X_{j+1}^{m_{j+1}}...X_d^{m_d}) * 1/(X_0...X_d), sum m = j+1."""
    return [(0,) * (j + 1) + tuple(-1 - m for m in ms) for ms in compositions(d - j, j + 1)]
