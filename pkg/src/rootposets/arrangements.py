"""Catalan, semi-Catalan, Shi and semi-Shi arrangements and their dominant regions.

Characteristic polynomials come from counting points of (Z/q)^p off the
reduced hyperplanes for several primes q and interpolating.  A second,
independent engine builds the intersection poset and sums Moebius values.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from sympy import nextprime

from ._fieldcount import count_points
from .affine import (
    AffineWeylElement,
    classify,
    minimal_from_ideal,
    s_maximal_antichain,
    simple_affine_roots,
)
from .linalg import nullspace, rref
from .polynomials import IntPolynomial, product_of_linear, zaslavsky_counts
from .posets import Antichain, enumerate_antichains, ideal_closure
from .rootsys import RootSystem, dual_system, subsystem
from .simplices import Constraint, HalfSpaceSystem, count_lattice_points, simplex

KINDS = ("coxeter", "cat", "cat_s", "shi", "shi_s")


class EngineError(RuntimeError):
    pass


class ResourceGuardError(RuntimeError):
    pass


class InternalError(AssertionError):
    pass


def normalize_kind(kind: str) -> str:
    k = kind.replace("-", "_").lower()
    if k not in KINDS:
        raise ValueError(f"unknown arrangement kind {kind!r}; expected one of {', '.join(KINDS)}")
    return k


@dataclass(frozen=True)
class Hyperplane:
    """H_{mu,k} = {x : (x, mu) = k} for a positive root mu."""

    mu: tuple[int, ...]
    k: int


@dataclass(frozen=True)
class Arrangement:
    rs: RootSystem
    kind: str
    m: int
    hyperplanes: tuple[Hyperplane, ...]

    @property
    def w_invariant(self) -> bool:
        return self.kind in ("coxeter", "cat", "cat_s")

    def __len__(self):
        return len(self.hyperplanes)

    def coroot_forms(self) -> tuple[list[tuple[int, ...]], list[int]]:
        return [self.rs.coroot_form(h.mu) for h in self.hyperplanes], [h.k for h in self.hyperplanes]


def build_arrangement(rs: RootSystem, kind: str, m: int = 1) -> Arrangement:
    kind = normalize_kind(kind)
    if m < 0:
        raise ValueError("m must be non-negative")
    if kind in ("cat_s", "shi_s"):
        rs._require_two_lengths()
    hs = []
    for mu in rs.positive_roots:
        short = rs.two_lengths and rs.is_short(mu)
        if kind == "coxeter":
            levels = [0]
        elif kind == "cat":
            levels = range(-m, m + 1)
        elif kind == "shi":
            levels = range(-m + 1, m + 1) if m else [0]
        elif kind == "cat_s":
            levels = range(-m, m + 1) if short else [0]
        else:
            levels = (range(-m + 1, m + 1) if m else [0]) if short else [0]
        hs.extend(Hyperplane(mu, k) for k in levels)
    return Arrangement(rs, kind, m, tuple(dict.fromkeys(hs)))


# -- finite-field engine ----------------------------------------------------------


def prime_bound(arr: Arrangement) -> int:
    forms, _ = arr.coroot_forms()
    maxc = max((abs(c) for f in forms for c in f), default=1)
    return 2 * (arr.m + 1) * arr.rs.h * maxc


def _primes_above(bound: int, count: int) -> list[int]:
    out = []
    q = bound
    while len(out) < count:
        q = nextprime(q)
        out.append(int(q))
    return out


@dataclass
class CharPolyRun:
    chi: IntPolynomial
    primes: list[int]
    counts: list[int]
    seconds: float


def char_poly_run(arr: Arrangement, max_rank: int = 5) -> CharPolyRun:
    rs = arr.rs
    p = rs.rank
    if p > max_rank:
        raise ResourceGuardError(f"rank {p} exceeds the finite-field engine guard ({max_rank})")
    forms, levels = arr.coroot_forms()
    bound = prime_bound(arr)
    t0 = time.perf_counter()
    for attempt in range(2):
        primes = _primes_above(bound, p + 2)
        counts = [count_points(forms, levels, q, p) for q in primes]
        chi = IntPolynomial.interpolate(list(zip(primes[: p + 1], counts[: p + 1])))
        if chi.is_integral and chi.is_monic and chi.degree == p and chi(primes[-1]) == counts[-1]:
            return CharPolyRun(chi, primes, counts, time.perf_counter() - t0)
        bound *= 2
    raise EngineError(f"interpolation failed for {rs.name} {arr.kind}^{arr.m} even after doubling the prime bound")


def char_poly(arr: Arrangement, max_rank: int = 5) -> IntPolynomial:
    return char_poly_run(arr, max_rank).chi


# -- intersection-poset engine -------------------------------------------------------


def char_poly_whitney(arr: Arrangement, max_rank: int = 3) -> IntPolynomial:
    """Sum of mu(X) t^dim X over the intersection poset."""
    p = arr.rs.rank
    if p > max_rank:
        raise ResourceGuardError(f"intersection-poset engine limited to rank <= {max_rank}")
    forms, levels = arr.coroot_forms()
    nh = len(forms)

    def flat_of(eqs):
        R, piv = rref([list(forms[i]) + [levels[i]] for i in eqs])
        if p in piv:
            return None
        x0 = [Fraction(0)] * p
        for row, c in zip(R, piv):
            x0[c] = row[p]
        dirs = nullspace([row[:p] for row in R], p) if R else nullspace([], p)
        mask = 0
        for h in range(nh):
            f = forms[h]
            if sum(a * b for a, b in zip(f, x0)) == levels[h] and all(
                sum(a * b for a, b in zip(f, d)) == 0 for d in dirs
            ):
                mask |= 1 << h
        return mask, len(dirs)

    flats = {0: p}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            members = [h for h in range(nh) if mask >> h & 1]
            for h in range(nh):
                if mask >> h & 1:
                    continue
                res = flat_of(members + [h])
                if res is None or res[0] in flats:
                    continue
                flats[res[0]] = res[1]
                nxt.append(res[0])
        frontier = nxt
    order = sorted(flats, key=lambda k: -flats[k])
    mob = {}
    for x in order:
        if x == 0:
            mob[x] = 1
            continue
        mob[x] = -sum(mob[y] for y in mob if y & x == y and y != x)
    coeffs = [0] * (p + 1)
    for x, d in flats.items():
        coeffs[d] += mob[x]
    return IntPolynomial(coeffs)


# -- predictions --------------------------------------------------------------------------


def coxeter_prediction(rs: RootSystem) -> IntPolynomial:
    return product_of_linear(rs.exponents)


def cat_prediction(rs: RootSystem, m: int) -> IntPolynomial:
    return product_of_linear(m * rs.h + e for e in rs.exponents)


def cat_s_prediction(rs: RootSystem, m: int) -> IntPolynomial:
    """prod (t - mg - e_i), with the separate odd/even formulas for G2."""
    rs._require_two_lengths()
    if rs.letter == "G":
        half = m // 2
        if m % 2 == 0:
            return product_of_linear([6 * half + 1, 6 * half + 5])
        return product_of_linear([6 * half + 5, 6 * half + 7])
    return product_of_linear(m * rs.g + e for e in rs.exponents)


def uniform_cat_s_prediction(rs: RootSystem) -> IntPolynomial:
    """prod_{i<=n}(t - h - e_i) prod_{i>n}(t - e_i), n the number of short simple roots."""
    n = len(rs.short_simple)
    es = sorted(rs.exponents)
    return product_of_linear([rs.h + e for e in es[:n]] + es[n:])


def semi_shi_prediction(rs: RootSystem, m: int) -> IntPolynomial:
    dual, _ = dual_system(rs)
    return product_of_linear(m * dual.g + e for e in subsystem(rs, "long").exponents())


def semi_shi_conjecture_report(rs: RootSystem, m: int, max_rank: int = 4) -> dict:
    run = char_poly_run(build_arrangement(rs, "shi_s", m), max_rank)
    predicted = semi_shi_prediction(rs, m)
    return {
        "system": rs.name,
        "kind": "shi_s",
        "m": m,
        "chi": run.chi.coefficient_list(),
        "chi_factored": run.chi.factored(),
        "predicted": predicted.coefficient_list(),
        "predicted_factored": predicted.factored(),
        "verdict": "equal" if run.chi == predicted else "unequal",
        "timings": {"char_poly_s": round(run.seconds, 3)},
    }


# -- lattice-point check of the counting theorem -------------------------------------------


def valid_dilation_factors(rs: RootSystem, m: int, count: int = 2, limit: int = 200) -> list[int]:
    """Values t > mg with t and t - mg coprime to every coordinate of theta.

    The search starts at mg + h so that the dilated open alcove has interior
    coweights and the comparison is not the trivial 0 = 0.
    """
    out = []
    for t in range(m * rs.g + rs.h, m * rs.g + rs.h + limit):
        if all(math.gcd(t, c) == 1 and math.gcd(t - m * rs.g, c) == 1 for c in rs.theta):
            out.append(t)
            if len(out) == count:
                break
    return out


def alcove_count_formula(rs: RootSystem, m: int, t: int) -> Fraction:
    """(#W / f) * #(open (t - mg) A  cap  P^vee)."""
    n = count_lattice_points(simplex(rs, "alcove", t - m * rs.g, closed=False), "P")
    return Fraction(rs.order, rs.f) * n


# -- dominant regions ---------------------------------------------------------------------


@dataclass(frozen=True)
class DominantRegion:
    rs: RootSystem
    gamma: Antichain
    kind: str
    ideal: frozenset
    system: HalfSpaceSystem
    sample: tuple[Fraction, ...]

    def __contains__(self, y) -> bool:
        return y in self.system


def _region_roots(rs: RootSystem, kind: str):
    if kind == "cat_s":
        return rs.short_positive
    if kind == "cat":
        return rs.positive_roots
    raise ValueError(f"dominant regions are built for cat and cat_s, not {kind!r}")


def psi_region(rs: RootSystem, gamma: Antichain, kind: str = "cat_s") -> DominantRegion:
    kind = normalize_kind(kind)
    if kind == "cat_s" and not gamma.short:
        raise ValueError("semi-Catalan regions are indexed by short antichains")
    ideal = ideal_closure(rs, gamma.members)
    cons = [Constraint(rs.simple(i), ">", Fraction(0)) for i in range(rs.rank)]
    for mu in _region_roots(rs, kind):
        cons.append(Constraint(mu, ">" if mu in ideal.members else "<", Fraction(1)))
    system = HalfSpaceSystem(rs, tuple(cons), f"R[{gamma}]")
    w = minimal_from_ideal(rs, ideal)
    sample = w.inv_act_point(rs.barycenter())
    if sample not in system:
        raise InternalError(f"sample point {sample} escapes the region of {gamma}")
    return DominantRegion(rs, gamma, kind, ideal.members, system, sample)


def escape_direction(region: DominantRegion) -> int | None:
    """Index j such that x + s * varpi_j stays in the region for all s >= 0, if any."""
    rs = region.rs
    roots = _region_roots(rs, region.kind)
    for j in range(rs.rank):
        if all(mu in region.ideal for mu in roots if mu[j] != 0):
            return j
    return None


def is_bounded(region: DominantRegion) -> bool:
    """Combinatorial and geometric tests, which must agree."""
    rs = region.rs
    if region.kind == "cat_s":
        combinatorial = region.gamma.strictly_s_positive
    else:
        combinatorial = region.gamma.strictly_positive
    geometric = escape_direction(region) is None
    if combinatorial != geometric or geometric != region.system.is_bounded():
        raise InternalError(f"boundedness tests disagree for {region.gamma} in {rs.name}")
    return geometric


def psi_separated(r1: DominantRegion, r2: DominantRegion) -> bool:
    """Some H_{gamma,1} with gamma in the symmetric difference separates the sample points."""
    rs = r1.rs
    for g in set(r1.gamma.members) ^ set(r2.gamma.members):
        a, b = rs.pair(r1.sample, g), rs.pair(r2.sample, g)
        if (a - 1) * (b - 1) < 0:
            return True
    return False


@dataclass
class Census:
    system: str
    kind: str
    enumerated: int
    enumerated_bounded: int
    chi: IntPolynomial
    zaslavsky_dominant: Fraction
    zaslavsky_bounded: Fraction

    @property
    def ok(self) -> bool:
        return self.enumerated == self.zaslavsky_dominant and self.enumerated_bounded == self.zaslavsky_bounded


def dominant_region_census(rs: RootSystem, kind: str = "cat_s") -> Census:
    kind = normalize_kind(kind)
    filt = "short" if kind == "cat_s" else "all"
    regions = [psi_region(rs, g, kind) for g in enumerate_antichains(rs, filt)]
    bounded = sum(1 for r in regions if is_bounded(r))
    chi = char_poly(build_arrangement(rs, kind, 1))
    z = zaslavsky_counts(chi, rs.rank)
    return Census(
        rs.name,
        kind,
        len(regions),
        bounded,
        chi,
        Fraction(z["regions"], rs.order),
        Fraction(z["bounded_regions"], rs.order),
    )


def most_distant_alcove_check(w: AffineWeylElement) -> tuple[bool, list[str]]:
    """The alcove of an s-maximal element sits in its region with only outward walls of two kinds."""
    rs = w.rs
    if not classify(w).s_maximal:
        raise ValueError("element is not s-maximal")
    problems = []
    gamma = s_maximal_antichain(w)
    region = psi_region(rs, gamma)
    if w.inv_act_point(rs.barycenter()) not in region:
        problems.append("alcove barycenter lies outside the region")
    simple = {rs.simple(i) for i in range(rs.rank)}
    for i, a in enumerate(simple_affine_roots(rs)):
        img = w.inv_act(a)
        if not img.is_positive:
            continue
        if img.k == 0 and img.mu in simple:
            continue
        neg = tuple(-c for c in img.mu)
        if img.k == 1 and neg in rs.index and rs.is_short(neg):
            continue
        problems.append(f"wall {i}: w^-1(alpha_{i}) = {img}")
    return not problems, problems


__all__ = [
    "KINDS",
    "Arrangement",
    "Census",
    "CharPolyRun",
    "DominantRegion",
    "EngineError",
    "Hyperplane",
    "InternalError",
    "ResourceGuardError",
    "alcove_count_formula",
    "build_arrangement",
    "cat_prediction",
    "cat_s_prediction",
    "char_poly",
    "char_poly_run",
    "char_poly_whitney",
    "coxeter_prediction",
    "dominant_region_census",
    "escape_direction",
    "is_bounded",
    "most_distant_alcove_check",
    "normalize_kind",
    "prime_bound",
    "psi_region",
    "psi_separated",
    "semi_shi_conjecture_report",
    "semi_shi_prediction",
    "uniform_cat_s_prediction",
    "valid_dilation_factors",
    "zaslavsky_counts",
]
