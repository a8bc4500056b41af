"""The root poset, ideals, antichains and their counts."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

from .rootsys import (
    RootSystem,
    RootSystemError,
    build_root_system,
    long_simple_system,
    subsystem,
)

FILTERS = ("all", "short", "long", "strictly_positive", "strictly_s_positive", "ss", "covers")


def leq(rs: RootSystem, mu, gamma) -> bool:
    """mu <= gamma in the root poset, i.e. gamma - mu is in Q^+."""
    mu, gamma = tuple(mu), tuple(gamma)
    if mu not in rs.index or gamma not in rs.index:
        raise RootSystemError("leq is defined on positive roots only")
    return all(a <= b for a, b in zip(mu, gamma))


def minimal_elements(roots) -> tuple:
    roots = sorted(set(roots))
    return tuple(r for r in roots if not any(q != r and all(a <= b for a, b in zip(q, r)) for q in roots))


def maximal_elements(roots) -> tuple:
    roots = sorted(set(roots))
    return tuple(r for r in roots if not any(q != r and all(a <= b for a, b in zip(r, q)) for q in roots))


@dataclass(frozen=True)
class Ideal:
    """Upward-closed subset of the positive roots."""

    rs: RootSystem = field(repr=False, compare=False)
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(tuple(r) for r in self.members))
        for g in self.members:
            for mu in self.rs.positive_roots:
                s = tuple(a + b for a, b in zip(g, mu))
                if s in self.rs.index and s not in self.members:
                    raise RootSystemError(f"{sorted(self.members)} is not an ideal")

    @property
    def generators(self) -> tuple:
        """Gamma(I): the minimal elements."""
        return minimal_elements(self.members)

    @property
    def xi(self) -> tuple:
        """Xi(I): maximal elements of the complement."""
        return maximal_elements(set(self.rs.positive_roots) - self.members)

    @property
    def strictly_positive(self) -> bool:
        return not any(sum(r) == 1 for r in self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, r):
        return tuple(r) in self.members

    def __iter__(self):
        return iter(sorted(self.members))


@dataclass(frozen=True)
class Antichain:
    rs: RootSystem = field(repr=False, compare=False)
    members: tuple

    def __post_init__(self):
        m = tuple(sorted(tuple(r) for r in self.members))
        object.__setattr__(self, "members", m)
        for a in m:
            if a not in self.rs.index:
                raise RootSystemError(f"{a} is not a positive root")
            for b in m:
                if a != b and all(x <= y for x, y in zip(a, b)):
                    raise RootSystemError(f"{m} is not an antichain")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, r):
        return tuple(r) in self.members

    @property
    def short(self) -> bool:
        return all(self.rs.is_short(r) for r in self.members)

    @property
    def long(self) -> bool:
        return not any(self.rs.is_short(r) for r in self.members)

    @property
    def strictly_positive(self) -> bool:
        return not any(sum(r) == 1 for r in self.members)

    @property
    def strictly_s_positive(self) -> bool:
        pis = set(self.rs.simple_roots_of_short)
        return self.short and not any(r in pis for r in self.members)

    @property
    def ss(self) -> bool:
        shorts = {self.rs.simple(i) for i in self.rs.short_simple}
        return self.short and not any(r in shorts for r in self.members)

    @property
    def covers_simple_roots(self) -> bool:
        return all(any(r[i] > 0 for r in self.members) for i in range(self.rs.rank))

    def counts_by_length(self) -> tuple[int, int]:
        s = sum(1 for r in self.members if self.rs.is_short(r))
        return s, len(self.members) - s

    def to_json(self) -> list:
        return [list(r) for r in self.members]

    def __str__(self):
        return "{" + ", ".join(self.rs.root_str(r) for r in self.members) + "}"


def ideal_closure(rs: RootSystem, gamma) -> Ideal:
    """I<Gamma>: all positive roots above some element of Gamma."""
    gamma = [tuple(g) for g in gamma]
    mem = [mu for mu in rs.positive_roots if any(all(a <= b for a, b in zip(g, mu)) for g in gamma)]
    return Ideal(rs, frozenset(mem))


# -- enumeration --------------------------------------------------------


def _candidates(rs: RootSystem, filt: str) -> list[int]:
    n = len(rs.positive_roots)
    if filt in ("all", "covers"):
        return list(range(n))
    if filt == "strictly_positive":
        return [i for i, r in enumerate(rs.positive_roots) if sum(r) > 1]
    rs._require_two_lengths()
    short = [i for i in range(n) if not rs.is_long[i]]
    if filt == "short":
        return short
    if filt == "long":
        return [i for i in range(n) if rs.is_long[i]]
    if filt == "strictly_s_positive":
        pis = set(rs.simple_roots_of_short)
        return [i for i in short if rs.positive_roots[i] not in pis]
    if filt == "ss":
        return [i for i in short if sum(rs.positive_roots[i]) > 1]
    raise RootSystemError(f"unknown antichain filter {filt!r}; choose from {FILTERS}")


def _incomparability_masks(rs: RootSystem) -> list[int]:
    roots = rs.positive_roots
    masks = []
    for a in roots:
        m = 0
        for j, b in enumerate(roots):
            if not (all(x <= y for x, y in zip(a, b)) or all(y <= x for x, y in zip(a, b))):
                m |= 1 << j
        masks.append(m)
    return masks


_MASKS: dict[tuple, list[int]] = {}


def antichain_indices(rs: RootSystem, filt: str = "all") -> list[tuple[int, ...]]:
    """Depth-first extension over the lexicographic order of roots (a linear extension)."""
    filt = filt.replace("-", "_")
    if filt not in FILTERS:
        raise RootSystemError(f"unknown antichain filter {filt!r}; choose from {FILTERS}")
    cand = _candidates(rs, filt)
    if rs.cartan not in _MASKS:
        _MASKS[rs.cartan] = _incomparability_masks(rs)
    inc = _MASKS[rs.cartan]
    allowed = 0
    for i in cand:
        allowed |= 1 << i
    out: list[tuple[int, ...]] = []

    def extend(chain: list[int], avail: int):
        out.append(tuple(chain))
        while avail:
            low = avail & -avail
            j = low.bit_length() - 1
            avail ^= low
            chain.append(j)
            extend(chain, avail & inc[j])
            chain.pop()

    extend([], allowed)
    if filt == "covers":
        roots = rs.positive_roots
        out = [a for a in out if all(any(roots[j][i] > 0 for j in a) for i in range(rs.rank))]
    out.sort(key=lambda a: (len(a), a))
    return out


def enumerate_antichains(rs: RootSystem, filt: str = "all") -> list[Antichain]:
    roots = rs.positive_roots
    return [Antichain(rs, tuple(roots[j] for j in a)) for a in antichain_indices(rs, filt)]


def count_antichains(rs: RootSystem, filt: str = "all") -> int:
    return len(antichain_indices(rs, filt))


def enumerate_ideals(rs: RootSystem, strictly_positive: bool = False) -> list[Ideal]:
    filt = "strictly_positive" if strictly_positive else "all"
    return [ideal_closure(rs, a) for a in enumerate_antichains(rs, filt)]


# -- closed forms ---------------------------------------------------------


@dataclass
class FormulaCount:
    name: str
    value: int | None
    applicable: bool = True
    stated: int | None = None
    note: str = ""

    @property
    def expected(self) -> int | None:
        return self.value if self.applicable else self.stated


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {x}")
    return int(x)


def _prod_ratio(factors) -> Fraction:
    return prod((Fraction(a, b) for a, b in factors), start=Fraction(1))


def closed_form_counts(rs: RootSystem) -> dict[str, FormulaCount]:
    """Predicted antichain counts from the product formulas.

    Rows: AN, AN0, AN_s, AN_s_unified, AN_s0, AN_l, AN_ss.  Rows whose formula
    does not apply to G2 carry the hand-computed value in ``stated``.
    """
    e = sorted(rs.exponents)
    h = rs.h
    out = {
        "AN": FormulaCount("AN", _integral(_prod_ratio((h + x + 1, x + 1) for x in e), "AN")),
        "AN0": FormulaCount("AN0", _integral(_prod_ratio((h + x - 1, x + 1) for x in e), "AN0")),
    }
    if not rs.two_lengths:
        return out
    g = rs.g
    n = len(rs.short_simple)
    g2 = rs.letter == "G"
    out["AN_s_unified"] = FormulaCount(
        "AN_s_unified", _integral(_prod_ratio((h + x + 1, x + 1) for x in e[:n]), "unified AN_s")
    )
    out["AN_ss"] = FormulaCount("AN_ss", _integral(_prod_ratio((h + x - 1, x + 1) for x in e[:n]), "AN_ss"))
    if g2:
        out["AN_s"] = FormulaCount("AN_s", None, False, 4, "product formula needs |theta|^2/|theta_s|^2 = 2")
        out["AN_s0"] = FormulaCount("AN_s0", None, False, 2, "g-1 not coprime to the coordinates of theta")
        out["AN_l"] = FormulaCount("AN_l", None, False, 4, "equals AN_s of the dual system")
    else:
        out["AN_s"] = FormulaCount("AN_s", _integral(_prod_ratio((g + x + 1, x + 1) for x in e), "AN_s"))
        out["AN_s0"] = FormulaCount("AN_s0", _integral(_prod_ratio((g + x - 1, x + 1) for x in e), "AN_s0"))
        out["AN_l"] = FormulaCount("AN_l", _integral(_prod_ratio((h - g + x + 1, x + 1) for x in e), "AN_l"))
    return out


def enumerated_counts(rs: RootSystem) -> dict[str, int]:
    out = {"AN": count_antichains(rs, "all"), "AN0": count_antichains(rs, "strictly_positive")}
    if rs.two_lengths:
        s = count_antichains(rs, "short")
        out.update(
            AN_s=s,
            AN_s_unified=s,
            AN_s0=count_antichains(rs, "strictly_s_positive"),
            AN_l=count_antichains(rs, "long"),
            AN_ss=count_antichains(rs, "ss"),
        )
    return out


# -- decomposition numbers and powers --------------------------------------


def decomposition_numbers(rs: RootSystem, ideal: Ideal) -> dict[tuple, int]:
    """k(mu, I) for every positive root, by breadth-first search over Q^+ below theta."""
    if not ideal.strictly_positive:
        raise RootSystemError("k(mu, I) is only defined for strictly positive ideals")
    steps = [r for r in rs.positive_roots if r not in ideal.members]
    theta = rs.theta
    zero = tuple(0 for _ in theta)
    dist = {zero: 0}
    frontier = [zero]
    k = 0
    while frontier:
        k += 1
        nxt = []
        for v in frontier:
            for s in steps:
                u = tuple(a + b for a, b in zip(v, s))
                if u not in dist and all(a <= b for a, b in zip(u, theta)):
                    dist[u] = k
                    nxt.append(u)
        frontier = nxt
    return {mu: dist[mu] for mu in rs.positive_roots}


def k_decomposition_number(rs: RootSystem, mu, ideal: Ideal) -> int:
    return decomposition_numbers(rs, ideal)[tuple(mu)]


def ideal_power(rs: RootSystem, ideal: Ideal | frozenset, k: int) -> frozenset:
    """I^1 = I, I^k = (I^{k-1} + I) intersected with the positive roots."""
    if k < 1:
        raise ValueError("k must be positive")
    base = frozenset(ideal.members if isinstance(ideal, Ideal) else ideal)
    cur = base
    for _ in range(k - 1):
        cur = frozenset(s for a in cur for b in base if (s := tuple(x + y for x, y in zip(a, b))) in rs.index)
    return cur


def ideal_powers(rs: RootSystem, ideal) -> list[frozenset]:
    """[I^1, I^2, ...] up to the last non-empty power."""
    base = frozenset(ideal.members if isinstance(ideal, Ideal) else ideal)
    out = []
    cur = base
    while cur:
        out.append(cur)
        cur = frozenset(s for a in cur for b in base if (s := tuple(x + y for x, y in zip(a, b))) in rs.index)
    return out


# -- generating functions ---------------------------------------------------


class BivariatePolynomial:
    """sum a[k, m] t^k u^m with non-negative integer coefficients."""

    def __init__(self, coeffs: dict[tuple[int, int], int]):
        self.coeffs = {km: c for km, c in sorted(coeffs.items()) if c}

    @classmethod
    def parse_terms(cls, terms: dict[str, int]) -> BivariatePolynomial:
        return cls({_parse_monomial(k): v for k, v in terms.items()})

    def __call__(self, t, u):
        return sum(c * t**k * u**m for (k, m), c in self.coeffs.items())

    def __getitem__(self, km):
        return self.coeffs.get(tuple(km), 0)

    def __eq__(self, other):
        return isinstance(other, BivariatePolynomial) and self.coeffs == other.coeffs

    def transpose(self) -> BivariatePolynomial:
        return BivariatePolynomial({(m, k): c for (k, m), c in self.coeffs.items()})

    def table(self) -> list[list[int]]:
        K = max(k for k, _ in self.coeffs) + 1
        M = max(m for _, m in self.coeffs) + 1
        return [[self[k, m] for m in range(M)] for k in range(K)]

    def __str__(self):
        parts = []
        for (k, m), c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), -kv[0][0])):
            mono = ("t" if k == 1 else f"t^{k}" if k else "") + ("u" if m == 1 else f"u^{m}" if m else "")
            parts.append((str(c) if c != 1 or not mono else "") + mono)
        return " + ".join(parts) or "0"

    __repr__ = __str__


def _parse_monomial(s: str) -> tuple[int, int]:
    k = m = 0
    s = s.replace(" ", "")
    if s in ("", "1"):
        return 0, 0
    for var in ("t", "u"):
        if var in s:
            i = s.index(var)
            e = 1
            if i + 1 < len(s) and s[i + 1] == "^":
                j = i + 2
                while j < len(s) and s[j].isdigit():
                    j += 1
                e = int(s[i + 2 : j])
            if var == "t":
                k = e
            else:
                m = e
    return k, m


def bivariate_generating_function(rs: RootSystem) -> BivariatePolynomial:
    rs._require_two_lengths()
    counts = Counter()
    for a in antichain_indices(rs, "all"):
        s = sum(1 for j in a if not rs.is_long[j])
        counts[s, len(a) - s] += 1
    return BivariatePolynomial(dict(counts))


def bstable_weight_set(rs: RootSystem, gamma: Antichain) -> frozenset:
    """Weights of the nilpotent b-stable subspace of the little adjoint module."""
    if not gamma.short:
        raise RootSystemError("b-stable weight sets are attached to short antichains")
    return frozenset(r for r in ideal_closure(rs, gamma.members).members if rs.is_short(r))


def short_shadow(rs: RootSystem, gamma) -> tuple:
    """Minimal elements of I<Gamma> intersected with the short roots."""
    return minimal_elements(r for r in ideal_closure(rs, gamma).members if rs.is_short(r))


def fibre_histogram(rs: RootSystem) -> dict[int, int]:
    """Fibre sizes of Gamma -> min(I<Gamma> cap Delta_s^+): {fibre size: #short antichains}."""
    fib = Counter(short_shadow(rs, a.members) for a in enumerate_antichains(rs, "all"))
    return dict(sorted(Counter(fib.values()).items()))


@dataclass
class IdentityCheck:
    name: str
    lhs: object
    rhs: object

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def product_theorem_check(rs: RootSystem) -> list[IdentityCheck]:
    rs._require_two_lengths()
    n_all = count_antichains(rs, "all")
    n_s = count_antichains(rs, "short")
    n_pl = count_antichains(long_simple_system(rs), "all")
    checks = [IdentityCheck("AN = AN_s * AN(Pi_l)", n_all, n_s * n_pl)]
    if rs.letter == "C":
        p = rs.rank
        F = bivariate_generating_function(rs)
        for k in range(p):
            checks.append(IdentityCheck(f"a[{k},0] = C(p,k) C(p-1,k)", F[k, 0], comb(p, k) * comb(p - 1, k)))
            checks.append(IdentityCheck(f"a[{p - 1 - k},1] = a[{k},0]", F[p - 1 - k, 1], F[k, 0]))
        ss = antichain_indices(rs, "ss")
        checks.append(IdentityCheck("AN_ss(C_p) = C(2p-2, p-1)", len(ss), comb(2 * p - 2, p - 1)))
        if p > 2:
            checks.append(
                IdentityCheck("AN_ss(C_p) = AN(C_{p-1})", len(ss), count_antichains(build_root_system("C", p - 1)))
            )
        sizes = Counter(len(a) for a in ss)
        for k in range(p):
            checks.append(IdentityCheck(f"#{k}-element AN_ss = C(p-1,k)^2", sizes.get(k, 0), comb(p - 1, k) ** 2))
    return checks


def antichains_to_json(antichains) -> str:
    return json.dumps([a.to_json() for a in antichains])


def subsystem_antichain_count(rs: RootSystem, selector: str) -> int:
    """Antichains of a subsystem's own positive roots (order inherited from the ambient poset)."""
    pos = subsystem(rs, selector).positive
    n = len(pos)
    comp = [[all(x <= y for x, y in zip(a, b)) or all(y <= x for x, y in zip(a, b)) for b in pos] for a in pos]
    count = 0

    def rec(start, chosen):
        nonlocal count
        count += 1
        for j in range(start, n):
            if all(not comp[j][i] for i in chosen):
                chosen.append(j)
                rec(j + 1, chosen)
                chosen.pop()

    rec(0, [])
    return count
