"""Affine roots, the affine Weyl group and its dominant element classes.

An element is stored as ``w = v . t_r`` with ``v`` a finite Weyl element
and ``r`` a point of Q^vee in coweight coordinates.  With these conventions

    w(mu + k delta)      = v(mu) + (k - (mu, r)) delta
    w^{-1}(mu + k delta) = v^{-1}(mu) + (k + (mu, v r)) delta
    w^{-1} * x           = v^{-1}(x) - r.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .posets import (
    Antichain,
    Ideal,
    decomposition_numbers,
    ideal_closure,
    ideal_powers,
    maximal_elements,
    minimal_elements,
)
from .rootsys import RootSystem, RootSystemError, WeylElement, dominant_sort
from .simplices import HalfSpaceSystem, lattice_points, simplex


class AffineError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class AffineRoot:
    """The real affine root mu + k delta."""

    mu: tuple[int, ...]
    k: int

    def __post_init__(self):
        if not any(self.mu):
            raise AffineError("finite part of a real affine root must be nonzero")

    @property
    def is_positive(self) -> bool:
        return self.k > 0 or (self.k == 0 and all(c >= 0 for c in self.mu))

    def __add__(self, other: AffineRoot):
        return tuple(a + b for a, b in zip(self.mu, other.mu)), self.k + other.k

    def __neg__(self) -> AffineRoot:
        return AffineRoot(tuple(-c for c in self.mu), -self.k)

    def __str__(self):
        head = {0: "", 1: "d", -1: "-d"}.get(self.k, f"{self.k}d")
        mu = "(" + ",".join(map(str, self.mu)) + ")"
        return f"{head}+{mu}" if head else mu


def simple_affine_roots(rs: RootSystem) -> list[AffineRoot]:
    """[alpha_0, alpha_1, ..., alpha_p] with alpha_0 = delta - theta."""
    return [AffineRoot(tuple(-c for c in rs.theta), 1)] + [AffineRoot(rs.simple(i), 0) for i in range(rs.rank)]


class AffineWeylElement:
    __slots__ = ("_hash", "r", "rs", "v")

    def __init__(self, rs: RootSystem, v: WeylElement, r):
        r = tuple(int(x) for x in r)
        if not rs.in_coroot_lattice(r):
            raise AffineError(f"translation part {r} is not in the coroot lattice")
        self.rs = rs
        self.v = v
        self.r = r
        self._hash = hash((v.mat, r))

    @classmethod
    def identity(cls, rs):
        return cls(rs, WeylElement.identity(rs), (0,) * rs.rank)

    @classmethod
    def simple_reflection(cls, rs, i: int):
        """s_0 for i = 0, otherwise the finite s_i."""
        if i == 0:
            v = WeylElement.reflection(rs, rs.theta)
            return cls(rs, v, tuple(-c for c in rs.theta_coroot()))
        return cls(rs, WeylElement.simple_reflection(rs, i - 1), (0,) * rs.rank)

    @classmethod
    def from_word(cls, rs, word):
        w = cls.identity(rs)
        for i in word:
            w = w * cls.simple_reflection(rs, i)
        return w

    def __mul__(self, other: AffineWeylElement) -> AffineWeylElement:
        # v1 t_{r1} v2 t_{r2} = v1 v2 t_{v2^-1 r1 + r2}
        r1 = other.v.inv_act_point(self.r)
        return AffineWeylElement(self.rs, self.v * other.v, tuple(a + b for a, b in zip(r1, other.r)))

    def inverse(self) -> AffineWeylElement:
        vr = self.v.act_point(self.r)
        return AffineWeylElement(self.rs, self.v.inverse(), tuple(-x for x in vr))

    def __eq__(self, other):
        return isinstance(other, AffineWeylElement) and self.v == other.v and self.r == other.r

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"AffineWeylElement(v={self.v.mat}, r={self.r})"

    def v_of_r(self) -> tuple[int, ...]:
        """The point v(r) in coweight coordinates."""
        return tuple(int(x) for x in self.v.act_point(self.r))

    def act(self, a: AffineRoot) -> AffineRoot:
        return AffineRoot(self.v.act_root(a.mu), a.k - _dot(a.mu, self.r))

    def inv_act(self, a: AffineRoot) -> AffineRoot:
        return AffineRoot(self.v.inv_act_root(a.mu), a.k + _dot(a.mu, self.v_of_r()))

    def act_point(self, y) -> tuple:
        """w * x = v(x + r)."""
        return self.v.act_point(tuple(Fraction(a) + b for a, b in zip(y, self.r)))

    def inv_act_point(self, y) -> tuple:
        """w^{-1} * x = v^{-1}(x) - r."""
        return tuple(a - b for a, b in zip(self.v.inv_act_point(y), self.r))

    def length(self) -> int:
        return len(n_set(self))

    def is_dominant(self) -> bool:
        return all(self.act(AffineRoot(self.rs.simple(i), 0)).is_positive for i in range(self.rs.rank))

    def reduced_word(self) -> list[int]:
        return reduced_word_of(self.rs, n_set(self))

    def to_json(self) -> dict:
        return {
            "system": self.rs.name,
            "word": self.reduced_word(),
            "v": [list(row) for row in self.v.mat],
            "r_coroot": [int(x) for x in self.rs.coweight_to_coroot(self.r)],
        }


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def element_from_json(rs: RootSystem, data) -> AffineWeylElement:
    if isinstance(data, str):
        data = json.loads(data)
    w = AffineWeylElement.from_word(rs, data["word"])
    if [list(row) for row in w.v.mat] != data["v"]:
        raise AffineError("word and v-matrix disagree")
    if [int(x) for x in rs.coweight_to_coroot(w.r)] != data["r_coroot"]:
        raise AffineError("word and translation part disagree")
    return w


# -- inversion sets --------------------------------------------------------


def n_set(w: AffineWeylElement) -> frozenset[AffineRoot]:
    """N(w) = {alpha > 0 : w(alpha) < 0}, by the closed-form scan over levels."""
    out = []
    for mu in w.rs.all_roots:
        top = _dot(mu, w.r)
        start = 0 if all(c >= 0 for c in mu) else 1
        for k in range(start, top + 1):
            if k < top or not all(c >= 0 for c in w.v.act_root(mu)):
                out.append(AffineRoot(mu, k))
    return frozenset(out)


def is_biconvex(rs: RootSystem, N) -> bool:
    N = frozenset(N)
    if not all(a.is_positive for a in N):
        return False
    for a in N:
        for b in N:
            mu, k = a + b
            if mu in rs.all_roots and AffineRoot(mu, k) not in N:
                return False
    for c in N:
        for nu in rs.all_roots:
            rest = tuple(x - y for x, y in zip(c.mu, nu))
            if rest not in rs.all_roots:
                continue
            for j in range(c.k + 1):
                a, b = AffineRoot(nu, j), AffineRoot(rest, c.k - j)
                if a.is_positive and b.is_positive and a not in N and b not in N:
                    return False
    return True


def _reflect(rs: RootSystem, i: int, a: AffineRoot) -> AffineRoot:
    return AffineWeylElement.simple_reflection(rs, i).act(a)


def reduced_word_of(rs: RootSystem, N) -> list[int]:
    """Peel simple roots off N (lowest index first); returns the word of w."""
    N = set(N)
    simples = simple_affine_roots(rs)
    peeled = []
    while N:
        i = next((j for j, a in enumerate(simples) if a in N), None)
        if i is None:
            raise AffineError("set is not bi-convex: no simple affine root to peel")
        N.discard(simples[i])
        N = {_reflect(rs, i, a) for a in N}
        if not all(a.is_positive for a in N):
            raise AffineError("set is not bi-convex: peeling left the positive roots")
        peeled.append(i)
    return peeled[::-1]


def element_from_biconvex(rs: RootSystem, N) -> AffineWeylElement:
    w = AffineWeylElement.from_word(rs, reduced_word_of(rs, N))
    if n_set(w) != frozenset(N):
        raise AffineError("set is not bi-convex: round trip failed")
    return w


# -- element classes ---------------------------------------------------------


@dataclass(frozen=True)
class ElementFlags:
    dominant: bool
    minimal: bool
    maximal: bool
    s_minimal: bool | None
    s_maximal: bool | None

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def classify(w: AffineWeylElement) -> ElementFlags:
    rs = w.rs
    levels = [w.inv_act(a).k for a in simple_affine_roots(rs)]
    dom = w.is_dominant()
    minimal = dom and all(k >= -1 for k in levels)
    maximal = dom and all(k <= 1 for k in levels)
    smin = smax = None
    if rs.two_lengths:
        short = {i + 1 for i in rs.short_simple}
        smin = dom and all(k >= (-1 if i in short else 0) for i, k in enumerate(levels))
        smax = dom and all(k <= (1 if i in short else 0) for i, k in enumerate(levels))
    return ElementFlags(dom, minimal, maximal, smin, smax)


def first_layer_ideal(w: AffineWeylElement) -> Ideal:
    rs = w.rs
    if not w.is_dominant():
        raise AffineError("first layer ideal needs a dominant element")
    neg = {tuple(-c for c in a.mu) for a in n_set(w) if a.k == 1}
    return Ideal(rs, frozenset(mu for mu in neg if mu in rs.index))


def minimal_from_ideal(rs: RootSystem, ideal: Ideal) -> AffineWeylElement:
    N = [AffineRoot(tuple(-c for c in mu), k) for k, layer in enumerate(ideal_powers(rs, ideal), 1) for mu in layer]
    return element_from_biconvex(rs, N)


def maximal_from_ideal(rs: RootSystem, ideal: Ideal) -> AffineWeylElement:
    if not ideal.strictly_positive:
        raise AffineError("a maximal element exists only for strictly positive ideals")
    kn = decomposition_numbers(rs, ideal)
    N = [AffineRoot(tuple(-c for c in g), m) for g in ideal for m in range(1, kn[g])]
    return element_from_biconvex(rs, N)


def generators_from_element(w: AffineWeylElement) -> tuple:
    """{gamma : w(delta - gamma) in -Pi-hat}; equals Gamma(I_w) for minimal w."""
    neg = {-a for a in simple_affine_roots(w.rs)}
    return tuple(sorted(g for g in w.rs.positive_roots if w.act(AffineRoot(tuple(-c for c in g), 1)) in neg))


def xi_from_element(w: AffineWeylElement) -> tuple:
    """{gamma : w(delta - gamma) in Pi-hat}; equals Xi(I^w) for maximal w."""
    simp = set(simple_affine_roots(w.rs))
    return tuple(sorted(g for g in w.rs.positive_roots if w.act(AffineRoot(tuple(-c for c in g), 1)) in simp))


def inverse_from_point(rs: RootSystem, kappa, simplex_name: str | None = None) -> AffineWeylElement:
    """The dominant w = v t_r with v(r) = kappa."""
    kappa = tuple(int(x) for x in kappa)
    if not rs.in_coroot_lattice(kappa):
        raise AffineError(f"{kappa} is not in the coroot lattice")
    if simplex_name is not None and kappa not in simplex(rs, simplex_name):
        raise AffineError(f"{kappa} is not in {simplex_name}")
    b = rs.barycenter()
    u, _ = dominant_sort(rs, tuple(x - k for x, k in zip(b, kappa)))
    # v^{-1} = u, r = v^{-1}(kappa)
    r = u.act_point(kappa)
    return AffineWeylElement(rs, u.inverse(), r)


CLASS_OF_SIMPLEX = {"D_min": "minimal", "D_max": "maximal", "D_s_min": "s_minimal", "D_s_max": "s_maximal"}


def elements_of_simplex(rs: RootSystem, name: str) -> list[AffineWeylElement]:
    return [inverse_from_point(rs, k) for k in lattice_points(simplex(rs, name), "Q")]


def face_codimension(rs: RootSystem, kappa, S: HalfSpaceSystem | str) -> int:
    if isinstance(S, str):
        S = simplex(rs, S)
    if kappa not in S:
        raise AffineError(f"{kappa} is not in {S.name}")
    return S.tight_count(kappa)


def s_maximal_antichain(w: AffineWeylElement) -> Antichain:
    if not classify(w).s_maximal:
        raise AffineError("element is not s-maximal")
    ideal = first_layer_ideal(w)
    short = [mu for mu in ideal if w.rs.is_short(mu)]
    return Antichain(w.rs, frozenset(minimal_elements(short)))


def s_maximal_from_antichain(rs: RootSystem, gamma: Antichain) -> AffineWeylElement:
    if not gamma.short or not gamma.strictly_s_positive:
        raise AffineError("antichain must be short and strictly s-positive")
    closure = ideal_closure(rs, gamma.members).members
    outside = [mu for mu in rs.short_positive if mu not in closure]
    xi = maximal_elements(outside)
    below = {mu for mu in rs.positive_roots if any(rs.leq(mu, x) for x in xi)}
    ideal = Ideal(rs, frozenset(mu for mu in rs.positive_roots if mu not in below))
    return maximal_from_ideal(rs, ideal)


# -- group exploration ---------------------------------------------------------


def bfs_elements(rs: RootSystem, max_length: int) -> dict[AffineWeylElement, int]:
    """All elements of length <= max_length with their word lengths."""
    gens = [AffineWeylElement.simple_reflection(rs, i) for i in range(rs.rank + 1)]
    e = AffineWeylElement.identity(rs)
    dist = {e: 0}
    frontier = [e]
    for d in range(1, max_length + 1):
        nxt = []
        for w in frontier:
            for s in gens:
                u = w * s
                if u not in dist:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist


def check_simplex_bijection(rs: RootSystem, name: str) -> tuple[bool, str]:
    """Points of the simplex <-> elements of the matching class, by round trips."""
    flag = CLASS_OF_SIMPLEX[name]
    pts = lattice_points(simplex(rs, name), "Q")
    seen = set()
    for k in pts:
        w = inverse_from_point(rs, k)
        if w.v_of_r() != k:
            return False, f"round trip failed at {k}"
        if not getattr(classify(w), flag):
            return False, f"element for {k} is not {flag}"
        seen.add(w)
    return len(seen) == len(pts), f"{len(pts)} points"


__all__ = [
    "AffineError",
    "AffineRoot",
    "AffineWeylElement",
    "ElementFlags",
    "RootSystemError",
    "bfs_elements",
    "classify",
    "element_from_biconvex",
    "element_from_json",
    "elements_of_simplex",
    "face_codimension",
    "first_layer_ideal",
    "generators_from_element",
    "inverse_from_point",
    "is_biconvex",
    "maximal_from_ideal",
    "minimal_from_ideal",
    "n_set",
    "reduced_word_of",
    "s_maximal_antichain",
    "s_maximal_from_antichain",
    "simple_affine_roots",
    "xi_from_element",
]
