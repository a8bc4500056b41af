"""Irreducible reduced root systems built from Cartan matrices.

Roots are integer coefficient tuples over the simple roots (Bourbaki
numbering).  Points of V are stored by their pairings with the simple
roots, i.e. as coordinates over the fundamental coweights; in that basis
P^vee is exactly the integer vectors and the pairing (x, mu) of a point
with a root is a plain dot product.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache, cached_property
from math import prod

from .linalg import det, inverse, mat_vec, solve, transpose

Vector = tuple


class RootSystemError(ValueError):
    pass


class SimplyLacedError(RootSystemError):
    """Raised by operations that need two root lengths."""


_EDGES_E = [(0, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 7)]


def cartan_matrix(letter: str, rank: int) -> list[list[int]]:
    """Cartan matrix A[i][j] = <alpha_i^vee, alpha_j>, Bourbaki numbering."""
    letter = letter.upper()
    valid = {
        "A": 1 <= rank <= 8,
        "B": 2 <= rank <= 8,
        "C": 2 <= rank <= 8,
        "D": 4 <= rank <= 8,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if not valid.get(letter, False):
        raise RootSystemError(f"no irreducible root system of type {letter}{rank} (rank <= 8)")
    n = rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j):
        A[i][j] = A[j][i] = -1

    if letter in "ABCF":
        for i in range(n - 1):
            link(i, i + 1)
    if letter == "B":
        A[n - 1][n - 2] = -2
    elif letter == "C":
        A[n - 2][n - 1] = -2
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        for i, j in _EDGES_E:
            if j < n:
                link(i, j)
    elif letter == "F":
        A[2][1] = -2
    elif letter == "G":
        A[0][1], A[1][0] = -3, -1
    return A


def parse_system(spec: str) -> tuple[str, int]:
    """'C3' -> ('C', 3)."""
    spec = spec.strip()
    if len(spec) < 2 or not spec[0].isalpha() or not spec[1:].isdigit():
        raise RootSystemError(f"cannot parse root system {spec!r}; expected e.g. 'C3'")
    return spec[0].upper(), int(spec[1:])


def _positive_roots(A: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    n = len(A)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # alpha_i-string through beta: beta + alpha_i is a root iff q > 0
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                pairing = sum(A[i][j] * beta[j] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found)


def _symmetrizer(A) -> list[Fraction]:
    n = len(A)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and A[i][j] != 0 and d[j] is None:
                d[j] = d[i] * A[i][j] / A[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise RootSystemError("Cartan matrix is not indecomposable")
    return d  # type: ignore[return-value]


def conjugate_partition(counts: Sequence[int]) -> list[int]:
    """Exponents from a height distribution: #{e >= k} = counts[k-1]."""
    out = []
    for k, c in enumerate(counts, start=1):
        nxt = counts[k] if k < len(counts) else 0
        out.extend([k] * (c - nxt))
    return sorted(out)


@dataclass(frozen=True)
class Root:
    """A root of a specific system; mostly used at API boundaries."""

    system: RootSystem = field(repr=False, compare=False)
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        object.__setattr__(self, "coeffs", c)
        if c not in self.system.all_roots:
            raise RootSystemError(f"{c} is not a root of {self.system.name}")

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    @property
    def is_positive(self) -> bool:
        return all(x >= 0 for x in self.coeffs)

    def coroot(self) -> tuple[Fraction, ...]:
        """mu^vee = 2 mu / (mu, mu), in simple-root coordinates."""
        n2 = self.system.norm2(self.coeffs)
        return tuple(Fraction(2 * x) / n2 for x in self.coeffs)

    def __str__(self):
        return self.system.root_str(self.coeffs)


class RootSystem:
    """An irreducible reduced root system with the invariants used throughout.

    Indices of simple roots are 0-based internally; ``root_str`` prints the
    usual 1-based labels.
    """

    def __init__(self, letter: str, rank: int, cartan: Sequence[Sequence[int]] | None = None):
        self.letter = letter.upper()
        self.rank = rank
        if cartan is None:
            cartan = cartan_matrix(self.letter, rank)
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        A = self.cartan
        p = rank
        self.positive_roots: tuple[tuple[int, ...], ...] = tuple(_positive_roots(A))
        self.index = {r: i for i, r in enumerate(self.positive_roots)}
        self.all_roots = frozenset(self.positive_roots) | frozenset(tuple(-x for x in r) for r in self.positive_roots)

        d = _symmetrizer(A)
        B = [[d[i] * A[i][j] for j in range(p)] for i in range(p)]
        theta = max(self.positive_roots, key=sum)
        scale = Fraction(2) / _quad(B, theta)
        self.sym = tuple(tuple(x * scale for x in row) for row in B)
        self.theta = theta
        self.coords_of_theta = theta

        self.lengths2 = tuple(self.norm2(r) for r in self.positive_roots)
        lmax = max(self.lengths2)
        self.is_long = tuple(x == lmax for x in self.lengths2)
        self.two_lengths = not all(self.is_long)
        simple_long = [self.norm2(self.simple(i)) == lmax for i in range(p)]
        self.long_simple = tuple(i for i in range(p) if simple_long[i])
        self.short_simple = tuple(i for i in range(p) if not simple_long[i])

        shorts = [r for r, lg in zip(self.positive_roots, self.is_long) if not lg]
        self.theta_s = max(shorts, key=sum) if shorts else theta

        heights = [0] * (sum(theta))
        for r in self.positive_roots:
            heights[sum(r) - 1] += 1
        self.exponents = tuple(conjugate_partition(heights))
        self.coxeter_number = sum(theta) + 1
        self.index_of_connection = det([list(row) for row in A])
        self.order = prod(e + 1 for e in self.exponents)

    # -- naming ---------------------------------------------------------

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"

    def __repr__(self):
        return f"RootSystem({self.name})"

    @property
    def h(self) -> int:
        return self.coxeter_number

    @property
    def f(self) -> int:
        return self.index_of_connection

    @property
    def p(self) -> int:
        return self.rank

    def root_str(self, r: Iterable[int]) -> str:
        r = tuple(r)
        if not any(r):
            return "0"
        parts = []
        for i, c in enumerate(r):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign}{mag}a{i + 1}")
        s = "".join(parts)
        return s.removeprefix("+")

    # -- basic geometry -------------------------------------------------

    def simple(self, i: int) -> tuple[int, ...]:
        return tuple(int(i == j) for j in range(self.rank))

    def root(self, coeffs) -> Root:
        return Root(self, tuple(coeffs))

    def norm2(self, x) -> Fraction:
        return _quad(self.sym, tuple(x))

    def inner(self, x, y) -> Fraction:
        """W-invariant inner product of vectors in simple-root coordinates."""
        if isinstance(x, Root) and x.system is not self:
            raise RootSystemError("vectors belong to different root systems")
        if isinstance(y, Root) and y.system is not self:
            raise RootSystemError("vectors belong to different root systems")
        x, y = tuple(x), tuple(y)
        if len(x) != self.rank or len(y) != self.rank:
            raise RootSystemError("dimension mismatch")
        B = self.sym
        return sum((x[i] * B[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)), Fraction(0))

    def is_short(self, r) -> bool:
        r = tuple(r)
        if not any(x < 0 for x in r):
            return not self.is_long[self.index[r]]
        return not self.is_long[self.index[tuple(-x for x in r)]]

    def is_positive_root(self, r) -> bool:
        return tuple(r) in self.index

    def coroot_pairing(self, beta, i: int) -> int:
        """<beta, alpha_i^vee>."""
        return sum(self.cartan[i][j] * beta[j] for j in range(self.rank))

    def coroot_form(self, mu) -> tuple[int, ...]:
        """Coefficients of x -> (x, mu) in coroot coordinates of x."""
        return tuple(self.coroot_pairing(mu, i) for i in range(self.rank))

    def root_to_coweight(self, x) -> tuple[Fraction, ...]:
        """Pairings (x, alpha_i) of a vector given in simple-root coordinates."""
        B = self.sym
        return tuple(sum(B[i][j] * x[j] for j in range(self.rank)) for i in range(self.rank))

    def coweight_to_root(self, y) -> tuple[Fraction, ...]:
        return tuple(solve([list(r) for r in self.sym], list(y)))

    def coroot_to_coweight(self, n) -> tuple:
        """Point sum n_i alpha_i^vee -> pairings with simple roots."""
        return tuple(sum(n[i] * self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank))

    def coweight_to_coroot(self, y) -> tuple[Fraction, ...]:
        return tuple(mat_vec(self._inv_cartan_t, list(y)))

    @cached_property
    def _inv_cartan_t(self):
        return inverse(transpose([list(r) for r in self.cartan]))

    def in_coweight_lattice(self, y) -> bool:
        return all(Fraction(v).denominator == 1 for v in y)

    def in_coroot_lattice(self, y) -> bool:
        if not self.in_coweight_lattice(y):
            return False
        return all(v.denominator == 1 for v in self.coweight_to_coroot(y))

    def pair(self, y, mu) -> Fraction:
        """(x, mu) for a point x in coweight coordinates and a root mu."""
        return sum((Fraction(a) * b for a, b in zip(y, mu)), Fraction(0))

    def theta_coroot(self) -> tuple[int, ...]:
        """theta^vee in coweight coordinates (integral)."""
        return tuple(int(v) for v in self.root_to_coweight(self.theta))

    def leq(self, mu, gamma) -> bool:
        return all(a <= b for a, b in zip(mu, gamma))

    # -- short/long data ------------------------------------------------

    def _require_two_lengths(self):
        if not self.two_lengths:
            raise SimplyLacedError(f"{self.name} is simply laced; operation needs two root lengths")

    @property
    def g(self) -> int:
        """Sum of the coordinates of theta over the short simple roots."""
        self._require_two_lengths()
        return sum(self.theta[i] for i in self.short_simple)

    def g_via_coweights(self) -> Fraction:
        self._require_two_lengths()
        y = [Fraction(int(i in self.short_simple)) for i in range(self.rank)]
        return self.pair(y, self.theta)

    def g_via_count(self) -> Fraction:
        self._require_two_lengths()
        return Fraction(2 * len(self.short_positive), self.rank)

    def g_via_rho_s(self) -> Fraction:
        """(2 rho_s, theta^vee).  Equals g except for G2, where it is 2."""
        self._require_two_lengths()
        two_rho_s = [sum(r[i] for r in self.short_positive) for i in range(self.rank)]
        # theta^vee = theta under the normalization (theta, theta) = 2
        return self.inner(two_rho_s, self.theta)

    @cached_property
    def short_positive(self) -> tuple[tuple[int, ...], ...]:
        return tuple(r for r, lg in zip(self.positive_roots, self.is_long) if not lg)

    @cached_property
    def long_positive(self) -> tuple[tuple[int, ...], ...]:
        return tuple(r for r, lg in zip(self.positive_roots, self.is_long) if lg)

    @cached_property
    def simple_roots_of_short(self) -> tuple[tuple[int, ...], ...]:
        """Pi(Delta_s^+): short positive roots not a sum of two short positive roots."""
        self._require_two_lengths()
        return _indecomposables(self.short_positive)

    def short_string_simple_roots(self) -> tuple[tuple[int, ...], ...]:
        """Pi(Delta_s^+) via Dynkin strings from each long simple root to the nearest short one."""
        self._require_two_lengths()
        adj = {i: [j for j in range(self.rank) if j != i and self.cartan[i][j]] for i in range(self.rank)}
        out = [self.simple(i) for i in self.short_simple]
        for b in self.long_simple:
            prev = {b: None}
            queue = [b]
            end = None
            while queue and end is None:
                nq = []
                for i in queue:
                    for j in adj[i]:
                        if j not in prev:
                            prev[j] = i
                            if j in self.short_simple:
                                end = j
                                break
                            nq.append(j)
                    if end is not None:
                        break
                queue = nq
            v = [0] * self.rank
            node = end
            while node is not None:
                v[node] = 1
                node = prev[node]
            out.append(tuple(v))
        return tuple(sorted(out))

    # -- alcove ---------------------------------------------------------

    def alcove_vertices(self) -> list[tuple[Fraction, ...]]:
        p = self.rank
        verts = [tuple(Fraction(0) for _ in range(p))]
        for i in range(p):
            verts.append(tuple(Fraction(int(i == j), self.theta[i]) for j in range(p)))
        return verts

    def barycenter(self) -> tuple[Fraction, ...]:
        verts = self.alcove_vertices()
        return tuple(sum(v[i] for v in verts) / len(verts) for i in range(self.rank))

    def fundamental_coweight(self, i: int) -> tuple[int, ...]:
        return tuple(int(i == j) for j in range(self.rank))

    def coweight_classes(self) -> list[tuple[int, ...]]:
        """Representatives of P^vee / Q^vee, found by scanning a box of coweights."""
        reps: list[tuple[int, ...]] = []
        for y in itertools.product(range(self.f), repeat=self.rank):
            if all(not self.in_coroot_lattice(tuple(a - b for a, b in zip(y, r))) for r in reps):
                reps.append(y)
            if len(reps) == self.f:
                break
        return reps

    # -- serialization ----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"type {self.name}", f"rank {self.rank}", "cartan"]
        lines += [" ".join(f"{x:2d}" for x in row) for row in self.cartan]
        lines.append(f"positive_roots {len(self.positive_roots)}")
        for r, lg in zip(self.positive_roots, self.is_long):
            lines.append(" ".join(str(x) for x in r) + ("  long" if lg else "  short"))
        lines.append("theta " + " ".join(map(str, self.theta)))
        lines.append("theta_s " + " ".join(map(str, self.theta_s)))
        lines.append("exponents " + " ".join(map(str, self.exponents)))
        lines.append(f"h {self.h}")
        lines.append(f"f {self.f}")
        if self.two_lengths:
            lines.append(f"g {self.g}")
        return "\n".join(lines) + "\n"


def _quad(B, x) -> Fraction:
    n = len(x)
    return sum((x[i] * B[i][j] * x[j] for i in range(n) for j in range(n)), Fraction(0))


def _indecomposables(pos: Sequence[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    s = set(pos)
    out = []
    for r in pos:
        if not any(tuple(a - b for a, b in zip(r, q)) in s for q in pos if q != r):
            out.append(r)
    return tuple(sorted(out))


@cache
def build_root_system(letter: str, rank: int | None = None) -> RootSystem:
    """``build_root_system('C', 2)`` or ``build_root_system('C2')``."""
    if rank is None:
        letter, rank = parse_system(letter)
    return RootSystem(letter.upper(), int(rank))


# -- duality and subsystems ---------------------------------------------


_DUAL_LETTER = {"B": "C", "C": "B"}


def dual_system(rs: RootSystem) -> tuple[RootSystem, dict]:
    """The dual root system and the map mu -> mu^vee on positive roots.

    The dual is built from the transposed Cartan matrix, so its simple roots
    are the simple coroots alpha_i^vee in the same order (for F4 and G2 this
    is the Bourbaki numbering reversed).
    """
    letter = _DUAL_LETTER.get(rs.letter, rs.letter)
    At = [list(col) for col in zip(*rs.cartan)]
    dual = RootSystem(letter, rs.rank, At)
    corr = {}
    for mu in rs.positive_roots:
        n2 = rs.norm2(mu)
        coeffs = []
        for i, c in enumerate(mu):
            v = Fraction(c) * rs.norm2(rs.simple(i)) / n2
            if v.denominator != 1:
                raise RootSystemError("coroot is not integral over simple coroots")
            coeffs.append(int(v))
        coeffs = tuple(coeffs)
        if coeffs not in dual.index:
            raise RootSystemError(f"coroot {coeffs} missing from dual system")
        corr[mu] = coeffs
    return dual, corr


@dataclass(frozen=True)
class SubRootSystem:
    parent: RootSystem = field(repr=False)
    positive: tuple[tuple[int, ...], ...]
    simple_roots: tuple[tuple[int, ...], ...]
    label: str = ""

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def roots(self) -> frozenset:
        return frozenset(self.positive) | frozenset(tuple(-x for x in r) for r in self.positive)

    def coordinates(self, r) -> tuple[int, ...]:
        """Coefficients of a positive subsystem root over the subsystem's simple roots."""
        M = [[Fraction(s[i]) for s in self.simple_roots] for i in range(len(r))]
        sol = _least_solve(M, [Fraction(x) for x in r])
        if any(v.denominator != 1 or v < 0 for v in sol):
            raise RootSystemError(f"{r} is not a non-negative integer combination of the subsystem simple roots")
        return tuple(int(v) for v in sol)

    def height_distribution(self) -> list[int]:
        hts = [sum(self.coordinates(r)) for r in self.positive]
        top = max(hts, default=0)
        return [hts.count(k) for k in range(1, top + 1)]

    def exponents(self) -> list[int]:
        return exponents_from_heights(self)

    def is_closed_under_negation(self) -> bool:
        rs = self.roots
        return all(tuple(-x for x in r) in rs for r in rs)


def _least_solve(M, b):
    """Solve M x = b exactly for a full-column-rank (possibly tall) M."""
    rows, cols = len(M), len(M[0])
    aug = [list(M[i]) + [b[i]] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                fct = aug[i][c]
                aug[i] = [x - fct * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if len(piv_cols) != cols or any(aug[i][cols] != 0 for i in range(r, rows)):
        raise RootSystemError("inconsistent or underdetermined system")
    return [aug[i][cols] for i in range(cols)]


def exponents_from_heights(sub: SubRootSystem) -> list[int]:
    return conjugate_partition(sub.height_distribution())


def subsystem(rs: RootSystem, selector: str) -> SubRootSystem:
    """Selectors: 'short-roots', 'long-roots', 'span-of-long-simple'."""
    if selector in ("short-roots", "short"):
        rs._require_two_lengths()
        pos = rs.short_positive
        return SubRootSystem(rs, pos, _indecomposables(pos), "short")
    if selector in ("long-roots", "long"):
        rs._require_two_lengths()
        pos = rs.long_positive
        return SubRootSystem(rs, pos, _indecomposables(pos), "long")
    if selector in ("span-of-long-simple", "span-of-Pi_l", "span"):
        rs._require_two_lengths()
        support = set(rs.long_simple)
        pos = tuple(r for r in rs.positive_roots if all(c == 0 or i in support for i, c in enumerate(r)))
        return SubRootSystem(rs, pos, _indecomposables(pos), "span-of-long-simple")
    raise RootSystemError(f"unknown subsystem selector {selector!r}")


def long_simple_system(rs: RootSystem) -> RootSystem:
    """Delta(Pi_l) as a standalone root system from the Cartan submatrix."""
    rs._require_two_lengths()
    idx = rs.long_simple
    sub = [[rs.cartan[i][j] for j in idx] for i in idx]
    return RootSystem("A", len(idx), sub)


# -- finite Weyl group ----------------------------------------------------


class WeylElement:
    """Element of W stored by its integer matrix on simple-root coordinates."""

    __slots__ = ("inv", "mat", "rs")

    def __init__(self, rs: RootSystem, mat, inv=None):
        self.rs = rs
        self.mat = tuple(tuple(int(x) for x in row) for row in mat)
        if inv is None:
            invf = inverse([list(row) for row in self.mat])
            inv = [[int(x) for x in row] for row in invf]
        self.inv = tuple(tuple(int(x) for x in row) for row in inv)

    @classmethod
    def identity(cls, rs):
        I = [[int(i == j) for j in range(rs.rank)] for i in range(rs.rank)]
        return cls(rs, I, I)

    @classmethod
    def simple_reflection(cls, rs, i):
        p = rs.rank
        M = [[int(a == b) for b in range(p)] for a in range(p)]
        for j in range(p):
            M[i][j] -= rs.cartan[i][j]
        return cls(rs, M, M)

    @classmethod
    def reflection(cls, rs, mu):
        """s_mu(beta) = beta - <beta, mu^vee> mu."""
        p = rs.rank
        n2 = rs.norm2(mu)
        Bmu = rs.root_to_coweight(mu)
        M = [[int(a == b) - mu[a] * (2 * Bmu[b] / n2) for b in range(p)] for a in range(p)]
        M = [[int(x) for x in row] for row in M]
        return cls(rs, M, M)

    def __mul__(self, other: WeylElement) -> WeylElement:
        p = self.rs.rank
        M = [[sum(self.mat[i][k] * other.mat[k][j] for k in range(p)) for j in range(p)] for i in range(p)]
        N = [[sum(other.inv[i][k] * self.inv[k][j] for k in range(p)) for j in range(p)] for i in range(p)]
        return WeylElement(self.rs, M, N)

    def inverse(self) -> WeylElement:
        return WeylElement(self.rs, self.inv, self.mat)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return f"WeylElement({self.mat})"

    def is_identity(self) -> bool:
        return all(self.mat[i][j] == int(i == j) for i in range(self.rs.rank) for j in range(self.rs.rank))

    def act_root(self, beta) -> tuple:
        return tuple(sum(self.mat[i][j] * beta[j] for j in range(len(beta))) for i in range(len(beta)))

    def inv_act_root(self, beta) -> tuple:
        return tuple(sum(self.inv[i][j] * beta[j] for j in range(len(beta))) for i in range(len(beta)))

    def act_point(self, y) -> tuple:
        """Image of a point given by coweight coordinates: (v x, alpha_j) = (x, v^-1 alpha_j)."""
        p = len(y)
        return tuple(sum(self.inv[k][j] * y[k] for k in range(p)) for j in range(p))

    def inv_act_point(self, y) -> tuple:
        p = len(y)
        return tuple(sum(self.mat[k][j] * y[k] for k in range(p)) for j in range(p))


def dominant_sort(rs: RootSystem, y) -> tuple[WeylElement, tuple]:
    """Find u in W with u(x) in the closed dominant chamber; returns (u, u(x))."""
    y = list(y)
    u = WeylElement.identity(rs)
    while True:
        i = next((k for k, v in enumerate(y) if v < 0), None)
        if i is None:
            return u, tuple(y)
        yi = y[i]
        y = [y[j] - yi * rs.cartan[i][j] for j in range(rs.rank)]
        u = WeylElement.simple_reflection(rs, i) * u


def weyl_group_elements(rs: RootSystem, limit: int = 50000) -> list[WeylElement]:
    """All of W by closure under simple reflections (small ranks only)."""
    if rs.order > limit:
        raise RootSystemError(f"#W = {rs.order} exceeds enumeration limit {limit}")
    gens = [WeylElement.simple_reflection(rs, i) for i in range(rs.rank)]
    seen = {WeylElement.identity(rs)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                u = s * w
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return list(seen)
