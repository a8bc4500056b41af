"""Half-space systems in V and exact lattice-point enumeration.

Every constraint is a pairing (x, mu) with an explicit positive root mu,
so in fundamental-coweight coordinates a constraint is ``mu . y REL b``.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import nullspace, rank, rref
from .rootsys import RootSystem

RELATIONS = (">=", ">", "<=", "<")
MAX_BOX = 20_000_000


class UnboundedError(ValueError):
    pass


@dataclass(frozen=True)
class Constraint:
    form: tuple[int, ...]
    rel: str
    bound: Fraction

    def holds(self, y) -> bool:
        v = sum((Fraction(a) * b for a, b in zip(self.form, y)), Fraction(0))
        if self.rel == ">=":
            return v >= self.bound
        if self.rel == ">":
            return v > self.bound
        if self.rel == "<=":
            return v <= self.bound
        return v < self.bound

    def tight(self, y) -> bool:
        return sum((Fraction(a) * b for a, b in zip(self.form, y)), Fraction(0)) == self.bound

    def closed(self) -> Constraint:
        return Constraint(self.form, self.rel[0] + "=", self.bound)

    def integer_bounds(self) -> tuple[int | None, int | None]:
        """(lo, hi) on the integer value of the form for integral points."""
        b = Fraction(self.bound)
        if self.rel == ">=":
            return math.ceil(b), None
        if self.rel == ">":
            return math.floor(b) + 1, None
        if self.rel == "<=":
            return None, math.floor(b)
        return None, math.ceil(b) - 1


@dataclass(frozen=True)
class HalfSpaceSystem:
    rs: RootSystem
    constraints: tuple[Constraint, ...]
    name: str = ""

    def __contains__(self, y) -> bool:
        return all(c.holds(y) for c in self.constraints)

    def tight_count(self, y) -> int:
        return sum(1 for c in self.constraints if c.tight(y))

    def closure(self) -> HalfSpaceSystem:
        return HalfSpaceSystem(self.rs, tuple(c.closed() for c in self.constraints), self.name)

    def is_bounded(self) -> bool:
        """Recession-cone test: bounded iff no nonzero d satisfies the homogeneous constraints."""
        p = self.rs.rank
        forms = [list(c.form) for c in self.constraints]
        if rank(forms) < p:
            return False
        signs = [1 if c.rel[0] == ">" else -1 for c in self.constraints]

        def in_cone(d):
            return all(s * sum(a * x for a, x in zip(f, d)) >= 0 for f, s in zip(forms, signs))

        for sub in itertools.combinations(range(len(forms)), p - 1):
            ns = nullspace([forms[i] for i in sub], p)
            if len(ns) != 1:
                continue
            d = ns[0]
            if in_cone(d) or in_cone([-x for x in d]):
                return False
        return True

    def vertices(self) -> list[tuple[Fraction, ...]]:
        """Vertices of the closure (points where p independent constraints are tight)."""
        p = self.rs.rank
        closed = self.closure()
        out = set()
        for sub in itertools.combinations(self.constraints, p):
            aug = [list(c.form) + [c.bound] for c in sub]
            R, piv = rref(aug)
            if piv != list(range(p)):
                continue
            pt = tuple(row[p] for row in R)
            if pt in closed:
                out.add(pt)
        return sorted(out)

    def box(self) -> list[tuple[int, int]]:
        if not self.is_bounded():
            raise UnboundedError(f"half-space system {self.name!r} is unbounded")
        verts = self.vertices()
        p = self.rs.rank
        return [(math.floor(min(v[i] for v in verts)), math.ceil(max(v[i] for v in verts))) for i in range(p)]

    def to_json(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "system": self.rs.name,
                "constraints": [{"root": list(c.form), "rel": c.rel, "bound": str(c.bound)} for c in self.constraints],
            }
        )


def _cons(form, rel, bound) -> Constraint:
    if rel not in RELATIONS:
        raise ValueError(f"bad relation {rel!r}")
    return Constraint(tuple(int(x) for x in form), rel, Fraction(bound))


def simplex(rs: RootSystem, name: str, t=None, closed: bool = True) -> HalfSpaceSystem:
    """Named simplices: D_min, D_max, D_s_min, D_s_max, D_l_min, alcove (needs t)."""
    p = rs.rank
    simple = [rs.simple(i) for i in range(p)]
    th = rs.theta
    ge, le = (">=", "<=") if closed else (">", "<")
    if name == "D_min":
        cs = [_cons(a, ">=", -1) for a in simple] + [_cons(th, "<=", 2)]
    elif name == "D_max":
        cs = [_cons(a, "<=", 1) for a in simple] + [_cons(th, ">=", 0)]
    elif name == "D_s_min":
        rs._require_two_lengths()
        cs = [_cons(a, ">=", -1 if i in rs.short_simple else 0) for i, a in enumerate(simple)]
        cs.append(_cons(th, "<=", 1))
    elif name == "D_s_max":
        rs._require_two_lengths()
        cs = [_cons(a, "<=", 1 if i in rs.short_simple else 0) for i, a in enumerate(simple)]
        cs.append(_cons(th, ">=", 1))
    elif name == "D_l_min":
        rs._require_two_lengths()
        cs = [_cons(a, ">=", 0 if i in rs.short_simple else 1) for i, a in enumerate(simple)]
        cs.append(_cons(th, "<=", 2))
    elif name in ("alcove", "dilated_alcove"):
        if t is None or Fraction(t) < 0:
            raise ValueError("dilated alcove needs a factor t >= 0")
        cs = [_cons(a, ge, 0) for a in simple] + [_cons(th, le, t)]
        name = f"{'closed' if closed else 'open'} {t}A"
    else:
        raise ValueError(f"unknown simplex {name!r}")
    return HalfSpaceSystem(rs, tuple(cs), name)


def _coroot_test(rs: RootSystem):
    """Integer matrix M and modulus d with y in Q^vee iff M y = 0 mod d."""
    inv = [[Fraction(x) for x in row] for row in rs._inv_cartan_t]
    d = 1
    for row in inv:
        for x in row:
            d = d * x.denominator // math.gcd(d, x.denominator)
    M = np.array([[int(x * d) for x in row] for row in inv], dtype=np.int64)
    return M, d


def lattice_points(S: HalfSpaceSystem, lattice: str = "Q") -> list[tuple[int, ...]]:
    """All points of S in Q^vee (lattice='Q') or P^vee ('P'), as coweight coordinates."""
    if lattice not in ("Q", "P"):
        raise ValueError("lattice must be 'Q' or 'P'")
    rs = S.rs
    box = S.box()
    sizes = [hi - lo + 1 for lo, hi in box]
    if math.prod(sizes) > MAX_BOX:
        raise MemoryError(f"lattice box of {math.prod(sizes)} points exceeds limit")
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in box]
    grid = np.stack([g.ravel() for g in np.meshgrid(*axes, indexing="ij")], axis=1)
    keep = np.ones(len(grid), dtype=bool)
    for c in S.constraints:
        val = grid @ np.array(c.form, dtype=np.int64)
        lo, hi = c.integer_bounds()
        if lo is not None:
            keep &= val >= lo
        if hi is not None:
            keep &= val <= hi
    grid = grid[keep]
    if lattice == "Q" and rs.f > 1:
        M, d = _coroot_test(rs)
        grid = grid[np.all((grid @ M.T) % d == 0, axis=1)]
    return [tuple(int(v) for v in row) for row in grid]


def count_lattice_points(S: HalfSpaceSystem, lattice: str = "Q") -> int:
    return len(lattice_points(S, lattice))


def face_codimension(S: HalfSpaceSystem, y) -> int:
    """Number of defining inequalities tight at y (the codimension, since these simplices are simple)."""
    if y not in S.closure():
        raise ValueError(f"point {y} is not in {S.name}")
    return S.tight_count(y)
