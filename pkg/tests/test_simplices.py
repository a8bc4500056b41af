import itertools
from fractions import Fraction
from math import gcd, prod

import pytest

from rootposets import build_root_system
from rootposets.posets import count_antichains
from rootposets.simplices import (
    Constraint,
    HalfSpaceSystem,
    UnboundedError,
    count_lattice_points,
    face_codimension,
    lattice_points,
    simplex,
)


def brute_P_count(rs, t, closed=True):
    """Coweights y >= 0 (or > 0) with sum c_i y_i <= t (or < t)."""
    c = rs.theta
    lo = 0 if closed else 1
    n = 0
    for y in itertools.product(range(lo, t + 1), repeat=rs.rank):
        s = sum(a * b for a, b in zip(c, y))
        n += s <= t if closed else s < t
    return n


@pytest.mark.parametrize("name", ["A2", "C2", "G2", "B3", "C3"])
def test_coroot_points_in_dilated_alcoves(name):
    rs = build_root_system(name)
    for t in range(1, 3 * rs.h):
        if gcd(t, rs.h) != 1:
            continue
        closed = count_lattice_points(simplex(rs, "alcove", t), "Q")
        opened = count_lattice_points(simplex(rs, "alcove", t, closed=False), "Q")
        assert closed == prod(t + e for e in rs.exponents) // rs.order
        assert opened == prod(t - e for e in rs.exponents) // rs.order if t > rs.h else True


@pytest.mark.parametrize("name", ["C2", "G2", "B3", "F4"])
def test_coweight_points_in_dilated_alcoves(name):
    rs = build_root_system(name)
    for t in range(7):
        assert count_lattice_points(simplex(rs, "alcove", t), "P") == brute_P_count(rs, t)
        if t:
            assert count_lattice_points(simplex(rs, "alcove", t, closed=False), "P") == brute_P_count(rs, t, False)


@pytest.mark.parametrize("name", ["C2", "G2", "C3", "B4", "F4"])
def test_named_simplex_sizes(name):
    rs = build_root_system(name)
    assert count_lattice_points(simplex(rs, "D_min")) == count_antichains(rs)
    assert count_lattice_points(simplex(rs, "D_max")) == count_antichains(rs, "strictly_positive")
    assert count_lattice_points(simplex(rs, "D_s_min")) == count_antichains(rs, "short")
    assert count_lattice_points(simplex(rs, "D_s_max")) == count_antichains(rs, "strictly_s_positive")


def test_alcove_vertices(G2):
    verts = simplex(G2, "alcove", 1).vertices()
    assert verts == sorted([(0, 0), (Fraction(1, 3), 0), (0, Fraction(1, 2))])


def test_d_min_is_translated_dilated_alcove(C3):
    # D_min - (-1, ..., -1) should have the same number of lattice points as (h + 1) A
    rs = C3
    assert count_lattice_points(simplex(rs, "D_min"), "P") == count_lattice_points(simplex(rs, "alcove", rs.h + 1), "P")


def test_unbounded_rejected(C2):
    S = HalfSpaceSystem(C2, (Constraint((1, 0), ">=", Fraction(0)), Constraint((0, 1), ">=", Fraction(0))))
    assert not S.is_bounded()
    with pytest.raises(UnboundedError):
        lattice_points(S)


def test_constraints_and_codimension(C2):
    S = simplex(C2, "D_max")
    assert (0, 0) in S
    assert face_codimension(S, (0, 0)) == 1
    assert face_codimension(S, (1, 0)) == 1
    assert face_codimension(S, (1, -2)) == 2
    with pytest.raises(ValueError):
        face_codimension(S, (5, 5))
    with pytest.raises(ValueError):
        simplex(C2, "D_weird")
    with pytest.raises(ValueError):
        simplex(C2, "alcove")
    assert Constraint((1, 0), "<", Fraction(1, 2)).integer_bounds() == (None, 0)


@pytest.fixture
def C3():
    return build_root_system("C3")
