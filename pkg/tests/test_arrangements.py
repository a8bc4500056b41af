import itertools

import pytest

from rootposets import build_root_system
from rootposets.affine import elements_of_simplex
from rootposets.arrangements import (
    EngineError,
    ResourceGuardError,
    alcove_count_formula,
    build_arrangement,
    cat_prediction,
    cat_s_prediction,
    char_poly,
    char_poly_run,
    char_poly_whitney,
    coxeter_prediction,
    dominant_region_census,
    is_bounded,
    most_distant_alcove_check,
    normalize_kind,
    psi_region,
    psi_separated,
    semi_shi_conjecture_report,
    semi_shi_prediction,
    valid_dilation_factors,
)
from rootposets.polynomials import product_of_linear, zaslavsky_counts
from rootposets.posets import enumerate_antichains
from rootposets.rootsys import SimplyLacedError


def brute_count(arr, q):
    """Points of F_q^p, in coweight coordinates, off every hyperplane."""
    hs = [(h.mu, h.k % q) for h in arr.hyperplanes]
    n = 0
    for y in itertools.product(range(q), repeat=arr.rs.rank):
        if all(sum(a * b for a, b in zip(mu, y)) % q != k for mu, k in hs):
            n += 1
    return n


@pytest.mark.parametrize("name,kind,m", [("C2", "shi_s", 1), ("C2", "cat_s", 2), ("G2", "shi_s", 2), ("G2", "cat", 1), ("A2", "shi", 1)])
def test_against_brute_force(name, kind, m):
    rs = build_root_system(name)
    arr = build_arrangement(rs, kind, m)
    chi = char_poly(arr)
    for q in (101, 103, 107):
        assert chi(q) == brute_count(arr, q)


@pytest.mark.parametrize("name", ["A2", "A3", "B3", "C3", "G2", "C2", "D4", "F4"])
def test_coxeter_and_catalan(name):
    rs = build_root_system(name)
    assert char_poly(build_arrangement(rs, "coxeter")) == product_of_linear(rs.exponents) == coxeter_prediction(rs)
    assert char_poly(build_arrangement(rs, "cat", 1)) == cat_prediction(rs, 1)
    assert char_poly(build_arrangement(rs, "shi", 1)) == product_of_linear([rs.h] * rs.rank)


@pytest.mark.parametrize("name", ["C2", "G2", "B3", "C3"])
@pytest.mark.parametrize("kind", ["coxeter", "cat", "cat_s", "shi", "shi_s"])
def test_engines_agree(name, kind):
    rs = build_root_system(name)
    for m in (1, 2):
        arr = build_arrangement(rs, kind, m)
        assert char_poly(arr) == char_poly_whitney(arr)


def test_region_counts():
    # Catalan arrangement of A2: #W * Catalan regions; Shi: (h + 1)^p
    rs = build_root_system("A2")
    assert zaslavsky_counts(char_poly(build_arrangement(rs, "cat", 1)), 2)["regions"] == 30
    assert zaslavsky_counts(char_poly(build_arrangement(rs, "shi", 1)), 2)["regions"] == 16


@pytest.mark.parametrize("name", ["C2", "B3", "C3", "C4", "F4"])
def test_semi_catalan_product(name):
    rs = build_root_system(name)
    for m in (1, 2):
        assert char_poly(build_arrangement(rs, "cat_s", m)) == cat_s_prediction(rs, m)


def test_g2_semi_catalan_parity(G2):
    assert char_poly(build_arrangement(G2, "cat_s", 1)).factored() == "(t-5)(t-7)"
    assert char_poly(build_arrangement(G2, "cat_s", 2)).factored() == "(t-7)(t-11)"


def test_semi_shi(C2, G2):
    for m in (1, 2, 3):
        assert char_poly(build_arrangement(C2, "shi_s", m)) == product_of_linear([2 * m + 1] * 2) == semi_shi_prediction(C2, m)
    rep = semi_shi_conjecture_report(G2, 3)
    assert rep["chi_factored"] == "(t-10)(t-11)" and rep["verdict"] == "equal"


def test_guards_and_kinds():
    with pytest.raises(ResourceGuardError):
        char_poly(build_arrangement(build_root_system("E6"), "coxeter"), max_rank=5)
    with pytest.raises(ResourceGuardError):
        char_poly_whitney(build_arrangement(build_root_system("F4"), "coxeter"))
    assert normalize_kind("Shi-s") == "shi_s"
    with pytest.raises(ValueError):
        normalize_kind("linial")
    with pytest.raises(SimplyLacedError):
        build_arrangement(build_root_system("A3"), "cat_s", 1)
    assert issubclass(EngineError, RuntimeError)


def test_run_records_primes(C2):
    run = char_poly_run(build_arrangement(C2, "cat", 1))
    assert len(run.primes) == 4 and all(run.chi(q) == n for q, n in zip(run.primes, run.counts))


@pytest.mark.parametrize("name", ["C2", "G2", "C3", "B3"])
def test_dominant_regions(name):
    rs = build_root_system(name)
    c = dominant_region_census(rs, "cat_s")
    assert c.ok
    regions = [psi_region(rs, g) for g in enumerate_antichains(rs, "short")]
    assert sum(is_bounded(r) for r in regions) == c.enumerated_bounded
    for a, b in itertools.combinations(regions, 2):
        assert psi_separated(a, b)
        assert a.sample not in b


@pytest.mark.parametrize("name", ["C2", "G2", "C3", "F4"])
def test_most_distant_alcoves(name):
    rs = build_root_system(name)
    for w in elements_of_simplex(rs, "D_s_max"):
        ok, problems = most_distant_alcove_check(w)
        assert ok, problems


@pytest.mark.parametrize("name,m", [("C2", 1), ("C3", 1), ("B3", 2), ("F4", 1)])
def test_alcove_count_formula(name, m):
    rs = build_root_system(name)
    chi = char_poly(build_arrangement(rs, "cat_s", m))
    for t in valid_dilation_factors(rs, m):
        assert alcove_count_formula(rs, m, t) == chi(t) != 0
