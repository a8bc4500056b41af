from math import comb

import pytest

from rootposets import build_root_system
from rootposets.posets import (
    Antichain,
    Ideal,
    closed_form_counts,
    count_antichains,
    decomposition_numbers,
    enumerate_antichains,
    enumerate_ideals,
    fibre_histogram,
    ideal_closure,
    ideal_powers,
)

# independently known counts: Catalan numbers of type X and the short/long tables
KNOWN = {
    "C2": dict(AN=6, AN0=3, AN_s=3, AN_s0=1, AN_l=3, AN_ss=2),
    "G2": dict(AN=8, AN0=5, AN_s=4, AN_s0=2, AN_l=4, AN_ss=3),
    "B3": dict(AN=20, AN0=10, AN_s=4, AN_s0=1),
    "C3": dict(AN=20, AN0=10, AN_s=10, AN_s0=4),
    "F4": dict(AN=105, AN0=66, AN_s=21, AN_s0=10, AN_l=21, AN_ss=16),
}
FILTER = {"AN": "all", "AN0": "strictly_positive", "AN_s": "short", "AN_s0": "strictly_s_positive", "AN_l": "long", "AN_ss": "ss"}


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_known_counts(name):
    rs = build_root_system(name)
    for key, value in KNOWN[name].items():
        assert count_antichains(rs, FILTER[key]) == value, key


@pytest.mark.parametrize("name", ["A3", "D4", "E6"])
def test_catalan_numbers_simply_laced(name):
    rs = build_root_system(name)
    cf = closed_form_counts(rs)
    assert count_antichains(rs) == cf["AN"].value
    assert count_antichains(rs, "strictly_positive") == cf["AN0"].value


def test_type_a_catalan():
    for n in range(1, 6):
        assert count_antichains(build_root_system("A", n)) == comb(2 * n + 2, n + 1) // (n + 2)


def test_antichain_validation(C2):
    with pytest.raises(ValueError):
        Antichain(C2, frozenset({(1, 0), (1, 1)}))
    a = Antichain(C2, frozenset({(1, 1)}))
    assert a.short and not a.strictly_s_positive and a.strictly_positive


def test_ideal_closure_and_generators(C2):
    I = ideal_closure(C2, [(1, 1)])
    assert set(I.members) == {(1, 1), (2, 1)}
    assert I.generators == ((1, 1),)
    with pytest.raises(ValueError):
        Ideal(C2, frozenset({(1, 1)}))


def test_ideals_match_antichains(G2):
    assert len(enumerate_ideals(G2)) == count_antichains(G2)
    assert len(enumerate_ideals(G2, strictly_positive=True)) == count_antichains(G2, "strictly_positive")


def test_powers_and_k_numbers(C2):
    full = Ideal(C2, frozenset(C2.positive_roots))
    assert [len(x) for x in ideal_powers(C2, full)] == [4, 2, 1]
    I = Ideal(C2, frozenset({(1, 1), (2, 1)}))
    k = decomposition_numbers(C2, I)
    assert k[(1, 1)] == 2 and k[(2, 1)] == 3
    with pytest.raises(ValueError):
        decomposition_numbers(C2, full)


def test_enumeration_is_canonical(C2):
    a = [str(x) for x in enumerate_antichains(C2)]
    assert a == [str(x) for x in enumerate_antichains(C2)]
    assert a[0] == "{}"
    assert len(set(a)) == len(a)


def test_fibres():
    assert fibre_histogram(build_root_system("C3")) == {2: 10}
    assert fibre_histogram(build_root_system("G2")) == {1: 1, 2: 2, 3: 1}


def test_g2_formula_rows_flagged(G2):
    cf = closed_form_counts(G2)
    assert not cf["AN_s"].applicable and cf["AN_s"].expected == 4
    assert cf["AN_s_unified"].value == 4
