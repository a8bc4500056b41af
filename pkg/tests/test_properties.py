from hypothesis import given, settings
from hypothesis import strategies as st

from rootposets import build_root_system
from rootposets.affine import (
    AffineWeylElement,
    classify,
    first_layer_ideal,
    inverse_from_point,
    is_biconvex,
    n_set,
)
from rootposets.posets import ideal_closure

SYSTEMS = ["C2", "G2", "B3", "C3"]


@st.composite
def words(draw):
    name = draw(st.sampled_from(SYSTEMS))
    rs = build_root_system(name)
    word = draw(st.lists(st.integers(0, rs.rank), max_size=10))
    return rs, word


@settings(max_examples=60, deadline=None)
@given(words())
def test_random_words(data):
    rs, word = data
    w = AffineWeylElement.from_word(rs, word)
    N = n_set(w)
    assert w.length() <= len(word) and (len(word) - w.length()) % 2 == 0
    assert is_biconvex(rs, N)
    assert AffineWeylElement.from_word(rs, w.reduced_word()) == w
    assert (w * w.inverse()) == AffineWeylElement.identity(rs)


@settings(max_examples=60, deadline=None)
@given(words())
def test_dominant_sort_of_translate(data):
    # the dominant element attached to v(r) is independent of how w was reached
    rs, word = data
    w = AffineWeylElement.from_word(rs, word)
    u = inverse_from_point(rs, w.v_of_r())
    assert u.v_of_r() == w.v_of_r()
    assert classify(u).dominant
    if classify(w).dominant:
        assert u == w
        first_layer_ideal(w)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SYSTEMS), st.data())
def test_ideal_closure(name, data):
    rs = build_root_system(name)
    roots = data.draw(st.sets(st.sampled_from(rs.positive_roots)))
    I = ideal_closure(rs, roots)
    assert set(roots) <= set(I.members)
    assert ideal_closure(rs, I.members).members == I.members
    assert ideal_closure(rs, I.generators).members == I.members
    for a in I.members:
        for b in rs.positive_roots:
            if rs.leq(a, b):
                assert b in I.members
