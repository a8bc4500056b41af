from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from rootposets.polynomials import IntPolynomial, product_of_linear, zaslavsky_counts

ints = st.lists(st.integers(-20, 20), min_size=1, max_size=6)


def test_factored_strings():
    assert product_of_linear([3, 5]).factored() == "(t-3)(t-5)"
    assert product_of_linear([11, 9, 7, 9]).factored() == "(t-7)(t-9)^2(t-11)"
    assert product_of_linear([0, -2]).factored() == "(t+2)t"


def test_coefficients_constant_first():
    p = product_of_linear([1, 2])
    assert p.coefficient_list() == [2, -3, 1]
    assert p(Fraction(3)) == 2


def test_zaslavsky_braid_a2():
    chi = product_of_linear([1, 2])
    assert zaslavsky_counts(chi, 2) == {"regions": 6, "bounded_regions": 0}


@given(ints)
def test_roots_recovered(roots):
    p = product_of_linear(roots)
    assert p.is_monic and p.is_integral and p.degree == len(roots)
    assert sorted(p.integer_roots()) == sorted(roots)


@given(ints, ints)
def test_ring_laws(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    for x in range(-3, 4):
        assert (p * q)(x) == p(x) * q(x)
        assert (p + q)(x) == p(x) + q(x)
        assert p.shift(2)(x) == p(x - 2)


@given(ints)
def test_interpolation_recovers(coeffs):
    p = IntPolynomial(coeffs)
    pts = [(x, p(x)) for x in range(len(coeffs))]
    assert IntPolynomial.interpolate(pts) == p
