import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from sympy import Poly, cyclotomic_poly, symbols

from weightbench.cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi

x = symbols("x")


@pytest.mark.parametrize("e", range(1, 31))
def test_cyclotomic_polynomial_matches_sympy(e):
    ours = [int(c) for c in cyclotomic_polynomial(e)]
    theirs = Poly(cyclotomic_poly(e, x), x).all_coeffs()[::-1]
    assert ours == [int(c) for c in theirs]
    assert euler_phi(e) == len(ours) - 1


def elements(e):
    return st.lists(st.integers(-4, 4), min_size=1, max_size=e).map(
        lambda cs: sum((Cyclotomic.root(e, k) * c for k, c in enumerate(cs)), Cyclotomic.zero(e)))


@pytest.mark.parametrize("e", [3, 4, 5, 8, 12])
@given(data=st.data())
def test_arithmetic_matches_complex(e, data):
    a = data.draw(elements(e))
    b = data.draw(elements(e))
    for got, want in ((a + b, a.to_complex() + b.to_complex()),
                      (a - b, a.to_complex() - b.to_complex()),
                      (a * b, a.to_complex() * b.to_complex()),
                      (a.conjugate(), a.to_complex().conjugate())):
        assert abs(got.to_complex() - want) < 1e-9
    if not a.is_zero():
        assert a * a.inverse() == Cyclotomic.one(e)


def test_roots_and_galois():
    z = Cyclotomic.root(5, 1)
    assert sum((Cyclotomic.root(5, k) for k in range(5)), Cyclotomic.zero(5)).is_zero()
    assert abs(z.to_complex() - cmath.exp(2j * cmath.pi / 5)) < 1e-12
    assert z.galois(2) == Cyclotomic.root(5, 2)
    r = z + z.conjugate()
    assert not r.is_rational()
    assert (z * z.conjugate()).to_rational() == 1


def test_rational_division():
    a = Cyclotomic.rational(6, Fraction(3, 2))
    assert (a / 3).to_rational() == Fraction(1, 2)
    assert a.is_rational() and not a.is_integral()
