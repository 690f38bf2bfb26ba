import itertools
import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regdecomp.errors import RingMismatchError
from regdecomp.ring import (
    GREVLEX_ORDER,
    LEX_ORDER,
    CoefficientField,
    MonomialOrder,
    Polynomial,
    RingDescriptor,
    exact_divide,
    is_prime,
    leading_term,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
    poly_add,
    poly_mul,
    prime_field,
)

from conftest import exponents, polynomials
from oracles import monomials_upto

R = RingDescriptor(("x", "y", "z"))
RF = RingDescriptor(("x", "y", "z"), prime_field(5))


def test_add_cancels(Rxy):
    x, y = Rxy.gens()
    assert poly_add(x + y, x - y) == 2 * x
    assert (x + y) + Rxy.zero() == x + y


def test_add_mod_p():
    x = RF.gen(0)
    assert poly_add(3 * x, 4 * x) == 2 * x
    assert (3 * x + 4 * x).terms == ((2, (1, 0, 0)),)


def test_mul_examples(Rxy):
    x, y = Rxy.gens()
    assert poly_mul(x + y, x - y) == x**2 - y**2
    assert (x + y) * Rxy.one() == x + y


def test_cube_against_binomial_expansion(Rxy):
    x = Rxy.gen(0)
    p = (x + 1) * (x + 1) * (x + 1)
    # term-by-term binomial coefficients
    expected = {(k, 0): Fraction(comb(3, k)) for k in range(4)}
    assert p.as_dict() == expected
    assert str(p) == "x^3 + 3*x^2 + 3*x + 1"


def test_ring_mismatch(Rxy):
    with pytest.raises(RingMismatchError):
        poly_add(Rxy.gen(0), R.gen(0))
    with pytest.raises(RingMismatchError):
        poly_mul(Rxy.gen(0), R.gen(0))


def test_leading_term(Rxy):
    x, y = Rxy.gens()
    f = x**2 + x * y**2
    assert leading_term(f, LEX_ORDER) == (1, (2, 0))
    assert leading_term(f, GREVLEX_ORDER) == (1, (1, 2))
    assert leading_term(Rxy.constant(7), LEX_ORDER) == (7, (0, 0))
    with pytest.raises(ValueError):
        leading_term(Rxy.zero(), LEX_ORDER)


def test_monomial_helpers():
    assert monomial_lcm((2, 1), (0, 3)) == (2, 3)
    assert monomial_divides((1, 1), (2, 1))
    assert not monomial_divides((2, 1), (1, 1))
    assert monomial_quotient((2, 3), (1, 1)) == (1, 2)
    with pytest.raises(ValueError):
        monomial_quotient((1, 0), (0, 1))
    with pytest.raises(RingMismatchError):
        monomial_lcm((1,), (1, 2))


def test_monomial_helpers_against_enumeration():
    mons = monomials_upto(3, 3)
    for a, b in itertools.product(mons, repeat=2):
        ok = all(i <= j for i, j in zip(a, b))
        assert monomial_divides(a, b) == ok
        # lcm is the least common multiple among enumerated candidates
        upper = [m for m in monomials_upto(3, 6) if all(i <= k and j <= k for i, j, k in zip(a, b, m))]
        assert monomial_lcm(a, b) == min(upper, key=sum)


def test_field_validation():
    with pytest.raises(ValueError):
        CoefficientField(6)
    assert is_prime(32003) and not is_prime(32001)
    assert prime_field(7).convert(Fraction(1, 2)) == 4


def test_ring_validation():
    with pytest.raises(ValueError):
        RingDescriptor(())
    with pytest.raises(ValueError):
        RingDescriptor(("x", "x"))
    with pytest.raises(ValueError):
        RingDescriptor(("1x",))


def test_canonical_form_independent_of_term_order():
    terms = [(3, (1, 0, 0)), (Fraction(-1, 2), (0, 2, 0)), (5, (0, 0, 0)), (2, (1, 0, 0))]
    reference = Polynomial(R, terms)
    rng = random.Random(1)
    for _ in range(20):
        shuffled = terms[:]
        rng.shuffle(shuffled)
        assert Polynomial(R, shuffled).terms == reference.terms
    assert reference.terms[0] == (Fraction(-1, 2), (0, 2, 0))


def test_exact_divide(Rxy):
    x, y = Rxy.gens()
    assert exact_divide(x**2 - y**2, x + y) == x - y
    assert exact_divide(x**2 + y, x) is None


def test_str_roundtrip_shapes(Rxy):
    x, y = Rxy.gens()
    assert str(-x + Fraction(1, 2) * y - 3) == "-x + 1/2*y - 3"
    assert str(Rxy.zero()) == "0"


@settings(max_examples=60, deadline=None)
@given(polynomials(R), polynomials(R), polynomials(R))
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert f - f == R.zero()


@settings(max_examples=60, deadline=None)
@given(polynomials(RF), polynomials(RF), polynomials(RF))
def test_ring_axioms_mod_p(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert all(0 <= c < 5 for c, _ in (f * g).terms)


@settings(max_examples=60, deadline=None)
@given(polynomials(R))
def test_terms_sorted_and_nonzero(f):
    key = GREVLEX_ORDER.key
    assert all(c != 0 for c, _ in f.terms)
    keys = [key(e) for _, e in f.terms]
    assert keys == sorted(keys, reverse=True)
    assert len(set(keys)) == len(keys)


ORDERS = [LEX_ORDER, GREVLEX_ORDER, MonomialOrder("lex", (2, 0, 1)),
          MonomialOrder("grevlex", (1, 2, 0)), MonomialOrder.elimination(3, [1])]


@pytest.mark.parametrize("order", ORDERS, ids=str)
@settings(max_examples=80, deadline=None)
@given(a=exponents(3), b=exponents(3), c=exponents(3))
def test_order_laws(order, a, b, c):
    cmp = order.compare
    # totality and antisymmetry
    assert (cmp(a, b) == 0) == (a == b)
    assert cmp(a, b) == -cmp(b, a)
    # multiplicativity
    ac = tuple(i + j for i, j in zip(a, c))
    bc = tuple(i + j for i, j in zip(b, c))
    if cmp(a, b) < 0:
        assert cmp(ac, bc) < 0
    # 1 is minimal
    assert cmp((0, 0, 0), a) <= 0


def test_lex_and_grevlex_reference_cases():
    assert LEX_ORDER.compare((1, 0, 0), (0, 5, 5)) == 1
    assert GREVLEX_ORDER.compare((1, 0, 0), (0, 5, 5)) == -1
    # same degree: grevlex prefers the smaller exponent in the last variable
    assert GREVLEX_ORDER.compare((1, 1, 0), (2, 0, 0)) == -1
    assert GREVLEX_ORDER.compare((1, 0, 1), (0, 2, 0)) == -1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 6))
def test_power_matches_repeated_product(n):
    x, y, z = R.gens()
    f = x - 2 * y + z * Fraction(1, 3)
    p = R.one()
    for _ in range(n):
        p = p * f
    assert f**n == p
