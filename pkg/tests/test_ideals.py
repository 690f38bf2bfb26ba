import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regdecomp.errors import BudgetExceededError, RingMismatchError
from regdecomp.groebner import budget
from regdecomp.ideals import (
    Ideal,
    colon,
    colon_ideal,
    elimination_ideal,
    ideal_equal,
    ideal_power,
    intersect,
    normal_form,
    reduced_groebner_basis,
)
from regdecomp.ring import LEX_ORDER, GREVLEX_ORDER, Polynomial, RingDescriptor

from conftest import polynomials, random_monomial_ideal_gens, ring_for
from oracles import divide_with_cofactors, member, monomials_upto, padd, pmul, textbook_buchberger


def basis_dicts(I, order):
    return [g.as_dict() for g in reduced_groebner_basis(I, order)]


def test_groebner_reference_example(Rxy):
    x, y = Rxy.gens()
    I = Ideal(Rxy, [x**2 - y, x * y - 1])
    gb = reduced_groebner_basis(I, LEX_ORDER)
    assert gb == [x - y**2, y**3 - 1]
    oracle = textbook_buchberger([(x**2 - y).as_dict(), (x * y - 1).as_dict()])
    assert [g.as_dict() for g in gb] == oracle


def test_groebner_trivial_cases(Rxy):
    x, y = Rxy.gens()
    assert reduced_groebner_basis(Ideal(Rxy, [x])) == [x]
    assert reduced_groebner_basis(Ideal(Rxy, [x, x**2])) == [x]
    assert reduced_groebner_basis(Ideal(Rxy, [])) == []
    assert reduced_groebner_basis(Ideal(Rxy, [x, 1 - x])) == [Rxy.one()]


def test_groebner_cached(Rxy):
    x, y = Rxy.gens()
    I = Ideal(Rxy, [x**2 - y, x * y - 1])
    first = I.groebner_basis(LEX_ORDER)
    assert I.groebner_basis(LEX_ORDER) is first


def test_budget_exceeded_is_reported(Rxyz):
    x, y, z = Rxyz.gens()
    I = Ideal(Rxyz, [x**3 - y * z, y**3 - x * z, z**3 - x * y])
    with budget(1):
        with pytest.raises(BudgetExceededError):
            reduced_groebner_basis(I, LEX_ORDER)


@pytest.mark.parametrize("seed", range(12))
def test_groebner_matches_textbook_oracle(seed):
    rng = random.Random(seed)
    ring = RingDescriptor(("x", "y", "z"))
    polys = []
    for _ in range(rng.randint(2, 3)):
        terms = [(Fraction(rng.randint(-3, 3)), tuple(rng.randint(0, 2) for _ in range(3)))
                 for _ in range(rng.randint(1, 3))]
        polys.append(Polynomial(ring, terms))
    polys = [p for p in polys if p]
    got = basis_dicts(Ideal(ring, polys), LEX_ORDER)
    assert got == textbook_buchberger([p.as_dict() for p in polys])


def test_normal_form_examples(Rxy):
    x, y = Rxy.gens()
    assert normal_form(x**2, Ideal(Rxy, [x])) == Rxy.zero()
    assert normal_form(x**2 + y, Ideal(Rxy, [x])) == y
    I = Ideal(Rxy, [x**2 - y, x * y - 1])
    r = normal_form(x**3, I, LEX_ORDER)
    # cofactor bookkeeping: x^3 = sum q_k g_k + r with the same remainder
    basis = [g.as_dict() for g in reduced_groebner_basis(I, LEX_ORDER)]
    qs, rem = divide_with_cofactors((x**3).as_dict(), basis)
    assert rem == r.as_dict()
    recon = rem
    for q, g in zip(qs, basis):
        recon = padd(recon, pmul(q, g))
    assert recon == (x**3).as_dict()
    assert r == Rxy.one()


def test_ideal_equal_examples(Rxy):
    x, y = Rxy.gens()
    assert ideal_equal(Ideal(Rxy, [x, y]), Ideal(Rxy, [y, x]))
    assert not ideal_equal(Ideal(Rxy, [x]), Ideal(Rxy, [x**2]))
    I, J = Ideal(Rxy, [x + y, y]), Ideal(Rxy, [x, y])
    assert ideal_equal(I, J)
    # oracle: mutual membership of generators
    assert all(J.contains(g) for g in I.generators) and all(I.contains(g) for g in J.generators)
    with pytest.raises(RingMismatchError):
        ideal_equal(I, Ideal(RingDescriptor(("x",)), []))


def test_intersect_examples(Rxy):
    x, y = Rxy.gens()
    assert intersect(Ideal(Rxy, [x]), Ideal(Rxy, [y])) == Ideal(Rxy, [x * y])
    I = Ideal(Rxy, [x**2 - y, x * y])
    assert intersect(I, I) == I
    P3 = ideal_power(Ideal(Rxy, [x, y]), 3)
    got = intersect(Ideal(Rxy, [x]), P3)
    assert got == Ideal(Rxy, [x**3, x**2 * y, x * y**2])
    # brute force up to degree 6: m in (x) and deg m >= 3
    want = {m for m in monomials_upto(2, 6) if m[0] >= 1 and sum(m) >= 3}
    have = {m for m in monomials_upto(2, 6) if got.contains(Polynomial.monomial(Rxy, m))}
    assert have == want


def test_colon_examples(Rxy):
    x, y = Rxy.gens()
    assert colon(Ideal(Rxy, [x**2]), x) == Ideal(Rxy, [x])
    got = colon(Ideal(Rxy, [x**2, x * y]), x)
    assert got == Ideal(Rxy, [x, y])
    want = {g for g in monomials_upto(2, 3) if member((g[0] + 1, g[1]), [(2, 0), (1, 1)])}
    have = {g for g in monomials_upto(2, 3) if got.contains(Polynomial.monomial(Rxy, g))}
    assert have == want
    assert colon(Ideal(Rxy, [x**3, y**2]), y**2).is_unit()
    with pytest.raises(ValueError):
        colon(Ideal(Rxy, [x]), Rxy.zero())


def test_colon_ideal(Rxy):
    x, y = Rxy.gens()
    I = Ideal(Rxy, [x**2, x * y, y**2])
    assert colon_ideal(I, Ideal(Rxy, [x, y])) == Ideal(Rxy, [x, y])
    assert colon_ideal(I, Ideal(Rxy, [])).is_unit()


def test_elimination_examples(Rxy):
    x, y = Rxy.gens()
    assert elimination_ideal(Ideal(Rxy, [x - y**2]), ["y"]).is_zero()
    got = elimination_ideal(Ideal(Rxy, [x - y**2, x]), ["y"])
    assert got == Ideal(Rxy, [y**2])
    R = RingDescriptor(("x", "y", "w"))
    x, y, w = R.gens()
    got = elimination_ideal(Ideal(R, [x * w, (1 - w) * y]), ["x", "y"])
    assert got == Ideal(R, [x * y])


def test_ideal_power_examples(Rxyz):
    x, y, z = Rxyz.gens()
    I = Ideal(Rxyz, [x, y])
    assert ideal_power(I, 2) == Ideal(Rxyz, [x**2, x * y, y**2])
    assert ideal_power(I, 1) == I
    assert ideal_power(I, 0).is_unit()
    J = Ideal(Rxyz, [x * y, y * z, z * x])
    sq = ideal_power(J, 2)
    assert len(sq.generators) == 6
    want = {m for m in monomials_upto(3, 4)
            if member(m, [(2, 2, 0), (0, 2, 2), (2, 0, 2), (1, 2, 1), (2, 1, 1), (1, 1, 2)])}
    have = {m for m in monomials_upto(3, 4) if sq.contains(Polynomial.monomial(Rxyz, m))}
    assert have == want


R3 = RingDescriptor(("x", "y", "z"))


@settings(max_examples=25, deadline=None)
@given(st.lists(polynomials(R3, max_terms=3, max_deg=2), min_size=1, max_size=3), st.randoms())
def test_reduced_basis_unique_under_permutation(gens, rnd):
    shuffled = gens[:] + gens[:1]
    rnd.shuffle(shuffled)
    a = reduced_groebner_basis(Ideal(R3, gens), GREVLEX_ORDER)
    b = reduced_groebner_basis(Ideal(R3, shuffled), GREVLEX_ORDER)
    assert a == b
    # reduced: monic and no term divisible by another leading monomial
    for g in a:
        assert g.leading_coefficient() == 1
        for h in a:
            if h is g:
                continue
            lm = h.leading_monomial()
            assert not any(all(i <= j for i, j in zip(lm, e)) for _, e in g.terms)


@settings(max_examples=25, deadline=None)
@given(st.lists(polynomials(R3, max_terms=3, max_deg=2), min_size=1, max_size=3),
       st.lists(polynomials(R3, max_terms=2, max_deg=2), min_size=3, max_size=3),
       polynomials(R3, max_terms=3, max_deg=3))
def test_membership_soundness(gens, cofactors, f):
    I = Ideal(R3, gens)
    combo = R3.zero()
    for g, c in zip(gens, cofactors):
        combo = combo + g * c
    assert normal_form(combo, I) == R3.zero()
    r = normal_form(f, I)
    assert normal_form(f - r, I) == R3.zero()


@settings(max_examples=15, deadline=None)
@given(st.lists(polynomials(R3, max_terms=2, max_deg=2), min_size=1, max_size=2),
       polynomials(R3, max_terms=2, max_deg=2))
def test_colon_membership_spot_check(gens, f):
    if not f:
        return
    I = Ideal(R3, gens)
    Q = colon(I, f)
    x, y, z = R3.gens()
    for g in [R3.one(), x, y, z, x * y, y * z + x, x**2 - z]:
        assert Q.contains(g) == I.contains(g * f)


@pytest.mark.parametrize("seed", range(10))
def test_power_monotone(seed):
    rng = random.Random(seed)
    nvars, gens = random_monomial_ideal_gens(rng, max_vars=3, max_gens=3, max_deg=3)
    ring = ring_for(nvars)
    f = Polynomial(ring, [(1, gens[0]), (rng.randint(1, 4), gens[-1])])
    I = Ideal(ring, [f] + [Polynomial.monomial(ring, g) for g in gens[1:]])
    for n in range(1, 3):
        big, small = ideal_power(I, n + 1), ideal_power(I, n)
        assert all(normal_form(g, small) == ring.zero() for g in big.generators)
