import random
import sys

import pytest
from hypothesis import strategies as st

from regdecomp.ring import RATIONALS, Polynomial, RingDescriptor, prime_field


@pytest.fixture
def Rxy():
    return RingDescriptor(("x", "y"))


@pytest.fixture
def Rxyz():
    return RingDescriptor(("x", "y", "z"))


@pytest.fixture
def Rabcd():
    return RingDescriptor(("a", "b", "c", "d"))


def exponents(nvars, max_deg=4):
    return st.lists(st.integers(0, max_deg), min_size=nvars, max_size=nvars).map(tuple)


def polynomials(ring, max_terms=4, max_deg=3, coeff_range=5):
    coeff = st.fractions(min_value=-coeff_range, max_value=coeff_range, max_denominator=3)
    if not ring.field.is_rational:
        coeff = st.integers(0, ring.field.characteristic - 1)
    terms = st.lists(st.tuples(coeff, exponents(ring.nvars, max_deg)), max_size=max_terms)
    return terms.map(lambda ts: Polynomial(ring, ts))


def random_monomial_ideal_gens(rng: random.Random, max_vars=4, max_gens=6, max_deg=6):
    """Random generators of a proper nonzero monomial ideal."""
    nvars = rng.randint(1, max_vars)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        deg = rng.randint(1, max_deg)
        e = [0] * nvars
        for _ in range(deg):
            e[rng.randrange(nvars)] += 1
        gens.append(tuple(e))
    return nvars, gens


def ring_for(nvars, field=RATIONALS):
    return RingDescriptor(tuple(f"v{i}" for i in range(nvars)), field)


def to_dict(p):
    return p.as_dict()


F7 = prime_field(7)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip("]"))):
            terminalreporter.write_line(line)
