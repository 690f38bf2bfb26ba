"""Experiments on uniform containment bounds for primary decompositions.

* :func:`decompose_power` decomposes ``(x_1^{n_1}, ..., x_t^{n_t})`` for a
  permutable monomial regular sequence and measures the containment
  exponent of each component.
* :func:`sweep` runs that over every exponent vector up to a total and
  collects the primes seen and the best linear constant.
* :func:`power_sweep` does the same for the ordinary powers ``I^n`` of a
  monomial ideal.
* :func:`artin_rees_constant` finds, for each ``h``, the least ``C`` with
  ``(x) ∩ P^(h+C) ⊆ x P^h``.

All results are empirical: they certify behaviour only inside the range
that was actually computed.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import ArtinReesCapExceeded, DegenerateIdealError, UnsupportedInputError
from .groebner import get_budget, set_budget
from .ideals import Ideal, ideal_power, intersect
from .monomial import (
    MonomialIdeal,
    MonomialPrime,
    PrimaryComponent,
    mono_intersect,
    mono_membership,
    mono_power,
    primary_decomposition,
)
from .regseq import PowerVector, RegularSequence
from .ring import Polynomial

DEFAULT_HMAX = 20
DEFAULT_CCAP = 20


@dataclass(frozen=True)
class ArtinReesReport:
    element: Polynomial
    prime: Union[MonomialPrime, Ideal]
    h_max: int
    c_per_h: Tuple[int, ...]
    stabilized_C: Optional[int]
    method: str


@dataclass(frozen=True)
class DecompositionRow:
    n: PowerVector
    total: int
    components: Tuple[PrimaryComponent, ...]
    k_max: int
    ratio: Fraction

    @property
    def length(self) -> int:
        return len(self.components)

    @property
    def radicals(self) -> Tuple[MonomialPrime, ...]:
        return tuple(c.radical for c in self.components)


@dataclass(frozen=True)
class SweepReport:
    """Rows of a sweep with the accumulated prime set and constant estimate.

    ``source`` is the regular sequence for :func:`sweep` and the monomial
    ideal for :func:`power_sweep`.
    """

    source: Union[RegularSequence, MonomialIdeal]
    rows: Tuple[DecompositionRow, ...]
    lambda_: Tuple[MonomialPrime, ...]
    lambda_stable_from: int
    C_estimate: int
    bound_holds: bool
    max_total: int = field(default=0)

    def restrict(self, max_total: int) -> "SweepReport":
        """The report the sweep would have given if stopped at ``max_total``."""
        return _summarize(self.source, [r for r in self.rows if r.total <= max_total], max_total)

    def bound_holds_for(self, C: int) -> bool:
        return all(r.k_max <= C * r.total for r in self.rows)


def _prime_order(primes):
    return tuple(sorted(primes, key=MonomialPrime.sort_key))


def _summarize(source, rows, max_total) -> SweepReport:
    rows = tuple(rows)
    seen = set()
    stable_from = 0
    for row in rows:
        new = set(row.radicals) - seen
        if new:
            seen |= new
            stable_from = row.total
    C = math.ceil(max(r.ratio for r in rows)) if rows else 0
    return SweepReport(
        source=source,
        rows=rows,
        lambda_=_prime_order(seen),
        lambda_stable_from=stable_from,
        C_estimate=C,
        bound_holds=all(r.k_max <= C * r.total for r in rows),
        max_total=max_total,
    )


def _row(n: PowerVector, total: int, I: MonomialIdeal) -> DecompositionRow:
    comps = tuple(primary_decomposition(I))
    k_max = max(c.containment_exponent for c in comps)
    return DecompositionRow(n, total, comps, k_max, Fraction(k_max, total))


def monomial_power_ideal(xs: RegularSequence, n: PowerVector) -> MonomialIdeal:
    """``(x_1^{n_1}, ..., x_t^{n_t})`` as a monomial ideal."""
    if len(n) != xs.t:
        raise ValueError(f"power vector of length {len(n)} for a sequence of length {xs.t}")
    if not xs.is_monomial():
        raise UnsupportedInputError(
            "exact decomposition needs a sequence of monomials; "
            "colon checks and Artin-Rees constants still run on general polynomials")
    gens = [tuple(k * e for e in x.terms[0][1]) for x, k in zip(xs.elements, n)]
    return MonomialIdeal.of(xs.ring, gens)


def decompose_power(xs: RegularSequence, n: PowerVector) -> DecompositionRow:
    """Primary decomposition of ``(x^n)`` with per-component containment exponents."""
    if not xs.permutable:
        raise UnsupportedInputError("the sequence is not a permutable regular sequence")
    I = monomial_power_ideal(xs, n)
    if I.is_unit():
        raise DegenerateIdealError("the power ideal is the unit ideal")
    return _row(n, n.total, I)


def power_vectors(t: int, max_total: int):
    """Vectors with positive entries by increasing total, lexicographic within a total."""
    for total in range(t, max_total + 1):
        for n in itertools.product(range(1, total - t + 2), repeat=t):
            if sum(n) == total:
                yield PowerVector(n)


def _decompose_job(args):
    xs, n, budget = args
    set_budget(budget)
    return decompose_power(xs, n)


def _power_job(args):
    I, n = args
    return _row(PowerVector((n,)), n, mono_power(I, n))


def _map(fn, jobs, workers):
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map yields in submission order, so rows stay in enumeration order
        return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def sweep(xs: RegularSequence, max_total: int, workers: int = 1) -> SweepReport:
    """Decompose ``(x^n)`` for every ``n`` with positive entries and ``|n| <= max_total``."""
    if max_total < xs.t:
        raise ValueError(f"max_total must be at least the sequence length {xs.t}")
    if not xs.permutable:
        raise UnsupportedInputError("the sequence is not a permutable regular sequence")
    monomial_power_ideal(xs, PowerVector.ones(xs.t))
    jobs = [(xs, n, get_budget()) for n in power_vectors(xs.t, max_total)]
    return _summarize(xs, _map(_decompose_job, jobs, workers), max_total)


def power_sweep(I: MonomialIdeal, n_max: int, workers: int = 1) -> SweepReport:
    """Decompose ``I^n`` for ``n = 1..n_max``; rows use ``n`` in place of ``|n|``."""
    if I.is_zero() or I.is_unit():
        raise DegenerateIdealError("power_sweep needs a proper nonzero ideal")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    jobs = [(I, n) for n in range(1, n_max + 1)]
    return _summarize(I, _map(_power_job, jobs, workers), n_max)


def _stabilized(c_per_h):
    tail = c_per_h[-math.ceil(len(c_per_h) / 2):]
    return tail[0] if len(set(tail)) == 1 else None


def _monomial_artin_rees(x, P: MonomialPrime, h_max, c_cap):
    ring = P.ring
    e = x.terms[0][1]
    principal = MonomialIdeal.of(ring, [e])
    prime = P.to_monomial_ideal()
    out = []
    for h in range(1, h_max + 1):
        target = MonomialIdeal.of(ring, [tuple(a + b for a, b in zip(g, e))
                                         for g in mono_power(prime, h).min_gens])
        for C in range(c_cap + 1):
            inter = mono_intersect(principal, mono_power(prime, h + C))
            if all(mono_membership(g, target) for g in inter.min_gens):
                out.append(C)
                break
        else:
            raise ArtinReesCapExceeded(h, c_cap)
    return out


def _groebner_artin_rees(x, P: Ideal, h_max, c_cap):
    ring = P.ring
    principal = Ideal(ring, [x])
    out = []
    for h in range(1, h_max + 1):
        target = Ideal(ring, [x * g for g in ideal_power(P, h).generators])
        for C in range(c_cap + 1):
            inter = intersect(principal, ideal_power(P, h + C))
            if all(target.contains(g) for g in inter.generators):
                out.append(C)
                break
        else:
            raise ArtinReesCapExceeded(h, c_cap)
    return out


def artin_rees_constant(x: Polynomial, P: Union[MonomialPrime, Ideal],
                        h_max: int = DEFAULT_HMAX, c_cap: int = DEFAULT_CCAP) -> ArtinReesReport:
    """Least ``C_h <= c_cap`` with ``(x) ∩ P^(h+C_h) ⊆ x P^h`` for ``h = 1..h_max``.

    A monomial ``x`` with a :class:`MonomialPrime` takes the combinatorial
    path; an :class:`Ideal` ``P`` takes the Groebner path (primality of ``P``
    is the caller's responsibility).  ``stabilized_C`` is set when the last
    ``ceil(h_max / 2)`` values agree.  The result is empirical up to ``h_max``.
    """
    if h_max < 1:
        raise ValueError("h_max must be at least 1")
    if not x or x.is_constant():
        raise ValueError("x must be a nonzero non-unit")
    if isinstance(P, MonomialPrime):
        if P.ring != x.ring:
            raise ValueError("x and P live in different rings")
        if x.is_monomial():
            c = _monomial_artin_rees(x, P, h_max, c_cap)
            method = "monomial"
        else:
            c = _groebner_artin_rees(x, P.to_monomial_ideal().to_ideal(), h_max, c_cap)
            method = "groebner"
    else:
        c = _groebner_artin_rees(x, P, h_max, c_cap)
        method = "groebner"
    return ArtinReesReport(x, P, h_max, tuple(c), _stabilized(c), method)
