"""Combinatorics of monomial ideals.

Monomial ideals are stored by their minimal generators (exponent tuples).
Nothing here touches coefficients, so every result is the same over any
field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .errors import ContainmentBoundExceeded, DegenerateIdealError, RingMismatchError
from .ideals import Ideal
from .ring import Exponent, Polynomial, RingDescriptor, _key_function, GREVLEX_ORDER


def _grevlex_desc(gens):
    key = _key_function(GREVLEX_ORDER)
    return tuple(sorted(gens, key=key, reverse=True))


def _divides(a, b):
    for i, j in zip(a, b):
        if i > j:
            return False
    return True


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators, sorted descending in grevlex.

    Build instances with :func:`minimalize` (or :meth:`of`); the constructor
    trusts its input.  The zero ideal has no generators and the unit ideal
    is generated by the exponent vector of ``1``.
    """

    ring: RingDescriptor
    min_gens: Tuple[Exponent, ...]

    @classmethod
    def of(cls, ring: RingDescriptor, gens: Iterable) -> "MonomialIdeal":
        """Minimalize exponent vectors or monomial polynomials into an ideal."""
        exps = []
        for g in gens:
            if isinstance(g, Polynomial):
                if g.ring != ring:
                    raise RingMismatchError(f"{g.ring} vs {ring}")
                if not g:
                    continue
                if not g.is_monomial():
                    raise ValueError(f"{g} is not a monomial")
                g = g.terms[0][1]
            exps.append(tuple(g))
        return minimalize(exps, ring)

    @classmethod
    def unit(cls, ring):
        return cls(ring, (ring.zero_exponent(),))

    def is_zero(self) -> bool:
        return not self.min_gens

    def is_unit(self) -> bool:
        return len(self.min_gens) == 1 and not any(self.min_gens[0])

    def __contains__(self, m) -> bool:
        return mono_membership(m, self)

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(mono_membership(g, other) for g in self.min_gens)

    def support(self) -> Tuple[int, ...]:
        return tuple(sorted({i for g in self.min_gens for i, e in enumerate(g) if e}))

    def pure_powers(self) -> dict:
        """``{variable index: exponent}`` for generators that are pure powers."""
        out = {}
        for g in self.min_gens:
            nz = [i for i, e in enumerate(g) if e]
            if len(nz) == 1:
                out[nz[0]] = g[nz[0]]
        return out

    def to_ideal(self) -> Ideal:
        return Ideal(self.ring, [Polynomial.monomial(self.ring, g) for g in self.min_gens])

    def generator_strings(self) -> List[str]:
        return [self.ring.format_monomial(g) for g in self.min_gens]

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(self.generator_strings()) + ")"


@dataclass(frozen=True)
class MonomialPrime:
    """The prime ideal generated by the variables with indices in ``support``."""

    ring: RingDescriptor
    support: Tuple[int, ...]

    def __post_init__(self):
        supp = tuple(sorted(set(self.support)))
        if not supp:
            raise ValueError("a monomial prime needs at least one variable")
        if supp[0] < 0 or supp[-1] >= self.ring.nvars:
            raise ValueError(f"support {supp} out of range for {self.ring}")
        object.__setattr__(self, "support", supp)

    @classmethod
    def from_names(cls, ring, names):
        return cls(ring, tuple(ring.index(n) for n in names))

    def to_monomial_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.of(self.ring, [self.ring.unit_vector(i) for i in self.support])

    def sort_key(self):
        return (len(self.support), self.support)

    def __str__(self):
        return "(" + ", ".join(self.ring.variable_names[i] for i in self.support) + ")"


@dataclass(frozen=True)
class PrimaryComponent:
    """A primary monomial ideal, its radical, and the least ``k`` with ``radical^k ⊆ component``.

    ``witness`` is a monomial of degree ``k - 1`` in the radical's variables
    that is not in the component, proving ``k`` cannot be lowered.
    """

    component: MonomialIdeal
    radical: MonomialPrime
    containment_exponent: int
    witness: Optional[Exponent] = None


def _require_proper_nonzero(I: MonomialIdeal):
    if I.is_zero():
        raise DegenerateIdealError("the zero ideal is not allowed here")
    if I.is_unit():
        raise DegenerateIdealError("the unit ideal is not allowed here")


def minimalize(gens: Iterable[Exponent], ring: RingDescriptor) -> MonomialIdeal:
    """Drop every generator divisible by another one."""
    kept: List[Exponent] = []
    for g in sorted({tuple(g) for g in gens}, key=sum):
        if len(g) != ring.nvars:
            raise RingMismatchError(f"exponent {g} does not fit {ring}")
        if not any(_divides(k, g) for k in kept):
            kept.append(g)
    return MonomialIdeal(ring, _grevlex_desc(kept))


def mono_membership(m: Exponent, I: MonomialIdeal) -> bool:
    if len(m) != I.ring.nvars:
        raise RingMismatchError(f"exponent {m} does not fit {I.ring}")
    return any(_divides(g, m) for g in I.min_gens)


def _same_ring(I, J):
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")


def mono_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return minimalize((tuple(map(max, u, v)) for u in I.min_gens for v in J.min_gens), I.ring)


def mono_intersect_all(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    ideals = list(ideals)
    result = ideals[0]
    for J in ideals[1:]:
        result = mono_intersect(result, J)
    return result


def mono_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return minimalize(I.min_gens + J.min_gens, I.ring)


def mono_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return minimalize((tuple(map(int.__add__, u, v)) for u in I.min_gens for v in J.min_gens), I.ring)


def mono_quotient(I: MonomialIdeal, m: Exponent) -> MonomialIdeal:
    """``(I : x^m)``: each generator ``u`` becomes ``max(u - m, 0)``."""
    if len(m) != I.ring.nvars:
        raise RingMismatchError(f"exponent {m} does not fit {I.ring}")
    return minimalize((tuple(max(a - b, 0) for a, b in zip(u, m)) for u in I.min_gens), I.ring)


def mono_radical(I: MonomialIdeal) -> MonomialIdeal:
    _require_proper_nonzero(I)
    return minimalize((tuple(min(e, 1) for e in g) for g in I.min_gens), I.ring)


def mono_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("negative ideal power")
    result = MonomialIdeal.unit(I.ring)
    for _ in range(n):
        result = mono_product(result, I)
    return result


def is_primary(I: MonomialIdeal) -> Optional[MonomialPrime]:
    """Return the radical if ``I`` is primary, else ``None``.

    A monomial ideal is primary exactly when every variable that appears in
    some minimal generator also appears as a pure power generator.
    """
    _require_proper_nonzero(I)
    supp = I.support()
    if set(I.pure_powers()) == set(supp):
        return MonomialPrime(I.ring, supp)
    return None


def _split_target(gens):
    for g in sorted(gens, reverse=True):
        nz = [i for i, e in enumerate(g) if e]
        if len(nz) > 1:
            return g, nz[0]
    return None, None


def _irreducible_pieces(I: MonomialIdeal, memo: dict) -> List[MonomialIdeal]:
    hit = memo.get(I.min_gens)
    if hit is not None:
        return hit
    m, i = _split_target(I.min_gens)
    if m is None:
        pieces = [I]
    else:
        u = I.ring.unit_vector(i, m[i])
        v = tuple(0 if j == i else e for j, e in enumerate(m))
        pieces = (_irreducible_pieces(minimalize(I.min_gens + (u,), I.ring), memo)
                  + _irreducible_pieces(minimalize(I.min_gens + (v,), I.ring), memo))
    memo[I.min_gens] = pieces
    return pieces


def _irreducible_key(Q: MonomialIdeal):
    supp = Q.support()
    pp = Q.pure_powers()
    return (len(supp), supp, tuple(pp[i] for i in supp))


def irreducible_decomposition(I: MonomialIdeal) -> List[MonomialIdeal]:
    """Irredundant decomposition of ``I`` into ideals generated by pure powers.

    Splits a minimal generator ``m = u*v`` with ``u = x_i^{m_i}`` into the two
    ideals ``I + (u)`` and ``I + (v)`` until only pure powers remain, then
    drops redundant pieces.
    """
    _require_proper_nonzero(I)
    pieces = list(dict.fromkeys(_irreducible_pieces(I, {})))
    # An irreducible monomial ideal contains an intersection of monomial ideals
    # only if it contains one of them, so redundancy reduces to containment.
    kept = [Q for Q in pieces if not any(P is not Q and P.issubset(Q) for P in pieces)]
    return sorted(kept, key=_irreducible_key)


def containment_witness(P: MonomialPrime, Q: MonomialIdeal, k_max: int) -> Tuple[int, Exponent]:
    """Least ``k <= k_max`` with ``P^k ⊆ Q`` plus a monomial of ``P^(k-1)`` outside ``Q``.

    Raises
    ------
    ValueError
        If the radical of ``Q`` is not ``P``.
    ContainmentBoundExceeded
        If no such ``k`` exists up to ``k_max``.
    """
    if P.ring != Q.ring:
        raise RingMismatchError(f"{P.ring} vs {Q.ring}")
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    if mono_radical(Q) != P.to_monomial_ideal():
        raise ValueError(f"radical of {Q} is not {P}")
    ring = Q.ring
    witness = ring.zero_exponent()
    for k in range(1, k_max + 1):
        for combo in itertools.combinations_with_replacement(P.support, k):
            e = [0] * ring.nvars
            for i in combo:
                e[i] += 1
            e = tuple(e)
            if not mono_membership(e, Q):
                witness = e
                break
        else:
            return k, witness
    raise ContainmentBoundExceeded(k_max)


def containment_exponent(P: MonomialPrime, Q: MonomialIdeal, k_max: int) -> int:
    return containment_witness(P, Q, k_max)[0]


def exponent_bound(Q: MonomialIdeal) -> int:
    """An upper bound for the containment exponent of a primary ``Q``.

    Any monomial of degree ``sum(a_i - 1) + 1`` in the radical's variables has
    some ``x_i`` to a power at least ``a_i``.
    """
    return sum(a - 1 for a in Q.pure_powers().values()) + 1


def primary_decomposition(I: MonomialIdeal) -> List[PrimaryComponent]:
    """Minimal primary decomposition of a proper nonzero monomial ideal.

    Irreducible components sharing a radical are intersected into one
    primary component; components come out sorted by radical.
    """
    groups = {}
    for Q in irreducible_decomposition(I):
        groups.setdefault(Q.support(), []).append(Q)
    out = []
    for supp in sorted(groups, key=lambda s: (len(s), s)):
        Q = mono_intersect_all(groups[supp])
        P = MonomialPrime(I.ring, supp)
        k, witness = containment_witness(P, Q, exponent_bound(Q))
        out.append(PrimaryComponent(Q, P, k, witness))
    return out
