"""Ideals of a polynomial ring and the operations built on Groebner bases."""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .errors import InvariantViolation, RingMismatchError
from .groebner import groebner_basis, reduce_polynomial
from .ring import (
    GREVLEX_ORDER,
    MonomialOrder,
    Polynomial,
    RingDescriptor,
    exact_divide,
)

CANONICAL_ORDER = GREVLEX_ORDER


class Ideal:
    """An ideal given by generators, caching one reduced basis per order.

    Zero generators are dropped, so the zero ideal has no generators.
    Ideals compare by mathematical equality.
    """

    def __init__(self, ring: RingDescriptor, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.constant(g)
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} lives in {g.ring}, not {ring}")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self._gb: Dict[MonomialOrder, Tuple[Polynomial, ...]] = {}

    @classmethod
    def unit(cls, ring: RingDescriptor) -> "Ideal":
        return cls(ring, [ring.one()])

    def groebner_basis(self, order: MonomialOrder = CANONICAL_ORDER) -> Tuple[Polynomial, ...]:
        basis = self._gb.get(order)
        if basis is None:
            # concurrent fills compute the same value, so a lost race is harmless
            basis = tuple(groebner_basis(self.generators, order))
            self._gb[order] = basis
        return basis

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def normal_form(self, f: Polynomial, order: MonomialOrder = CANONICAL_ORDER) -> Polynomial:
        return normal_form(f, self, order)

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self)

    def __contains__(self, f):
        return self.contains(f)

    def issubset(self, other: "Ideal") -> bool:
        _check(self, other)
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def __add__(self, other: "Ideal") -> "Ideal":
        _check(self, other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        _check(self, other)
        return Ideal(self.ring, _dedupe(f * g for f in self.generators for g in other.generators))

    def __pow__(self, n: int) -> "Ideal":
        return ideal_power(self, n)

    def __getstate__(self):
        return {"ring": self.ring, "generators": self.generators, "_gb": dict(self._gb)}

    def __setstate__(self, state):
        self.__dict__.update(state)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"Ideal{self} in {self.ring}"


def _check(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")


def _dedupe(polys: Iterable[Polynomial]) -> List[Polynomial]:
    seen, out = set(), []
    for p in polys:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def reduced_groebner_basis(I: Ideal, order: MonomialOrder = CANONICAL_ORDER) -> List[Polynomial]:
    return list(I.groebner_basis(order))


def normal_form(f: Polynomial, I: Ideal, order: MonomialOrder = CANONICAL_ORDER) -> Polynomial:
    """Remainder of ``f`` on division by the reduced basis of ``I``.

    Zero exactly when ``f`` lies in ``I``.
    """
    if f.ring != I.ring:
        raise RingMismatchError(f"{f.ring} vs {I.ring}")
    return reduce_polynomial(f, I.groebner_basis(order), order)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _check(I, J)
    return I.groebner_basis(CANONICAL_ORDER) == J.groebner_basis(CANONICAL_ORDER)


def _embed(f: Polynomial, ring: RingDescriptor, lead: Tuple[int, ...]) -> Polynomial:
    """Copy ``f`` into an extended ring whose extra variables come first."""
    return Polynomial.from_dict(ring, {lead + e: c for c, e in f.terms})


def _restrict(f: Polynomial, ring: RingDescriptor, drop: int) -> Polynomial:
    return Polynomial.from_dict(ring, {e[drop:]: c for c, e in f.terms})


def _fresh_name(ring: RingDescriptor, stem: str = "w") -> str:
    name = stem
    while name in ring.variable_names:
        name = "_" + name
    return name


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """Generators of ``I ∩ J``.

    Computed as ``(w*I + (1-w)*J) ∩ R`` in a ring with one extra variable
    ``w``, eliminated with a block order.
    """
    _check(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    ext = RingDescriptor((_fresh_name(ring),) + ring.variable_names, ring.field)
    w = ext.gen(0)
    one = ext.one()
    gens = [w * _embed(f, ext, (0,)) for f in I.generators]
    gens += [(one - w) * _embed(g, ext, (0,)) for g in J.generators]
    order = MonomialOrder.elimination(ext.nvars, [0])
    gb = groebner_basis(gens, order)
    kept = [_restrict(g, ring, 1) for g in gb if all(e[0] == 0 for _, e in g.terms)]
    return Ideal(ring, [g.reorder(CANONICAL_ORDER) for g in kept])


def elimination_ideal(I: Ideal, keep: Sequence[Union[int, str]]) -> Ideal:
    """``I ∩ k[keep]``, returned as an ideal of the same ring.

    ``keep`` holds variable names or indices and must be nonempty.
    """
    ring = I.ring
    idx = sorted({ring.index(v) if isinstance(v, str) else int(v) for v in keep})
    if not idx:
        raise ValueError("keep must name at least one variable")
    drop = [i for i in range(ring.nvars) if i not in idx]
    if not drop:
        return Ideal(ring, I.generators)
    order = MonomialOrder.elimination(ring.nvars, drop)
    gb = I.groebner_basis(order)
    kept = [g for g in gb if all(e[i] == 0 for _, e in g.terms for i in drop)]
    return Ideal(ring, [g.reorder(CANONICAL_ORDER) for g in kept])


def colon(I: Ideal, f: Polynomial) -> Ideal:
    """``(I : f) = {g : g*f in I}`` via ``I ∩ (f)`` divided by ``f``."""
    if f.ring != I.ring:
        raise RingMismatchError(f"{f.ring} vs {I.ring}")
    if not f:
        raise ValueError("colon by the zero polynomial")
    inter = intersect(I, Ideal(I.ring, [f]))
    quotients = []
    for g in inter.generators:
        q = exact_divide(g, f)
        if q is None:
            raise InvariantViolation(f"intersection generator {g} is not divisible by {f}")
        quotients.append(q)
    return Ideal(I.ring, quotients)


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    """``(I : J)``, the intersection of ``(I : g)`` over generators ``g`` of ``J``."""
    _check(I, J)
    if J.is_zero():
        return Ideal.unit(I.ring)
    result = None
    for g in J.generators:
        q = colon(I, g)
        result = q if result is None else intersect(result, q)
    return result


def ideal_power(I: Ideal, n: int) -> Ideal:
    """``I^n`` generated by all n-fold products of generators; ``I^0 = (1)``."""
    if n < 0:
        raise ValueError("negative ideal power")
    if n == 0:
        return Ideal.unit(I.ring)
    prods = []
    for combo in itertools.combinations_with_replacement(I.generators, n):
        p = combo[0]
        for q in combo[1:]:
            p = p * q
        prods.append(p)
    return Ideal(I.ring, _dedupe(prods))
