"""Buchberger's algorithm with the Gebauer-Moeller pair criteria.

Works on plain ``{exponent: coefficient}`` dicts internally; the public
entry points take and return :class:`~regdecomp.ring.Polynomial` values.
"""

from __future__ import annotations

import contextlib
import logging
from typing import List, Sequence

from .errors import BudgetExceededError, RingMismatchError
from .ring import MonomialOrder, Polynomial, RingDescriptor, _key_function

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**6

_budget = DEFAULT_BUDGET


def get_budget() -> int:
    return _budget


def set_budget(n: int) -> None:
    """Set the maximum number of S-pairs a single basis computation may process."""
    global _budget
    if n < 1:
        raise ValueError("budget must be positive")
    _budget = int(n)


@contextlib.contextmanager
def budget(n: int):
    old = get_budget()
    set_budget(n)
    try:
        yield
    finally:
        set_budget(old)


def _divides(a, b):
    for i, j in zip(a, b):
        if i > j:
            return False
    return True


def _lcm(a, b):
    return tuple([i if i > j else j for i, j in zip(a, b)])


def _coprime(a, b):
    for i, j in zip(a, b):
        if i and j:
            return False
    return True


class _Engine:
    """Reduction machinery bound to one ring and one order."""

    def __init__(self, ring: RingDescriptor, order: MonomialOrder):
        self.field = ring.field
        self.key = _key_function(order)

    def lead(self, p):
        return max(p, key=self.key)

    def monic(self, p):
        lm = self.lead(p)
        inv = self.field.inv(p[lm])
        mul = self.field.mul
        return {e: mul(c, inv) for e, c in p.items()}

    def sub_shifted(self, p, c, q, g):
        """In place: ``p -= c * x^q * g``."""
        field = self.field
        for e, b in g.items():
            t = tuple([i + j for i, j in zip(e, q)])
            v = field.sub(p[t], field.mul(c, b)) if t in p else field.neg(field.mul(c, b))
            if v:
                p[t] = v
            else:
                del p[t]

    def reduce(self, p, basis, leads):
        """Fully reduce ``p`` modulo monic ``basis`` with leading monomials ``leads``."""
        p = dict(p)
        rem = {}
        key = self.key
        while p:
            m = max(p, key=key)
            c = p[m]
            for g, lm in zip(basis, leads):
                if _divides(lm, m):
                    q = tuple([i - j for i, j in zip(m, lm)])
                    self.sub_shifted(p, c, q, g)
                    break
            else:
                rem[m] = c
                del p[m]
        return rem

    def spoly(self, f, lf, g, lg):
        """S-polynomial of two monic polynomials."""
        lcm = _lcm(lf, lg)
        s = {}
        qf = tuple([i - j for i, j in zip(lcm, lf)])
        qg = tuple([i - j for i, j in zip(lcm, lg)])
        for e, c in f.items():
            s[tuple([i + j for i, j in zip(e, qf)])] = c
        self.sub_shifted(s, self.field.one, qg, g)
        return s


def _update(G, B, h, leads):
    """Gebauer-Moeller update: insert index ``h`` into basis ``G`` and pair set ``B``."""
    lh = leads[h]
    C = [g for g in G]
    D = []
    while C:
        g1 = C.pop(0)
        l1 = _lcm(lh, leads[g1])
        if _coprime(lh, leads[g1]):
            D.append(g1)
            continue
        if any(_divides(_lcm(lh, leads[g2]), l1) for g2 in C):
            continue
        if any(_divides(_lcm(lh, leads[g2]), l1) for g2 in D):
            continue
        D.append(g1)
    E = [(h, g) for g in D if not _coprime(lh, leads[g])]
    B_new = []
    for g1, g2 in B:
        l12 = _lcm(leads[g1], leads[g2])
        if (_divides(lh, l12)
                and _lcm(leads[g1], lh) != l12
                and _lcm(lh, leads[g2]) != l12):
            continue
        B_new.append((g1, g2))
    B_new.extend(E)
    G_new = [g for g in G if not _divides(lh, leads[g])]
    G_new.append(h)
    return G_new, B_new


def groebner_basis(polys: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Return the reduced Groebner basis of the ideal generated by ``polys``.

    The result is sorted by leading monomial, largest first, every element is
    monic, and the zero ideal gives ``[]``.

    Raises
    ------
    BudgetExceededError
        If more S-pairs than the current budget (see :func:`set_budget`) are
        processed.
    """
    polys = [p for p in polys if p]
    if not polys:
        return []
    ring = polys[0].ring
    for p in polys:
        if p.ring != ring:
            raise RingMismatchError(f"{p.ring} vs {ring}")
    eng = _Engine(ring, order)
    key = eng.key
    zero = ring.zero_exponent()

    if any(p.is_constant() for p in polys):
        return [ring.one().reorder(order)]

    store, leads = [], []
    G, B = [], []
    for p in polys:
        d = eng.monic(p.as_dict())
        store.append(d)
        leads.append(eng.lead(d))
        G, B = _update(G, B, len(store) - 1, leads)

    limit = get_budget()
    processed = 0
    while B:
        best = min(range(len(B)), key=lambda k: key(_lcm(leads[B[k][0]], leads[B[k][1]])))
        i, j = B.pop(best)
        processed += 1
        if processed > limit:
            raise BudgetExceededError(limit)
        s = eng.spoly(store[i], leads[i], store[j], leads[j])
        basis = [store[g] for g in G]
        h = eng.reduce(s, basis, [leads[g] for g in G])
        if not h:
            continue
        h = eng.monic(h)
        lh = eng.lead(h)
        if lh == zero:
            return [ring.one().reorder(order)]
        store.append(h)
        leads.append(lh)
        G, B = _update(G, B, len(store) - 1, leads)
    log.debug("buchberger: %d pairs processed, %d basis elements", processed, len(G))

    # interreduce the minimal basis
    G = [g for g in G if not any(h != g and _divides(leads[h], leads[g]) for h in G)]
    result = []
    for g in G:
        others = [store[h] for h in G if h != g]
        olead = [leads[h] for h in G if h != g]
        # the leading term cannot reduce, so only the tail changes
        r = eng.reduce(store[g], others, olead)
        result.append(eng.monic(r))
    out = [Polynomial.from_dict(ring, r, order) for r in result]
    out.sort(key=lambda f: key(f.terms[0][1]), reverse=True)
    return out


def reduce_polynomial(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Multivariate division remainder of ``f`` by a basis (monic or not)."""
    ring = f.ring
    eng = _Engine(ring, order)
    dicts = [eng.monic(g.as_dict()) for g in basis if g]
    leads = [eng.lead(d) for d in dicts]
    return Polynomial.from_dict(ring, eng.reduce(f.as_dict(), dicts, leads), order)
