"""Exact coefficients, exponent vectors, monomial orders and sparse polynomials.

A polynomial is an immutable tuple of ``(coefficient, exponent)`` pairs sorted
in descending order under a monomial order.  Exponents are plain tuples of
nonnegative ints, one entry per ring variable.  Coefficients are
:class:`fractions.Fraction` over the rationals and canonical residues in
``[0, p)`` over a prime field.

    >>> R = RingDescriptor(("x", "y"))
    >>> x, y = R.gens()
    >>> print((x + y) * (x - y))
    x^2 - y^2
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence, Tuple

from .errors import RingMismatchError

Exponent = Tuple[int, ...]

DEFAULT_PRIME = 32003

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3 * 10^24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# coefficient fields
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientField:
    """The rationals (``characteristic == 0``) or the prime field F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not is_prime(p):
            raise ValueError(f"{p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def convert(self, value):
        """Map an int, Fraction or numeric string into the field."""
        if isinstance(value, str):
            value = Fraction(value)
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} vanishes mod {p}")
            return value.numerator * pow(den, -1, p) % p
        if isinstance(value, int):
            return value % p
        raise TypeError(f"cannot convert {type(value).__name__} to a coefficient")

    def add(self, a, b):
        return a + b if self.characteristic == 0 else (a + b) % self.characteristic

    def sub(self, a, b):
        return a - b if self.characteristic == 0 else (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b if self.characteristic == 0 else a * b % self.characteristic

    def neg(self, a):
        return -a if self.characteristic == 0 else -a % self.characteristic

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / a
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"


RATIONALS = CoefficientField(0)


def prime_field(p: int = DEFAULT_PRIME) -> CoefficientField:
    return CoefficientField(p)


# ---------------------------------------------------------------------------
# exponent vectors
# ---------------------------------------------------------------------------

def _check_lengths(a: Exponent, b: Exponent):
    if len(a) != len(b):
        raise RingMismatchError(f"exponent vectors of lengths {len(a)} and {len(b)}")


def monomial_lcm(a: Exponent, b: Exponent) -> Exponent:
    _check_lengths(a, b)
    return tuple(max(i, j) for i, j in zip(a, b))


def monomial_gcd(a: Exponent, b: Exponent) -> Exponent:
    _check_lengths(a, b)
    return tuple(min(i, j) for i, j in zip(a, b))


def monomial_divides(a: Exponent, b: Exponent) -> bool:
    """True iff the monomial ``a`` divides ``b``."""
    _check_lengths(a, b)
    return all(i <= j for i, j in zip(a, b))


def monomial_quotient(a: Exponent, b: Exponent) -> Exponent:
    """Return ``a / b``; ``b`` must divide ``a``."""
    _check_lengths(a, b)
    q = tuple(i - j for i, j in zip(a, b))
    if any(e < 0 for e in q):
        raise ValueError(f"{b} does not divide {a}")
    return q


def monomial_mul(a: Exponent, b: Exponent) -> Exponent:
    _check_lengths(a, b)
    return tuple(i + j for i, j in zip(a, b))


def monomial_degree(a: Exponent) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

LEX = "lex"
GREVLEX = "grevlex"
BLOCK = "block"


@dataclass(frozen=True)
class MonomialOrder:
    """A multiplicative well-order on exponent vectors.

    ``permutation`` lists variable indices from most to least significant;
    ``None`` means the ring's declared variable order.  The ``block`` kind
    is an elimination order: the first ``block_size`` variables of the
    permutation are compared by grevlex first, ties broken by grevlex on the
    remaining variables.
    """

    kind: str = GREVLEX
    permutation: Optional[Tuple[int, ...]] = None
    block_size: int = 0

    def __post_init__(self):
        if self.kind not in (LEX, GREVLEX, BLOCK):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.permutation is not None:
            perm = tuple(self.permutation)
            if sorted(perm) != list(range(len(perm))):
                raise ValueError(f"{perm} is not a permutation")
            object.__setattr__(self, "permutation", perm)
        if self.kind == BLOCK and (self.permutation is None or self.block_size < 1):
            raise ValueError("block orders need a permutation and a block size")

    @classmethod
    def elimination(cls, nvars: int, eliminate: Iterable[int]) -> "MonomialOrder":
        """Block order in which the ``eliminate`` variables are largest."""
        elim = sorted(set(eliminate))
        rest = [i for i in range(nvars) if i not in elim]
        return cls(BLOCK, tuple(elim + rest), len(elim))

    def key(self, e: Exponent):
        """Sort key: ``a > b`` in this order iff ``key(a) > key(b)``."""
        return _key_function(self)(e)

    def compare(self, a: Exponent, b: Exponent) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self):
        return self.kind


def _grevlex_key(idx):
    rev = tuple(reversed(idx))
    return lambda e: (sum([e[i] for i in idx]), tuple([-e[i] for i in rev]))


@lru_cache(maxsize=None)
def _key_function(order: MonomialOrder) -> Callable[[Exponent], tuple]:
    perm = order.permutation
    if order.kind == LEX:
        if perm is None:
            return lambda e: e
        return lambda e: tuple([e[i] for i in perm])
    if order.kind == GREVLEX:
        if perm is None:
            return lambda e: (sum(e), tuple([-v for v in reversed(e)]))
        return _grevlex_key(perm)
    first = _grevlex_key(perm[: order.block_size])
    second = _grevlex_key(perm[order.block_size:])
    return lambda e: (first(e), second(e))


LEX_ORDER = MonomialOrder(LEX)
GREVLEX_ORDER = MonomialOrder(GREVLEX)


# ---------------------------------------------------------------------------
# rings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RingDescriptor:
    """A polynomial ring ``field[variable_names]``."""

    variable_names: Tuple[str, ...]
    field: CoefficientField = RATIONALS

    def __post_init__(self):
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        for name in names:
            if not _IDENTIFIER.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @property
    def nvars(self) -> int:
        return len(self.variable_names)

    def index(self, name: str) -> int:
        try:
            return self.variable_names.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a variable of {self}") from None

    def unit_vector(self, i: int, power: int = 1) -> Exponent:
        e = [0] * self.nvars
        e[i] = power
        return tuple(e)

    def zero_exponent(self) -> Exponent:
        return (0,) * self.nvars

    def gen(self, i: int) -> "Polynomial":
        return Polynomial.monomial(self, self.unit_vector(i))

    def gens(self):
        return tuple(self.gen(i) for i in range(self.nvars))

    def var(self, name: str) -> "Polynomial":
        return self.gen(self.index(name))

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, [(c, self.zero_exponent())])

    def format_monomial(self, e: Exponent) -> str:
        parts = []
        for name, k in zip(self.variable_names, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return f"{self.field}[{','.join(self.variable_names)}]"


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial in canonical sorted form.

    Parameters
    ----------
    ring : RingDescriptor
        Ambient ring.
    terms : iterable of (coefficient, exponent)
        Terms in any order; duplicates are combined and zeros dropped.
    order : MonomialOrder, optional
        Order the terms are stored under. Defaults to grevlex.
    """

    __slots__ = ("ring", "terms", "order", "_hash")

    def __init__(self, ring: RingDescriptor, terms: Iterable = (), order: MonomialOrder = GREVLEX_ORDER):
        field = ring.field
        n = ring.nvars
        acc = {}
        for c, e in terms:
            e = tuple(e)
            if len(e) != n or any(k < 0 for k in e):
                raise ValueError(f"bad exponent vector {e} for {ring}")
            c = field.convert(c)
            acc[e] = field.add(acc[e], c) if e in acc else c
        self._init(ring, acc, order)

    def _init(self, ring, acc, order):
        key = _key_function(order)
        self.ring = ring
        self.order = order
        self.terms = tuple((acc[e], e) for e in sorted((e for e in acc if acc[e]), key=key, reverse=True))
        self._hash = None

    @classmethod
    def from_dict(cls, ring: RingDescriptor, coeffs: dict, order: MonomialOrder = GREVLEX_ORDER) -> "Polynomial":
        """Build from ``{exponent: coefficient}`` whose values are already field elements."""
        p = cls.__new__(cls)
        p._init(ring, coeffs, order)
        return p

    @classmethod
    def monomial(cls, ring: RingDescriptor, e: Exponent, coeff=1, order: MonomialOrder = GREVLEX_ORDER):
        return cls(ring, [(coeff, e)], order)

    # -- inspection ---------------------------------------------------------

    def as_dict(self) -> dict:
        return {e: c for c, e in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][1]))

    def is_monomial(self) -> bool:
        """True for a single nonzero term (any coefficient)."""
        return len(self.terms) == 1

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for _, e in self.terms)

    def leading_term(self, order: Optional[MonomialOrder] = None):
        """Return ``(coefficient, exponent)`` of the largest term."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        if order is None or order == self.order:
            return self.terms[0]
        key = _key_function(order)
        return max(self.terms, key=lambda t: key(t[1]))

    def leading_monomial(self, order: Optional[MonomialOrder] = None) -> Exponent:
        return self.leading_term(order)[1]

    def leading_coefficient(self, order: Optional[MonomialOrder] = None):
        return self.leading_term(order)[0]

    def reorder(self, order: MonomialOrder) -> "Polynomial":
        if order == self.order:
            return self
        return Polynomial.from_dict(self.ring, self.as_dict(), order)

    def monic(self, order: Optional[MonomialOrder] = None) -> "Polynomial":
        lc = self.leading_coefficient(order)
        return self.scale(self.ring.field.inv(lc))

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        c = field.convert(c)
        if not c:
            return self.ring.zero().reorder(self.order)
        p = Polynomial.__new__(Polynomial)
        p.ring, p.order, p._hash = self.ring, self.order, None
        p.terms = tuple((field.mul(a, c), e) for a, e in self.terms)
        return p

    def shift(self, e: Exponent, c=1) -> "Polynomial":
        """Multiply by the monomial ``c * x^e``; term order is preserved."""
        field = self.ring.field
        c = field.convert(c)
        if not c:
            return self.ring.zero().reorder(self.order)
        p = Polynomial.__new__(Polynomial)
        p.ring, p.order, p._hash = self.ring, self.order, None
        p.terms = tuple((field.mul(a, c), monomial_mul(m, e)) for a, m in self.terms)
        return p

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other).reorder(self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _merge(self, other, negate=False)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _merge(self, other, negate=True)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _merge(other, self, negate=True)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.ring.field
        acc = {}
        for a, e in self.terms:
            for b, f in other.terms:
                m = tuple([i + j for i, j in zip(e, f)])
                c = field.mul(a, b)
                acc[m] = field.add(acc[m], c) if m in acc else c
        return Polynomial.from_dict(self.ring, acc, self.order)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one().reorder(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.ring != other.ring:
            return False
        if self.order == other.order:
            return self.terms == other.terms
        return self.as_dict() == other.as_dict()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms)))
        return self._hash

    def __getstate__(self):
        return (self.ring, self.terms, self.order)

    def __setstate__(self, state):
        self.ring, self.terms, self.order = state
        self._hash = None

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        out = []
        for idx, (c, e) in enumerate(self.terms):
            negative = ring.field.is_rational and c < 0
            mag = -c if negative else c
            mono = ring.format_monomial(e)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if idx == 0:
                out.append("-" + body if negative else body)
            else:
                out.append((" - " if negative else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self}, ring={self.ring})"


def _merge(f: Polynomial, g: Polynomial, negate: bool) -> Polynomial:
    """Merge two sorted term lists into the sorted sum ``f + g`` (or ``f - g``)."""
    field = f.ring.field
    if g.order != f.order:
        g = g.reorder(f.order)
    key = _key_function(f.order)
    a, b = f.terms, g.terms
    if negate:
        b = tuple((field.neg(c), e) for c, e in b)
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        ka, kb = key(a[i][1]), key(b[j][1])
        if ka > kb:
            out.append(a[i])
            i += 1
        elif ka < kb:
            out.append(b[j])
            j += 1
        else:
            c = field.add(a[i][0], b[j][0])
            if c:
                out.append((c, a[i][1]))
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    p = Polynomial.__new__(Polynomial)
    p.ring, p.order, p._hash = f.ring, f.order, None
    p.terms = tuple(out)
    return p


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.ring != g.ring:
        raise RingMismatchError(f"{f.ring} vs {g.ring}")
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.ring != g.ring:
        raise RingMismatchError(f"{f.ring} vs {g.ring}")
    return f * g


def leading_term(f: Polynomial, order: MonomialOrder):
    return f.leading_term(order)


def exact_divide(f: Polynomial, g: Polynomial) -> Optional[Polynomial]:
    """Return ``f / g`` when ``g`` divides ``f`` exactly, else ``None``."""
    if f.ring != g.ring:
        raise RingMismatchError(f"{f.ring} vs {g.ring}")
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    field = f.ring.field
    order = f.order
    g = g.reorder(order)
    lc, lm = g.terms[0]
    lc_inv = field.inv(lc)
    key = _key_function(order)
    rem = f.as_dict()
    quot = {}
    while rem:
        m = max(rem, key=key)
        if not all(i >= j for i, j in zip(m, lm)):
            return None
        q = tuple(i - j for i, j in zip(m, lm))
        c = field.mul(rem[m], lc_inv)
        quot[q] = c
        for b, e in g.terms:
            t = tuple(i + j for i, j in zip(e, q))
            v = field.sub(rem.get(t, field.zero), field.mul(c, b))
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return Polynomial.from_dict(f.ring, quot, order)


def polynomial_from_monomial(ring: RingDescriptor, e: Exponent) -> Polynomial:
    return Polynomial.monomial(ring, e)


def as_exponents(polys: Sequence[Polynomial]):
    """Exponent vectors of a list of monomials; raises if any has several terms."""
    out = []
    for p in polys:
        if not p.is_monomial():
            raise ValueError(f"{p} is not a monomial")
        out.append(p.terms[0][1])
    return out
