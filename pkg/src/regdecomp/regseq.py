"""Regular-sequence validation and the colon identity for powers of a sequence.

Indices facing the user (failing positions, permutations, the ``i`` of
:func:`colon_identity_check`) are 1-based, matching the usual notation
``x_1, ..., x_t``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .errors import RingMismatchError
from .ideals import Ideal, colon, ideal_equal
from .ring import Polynomial, RingDescriptor

DEFAULT_MAX_PERMUTATION_LENGTH = 6


@dataclass(frozen=True)
class PowerVector:
    """An exponent vector ``(n_1, ..., n_t)`` with positive entries."""

    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(n) for n in self.entries)
        if not entries:
            raise ValueError("a power vector needs at least one entry")
        if any(n < 1 for n in entries):
            raise ValueError(f"power vector entries must be positive: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def ones(cls, t: int) -> "PowerVector":
        return cls((1,) * t)

    @staticmethod
    def unit(i: int, t: int) -> Tuple[int, ...]:
        """The standard basis vector ``e_i`` (1-based), as a plain tuple since it has zeros."""
        if not 1 <= i <= t:
            raise IndexError(f"index {i} out of range 1..{t}")
        return tuple(1 if j == i - 1 else 0 for j in range(t))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    @property
    def total(self) -> int:
        """``|n| = n_1 + ... + n_t``."""
        return sum(self.entries)

    def dot(self, other) -> int:
        other = tuple(other)
        if len(other) != len(self.entries):
            raise ValueError("length mismatch in dot product")
        return sum(a * b for a, b in zip(self.entries, other))

    def plus_unit(self, i: int) -> "PowerVector":
        """``n + e_i``."""
        e = self.unit(i, len(self))
        return PowerVector(tuple(a + b for a, b in zip(self.entries, e)))

    def with_one_at(self, i: int) -> "PowerVector":
        """``n - (n . e_i - 1) e_i``: the i-th entry replaced by 1."""
        e = self.unit(i, len(self))
        c = self.dot(e) - 1
        return PowerVector(tuple(a - c * b for a, b in zip(self.entries, e)))

    def __str__(self):
        return "(" + ", ".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class RegularityVerdict:
    """Outcome of a regularity test.

    On failure ``index`` is the 1-based position that failed and ``witness``
    an element of ``((x_1..x_{i-1}) : x_i)`` outside ``(x_1..x_{i-1})``; when
    the whole ideal is the unit ideal the witness is ``None``.
    """

    is_regular: bool
    index: Optional[int] = None
    witness: Optional[Polynomial] = None
    reason: str = ""

    def __bool__(self):
        return self.is_regular


@dataclass(frozen=True)
class PermutabilityVerdict:
    is_permutable: bool
    permutation: Optional[Tuple[int, ...]] = None
    failure: Optional[RegularityVerdict] = None

    def __bool__(self):
        return self.is_permutable


def _check_sequence(xs):
    xs = list(xs)
    if not xs:
        raise ValueError("a sequence needs at least one element")
    ring = xs[0].ring
    for x in xs:
        if x.ring != ring:
            raise RingMismatchError(f"{x.ring} vs {ring}")
    return xs, ring


def is_regular_sequence(xs: Sequence[Polynomial]) -> RegularityVerdict:
    """Test ``((x_1..x_{i-1}) : x_i) = (x_1..x_{i-1})`` for every ``i`` and properness."""
    xs, ring = _check_sequence(xs)
    for i, x in enumerate(xs, start=1):
        base = Ideal(ring, xs[: i - 1])
        if not x:
            return RegularityVerdict(False, i, ring.one(), "zero element")
        quotient = colon(base, x)
        for g in quotient.groebner_basis():
            if base.normal_form(g):
                return RegularityVerdict(False, i, g, "zero divisor modulo predecessors")
    for i in range(1, len(xs) + 1):
        if Ideal(ring, xs[:i]).is_unit():
            return RegularityVerdict(False, i, None, "generates the unit ideal")
    return RegularityVerdict(True)


def is_permutable_regular_sequence(xs: Sequence[Polynomial],
                                   max_length: int = DEFAULT_MAX_PERMUTATION_LENGTH) -> PermutabilityVerdict:
    """Run :func:`is_regular_sequence` on every permutation, in lexicographic order.

    The first failing permutation (1-based) is returned with its verdict.
    """
    xs, _ = _check_sequence(xs)
    if len(xs) > max_length:
        raise ValueError(f"{len(xs)} elements exceed the permutation bound {max_length}")
    for perm in itertools.permutations(range(len(xs))):
        verdict = is_regular_sequence([xs[k] for k in perm])
        if not verdict:
            return PermutabilityVerdict(False, tuple(k + 1 for k in perm), verdict)
    return PermutabilityVerdict(True)


class NotRegularSequenceError(ValueError):
    def __init__(self, verdict):
        super().__init__(f"not a regular sequence: fails at index {verdict.index} ({verdict.reason})")
        self.verdict = verdict


@dataclass(frozen=True)
class RegularSequence:
    """A validated regular sequence; ``permutable`` records the permutation test."""

    ring: RingDescriptor
    elements: Tuple[Polynomial, ...]
    permutable: bool
    permutation_verdict: Optional[PermutabilityVerdict] = None

    @classmethod
    def validate(cls, xs: Sequence[Polynomial],
                 max_length: int = DEFAULT_MAX_PERMUTATION_LENGTH) -> "RegularSequence":
        """Check regularity (raising if it fails) and record permutability."""
        xs, ring = _check_sequence(xs)
        verdict = is_regular_sequence(xs)
        if not verdict:
            raise NotRegularSequenceError(verdict)
        perm = is_permutable_regular_sequence(xs, max_length)
        return cls(ring, tuple(xs), perm.is_permutable, perm)

    @property
    def t(self) -> int:
        return len(self.elements)

    def is_monomial(self) -> bool:
        return all(x.is_monomial() for x in self.elements)

    def power_ideal(self, n: PowerVector) -> Ideal:
        if len(n) != self.t:
            raise ValueError(f"power vector of length {len(n)} for a sequence of length {self.t}")
        return Ideal(self.ring, [x ** k for x, k in zip(self.elements, n)])

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.elements) + ")"


def colon_identity_check(xs: RegularSequence, n: PowerVector, i: int) -> bool:
    """Whether ``(x^(n + e_i)) : x_i`` equals ``(x^n)``, via Groebner bases."""
    if not xs.permutable:
        raise ValueError("colon identity is only asserted for permutable sequences")
    if not 1 <= i <= xs.t:
        raise IndexError(f"index {i} out of range 1..{xs.t}")
    bigger = xs.power_ideal(n.plus_unit(i))
    return ideal_equal(colon(bigger, xs.elements[i - 1]), xs.power_ideal(n))
