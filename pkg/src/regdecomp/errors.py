"""Exception hierarchy shared by every layer of the package."""


class RegdecompError(Exception):
    """Base class for all errors raised by regdecomp."""


class RingMismatchError(RegdecompError, ValueError):
    """Operands live in different rings (or have incompatible lengths)."""


class BudgetExceededError(RegdecompError):
    """A Groebner computation processed more S-pairs than the budget allows."""

    def __init__(self, budget):
        super().__init__(f"computation budget of {budget} S-pairs exceeded")
        self.budget = budget


class InvariantViolation(RegdecompError):
    """An internal invariant failed. Always a bug, never a user error."""


class UnsupportedInputError(RegdecompError, ValueError):
    """Input is well formed but outside what the exact algorithms handle."""


class DegenerateIdealError(RegdecompError, ValueError):
    """The unit ideal or the zero ideal was passed where a proper nonzero one is needed."""


class ContainmentBoundExceeded(RegdecompError):
    """No containment exponent was found up to the requested bound."""

    def __init__(self, k_max):
        super().__init__(f"no k <= {k_max} with P^k contained in Q")
        self.k_max = k_max


class ArtinReesCapExceeded(RegdecompError):
    """The Artin-Rees search exceeded its cap on C at some h."""

    def __init__(self, h, c_cap):
        super().__init__(f"Artin-Rees constant exceeds cap {c_cap} at h={h}")
        self.h = h
        self.c_cap = c_cap


class SessionError(RegdecompError, ValueError):
    """Lexical, syntactic or binding error in a session file."""

    def __init__(self, message, line=None, column=None):
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
        self.message = message
        self.line = line
        self.column = column
