"""Exception types raised across the toolkit.

Every error carries enough context in its message to be reported verbatim
by the CLI; none of them are meant to be silently swallowed.
"""


class UnipolyError(Exception):
    """Base class for all toolkit errors."""


# -- finite fields ----------------------------------------------------------

class NotPrime(UnipolyError, ValueError):
    """Requested characteristic is not a prime number."""


class ReducibleModulus(UnipolyError, ValueError):
    """A supplied field modulus factors over the prime field."""


class DivisionByZero(UnipolyError, ZeroDivisionError):
    """Division or inversion of zero in a field or polynomial ring."""


class SpecMismatch(UnipolyError, TypeError):
    """Operands belong to different field specs; no implicit coercion."""


class IncompatibleFields(UnipolyError, ValueError):
    """No embedding exists (different characteristic or non-dividing degree)."""


class EmbeddingFailure(UnipolyError, RuntimeError):
    """Root extraction for an embedding did not succeed."""


# -- polynomial algebra -----------------------------------------------------

class NotSquarefree(UnipolyError, ValueError):
    """Operation requires a squarefree polynomial."""


class ZeroInput(UnipolyError, ValueError):
    """Zero polynomial where a nonzero one is required."""


class InseparableInput(UnipolyError, ValueError):
    """Polynomial lies in F_q[X^p]; its statistics are undefined here."""


# -- permutation combinatorics ----------------------------------------------

class BadPartition(UnipolyError, ValueError):
    """Multiset does not partition the stated n."""


class OutOfRange(UnipolyError, ValueError):
    """Argument outside the supported exact-arithmetic range."""


class DegreeTooLarge(UnipolyError, ValueError):
    """Permutation degree exceeds the brute-force closure limit."""


class NoPrimeInRange(UnipolyError, ValueError):
    """No prime exists in the requested Bertrand interval."""


# -- searches and statistics --------------------------------------------------

class BudgetExceeded(UnipolyError, ValueError):
    """Exhaustive sweep would exceed the configured budget."""


class EmptyPool(UnipolyError, ValueError):
    """Candidate pool is empty after filtering."""


class NonExhaustiveStats(UnipolyError, ValueError):
    """Deviation analysis requires stats from an exhaustive sweep."""


# -- constructions ------------------------------------------------------------

class DegreeTooSmall(UnipolyError, ValueError):
    """Polynomial degree below the minimum the check supports."""


class InvalidJ(UnipolyError, ValueError):
    """Family parameter j is in the excluded set {0, 1, multiples of p}."""


class EvenCharacteristic(UnipolyError, ValueError):
    """Construction is only defined for odd field order."""


# -- CLI / persistence ---------------------------------------------------------

class ConfigError(UnipolyError, ValueError):
    """Invalid experiment configuration."""


class ConfigHashMismatch(UnipolyError, ValueError):
    """Resume file does not match the current configuration."""
