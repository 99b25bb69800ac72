from typing import Tuple


class LatticeAlgebraException(Exception):
    """Base exception for all library errors."""


class ParsingException(LatticeAlgebraException):
    """Base exception for parsing-related errors."""


class ParseError(ParsingException):
    """Exception raised when a text form cannot be parsed."""


class ScalarTooLarge(LatticeAlgebraException):
    """Exception raised when a rational has too many digits to be written as text."""


# Operator algebra exceptions
class OperatorException(LatticeAlgebraException):
    """Base exception for operator algebra errors."""


class NotInvertible(OperatorException):
    """Exception raised when an operator has no inverse in the unital hull."""


class ScalarPartNonzero(OperatorException):
    """Exception raised when an operation needs an operator with zero scalar part."""


# Automorphism factorization exceptions
class FactorizationException(LatticeAlgebraException):
    """Base exception for automorphism factorization errors.

    The offending atom labels are kept in ``labels`` for diagnostics.
    """

    def __init__(self, *labels: str, message: str = ""):
        self.labels: Tuple[str, ...] = tuple(labels)
        super().__init__(message or f"{type(self).__name__}{self.labels}")


class NotRankOne(FactorizationException):
    """Exception raised when an image F_ab is not a rank-one operator."""


class NotPositive(FactorizationException):
    """Exception raised when an image has a negative entry."""


class NotAtomColumn(FactorizationException):
    """Exception raised when a factor of F_aa is supported on two or more atoms."""

    def __init__(self, *labels: str, factor: str = "column", message: str = ""):
        self.factor = factor
        super().__init__(*labels, message=message)


class NotInjective(FactorizationException):
    """Exception raised when two support labels are sent to the same atom."""


class InconsistentScaling(FactorizationException):
    """Exception raised when the delta ratios fail the cocycle condition."""


class NotMultiplicative(FactorizationException):
    """Exception raised when F_ab F_bc differs from F_ac."""


class IncompleteImages(FactorizationException):
    """Exception raised when an image is missing for a pair of support labels."""


# Delta basis exceptions
class BasisException(LatticeAlgebraException):
    """Base exception for delta basis construction errors."""


class LinearlyDependent(BasisException):
    """Exception raised when the input functions are linearly dependent."""


# Lexicographic order exceptions
class LexException(LatticeAlgebraException):
    """Base exception for lexicographic order errors."""


class DimensionMismatch(LexException):
    """Exception raised when vectors of different lengths are compared."""


class IsBounded(LexException):
    """Exception raised when a witness is requested for an order bounded functional."""


class NotOrderBounded(LexException):
    """Exception raised when a functional cannot be order bounded."""


class NotALattice(LexException):
    """Exception raised when a lattice operation is requested on a product with a partially ordered head."""


# General application exceptions
class ConfigurationError(Exception):
    """Exception raised when configuration is invalid."""
