"""Exception hierarchy.

Every error raised on purpose by the package derives from
:class:`SympShareError`.  Errors signalling that an enumeration or simulation
cap was hit derive from :class:`ResourceLimitError` so the CLI can map them to
their own exit code.
"""

from __future__ import annotations


class SympShareError(ValueError):
    """Base class for all package errors."""


class ResourceLimitError(SympShareError):
    """A configured enumeration or simulation cap would be exceeded."""


# field / linear algebra
class NonPrimeP(SympShareError):
    pass


class ReducibleModulus(SympShareError):
    pass


class FieldTooLarge(ResourceLimitError):
    pass


class FieldMismatch(SympShareError):
    pass


class DimensionMismatch(SympShareError):
    pass


class NotASubspacePair(SympShareError):
    pass


class IndexOutOfRange(SympShareError):
    pass


# symplectic
class EnumerationTooLarge(ResourceLimitError):
    pass


class NotSelfOrthogonal(SympShareError):
    pass


# scheme
class NestingViolated(SympShareError):
    pass


class BadDimensions(SympShareError):
    pass


class BadSecretReps(SympShareError):
    pass


class TooManySubsets(ResourceLimitError):
    pass


class OddK(SympShareError):
    pass


# gv
class InvalidParams(SympShareError):
    pass


class OutOfRange(SympShareError):
    pass


# rs
class DuplicateAlpha(SympShareError):
    pass


class DegreeTooLarge(SympShareError):
    pass


class BadParity(SympShareError):
    pass


class AlphaZeroInPrefix(SympShareError):
    pass


class BPrimeTooLarge(SympShareError):
    pass


class OddQ(SympShareError):
    pass


class DegeneratePuncture(SympShareError):
    pass


class TooManyParticipants(SympShareError):
    pass


# qsim
class NonPrimeField(SympShareError):
    pass


class ProjectionVanished(SympShareError):
    pass


class TooLarge(ResourceLimitError):
    pass


# io
class ParseError(SympShareError):
    pass
