"""Exception hierarchy.

``InputError`` subclasses signal malformed input (CLI exit code 2);
``DomainError`` subclasses signal a well-formed object that the theory
rejects (CLI exit code 1).
"""

from __future__ import annotations


class HomcodeError(Exception):
    """Base class for every error raised by this package."""


class InputError(HomcodeError, ValueError):
    pass


class ParseError(InputError):
    pass


class ValidationError(InputError):
    pass


class OddDartCount(ValidationError):
    pass


class NotInvolution(ValidationError):
    pass


class FixedPointEdge(ValidationError):
    pass


class Disconnected(ValidationError):
    pass


class LengthMismatch(InputError):
    pass


class DomainError(HomcodeError):
    """Base for rejections that carry a witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class WrongValence(DomainError):
    pass


class NotColorable(DomainError):
    pass


class NonAbelian(DomainError):
    pass


class MinusIdentityInGroup(DomainError):
    pass


class ZeroLogicalQubits(DomainError):
    pass


class MalformedLabelSet(DomainError):
    pass


class CountChangingTransform(DomainError):
    pass


class NoSuchGenerator(DomainError):
    pass


class InvalidBoundarySpec(DomainError):
    pass


class ConstraintViolation(DomainError):
    pass


class DegenerateParameters(DomainError):
    pass


class Inadmissible(DomainError):
    """A graph/labeling violates one of the HSC rules.

    ``rule`` is one of ``"I"``, ``"commutation"``, ``"IIA"``, ``"III"``,
    ``"II"``.
    """

    def __init__(self, rule: str, message: str, witness=None):
        super().__init__(message, witness)
        self.rule = rule
