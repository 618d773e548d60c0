"""Exception hierarchy.

Validation errors are caused by bad input (CLI exit code 1); computation
errors indicate an internal inconsistency or a broken cross-check (exit
code 2).
"""


class SullivanError(Exception):
    pass


class ValidationError(SullivanError):
    pass


class ComputationError(SullivanError):
    pass


class DimensionMismatch(ValidationError):
    pass


class NotASubspace(ValidationError):
    pass


class CutoffExceeded(ValidationError):
    pass


class UnknownGenerator(ValidationError):
    pass


class InvalidDegrees(ValidationError):
    pass


class InvalidDifferential(ValidationError):
    pass


class NotPure(ValidationError):
    pass


class NotElliptic(ValidationError):
    pass


class NotAChainMap(ValidationError):
    pass


class DegreeMismatch(ValidationError):
    pass


class EvenSphere(ValidationError):
    pass


class DisconnectedGroup(ValidationError):
    pass


class InvalidDiagram(ValidationError):
    pass


class SchemaError(ValidationError):
    pass


class UnknownCatalogName(ValidationError):
    pass


class CriterionDisagreement(ComputationError):
    """A rank-formula verdict disagrees with the direct computation on an
    instance satisfying the governing hypotheses.  Never reconciled
    silently."""
