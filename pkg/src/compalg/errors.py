"""Exception hierarchy shared across the package."""


class CompalgError(Exception):
    """Base class for all errors raised by compalg."""


class AlgebraMismatch(CompalgError):
    """Binary operation on elements of two different algebras."""


class NotInvertible(CompalgError):
    """Inversion (or a sandwich product) of an element with zero norm."""


class ZeroElement(CompalgError):
    """An operation that requires a nonzero element received zero."""


class NotPure(CompalgError):
    """An operation that requires a pure imaginary element received one with
    a nonzero scalar part."""


class NormMismatch(CompalgError):
    """Conjugacy requested for two elements whose norms differ."""


class PreconditionViolation(CompalgError):
    """An exactly-checked hypothesis of a constructive operation fails."""


class ConsistencyError(CompalgError):
    """Internal self-check failure: a structure table, a candidate scan or a
    constructed witness did not satisfy its own guarantees."""
