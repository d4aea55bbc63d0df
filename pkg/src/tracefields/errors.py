"""Exception hierarchy shared by all tracefields modules."""


class TraceFieldsError(Exception):
    """Base class for library errors."""


class FactorizationTimeout(TraceFieldsError):
    """Integer factorization exceeded the configured effort."""


class PrimalityRangeError(TraceFieldsError):
    """Primality certification requested outside the certified range."""


class NotSquarefreeError(TraceFieldsError, ValueError):
    pass


class ReducibleError(TraceFieldsError, ValueError):
    """The defining polynomial is reducible over Q."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class IrreducibilityUndetermined(TraceFieldsError):
    """Neither an irreducibility proof nor a reducibility certificate was found."""


class IndexObstruction(TraceFieldsError):
    """Dedekind's criterion does not apply because p divides the index."""


class WildRamificationError(TraceFieldsError, ValueError):
    pass


class NotPositiveDefinite(TraceFieldsError, ValueError):
    pass


class DegenerateFormError(TraceFieldsError, ValueError):
    pass


class SearchEffortExceeded(TraceFieldsError):
    """Backtracking search hit its node cap; the answer is undetermined."""


class PolynomialParseError(TraceFieldsError, ValueError):
    pass
