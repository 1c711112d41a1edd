"""Exception types shared across the package."""


class LeonardError(Exception):
    """Base class for domain errors (CLI exit code 2)."""


class FieldError(LeonardError, ValueError):
    pass


class FieldMismatch(FieldError):
    pass


class MalformedScalar(FieldError):
    pass


class DimensionMismatch(LeonardError):
    pass


class DuplicateEigenvalue(LeonardError):
    pass


class EigenvalueNotInField(LeonardError):
    pass


class NotStandardOrdering(LeonardError):
    pass


class NotSplitOverField(LeonardError):
    """The relevant characteristic polynomial has no full set of roots in the field."""

    def __init__(self, message, matrix=None, repeated=False):
        super().__init__(message)
        self.matrix = matrix
        self.repeated = repeated


class NotLeonard(LeonardError):
    pass


class LengthMismatch(LeonardError):
    pass


class InconsistentArray(LeonardError):
    pass


class TypeMismatch(LeonardError):
    pass


class DualMismatch(LeonardError):
    pass


class PrimaryDataInvalid(LeonardError):
    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class MuPrimeNotInField(LeonardError):
    """A contraction exists over the closure but its eigenvalues need a square root
    that the field lacks. ``fallback`` holds the TD/D sequence of the contraction,
    which is always defined over the field."""

    def __init__(self, message, fallback=None):
        super().__init__(message)
        self.fallback = fallback


class NoQInField(LeonardError):
    pass


class MuForbidden(LeonardError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NoTauInField(LeonardError):
    pass


class ZeroScale(LeonardError):
    pass


class RatioNotConstant(LeonardError):
    pass


class ThetaStarMismatch(LeonardError):
    pass


class NotDualQKrawtchouk(LeonardError):
    pass


class NotKrawtchouk(LeonardError):
    pass


class MuZero(LeonardError):
    pass
