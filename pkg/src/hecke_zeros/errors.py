"""Exception types raised across the package."""


class HeckeZerosError(ValueError):
    pass


class ZeroLeadingCoefficient(HeckeZerosError):
    pass


class OddIndex(HeckeZerosError):
    pass


class DivergentEvaluation(HeckeZerosError):
    pass


class InsufficientPrecision(HeckeZerosError):
    pass


class BadWeight(HeckeZerosError):
    pass


class UnsupportedWeight(HeckeZerosError):
    pass


class InexactDivision(HeckeZerosError):
    pass


class BadNormalization(HeckeZerosError):
    pass


class MissingEigenvalue(HeckeZerosError):
    pass


class SpecError(HeckeZerosError):
    """Malformed weak eigenform data."""


class DegreeMismatch(HeckeZerosError):
    """P_n came out non-monic or with the wrong degree; indicates a bug."""


class NegativeArgument(HeckeZerosError):
    pass


class NonpositiveArgument(HeckeZerosError):
    pass


class NotMonotone(HeckeZerosError):
    pass


class TargetOutOfRange(HeckeZerosError):
    pass


class DivisorNearZero(HeckeZerosError):
    pass


class OutOfRange(HeckeZerosError):
    pass


class EmptyInput(HeckeZerosError):
    pass
