"""Exception hierarchy shared across the package."""


class RenyivarError(Exception):
    """Base class for all package-specific errors."""


# -- matrix construction / spectral calculus ---------------------------------

class NonSquareError(RenyivarError):
    pass


class NonFiniteError(RenyivarError):
    pass


class AsymmetryError(RenyivarError):
    """Input exceeds the hermiticity tolerance and is rejected."""


class NotPositiveDefiniteError(RenyivarError):
    pass


class ConvergenceError(RenyivarError):
    """Eigensolver exhausted its sweep budget."""


class DimensionMismatchError(RenyivarError):
    pass


class InvalidSpectrumError(RenyivarError):
    pass


# -- gauge functions and norms ----------------------------------------------

class EmptyVectorError(RenyivarError):
    pass


class ZeroEntryError(RenyivarError):
    """Zero entry combined with a negative exponent."""


class SingularInputError(RenyivarError):
    """Singular matrix where a negative-power norm is requested."""


class TypeClassMismatchError(RenyivarError):
    """A quasi/anti-norm was supplied where a true norm is required."""


class UnsupportedAntiNormError(RenyivarError):
    pass


class SpecParseError(RenyivarError):
    """Malformed norm-spec string."""


# -- entropies ---------------------------------------------------------------

class AlphaIsOneError(RenyivarError):
    pass


class ZNotPositiveError(RenyivarError):
    pass


# -- variational machinery ---------------------------------------------------

class RegimeMismatchError(RenyivarError):
    """Parameters fall outside the hypotheses of the requested statement."""


class SingularCoreError(RenyivarError):
    """K*A^pK (or the sandwiched core) is numerically singular where a
    fractional or negative power is needed."""


class BadExponentsError(RenyivarError):
    pass


# -- majorization / verification --------------------------------------------

class LengthMismatchError(RenyivarError):
    pass


class NotSortedError(RenyivarError):
    pass


class NonPositiveEntryError(RenyivarError):
    pass


class LambdaOutOfRangeError(RenyivarError):
    pass


# -- CLI / IO ----------------------------------------------------------------

class MatrixParseError(RenyivarError):
    pass


class MatrixValidationError(RenyivarError):
    pass
