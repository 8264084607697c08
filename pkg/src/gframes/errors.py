"""Exception types raised across the package."""


class GFrameError(ValueError):
    """Base class for every error raised by :mod:`gframes`."""


class NonSquare(GFrameError):
    pass


class NotHermitian(GFrameError):
    pass


class NegativeEigenvalue(GFrameError):
    pass


class DimensionMismatch(GFrameError):
    pass


class ShapeMismatch(GFrameError):
    pass


class ChainTooShort(GFrameError):
    pass


class NotInvertible(GFrameError):
    pass


class NotAFrame(GFrameError):
    pass


class NotDual(GFrameError):
    pass


class NotRepresentable(GFrameError):
    pass


class UnknownId(GFrameError):
    pass


class ParseError(GFrameError):
    pass


class ValidationError(GFrameError):
    pass
