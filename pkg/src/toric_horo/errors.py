"""Exception hierarchy shared by every module of the package."""


class ToricHoroError(Exception):
    """Base class for all errors raised by toric_horo."""


class DimensionError(ToricHoroError, ValueError):
    pass


class IntegralityError(ToricHoroError, ValueError):
    pass


class DegenerateError(ToricHoroError, ValueError):
    """Input points do not span a full-dimensional polytope."""

    def __init__(self, message, affine_dim=None):
        super().__init__(message)
        self.affine_dim = affine_dim


class OriginError(ToricHoroError, ValueError):
    """The origin is not an interior point of the polytope."""


class FaceRangeError(ToricHoroError, ValueError):
    """A face argument was empty or the whole polytope."""


class FanError(ToricHoroError, ValueError):
    pass


class NotInSupport(ToricHoroError, ValueError):
    pass


class ChartError(ToricHoroError, ValueError):
    pass


class NotDivergent(ToricHoroError, ValueError):
    """A path with zero direction stays bounded and has no boundary limit."""


class FanMismatch(ToricHoroError, ValueError):
    pass


class EmptyError(ToricHoroError, ValueError):
    pass
