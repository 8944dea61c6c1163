"""Exception hierarchy for quadcover."""


class QuadCoverError(Exception):
    """Base class for all library errors."""


class GeometryError(QuadCoverError, ValueError):
    pass


class DegenerateQuad(GeometryError):
    """Three of the four vertices are collinear."""


class NonConvex(GeometryError):
    pass


class SelfIntersecting(GeometryError):
    pass


class DegenerateConfiguration(QuadCoverError, ValueError):
    """The DLT system does not have a one-dimensional null space."""


class LineAtInfinity(QuadCoverError, ArithmeticError):
    """A point is mapped to (or from) the line at infinity."""


class NotBounded(QuadCoverError, ValueError):
    """A mapped circle is not a bounded curve (parabola/hyperbola)."""


class NotAnEllipse(QuadCoverError, ValueError):
    pass


class UnsupportedCount(QuadCoverError, ValueError):
    pass


class PackingParseError(QuadCoverError, ValueError):
    pass


class InvalidPacking(QuadCoverError, ValueError):
    pass


class NoInteriorMinimum(QuadCoverError, RuntimeError):
    """Altitude search converged onto an endpoint of the search interval."""


class PlanningError(QuadCoverError, RuntimeError):
    """A per-UAV step of the planner failed; ``uav`` is the 1-based index."""

    def __init__(self, message, uav=None, context=None):
        super().__init__(message if uav is None else f"UAV {uav}: {message}")
        self.uav = uav
        self.context = context or {}
