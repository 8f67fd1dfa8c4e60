"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class PachnerError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(PachnerError, ValueError):
    pass


class DegenerateSimplex(PachnerError, ValueError):
    pass


class RankDeficient(PachnerError, ValueError):
    pass


class DegenerateLift(PachnerError):
    """A lower facet of a lifted point set has more than d+1 vertices."""

    def __init__(self, labels, message: str | None = None):
        self.labels = tuple(sorted(labels))
        super().__init__(message or f"non-simplicial lower facet on labels {list(self.labels)}")


class DegenerateConfiguration(DegenerateLift):
    """d+2 co-spherical points with empty ball: the Delaunay triangulation is not unique."""

    def __init__(self, labels, message: str | None = None):
        labels = tuple(sorted(labels))
        super().__init__(labels, message or f"co-spherical labels {list(labels)} with empty ball")


class ExcludedConfiguration(PachnerError):
    """d+1 points on a common (d-2)-sphere."""

    def __init__(self, labels, message: str | None = None):
        self.labels = tuple(sorted(labels))
        super().__init__(message or f"labels {list(self.labels)} lie on a common lower-dimensional sphere")


class NotSingleMove(PachnerError):
    pass


class UnresolvedEvent(PachnerError):
    def __init__(self, bracket, message: str | None = None):
        self.bracket = bracket
        lo, hi = bracket
        super().__init__(message or f"could not isolate a single Pachner move in ({lo}, {hi})")


class DegenerateEndpoint(PachnerError):
    pass


class BadArity(PachnerError, ValueError):
    pass


class BadParams(PachnerError, ValueError):
    pass


class NotConvexPosition(PachnerError, ValueError):
    pass


class NotPlanar(PachnerError, ValueError):
    pass


class UnknownVertex(PachnerError, KeyError):
    pass
