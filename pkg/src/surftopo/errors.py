"""Exception types shared across the package."""


class SurfaceError(Exception):
    """Base class for every domain error raised by this package."""


class DegenerateTriangle(SurfaceError):
    """A triangle was given with a repeated vertex."""


class DuplicateTriangle(SurfaceError):
    """The same canonical triangle was given twice."""


class EmptyInput(SurfaceError):
    """A complex needs at least one triangle."""


class UnknownVertex(SurfaceError):
    """The vertex id does not belong to the complex."""


class UnknownTriangle(SurfaceError):
    """The triangle does not belong to the complex."""


class NotASurface(SurfaceError):
    """The complex fails the surface validation conditions."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)


class NotConnected(NotASurface):
    """The triangle-adjacency graph has more than one component."""


class NotClosed(SurfaceError):
    """The operation requires a surface without boundary."""


class NotABoundaryComponent(SurfaceError):
    """The given cycle is not a boundary component of the complex."""


class TriangleTouchesBoundary(SurfaceError):
    """A puncture site must not share vertices with the existing boundary."""


class InvalidGenus(SurfaceError):
    """Nonorientable surfaces require genus at least 1."""


class InconsistentInvariants(SurfaceError):
    """The computed (orientability, chi, boundary) triple fits no surface class."""


class WordSyntaxError(SurfaceError):
    """An edge word could not be parsed; `position` is the 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class LabelCountError(SurfaceError):
    """Each label of a closed-surface edge word must occur exactly twice."""


class FormatError(SurfaceError):
    """A `surface v1` file is malformed; `line` is the 1-based line number."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line
