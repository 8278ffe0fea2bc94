"""Exception hierarchy.

Every error raised by the package derives from :class:`PolysphereError`;
input-shaped problems additionally derive from :class:`ValueError`.
"""


class PolysphereError(Exception):
    pass


# geometry kernel
class NoIntersection(PolysphereError, ValueError):
    pass


class DegenerateCenter(PolysphereError, ValueError):
    pass


class OutOfRange(PolysphereError, ValueError):
    pass


class NotOnCircle(PolysphereError, ValueError):
    pass


class OutsideArc(PolysphereError, ValueError):
    pass


class DegenerateArc(PolysphereError, ValueError):
    pass


# polygon space
class InvalidSpec(PolysphereError, ValueError):
    pass


class WrongArity(PolysphereError, ValueError):
    pass


class TailNotFound(PolysphereError):
    """No vertex attains the far triangle bound within tolerance."""

    def __init__(self, message, index=None, deviation=None):
        super().__init__(message)
        self.index = index
        self.deviation = deviation


# sphere model
class NotUnit(PolysphereError, ValueError):
    pass


class DimensionMismatch(PolysphereError, ValueError):
    pass


class InvalidCoords(PolysphereError, ValueError):
    pass


class AntipodalEndpoints(PolysphereError, ValueError):
    pass


# the map itself
class InvalidPolygon(PolysphereError, ValueError):
    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class InconsistentGeometry(PolysphereError):
    pass


class SpecMismatch(PolysphereError, ValueError):
    pass


# serialization
class ParseError(PolysphereError, ValueError):
    def __init__(self, message, field=None, line=None):
        super().__init__(message)
        self.field = field
        self.line = line


class ValidationError(PolysphereError, ValueError):
    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class IoError(PolysphereError, OSError):
    pass
