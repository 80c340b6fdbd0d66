"""Exception types. All derive from ValueError so callers can catch broadly."""


class GeometryError(ValueError):
    """Base class for every error raised by this package."""


class DomainError(GeometryError):
    """A parameter lies outside the range where a construction exists."""


class StructuralError(GeometryError):
    """A boundary chain is open, clockwise or not convex."""


class DegenerateError(GeometryError):
    """The requested body has empty interior."""


class CertificationError(GeometryError):
    """A generated witness failed its numerical certificate.

    ``witness`` carries whatever the caller wants dumped alongside the
    message (usually the offending body in text form).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ArcgonFormatError(GeometryError):
    """Malformed body text. ``line`` is the 1-based offending line."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
