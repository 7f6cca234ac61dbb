"""Exception types raised across the package."""


class LensKnotError(Exception):
    """Base class for every domain error raised by lensknots."""


class NonUnit(LensKnotError, ValueError):
    """A residue that must be invertible shares a factor with the modulus."""


class Overflow(LensKnotError, OverflowError):
    """An argument exceeds the supported magnitude bound (2**63 - 1)."""


class NotPrime(LensKnotError, ValueError):
    pass


class NotLensSurgery(LensKnotError, ValueError):
    """Homology coordinates with A*a + B*b = 0 (no lens space results)."""


class NonPrimitive(LensKnotError, ValueError):
    """Coordinates cannot come from a double-primitive curve."""


class InvalidDescriptor(LensKnotError, ValueError):
    pass


class NoWordForm(LensKnotError, ValueError):
    """Fiber-surface families are not described by a word in A, B."""


class NonCanonical(LensKnotError, ValueError):
    """A value was expected to be the minimum of its +-x^(+-1) orbit."""


class ParseError(LensKnotError, ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
