"""Exception types shared across the package."""


class RevcodeError(Exception):
    """Base class for errors raised by this package."""


class ZeroInverse(RevcodeError):
    """Multiplicative inverse of zero requested."""


class LengthMismatch(RevcodeError):
    """Operands live in spaces of different lengths."""


class OutOfRange(RevcodeError):
    """A parameter falls outside its documented range."""


class NotInvariant(RevcodeError):
    """The subspace is not closed under coordinate reversal."""


class BadSocle(RevcodeError):
    """The requested socle is zero or not contained in the image space."""


class InexactDivision(RevcodeError):
    """A counting formula produced a non-integer ratio."""


class ZeroCode(RevcodeError):
    """The operation is undefined on the zero code."""


class TooLarge(RevcodeError):
    """The requested sweep exceeds the configured ceiling."""


class HatDegenerate(RevcodeError):
    """The hat image of the socle is zero, so the distance bound is undefined."""


class BadSymbol(RevcodeError):
    """A character is not a valid strand or matrix symbol."""


class ParseError(RevcodeError):
    """A code file does not follow the matrix text format."""
