class TropicalError(ValueError):
    """Base class for every error raised by the extended tropical library."""


class ParseError(TropicalError):
    """A literal or a JSON document does not follow the expected grammar."""


class DivisionByNegInfError(TropicalError):
    """Division by the additive identity −∞."""


class InvalidMaxPlusElementError(TropicalError):
    """A ν-tagged element was given where an element of (R̄, max, +) is expected."""


class NegativePowerError(TropicalError):
    """A power with a negative exponent, or −∞ raised to the power 0."""


class ShapeMismatchError(TropicalError):
    """Operands of a matrix operation do not have compatible shapes."""


class NotSquareError(TropicalError):
    """A square matrix is required."""


class TooSmallError(TropicalError):
    """The operation needs a matrix of size at least 2."""


class IndexOutOfRangeError(TropicalError, IndexError):
    """Row or column index outside the matrix."""


class SizeLimitError(TropicalError):
    """The brute-force determinant was asked for a matrix above its size cap."""


class SingularNegInfError(TropicalError):
    """The determinant is −∞, so no pseudo inverse can be formed."""


class SingularMatrixError(TropicalError):
    """Strict mode refused a tropically singular matrix."""


class ArityMismatchError(TropicalError):
    """Number of variables or coordinates does not match."""


class UnsupportedArityError(TropicalError):
    """Grid sampling only supports polynomials in one or two variables."""


class EmptyBoxError(TropicalError):
    """The sampling box contains no point."""


class ZeroPolynomialError(TropicalError):
    """Every coefficient of the polynomial is −∞."""


class NuValuationError(TropicalError):
    """A valuation value must lie in R̄, never in ℝ^ν."""


class UnknownLawError(TropicalError, KeyError):
    """No law is registered under the requested identifier."""

    def __str__(self) -> str:
        """Avoid the quoted repr that `KeyError` would print."""
        return str(self.args[0]) if self.args else ""


class PreconditionFailedError(TropicalError):
    """The input does not meet the precondition of a check."""
