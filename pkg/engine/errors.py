"""Exception hierarchy for enclosure computations and file handling"""


class EnclosureError(ArithmeticError):
    """Root for numerical failures raised by interval kernels and methods"""


class DivisionByZeroInterval(EnclosureError):
    """Denominator interval contains zero"""


class NegativeSqrt(EnclosureError):
    """Square root of an interval lying entirely below zero"""


class EmptyIntersection(EnclosureError):
    """Two intervals have no common point"""


class DomainError(EnclosureError):
    """Evaluation point outside the domain a method is defined on"""


class EigDegenerate(EnclosureError):
    """Eigenvector transform is singular: the enclosure of sqrt(1 - x^2) contains 0"""


class ResourceLimit(EnclosureError):
    """Exact evaluation exceeded its degree or integer-size budget"""


class InvalidInterval(ValueError):
    """Endpoints violate inf <= sup or are NaN"""


class ConfigError(ValueError):
    """Invalid benchmark configuration"""


class CoefficientFileError(ValueError):
    """Malformed coefficient file"""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class ResultFileError(ValueError):
    """Malformed result CSV"""
