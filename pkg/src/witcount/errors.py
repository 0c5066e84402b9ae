"""Exception hierarchy shared by every module of the package."""


class WitcountError(Exception):
    """Base class for all package errors."""


class ParseError(WitcountError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateVectorError(ParseError):
    pass


class CapacityError(WitcountError, ValueError):
    """Dimension exceeds the configured cap."""


class SizeGuardError(WitcountError, RuntimeError):
    """An oracle refused an input that is too large to enumerate."""


class ExactnessError(WitcountError, ArithmeticError):
    """An exact integer identity failed; always indicates a bug or corrupted input."""
