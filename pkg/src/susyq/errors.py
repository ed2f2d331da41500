"""Exception hierarchy shared by all susyq modules."""


class SusyqError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(SusyqError, ValueError):
    """Parameters outside the mathematical domain (e.g. 1F1 with b a non-positive integer)."""


class ConvergenceError(SusyqError, RuntimeError):
    """A series or iteration failed to reach tolerance within its cap."""


class DomainError(SusyqError, ValueError):
    """Evaluation requested outside the half-line domain (x <= 0 where x > 0 is required)."""


class SingularWronskianError(SusyqError, ArithmeticError):
    """The Wronskian vanishes at the requested point; the partner potential has a pole there."""


class DegenerateEnergyError(SusyqError, ValueError):
    """A transformed state was requested at an energy equal to a factorization energy."""


class NonNormalizableError(SusyqError, ValueError):
    """A candidate state does not decay fast enough to be normalized on the grid."""


class BoundaryEnergyError(SusyqError, ValueError):
    """A factorization energy sits exactly on a half-integer interval endpoint."""


class PotentialSingularityError(SusyqError, ValueError):
    """The potential is too large on a grid point to discretize meaningfully."""


class ConfigError(SusyqError, ValueError):
    """A plan configuration file failed to parse; carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
