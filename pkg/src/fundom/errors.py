"""Exception types shared across the package."""


class FundomError(Exception):
    """Base class for package-specific errors."""


class DimensionMismatch(FundomError, ValueError):
    """Operands act on different numbers of coordinates."""


class InputError(FundomError, ValueError):
    """Malformed group, vector, or inequality input."""


class CapExceeded(FundomError, RuntimeError):
    """An enumeration (group elements, vector orbit, binary cube) outgrew its cap."""


class StrategyExhausted(FundomError, RuntimeError):
    """A gamma strategy ran out of vectors while the stabilizer was still non-trivial."""


class NontrivialStabilizer(FundomError, ValueError):
    """The Dirichlet construction needs a base vector with trivial stabilizer."""
