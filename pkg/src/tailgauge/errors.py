"""Exception hierarchy shared by the library and the CLI."""


class TailgaugeError(Exception):
    """Base class for all library errors."""


class SpecError(TailgaugeError, ValueError):
    """Invalid distribution spec, parameter, or violated precondition."""


class UnsupportedSpecError(SpecError):
    """The requested quantity is not available for this distribution."""


class DegenerateSampleError(TailgaugeError, ValueError):
    """Sample too small or with zero empirical spread."""


class InapplicableBoundError(SpecError):
    """The bound is not defined at the requested level."""


class NumericalError(TailgaugeError, ArithmeticError):
    """A numerical routine failed to converge."""
