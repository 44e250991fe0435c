"""Exception types raised by the simulation layers."""


class RetsimError(Exception):
    """Base class for all package-specific errors."""


class DomainTooSmallError(RetsimError, ValueError):
    """Grid cannot resolve or contain the wave packet."""


class NormalizationError(RetsimError, ValueError):
    """Initial wave packet is clipped by the grid boundaries."""


class NoCrossingError(RetsimError, ValueError):
    """Diabatic surfaces do not intersect between the two minima."""


class CalibrationError(RetsimError, ValueError):
    """Offset calibration found no root in the search bracket."""


class StepInstabilityError(RetsimError, RuntimeError):
    """Propagation monitor tripped (trace growth or negativity)."""


class ScheduleRangeError(RetsimError, ValueError):
    """Measurement schedule extends past the propagation horizon."""


class StepTooLargeError(RetsimError, ValueError):
    """Per-step jump probability too large for the first-order unraveling."""
