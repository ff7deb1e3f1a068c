"""Exception types shared across the package."""


class OutOfRangeError(ValueError):
    """A coordinate or index fell outside its grid axis."""


class NegativeEnergyError(ValueError):
    """Height above the zero-speed datum: the speed law has no real solution."""


class InfeasibleSegmentError(ValueError):
    """A segment a mass point cannot traverse (uphill past the datum, or
    resting at the datum with no drop).

    ``stage`` carries the 1-based stage index when the error arises while
    evaluating a control sequence, else None.
    """

    def __init__(self, message: str, stage: int | None = None):
        super().__init__(message)
        self.stage = stage


class NoFeasiblePathError(RuntimeError):
    """No admissible control sequence reaches the target height."""


class InfeasibleRolloutError(RuntimeError):
    """A policy roll-out visited a state with no finite policy entry."""


class NoBracketError(RuntimeError):
    """The root of the cycloid shape equation could not be bracketed."""
