"""Exception types shared across the package."""


class PolemapError(Exception):
    """Base class for every package-specific error."""


class DimensionMismatch(PolemapError):
    """Operands live in ambient spaces of different dimension."""


class DegeneratePair(PolemapError):
    """Two directions are numerically parallel where an independent pair is required."""


class NoPreimage(PolemapError):
    """The requested target is outside the image of the map."""


class NotInterior(PolemapError):
    """A point required to lie strictly inside the unit disk does not."""


class MixedAngleForms(PolemapError):
    """Exact and floating angle representations cannot be combined."""


class BudgetExceeded(PolemapError):
    """An iteration budget ran out before the requested separation was reached."""


class DegenerateConfiguration(PolemapError):
    """Reference points fail the linear-independence requirement."""


class DerivativeSingular(PolemapError):
    """An orbit hit a critical point, so the log-derivative average is undefined."""


class PedalDegenerate(PolemapError):
    """A pedal sample is orthogonal to the pole; the orthotomic is undefined there."""

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index
