"""Exception hierarchy shared by every module in the package."""


class SdGammaError(ValueError):
    """Base class for all input and hypothesis violations raised here."""


class DimensionMismatch(SdGammaError):
    pass


class SymmetryError(SdGammaError):
    """A polynomial or h-vector is not palindromic about the requested axis."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"coefficient symmetry fails at index {index}")


class MalformedFace(SdGammaError):
    pass


class DisjointnessError(SdGammaError):
    pass


class ColoringError(SdGammaError):
    pass


class IncompleteColoring(ColoringError):
    pass


class ValidationError(SdGammaError):
    pass


class CapacityError(SdGammaError):
    """An exhaustive enumeration was asked to run past its configured cap."""


class RangeError(SdGammaError):
    pass


class HypothesisError(SdGammaError):
    """Input does not satisfy the hypothesis of the construction being run."""


class TheoremRefuted(RuntimeError):
    """The closure test rejected a gamma(sd) vector, which should never happen.

    Never expected to be raised; kept separate from SdGammaError so callers
    cannot swallow it together with ordinary input errors.
    """
