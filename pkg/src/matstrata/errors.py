"""Exception types shared across the package."""


class MatStrataError(Exception):
    """Base class for all domain errors raised by this package."""


class NotSquare(MatStrataError):
    pass


class DimensionMismatch(MatStrataError):
    pass


class ShapeMismatch(MatStrataError):
    pass


class WeightMismatch(MatStrataError):
    pass


class SizeMismatch(MatStrataError):
    pass


class SymbolicEigenvalue(MatStrataError):
    pass


class UnassignedParameter(MatStrataError):
    pass


class IrrationalSpectrum(MatStrataError):
    """The characteristic polynomial does not split over the rationals.

    Carries the non-split residual factor so callers can report it.
    """

    def __init__(self, factor):
        self.factor = factor
        super().__init__(
            "characteristic polynomial does not split over the rationals; "
            "remaining factor: %s" % (factor,)
        )


class PatternNotTransversal(MatStrataError):
    """The fixed star placement failed the transversality gate.

    Signals a defect in the placement rule itself, not in the caller's
    input: the family spans only ``achieved`` of the required ``needed``
    dimensions together with the orbit tangent space.
    """

    def __init__(self, achieved, needed):
        self.achieved = achieved
        self.needed = needed
        super().__init__(
            "star pattern is not transversal: achieved dimension %d of %d"
            % (achieved, needed)
        )


class DocumentError(MatStrataError):
    """Malformed input document (bad JSON shape, bad rational string, ...)."""
