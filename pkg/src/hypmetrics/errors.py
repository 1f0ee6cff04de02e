"""Exception hierarchy shared by all hypmetrics modules."""


class HypMetricsError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(HypMetricsError):
    pass


class PointOutsideDomain(HypMetricsError):
    pass


class EmptyInput(HypMetricsError):
    pass


class NonpositiveDiameter(HypMetricsError):
    pass


class OrderViolation(HypMetricsError):
    pass


class RangeViolation(HypMetricsError):
    pass


class DegenerateFoci(HypMetricsError):
    pass


class PoleInput(HypMetricsError):
    """A sphere inversion was applied at its center."""

    def __init__(self, message, atom_index=None):
        super().__init__(message)
        self.atom_index = atom_index


class PunctureOutsideBall(HypMetricsError):
    pass


class NoConvergence(HypMetricsError):
    pass


class ClearanceViolation(HypMetricsError):
    pass


class ImageEscape(HypMetricsError):
    pass


class BilipschitzCheckFailed(HypMetricsError):
    pass


class UnboundedDomain(HypMetricsError):
    pass
