"""Exception hierarchy. Every error raised by the library derives from HKError."""


class HKError(Exception):
    pass


class NonSymmetric(HKError):
    pass


class Degenerate(HKError):
    pass


class DegenerateNS(Degenerate):
    pass


class NotIndependent(HKError):
    pass


class DimensionMismatch(HKError):
    pass


class NoIsotropicVector(HKError):
    pass


class SpaceMismatch(HKError):
    pass


class DegreeTooLow(HKError):
    pass


class NotIsotropic(HKError):
    pass


class ArityMismatch(HKError):
    pass


class WrongDegree(HKError):
    pass


class InconsistentConstant(HKError):
    """An identity that must hold for every argument failed: an implementation bug."""


class TrTooSmall(HKError):
    pass


class ViolatesTheorem(HKError):
    """Sentinel for a result that would contradict the structure theory."""


class NotInSpan(HKError):
    pass


class NotCoisotropic(HKError):
    pass


class NotDegreeZero(HKError):
    pass


class ConfigError(HKError):
    pass
