"""Exception hierarchy shared by every module."""


class TachyonError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(TachyonError, ValueError):
    """An input lies outside the physical domain of an operation."""


class SingularCompositionError(DomainError):
    pass


class DegeneratePairError(DomainError):
    pass


class InconsistentMessengerError(DomainError):
    pass


class UndefinedDirectionError(DomainError):
    """The messenger has no spatial momentum in the frame at hand."""


class FrameMismatchError(TachyonError, ValueError):
    pass
