"""Tachyon kinematics with a preferred frame: paradox analysis, causal order, EPR speed bounds."""

from tachyon.errors import (
    DegeneratePairError,
    DomainError,
    FrameMismatchError,
    InconsistentMessengerError,
    SingularCompositionError,
    TachyonError,
    UndefinedDirectionError,
)
from tachyon.minkowski import (
    Beta3,
    Event,
    FourVector,
    IntervalClass,
    boost,
    compose_beta,
    gamma,
    interval,
)
from tachyon.units import C

__all__ = [
    "Beta3",
    "C",
    "DegeneratePairError",
    "DomainError",
    "Event",
    "FourVector",
    "FrameMismatchError",
    "InconsistentMessengerError",
    "IntervalClass",
    "SingularCompositionError",
    "TachyonError",
    "UndefinedDirectionError",
    "boost",
    "compose_beta",
    "gamma",
    "interval",
]
