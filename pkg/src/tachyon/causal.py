"""Cause/effect identification from the messenger's momentum.

A messenger travelling from cause to effect carries a four-momentum that is
a positive multiple of the cause->effect displacement. Positive multiples
survive every boost, so the spatial direction of the measured momentum names
the cause in any frame, whereas the time order of a spacelike pair does not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np

from tachyon.errors import (
    DegeneratePairError,
    DomainError,
    InconsistentMessengerError,
    UndefinedDirectionError,
)
from tachyon.minkowski import Beta3, Event, FourVector, IntervalClass, classify, interval

DIRECTION_TOL = 1e-9  # radians
_ZERO_RTOL = 1e-15


class CausalVerdict(Enum):
    E1_IS_CAUSE = "e1_is_cause"
    E2_IS_CAUSE = "e2_is_cause"


class OrderLemma(Enum):
    EARLIER_IS_CAUSE_VALID = "earlier_is_cause_valid"
    NOT_APPLICABLE = "not_applicable"


class LemmaResult(NamedTuple):
    verdict: OrderLemma
    cause: Optional[CausalVerdict]


@dataclass(frozen=True)
class Messenger:
    delta_x: FourVector
    p: FourVector
    norm_sq: float

    @property
    def k(self) -> float:
        """Proportionality constant between momentum and displacement."""
        return math.sqrt(self.norm_sq / self.delta_x.norm_sq)

    @property
    def tachyonic(self) -> bool:
        return self.norm_sq < 0.0


@dataclass(frozen=True)
class RuleClockMeasure:
    """Mass (kg), rule length (m) and the proper-time readings (s) at its ends."""

    m: float
    L: float
    tau_in: float
    tau_fin: float

    def __post_init__(self) -> None:
        if not (self.m > 0.0 and self.L > 0.0):
            raise DomainError(f"mass and rule length must be positive (m={self.m!r}, L={self.L!r})")
        if not self.tau_fin > self.tau_in:
            raise DomainError(f"tau_fin ({self.tau_fin!r}) must exceed tau_in ({self.tau_in!r})")


def messenger_from_displacement(delta_x: FourVector, norm_sq: float) -> Messenger:
    """Messenger with invariant mass-square ``norm_sq`` along ``delta_x`` (cause -> effect)."""
    kind = classify(delta_x)
    if kind is IntervalClass.LIGHTLIKE:
        raise DegeneratePairError("lightlike displacement: momentum scale is 0/0")
    dd = delta_x.norm_sq
    if norm_sq == 0.0 or (norm_sq > 0.0) != (dd > 0.0):
        raise DomainError(
            f"sign of <p,p> ({norm_sq!r}) must match sign of <dx,dx> ({dd!r})"
        )
    k = math.sqrt(norm_sq / dd)
    return Messenger(delta_x, k * delta_x, float(norm_sq))


def direction_signs(dx: np.ndarray, p: np.ndarray, tol: float = DIRECTION_TOL) -> np.ndarray:
    """Sign of p.dx for spatial ``(..., 3)`` arrays; raises on undefined or skew input.

    +1 means the first event of the pair is the cause.
    """
    dx = np.asarray(dx, dtype=float)
    p = np.asarray(p, dtype=float)
    pn = np.linalg.norm(p, axis=-1)
    dn = np.linalg.norm(dx, axis=-1)
    if np.any(pn == 0.0):
        raise UndefinedDirectionError("messenger has zero spatial momentum in this frame")
    if np.any(dn == 0.0):
        raise InconsistentMessengerError("events share a position but the messenger moves")
    dot = np.sum(dx * p, axis=-1)
    cross = np.linalg.norm(np.cross(dx, p), axis=-1)
    angle = np.arctan2(cross, np.abs(dot))
    if np.any(angle > tol):
        raise InconsistentMessengerError(
            f"momentum not collinear with the displacement (angle {float(np.max(angle)):.3e} rad)"
        )
    return np.sign(dot).astype(int)


def causal_direction(e1: Event, e2: Event, p_measured: FourVector) -> CausalVerdict:
    d = e2 - e1
    if d.t == 0.0 and d.space == (0.0, 0.0, 0.0):
        raise DegeneratePairError("e1 and e2 coincide")
    p3 = p_measured.space_array
    if np.linalg.norm(p3) <= _ZERO_RTOL * abs(p_measured.t):
        raise UndefinedDirectionError("messenger has zero spatial momentum in this frame")
    sign = int(direction_signs(d.space_array, p3))
    return CausalVerdict.E1_IS_CAUSE if sign > 0 else CausalVerdict.E2_IS_CAUSE


def subluminal_order_lemma(e1: Event, e2: Event) -> LemmaResult:
    """For timelike pairs the earlier event (in any frame) is the cause."""
    iv = interval(e1, e2)
    if iv.kind is not IntervalClass.TIMELIKE:
        return LemmaResult(OrderLemma.NOT_APPLICABLE, None)
    cause = CausalVerdict.E1_IS_CAUSE if e2.ct > e1.ct else CausalVerdict.E2_IS_CAUSE
    return LemmaResult(OrderLemma.EARLIER_IS_CAUSE_VALID, cause)


def time_order_witness(e1: Event, e2: Event) -> Optional[Beta3]:
    """A boost that makes ``e2`` earlier than ``e1``, for spacelike pairs only.

    The pair must be oriented so that ``e2.ct >= e1.ct``. The boost points
    along the spatial separation with speed halfway between ``dct/|dx|``
    and 1.
    """
    d = e2 - e1
    if d.t < 0.0:
        raise DomainError("orient the pair first: e2 must not precede e1")
    if d.t == 0.0 and d.space == (0.0, 0.0, 0.0):
        raise DegeneratePairError("e1 and e2 coincide")
    if classify(d) is not IntervalClass.SPACELIKE:
        return None
    dx = d.space_array
    dist = float(np.linalg.norm(dx))
    lam = 0.5 * (d.t / dist + 1.0)
    return Beta3(lam * dx / dist)


def momentum_from_rule(r: RuleClockMeasure) -> float:
    """Momentum in kg m/s from a rule traversed between two proper-time readings."""
    if not r.tau_fin > r.tau_in:
        raise DomainError("tau_fin must exceed tau_in")
    return r.m * r.L / (r.tau_fin - r.tau_in)
