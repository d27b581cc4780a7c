"""Preferred frame S0 and the propagation rule for tachyons it supports.

Tachyons move isotropically at ``beta_t > 1`` in S0 and only forward in S0
time. Every superluminal question is answered by carrying events into S0
and comparing distance with elapsed ct there; no superluminal velocity is
ever composed in the lab frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from tachyon.errors import DegeneratePairError, DomainError, FrameMismatchError
from tachyon.minkowski import Beta3, Event, FourVector, boost, boost_event, classify, IntervalClass

UNREACHABLE = math.inf


class Connectability(Enum):
    YES = "yes"
    NO = "no"
    ANTI_CHRONOUS = "anti-chronous"


@dataclass(frozen=True)
class EtherFrame:
    """Motion of the laboratory relative to S0.

    ``beta_lab`` is the velocity of the lab as seen from S0. The velocity of
    S0 as seen from the lab (the "ether wind") is its negation; build from
    that quantity with :meth:`from_ether_velocity`.
    """

    beta_lab: Beta3 = field(default_factory=lambda: Beta3.of(0.0))
    lab_label: str = "lab"
    ether_label: str = "S0"

    def __post_init__(self) -> None:
        if not isinstance(self.beta_lab, Beta3):
            object.__setattr__(self, "beta_lab", Beta3(self.beta_lab))
        if not self.beta_lab.boost_legal:
            raise DomainError(f"lab speed relative to S0 must be < 1, got {self.beta_lab.magnitude!r}")

    @classmethod
    def at_rest(cls) -> EtherFrame:
        return cls(Beta3.of(0.0))

    @classmethod
    def from_ether_velocity(cls, v, **labels) -> EtherFrame:
        """Build from the velocity of S0 relative to the lab (units of c)."""
        v = v if isinstance(v, Beta3) else Beta3(v)
        return cls(-v, **labels)

    @property
    def ether_velocity(self) -> Beta3:
        return -self.beta_lab

    def seen_from(self, beta_boost: Beta3, lab_label: str | None = None) -> EtherFrame:
        """The same physical ether, described from a lab frame boosted by ``beta_boost``.

        The ether velocity is read off S0's 4-velocity expressed in the new
        lab. S0 coordinates reached this way differ from the originals by a
        spatial rotation of S0 (Thomas-Wigner), which leaves every verdict
        unchanged.
        """
        u_old = boost(FourVector.of(1.0), self.beta_lab)  # S0's 4-velocity in the old lab
        u_new = boost(u_old, beta_boost)
        return EtherFrame.from_ether_velocity(
            Beta3(u_new.space_array / u_new.t), lab_label=lab_label or self.lab_label,
            ether_label=self.ether_label,
        )


def to_ether(e: Event, ether: EtherFrame) -> Event:
    if e.frame_label != ether.lab_label:
        raise FrameMismatchError(f"event is in frame {e.frame_label!r}, expected {ether.lab_label!r}")
    return boost_event(e, -ether.beta_lab, ether.ether_label)


def from_ether(e0: Event, ether: EtherFrame) -> Event:
    if e0.frame_label != ether.ether_label:
        raise FrameMismatchError(f"event is in frame {e0.frame_label!r}, expected {ether.ether_label!r}")
    return boost_event(e0, ether.beta_lab, ether.lab_label)


def _check_tachyonic(beta_t: float) -> float:
    beta_t = float(beta_t)
    if not beta_t > 1.0:
        raise DomainError(f"tachyon speed must exceed 1, got beta_t = {beta_t!r}")
    return beta_t


@dataclass(frozen=True)
class TachyonSignal:
    """A tachyon leaving ``emission`` (an S0 event) at ``beta_t`` along ``direction``."""

    emission: Event
    beta_t: float
    direction: tuple[float, float, float] = (1.0, 0.0, 0.0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta_t", _check_tachyonic(self.beta_t))
        d = np.asarray(self.direction, dtype=float)
        n = float(np.linalg.norm(d))
        if d.shape != (3,) or not math.isfinite(n) or n == 0.0:
            raise DomainError(f"direction must be a non-zero finite 3-vector, got {self.direction!r}")
        object.__setattr__(self, "direction", tuple(float(c) for c in d / n))

    def event_at(self, ct: float) -> Event:
        """Position of the signal at S0 time ``ct`` (no earlier than emission)."""
        dt = ct - self.emission.ct
        if dt < 0:
            raise DomainError("tachyons do not propagate backward in S0 time")
        pos = np.asarray(self.emission.pos) + self.beta_t * dt * np.asarray(self.direction)
        return Event(ct, pos, self.emission.frame_label)


def _s0_separation(a: Event, b: Event, ether: EtherFrame) -> tuple[float, float]:
    d = to_ether(b, ether) - to_ether(a, ether)
    return d.t, float(np.linalg.norm(d.space))


def required_beta_t(a: Event, b: Event, ether: EtherFrame) -> float:
    """Smallest S0 signal speed that carries a message from ``a`` to ``b``.

    Returns ``UNREACHABLE`` (inf) when ``b`` is not later than ``a`` in S0.
    Values below 1 mean a subluminal carrier already suffices.
    """
    if classify(b - a) is IntervalClass.LIGHTLIKE and to_ether(b, ether).ct > to_ether(a, ether).ct:
        return 1.0
    dct0, dx0 = _s0_separation(a, b, ether)
    if dct0 <= 0.0:
        if dx0 == 0.0 and dct0 == 0.0:
            raise DegeneratePairError("coincident events have no required speed")
        return UNREACHABLE
    return dx0 / dct0


def connectable(a: Event, b: Event, beta_t: float, ether: EtherFrame) -> Connectability:
    """Can a tachyon of speed ``beta_t`` (in S0) leave ``a`` and reach ``b``?

    The boundary (arrival exactly at ``b``) counts as reachable.
    """
    beta_t = _check_tachyonic(beta_t)
    dct0, dx0 = _s0_separation(a, b, ether)
    if dct0 <= 0.0:
        return Connectability.ANTI_CHRONOUS
    need = 1.0 if classify(b - a) is IntervalClass.LIGHTLIKE else dx0 / dct0
    return Connectability.YES if need <= beta_t else Connectability.NO
