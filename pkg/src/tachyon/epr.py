"""Timing layer of the preferred-frame collapse model for EPR pairs.

A measurement emits a collapse signal travelling at ``beta_t`` in S0; the
partner measurement shows quantum correlations only if that signal got
there first. The S0-earlier measurement is taken as the source. Observing
correlations therefore bounds ``beta_t`` from below.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional, TextIO, Union

import numpy as np

from tachyon.errors import DegeneratePairError, DomainError
from tachyon.ether import (
    UNREACHABLE,
    Connectability,
    EtherFrame,
    connectable,
    required_beta_t,
    to_ether,
)
from tachyon.minkowski import Beta3, Event, FourVector, boost
from tachyon.units import seconds_to_ct

FLAG_UNBOUNDED = "unbounded"
FLAG_S0_SIMULTANEITY = "s0_simultaneity_in_window"
FLAG_SUBLUMINAL = "subluminal"


class Correlation(Enum):
    CORRELATED = "correlated"
    CORRELATION_LOSS = "correlation_loss"


@dataclass(frozen=True)
class EprConfig:
    """Two lab-frame measurements plus what is assumed about the ether.

    ``timing_uncertainty`` is the half-width, in seconds, of the window in
    which the true relative timing of the measurements may lie.
    """

    event_a: Event
    event_b: Event
    timing_uncertainty: float = 0.0
    ether: EtherFrame = field(default_factory=EtherFrame.at_rest)
    beta_t: Optional[float] = None

    def __post_init__(self) -> None:
        if self.event_a == self.event_b:
            raise DegeneratePairError("the two measurements coincide")
        if not self.timing_uncertainty >= 0.0:
            raise DomainError(f"timing_uncertainty must be >= 0, got {self.timing_uncertainty!r}")
        if self.beta_t is not None and not self.beta_t > 1.0:
            raise DomainError(f"beta_t must exceed 1, got {self.beta_t!r}")


@dataclass(frozen=True)
class VtBound:
    """Lower bound on the S0 tachyon speed implied by observed correlations.

    ``offset`` is the shift (ct, meters) of measurement B's lab time, within
    the timing window, at which the bound is attained.
    """

    bound: float
    offset: float
    flags: frozenset[str] = frozenset()

    @property
    def unbounded(self) -> bool:
        return math.isinf(self.bound)


def _s0_earlier_first(a: Event, b: Event, ether: EtherFrame) -> tuple[Event, Event]:
    return (b, a) if to_ether(b, ether).ct < to_ether(a, ether).ct else (a, b)


def correlation_predicted(cfg: EprConfig) -> Correlation:
    if cfg.beta_t is None:
        raise DomainError("correlation prediction needs beta_t")
    first, second = _s0_earlier_first(cfg.event_a, cfg.event_b, cfg.ether)
    verdict = connectable(first, second, cfg.beta_t, cfg.ether)
    return Correlation.CORRELATED if verdict is Connectability.YES else Correlation.CORRELATION_LOSS


def _oriented_requirement(a: Event, b: Event, ether: EtherFrame) -> float:
    first, second = _s0_earlier_first(a, b, ether)
    return required_beta_t(first, second, ether)


def vt_lower_bound(cfg: EprConfig) -> VtBound:
    """Smallest tachyon speed consistent with correlations at some timing in the window.

    Shifting B's lab time by ``s`` moves the S0 separation along the lab's
    4-velocity, so the required speed is ``|X + s w| / |T + s g|``. That
    ratio is quasiconvex on each side of its pole, hence its minimum over
    the window sits at an end point or at the single stationary point.
    """
    a, b, ether = cfg.event_a, cfg.event_b, cfg.ether
    half = seconds_to_ct(cfg.timing_uncertainty)
    d0 = to_ether(b, ether) - to_ether(a, ether)
    u0 = boost(FourVector.of(1.0), -ether.beta_lab)  # lab 4-velocity in S0
    T, X = d0.t, d0.space_array
    g, w = u0.t, u0.space_array

    candidates = {-half, half}
    den = float(w @ w) * T - g * float(X @ w)
    if den != 0.0:
        s_star = (g * float(X @ X) - T * float(X @ w)) / den
        if -half < s_star < half:
            candidates.add(s_star)

    flags = set()
    lo_t, hi_t = T - g * half, T + g * half
    if lo_t <= 0.0 <= hi_t:
        flags.add(FLAG_S0_SIMULTANEITY)

    best, best_s = UNREACHABLE, 0.0
    for s in sorted(candidates):
        value = _oriented_requirement(a, b.delayed(s), ether)
        if value < best:
            best, best_s = value, s
    if math.isinf(best):
        flags.add(FLAG_UNBOUNDED)
    elif best <= 1.0:
        flags.add(FLAG_SUBLUMINAL)
    return VtBound(best, best_s, frozenset(flags))


def rotate_about(vec: np.ndarray, axis: np.ndarray, angle: float) -> np.ndarray:
    """Rodrigues rotation of ``vec`` about unit ``axis``."""
    c, s = math.cos(angle), math.sin(angle)
    return vec * c + np.cross(axis, vec) * s + axis * float(axis @ vec) * (1.0 - c)


def _unit(v, what: str) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    n = float(np.linalg.norm(arr))
    if arr.shape != (3,) or not math.isfinite(n) or n == 0.0:
        raise DomainError(f"{what} must be a non-zero 3-vector, got {v!r}")
    return arr / n


@dataclass(frozen=True)
class SweepConfig:
    """Baseline turning with the Earth on a cone about ``rotation_axis``.

    ``ether_velocity`` is the velocity of S0 relative to the lab (units of c).
    Phases are fractions of one sidereal day.
    """

    baseline_length: float
    rotation_axis: tuple[float, float, float]
    baseline_direction: tuple[float, float, float]
    ether_velocity: Beta3
    samples_per_day: int = 24
    timing_uncertainty: float = 0.0

    def __post_init__(self) -> None:
        if not self.baseline_length > 0.0:
            raise DomainError(f"baseline_length must be positive, got {self.baseline_length!r}")
        if int(self.samples_per_day) != self.samples_per_day or self.samples_per_day < 1:
            raise DomainError(f"samples_per_day must be a positive integer, got {self.samples_per_day!r}")
        if not self.timing_uncertainty >= 0.0:
            raise DomainError(f"timing_uncertainty must be >= 0, got {self.timing_uncertainty!r}")
        object.__setattr__(self, "rotation_axis", tuple(_unit(self.rotation_axis, "rotation_axis")))
        object.__setattr__(self, "baseline_direction",
                           tuple(_unit(self.baseline_direction, "baseline_direction")))
        if not isinstance(self.ether_velocity, Beta3):
            object.__setattr__(self, "ether_velocity", Beta3(self.ether_velocity))

    def baseline_at(self, phase: float) -> np.ndarray:
        return self.baseline_length * rotate_about(
            np.array(self.baseline_direction), np.array(self.rotation_axis), 2.0 * math.pi * phase
        )

    def config_at(self, phase: float) -> EprConfig:
        return EprConfig(
            Event.at(0.0),
            Event(0.0, self.baseline_at(phase)),
            self.timing_uncertainty,
            EtherFrame.from_ether_velocity(self.ether_velocity),
        )


@dataclass(frozen=True)
class SweepRow:
    phase: float
    result: VtBound


@dataclass(frozen=True)
class SweepTable:
    rows: tuple[SweepRow, ...]

    @property
    def minimum(self) -> SweepRow:
        """Row with the smallest bound (the quotable limit for the day); first on ties."""
        return min(self.rows, key=lambda r: r.result.bound)


def sidereal_sweep(cfg: SweepConfig) -> SweepTable:
    n = int(cfg.samples_per_day)
    rows = tuple(SweepRow(i / n, vt_lower_bound(cfg.config_at(i / n))) for i in range(n))
    return SweepTable(rows)


def format_number(x: float) -> str:
    return f"{x:.9g}"


def write_sweep_csv(table: SweepTable, out: Union[str, Path, TextIO]) -> None:
    """CSV with header ``phase,bound,flags``; flags are ``;``-separated."""
    if isinstance(out, (str, Path)):
        with open(out, "w", encoding="utf-8", newline="") as fh:
            write_sweep_csv(table, fh)
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["phase", "bound", "flags"])
    for row in table.rows:
        writer.writerow([format_number(row.phase), format_number(row.result.bound),
                         ";".join(sorted(row.result.flags))])


def sweep_csv_text(table: SweepTable) -> str:
    buf = io.StringIO()
    write_sweep_csv(table, buf)
    return buf.getvalue()
