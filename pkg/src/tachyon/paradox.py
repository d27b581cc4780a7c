"""Møller's two-tachyon round trip and its reanalysis under a preferred frame.

Frame S' moves at ``v`` along x relative to S; their origins coincide at
t = t' = 0. A first tachyon leaves the origin towards -x' at ``u_prime`` (in
S') and reaches P when the S' clock there reads ``t1_prime``; a second one
leaves P towards +x at ``w`` (in S) and reaches the origin O of S at S-time
``t2``. ``t2 < 0`` would be a causal loop.

In the ether model the two tachyons instead have fixed speeds ``beta_t`` and
``beta_t_bar`` in S0, and S, S' move at ``beta``, ``beta_prime`` relative
to S0; ``u_prime``, ``w`` and ``v`` then follow from velocity composition.
All quantities are in natural units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from tachyon.errors import DomainError
from tachyon.ether import TachyonSignal
from tachyon.minkowski import Beta3, Event, boost, compose_beta

BETA_CLIP = 1e-6
BETA_T_MAX = 1e3


def _gamma1(v):
    return 1.0 / np.sqrt((1.0 - v) * (1.0 + v))


@dataclass(frozen=True)
class MollerScenario:
    u_prime: float
    w: float
    v: float
    t1_prime: float = 1.0

    def __post_init__(self) -> None:
        if not (self.u_prime > 1.0 and self.w > 1.0):
            raise DomainError(f"tachyon speeds must exceed 1 (u_prime={self.u_prime!r}, w={self.w!r})")
        if not abs(self.v) < 1.0:
            raise DomainError(f"frame speed |v| must be < 1, got {self.v!r}")
        if not self.t1_prime > 0.0:
            raise DomainError(f"t1_prime must be positive, got {self.t1_prime!r}")


@dataclass(frozen=True)
class EtherMollerScenario:
    beta: float
    beta_prime: float
    beta_t: float
    beta_t_bar: float
    t1_prime: float = 1.0

    def __post_init__(self) -> None:
        if not (abs(self.beta) < 1.0 and abs(self.beta_prime) < 1.0):
            raise DomainError(f"frame speeds must be < 1 (beta={self.beta!r}, beta_prime={self.beta_prime!r})")
        if not (self.beta_t > 1.0 and self.beta_t_bar > 1.0):
            raise DomainError(
                f"tachyon speeds must exceed 1 (beta_t={self.beta_t!r}, beta_t_bar={self.beta_t_bar!r})"
            )
        if not self.t1_prime > 0.0:
            raise DomainError(f"t1_prime must be positive, got {self.t1_prime!r}")

    @property
    def admissible(self) -> bool:
        """True when the first tachyon reaches P after leaving O in S0 time.

        Otherwise the event that S' dates at ``t1_prime > 0`` lies in the S0
        past of the emission and no tachyon of the model can connect them.
        """
        return 1.0 + self.beta_prime * self.beta_t > 0.0


class Arrival(NamedTuple):
    x_p: float
    t1: float


class EtherSpeeds(NamedTuple):
    u_prime: float
    w: float
    v: float


class EtherVerdict(NamedTuple):
    lhs: float
    possible: bool
    numerator: float
    denominator: float


def moller_arrival(s: MollerScenario) -> Arrival:
    g = _gamma1(s.v)
    return Arrival(float(-g * s.t1_prime * (s.u_prime - s.v)), float(g * s.t1_prime * (1.0 - s.v * s.u_prime)))


def t2_values(u_prime, w, v, t1_prime=1.0):
    """Return time of the second tachyon at O, elementwise over arrays."""
    return _gamma1(v) * t1_prime * (1.0 - u_prime * v + (u_prime - v) / w)


def moller_t2(s: MollerScenario) -> float:
    return float(t2_values(s.u_prime, s.w, s.v, s.t1_prime))


def paradox_threshold(u_prime: float, w: float) -> float:
    """Frame speed above which t2 < 0; always below 1."""
    if not (u_prime > 1.0 and w > 1.0):
        raise DomainError(f"tachyon speeds must exceed 1 (u_prime={u_prime!r}, w={w!r})")
    return compose_beta(u_prime, w)


def moller_footnote_conditions(u_prime: float, w: float, v: float) -> bool:
    """Møller's original sufficient conditions: u' > 1/v and w > (u'-v)/(u'v-1)."""
    if v <= 0.0:
        return False
    return u_prime > 1.0 / v and w > (u_prime - v) / (u_prime * v - 1.0)


def find_paradox_witness(u_prime: float, w: float) -> float:
    """A frame speed that makes the unconstrained round trip paradoxical."""
    thr = paradox_threshold(u_prime, w)
    v = 0.5 * (thr + 1.0)
    if not t2_values(u_prime, w, v) < 0.0:
        raise ArithmeticError(f"no representable witness above threshold {thr!r}")
    return v


def ether_moller_speeds(s: EtherMollerScenario) -> EtherSpeeds:
    u = compose_beta(s.beta_t, s.beta_prime)
    w = compose_beta(s.beta_t_bar, -s.beta)
    v = compose_beta(s.beta_prime, -s.beta)
    return EtherSpeeds(u, w, v)


def ether_lhs(beta_t, beta_t_bar, v):
    """Numerator, denominator of the rewritten paradox condition (elementwise)."""
    total = beta_t + beta_t_bar
    num = total * (1.0 - v) * (1.0 + v)
    den = v * total + (1.0 + beta_t * beta_t_bar)
    return num, den


def ether_paradox_possible(s: EtherMollerScenario) -> EtherVerdict:
    v = ether_moller_speeds(s).v
    num, den = ether_lhs(s.beta_t, s.beta_t_bar, v)
    lhs = num / den
    return EtherVerdict(lhs, lhs < 0.0, num, den)


def ether_t2(s: EtherMollerScenario) -> float:
    """t2 of the round trip whose speeds the ether model dictates."""
    u, w, v = ether_moller_speeds(s)
    return float(t2_values(u, w, v, s.t1_prime))


def simulate_round_trip(s: EtherMollerScenario) -> float:
    """t2 obtained by tracing both tachyons through events in S0.

    Uses only boosts and straight-line propagation in S0, never the
    composed speeds, so it is an independent route to :func:`ether_t2`.
    """
    if not s.admissible:
        raise DomainError("first tachyon would arrive before it was emitted in S0")
    origin = Event.at(0.0, frame_label="S0")
    first = TachyonSignal(origin, s.beta_t, (-1.0, 0.0, 0.0))
    to_s_prime = Beta3.of(s.beta_prime)

    def s_prime_time(ct0: float) -> float:
        return boost(first.event_at(ct0).as_four_vector(), to_s_prime).t

    # S' time along the first ray is affine in S0 time
    f0, f1 = s_prime_time(0.0), s_prime_time(1.0)
    ct_p = (s.t1_prime - f0) / (f1 - f0)
    p = first.event_at(ct_p)
    # second tachyon: x = x_p + beta_t_bar (ct - ct_p); O: x = beta ct
    x_p = p.pos[0]
    ct_o = (s.beta_t_bar * ct_p - x_p) / (s.beta_t_bar - s.beta)
    arrival = TachyonSignal(p, s.beta_t_bar, (1.0, 0.0, 0.0)).event_at(ct_o)
    return boost(arrival.as_four_vector(), Beta3.of(s.beta)).t


def search_ether_witness(beta_t: float, beta_t_bar: float, beta: float = 0.0,
                         samples: int = 10_001) -> Optional[float]:
    """Scan admissible ``beta_prime`` for a paradoxical round trip; None if there is none."""
    lo = max(-1.0 + BETA_CLIP, -1.0 / beta_t + BETA_CLIP)
    bp = np.linspace(lo, 1.0 - BETA_CLIP, samples)
    u = compose_beta(beta_t, bp)
    w = compose_beta(beta_t_bar, -beta)
    v = compose_beta(bp, -beta)
    t2 = t2_values(u, w, v)
    bad = np.flatnonzero(t2 < 0.0)
    return float(bp[bad[0]]) if bad.size else None


@dataclass(frozen=True)
class EtherBatch:
    beta: np.ndarray
    beta_prime: np.ndarray
    beta_t: np.ndarray
    beta_t_bar: np.ndarray
    t1_prime: np.ndarray

    def __len__(self) -> int:
        return len(self.beta)

    def scenario(self, i: int) -> EtherMollerScenario:
        return EtherMollerScenario(float(self.beta[i]), float(self.beta_prime[i]), float(self.beta_t[i]),
                                   float(self.beta_t_bar[i]), float(self.t1_prime[i]))


def sample_ether_scenarios(n: int, seed: int) -> EtherBatch:
    """Draw ``n`` admissible scenarios.

    Tachyon speeds are log-uniform on (1, 1e3]; ``beta`` is uniform on
    (-1 + 1e-6, 1 - 1e-6) and ``beta_prime`` uniform on the admissible part
    of that interval, i.e. above -1/beta_t.
    """
    rng = np.random.default_rng(seed)
    hi = 1.0 - BETA_CLIP
    log_max = math.log(BETA_T_MAX)
    # 1 - u maps [0, 1) onto (0, 1], keeping speeds strictly above 1
    beta_t = np.exp(log_max * (1.0 - rng.random(n)))
    beta_t_bar = np.exp(log_max * (1.0 - rng.random(n)))
    beta = rng.uniform(-hi, hi, n)
    lo = np.maximum(-hi, -1.0 / beta_t + BETA_CLIP)
    beta_prime = lo + (hi - lo) * rng.random(n)
    t1_prime = np.exp(rng.uniform(math.log(1e-3), math.log(1e3), n))
    return EtherBatch(beta, beta_prime, beta_t, beta_t_bar, t1_prime)


@dataclass(frozen=True)
class ImpossibilityReport:
    samples: int
    seed: int
    paradox_count: int
    nonpositive_t2_count: int
    min_lhs: float
    min_t2: float

    @property
    def holds(self) -> bool:
        return self.paradox_count == 0 and self.nonpositive_t2_count == 0


def verify_no_paradox(samples: int, seed: int) -> ImpossibilityReport:
    """Check the ether inequality and the sign of t2 over random scenarios."""
    batch = sample_ether_scenarios(samples, seed)
    u = compose_beta(batch.beta_t, batch.beta_prime)
    w = compose_beta(batch.beta_t_bar, -batch.beta)
    v = compose_beta(batch.beta_prime, -batch.beta)
    num, den = ether_lhs(batch.beta_t, batch.beta_t_bar, v)
    lhs = num / den
    t2 = t2_values(u, w, v, batch.t1_prime)
    return ImpossibilityReport(
        samples=samples,
        seed=seed,
        paradox_count=int(np.count_nonzero(lhs < 0.0)),
        nonpositive_t2_count=int(np.count_nonzero(~(t2 > 0.0))),
        min_lhs=float(np.min(lhs)),
        min_t2=float(np.min(t2)),
    )
