"""Event and four-vector algebra in natural units (c = 1, time stored as ct).

Boosts follow the passive convention: ``boost(v, beta)`` returns the
components of ``v`` in a frame that moves with velocity ``beta`` relative
to the frame ``v`` is expressed in, so ``t' = gamma * (t - beta . x)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence, Union

import numpy as np

from tachyon.errors import DomainError, FrameMismatchError, SingularCompositionError

LIGHTLIKE_RTOL = 1e-9
DENOM_EPS = 1e-12
IDENTITY_BETA = 1e-15

ArrayLike = Union[Sequence[float], np.ndarray]


def _vec3(values: ArrayLike, what: str) -> tuple[float, float, float]:
    arr = np.asarray(values, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"{what} must have exactly 3 components, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{what} must be finite, got {arr.tolist()}")
    return (float(arr[0]), float(arr[1]), float(arr[2]))


def _finite(value: float, what: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{what} must be finite, got {value}")
    return value


class IntervalClass(Enum):
    TIMELIKE = "timelike"
    SPACELIKE = "spacelike"
    LIGHTLIKE = "lightlike"


@dataclass(frozen=True)
class FourVector:
    """A time component plus a spatial 3-vector sharing one unit."""

    t: float
    space: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", _finite(self.t, "time component"))
        object.__setattr__(self, "space", _vec3(self.space, "spatial part"))

    @classmethod
    def of(cls, t: float, x: float = 0.0, y: float = 0.0, z: float = 0.0) -> FourVector:
        return cls(t, (x, y, z))

    @classmethod
    def from_array(cls, arr: ArrayLike) -> FourVector:
        arr = np.asarray(arr, dtype=float)
        if arr.shape != (4,):
            raise ValueError(f"four-vector needs 4 components, got shape {arr.shape}")
        return cls(arr[0], arr[1:])

    def as_array(self) -> np.ndarray:
        return np.array((self.t, *self.space))

    @property
    def space_array(self) -> np.ndarray:
        return np.array(self.space)

    def dot(self, other: FourVector) -> float:
        """Minkowski inner product with signature (+, -, -, -)."""
        return self.t * other.t - float(np.dot(self.space, other.space))

    @property
    def norm_sq(self) -> float:
        return self.dot(self)

    def __add__(self, other: FourVector) -> FourVector:
        return FourVector.from_array(self.as_array() + other.as_array())

    def __sub__(self, other: FourVector) -> FourVector:
        return FourVector.from_array(self.as_array() - other.as_array())

    def __neg__(self) -> FourVector:
        return FourVector.from_array(-self.as_array())

    def __mul__(self, k: float) -> FourVector:
        return FourVector.from_array(float(k) * self.as_array())

    __rmul__ = __mul__


@dataclass(frozen=True)
class Event:
    """A spacetime point (ct, x, y, z) in meters, tagged with its frame."""

    ct: float
    pos: tuple[float, float, float] = (0.0, 0.0, 0.0)
    frame_label: str = "lab"

    def __post_init__(self) -> None:
        object.__setattr__(self, "ct", _finite(self.ct, "ct"))
        object.__setattr__(self, "pos", _vec3(self.pos, "position"))

    @classmethod
    def at(cls, ct: float, x: float = 0.0, y: float = 0.0, z: float = 0.0,
           frame_label: str = "lab") -> Event:
        return cls(ct, (x, y, z), frame_label)

    @classmethod
    def from_four_vector(cls, v: FourVector, frame_label: str = "lab") -> Event:
        return cls(v.t, v.space, frame_label)

    def as_four_vector(self) -> FourVector:
        return FourVector(self.ct, self.pos)

    def __sub__(self, other: Event) -> FourVector:
        if self.frame_label != other.frame_label:
            raise FrameMismatchError(
                f"cannot difference events in frames {self.frame_label!r} and {other.frame_label!r}"
            )
        return self.as_four_vector() - other.as_four_vector()

    def translated(self, delta: FourVector) -> Event:
        return Event.from_four_vector(self.as_four_vector() + delta, self.frame_label)

    def delayed(self, dct: float) -> Event:
        """Same place, ``dct`` meters of ct later."""
        return Event(self.ct + dct, self.pos, self.frame_label)


@dataclass(frozen=True)
class Beta3:
    """A velocity in units of c.

    Boost velocities must satisfy ``|beta| < 1``; pass ``signal=True`` for
    signal velocities (tachyons), which lifts that restriction.
    """

    beta: tuple[float, float, float]
    signal: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", _vec3(self.beta, "beta"))
        if not self.signal and self.magnitude >= 1.0:
            raise DomainError(f"non-boost velocity: |beta| = {self.magnitude!r} >= 1")

    @classmethod
    def of(cls, bx: float, by: float = 0.0, bz: float = 0.0, signal: bool = False) -> Beta3:
        return cls((bx, by, bz), signal)

    @property
    def magnitude(self) -> float:
        return math.sqrt(sum(b * b for b in self.beta))

    @property
    def boost_legal(self) -> bool:
        return self.magnitude < 1.0

    def as_array(self) -> np.ndarray:
        return np.array(self.beta)

    def __neg__(self) -> Beta3:
        return Beta3(tuple(-b for b in self.beta), self.signal)


class Interval(NamedTuple):
    invariant: float
    kind: IntervalClass


def _beta_array(beta: Union[Beta3, float, ArrayLike]) -> np.ndarray:
    if isinstance(beta, Beta3):
        return beta.as_array()
    arr = np.asarray(beta, dtype=float)
    if arr.ndim == 0:
        return np.array([float(arr), 0.0, 0.0])
    return arr


def _one_minus_b2(speed: np.ndarray) -> np.ndarray:
    # factored form keeps precision as |beta| -> 1
    return (1.0 - speed) * (1.0 + speed)


def gamma(beta: Union[Beta3, float, ArrayLike]) -> float:
    """Lorentz factor for a boost-legal velocity (a Beta3, a scalar speed or a 3-vector)."""
    speed = float(np.linalg.norm(_beta_array(beta)))
    if not speed < 1.0:
        raise DomainError(f"non-boost velocity: |beta| = {speed!r} >= 1")
    return 1.0 / math.sqrt(_one_minus_b2(speed))


def boost_array(v: np.ndarray, beta: np.ndarray) -> np.ndarray:
    """Vectorised boost of ``(..., 4)`` four-vectors by ``(..., 3)`` velocities.

    Shapes broadcast. Rows with ``|beta| < 1e-15`` pass through unchanged.
    """
    v = np.asarray(v, dtype=float)
    beta = np.asarray(beta, dtype=float)
    b2 = np.sum(beta * beta, axis=-1)
    speed = np.sqrt(b2)
    if np.any(speed >= 1.0):
        raise DomainError(f"non-boost velocity: max |beta| = {float(np.max(speed))!r} >= 1")
    t = v[..., 0]
    x = v[..., 1:]
    g = 1.0 / np.sqrt(_one_minus_b2(speed))
    bx = np.sum(beta * x, axis=-1)
    tiny = speed < IDENTITY_BETA
    # (gamma - 1) / b2 written as gamma^2 / (gamma + 1) to avoid 0/0
    coef = np.where(tiny, 0.0, g * g / (g + 1.0))
    t_new = np.where(tiny, t, g * (t - bx))
    scale = np.where(tiny, 0.0, coef * bx - g * t)
    x_new = x + scale[..., None] * beta
    out = np.empty(np.broadcast_shapes(v.shape, beta.shape[:-1] + (4,)))
    out[..., 0] = t_new
    out[..., 1:] = x_new
    return out


def boost(v: FourVector, beta: Beta3) -> FourVector:
    if not isinstance(beta, Beta3):
        beta = Beta3(_beta_array(beta))
    elif beta.signal and not beta.boost_legal:
        raise DomainError(f"non-boost velocity: |beta| = {beta.magnitude!r} >= 1")
    return FourVector.from_array(boost_array(v.as_array(), beta.as_array()))


def boost_event(e: Event, beta: Beta3, frame_label: str) -> Event:
    """Re-express ``e`` in the frame moving at ``beta`` relative to its own frame."""
    return Event.from_four_vector(boost(e.as_four_vector(), beta), frame_label)


def minkowski_dot_array(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return a[..., 0] * b[..., 0] - np.sum(a[..., 1:] * b[..., 1:], axis=-1)


def classify_array(v: np.ndarray) -> np.ndarray:
    """+1 timelike, -1 spacelike, 0 lightlike (relative tolerance LIGHTLIKE_RTOL)."""
    v = np.asarray(v, dtype=float)
    inv = minkowski_dot_array(v, v)
    scale = np.maximum(1.0, np.sum(v * v, axis=-1))
    return np.where(np.abs(inv) <= LIGHTLIKE_RTOL * scale, 0, np.sign(inv)).astype(int)


_CLASS_CODES = {1: IntervalClass.TIMELIKE, -1: IntervalClass.SPACELIKE, 0: IntervalClass.LIGHTLIKE}


def classify(v: FourVector) -> IntervalClass:
    return _CLASS_CODES[int(classify_array(v.as_array()))]


def interval(e1: Event, e2: Event) -> Interval:
    d = e2 - e1
    return Interval(d.norm_sq, classify(d))


def compose_beta(a, b):
    """Collinear velocity composition ``(a + b) / (1 + a b)``.

    Works elementwise on arrays. Either argument may exceed 1 in magnitude;
    a denominator within DENOM_EPS of zero raises SingularCompositionError.
    """
    den = 1.0 + np.multiply(a, b)
    if np.any(np.abs(den) < DENOM_EPS):
        raise SingularCompositionError(
            f"1 + a*b vanishes (a={a!r}, b={b!r}): signal is instantaneous in the target frame"
        )
    out = np.add(a, b) / den
    return float(out) if np.ndim(out) == 0 else out
