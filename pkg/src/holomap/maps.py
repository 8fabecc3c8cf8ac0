"""Second-order rational maps on the complex plane.

Three recurrences are supported, each written in companion form as a map on
the state ``(z_prev, z_curr) = (z_{n-1}, z_n)``::

    E1:  z_{n+1} = alpha / z_n + beta / z_{n-1}
    E8:  z_{n+1} = alpha + beta * z_n / z_{n-1}
    E9:  z_{n+1} = alpha * z_{n-1} / z_n + beta

Orbits never store non-finite numbers.  A divisor whose modulus drops below
:data:`FORBIDDEN_THRESHOLD` stops the orbit with a ``FORBIDDEN_HIT`` status,
and an iterate whose modulus exceeds :data:`OVERFLOW_THRESHOLD` stops it with
an ``OVERFLOW`` status.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

FORBIDDEN_THRESHOLD = 1e-12
OVERFLOW_THRESHOLD = 1e12


class MapKind(enum.Enum):
    E1 = "E1"
    E8 = "E8"
    E9 = "E9"

    @classmethod
    def parse(cls, value: "str | MapKind") -> "MapKind":
        if isinstance(value, MapKind):
            return value
        try:
            return cls(str(value).strip().upper())
        except ValueError:
            raise ValueError(f"unknown map kind {value!r}; expected one of e1, e8, e9") from None


class ForbiddenStep(ArithmeticError):
    """A divisor of the map vanished (modulus below the forbidden threshold).

    ``divisor`` is ``"z_prev"`` or ``"z_curr"``.
    """

    def __init__(self, divisor: str, value: complex):
        super().__init__(f"divisor {divisor} = {value!r} is below the forbidden threshold")
        self.divisor = divisor
        self.value = value


def _finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def _as_complex(value, name: str) -> complex:
    z = complex(value)
    if not _finite(z):
        raise ValueError(f"{name} must be finite, got {z!r}")
    return z


@dataclass(frozen=True)
class MapSpec:
    """Which recurrence, plus its complex parameters."""

    kind: MapKind
    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "kind", MapKind.parse(self.kind))
        object.__setattr__(self, "alpha", _as_complex(self.alpha, "alpha"))
        object.__setattr__(self, "beta", _as_complex(self.beta, "beta"))


@dataclass(frozen=True)
class State:
    """Companion-form state ``(z_{n-1}, z_n)``."""

    z_prev: complex
    z_curr: complex

    def __post_init__(self):
        object.__setattr__(self, "z_prev", _as_complex(self.z_prev, "z_prev"))
        object.__setattr__(self, "z_curr", _as_complex(self.z_curr, "z_curr"))

    def __neg__(self) -> "State":
        return State(-self.z_prev, -self.z_curr)


class StatusKind(enum.Enum):
    COMPLETED = "completed"
    FORBIDDEN_HIT = "forbidden_hit"
    OVERFLOW = "overflow"


@dataclass(frozen=True)
class OrbitStatus:
    kind: StatusKind
    step: int | None = None
    divisor: str | None = None

    @property
    def completed(self) -> bool:
        return self.kind is StatusKind.COMPLETED

    def __str__(self):
        if self.completed:
            return "completed"
        extra = f", divisor={self.divisor}" if self.divisor else ""
        return f"{self.kind.value}(step={self.step}{extra})"


COMPLETED = OrbitStatus(StatusKind.COMPLETED)


@dataclass
class Orbit:
    """Iterates ``z_{n+1}, z_{n+2}, ...`` generated from ``initial``.

    The initial values are not part of ``points``.  Step ``k`` (1-based)
    produces ``points[k-1]``; a guard firing at step ``k`` leaves ``k-1``
    stored points.
    """

    spec: MapSpec
    initial: State
    points: np.ndarray = field(repr=False)
    status: OrbitStatus = COMPLETED

    def __len__(self):
        return len(self.points)

    @property
    def bounded_max(self) -> float:
        return float(np.abs(self.points).max()) if len(self.points) else 0.0


def _below_overflow(z: complex) -> bool:
    try:
        return abs(z) <= OVERFLOW_THRESHOLD  # False for nan
    except OverflowError:
        return False


def _check(divisor: str, value: complex):
    if abs(value) < FORBIDDEN_THRESHOLD:
        raise ForbiddenStep(divisor, value)


def _step(kind: MapKind, alpha: complex, beta: complex, zp: complex, zc: complex) -> complex:
    if kind is MapKind.E1:
        _check("z_curr", zc)
        _check("z_prev", zp)
        return alpha / zc + beta / zp
    if kind is MapKind.E8:
        _check("z_prev", zp)
        return alpha + zc / zp * beta
    _check("z_curr", zc)
    return zp / zc * alpha + beta


def step(spec: MapSpec, s: State) -> complex:
    """Return ``z_{n+1}`` for the state ``s``.

    Raises
    ------
    ForbiddenStep
        If a divisor of the selected map has modulus below the forbidden
        threshold.
    """
    return _step(spec.kind, spec.alpha, spec.beta, s.z_prev, s.z_curr)


def _bottom_row(kind, alpha, beta, zp, zc):
    if kind is MapKind.E1:
        _check("z_curr", zc)
        _check("z_prev", zp)
        return -beta / (zp * zp), -alpha / (zc * zc)
    if kind is MapKind.E8:
        _check("z_prev", zp)
        return -beta * zc / (zp * zp), beta / zp
    _check("z_curr", zc)
    return alpha / zc, -alpha * zp / (zc * zc)


def jacobian(spec: MapSpec, s: State) -> np.ndarray:
    """Complex Jacobian of ``(z_prev, z_curr) -> (z_curr, z_next)``.

    The top row is ``(0, 1)``; the bottom row holds the partial derivatives
    of the step with respect to ``z_prev`` and ``z_curr``.
    """
    d_prev, d_curr = _bottom_row(spec.kind, spec.alpha, spec.beta, s.z_prev, s.z_curr)
    return np.array([[0.0, 1.0], [d_prev, d_curr]], dtype=complex)


def iterate(spec: MapSpec, s: State, n: int) -> Orbit:
    """Apply :func:`step` up to ``n`` times, stopping early on a guard."""
    if n < 1:
        raise ValueError("n must be >= 1")
    kind, alpha, beta = spec.kind, spec.alpha, spec.beta
    zp, zc = s.z_prev, s.z_curr
    out = np.empty(n, dtype=complex)
    status = COMPLETED
    count = 0
    for k in range(1, n + 1):
        try:
            zn = _step(kind, alpha, beta, zp, zc)
        except ForbiddenStep as exc:
            status = OrbitStatus(StatusKind.FORBIDDEN_HIT, k, exc.divisor)
            break
        if not _below_overflow(zn):
            status = OrbitStatus(StatusKind.OVERFLOW, k)
            break
        out[count] = zn
        count += 1
        zp, zc = zc, zn
    return Orbit(spec, s, out[:count].copy(), status)


def transform_orbit_scaling(spec: MapSpec, c: complex):
    """Scaling covariance of E1.

    Returns ``(scaled_spec, rule)`` where ``scaled_spec`` has parameters
    ``(c**2 alpha, c**2 beta)`` and ``rule`` maps a state to ``c`` times
    itself.  Orbits of the scaled system are ``c`` times the original ones.
    """
    if spec.kind is not MapKind.E1:
        raise ValueError("scaling covariance holds for E1 only")
    c = complex(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    c2 = c * c
    scaled = MapSpec(MapKind.E1, c2 * spec.alpha, c2 * spec.beta)

    def rule(s: State) -> State:
        return State(c * s.z_prev, c * s.z_curr)

    return scaled, rule


_REVERSED_KIND = {MapKind.E1: MapKind.E1, MapKind.E8: MapKind.E9, MapKind.E9: MapKind.E8}


def reverse_lags(spec: MapSpec) -> MapSpec:
    """Spec of the recurrence with ``z_n`` and ``z_{n-1}`` exchanged.

    Swapping the two delayed arguments in the defining formula gives::

        alpha / z_{n-1} + beta / z_n           == E1 with (beta, alpha)
        alpha + beta * z_{n-1} / z_n           == E9 with (beta, alpha)
        alpha * z_n / z_{n-1} + beta           == E8 with (beta, alpha)

    so the reversed recurrence is again one of the three standard maps.  The
    operation is an involution.  Several published numerical experiments on
    these maps are reproduced only under this argument order; see
    :mod:`holomap.cases`.
    """
    return MapSpec(_REVERSED_KIND[spec.kind], spec.beta, spec.alpha)
