"""Published reference cases for the three maps.

Parameters and initial values are complex numbers written as ``(re, im)``.
Two argument-order conventions occur:

* The cycle tables at ``alpha = beta = 1`` and the characteristic-polynomial
  tables use the maps exactly as defined in :mod:`holomap.maps`.
* The long-run numerical experiments (chaotic cases, comparison cases and the
  state-space cases) are reproduced only when the two delayed arguments are
  exchanged, i.e. with :func:`holomap.maps.reverse_lags` applied.  Under that
  convention the printed limits, 2-cycles, the long cycle and the state-space
  verdicts all match to the printed digits; under the literal order they do
  not (for instance the E1 2-cycles come out rotated by a quarter turn).

Initial values are listed as ``z0, z1`` and map to ``State(z_prev=z0,
z_curr=z1)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .maps import MapKind, MapSpec, State, reverse_lags


def c(re: float, im: float = 0.0) -> complex:
    return complex(re, im)


class LagOrder(enum.Enum):
    STANDARD = "standard"
    REVERSED = "reversed"


def effective_spec(spec: MapSpec, lag_order: LagOrder | str = LagOrder.STANDARD) -> MapSpec:
    lag_order = LagOrder(lag_order)
    return reverse_lags(spec) if lag_order is LagOrder.REVERSED else spec


# ---------------------------------------------------------------------------
# characteristic polynomial tables

@dataclass(frozen=True)
class ParameterCase:
    label: str
    alpha: complex
    beta: complex


PARAMETER_CASES = (
    ParameterCase("alpha=beta", 1, 1),
    ParameterCase("alpha=i*beta", 1j, 1),
    ParameterCase("alpha=-i*beta", -1j, 1),
    ParameterCase("alpha=0, beta!=0", 0, 1),
    ParameterCase("alpha!=0, beta=0", 1, 0),
)


@dataclass(frozen=True)
class ModulusClaim:
    """A printed statement about the two root moduli.

    ``relation`` is one of ``"all<1"``, ``"all>1"``, ``"all=1"``, ``"all=0"``
    or ``"values"``; for ``"values"`` the printed moduli are in ``values``.
    """

    relation: str
    values: tuple[float, ...] = ()
    text: str = ""

    def holds(self, moduli, tol: float = 1e-9) -> bool:
        m = sorted(moduli)
        if self.relation == "all<1":
            return all(x < 1 - tol for x in m)
        if self.relation == "all>1":
            return all(x > 1 + tol for x in m)
        if self.relation == "all=1":
            return all(abs(x - 1) <= tol for x in m)
        if self.relation == "all=0":
            return all(x <= tol for x in m)
        if self.relation == "values":
            want = sorted(self.values)
            return len(want) == len(m) and all(abs(x - y) <= tol for x, y in zip(m, want))
        raise ValueError(f"unknown relation {self.relation!r}")


@dataclass(frozen=True)
class PrintedStabilityRow:
    table: int
    kind: MapKind
    case: ParameterCase
    a1: complex
    a0: complex
    polynomial_text: str
    claim: ModulusClaim
    inference: str


def _rows():
    P = PARAMETER_CASES
    lt, gt = ModulusClaim("all<1", text="|l|<1"), ModulusClaim("all>1", text="|l|>1")
    eq1 = ModulusClaim("all=1", text="|l|=1")
    eq0 = ModulusClaim("all=0", text="|l|=0")
    E1, E8, E9 = MapKind.E1, MapKind.E8, MapKind.E9
    return (
        PrintedStabilityRow(1, E1, P[0], 1 / 2, 1 / 2, "l^2+(1/2)l+1/2", gt, "sink"),
        PrintedStabilityRow(1, E1, P[1], 1j / (1 + 1j), 1 / (1 + 1j), "l^2+(i/(1+i))l+1/(1+i)", lt, "l.a.s"),
        PrintedStabilityRow(1, E1, P[2], -(1j / (1 - 1j)), 1 / (1 - 1j), "l^2-(i/(1-i))l+1/(1-i)", gt, "sink"),
        PrintedStabilityRow(1, E1, P[3], 0, 1, "l^2+1", eq1, "non-hyp"),
        PrintedStabilityRow(1, E1, P[4], 1, 0, "l^2+l",
                            ModulusClaim("values", (0.0, 1.0), "|l|=0,1"), "non-hyp"),
        PrintedStabilityRow(2, E8, P[0], -1 / 2, 1 / 2, "l^2-(1/2)l+1/2", lt, "l.a.s"),
        PrintedStabilityRow(2, E8, P[1], -(1 / (1 + 1j)), 1 / (1 + 1j), "l^2-(1/(1+i))l+1/(1+i)", gt, "sink"),
        PrintedStabilityRow(2, E8, P[2], -(1 / (1 - 1j)), 1 / (1 - 1j), "l^2-(1/(1-i))l+1/(1-i)", gt, "sink"),
        PrintedStabilityRow(2, E8, P[3], -1, 1, "l^2-l+1", eq1, "non-hyp"),
        PrintedStabilityRow(2, E8, P[4], 0, 0, "l^2", eq0, "repeller"),
        PrintedStabilityRow(3, E9, P[0], 1 / 2, -1 / 2, "l^2+(1/2)l-1/2",
                            ModulusClaim("values", (1.0, 0.5), "|l+|=1, |l-|=1/2"), "non-hyp"),
        PrintedStabilityRow(3, E9, P[1], 1j / (1 + 1j), -(1j / (1 + 1j)), "l^2+(i/(1+i))l-i/(1+i)", lt, "l.a.s"),
        PrintedStabilityRow(3, E9, P[2], -(1j / (1 - 1j)), 1j / (1 - 1j), "l^2-(i/(1-i))l+i/(1-i)", eq0, "repeller"),
        PrintedStabilityRow(3, E9, P[3], 0, 0, "l^2", eq0, "repeller"),
        PrintedStabilityRow(3, E9, P[4], 1, -1, "l^2+l-1", gt, "sink"),
    )


PRINTED_STABILITY_ROWS = _rows()


# ---------------------------------------------------------------------------
# cycle tables at alpha = beta = 1 (standard argument order)

@dataclass(frozen=True)
class PrintedCycle:
    kind: MapKind
    labeled_period: int
    points: tuple[complex, ...]

    @property
    def spec(self) -> MapSpec:
        return MapSpec(self.kind, 1, 1)


def _im(*xs):
    return tuple(complex(0, x) for x in xs)


PRINTED_CYCLES = (
    PrintedCycle(MapKind.E1, 4, _im(0.765367, -1.84776, -0.765367, 1.84776)),
    PrintedCycle(MapKind.E1, 5, _im(0.309721, -1.83083, -2.68251, 0.918986, -0.71537)),
    PrintedCycle(MapKind.E1, 6, _im(0.53713, -0.735107, -0.501402, 3.35475, 1.69632, -0.887595)),
    PrintedCycle(MapKind.E1, 7, _im(0.563218, -1.45984, -1.09051, 1.60201, 0.292791, -4.03963, -3.16786)),
    PrintedCycle(MapKind.E8, 3, (1.24698, -1.80194, -0.445042)),
    PrintedCycle(MapKind.E8, 5, (0.83083, -1.91899, -1.30972, 1.68251, -0.28463)),
    PrintedCycle(MapKind.E8, 6, (1.80194, -0.445042, 1.24698, -1.80194, -0.445042, 1.24698)),
    PrintedCycle(MapKind.E8, 7, (1.87278, -0.556474, 0.702862, -0.263063, 0.625725, -1.37861, -1.20322)),
    PrintedCycle(MapKind.E9, 3, (1.24698, -0.445042, -1.80194)),
    PrintedCycle(MapKind.E9, 4, (c(1.53339, -0.608009), c(1.81536, 0.929423)) * 2),
    PrintedCycle(MapKind.E9, 5, (c(0.574313, 0.798528), c(-0.273032, -0.160806), c(-1.84063, -1.25163),
                                 c(1.14206, -0.00923437), c(-0.60271, -1.1089))),
    PrintedCycle(MapKind.E9, 6, (2.61506, 1.61917) * 3),
    PrintedCycle(MapKind.E9, 7, (c(0.962688, 0.453798), c(-0.251383, -0.177869), c(-2.40312, 0.602711),
                                 c(1.08095, 0.0943187), c(-1.15807, 0.745878), c(0.377343, -0.482479),
                                 c(-1.12397, -0.739107))),
    PrintedCycle(MapKind.E9, 8, (27.0466, 1.03839) * 4),
)


# ---------------------------------------------------------------------------
# orbit experiments (reversed argument order)

@dataclass(frozen=True)
class OrbitCase:
    name: str
    alpha: complex
    beta: complex
    z0: complex
    z1: complex

    @property
    def state(self) -> State:
        return State(self.z0, self.z1)

    def spec(self, kind: MapKind | str, lag_order: LagOrder | str = LagOrder.REVERSED) -> MapSpec:
        return effective_spec(MapSpec(MapKind.parse(kind), self.alpha, self.beta), lag_order)


class Verdict(enum.Enum):
    CONVERGENT = "convergent"
    PERIODIC = "periodic_convergent"
    UNBOUNDED = "unbounded"
    CHAOTIC = "chaotic"
    FRACTAL = "fractal"


@dataclass(frozen=True)
class PrintedOutcome:
    verdict: Verdict
    limit: complex | None = None
    period: int | None = None


def _out(v, limit=None, period=None):
    return PrintedOutcome(v, limit, period)


CV, PC, UB, CH, FR = Verdict.CONVERGENT, Verdict.PERIODIC, Verdict.UNBOUNDED, Verdict.CHAOTIC, Verdict.FRACTAL

# rows of the three-way comparison; outcomes listed for E1, E8, E9
COMPARISON_CASES = (
    (OrbitCase("cmp1", c(30, 47), c(30, -10), c(9, -41), c(49, -63)),
     (_out(CH), _out(CV, c(60, 37)), _out(CV, c(60, 37)))),
    (OrbitCase("cmp2", c(56, -22), c(-52, -19), c(-81, -74), c(89, 92)),
     (_out(PC, c(10.393, -0.14432), 2), _out(CH), _out(PC, c(33.8, 60.46), 2))),
    (OrbitCase("cmp3", c(4, -81), c(64, 64), c(45, -70), c(32, 4)),
     (_out(PC, c(6.9614, -10.414), 2), _out(UB), _out(CH))),
    (OrbitCase("cmp4", c(15, -88), c(-53, -30), c(65, -97), c(-92, -67)),
     (_out(PC, None, 23), _out(CV, c(-38, -118)), _out(CV, c(-38, -118)))),
)

# the chaotic trio: (case, kind, printed largest Lyapunov exponent)
CHAOTIC_CASES = (
    (COMPARISON_CASES[0][0], MapKind.E1, 1.6015),
    (COMPARISON_CASES[1][0], MapKind.E8, 1.2414),
    (COMPARISON_CASES[2][0], MapKind.E9, 0.6885),
)

# the long E1 cycle printed for cmp4; the second half is the negation of the first
_HALF = (c(18.574, -4.5796), c(3.295, -1.1914), c(-9.4511, -17.474), c(15.164, -23.792),
         c(3.424, 0.61574), c(-13.604, -7.0189), c(3.742, -25.505), c(2.618, 3.3548),
         c(-9.7582, 5.5619), c(-11.358, -10.844), c(-1.2796, 5.1965), c(0.10378, 15.669))
LONG_CYCLE_POINTS = _HALF + tuple(-z for z in _HALF)
LONG_CYCLE_CLAIMED_PERIOD = 23

STATE_SPACE_CASES = (
    (OrbitCase("ss1", c(9, -73), c(-70, -49), c(52, 110), c(68, 88)),
     (_out(CV, c(10.591, -5.759)), _out(UB), _out(CV, c(79, -122)))),
    (OrbitCase("ss2", c(100, -55), c(31, 21), c(-82, 160), c(-11, -94)),
     (_out(UB), _out(CV, c(131, -34)), _out(CV, c(131, -34)))),
    (OrbitCase("ss3", c(-29, 33), c(-44, -54), c(152, 122), c(87, -191)),
     (_out(FR), _out(UB), _out(CV, c(-73, -33)))),
    (OrbitCase("ss4", c(58, 56), c(34, -74), c(-8, -59), c(-57, -91)),
     (_out(UB), _out(UB), _out(PC, c(56.376, -118.56)))),
    (OrbitCase("ss5", c(98, 1), c(-46, -80), c(-99, 130), c(55, 75)),
     (_out(FR), _out(PC, c(117.82, 14.575), 6), _out(PC, c(-61.076, -143.49), 2))),
    (OrbitCase("ss6", c(-64, 0), c(4, 99), c(-89, 184), c(29, -32)),
     (_out(UB), _out(UB), _out(CV, c(-60, 99)))),
    (OrbitCase("ss7", c(80, -87), c(-33, -100), c(87, 64), c(42, 49)),
     (_out(FR), _out(CH), _out(CV, c(47, -187)))),
    (OrbitCase("ss8", c(4, 55), c(-76, 25), c(-34, -32), c(64, 6)),
     (_out(UB), _out(UB), _out(PC, c(19.794, 105.86), 2))),
)

FRACTAL_CASES = tuple(case for case, outs in STATE_SPACE_CASES if outs[0].verdict is Verdict.FRACTAL)
PRINTED_FRACTAL_DIMENSIONS = (1.82779, 1.89333, 1.9127)
STATE_SPACE_ITERATES = 50_000

KINDS = (MapKind.E1, MapKind.E8, MapKind.E9)
