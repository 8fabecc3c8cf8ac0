"""Recomputation of every printed numerical claim, as a discrepancy log.

Each :class:`Finding` pairs a printed value with the value recomputed by
the library and says whether they agree.  The orbit experiments are
checked under both argument orders (see :class:`holomap.cases.LagOrder`).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .cases import (COMPARISON_CASES, FRACTAL_CASES, KINDS, LONG_CYCLE_CLAIMED_PERIOD, LONG_CYCLE_POINTS,
                    PRINTED_CYCLES, PRINTED_FRACTAL_DIMENSIONS, STATE_SPACE_CASES, STATE_SPACE_ITERATES,
                    CHAOTIC_CASES, LagOrder, OrbitCase, PrintedOutcome, Verdict, c)
from .chaos import box_dimension, lyapunov_max
from .classify import ClassificationReport, VerdictKind, classify_orbit
from .cycles import (closed_form_two_cycle_eigenvalues, detect_period, map_residual, minimal_period,
                     monodromy)
from .maps import MapKind, MapSpec, iterate, reverse_lags
from .stability import audit_tables

PRINTED_POINT_ABS_TOL = 1e-3
PRINTED_POINT_REL_TOL = 1e-4


@dataclass(frozen=True)
class Finding:
    topic: str
    printed: str
    computed: str
    agrees: bool

    def to_dict(self) -> dict:
        return {"topic": self.topic, "printed": self.printed, "computed": self.computed, "agrees": self.agrees}

    def line(self) -> str:
        flag = "agree" if self.agrees else "DISAGREE"
        return f"[{flag}] {self.topic}: printed {self.printed}; computed {self.computed}"


def _z(z: complex, digits: int = 5) -> str:
    # + 0.0 turns -0.0 into 0.0
    return f"({z.real + 0.0:.{digits}g}, {z.imag + 0.0:.{digits}g})"


def close_to_printed(z: complex, printed: complex) -> bool:
    """Agreement at the printed precision (about five significant digits)."""
    return abs(z - printed) <= PRINTED_POINT_ABS_TOL + PRINTED_POINT_REL_TOL * abs(printed)


def outcome_matches(printed: PrintedOutcome, r: ClassificationReport) -> bool:
    """Whether a classification reproduces a printed verdict cell.

    A printed "fractal" cell is reproduced by any bounded orbit that neither
    converges nor settles on a cycle.
    """
    v = printed.verdict
    if v is Verdict.CONVERGENT:
        return r.verdict is VerdictKind.CONVERGENT and (printed.limit is None or close_to_printed(r.limit, printed.limit))
    if v is Verdict.PERIODIC:
        if r.verdict is not VerdictKind.PERIODIC_CONVERGENT:
            return False
        if printed.period is not None and r.period != printed.period:
            return False
        return printed.limit is None or any(close_to_printed(complex(z), printed.limit) for z in r.cycle)
    if v is Verdict.UNBOUNDED:
        return r.verdict is VerdictKind.UNBOUNDED
    if v is Verdict.CHAOTIC:
        return r.verdict is VerdictKind.CHAOTIC
    return r.verdict in (VerdictKind.CHAOTIC, VerdictKind.UNDETERMINED)


def describe(r: ClassificationReport) -> str:
    v = r.verdict
    if v is VerdictKind.CONVERGENT:
        return f"convergent to {_z(r.limit)}"
    if v is VerdictKind.PERIODIC_CONVERGENT:
        pts = ", ".join(_z(complex(z)) for z in r.cycle[:4])
        more = ", ..." if r.period > 4 else ""
        return f"period {r.period} through {pts}{more}"
    if v is VerdictKind.CHAOTIC:
        return f"chaotic (lambda_max {r.lambda_max:.4f})"
    if v is VerdictKind.UNDETERMINED:
        return f"undetermined (lambda_max {r.lambda_max:.4f})"
    return f"{v.name.lower()} at step {r.step}"


def _describe_printed(p: PrintedOutcome) -> str:
    s = p.verdict.value
    if p.period is not None:
        s += f" period {p.period}"
    if p.limit is not None:
        s += f" {_z(p.limit)}"
    return s


# ---------------------------------------------------------------------------

def long_cycle_findings() -> list[Finding]:
    case = COMPARISON_CASES[3][0]
    orbit = iterate(case.spec(MapKind.E1), case.state, 10_000)
    det = detect_period(orbit)
    cyc = det.limit_cycle
    out = [Finding("long E1 cycle, period", str(LONG_CYCLE_CLAIMED_PERIOD), str(det.detected_period),
                   det.detected_period == LONG_CYCLE_CLAIMED_PERIOD)]
    if det.detected_period == len(LONG_CYCLE_POINTS):
        printed = np.array(LONG_CYCLE_POINTS)
        worst = min(float(np.max(np.abs(np.roll(cyc, -k) - printed))) for k in range(len(cyc)))
        out.append(Finding("long E1 cycle, points", f"{len(printed)} listed values",
                           f"max deviation {worst:.2e} from the detected cycle", worst <= 1e-2))
        anti = float(np.max(np.abs(np.roll(cyc, -12) + cyc)))
        out.append(Finding("long E1 cycle, z_(n+12) = -z_n", "implied by the listed values",
                           f"max |z_(n+12) + z_n| = {anti:.2e}", anti <= 1e-2))
    return out


def two_cycle_findings(alpha: complex = 1, beta: complex = 5) -> list[Finding]:
    """The E1 2-cycle formula and its stability matrix at one parameter pair."""
    spec = MapSpec(MapKind.E1, alpha, beta)
    p_printed = -cmath.sqrt(alpha - beta)
    res_std = map_residual(spec, [p_printed, -p_printed])
    res_rev = map_residual(reverse_lags(spec), [p_printed, -p_printed])
    p_lit = cmath.sqrt(beta - alpha)
    out = [Finding(
        f"E1 2-cycle formula at alpha={alpha}, beta={beta}",
        f"+-sqrt(alpha - beta) = +-{_z(p_printed)}",
        f"residual {res_std:.2e} as written, {res_rev:.2e} with argument order reversed; "
        f"as written the cycle is +-sqrt(beta - alpha) = +-{_z(p_lit)}",
        res_std < 1e-9,
    )]
    m = monodromy(spec, [p_lit, -p_lit])
    numeric = sorted(np.abs(np.linalg.eigvals(m)), reverse=True)
    closed = sorted((abs(x) for x in closed_form_two_cycle_eigenvalues(alpha, beta)), reverse=True)
    out.append(Finding(
        "E1 2-cycle stability matrix",
        f"closed-form multiplier moduli ({closed[0]:.6f}, {closed[1]:.6f})",
        f"Jacobian product moduli ({numeric[0]:.6f}, {numeric[1]:.6f})",
        bool(np.allclose(numeric, closed, atol=1e-9)),
    ))
    return out


def printed_cycle_findings() -> list[Finding]:
    out = []
    for pc in PRINTED_CYCLES:
        pts = np.array(pc.points)
        res = map_residual(pc.spec, pts)
        minimal = minimal_period(pts, tol=1e-4)
        topic = f"{pc.kind.value} listed cycle of period {pc.labeled_period} at alpha=beta=1"
        if res > 1e-4:
            out.append(Finding(topic, "a cycle", f"not an orbit of the map (residual {res:.2f})", False))
        elif minimal != pc.labeled_period:
            out.append(Finding(topic, f"period {pc.labeled_period}", f"minimal period {minimal}", False))
        else:
            out.append(Finding(topic, f"period {pc.labeled_period}", f"residual {res:.1e}, minimal", True))
    return out


def orbit_table_findings(lag_order: LagOrder = LagOrder.REVERSED) -> list[Finding]:
    out = []
    for table, rows in (("comparison", COMPARISON_CASES), ("state space", STATE_SPACE_CASES)):
        for case, outcomes in rows:
            for kind, printed in zip(KINDS, outcomes):
                r = classify_orbit(case.spec(kind, lag_order), case.state)
                out.append(Finding(f"{table} {case.name} {kind.value} ({lag_order.value} order)",
                                   _describe_printed(printed), describe(r), outcome_matches(printed, r)))
    return out


def typo_findings() -> list[Finding]:
    """Cells that agree once a single sign in the printed input or output is flipped."""
    out = []
    cmp2 = COMPARISON_CASES[1][0]
    r = classify_orbit(cmp2.spec(MapKind.E9), cmp2.state)
    flipped = c(-33.8, 60.46)
    ok = r.verdict is VerdictKind.PERIODIC_CONVERGENT and any(close_to_printed(complex(z), flipped) for z in r.cycle)
    out.append(Finding("comparison cmp2 E9 with the printed point's real sign flipped",
                       _z(flipped), describe(r), ok))
    ss1 = STATE_SPACE_CASES[0][0]
    fixed = OrbitCase(ss1.name, ss1.alpha, complex(-ss1.beta.real, ss1.beta.imag), ss1.z0, ss1.z1)
    for kind, printed in zip((MapKind.E1, MapKind.E9), (STATE_SPACE_CASES[0][1][0], STATE_SPACE_CASES[0][1][2])):
        r = classify_orbit(fixed.spec(kind), fixed.state)
        out.append(Finding(f"state space ss1 {kind.value} with beta = {_z(fixed.beta)} instead of {_z(ss1.beta)}",
                           _describe_printed(printed), describe(r), outcome_matches(printed, r)))
    return out


def lyapunov_findings() -> list[Finding]:
    out = []
    for case, kind, printed in CHAOTIC_CASES:
        est = lyapunov_max(case.spec(kind), case.state)
        out.append(Finding(f"largest Lyapunov exponent {case.name} {kind.value}", f"{printed}",
                           f"{est.lambda_max:.4f} (natural log, 1e5 steps)", abs(est.lambda_max - printed) < 0.05))
    return out


def fractal_findings() -> list[Finding]:
    out = []
    for case, printed in zip(FRACTAL_CASES, PRINTED_FRACTAL_DIMENSIONS):
        o = iterate(case.spec(MapKind.E1), case.state, STATE_SPACE_ITERATES)
        if not o.status.completed:
            out.append(Finding(f"box dimension {case.name} E1", f"{printed}", f"orbit stopped: {o.status}", False))
            continue
        est = box_dimension(o.points)
        out.append(Finding(f"box dimension {case.name} E1", f"{printed}",
                           f"{est.dimension:.4f} (fit r2 {est.fit_r2:.4f})", 1.6 < est.dimension < 2.0))
    return out


def discrepancy_log(orbits: bool = True) -> list[Finding]:
    """All findings; ``orbits=False`` skips the slower orbit experiments."""
    rows = audit_tables().rows
    out = [Finding(f"coefficients {r.kind.value} {r.case}", f"{r.printed_claim} / {r.printed_inference}",
                   f"moduli ({r.moduli[0]:.6f}, {r.moduli[1]:.6f}), {r.stability.value}", r.agrees) for r in rows]
    out += printed_cycle_findings()
    out += two_cycle_findings()
    out += long_cycle_findings()
    if orbits:
        out += orbit_table_findings(LagOrder.REVERSED)
        std = orbit_table_findings(LagOrder.STANDARD)
        n_std = sum(f.agrees for f in std)
        n_rev = sum(f.agrees for f in out[-len(std):])
        out.append(Finding("orbit experiments, argument order", "equations as written",
                           f"{n_rev} of {len(std)} cells reproduced with z_n and z_(n-1) swapped, "
                           f"{n_std} as written", n_std >= n_rev))
        out += typo_findings()
        out += lyapunov_findings()
        out += fractal_findings()
    return out
