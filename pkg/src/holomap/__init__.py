"""Complex dynamics of three rational second-order recurrences.

``E1``: z_{n+1} = alpha / z_n + beta / z_{n-1}
``E8``: z_{n+1} = alpha + beta z_n / z_{n-1}
``E9``: z_{n+1} = alpha z_{n-1} / z_n + beta
"""

from .chaos import BoxDimEstimate, LyapunovEstimate, OrbitTerminated, box_dimension, lyapunov_max
from .classify import Axis, ClassificationReport, SweepGrid, VerdictKind, classify_orbit, sweep
from .cycles import (Cycle, CycleStability, CycleSystem, InsufficientLength, PeriodDetection, detect_period,
                     find_cycles, monodromy, newton_multistart, two_cycle_closed_form)
from .export import export_orbit, read_csv_points, read_json_orbit
from .maps import (ForbiddenStep, MapKind, MapSpec, Orbit, OrbitStatus, State, StatusKind, iterate, jacobian,
                   reverse_lags, step, transform_orbit_scaling)
from .stability import (CharPoly2, DegenerateParameters, EquilibriumReport, RootPair, StabilityClass,
                        audit_tables, charpoly, equilibria, lemma_predicates, report, solve_quadratic,
                        trinomial_largest_root)
from .svg import PlotKind, PlotSpec, render_plot

__version__ = "0.1.0"
