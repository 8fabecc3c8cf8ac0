import math

import numpy as np
import pytest

from holomap.cases import COMPARISON_CASES, FRACTAL_CASES
from holomap.chaos import DegenerateExtent, OrbitTerminated, box_counts, box_dimension, lyapunov_max
from holomap.maps import MapSpec, State, StatusKind, iterate, transform_orbit_scaling
from holomap.stability import charpoly, equilibria, solve_quadratic

from oracles import uniform_square


# -- Lyapunov ---------------------------------------------------------------

def test_lyapunov_positive_chaotic_case():
    case = COMPARISON_CASES[0][0]
    est = lyapunov_max(case.spec("E1"), case.state, steps=20_000)
    assert est.lambda_max > 0.05
    assert est.steps_used == 20_000 and est.transient_skipped == 1000


def test_lyapunov_negative_convergent_case():
    case = COMPARISON_CASES[0][0]
    assert lyapunov_max(case.spec("E8"), case.state, steps=20_000).lambda_max < 0


def _attracting_e8():
    # E8 with alpha = beta: roots of l^2 - l/2 + 1/2 have modulus sqrt(1/2)
    spec = MapSpec("E8", 1 + 0.5j, 1 + 0.5j)
    zbar = equilibria(spec)[0]
    return spec, zbar, math.log(max(solve_quadratic(charpoly(spec)).moduli))


def test_lyapunov_on_fixed_point_equals_log_root_modulus():
    spec, zbar, want = _attracting_e8()
    est = lyapunov_max(spec, State(zbar, zbar), transient=0, steps=5000)
    assert est.lambda_max == pytest.approx(want, abs=1e-3)


def test_lyapunov_converging_orbit_approaches_log_root_modulus():
    spec, zbar, want = _attracting_e8()
    est = lyapunov_max(spec, State(zbar + 0.3, zbar - 0.2j), steps=100_000)
    assert est.lambda_max == pytest.approx(want, abs=1e-2)


@pytest.mark.parametrize("c,tol", [(2, 0.0), (-0.5, 0.0), (1.5 - 0.5j, 1e-3), (0.7j, 1e-3)])
def test_lyapunov_scaling_invariance(c, tol):
    # power-of-two factors scale every float exactly; other factors only
    # agree statistically once rounding has decorrelated the chaotic orbits
    case = COMPARISON_CASES[0][0]
    spec = case.spec("E1")
    scaled, rule = transform_orbit_scaling(spec, c)
    a = lyapunov_max(spec, case.state).lambda_max
    b = lyapunov_max(scaled, rule(case.state)).lambda_max
    assert abs(a - b) <= tol


def test_lyapunov_terminated_orbit():
    with pytest.raises(OrbitTerminated) as exc:
        lyapunov_max(MapSpec("E1", 1, 1), State(1, 0), steps=100)
    assert exc.value.status.kind is StatusKind.FORBIDDEN_HIT and exc.value.status.step == 1
    case = COMPARISON_CASES[2][0]
    with pytest.raises(OrbitTerminated) as exc:
        lyapunov_max(case.spec("E8"), case.state)
    assert exc.value.status.kind is StatusKind.OVERFLOW


def test_lyapunov_history_and_determinism():
    case = COMPARISON_CASES[1][0]
    a = lyapunov_max(case.spec("E8"), case.state, steps=3000, history=True)
    b = lyapunov_max(case.spec("E8"), case.state, steps=3000)
    assert a.lambda_max == b.lambda_max
    assert a.history.shape == (3000,) and a.history[-1] == pytest.approx(a.lambda_max)


def test_lyapunov_bad_arguments():
    with pytest.raises(ValueError):
        lyapunov_max(MapSpec("E1", 1, 1), State(1, 1), steps=0)


# -- box counting -------------------------------------------------------------

def test_box_dimension_uniform_square():
    est = box_dimension(uniform_square(1_000_000), k_min=3, k_max=8)
    assert est.dimension == pytest.approx(2.0, abs=0.05)
    assert len(est.scales) == 6 and est.fit_r2 > 0.99


def test_box_dimension_segment():
    rng = np.random.default_rng(1)
    t = rng.random(200_000)
    est = box_dimension(t * (1 + 2j) + 0.001 * rng.random(t.size), k_min=3, k_max=8)
    assert est.dimension == pytest.approx(1.0, abs=0.05)


def test_box_dimension_single_point():
    est = box_dimension(np.full(2000, 1 + 1j))
    assert est.dimension == 0 and est.fit_r2 == 1


def test_box_dimension_flat_cloud_rejected():
    with pytest.raises(DegenerateExtent):
        box_dimension(np.linspace(0, 1, 2000) + 0j)


def test_box_dimension_preconditions():
    with pytest.raises(ValueError):
        box_dimension(uniform_square(999))
    with pytest.raises(ValueError):
        box_dimension(uniform_square(2000), k_min=1, k_max=8)
    with pytest.raises(ValueError):
        box_dimension(uniform_square(2000), k_min=4, k_max=7)


def test_box_counts_coarsest_grid():
    # diag * 2**-1 cells: a unit square's points fall in at most 2x2 = 4 cells
    pts = uniform_square(5000)
    assert box_counts(pts, 1, 1)[0][1] <= 4


def test_box_dimension_affine_invariance():
    pts = uniform_square(20_000, seed=4) ** 2
    a = box_dimension(pts)
    b = box_dimension(pts * 8 + (3 - 5j))
    assert a.dimension == pytest.approx(b.dimension, abs=1e-6)


def test_fractal_orbit_is_planar_cloud():
    case = FRACTAL_CASES[0]
    o = iterate(case.spec("E1"), case.state, 50_000)
    assert o.status.completed
    est = box_dimension(o.points)
    assert 0 < est.dimension <= 2.0 and len(est.scales) == 7
