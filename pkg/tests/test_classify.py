import numpy as np
import pytest

from holomap.cases import COMPARISON_CASES
from holomap.classify import Axis, SweepGrid, VerdictKind, classify_orbit, sweep
from holomap.maps import MapSpec, State

CMP1, CMP2, CMP3, CMP4 = (case for case, _ in COMPARISON_CASES)


def test_e8_row1_convergent():
    r = classify_orbit(CMP1.spec("E8"), CMP1.state)
    assert r.verdict is VerdictKind.CONVERGENT
    assert abs(r.limit - complex(60, 37)) < 1e-4
    assert r.metrics.final_deviation < 1e-6 * (1 + abs(r.limit))


def test_e1_row3_period_two():
    r = classify_orbit(CMP3.spec("E1"), CMP3.state)
    assert r.verdict is VerdictKind.PERIODIC_CONVERGENT and r.period == 2
    assert np.min(np.abs(r.cycle - complex(6.9614, -10.414))) < 1e-3


def test_e8_row3_unbounded():
    r = classify_orbit(CMP3.spec("E8"), CMP3.state)
    assert r.verdict is VerdictKind.UNBOUNDED and r.step is not None


def test_chaotic_verdict_carries_exponent():
    r = classify_orbit(CMP1.spec("E1"), CMP1.state, lyapunov_steps=20_000)
    assert r.verdict is VerdictKind.CHAOTIC and r.lambda_max > 0.01
    assert r.metrics.lambda_max == r.lambda_max


def test_forbidden_hit_verdict():
    r = classify_orbit(MapSpec("E1", 1, 1), State(1, 0))
    assert r.verdict is VerdictKind.FORBIDDEN_HIT and r.step == 1


def test_undetermined_on_quasiperiodic_orbit():
    # a start near a neutral equilibrium; whatever the verdict, a chaos call
    # must carry a positive exponent
    r = classify_orbit(MapSpec("E9", 1, 1), State(-1.6, 0.62), lyapunov_steps=20_000)
    if r.verdict is VerdictKind.CHAOTIC:
        assert r.lambda_max > 0.01


def test_budget_precondition():
    with pytest.raises(ValueError):
        classify_orbit(CMP1.spec("E8"), CMP1.state, budget=1999)


def test_to_dict_shape():
    d = classify_orbit(CMP1.spec("E8"), CMP1.state).to_dict()
    assert d["verdict"] == "convergent"
    assert d["limit"] == pytest.approx([60.0, 37.0], abs=1e-6)
    assert set(d["initial"]) == {"z0", "z1"}


@pytest.mark.parametrize("case,kind", [(CMP1, "E8"), (CMP2, "E1"), (CMP3, "E1"), (CMP4, "E1"), (CMP4, "E9")])
def test_doubling_budget_keeps_verdict(case, kind):
    a = classify_orbit(case.spec(kind), case.state, budget=10_000)
    b = classify_orbit(case.spec(kind), case.state, budget=20_000)
    assert a.verdict is b.verdict
    if a.verdict is VerdictKind.CONVERGENT:
        assert abs(a.limit - b.limit) < 1e-6
    else:
        assert a.period == b.period
        assert max(np.min(np.abs(b.cycle - z)) for z in a.cycle) < 1e-6


def test_odd_symmetry_of_verdicts():
    spec = CMP3.spec("E1")
    a = classify_orbit(spec, CMP3.state)
    b = classify_orbit(spec, -CMP3.state)
    assert a.verdict is b.verdict
    np.testing.assert_allclose(np.sort_complex(b.cycle), np.sort_complex(-a.cycle), atol=1e-9)


# -- sweeps -----------------------------------------------------------------

def test_sweep_single_cell():
    grid = sweep(SweepGrid(CMP1.spec("E8"), CMP1.state, ()))
    assert grid.raster.shape == () and int(grid.raster) == VerdictKind.CONVERGENT


def test_sweep_cell_equals_standalone():
    spec = CMP1.spec("E8")
    axis = Axis("z0.re", -1, 9, 11)
    grid = sweep(SweepGrid(spec, CMP1.state, (axis,)))
    assert grid.raster.shape == (11,)
    # the last column holds the unmodified z0 = (9, -41)
    assert axis.values[-1] == 9
    alone = classify_orbit(spec, CMP1.state, budget=5000, lyapunov_steps=10_000)
    assert grid.raster[-1] == alone.verdict
    for i in (0, 4):
        s = State(complex(axis.values[i], CMP1.z0.imag), CMP1.z1)
        assert grid.raster[i] == classify_orbit(spec, s, budget=5000, lyapunov_steps=10_000).verdict


def test_sweep_zero_column_is_forbidden():
    # z0 = re z0 on the first axis; its middle value is exactly 0
    axes = (Axis("z0.re", -1, 1, 21), Axis("z1.re", -1, 1, 21))
    grid = sweep(SweepGrid(MapSpec("E1", 1, 1), State(0, 0.5j), axes), budget=2000, lyapunov_steps=2000)
    assert grid.raster.shape == (21, 21) and grid.size == 441
    assert axes[0].values[10] == 0
    assert np.all(grid.raster[10, :] == VerdictKind.FORBIDDEN_HIT)
    assert set(np.unique(grid.raster)) <= {int(v) for v in VerdictKind}


def test_sweep_z0_plane_origin_is_forbidden():
    axes = (Axis("z0.re", -1, 1, 21), Axis("z0.im", -1, 1, 21))
    grid = sweep(SweepGrid(MapSpec("E1", 1, 1), State(0, 1 + 1j), axes), budget=2000, lyapunov_steps=2000)
    assert grid.raster[10, 10] == VerdictKind.FORBIDDEN_HIT


def test_sweep_deterministic_and_parallel_equal():
    axes = (Axis("alpha.re", 0.5, 2, 4), Axis("beta.im", -1, 1, 3))
    base = SweepGrid(MapSpec("E8", 1, 1), State(0.3 + 1j, -0.5), axes)
    a = sweep(base, budget=2000, lyapunov_steps=2000, seed=5)
    b = sweep(base, budget=2000, lyapunov_steps=2000, seed=5)
    c = sweep(base, budget=2000, lyapunov_steps=2000, seed=5, workers=2)
    assert a.raster.tobytes() == b.raster.tobytes() == c.raster.tobytes()


def test_sweep_cap():
    grid = SweepGrid(MapSpec("E1", 1, 1), State(1, 1), (Axis("z0.re", 0, 1, 50), Axis("z0.im", 0, 1, 50)))
    with pytest.raises(ValueError, match="cap"):
        sweep(grid, cap=1000)


def test_axis_validation():
    with pytest.raises(ValueError):
        Axis("gamma.re", 0, 1, 3)
    with pytest.raises(ValueError):
        Axis("z0.re", 0, 1, 0)
