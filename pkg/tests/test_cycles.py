import numpy as np
import pytest

from holomap.cases import LONG_CYCLE_POINTS, PRINTED_CYCLES, COMPARISON_CASES
from holomap.cycles import (DEDUP_TOL, NEWTON_ACCEPT_TOL, Cycle, CycleStability, CycleSystem,
                            InsufficientLength, canonical_rotation, closed_form_two_cycle_eigenvalues,
                            closed_form_two_cycle_matrix, cycle_residual, cycle_stability, detect_period,
                            find_cycles, map_residual, minimal_period, monodromy, newton_multistart,
                            two_cycle_closed_form)
from holomap.maps import ForbiddenStep, MapKind, MapSpec, State, iterate
from holomap.stability import DegenerateParameters, charpoly, equilibria, solve_quadratic

from oracles import fd_monodromy, raw_step

UNIT_E1 = MapSpec("E1", 1, 1)


def _contains(cycle, z, tol=1e-4):
    return np.min(np.abs(cycle.points - z)) < tol


# -- residual ---------------------------------------------------------------

def test_residual_zero_at_equilibrium():
    spec = MapSpec("E1", 3, 1)
    r, _ = cycle_residual(CycleSystem(spec, 1), [2])
    assert abs(r[0]) < 1e-15


def test_residual_listed_e1_candidate():
    r, _ = cycle_residual(CycleSystem(UNIT_E1, 4), [0.765367j, -1.84776j, -0.765367j, 1.84776j])
    assert np.abs(r).max() < 1e-5


def test_residual_listed_e8_candidate():
    r, _ = cycle_residual(CycleSystem(MapSpec("E8", 1, 1), 3), [1.24698, -1.80194, -0.445042])
    assert np.abs(r).max() < 1e-5


@pytest.mark.parametrize("kind", ["E1", "E8", "E9"])
@pytest.mark.parametrize("d", [1, 2, 3, 5])
def test_residual_jacobian_matches_differences(kind, d):
    rng = np.random.default_rng(d)
    spec = MapSpec(kind, 0.7 - 0.2j, 1.1 + 0.4j)
    z = rng.uniform(0.5, 2, d) * np.exp(2j * np.pi * rng.random(d))
    sys_ = CycleSystem(spec, d)
    _, jac = cycle_residual(sys_, z)
    h = 1e-7
    for k in range(d):
        e = np.zeros(d, dtype=complex)
        e[k] = h
        fd = (cycle_residual(sys_, z + e)[0] - cycle_residual(sys_, z - e)[0]) / (2 * h)
        np.testing.assert_allclose(jac[:, k], fd, atol=1e-6)


def test_residual_forbidden():
    with pytest.raises(ForbiddenStep):
        cycle_residual(CycleSystem(UNIT_E1, 2), [1, 0])


def test_residual_wrong_length():
    with pytest.raises(ValueError):
        cycle_residual(CycleSystem(UNIT_E1, 3), [1, 2])


def test_cycle_system_rejects_zero_period():
    with pytest.raises(ValueError):
        CycleSystem(UNIT_E1, 0)


# -- multistart -------------------------------------------------------------

@pytest.mark.parametrize("d,z", [(4, 0.765367j), (5, 0.309721j), (6, 0.53713j), (7, 0.563218j)])
def test_find_cycles_listed_e1(d, z):
    cycles = find_cycles(CycleSystem(UNIT_E1, d), starts=1000, seed=0)
    assert any(_contains(c, z) for c in cycles)


@pytest.mark.parametrize("kind,d", [("E1", 3), ("E8", 4)])
def test_nonexistence_evidence(kind, d):
    res = newton_multistart(CycleSystem(MapSpec(kind, 1, 1), d), starts=1000, seed=0)
    assert res.cycles == []
    assert res.equilibrium_hits >= 1


def test_e1_period3_only_equilibria():
    res = newton_multistart(CycleSystem(UNIT_E1, 3), starts=200, seed=1)
    eq = sorted(equilibria(UNIT_E1), key=lambda z: z.real)
    for c in res.lower_period_cycles:
        assert c.period == 1
        assert min(abs(c.points[0] - e) for e in eq) < 1e-8


def test_e8_period3_found():
    cycles = find_cycles(CycleSystem(MapSpec("E8", 1, 1), 3), starts=300, seed=0)
    assert any(_contains(c, 1.24698) and _contains(c, -1.80194) for c in cycles)


def test_returned_cycles_invariants():
    for d in (4, 5):
        for c in find_cycles(CycleSystem(UNIT_E1, d), starts=400, seed=2):
            assert c.period == d == len(c.points)
            assert c.residual < NEWTON_ACCEPT_TOL
            # independent re-evaluation with the typed-in map
            for n in range(d):
                nxt = raw_step("E1", 1, 1, c.points[(n - 2) % d], c.points[(n - 1) % d])
                assert abs(nxt - c.points[n]) < 1e-9
            # minimality
            for p in range(1, d):
                if d % p == 0:
                    assert np.abs(np.roll(c.points, -p) - c.points).max() > DEDUP_TOL
            # canonical rotation
            np.testing.assert_array_equal(canonical_rotation(c.points), c.points)


def test_shift_covariance():
    c = find_cycles(CycleSystem(UNIT_E1, 5), starts=400, seed=0)[0]
    o = iterate(UNIT_E1, State(c.points[0], c.points[1]), 15)
    want = np.array([c.points[(k + 2) % 5] for k in range(15)])
    assert np.abs(o.points - want).max() < 1e-9


def test_seeded_determinism():
    a = find_cycles(CycleSystem(UNIT_E1, 6), starts=300, seed=42)
    b = find_cycles(CycleSystem(UNIT_E1, 6), starts=300, seed=42)
    assert len(a) == len(b)
    for x, y in zip(a, b):
        assert x.points.tobytes() == y.points.tobytes()


def test_negation_closure_e1():
    cycles = find_cycles(CycleSystem(UNIT_E1, 5), starts=1000, seed=0)
    for c in cycles:
        neg = canonical_rotation(-c.points)
        assert any(np.abs(neg - o.points).max() < 1e-6 for o in cycles)


def test_multistart_rejects_zero_starts():
    with pytest.raises(ValueError):
        newton_multistart(CycleSystem(UNIT_E1, 2), starts=0)


# -- printed cycle lists ------------------------------------------------------

@pytest.mark.parametrize("pc", [p for p in PRINTED_CYCLES if not (p.kind is MapKind.E8 and p.labeled_period == 6)],
                         ids=lambda p: f"{p.kind.value}-{p.labeled_period}")
def test_printed_cycles_satisfy_map(pc):
    assert map_residual(pc.spec, pc.points) < 1e-4


def test_printed_e8_period6_list_is_not_an_orbit():
    pc = next(p for p in PRINTED_CYCLES if p.kind is MapKind.E8 and p.labeled_period == 6)
    assert map_residual(pc.spec, pc.points) > 1


@pytest.mark.parametrize("labeled", [4, 6, 8])
def test_printed_e9_rows_have_minimal_period_two(labeled):
    pc = next(p for p in PRINTED_CYCLES if p.kind is MapKind.E9 and p.labeled_period == labeled)
    assert minimal_period(pc.points, tol=1e-4) == 2


def test_minimal_period_basic():
    assert minimal_period([1, 2, 1, 2]) == 2
    assert minimal_period([1, 1, 1]) == 1
    assert minimal_period([1, 2, 3]) == 3


def test_canonical_rotation():
    np.testing.assert_array_equal(canonical_rotation([3, 1 + 1j, 1 - 1j]), [1 - 1j, 3, 1 + 1j])


# -- stability of cycles ------------------------------------------------------

def test_two_cycle_closed_form_unit_five():
    (c,) = two_cycle_closed_form(MapSpec("E1", 1, 5))
    assert sorted(c.points.real) == [-2, 2]
    assert 1 / -2 + 5 / 2 == 2
    assert c.stability is CycleStability.REPELLING


def test_two_cycle_closed_form_degenerate():
    with pytest.raises(DegenerateParameters):
        two_cycle_closed_form(MapSpec("E1", 2, 2))


def test_two_cycle_closed_form_alpha_zero():
    (c,) = two_cycle_closed_form(MapSpec("E1", 0, 1))
    assert sorted(c.points.real) == [-1, 1]
    assert map_residual(c.spec, c.points) == 0


def test_two_cycle_closed_form_only_e1():
    with pytest.raises(ValueError):
        two_cycle_closed_form(MapSpec("E8", 1, 5))


def test_two_cycle_monodromy_matches_finite_differences():
    spec = MapSpec("E1", 1, 5)
    got = np.linalg.eigvals(monodromy(spec, [2, -2]))
    want = np.linalg.eigvals(fd_monodromy("E1", 1, 5, [2, -2]))
    assert max(np.abs(want - g).min() for g in got) < 1e-6
    # frozen from the difference oracle: a complex pair of modulus 5/4
    np.testing.assert_allclose(np.abs(want), [1.25, 1.25], atol=1e-6)


def test_closed_form_matrix_and_formula_agree_with_each_other():
    m = closed_form_two_cycle_matrix(1, 5)
    np.testing.assert_allclose(m, [[0.25, 1.25], [1.8125, 0.3125]])
    ev = np.sort(np.linalg.eigvals(m).real)
    formula = np.sort([z.real for z in closed_form_two_cycle_eigenvalues(1, 5)])
    np.testing.assert_allclose(ev, formula, atol=1e-12)
    np.testing.assert_allclose(np.abs(formula)[::-1], [1.786774, 1.224274], atol=1e-6)


def test_closed_form_multipliers_match_jacobian_product():
    # the closed-form 2-cycle eigenvalues are claimed to equal the multipliers
    # of the Jacobian product; they do not (see decisions ledger)
    numeric = np.sort(np.abs(np.linalg.eigvals(monodromy(MapSpec("E1", 1, 5), [2, -2]))))
    closed = np.sort([abs(z) for z in closed_form_two_cycle_eigenvalues(1, 5)])
    np.testing.assert_allclose(numeric, closed, atol=1e-8)


@pytest.mark.parametrize("kind", ["E1", "E8", "E9"])
def test_period_one_multipliers_are_charpoly_roots(kind):
    spec = MapSpec(kind, 0.3 + 1.2j, 2 - 0.5j)
    z = equilibria(spec)[0]
    c = cycle_stability(Cycle(spec, 1, np.array([z]), 0.0))
    np.testing.assert_allclose(c.multiplier_moduli, solve_quadratic(charpoly(spec)).moduli, atol=1e-9)


def test_monodromy_matches_finite_differences_on_found_cycles():
    for c in find_cycles(CycleSystem(UNIT_E1, 4), starts=200, seed=0):
        got = np.sort(np.abs(np.linalg.eigvals(monodromy(UNIT_E1, c.points))))
        want = np.sort(np.abs(np.linalg.eigvals(fd_monodromy("E1", 1, 1, c.points))))
        np.testing.assert_allclose(got, want, rtol=1e-5)


# -- period detection -------------------------------------------------------

def test_detect_long_cycle():
    case = COMPARISON_CASES[3][0]
    o = iterate(case.spec("E1"), case.state, 10_000)
    det = detect_period(o)
    assert det.detected_period == 24
    printed = np.array(LONG_CYCLE_POINTS)
    best = min(np.abs(np.roll(det.limit_cycle, -k) - printed).max() for k in range(24))
    assert best < 1e-2
    assert np.abs(np.roll(printed, -12) + printed).max() < 1e-2


def test_detect_period_two():
    case = COMPARISON_CASES[1][0]
    o = iterate(case.spec("E1"), case.state, 10_000)
    det = detect_period(o)
    assert det.detected_period == 2
    assert np.min(np.abs(det.limit_cycle - complex(10.393, -0.14432))) < 1e-3


def test_detect_constant():
    det = detect_period(np.full(1000, 3 + 1j))
    assert det.detected_period == 1 and det.max_deviation == 0


def test_detect_none_for_irrational_rotation():
    n = np.arange(2000)
    det = detect_period(np.exp(2j * np.pi * n * (np.sqrt(5) - 1) / 2))
    assert det.detected_period is None


def test_detect_synthetic_period():
    base = np.array([1, 2j, -3, 4 - 1j, 0.5, 7])
    det = detect_period(np.tile(base, 400))
    assert det.detected_period == 6


def test_detect_insufficient():
    with pytest.raises(InsufficientLength):
        detect_period(np.ones(100))
    with pytest.raises(InsufficientLength):
        detect_period(iterate(MapSpec("E1", 1, 1), State(1, 0), 10))
