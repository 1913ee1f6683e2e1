import math

import numpy as np
import pytest

from radconst.certify import (
    EXIT_TOL,
    Interval,
    ReportConfig,
    build_report,
    circle_min_margin,
    conjecture_probe,
    empirical_radius,
    exit_bracket,
    exit_radius,
    has_conjecture,
    member_pool,
    member_seeds,
    sharpness_check,
    soundness_violations,
)
from radconst.classes import ClassId, extremal_member
from radconst.radii import conjectured_radius, covered_pairs, formula_radius
from radconst.regions import Region, RegionKind

F = ClassId
SMALL = ReportConfig(members=20, grid=64)


def _region(kind):
    if kind is RegionKind.HALF_PLANE_MIN:
        return Region.half_plane_min(0.0)
    if kind is RegionKind.HALF_PLANE_MAX:
        return Region.half_plane_max(2.0)
    return Region(kind)


@pytest.mark.parametrize("cid,kind", [(c, k) for c, k in covered_pairs()
                                      if formula_radius(c, _region(k)).sharp], ids=str)
def test_sharpness(cid, kind):
    at, beyond = sharpness_check(cid, _region(kind))
    assert abs(at) <= 1e-8
    assert beyond < -1e-10


def test_sharpness_rejects_non_sharp():
    with pytest.raises(ValueError):
        sharpness_check(F.F2, Region.parabola())


def test_sharpness_beyond_nan_near_one():
    # M(beta) radius for F1 approaches 1 as beta grows
    rg = Region.half_plane_max(3000.0)
    assert formula_radius(F.F1, rg).value * 1.001 >= 1.0
    at, beyond = sharpness_check(F.F1, rg)
    assert abs(at) < 1e-6 and math.isnan(beyond)


def test_exit_bracket_of_extremal_brackets_sharp_radius():
    rg = Region.lemniscate()
    lo, hi = exit_bracket(extremal_member(F.F1), rg)
    R = formula_radius(F.F1, rg).value
    assert lo <= R <= hi and hi - lo <= EXIT_TOL
    # a member that never leaves reports (cap, inf)
    assert exit_bracket(extremal_member(F.F1), rg, cap=0.05) == Interval(0.05, math.inf)


def test_member_pool_is_deterministic_and_per_class():
    assert member_seeds(F.F1, 5, 0) == member_seeds(F.F1, 5, 0)
    assert member_seeds(F.F1, 5, 0) != member_seeds(F.F2, 5, 0)
    assert member_seeds(F.F1, 5, 0) != member_seeds(F.F1, 5, 1)
    pool = member_pool(F.F3, 4, 0)
    assert len(pool) == 5


@pytest.mark.parametrize("cid,rg", [(F.F1, Region.lemniscate()),
                                    (F.F1, Region.half_plane_min(0.0)),
                                    (F.F5, Region.half_plane_max(2.0))], ids=str)
def test_empirical_interval_brackets_formula(cid, rg):
    lo, hi = empirical_radius(cid, rg, members=50, grid=128, seed=3)
    R = formula_radius(cid, rg).value
    assert lo <= hi
    assert R <= hi + EXIT_TOL
    if formula_radius(cid, rg).sharp:
        assert lo <= R + EXIT_TOL


def test_empirical_radius_guards():
    with pytest.raises(ValueError):
        empirical_radius(F.F1, Region.parabola(), members=10)
    with pytest.raises(ValueError):
        empirical_radius(F.F1, Region.parabola(), grid=16)


def test_soundness_small_pool():
    regions = [Region.lemniscate(), Region.parabola(), Region.half_plane_min(0.25)]
    assert soundness_violations(F.F1, regions, members=30) == []


def test_soundness_detects_overshoot():
    # far beyond the radius the extremal is reported
    bad = soundness_violations(F.F1, [Region.parabola()], members=1, shrink=1.5)
    assert bad and "member 0" in bad[0]


@pytest.mark.parametrize("cid,rg,value", [
    (F.F2, Region.parabola(), 0.171573),
    (F.F3, Region.lemniscate(), 0.142009),
    (F.F5, Region.lemniscate(), 0.198912),
], ids=str)
def test_conjecture_probes(cid, rg, value):
    probe = conjecture_probe(cid, rg)
    assert probe == pytest.approx(value, abs=1e-5)
    assert probe == pytest.approx(conjectured_radius(cid, rg).value, abs=1e-9)
    assert formula_radius(cid, rg).value <= probe


def test_f2_parabola_probe_real_axis_oracle():
    # (1 - 3r)/(1 - r^2) = 1/2  <=>  r^2 - 6r + 1 = 0
    root = 3 - math.sqrt(8)
    assert conjecture_probe(F.F2, Region.parabola()) == pytest.approx(root, abs=1e-12)


def test_probe_rejects_unconjectured_pairs():
    assert not has_conjecture(F.F1, Region.parabola())
    assert has_conjecture(F.F5, Region.half_plane_max(3.0))
    with pytest.raises(KeyError):
        conjecture_probe(F.F1, Region.parabola())


def test_circle_min_margin_and_exit_radius():
    fun = lambda z: 1 + z  # noqa: E731
    rg = Region.half_plane_min(0.5)
    assert circle_min_margin(fun, rg, 0.3) == pytest.approx(0.2, abs=1e-12)
    assert exit_radius(fun, rg) == pytest.approx(0.5, abs=1e-12)
    assert exit_radius(lambda z: 1 + 0 * z, rg) == math.inf


def test_f5_bounded_turning_conjecture_counterexample():
    """A sampled F5 member leaves Re w < 2 before the extremal's exit radius.

    g = z/(1 - x z) and h a three-atom member of P(1/2).  The exit radius lies
    strictly between the proven radius 1/3 and the extremal's 1/(1 + sqrt 2).
    """
    rg = Region.half_plane_max(2.0)
    member = member_pool(F.F5, 49, 0)[49]
    lo, hi = exit_bracket(member, rg, grid=1024)
    assert formula_radius(F.F5, rg).value < lo
    assert hi < conjecture_probe(F.F5, rg) - 1e-3
    assert hi == pytest.approx(0.4115, abs=1e-4)
    for margins in member.constraint_margins(0.99 * np.exp(2j * np.pi * np.arange(512) / 512)).values():
        assert margins.min() > 0


def test_report_config_validation():
    with pytest.raises(ValueError):
        ReportConfig(alphas=(1.0,))
    with pytest.raises(ValueError):
        ReportConfig(betas=(1.0,))
    with pytest.raises(ValueError):
        ReportConfig(tol=-1.0)
    with pytest.raises(ValueError):
        ReportConfig(members=0)


def test_build_report_empty_selection():
    assert build_report([], None, SMALL) == []
    assert build_report([F.F4], [RegionKind.LEMNISCATE], SMALL) == []


def test_build_report_rows_and_determinism():
    a = build_report([F.F1, F.F2], None, SMALL)
    b = build_report([F.F1, F.F2], None, SMALL)
    assert [r.as_row() for r in a] == [r.as_row() for r in b]
    assert [(r.class_id, r.target) for r in a] == [
        ("F1", "S_L"), ("F1", "M(2)"), ("F1", "S*(0)"), ("F1", "S_P"),
        ("F2", "S_L"), ("F2", "M(2)"), ("F2", "S*(0)"), ("F2", "S_P")]
    assert all(r.passed for r in a)
    row = a[-1].as_row()
    assert row["conjecture"] == pytest.approx(3 - math.sqrt(8))
    assert row["formula"] == pytest.approx(math.sqrt(10) - 3)
    assert row["seed"] == 0 and row["version"]


def test_build_report_without_sampling():
    rows = build_report([F.F6], [RegionKind.PARABOLA], ReportConfig(empirical=False))
    assert len(rows) == 1 and rows[0].passed
    assert rows[0].empirical_lo is None and "Herglotz" not in rows[0].notes


def test_build_report_aggregates_failures():
    # an absurdly tight tolerance makes the solver comparison fail without aborting
    rows = build_report([F.F1], [RegionKind.PARABOLA],
                        ReportConfig(tol=1e-300, empirical=False))
    assert len(rows) == 1
    r = rows[0]
    if r.solver_diff > 1e-300:
        assert not r.passed and "solver" in r.failures[0]


def test_f3_bounded_turning_conjecture_counterexample_beta_3():
    """Same mechanism for F3: at beta = 3 the conjectured radius exceeds 1/3 and a
    sampled member (h a four-atom member of P(1/2)) exits first."""
    rg = Region.half_plane_max(3.0)
    member = member_pool(F.F3, 33, 0)[33]
    lo, hi = exit_bracket(member, rg, grid=1024)
    assert formula_radius(F.F3, rg).value < lo
    assert hi < conjectured_radius(F.F3, rg).value - 1e-2
    assert hi == pytest.approx(0.548781, abs=1e-5)
