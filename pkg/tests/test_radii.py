from math import sqrt

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from radconst.classes import ClassId
from radconst.radii import (
    BOUND,
    CONJECTURE,
    LEM,
    MAX,
    MIN,
    PAR,
    SHARP,
    UncoveredPairError,
    bound_margin,
    conjectured_pairs,
    conjectured_radius,
    covered_pairs,
    disk_at,
    formula_radius,
    is_covered,
    solve_radius,
    target_name,
)
from radconst.regions import Region, RegionKind

F = ClassId


def region(kind, param=None):
    if kind is MIN:
        return Region.half_plane_min(0.0 if param is None else param)
    if kind is MAX:
        return Region.half_plane_max(2.0 if param is None else param)
    return Region(kind)


# printed constants, 5 decimals
PRINTED = [
    (F.F1, LEM, None, 0.10247),
    (F.F1, PAR, None, 0.12311),
    (F.F1, MIN, 0.0, sqrt(5) - 2),
    (F.F2, LEM, None, 0.13009),
    (F.F2, PAR, None, sqrt(10) - 3),
    (F.F3, PAR, None, 0.154701),
    (F.F4, PAR, None, 0.154701),
    (F.F5, MIN, 0.5, 0.236068),
    (F.F5, LEM, None, 3 - 2 * sqrt(2)),
    (F.F6, PAR, None, 0.101021),
    (F.F7, PAR, None, 0.101021),
    (F.F8, PAR, None, 0.171573),
]


@pytest.mark.parametrize("cid,kind,param,value", PRINTED)
def test_printed_constants(cid, kind, param, value):
    assert formula_radius(cid, region(kind, param)).value == pytest.approx(value, abs=1e-5)


def test_special_parameter_values():
    assert formula_radius(F.F1, Region.half_plane_max(2)).value == pytest.approx(sqrt(5) - 2)
    assert formula_radius(F.F5, Region.half_plane_max(2)).value == pytest.approx(1 / 3)
    assert formula_radius(F.F2, Region.half_plane_min(0)).value == pytest.approx(1 / 3)
    assert formula_radius(F.F5, Region.half_plane_min(0)).value == pytest.approx(sqrt(2) - 1)


def test_coverage_counts():
    pairs = covered_pairs()
    assert len(pairs) == 24
    assert sum(formula_radius(c, region(k)).sharp for c, k in pairs) == 19
    assert len(conjectured_pairs()) == 5
    for c, k in conjectured_pairs():
        assert not formula_radius(c, region(k)).sharp
    assert not is_covered(F.F4, Region.lemniscate())
    assert not is_covered(F.F8, Region.half_plane_max(2))


def test_uncovered_pairs_raise():
    with pytest.raises(UncoveredPairError):
        formula_radius(F.F6, Region.lemniscate())
    with pytest.raises(UncoveredPairError):
        solve_radius(F.F7, Region.half_plane_max(3))
    with pytest.raises(UncoveredPairError):
        conjectured_radius(F.F1, Region.lemniscate())
    assert issubclass(UncoveredPairError, KeyError)


def test_provenance_and_names():
    res = formula_radius(F.F1, Region.half_plane_min(0.5))
    assert res.provenance == SHARP and res.target == "S*(0.5)"
    assert formula_radius(F.F5, Region.lemniscate()).provenance == BOUND
    assert conjectured_radius(F.F5, Region.lemniscate()).provenance == CONJECTURE
    assert target_name(F.F6, Region.parabola()) == "UCV"
    assert target_name(F.F8, Region.half_plane_min(0.25)) == "C(0.25)"
    assert target_name(F.F2, Region.half_plane_max(4)) == "M(4)"
    assert target_name(F.F3, Region.lemniscate()) == "S_L"


ALPHAS = np.round(np.arange(0.0, 0.91, 0.1), 10)
BETAS = (1.1, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0)


def _all_targets():
    for c, k in covered_pairs():
        if k is MIN:
            yield from ((c, Region.half_plane_min(a)) for a in ALPHAS)
        elif k is MAX:
            yield from ((c, Region.half_plane_max(b)) for b in BETAS)
        else:
            yield c, Region(k)


@pytest.mark.parametrize("cid,rg", list(_all_targets()), ids=str)
def test_solver_reproduces_formula(cid, rg):
    assert solve_radius(cid, rg) == pytest.approx(formula_radius(cid, rg).value, abs=1e-9)


@given(st.floats(0.0, 0.99), st.sampled_from(list(F)))
def test_solver_agrees_for_any_alpha(alpha, cid):
    rg = Region.half_plane_min(alpha)
    assert solve_radius(cid, rg) == pytest.approx(formula_radius(cid, rg).value, abs=1e-9)


@given(st.floats(1.01, 50.0), st.sampled_from([F.F1, F.F2, F.F3, F.F5]))
def test_solver_agrees_for_any_beta(beta, cid):
    rg = Region.half_plane_max(beta)
    assert solve_radius(cid, rg) == pytest.approx(formula_radius(cid, rg).value, abs=1e-9)


@given(st.floats(0.0, 0.9), st.sampled_from(list(F)))
def test_radius_decreases_with_alpha(alpha, cid):
    a = formula_radius(cid, Region.half_plane_min(alpha)).value
    b = formula_radius(cid, Region.half_plane_min(alpha + 0.05)).value
    assert 0 < b < a < 1


def test_bound_margin_sign_structure():
    rg = Region.lemniscate()
    R = formula_radius(F.F1, rg).value
    assert bound_margin(F.F1, rg, 0.9 * R) > 0 > bound_margin(F.F1, rg, 1.1 * R)
    assert disk_at(F.F1, 0.1).center == 1.0


def test_f2_parabola_needs_the_lower_bound():
    """Without the real-part lower bound only the symmetric disk argument remains."""
    with_lower = solve_radius(F.F2, Region.parabola())
    without = solve_radius(F.F2, Region.parabola(), use_lower=False)
    assert with_lower == pytest.approx(sqrt(10) - 3, abs=1e-12)
    assert without == pytest.approx(formula_radius(F.F3, Region.parabola()).value, abs=1e-12)
    assert without < with_lower


def test_conjectures_sit_above_proven_bounds():
    for c, k in conjectured_pairs():
        for p in ((2.0, 1.5, 4.0) if k is MAX else (None,)):
            rg = region(k, p)
            assert formula_radius(c, rg).value < conjectured_radius(c, rg).value


def test_solver_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        solve_radius(F.F1, Region.parabola(), tol=0.0)


def test_region_kind_aliases():
    assert LEM is RegionKind.LEMNISCATE and PAR is RegionKind.PARABOLA
