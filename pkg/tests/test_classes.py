import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radconst.classes import (
    ClassId,
    Functional,
    MembershipError,
    _assemble,
    disk_bound,
    eval_functional,
    extremal_member,
    make_member,
    radial_bound,
)
from radconst.herglotz import CaratheodoryFunction, sample_measure

# hand-derived functionals of the extremal pairs
EXTREMAL = {
    ClassId.F1: lambda z: (1 + 4 * z - z * z) / (1 - z * z),
    ClassId.F2: lambda z: (1 + 3 * z) / (1 - z * z),
    ClassId.F3: lambda z: (1 + 3 * z - 2 * z * z) / (1 - z * z),
    ClassId.F4: lambda z: (1 + 3 * z - 2 * z * z) / (1 - z * z),
    ClassId.F5: lambda z: (1 + 2 * z - z * z) / (1 - z * z),
    ClassId.F6: lambda z: (1 + 5 * z) / (1 - z * z),
    ClassId.F7: lambda z: (1 + 5 * z) / (1 - z * z),
    ClassId.F8: lambda z: (1 + 3 * z) / (1 - z * z),
}

R_GRID = (0.05, 0.1, 0.2, 0.3, 0.45, 0.6, 0.8)


def _ring(r, n=128):
    return r * np.exp(2j * np.pi * np.arange(n) / n)


def test_parse_and_labels():
    assert ClassId.parse("f5") is ClassId.F5
    assert str(ClassId.F7) == "F7"
    with pytest.raises(ValueError):
        ClassId.parse("F9")
    starlike = {c for c in ClassId if c.functional is Functional.STARLIKE}
    assert starlike == {ClassId.F1, ClassId.F2, ClassId.F3, ClassId.F5}


@pytest.mark.parametrize("cid", list(ClassId))
def test_extremal_functional_closed_form(cid):
    z = _ring(0.7, 64)
    assert np.allclose(extremal_member(cid).functional(z), EXTREMAL[cid](z), atol=1e-13)


@pytest.mark.parametrize("cid", list(ClassId))
@pytest.mark.parametrize("r", [0.1, 0.3, 0.6])
def test_extremal_saturates_disk_bound(cid, r):
    disk, _ = disk_bound(cid, r)
    w = extremal_member(cid).functional(np.array([r, -r]))
    assert np.max(np.abs(w - disk.center)) == pytest.approx(disk.radius, rel=1e-12)


@pytest.mark.parametrize("cid", list(ClassId))
def test_functional_normalised_and_matches_differences(cid):
    m = make_member(cid, 1234)
    assert eval_functional(m, 0.0) == pytest.approx(1.0, abs=1e-14)
    z = 0.35 * np.exp(1j * np.linspace(0.1, 6.0, 9))
    h = 1e-6
    if cid.functional is Functional.STARLIKE:
        df = (m.f(z + h) - m.f(z - h)) / (2 * h)
        ref = z * df / m.f(z)
    else:
        d2f = (m.df(z + h) - m.df(z - h)) / (2 * h)
        ref = 1 + z * d2f / m.df(z)
        assert np.allclose(m.d2f(z), d2f, rtol=1e-7, atol=1e-7)
    assert np.allclose(m.functional(z), ref, rtol=1e-7, atol=1e-7)
    # f is normalised
    assert abs(m.f(1e-8) / 1e-8 - 1.0) < 1e-6


@pytest.mark.parametrize("cid", [ClassId.F4, ClassId.F6, ClassId.F8])
def test_convex_class_f_is_antiderivative(cid):
    m = make_member(cid, 77)
    z = np.array([0.3 + 0.2j, -0.5, 0.6j])
    h = 1e-6
    assert np.allclose((m.f(z + h) - m.f(z - h)) / (2 * h), m.df(z), rtol=1e-8)


def test_alexander_duality_f3_f4():
    """Same sampled (p, h): z f4' equals f3, so the two functionals coincide."""
    for seed in range(10):
        m3, m4 = make_member(ClassId.F3, seed), make_member(ClassId.F4, seed)
        z = _ring(0.6, 32)
        assert np.allclose(m3.f(z), z * m4.df(z), atol=1e-12)
        assert np.allclose(m3.functional(z), m4.functional(z), atol=1e-12)


@pytest.mark.parametrize("cid", list(ClassId))
def test_sampled_members_satisfy_the_disk_bound(cid):
    """Domination: every sampled functional value lies in the class disk."""
    for seed in range(200):
        m = make_member(cid, seed)
        for r in R_GRID:
            disk, lower = disk_bound(cid, r)
            w = m.functional(_ring(r, 64))
            assert np.max(np.abs(w - disk.center)) <= disk.radius * (1 + 1e-10), (seed, r)
            if lower is not None:
                assert np.min(w.real) >= lower - 1e-10, (seed, r)


def test_f2_lower_bound_is_sharper_than_disk():
    b = radial_bound(ClassId.F2)
    for r in (0.1, 0.2, 0.3, 0.4):
        disk, lower = disk_bound(ClassId.F2, r)
        assert lower > disk.center - disk.radius
    assert disk_bound(ClassId.F2, 0.9)[1] is None
    assert b.lower_at(0.2) == pytest.approx((1 - 0.6) / (1 - 0.04))


def test_disk_bound_domain():
    with pytest.raises(ValueError):
        disk_bound(ClassId.F1, 1.0)
    with pytest.raises(ValueError):
        disk_bound(ClassId.F1, 0.0)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(list(ClassId)), st.integers(0, 2**63 - 1))
def test_members_deterministic_and_valid(cid, seed):
    a, b = make_member(cid, seed), make_member(cid, seed)
    z = _ring(0.5, 16)
    assert np.array_equal(a.functional(z), b.functional(z))
    for margins in a.constraint_margins(_ring(0.9, 64)).values():
        assert np.all(margins > -1e-9)


def test_membership_violation_detected():
    # F3 needs h in P(1/2); an order-0 point mass breaks the link condition
    p = CaratheodoryFunction(sample_measure(0, 2))
    h = CaratheodoryFunction(sample_measure(1, 1), 0.0)
    with pytest.raises(MembershipError):
        _assemble(ClassId.F3, p=p, h=h).check_membership()


def test_accessor_errors():
    m = make_member(ClassId.F4, 0)
    with pytest.raises(NotImplementedError):
        m.g(0.1)
    with pytest.raises(NotImplementedError):
        make_member(ClassId.F1, 0).d2f(0.1)
    assert "F4" in repr(m)
