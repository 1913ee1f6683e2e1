"""Numerical certification of the radius constants.

Three kinds of evidence are collected per (class, target) pair:

* sharpness -- the extremal member touches the region boundary at the radius
  and leaves it just beyond;
* Monte-Carlo sweeps -- sampled members never leave the region before the
  proven radius; the result is an interval, never a point estimate;
* conjecture probes -- exit radius of the designated extremal, found by
  minimising the margin over whole circles.
"""
from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from . import __version__
from .classes import ClassId, extremal_member, make_member
from .regions import Region, RegionKind, margin
from .radii import (
    REGION_ORDER,
    UncoveredPairError,
    conjectured_radius,
    formula_radius,
    is_covered,
    solve_radius,
    target_name,
)

log = logging.getLogger(__name__)

#: relative step "just beyond" the radius
BEYOND = 1e-3
SHARP_TOL = 1e-8
BEYOND_TOL = 1e-10
SOLVER_TOL = 1e-9
PROBE_TOL = 1e-5
#: bracket width of per-member exit radii
EXIT_TOL = 1e-7
R_MAX = 0.99

SAMPLING_NOTE = ("members sampled from finite Herglotz measures: "
                 "flat-Dirichlet weights, uniform nodes, 1-8 atoms")


class Interval(NamedTuple):
    lo: float
    hi: float


def circle(r, n):
    return r * np.exp(2j * np.pi * np.arange(n) / n)


def _probe_point(region: Region, r: float) -> complex:
    # upper-type targets are attained on the positive axis, the rest on the negative
    return r if region.kind in (RegionKind.LEMNISCATE, RegionKind.HALF_PLANE_MAX) else -r


def sharpness_check(class_id: ClassId, region: Region, n: int = 4096):
    """Margin of the extremal at the radius and the minimum margin just beyond it.

    Returns ``(margin_at_R, margin_beyond)``; ``margin_beyond`` is ``nan`` when
    ``R (1 + BEYOND) >= 1``.
    """
    res = formula_radius(class_id, region)
    if not res.sharp:
        raise ValueError(f"{class_id.label} {res.target}: radius is not claimed sharp")
    m = extremal_member(class_id)
    R = res.value
    at = float(margin(region, m.functional(_probe_point(region, R))))
    r_out = R * (1.0 + BEYOND)
    if r_out >= 1.0:
        return at, math.nan
    beyond = float(np.min(margin(region, m.functional(circle(r_out, n)))))
    return at, beyond


# -- Monte-Carlo sweeps --------------------------------------------------------------

def member_seeds(class_id: ClassId, count: int, seed: int) -> list[int]:
    """Independent per-class seed stream."""
    ss = np.random.SeedSequence(seed, spawn_key=(list(ClassId).index(class_id),))
    return [int(s) for s in ss.generate_state(count, dtype=np.uint64)]


def member_pool(class_id: ClassId, members: int, seed: int):
    """The extremal member followed by ``members`` random members."""
    pool = [extremal_member(class_id)]
    pool.extend(make_member(class_id, s) for s in member_seeds(class_id, members, seed))
    return pool


def _min_margins(member, region, radii, grid):
    z = np.asarray(radii)[:, None] * np.exp(2j * np.pi * np.arange(grid) / grid)
    return np.min(margin(region, member.functional(z)), axis=1)


def exit_bracket(member, region: Region, grid: int = 256, cap: float = R_MAX,
                 tol: float = EXIT_TOL, sections: int = 32) -> Interval:
    """``(last r inside, first r outside)`` for one member on sampled circles.

    Circles are scanned on a uniform grid up to ``cap`` and the first crossing
    is refined by repeated multisection.  Returns ``(cap, inf)`` when the
    member stays inside up to ``cap``.
    """
    lo, hi = 0.0, float(cap)
    radii = np.linspace(hi / sections, hi, sections)
    bad = np.nonzero(_min_margins(member, region, radii, grid) <= 0.0)[0]
    if bad.size == 0:
        return Interval(hi, math.inf)
    j = bad[0]
    lo, hi = (radii[j - 1] if j else 0.0), radii[j]
    while hi - lo > tol:
        radii = np.linspace(lo, hi, 17)[1:-1]
        bad = np.nonzero(_min_margins(member, region, radii, grid) <= 0.0)[0]
        if bad.size:
            j = bad[0]
            lo, hi = (radii[j - 1] if j else lo), radii[j]
        else:
            lo = radii[-1]
    return Interval(float(lo), float(hi))


def empirical_radii(class_id: ClassId, regions, members: int = 200, grid: int = 256,
                    seed: int = 0, r_max: float = R_MAX, pool=None) -> dict:
    """Empirical radius intervals for several regions over one member pool.

    ``hi`` is the smallest exit radius over the pool, ``lo`` the largest
    sampled radius at which every member is still inside.  Each member is only
    scanned up to the running ``hi``; a member that survives that far cannot
    change either end.
    """
    if members < 1 or grid < 8:
        raise ValueError("need members >= 1 and grid >= 8")
    pool = member_pool(class_id, members, seed) if pool is None else pool
    out = {}
    for region in regions:
        lo, hi = r_max, math.inf
        for m in pool:
            inside, outside = exit_bracket(m, region, grid, min(r_max, hi))
            lo, hi = min(lo, inside), min(hi, outside)
        out[region] = Interval(lo, hi)
    return out


def empirical_radius(class_id: ClassId, region: Region, members: int = 200,
                     grid: int = 256, seed: int = 0) -> Interval:
    if members < 50 or grid < 128:
        raise ValueError("use members >= 50 and grid >= 128")
    return empirical_radii(class_id, [region], members, grid, seed)[region]


def soundness_violations(class_id: ClassId, regions, members: int = 200, grid: int = 256,
                         seed: int = 0, shrink: float = 0.99, pool=None) -> list[str]:
    """Members that leave a region on ``|z| = shrink * R`` (should be none)."""
    pool = member_pool(class_id, members, seed) if pool is None else pool
    bad = []
    for region in regions:
        R = formula_radius(class_id, region).value
        z = circle(shrink * R, grid)
        for i, m in enumerate(pool):
            worst = float(np.min(margin(region, m.functional(z))))
            if not worst > 0.0:
                bad.append(f"{class_id.label} {target_name(class_id, region)} member {i}: "
                           f"margin {worst:.3e} at r = {shrink * R:.6f}")
    return bad


# -- conjecture probes -----------------------------------------------------------------

def circle_min_margin(fun, region: Region, r: float, n: int = 1024) -> float:
    """Minimum of the margin of ``fun`` over ``|z| = r``: grid search, then local refinement."""
    theta = 2.0 * np.pi * np.arange(n) / n
    vals = margin(region, fun(r * np.exp(1j * theta)))
    i = int(np.argmin(vals))
    h = 2.0 * np.pi / n
    res = minimize_scalar(lambda t: float(margin(region, fun(r * np.exp(1j * t)))),
                          bounds=(theta[i] - h, theta[i] + h), method="bounded",
                          options={"xatol": 1e-12})
    return float(min(vals[i], res.fun))


def exit_radius(fun, region: Region, n: int = 1024, r_max: float = R_MAX,
                steps: int = 200) -> float:
    """Largest r such that ``fun`` maps ``|z| = r`` into the region."""
    E = lambda r: circle_min_margin(fun, region, r, n)  # noqa: E731
    prev = 0.0
    for r in np.linspace(r_max / steps, r_max, steps):
        if E(r) < 0.0:
            return float(brentq(E, prev, r, xtol=1e-14, rtol=1e-15)) if prev else float(r)
        prev = r
    return math.inf


def conjecture_probe(class_id: ClassId, region: Region, n: int = 1024) -> float:
    """Exit radius of the designated extremal for a conjectured pair (an upper bound
    for the sharp radius)."""
    conjectured_radius(class_id, region)  # rejects pairs without a conjecture
    m = extremal_member(class_id)
    return exit_radius(m.functional, region, n)


def has_conjecture(class_id: ClassId, region: Region) -> bool:
    try:
        conjectured_radius(class_id, region)
    except UncoveredPairError:
        return False
    return True


# -- reports ----------------------------------------------------------------------------

@dataclass(frozen=True)
class ReportConfig:
    alphas: tuple = (0.0,)
    betas: tuple = (2.0,)
    members: int = 200
    grid: int = 256
    seed: int = 0
    tol: float = SOLVER_TOL
    empirical: bool = True

    def __post_init__(self):
        if any(not 0.0 <= a < 1.0 for a in self.alphas):
            raise ValueError("alpha values must lie in [0, 1)")
        if any(not b > 1.0 for b in self.betas):
            raise ValueError("beta values must exceed 1")
        if self.members < 1 or self.grid < 8:
            raise ValueError("need members >= 1 and grid >= 8")
        if not self.tol > 0.0:
            raise ValueError("tol must be positive")


@dataclass
class CertificationReport:
    class_id: str
    target: str
    region: str
    parameter: float | None
    formula: float
    sharp: bool
    provenance: str
    closed_form: str
    solver: float | None = None
    solver_diff: float | None = None
    margin_at_R: float | None = None
    margin_beyond: float | None = None
    empirical_lo: float | None = None
    empirical_hi: float | None = None
    conjecture: float | None = None
    probe: float | None = None
    conjecture_status: str = ""
    members: int = 0
    grid: int = 0
    seed: int = 0
    tol: float = SOLVER_TOL
    version: str = __version__
    notes: str = ""
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_row(self) -> dict:
        row = asdict(self)
        row["failures"] = "; ".join(self.failures)
        row["passed"] = self.passed
        return row


def regions_for(kind: RegionKind, config: ReportConfig):
    if kind is RegionKind.HALF_PLANE_MIN:
        return [Region.half_plane_min(a) for a in config.alphas]
    if kind is RegionKind.HALF_PLANE_MAX:
        return [Region.half_plane_max(b) for b in config.betas]
    return [Region(kind)]


def _certify_pair(class_id, region, config, interval) -> CertificationReport:
    res = formula_radius(class_id, region)
    rep = CertificationReport(
        class_id.label, res.target, region.kind.value, region.parameter, res.value,
        res.sharp, res.provenance, res.closed_form, members=config.members,
        grid=config.grid, seed=config.seed, tol=config.tol)
    notes = [SAMPLING_NOTE] if config.empirical else []
    if class_id is ClassId.F6:
        notes.append("univalent g restricted to starlike and rotated Koebe functions")
    fail = rep.failures

    def attempt(label, fn):
        try:
            fn()
        except Exception as exc:  # aggregate, never abort the batch
            log.exception("%s %s: %s failed", class_id.label, res.target, label)
            fail.append(f"{label} raised {type(exc).__name__}: {exc}")

    def solver():
        rep.solver = solve_radius(class_id, region)
        rep.solver_diff = abs(rep.solver - res.value)
        if not rep.solver_diff <= config.tol:
            fail.append(f"solver differs from formula by {rep.solver_diff:.3e}")

    def sharpness():
        at, beyond = sharpness_check(class_id, region)
        rep.margin_at_R, rep.margin_beyond = at, beyond
        if not abs(at) <= SHARP_TOL:
            fail.append(f"extremal margin at R is {at:.3e}")
        if not math.isnan(beyond) and not beyond < -BEYOND_TOL:
            fail.append(f"extremal does not exit beyond R (margin {beyond:.3e})")

    def empirical():
        lo, hi = interval
        rep.empirical_lo, rep.empirical_hi = lo, hi
        if not lo <= hi:
            fail.append("empirical interval is empty")
        if not res.value <= hi + EXIT_TOL:
            fail.append(f"a sampled member exits at {hi:.9f} < proven radius")
        if res.sharp and not lo <= res.value + EXIT_TOL:
            fail.append(f"all members stay inside beyond the sharp radius ({lo:.9f})")

    def probe():
        rep.conjecture = conjectured_radius(class_id, region).value
        rep.probe = conjecture_probe(class_id, region)
        if not abs(rep.probe - rep.conjecture) <= PROBE_TOL:
            fail.append(f"probe {rep.probe:.9f} misses conjectured {rep.conjecture:.9f}")
        if not res.value <= rep.probe + 1e-12:
            fail.append("probe lies below the proven radius")
        # a member exiting before the probe refutes the conjecture, not the code
        if interval is None:
            rep.conjecture_status = "not sampled"
        elif rep.probe <= interval.hi + EXIT_TOL:
            rep.conjecture_status = "consistent with samples"
        else:
            rep.conjecture_status = (f"counterexample: a sampled member exits at "
                                     f"{interval.hi:.9f} < probe")

    attempt("solver", solver)
    if res.sharp:
        attempt("sharpness", sharpness)
    if interval is not None:
        attempt("empirical", empirical)
    if has_conjecture(class_id, region):
        attempt("probe", probe)
    rep.notes = "; ".join(notes)
    return rep


def build_report(classes=None, regions=None, config: ReportConfig | None = None):
    """Certify every covered (class, region) pair in the selection.

    ``classes`` and ``regions`` are iterables of :class:`ClassId` and
    :class:`RegionKind`; ``None`` selects all.  Rows come in class order, then
    target order, then parameter order.  Failures are collected per row.
    """
    config = config or ReportConfig()
    classes = list(ClassId) if classes is None else list(classes)
    kinds = list(REGION_ORDER) if regions is None else list(regions)
    rows = []
    for class_id in ClassId:
        if class_id not in classes:
            continue
        targets = [rg for k in REGION_ORDER if k in kinds
                   for rg in regions_for(k, config) if is_covered(class_id, rg)]
        if not targets:
            continue
        intervals = {}
        if config.empirical:
            try:
                intervals = empirical_radii(class_id, targets, config.members,
                                            config.grid, config.seed)
            except Exception as exc:
                log.exception("sampling failed for %s", class_id.label)
                for rg in targets:
                    rep = _certify_pair(class_id, rg, config, None)
                    rep.failures.append(f"sampling raised {type(exc).__name__}: {exc}")
                    rows.append(rep)
                continue
        for rg in targets:
            rows.append(_certify_pair(class_id, rg, config, intervals.get(rg)))
    return rows
