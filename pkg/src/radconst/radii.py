"""Radius constants: closed forms and an independent bisection solver.

:func:`formula_radius` evaluates the printed closed forms.  :func:`solve_radius`
recomputes the same numbers from the disk bounds of :mod:`radconst.classes`
and the region lemmas of :mod:`radconst.regions`, so every constant has two
independent routes.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

from scipy.optimize import bisect

from .classes import ClassId, Functional, disk_bound
from .regions import DiskSpec, Region, RegionKind, disk_fit_margin

MIN, MAX = RegionKind.HALF_PLANE_MIN, RegionKind.HALF_PLANE_MAX
PAR, LEM = RegionKind.PARABOLA, RegionKind.LEMNISCATE

SHARP = "proven-sharp"
BOUND = "proven-bound"
CONJECTURE = "conjecture"


class UncoveredPairError(KeyError):
    """The (class, region) combination has no radius result."""


class RadiusError(ArithmeticError):
    """The bound margin has no sign change in (0, 1): the radius would be 0 or 1."""


@dataclass(frozen=True)
class RadiusResult:
    class_id: ClassId
    region: Region
    value: float
    sharp: bool
    provenance: str
    closed_form: str

    @property
    def target(self) -> str:
        return target_name(self.class_id, self.region)


def target_name(class_id: ClassId, region: Region) -> str:
    """Conventional name of the property, e.g. ``S*(0.5)`` or ``UCV``."""
    convex = class_id.functional is Functional.CONVEX
    kind = region.kind
    if kind is MIN:
        return f"{'C' if convex else 'S*'}({region.alpha:g})"
    if kind is PAR:
        return "UCV" if convex else "S_P"
    if kind is MAX:
        return f"M({region.beta:g})"
    return "S_L"


_S2, _S3 = sqrt(2.0), sqrt(3.0)
_PAR_F3 = (2.0 * _S3 - 3.0) / 3.0
_SL_F2 = (4.0 - 2.0 * _S2) / (_S2 * (sqrt(17.0 - 4.0 * _S2) + 3.0))


def _m_f2(b):
    return 2.0 * (b - 1.0) / (3.0 + sqrt(9.0 + 4.0 * b * (b - 1.0)))


# (class, region kind) -> (value(parameter), sharp, closed form)
_FORMULAS = {
    (ClassId.F1, LEM): (lambda _: (_S2 - 1.0) / (2.0 + sqrt(7.0 - 2.0 * _S2)), True,
                        "(sqrt(2)-1)/(2+sqrt(7-2*sqrt(2)))"),
    (ClassId.F1, MAX): (lambda b: (b - 1.0) / (2.0 + sqrt(4.0 + (b - 1.0) ** 2)), True,
                        "(beta-1)/(2+sqrt(4+(beta-1)^2))"),
    (ClassId.F1, MIN): (lambda a: (1.0 - a) / (2.0 + sqrt(5.0 + a * a - 2.0 * a)), True,
                        "(1-alpha)/(2+sqrt(5+alpha^2-2*alpha))"),
    (ClassId.F1, PAR): (lambda _: 1.0 / (4.0 + sqrt(17.0)), True, "1/(4+sqrt(17))"),
    (ClassId.F2, LEM): (lambda _: _SL_F2, True,
                        "(4-2*sqrt(2))/(sqrt(2)*(sqrt(17-4*sqrt(2))+3))"),
    (ClassId.F2, MAX): (_m_f2, True, "2(beta-1)/(3+sqrt(9+4*beta*(beta-1)))"),
    (ClassId.F2, MIN): (lambda a: 2.0 * (1.0 - a) / (3.0 + sqrt(9.0 - 4.0 * a + 4.0 * a * a)),
                        True, "2(1-alpha)/(3+sqrt(9-4*alpha+4*alpha^2))"),
    (ClassId.F2, PAR): (lambda _: sqrt(10.0) - 3.0, False, "sqrt(10)-3 (lower bound)"),
    (ClassId.F3, LEM): (lambda _: _SL_F2, False,
                        "(4-2*sqrt(2))/(sqrt(2)*(sqrt(17-4*sqrt(2))+3))"),
    (ClassId.F3, MAX): (_m_f2, False, "2(beta-1)/(3+sqrt(9+4*beta*(beta-1)))"),
    (ClassId.F3, MIN): (lambda a: 2.0 * (1.0 - a) / (3.0 + sqrt(9.0 + 4.0 * (2.0 - a) * (1.0 - a))),
                        True, "2(1-alpha)/(3+sqrt(9+4*(2-alpha)*(1-alpha)))"),
    (ClassId.F3, PAR): (lambda _: _PAR_F3, True, "(2*sqrt(3)-3)/3"),
    (ClassId.F4, MIN): (lambda a: 2.0 * (1.0 - a) / (3.0 + sqrt(9.0 + 4.0 * (a - 2.0) * (a - 1.0))),
                        True, "2(1-alpha)/(3+sqrt(9+4*(alpha-2)*(alpha-1)))"),
    (ClassId.F4, PAR): (lambda _: _PAR_F3, True, "(2*sqrt(3)-3)/3"),
    (ClassId.F5, MIN): (lambda a: (1.0 - a) / (1.0 + sqrt(2.0 + a * a - 2.0 * a)), True,
                        "(1-alpha)/(1+sqrt(2+alpha^2-2*alpha))"),
    (ClassId.F5, PAR): (lambda _: 1.0 / (sqrt(5.0) + 2.0), True, "1/(sqrt(5)+2)"),
    (ClassId.F5, LEM): (lambda _: 3.0 - 2.0 * _S2, False, "3-2*sqrt(2)"),
    (ClassId.F5, MAX): (lambda b: (b - 1.0) / (1.0 + b), False, "(beta-1)/(1+beta)"),
    (ClassId.F6, MIN): (lambda a: 2.0 * (1.0 - a) / (5.0 + sqrt(25.0 + 4.0 * a * (a - 1.0))),
                        True, "2(1-alpha)/(5+sqrt(25+4*alpha*(alpha-1)))"),
    (ClassId.F6, PAR): (lambda _: 5.0 - 2.0 * sqrt(6.0), True, "5-2*sqrt(6)"),
    (ClassId.F8, MIN): (lambda a: 2.0 * (1.0 - a) / (3.0 + sqrt(9.0 + 4.0 * a * (a - 1.0))),
                        True, "2(1-alpha)/(3+sqrt(9+4*alpha*(alpha-1)))"),
    (ClassId.F8, PAR): (lambda _: 3.0 - 2.0 * _S2, True, "3-2*sqrt(2)"),
}
_FORMULAS[ClassId.F7, MIN] = _FORMULAS[ClassId.F6, MIN]
_FORMULAS[ClassId.F7, PAR] = _FORMULAS[ClassId.F6, PAR]

_CONJECTURES = {
    (ClassId.F2, PAR): (lambda _: 3.0 - 2.0 * _S2, "3-2*sqrt(2)"),
    (ClassId.F3, LEM): (lambda _: 1.5 + 3.0 / (2.0 * _S2) - 0.5 * sqrt(13.5 + 7.0 * _S2),
                        "3/2+3/(2*sqrt(2))-sqrt(27/2+7*sqrt(2))/2"),
    (ClassId.F3, MAX): (lambda b: 2.0 * (b - 1.0) / (3.0 + sqrt(9.0 + 4.0 * (b - 1.0) * (b - 2.0))),
                        "2(beta-1)/(3+sqrt(9+4*(beta-1)*(beta-2)))"),
    (ClassId.F5, LEM): (lambda _: -1.0 - _S2 + sqrt(2.0 * (2.0 + _S2)),
                        "-1-sqrt(2)+sqrt(2*(2+sqrt(2)))"),
    (ClassId.F5, MAX): (lambda b: (b - 1.0) / (1.0 + sqrt(b * b + 2.0 - 2.0 * b)),
                        "(beta-1)/(1+sqrt(beta^2+2-2*beta))"),
}

#: region kinds in table order
REGION_ORDER = (LEM, MAX, MIN, PAR)


def covered_pairs():
    """All (class, region kind) pairs with a proven radius, in stable order."""
    return [(c, k) for c in ClassId for k in REGION_ORDER if (c, k) in _FORMULAS]


def conjectured_pairs():
    return [(c, k) for c in ClassId for k in REGION_ORDER if (c, k) in _CONJECTURES]


def is_covered(class_id: ClassId, region: Region) -> bool:
    return (class_id, region.kind) in _FORMULAS


def _lookup(table, class_id, region, what):
    try:
        return table[class_id, region.kind]
    except KeyError:
        raise UncoveredPairError(
            f"no {what} radius for {class_id.label} with target {region}") from None


def formula_radius(class_id: ClassId, region: Region) -> RadiusResult:
    fn, sharp, form = _lookup(_FORMULAS, class_id, region, "proven")
    return RadiusResult(class_id, region, fn(region.parameter), sharp,
                        SHARP if sharp else BOUND, form)


def conjectured_radius(class_id: ClassId, region: Region) -> RadiusResult:
    fn, form = _lookup(_CONJECTURES, class_id, region, "conjectured")
    return RadiusResult(class_id, region, fn(region.parameter), True, CONJECTURE, form)


def bound_margin(class_id: ClassId, region: Region, r: float, use_lower: bool = True) -> float:
    """Slack of the sufficient condition "the bound at radius r lies in the region".

    Positive iff the disk bound (together with the lower bound on the real part,
    when the class has one) certifies the region at ``r``.
    """
    disk, lower = disk_bound(class_id, r)
    slack = disk_fit_margin(region, disk)
    if lower is None or not use_lower:
        return slack
    if region.kind is MIN:
        return lower - region.alpha
    if region.kind is PAR:
        # |w - 1| <= rho + |c - 1| and Re w >= lower give |w - 1| < Re w
        return max(slack, lower - disk.radius - abs(disk.center - 1.0))
    return slack


def solve_radius(class_id: ClassId, region: Region, tol: float = 1e-13,
                 use_lower: bool = True) -> float:
    """Largest r in (0, 1) at which the class bound certifies the region, by bisection."""
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    _lookup(_FORMULAS, class_id, region, "proven")

    def g(r):
        return bound_margin(class_id, region, r, use_lower)

    lo, hi = 1e-12, 1.0 - 1e-12
    if not g(lo) > 0.0:
        raise RadiusError(f"{class_id.label}/{region}: bound fails immediately, radius is 0")
    if not g(hi) < 0.0:
        raise RadiusError(f"{class_id.label}/{region}: bound never fails, radius is 1")
    return float(bisect(g, lo, hi, xtol=tol, rtol=1e-15, maxiter=400))


def disk_at(class_id: ClassId, r: float) -> DiskSpec:
    return disk_bound(class_id, r)[0]
