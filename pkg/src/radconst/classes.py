"""The eight ratio-defined classes F1..F8, their disk bounds and sample members.

Every member is written as a product of zero-free factors ``B_i**e_i``:

* starlike functional (F1, F2, F3, F5):  ``f(z) = z * prod B_i**e_i``
* convex functional (F4, F6, F7, F8):    ``f'(z) = prod B_i**e_i``

so in both cases the tested functional is ``1 + sum e_i z B_i'/B_i``, which is
how it is evaluated (no differencing of quotients).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .herglotz import (
    LOWER_BOUND_RMAX,
    CaratheodoryFunction,
    as_factor,
    convex_member,
    half_order_logderiv_lower,
    koebe,
    point_mass,
    sample_measure,
    starlike_member,
)
from .regions import DiskSpec

MAX_ATOMS = 8
CHECK_RADIUS = 0.95
CHECK_POINTS = 64
CHECK_TOL = 1e-9

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(128)
_GL_T = 0.5 * (_GL_NODES + 1.0)
_GL_W = 0.5 * _GL_WEIGHTS


class Functional(enum.Enum):
    STARLIKE = "zf'/f"
    CONVEX = "1+zf''/f'"


class ClassId(enum.Enum):
    F1 = ("F1", Functional.STARLIKE, "Re(f/g) > 0", "Re(g/z) > 0")
    F2 = ("F2", Functional.STARLIKE, "Re(f/g) > 0", "Re(g/z) > 1/2")
    F3 = ("F3", Functional.STARLIKE, "|f/g - 1| < 1", "Re(g/z) > 0")
    F4 = ("F4", Functional.CONVEX, "|f'/g' - 1| < 1", "Re g' > 0")
    F5 = ("F5", Functional.STARLIKE, "|f/g - 1| < 1", "g convex")
    F6 = ("F6", Functional.CONVEX, "|f'/g' - 1| < 1", "g univalent")
    F7 = ("F7", Functional.CONVEX, "|f'/g' - 1| < 1", "g starlike")
    F8 = ("F8", Functional.CONVEX, "|f'/g' - 1| < 1", "g convex")

    def __init__(self, label, functional, link, condition):
        self.label = label
        self.functional = functional
        self.link = link
        self.condition = condition

    def __str__(self):
        return self.label

    @classmethod
    def parse(cls, name: str) -> "ClassId":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown class {name!r}; expected one of F1..F8") from None


class MembershipError(RuntimeError):
    """A constructed member failed its defining constraints (an implementation bug)."""


# -- disk bounds ------------------------------------------------------------------

@dataclass(frozen=True)
class RadialDiskBound:
    """``|w - center(r)| <= deviation(r)`` on ``|z| = r``, optionally ``Re w >= lower(r)``."""

    center: Callable[[float], float]
    deviation: Callable[[float], float]
    lower: Callable[[float], float] | None = None
    lower_range: tuple[float, float] | None = None

    def lower_at(self, r: float) -> float | None:
        if self.lower is None:
            return None
        lo, hi = self.lower_range
        return self.lower(r) if lo < r <= hi else None


def _one(r):
    return 1.0


def _f2_lower(r):
    # 1 - |zh'/h| (h in P) + lower bound of Re zp'/p (p in P(1/2))
    return 1.0 - 2.0 * r / (1.0 - r * r) + half_order_logderiv_lower(r)


_BOUNDS = {
    ClassId.F1: RadialDiskBound(_one, lambda r: 4.0 * r / (1.0 - r * r)),
    ClassId.F2: RadialDiskBound(
        _one, lambda r: (3.0 * r + r * r) / (1.0 - r * r),
        lower=_f2_lower, lower_range=(0.0, LOWER_BOUND_RMAX)),
    ClassId.F3: RadialDiskBound(_one, lambda r: r * (3.0 + r) / (1.0 - r * r)),
    ClassId.F5: RadialDiskBound(lambda r: 1.0 / (1.0 - r * r),
                                lambda r: (2.0 * r + r * r) / (1.0 - r * r)),
    ClassId.F6: RadialDiskBound(lambda r: (1.0 + r * r) / (1.0 - r * r),
                                lambda r: (5.0 * r + r * r) / (1.0 - r * r)),
    ClassId.F8: RadialDiskBound(lambda r: (1.0 + r * r) / (1.0 - r * r),
                                lambda r: (3.0 * r + r * r) / (1.0 - r * r)),
}
# F4 is F3 seen through the Alexander transform, F7 is a subclass of F6
_BOUNDS[ClassId.F4] = _BOUNDS[ClassId.F3]
_BOUNDS[ClassId.F7] = _BOUNDS[ClassId.F6]


def radial_bound(class_id: ClassId) -> RadialDiskBound:
    return _BOUNDS[class_id]


def disk_bound(class_id: ClassId, r: float) -> tuple[DiskSpec, float | None]:
    """Disk containing the functional's values on ``|z| = r``, plus the sharper
    lower bound on the real part where one is available."""
    r = float(r)
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r!r}")
    b = _BOUNDS[class_id]
    return DiskSpec(b.center(r), b.deviation(r)), b.lower_at(r)


# -- members ---------------------------------------------------------------------------

class ClassMember:
    """A concrete function of one class, with its comparison function ``g``.

    Parameters
    ----------
    class_id : ClassId
    factors : list of (Factor, int)
        ``f/z`` (starlike classes) or ``f'`` (convex classes) equals
        ``prod value**exponent``.
    components : dict
        The sampled pieces (``p``, ``h``, ``g``) for inspection and reports.
    g, dg : callables
        The comparison function used in the class definition and its derivative.
    """

    def __init__(self, class_id, factors, components, g=None, dg=None, note=""):
        self.class_id = class_id
        self.factors = list(factors)
        self.components = dict(components)
        self._g = g
        self._dg = dg
        self.note = note

    def __repr__(self):
        parts = ", ".join(f"{k}={type(v).__name__}" for k, v in self.components.items())
        return f"ClassMember({self.class_id.label}: {parts})"

    @property
    def functional_kind(self) -> Functional:
        return self.class_id.functional

    def _core(self, z):
        out = np.ones_like(z)
        for factor, e in self.factors:
            out = out * factor.value(z) ** e
        return out

    def _core_logderiv(self, z):
        """``sum e B'/B`` (no division by z)."""
        out = np.zeros_like(z)
        for factor, e in self.factors:
            out = out + e * factor.deriv(z) / factor.value(z)
        return out

    def functional(self, z):
        """``z f'/f`` or ``1 + z f''/f'``, depending on the class."""
        z = np.asarray(z, dtype=complex)
        out = np.ones_like(z)
        for factor, e in self.factors:
            out = out + e * factor.zlogderiv(z)
        return out[()] if out.ndim == 0 else out

    def f(self, z):
        z = np.asarray(z, dtype=complex)
        if self.functional_kind is Functional.STARLIKE:
            out = z * self._core(z)
        else:
            # f(z) = z * int_0^1 f'(t z) dt, Gauss-Legendre on the segment
            out = z * (self._core(z[..., None] * _GL_T) * _GL_W).sum(axis=-1)
        return out[()] if out.ndim == 0 else out

    def df(self, z):
        z = np.asarray(z, dtype=complex)
        if self.functional_kind is Functional.STARLIKE:
            out = self._core(z) * np.asarray(self.functional(z))
        else:
            out = self._core(z)
        return out[()] if out.ndim == 0 else out

    def d2f(self, z):
        if self.functional_kind is not Functional.CONVEX:
            raise NotImplementedError("f'' is only provided for the convex-functional classes")
        z = np.asarray(z, dtype=complex)
        out = self._core(z) * self._core_logderiv(z)
        return out[()] if out.ndim == 0 else out

    def g(self, z):
        if self._g is None:
            raise NotImplementedError(f"{self.class_id.label} members only expose g'")
        return self._g(z)

    def dg(self, z):
        if self._dg is None:
            raise NotImplementedError(f"{self.class_id.label} members only expose g")
        return self._dg(z)

    def constraint_margins(self, z) -> dict[str, np.ndarray]:
        """Both defining constraints as margins (positive = satisfied), from ``f`` and ``g``."""
        z = np.asarray(z, dtype=complex)
        cid = self.class_id
        g_obj = self.components.get("g")
        if cid in (ClassId.F1, ClassId.F2, ClassId.F3, ClassId.F5):
            ratio = self.f(z) / self.g(z)
        else:
            ratio = self.df(z) / self.dg(z)
        if cid in (ClassId.F1, ClassId.F2):
            first = ratio.real
        else:
            first = 1.0 - np.abs(ratio - 1.0)
        if cid in (ClassId.F1, ClassId.F3):
            second = (self.g(z) / z).real
        elif cid is ClassId.F2:
            second = (self.g(z) / z).real - 0.5
        elif cid is ClassId.F4:
            second = self.dg(z).real
        elif cid in (ClassId.F6, ClassId.F7):
            second = np.asarray(g_obj.zlogderiv(z)).real
        else:
            second = np.asarray(g_obj.convexity(z)).real
        return {cid.link: first, cid.condition: second}

    def check_membership(self, r=CHECK_RADIUS, n=CHECK_POINTS, tol=CHECK_TOL):
        z = r * np.exp(2j * np.pi * np.arange(n) / n)
        for name, m in self.constraint_margins(z).items():
            if not np.all(m > -tol):
                raise MembershipError(
                    f"{self.class_id.label} member violates {name}: min margin {m.min():.3e}")
        return self


def eval_functional(m: ClassMember, z):
    return m.functional(z)


def _assemble(class_id, p=None, h=None, g=None, note=""):
    """Wire the sampled pieces into a member of ``class_id``."""
    inv_h = (as_factor(h, "h"), -1) if h is not None else None
    if class_id in (ClassId.F1, ClassId.F2, ClassId.F3):
        e_h = 1 if class_id is not ClassId.F3 else -1
        factors = [(as_factor(p, "p"), 1), (as_factor(h, "h"), e_h)]
        comps = {"p": p, "h": h}
        gfun = lambda z: np.asarray(z, dtype=complex) * p.value(z)  # noqa: E731
        return ClassMember(class_id, factors, comps, g=gfun, note=note)
    if class_id is ClassId.F4:
        factors = [(as_factor(p, "p"), 1), inv_h]
        return ClassMember(class_id, factors, {"p": p, "h": h}, dg=p.value, note=note)
    if class_id is ClassId.F5:
        factors = [(g.over_z_factor(), 1), inv_h]
        return ClassMember(class_id, factors, {"g": g, "h": h}, g=g.g, dg=g.dg, note=note)
    factors = [(g.derivative_factor(), 1), inv_h]
    return ClassMember(class_id, factors, {"g": g, "h": h}, g=g.g, dg=g.dg, note=note)


def _measure(rng):
    k = int(rng.integers(1, MAX_ATOMS + 1))
    return sample_measure(int(rng.integers(2**63 - 1)), k)


def make_member(class_id: ClassId, seed: int) -> ClassMember:
    """Random member of ``class_id``, deterministic per seed, checked at construction."""
    rng = np.random.default_rng(seed)
    note = ""
    p = h = g = None
    if class_id in (ClassId.F1, ClassId.F2, ClassId.F3, ClassId.F4):
        p_order = 0.5 if class_id is ClassId.F2 else 0.0
        h_order = 0.0 if class_id in (ClassId.F1, ClassId.F2) else 0.5
        p = CaratheodoryFunction(_measure(rng), p_order)
        h = CaratheodoryFunction(_measure(rng), h_order)
    else:
        if class_id in (ClassId.F5, ClassId.F8):
            g = convex_member(_measure(rng))
        elif class_id is ClassId.F6 and rng.random() < 0.5:
            g = koebe(2.0 * np.pi * rng.random())
        else:
            g = starlike_member(_measure(rng), 0.0)
        if class_id is ClassId.F6:
            note = "univalent g sampled as starlike functions and rotated Koebe functions"
        h = CaratheodoryFunction(_measure(rng), 0.5)
    return _assemble(class_id, p=p, h=h, g=g, note=note).check_membership()


def extremal_member(class_id: ClassId) -> ClassMember:
    """The extremal pair ``(f0, g0)`` of each class, built from point masses at +-1."""
    plus, minus = point_mass(1.0), point_mass(-1.0)
    h_half = CaratheodoryFunction(minus, 0.5)           # 1/(1+z)
    if class_id is ClassId.F1:
        m = _assemble(class_id, p=CaratheodoryFunction(plus), h=CaratheodoryFunction(plus))
    elif class_id is ClassId.F2:
        m = _assemble(class_id, p=CaratheodoryFunction(plus, 0.5), h=CaratheodoryFunction(plus))
    elif class_id in (ClassId.F3, ClassId.F4):
        m = _assemble(class_id, p=CaratheodoryFunction(plus), h=h_half)
    elif class_id in (ClassId.F5, ClassId.F8):
        m = _assemble(class_id, g=convex_member(plus), h=h_half)
    else:
        m = _assemble(class_id, g=koebe(0.0), h=h_half)
    return m.check_membership()
