"""Target regions in the w-plane and the disk-containment radii.

Four regions are supported:

* ``HALF_PLANE_MIN``  -- ``Re w > alpha`` (starlike / convex of order alpha)
* ``HALF_PLANE_MAX``  -- ``Re w < beta``
* ``PARABOLA``        -- ``|w - 1| < Re w``
* ``LEMNISCATE``      -- ``|w**2 - 1| < 1`` restricted to the right lobe

Every predicate is vectorised over numpy arrays of ``w``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

SQRT2 = np.sqrt(2.0)
LEMNISCATE_KNOT = 2.0 * SQRT2 / 3.0
PARABOLA_KNOT = 1.5

#: default width of the "boundary" band used by :func:`classify`
DEFAULT_TOL = 1e-9


class RegionKind(enum.Enum):
    HALF_PLANE_MIN = "halfplane-min"
    HALF_PLANE_MAX = "halfplane-max"
    PARABOLA = "parabola"
    LEMNISCATE = "lemniscate"


@dataclass(frozen=True)
class Region:
    """A target set in the w-plane.

    Use the constructors :meth:`half_plane_min`, :meth:`half_plane_max`,
    :meth:`parabola` and :meth:`lemniscate` rather than building one by hand.
    """

    kind: RegionKind
    alpha: float | None = None
    beta: float | None = None

    def __post_init__(self):
        if self.kind is RegionKind.HALF_PLANE_MIN:
            if self.alpha is None or not 0.0 <= self.alpha < 1.0:
                raise ValueError(f"alpha must lie in [0, 1), got {self.alpha!r}")
            if self.beta is not None:
                raise ValueError("HALF_PLANE_MIN takes no beta")
        elif self.kind is RegionKind.HALF_PLANE_MAX:
            if self.beta is None or not self.beta > 1.0 or not np.isfinite(self.beta):
                raise ValueError(f"beta must be a finite number > 1, got {self.beta!r}")
            if self.alpha is not None:
                raise ValueError("HALF_PLANE_MAX takes no alpha")
        elif self.alpha is not None or self.beta is not None:
            raise ValueError(f"{self.kind.value} carries no parameters")

    @classmethod
    def half_plane_min(cls, alpha: float) -> "Region":
        return cls(RegionKind.HALF_PLANE_MIN, alpha=float(alpha))

    @classmethod
    def half_plane_max(cls, beta: float) -> "Region":
        return cls(RegionKind.HALF_PLANE_MAX, beta=float(beta))

    @classmethod
    def parabola(cls) -> "Region":
        return cls(RegionKind.PARABOLA)

    @classmethod
    def lemniscate(cls) -> "Region":
        return cls(RegionKind.LEMNISCATE)

    @property
    def parameter(self) -> float | None:
        return self.alpha if self.alpha is not None else self.beta

    def __str__(self):
        if self.kind is RegionKind.HALF_PLANE_MIN:
            return f"Re w > {self.alpha:g}"
        if self.kind is RegionKind.HALF_PLANE_MAX:
            return f"Re w < {self.beta:g}"
        if self.kind is RegionKind.PARABOLA:
            return "|w-1| < Re w"
        return "|w^2-1| < 1, Re w > 0"


@dataclass(frozen=True)
class DiskSpec:
    """Closed disk ``|w - center| <= radius`` with a real center."""

    center: float
    radius: float

    def __post_init__(self):
        if not np.isfinite(self.center):
            raise ValueError("disk center must be finite")
        if not self.radius >= 0.0:
            raise ValueError(f"disk radius must be >= 0, got {self.radius!r}")


def margin(region: Region, w):
    """Signed inclusion margin of ``w``: positive inside, zero on the boundary.

    For the lemniscate the raw quantity ``1 - |w^2 - 1|`` is positive on both
    lobes, so it is capped by ``Re w``.  On ``Re w >= 0`` one has
    ``|w^2 - 1| >= |w - 1| >= 1 - Re w``, hence the cap never binds in the
    right half-plane and the margin there is exactly ``1 - |w^2 - 1|``.
    """
    w = np.asarray(w, dtype=complex)
    kind = region.kind
    if kind is RegionKind.HALF_PLANE_MIN:
        out = w.real - region.alpha
    elif kind is RegionKind.HALF_PLANE_MAX:
        out = region.beta - w.real
    elif kind is RegionKind.PARABOLA:
        out = w.real - np.abs(w - 1.0)
    else:
        out = np.minimum(1.0 - np.abs(w * w - 1.0), w.real)
    return out[()] if out.ndim == 0 else out


def contains(region: Region, w):
    """Strict membership, ``margin > 0``."""
    return np.asarray(margin(region, w)) > 0.0


def classify(region: Region, w, tol: float = DEFAULT_TOL):
    """Label points ``'inside'``, ``'boundary'`` or ``'outside'`` using a tolerance band."""
    m = np.asarray(margin(region, w))
    out = np.where(m > tol, "inside", np.where(m < -tol, "outside", "boundary"))
    return out[()] if out.ndim == 0 else out


def lemniscate_disk_radius(a: float) -> float:
    """Largest ``r`` with ``{|w - a| < r}`` inside the lemniscate region, ``0 < a < sqrt 2``."""
    a = float(a)
    if not 0.0 < a < SQRT2:
        raise ValueError(f"center must lie in (0, sqrt 2), got {a!r}")
    if a <= LEMNISCATE_KNOT:
        s = 1.0 - a * a
        return float(np.sqrt(np.sqrt(s) - s))
    return float(SQRT2 - a)


def parabola_disk_radius(a: float) -> float:
    """Largest ``R`` with ``{|w - a| < R}`` inside ``{|w - 1| < Re w}``, ``a > 1/2``."""
    a = float(a)
    if not a > 0.5 or not np.isfinite(a):
        raise ValueError(f"center must exceed 1/2, got {a!r}")
    if a <= PARABOLA_KNOT:
        return a - 0.5
    return float(np.sqrt(2.0 * a - 2.0))


def disk_fit_margin(region: Region, disk: DiskSpec) -> float:
    """Slack ``(largest admissible radius at disk.center) - disk.radius``.

    Positive exactly when :func:`disk_in_region` is true.  Outside the lemma
    domains the lemma radius is continued linearly through zero, which keeps
    the value continuous and negative there; the radius solver relies on that.
    """
    c, rho = disk.center, disk.radius
    kind = region.kind
    if kind is RegionKind.HALF_PLANE_MIN:
        return c - rho - region.alpha
    if kind is RegionKind.HALF_PLANE_MAX:
        return region.beta - c - rho
    if kind is RegionKind.PARABOLA:
        fit = parabola_disk_radius(c) if c > 0.5 else c - 0.5
        return fit - rho
    if c <= 0.0:
        fit = c
    elif c >= SQRT2:
        fit = SQRT2 - c
    else:
        fit = lemniscate_disk_radius(c)
    return fit - rho


def disk_in_region(region: Region, disk: DiskSpec) -> bool:
    """True iff the closed disk lies strictly inside the region.

    Centers outside the lemma domains give ``False`` rather than an error.
    """
    return bool(disk_fit_margin(region, disk) > 0.0)


def lemma_radius(region: Region, a: float) -> float:
    if region.kind is RegionKind.LEMNISCATE:
        return lemniscate_disk_radius(a)
    if region.kind is RegionKind.PARABOLA:
        return parabola_disk_radius(a)
    raise ValueError(f"no containment lemma for {region.kind.value}")


def verify_disk_lemma(region: Region, a: float, n: int = 10_000,
                      stretch: float = 1e-3, floor: float = -1e-12) -> bool:
    """Check containment and tightness of a lemma disk by boundary sampling.

    The circle ``|w - a| = r_a`` must stay in the closed region (margin above
    ``floor``) while the circle of radius ``(1 + stretch) r_a`` must leave it.
    """
    if n < 1000:
        raise ValueError("use at least 1000 boundary samples")
    try:
        radius = lemma_radius(region, a)
    except ValueError:
        return False
    theta = 2.0 * np.pi * np.arange(n) / n
    ring = np.exp(1j * theta)
    inner = margin(region, a + radius * ring)
    outer = margin(region, a + (1.0 + stretch) * radius * ring)
    return bool(inner.min() >= floor and outer.min() < 0.0)


def lemniscate_boundary(n: int = 512) -> np.ndarray:
    """Right lobe ``w = sqrt(2 cos t) exp(i t / 2)``, ``t`` in ``[-pi/2, pi/2]``."""
    t = np.linspace(-np.pi / 2, np.pi / 2, n)
    return np.sqrt(np.clip(2.0 * np.cos(t), 0.0, None)) * np.exp(0.5j * t)


def parabola_boundary(n: int = 512, half_height: float = 3.0) -> np.ndarray:
    """``w = (1 + t^2)/2 + i t`` for ``|t| <= half_height``."""
    t = np.linspace(-half_height, half_height, n)
    return 0.5 * (1.0 + t * t) + 1j * t


def boundary_curve(region: Region, n: int = 512, extent: float = 3.0) -> np.ndarray:
    """A polyline along the region boundary, for plotting."""
    if region.kind is RegionKind.LEMNISCATE:
        return lemniscate_boundary(n)
    if region.kind is RegionKind.PARABOLA:
        return parabola_boundary(n, extent)
    x = region.alpha if region.kind is RegionKind.HALF_PLANE_MIN else region.beta
    return x + 1j * np.linspace(-extent, extent, n)
