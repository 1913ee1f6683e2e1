"""Finite-atom Herglotz representation of functions with positive real part.

A probability measure with atoms ``(w_k, x_k)`` on the unit circle defines

    q(z) = sum_k w_k (1 + x_k z) / (1 - x_k z),   Re q > 0,  q(0) = 1,

and ``p = alpha + (1 - alpha) q`` belongs to ``P(alpha)``.  From the same
measure we build starlike functions (``z g'/g = p``) and convex functions
(``1 + z g''/g' = q``), all with closed-form derivatives.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: |p(z)| below this is treated as a zero of the denominator
POLE_TOL = 1e-14
#: evaluation bound for series-based convex functions
CONVEX_RMAX = 0.99
#: absolute tail bound used to pick the series truncation degree
SERIES_TAIL = 1e-15
#: upper end of the range of the lower bound on Re zp'/p for p in P(1/2)
LOWER_BOUND_RMAX = float(np.sqrt(8.0 * np.sqrt(2.0) - 11.0))


class NearPoleError(ZeroDivisionError):
    """A logarithmic derivative was requested where its denominator vanishes."""


def _as_disk_points(z, rmax=1.0, closed=False):
    z = np.asarray(z, dtype=complex)
    r = np.abs(z)
    # closed bounds allow for rounding in r * exp(i t)
    bad = r > rmax * (1.0 + 1e-12) if closed else r >= rmax
    if np.any(bad):
        raise ValueError(f"points must satisfy |z| {'<=' if closed else '<'} {rmax}")
    return z


def _out(a):
    return a[()] if a.ndim == 0 else a


@dataclass(frozen=True, eq=False)
class HerglotzMeasure:
    """Discrete probability measure on the unit circle."""

    weights: np.ndarray
    nodes: np.ndarray

    def __post_init__(self):
        w = np.atleast_1d(np.asarray(self.weights, dtype=float)).copy()
        x = np.atleast_1d(np.asarray(self.nodes, dtype=complex)).copy()
        if w.ndim != 1 or w.shape != x.shape or w.size == 0:
            raise ValueError("need matching 1-d arrays of weights and nodes, k >= 1")
        if np.any(w <= 0.0):
            raise ValueError("weights must be positive")
        if abs(w.sum() - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1, got {w.sum()!r}")
        if np.any(np.abs(np.abs(x) - 1.0) > 1e-12):
            raise ValueError("nodes must be unimodular")
        w.flags.writeable = False
        x.flags.writeable = False
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "nodes", x)

    @property
    def size(self) -> int:
        return self.weights.size

    def __eq__(self, other):
        if not isinstance(other, HerglotzMeasure):
            return NotImplemented
        return (np.array_equal(self.weights, other.weights)
                and np.array_equal(self.nodes, other.nodes))

    def __hash__(self):
        return hash((self.weights.tobytes(), self.nodes.tobytes()))

    def moments(self, n: int) -> np.ndarray:
        """``s_j = sum_k w_k x_k**j`` for ``j = 0..n``."""
        j = np.arange(n + 1)
        return (self.weights[:, None] * self.nodes[:, None] ** j).sum(axis=0)

    def _atoms(self, z):
        # broadcast atoms along a trailing axis
        x = self.nodes.reshape((1,) * z.ndim + (-1,))
        w = self.weights.reshape((1,) * z.ndim + (-1,))
        return w, x, z[..., None]

    def half_plane_sum(self, z):
        """``sum w x z / (1 - x z)`` and its derivative; ``q = 1 + 2 * first``."""
        w, x, zz = self._atoms(z)
        d = 1.0 - x * zz
        return (w * x * zz / d).sum(axis=-1), (w * x / (d * d)).sum(axis=-1)

    def log_factor(self, z, exponent_scale):
        """``S = sum c_k log(1 - x_k z)`` with ``c_k = -exponent_scale * w_k``, and ``S'``.

        ``Re(1 - x z) > 0`` on the open disk, so the principal logarithm is
        continuous there; this is checked rather than assumed.
        """
        w, x, zz = self._atoms(z)
        d = 1.0 - x * zz
        if np.any(d.real <= 0.0):
            raise ValueError("1 - x z left the right half-plane; |z| < 1 violated")
        c = -exponent_scale * w
        return (c * np.log(d)).sum(axis=-1), (-c * x / d).sum(axis=-1)


def sample_measure(seed: int, k: int) -> HerglotzMeasure:
    """Random measure: flat-Dirichlet weights and uniform nodes, deterministic per seed."""
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(k)) if k > 1 else np.ones(1)
    weights = weights / weights.sum()
    nodes = np.exp(2j * np.pi * rng.random(k))
    return HerglotzMeasure(weights, nodes)


def point_mass(node: complex = 1.0) -> HerglotzMeasure:
    return HerglotzMeasure(np.ones(1), np.array([node], dtype=complex))


@dataclass(frozen=True)
class CaratheodoryFunction:
    """``p = alpha + (1 - alpha) q`` for the Herglotz integral ``q`` of ``measure``."""

    measure: HerglotzMeasure
    order: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.order < 1.0:
            raise ValueError(f"order must lie in [0, 1), got {self.order!r}")

    def _parts(self, z):
        s, ds = self.measure.half_plane_sum(z)
        scale = 2.0 * (1.0 - self.order)
        # written as 1 + ... so that p(0) == 1 exactly
        return 1.0 + scale * s, scale * ds

    def value(self, z):
        z = _as_disk_points(z)
        return _out(self._parts(z)[0])

    __call__ = value

    def deriv(self, z):
        z = _as_disk_points(z)
        return _out(self._parts(z)[1])

    def zlogderiv(self, z):
        z = _as_disk_points(z)
        p, dp = self._parts(z)
        if np.any(np.abs(p) < POLE_TOL):
            raise NearPoleError("p(z) vanishes numerically")
        return _out(z * dp / p)


def eval_p(p: CaratheodoryFunction, z):
    return p.value(z)


def eval_zlogderiv(p: CaratheodoryFunction, z):
    """``z p'(z) / p(z)`` from the closed-form derivative of the atom sum."""
    return p.zlogderiv(z)


class Factor:
    """An analytic, zero-free building block: value, derivative and ``z B'/B``."""

    def __init__(self, name, value, deriv, zlogderiv):
        self.name = name
        self.value = value
        self.deriv = deriv
        self.zlogderiv = zlogderiv

    def __repr__(self):
        return f"Factor({self.name})"


def as_factor(p: CaratheodoryFunction, name="p") -> Factor:
    return Factor(name, p.value, p.deriv, p.zlogderiv)


class StarlikeFunction:
    """``g(z) = z prod_k (1 - x_k z)**(-2 (1 - alpha) w_k)``, starlike of order alpha.

    ``z g'/g`` equals the Caratheodory function of the same measure and order.
    """

    def __init__(self, measure: HerglotzMeasure, alpha: float = 0.0):
        self.measure = measure
        self.alpha = float(alpha)
        self.p = CaratheodoryFunction(measure, self.alpha)
        self._scale = 2.0 * (1.0 - self.alpha)

    def _pieces(self, z):
        S, dS = self.measure.log_factor(z, self._scale)
        E = np.exp(S)
        p, dp = self.p._parts(z)
        return E, dS, p, dp

    def g(self, z):
        z = _as_disk_points(z)
        E = np.exp(self.measure.log_factor(z, self._scale)[0])
        return _out(z * E)

    __call__ = g

    def g_over_z(self, z):
        z = _as_disk_points(z)
        return _out(np.exp(self.measure.log_factor(z, self._scale)[0]))

    def dg(self, z):
        z = _as_disk_points(z)
        E, _, p, _ = self._pieces(z)
        return _out(E * p)

    def d2g(self, z):
        z = _as_disk_points(z)
        E, dS, p, dp = self._pieces(z)
        return _out(E * (dS * p + dp))

    def zlogderiv(self, z):
        """``z g'/g``."""
        return self.p.value(z)

    def convexity(self, z):
        """``1 + z g''/g' = p + z p'/p``."""
        return self.p.value(z) + self.p.zlogderiv(z)

    def over_z_factor(self) -> Factor:
        def deriv(z):
            z = _as_disk_points(z)
            S, dS = self.measure.log_factor(z, self._scale)
            return _out(np.exp(S) * dS)

        return Factor("g/z", self.g_over_z, deriv, lambda z: self.p.value(z) - 1.0)

    def derivative_factor(self) -> Factor:
        return Factor("g'", self.dg, self.d2g, lambda z: self.convexity(z) - 1.0)


def starlike_member(m: HerglotzMeasure, alpha: float = 0.0) -> StarlikeFunction:
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha!r}")
    return StarlikeFunction(m, alpha)


def koebe(theta: float = 0.0) -> StarlikeFunction:
    """Rotated Koebe function ``exp(-i theta) k(exp(i theta) z) = z / (1 - exp(i theta) z)**2``."""
    return StarlikeFunction(point_mass(np.exp(1j * theta)), 0.0)


def _truncation_degree(r: float, tol: float = SERIES_TAIL) -> int:
    """Smallest N with ``sum_{n>N} n r**(n-1) < tol``, valid when coefficients are bounded by 1."""
    if r <= 0.0:
        return 0
    n = 1
    while r ** n * ((n + 1) - n * r) / (1.0 - r) ** 2 >= tol:
        n = max(n + 1, int(n * 1.25))
    lo, hi = n // 2, n
    while lo < hi:
        mid = (lo + hi) // 2
        if r ** mid * ((mid + 1) - mid * r) / (1.0 - r) ** 2 < tol:
            hi = mid
        else:
            lo = mid + 1
    return lo


class ConvexFunction:
    """Convex ``g`` with ``g'(z) = prod_k (1 - x_k z)**(-2 w_k)``.

    ``g'`` and ``g''`` are closed form.  ``g`` itself is integrated term by
    term from the power series ``g'(z) = exp(sum_n a_n z^n)``,
    ``a_n = (2/n) sum_k w_k x_k**n``.  The coefficients of ``g/z`` are bounded
    by 1 in modulus (majorised by those of ``(1 - z)**-2``), which gives the
    truncation rule in :func:`_truncation_degree`.  Coefficients are computed
    lazily; values for a fixed degree are reproducible bit for bit.
    """

    def __init__(self, measure: HerglotzMeasure, rmax: float = CONVEX_RMAX):
        self.measure = measure
        self.rmax = float(rmax)
        self.q = CaratheodoryFunction(measure, 0.0)
        self._b = np.ones(1, dtype=complex)

    def _coefficients(self, n: int) -> np.ndarray:
        """Taylor coefficients ``b_0..b_n`` of ``g'``."""
        have = self._b.size - 1
        if n > have:
            two_s = 2.0 * self.measure.moments(n)
            two_s[0] = 0.0
            b = np.empty(n + 1, dtype=complex)
            b[: have + 1] = self._b
            for m in range(have + 1, n + 1):
                # m b_m = sum_{j=1}^m (j a_j) b_{m-j},  j a_j = 2 s_j
                b[m] = np.dot(two_s[1 : m + 1], b[m - 1 :: -1]) / m
            self._b = b
        return self._b[: n + 1]

    def degree_for(self, r: float) -> int:
        return _truncation_degree(min(float(r), self.rmax))

    def over_z_coefficients(self, n: int) -> np.ndarray:
        """Coefficients of ``g(z)/z = sum_n b_n z^n / (n + 1)``."""
        return self._coefficients(n) / np.arange(1, n + 2)

    def _check(self, z):
        return _as_disk_points(z, self.rmax, closed=True)

    def _series(self, z):
        n = self.degree_for(float(np.max(np.abs(z), initial=0.0)))
        c = self.over_z_coefficients(n)
        G = np.polynomial.polynomial.polyval(z, c)
        dG = np.polynomial.polynomial.polyval(z, c[1:] * np.arange(1, n + 1)) if n else 0 * z
        return G, dG

    def g_over_z(self, z):
        z = self._check(z)
        return _out(self._series(z)[0])

    def g(self, z):
        z = self._check(z)
        return _out(z * self._series(z)[0])

    __call__ = g

    def dg(self, z):
        z = self._check(z)
        return _out(np.exp(self.measure.log_factor(z, 2.0)[0]))

    def d2g(self, z):
        z = self._check(z)
        S, dS = self.measure.log_factor(z, 2.0)
        return _out(np.exp(S) * dS)

    def zlogderiv(self, z):
        """``z g'/g = g'(z) / (g(z)/z)``."""
        z = self._check(z)
        G = self._series(z)[0]
        if np.any(np.abs(G) < POLE_TOL):
            raise NearPoleError("g(z)/z vanishes numerically")
        return _out(np.exp(self.measure.log_factor(z, 2.0)[0]) / G)

    def convexity(self, z):
        """``1 + z g''/g' = q(z)``."""
        return self.q.value(self._check(z))

    def over_z_factor(self) -> Factor:
        def deriv(z):
            z = self._check(z)
            return _out(self._series(z)[1])

        return Factor("g/z", self.g_over_z, deriv, lambda z: self.zlogderiv(z) - 1.0)

    def derivative_factor(self) -> Factor:
        return Factor("g'", self.dg, self.d2g, lambda z: self.convexity(z) - 1.0)


def convex_member(m: HerglotzMeasure, rmax: float = CONVEX_RMAX) -> ConvexFunction:
    return ConvexFunction(m, rmax)


# -- the three lemmas on P(alpha) ---------------------------------------------

def growth_disk(alpha: float, r: float) -> tuple[float, float]:
    """Center and radius of the disk containing ``p(|z| = r)`` for ``p`` in ``P(alpha)``."""
    d = 1.0 - r * r
    return (1.0 + (1.0 - 2.0 * alpha) * r * r) / d, 2.0 * (1.0 - alpha) * r / d


def logderiv_bound(alpha: float, r: float) -> float:
    """Upper bound of ``|z p'/p|`` on ``|z| = r`` for ``p`` in ``P(alpha)``."""
    return 2.0 * r * (1.0 - alpha) / ((1.0 - r) * (1.0 + (1.0 - 2.0 * alpha) * r))


def half_order_logderiv_lower(r: float) -> float:
    """Lower bound of ``Re z p'/p`` on ``|z| = r`` for ``p`` in ``P(1/2)``."""
    if not 0.0 <= r <= LOWER_BOUND_RMAX:
        raise ValueError(f"lower bound only holds for 0 <= r <= {LOWER_BOUND_RMAX:.6f}")
    if r < 1.0 / 3.0:
        return -r / (1.0 + r)
    s = 1.0 - r * r
    return -((np.sqrt(2.0) - np.sqrt(s)) ** 2) / s


def _circle(r, n):
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie in (0, 1)")
    return r * np.exp(2j * np.pi * np.arange(n) / n)


def check_growth_lemma(p: CaratheodoryFunction, r: float, n: int = 256, tol: float = 1e-10) -> bool:
    c, rho = growth_disk(p.order, r)
    return bool(np.all(np.abs(p.value(_circle(r, n)) - c) <= rho + tol))


def check_logderiv_lemma(p: CaratheodoryFunction, r: float, n: int = 256, tol: float = 1e-10) -> bool:
    bound = logderiv_bound(p.order, r)
    return bool(np.all(np.abs(p.zlogderiv(_circle(r, n))) <= bound + tol))


def check_logderiv_lower(p: CaratheodoryFunction, r: float, n: int = 256, tol: float = 1e-10) -> bool:
    if p.order != 0.5:
        raise ValueError("the lower bound concerns P(1/2)")
    bound = half_order_logderiv_lower(r)
    return bool(np.all(p.zlogderiv(_circle(r, n)).real >= bound - tol))
