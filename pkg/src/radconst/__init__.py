"""Radius constants for classes of analytic functions defined by a ratio f/g.

Modules
-------
regions    target sets in the w-plane and disk-containment radii
herglotz   Caratheodory functions from finite Herglotz measures
classes    the classes F1..F8, disk bounds, members and extremals
radii      closed-form radii and the independent bisection solver
certify    sharpness, Monte-Carlo sweeps, conjecture probes, reports
cli        command-line front end
"""
__version__ = "0.1.0"

from .regions import Region, RegionKind, DiskSpec  # noqa: E402,F401
from .classes import ClassId  # noqa: E402,F401
from .radii import formula_radius, conjectured_radius, solve_radius  # noqa: E402,F401
