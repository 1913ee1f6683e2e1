"""The table of radius constants, computed twice.

Each entry comes from its closed form and, independently, from bisection on
the class disk bound fed through the region lemmas.
"""
from radconst.radii import covered_pairs, formula_radius, solve_radius
from radconst.regions import Region, RegionKind


def targets(kind):
    if kind is RegionKind.HALF_PLANE_MIN:
        return [Region.half_plane_min(a) for a in (0.0, 0.5)]
    if kind is RegionKind.HALF_PLANE_MAX:
        return [Region.half_plane_max(b) for b in (1.5, 2.0)]
    return [Region(kind)]


print(f"{'class':6s}{'target':10s}{'formula':>14s}{'bisection':>14s}   status")
for cid, kind in covered_pairs():
    for rg in targets(kind):
        res = formula_radius(cid, rg)
        print(f"{cid.label:6s}{res.target:10s}{res.value:14.9f}{solve_radius(cid, rg):14.9f}"
              f"   {res.provenance}")
