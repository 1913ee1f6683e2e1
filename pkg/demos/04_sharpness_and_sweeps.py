"""Sharpness of the extremal functions and Monte-Carlo evidence.

For every sharp entry the extremal member reaches the region boundary at the
radius and leaves it just beyond.  Random members then give an interval
``[lo, hi]``: all sampled members are inside below ``lo``, one of them is
outside above ``hi``.
"""
from radconst.certify import empirical_radii, sharpness_check
from radconst.radii import covered_pairs, formula_radius
from radconst.classes import ClassId
from radconst.regions import Region, RegionKind


def default(kind):
    if kind is RegionKind.HALF_PLANE_MIN:
        return Region.half_plane_min(0.0)
    if kind is RegionKind.HALF_PLANE_MAX:
        return Region.half_plane_max(2.0)
    return Region(kind)


print("sharpness: margin at R and minimum margin on |z| = 1.001 R")
for cid, kind in covered_pairs():
    rg = default(kind)
    res = formula_radius(cid, rg)
    if res.sharp:
        at, beyond = sharpness_check(cid, rg)
        print(f"  {cid.label} {res.target:7s} R = {res.value:.6f}   at = {at:+.1e}"
              f"   beyond = {beyond:+.2e}")

print("\nsampled radius intervals (100 members, 256-point circles)")
for cid in (ClassId.F1, ClassId.F2, ClassId.F5):
    targets = [default(k) for c, k in covered_pairs() if c is cid]
    for rg, (lo, hi) in empirical_radii(cid, targets, members=100).items():
        print(f"  {cid.label} {formula_radius(cid, rg).target:7s} proven {formula_radius(cid, rg).value:.6f}"
              f"   sampled [{lo:.6f}, {hi:.6f}]")
