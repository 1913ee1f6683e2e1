"""Conjectured radii: what the designated extremals give, and what sampling adds.

For five non-sharp entries a larger radius is expected.  The exit radius of
the designated extremal reproduces each of those values.  Random sampling
agrees on the lemniscate and parabola entries.  For Re w < beta (F3 and F5)
it finds members that leave earlier as soon as the conjectured radius
exceeds 1/3: beyond that radius the single-atom h in P(1/2) used by the
extremal no longer minimises Re z h'/h.
"""
import numpy as np

from radconst.certify import conjecture_probe, empirical_radii
from radconst.herglotz import CaratheodoryFunction, HerglotzMeasure, half_order_logderiv_lower
from radconst.radii import conjectured_pairs, conjectured_radius, formula_radius
from radconst.regions import Region, RegionKind

print(f"{'pair':14s}{'proven':>10s}{'conjectured':>13s}{'probe':>11s}{'sampled hi':>12s}")
for cid, kind in conjectured_pairs():
    params = (1.5, 1.75, 2.0, 3.0) if kind is RegionKind.HALF_PLANE_MAX else (None,)
    for b in params:
        rg = Region.half_plane_max(b) if b else Region(kind)
        conj = conjectured_radius(cid, rg)
        hi = empirical_radii(cid, [rg], members=200)[rg].hi
        flag = "   <- below the conjecture" if hi < conj.value - 1e-6 else ""
        print(f"{cid.label + ' ' + conj.target:14s}{formula_radius(cid, rg).value:10.6f}"
              f"{conj.value:13.6f}{conjecture_probe(cid, rg):11.6f}{hi:12.6f}{flag}")

print("\nwhy Re w < beta differs: the bound on Re z h'/h over P(1/2)")
print("switches branches at r = 1/3, and the single-atom h is no longer worst.")
r = 0.41
z = r * np.exp(2j * np.pi * np.arange(2048) / 2048)
single = CaratheodoryFunction(HerglotzMeasure(np.ones(1), np.array([-1.0])), 0.5)
print(f"  r = {r}: single atom min Re zh'/h = {single.zlogderiv(z).real.min():.5f},"
      f"  bound = {half_order_logderiv_lower(r):.5f}")
