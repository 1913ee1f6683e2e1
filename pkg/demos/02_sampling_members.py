"""Sampling members of the classes.

Carathéodory functions come from finite Herglotz measures (a few atoms on the
unit circle with random weights).  Class members are products of such pieces;
the script draws members of every class, prints their defining constraints on
a circle near the boundary, and shows how their functional values fill the
class disk bound.
"""
import numpy as np

from radconst.classes import ClassId, disk_bound, make_member
from radconst.herglotz import CaratheodoryFunction, sample_measure

z = 0.9 * np.exp(2j * np.pi * np.arange(256) / 256)

print("sampled P(alpha): min Re p on |z| = 0.9")
for seed, order in [(1, 0.0), (2, 0.25), (3, 0.5)]:
    p = CaratheodoryFunction(sample_measure(seed, 4), order)
    print(f"  seed {seed}, order {order}:  p(0) = {p(0.0)},  min Re p = {p(z).real.min():.4f}")

print("\nconstraint margins of one member per class (positive = satisfied)")
for cid in ClassId:
    m = make_member(cid, 2024)
    margins = {k: float(np.min(v)) for k, v in m.constraint_margins(0.95 * z / 0.9).items()}
    print(f"  {cid.label}: " + ", ".join(f"{k}: {v:.3f}" for k, v in margins.items()))

print("\nhow much of the disk bound 100 members use at r = 0.3")
for cid in ClassId:
    disk, _ = disk_bound(cid, 0.3)
    worst = max(np.max(np.abs(make_member(cid, s).functional(z / 3) - disk.center))
                for s in range(100))
    print(f"  {cid.label}: max |w - c| = {worst:.4f}   bound = {disk.radius:.4f}")
