"""Target regions and the largest disks they contain.

For a real center ``a`` the lemniscate and the parabola each admit a largest
concentric disk.  This script prints those radii next to a brute-force
distance to the boundary, and checks a few points for membership.
"""
import numpy as np

from radconst.regions import (
    Region,
    classify,
    lemniscate_boundary,
    lemniscate_disk_radius,
    parabola_boundary,
    parabola_disk_radius,
    verify_disk_lemma,
)

LEM, PAR = Region.lemniscate(), Region.parabola()

print("membership of a few points")
pts = np.array([1.0, 1.4, np.sqrt(2), 0.5, -1.0, 1 + 0.6j])
for region in (LEM, PAR):
    print(f"  {region!s:24s}", dict(zip(map(str, pts), classify(region, pts))))

print("\nlemniscate: closed-form radius vs distance to a dense boundary sample")
curve = lemniscate_boundary(200_001)
for a in (0.25, 0.5, 0.8, 2 * np.sqrt(2) / 3, 1.1, 1.35):
    brute = np.min(np.abs(curve - a))
    print(f"  a = {a:.6f}   r_a = {lemniscate_disk_radius(a):.9f}   brute = {brute:.9f}"
          f"   sampled check: {verify_disk_lemma(LEM, a)}")

print("\nparabola: closed-form radius vs distance to a dense boundary sample")
curve = parabola_boundary(200_001, 20.0)
for a in (0.6, 1.0, 1.5, 2.0, 4.0):
    brute = np.min(np.abs(curve - a))
    print(f"  a = {a:.3f}   R_a = {parabola_disk_radius(a):.9f}   brute = {brute:.9f}"
          f"   sampled check: {verify_disk_lemma(PAR, a)}")
