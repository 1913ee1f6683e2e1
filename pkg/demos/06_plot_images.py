"""Pictures of the extremal images against the region boundaries.

Writes ``extremal_images.png`` (matplotlib required).  The same data can be
exported with ``radconst plot-data``.
"""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from radconst.classes import ClassId, extremal_member  # noqa: E402
from radconst.radii import formula_radius  # noqa: E402
from radconst.regions import Region, boundary_curve  # noqa: E402

panels = [(ClassId.F1, Region.lemniscate()), (ClassId.F5, Region.parabola()),
          (ClassId.F6, Region.parabola()), (ClassId.F2, Region.half_plane_min(0.0))]
theta = np.linspace(0, 2 * np.pi, 512)
fig, axes = plt.subplots(1, len(panels), figsize=(4 * len(panels), 4))
for ax, (cid, rg) in zip(axes, panels):
    R = formula_radius(cid, rg).value
    m = extremal_member(cid)
    b = boundary_curve(rg, 512, 2.0)
    ax.plot(b.real, b.imag, "k-", lw=1, label="boundary")
    for s, style in ((0.5, ":"), (1.0, "-"), (1.15, "--")):
        w = m.functional(s * R * np.exp(1j * theta))
        ax.plot(w.real, w.imag, style, label=f"r = {s:g} R")
    ax.set_title(f"{cid.label}, {formula_radius(cid, rg).target}")
    ax.set_aspect("equal")
    ax.legend(fontsize=7)
fig.tight_layout()
fig.savefig("extremal_images.png", dpi=120)
print("wrote extremal_images.png")
