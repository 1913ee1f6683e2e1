"""Command-line front end.

Commands
--------
table      closed-form radius for every covered (class, target, parameter)
verify     full certification report; exit status 1 if any check fails
sweep      Monte-Carlo radius intervals over the parameter grids
probe      exit radii of the designated extremals for the conjectured pairs
plot-data  image of ``|z| = r`` under the extremal functional plus the region boundary

Reports are CSV (header row) or JSON (a single top-level array of row
objects).  Floats are written in shortest round-trip form and every row
carries the seed and package version.  Exit codes: 0 success, 1 a check
failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__
from .certify import (
    EXIT_TOL,
    PROBE_TOL,
    ReportConfig,
    build_report,
    conjecture_probe,
    empirical_radii,
    regions_for,
)
from .classes import ClassId, extremal_member
from .radii import (
    REGION_ORDER,
    UncoveredPairError,
    conjectured_pairs,
    conjectured_radius,
    formula_radius,
    is_covered,
)
from .regions import Region, RegionKind, boundary_curve, margin

TABLE_ALPHAS = (0.0, 0.25, 0.5, 0.75)
TABLE_BETAS = (1.5, 2.0, 4.0)
VERIFY_ALPHAS = (0.0,)
VERIFY_BETAS = (2.0,)
PLOT_POINTS = 512

_REGION_ALIASES = {
    "lemniscate": RegionKind.LEMNISCATE, "sl": RegionKind.LEMNISCATE,
    "parabola": RegionKind.PARABOLA, "sp": RegionKind.PARABOLA, "ucv": RegionKind.PARABOLA,
    "halfplane-min": RegionKind.HALF_PLANE_MIN, "min": RegionKind.HALF_PLANE_MIN,
    "halfplane-max": RegionKind.HALF_PLANE_MAX, "max": RegionKind.HALF_PLANE_MAX,
}


class UsageError(Exception):
    def __init__(self, flag, message):
        super().__init__(f"argument {flag}: {message}")
        self.flag = flag


# -- argument handling ---------------------------------------------------------------

def _split(text):
    return [t for t in (s.strip() for s in text.split(",")) if t]


def _parse_classes(text):
    if text is None:
        return list(ClassId)
    try:
        return [ClassId.parse(t) for t in _split(text)]
    except ValueError as exc:
        raise UsageError("--classes", str(exc)) from None


def _parse_regions(text):
    if text is None:
        return list(REGION_ORDER)
    out = []
    for t in _split(text):
        try:
            out.append(_REGION_ALIASES[t.lower()])
        except KeyError:
            raise UsageError("--regions", f"unknown region {t!r}; expected one of "
                             + ", ".join(k.value for k in REGION_ORDER)) from None
    return out


def _parse_floats(text, flag, default, ok, what):
    if text is None:
        return tuple(default)
    try:
        vals = tuple(float(t) for t in _split(text))
    except ValueError:
        raise UsageError(flag, f"expected comma-separated numbers, got {text!r}") from None
    if not vals:
        raise UsageError(flag, "empty list")
    for v in vals:
        if not ok(v):
            raise UsageError(flag, f"{v!r} is out of range ({what})")
    return vals


def _alphas(args, default):
    return _parse_floats(args.alpha, "--alpha", default, lambda a: 0.0 <= a < 1.0,
                         "need 0 <= alpha < 1")


def _betas(args, default):
    return _parse_floats(args.beta, "--beta", default,
                         lambda b: b > 1.0 and math.isfinite(b), "need beta > 1")


def _config(args, alphas, betas, empirical=True):
    if args.samples < 1:
        raise UsageError("--samples", f"must be >= 1, got {args.samples}")
    if args.grid < 8:
        raise UsageError("--grid", f"must be >= 8, got {args.grid}")
    if not (args.tol > 0.0 and math.isfinite(args.tol)):
        raise UsageError("--tol", f"must be a positive number, got {args.tol!r}")
    return ReportConfig(alphas=alphas, betas=betas, members=args.samples, grid=args.grid,
                        seed=args.seed, tol=args.tol, empirical=empirical)


def _targets(class_id, kinds, config):
    return [rg for k in REGION_ORDER if k in kinds
            for rg in regions_for(k, config) if is_covered(class_id, rg)]


# -- output --------------------------------------------------------------------------

def _cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def format_rows(rows, fmt):
    """Serialise a list of row dicts as CSV or JSON text."""
    if fmt == "json":
        clean = [{k: _json_value(v) for k, v in r.items()} for r in rows]
        return json.dumps(clean, indent=1, allow_nan=False) + "\n"
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _cell(v) for k, v in r.items()})
    return buf.getvalue()


def _emit(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# -- commands ------------------------------------------------------------------------

def cmd_table(args):
    classes, kinds = _parse_classes(args.classes), _parse_regions(args.regions)
    config = _config(args, _alphas(args, TABLE_ALPHAS), _betas(args, TABLE_BETAS), False)
    rows = []
    for cid in ClassId:
        if cid not in classes:
            continue
        for rg in _targets(cid, kinds, config):
            res = formula_radius(cid, rg)
            rows.append({"class": cid.label, "target": res.target, "region": rg.kind.value,
                         "parameter": rg.parameter, "formula": res.value, "sharp": res.sharp,
                         "provenance": res.provenance, "closed_form": res.closed_form,
                         "seed": args.seed, "version": __version__})
    _emit(format_rows(rows, args.format), args.out)
    return 0


def cmd_verify(args):
    classes, kinds = _parse_classes(args.classes), _parse_regions(args.regions)
    config = _config(args, _alphas(args, VERIFY_ALPHAS), _betas(args, VERIFY_BETAS))
    reports = build_report(classes, kinds, config)
    _emit(format_rows([r.as_row() for r in reports], args.format), args.out)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        print(f"FAIL {r.class_id} {r.target}: {'; '.join(r.failures)}", file=sys.stderr)
    print(f"{len(reports) - len(failed)}/{len(reports)} rows passed (seed {config.seed})",
          file=sys.stderr)
    return 1 if failed else 0


def cmd_sweep(args):
    classes, kinds = _parse_classes(args.classes), _parse_regions(args.regions)
    config = _config(args, _alphas(args, TABLE_ALPHAS), _betas(args, TABLE_BETAS))
    rows, bad = [], 0
    for cid in ClassId:
        if cid not in classes:
            continue
        targets = _targets(cid, kinds, config)
        if not targets:
            continue
        intervals = empirical_radii(cid, targets, config.members, config.grid, config.seed)
        for rg in targets:
            res = formula_radius(cid, rg)
            lo, hi = intervals[rg]
            sound = res.value <= hi + EXIT_TOL
            bad += not sound
            rows.append({"class": cid.label, "target": res.target, "region": rg.kind.value,
                         "parameter": rg.parameter, "formula": res.value, "sharp": res.sharp,
                         "empirical_lo": lo, "empirical_hi": hi,
                         "status": "ok" if sound else "sampled member exits below formula",
                         "members": config.members, "grid": config.grid,
                         "seed": config.seed, "version": __version__})
    _emit(format_rows(rows, args.format), args.out)
    return 1 if bad else 0


def cmd_probe(args):
    classes, kinds = _parse_classes(args.classes), _parse_regions(args.regions)
    config = _config(args, _alphas(args, VERIFY_ALPHAS), _betas(args, VERIFY_BETAS), False)
    rows, bad = [], 0
    for cid, kind in conjectured_pairs():
        if cid not in classes or kind not in kinds:
            continue
        for rg in regions_for(kind, config):
            conj = conjectured_radius(cid, rg)
            value = conjecture_probe(cid, rg)
            proven = formula_radius(cid, rg).value
            ok = abs(value - conj.value) <= PROBE_TOL and proven <= value
            bad += not ok
            rows.append({"class": cid.label, "target": conj.target, "region": kind.value,
                         "parameter": rg.parameter, "proven": proven,
                         "conjecture": conj.value, "probe": value,
                         "difference": value - conj.value, "status": "ok" if ok else "mismatch",
                         "seed": config.seed, "version": __version__})
    _emit(format_rows(rows, args.format), args.out)
    return 1 if bad else 0


def _single(items, flag):
    if len(items) != 1:
        raise UsageError(flag, "plot-data takes exactly one value")
    return items[0]


def cmd_plot_data(args):
    cid = _single(_parse_classes(args.classes or "F1"), "--classes")
    kind = _single(_parse_regions(args.regions or "lemniscate"), "--regions")
    if kind is RegionKind.HALF_PLANE_MIN:
        region = Region.half_plane_min(_alphas(args, VERIFY_ALPHAS)[0])
    elif kind is RegionKind.HALF_PLANE_MAX:
        region = Region.half_plane_max(_betas(args, VERIFY_BETAS)[0])
    else:
        region = Region(kind)
    if args.radius is None:
        try:
            r = formula_radius(cid, region).value
        except UncoveredPairError:
            raise UsageError("--radius", f"required: no radius for {cid.label} {kind.value}")
    else:
        r = args.radius
    if not 0.0 < r < 1.0:
        raise UsageError("--radius", f"must lie in (0, 1), got {r!r}")
    z = r * np.exp(2j * np.pi * np.arange(PLOT_POINTS) / PLOT_POINTS)
    image = np.asarray(extremal_member(cid).functional(z))
    extent = max(3.0, float(np.max(np.abs(image.imag))) * 1.2)
    boundary = boundary_curve(region, PLOT_POINTS, extent)
    m = margin(region, image)
    buf = io.StringIO()
    buf.write(f"# extremal functional of {cid.label} on |z| = {r!r}, region {region}\n")
    buf.write("# columns: curve (image | boundary), index, re, im\n")
    buf.write(f"# minimum region margin of the image: {float(np.min(m))!r}\n")
    buf.write(f"# version {__version__}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["curve", "index", "re", "im"])
    for name, pts in (("image", image), ("boundary", boundary)):
        for i, p in enumerate(pts):
            w.writerow([name, i, repr(float(p.real)), repr(float(p.imag))])
    _emit(buf.getvalue(), args.out)
    return 0


# -- entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radconst", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--classes", help="comma-separated class labels, e.g. F1,F5")
    common.add_argument("--regions", help="comma-separated: lemniscate, halfplane-max, "
                                          "halfplane-min, parabola")
    common.add_argument("--alpha", help="comma-separated alpha values in [0, 1)")
    common.add_argument("--beta", help="comma-separated beta values > 1")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=200, help="random members per class")
    common.add_argument("--grid", type=int, default=256, help="points per sampled circle")
    common.add_argument("--tol", type=float, default=1e-9,
                        help="allowed solver/formula disagreement")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="output file (default stdout)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, text in (("table", cmd_table, "closed-form radius table"),
                           ("verify", cmd_verify, "run the certification report"),
                           ("sweep", cmd_sweep, "Monte-Carlo radius intervals"),
                           ("probe", cmd_probe, "conjecture probes")):
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.set_defaults(func=fn)
    sp = sub.add_parser("plot-data", parents=[common], help="image curve and boundary as CSV")
    sp.add_argument("--radius", "-r", type=float, help="circle radius (default: formula radius)")
    sp.set_defaults(func=cmd_plot_data)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
