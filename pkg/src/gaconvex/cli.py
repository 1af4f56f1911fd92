"""Command line front end.

Subcommands:
  convexity   search for a violation of the multiplicative convexity law
  verify      evaluate selected bounds at one parameter point
  sweep       evaluate bounds over parameter grids, emit CSV or JSON rows
  compare     rank applicable upper bounds at one point, tightest first
  identity    check the integral identity residual

Exit codes: 0 success / certified / all bounds hold; 1 a violation or a
failing bound was found; 2 invalid input. Outputs are byte-for-byte
deterministic for a fixed command line; floats in files carry 17 significant
digits.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import shlex
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional
from xml.sax.saxutils import escape

from . import bounds, convexity, means
from .bounds import BoundReport, ParamError, ParamPoint
from .expr import Expression, ExprError, parse

_LOG = logging.getLogger("gaconvex")

CSV_FIELDS = ("theorem_id", "alpha", "m", "q", "p", "a", "b",
              "lhs", "rhs", "margin", "hypothesis", "holds", "quad_error")

_PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
            "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")

_DEFAULTS = {
    "convexity": {"kind": "ga", "direction": "convex", "alpha": 1.0, "m": 1.0,
                  "samples": 256, "seed": 42, "tol": convexity.VIOLATION_TOL},
    "verify": {"alpha": 1.0, "m": 1.0, "q": 1.0, "theorems": "all",
               "samples": 256, "seed": 42, "tol": bounds.DEFAULT_TOL,
               "format": "csv"},
    "sweep": {"alpha": "1", "m": "1", "q": "1", "theorems": "all",
              "samples": 256, "seed": 42, "tol": bounds.DEFAULT_TOL,
              "format": "csv", "jobs": 1},
    "compare": {"alpha": 1.0, "m": 1.0, "q": 1.0, "theorems": "all",
                "samples": 256, "seed": 42, "tol": bounds.DEFAULT_TOL},
    "identity": {"tol": bounds.DEFAULT_TOL},
}

_REQUIRED = {
    "convexity": ("f", "lo", "hi"),
    "verify": ("f", "a", "b"),
    "sweep": ("f", "a", "b"),
    "compare": ("f", "a", "b"),
    "identity": ("f", "a", "b"),
}


def _fmt(v: float) -> str:
    return "%.17g" % (v,)


# ---------------------------------------------------------------------------
# Parser construction. Every option defaults to None so that config-file
# values can fill the gaps before hard defaults apply; command line wins.

def _add_common(p, grids=False):
    num = str if grids else float
    p.add_argument("--f", help="function expression in x")
    p.add_argument("--a", type=float, help="left endpoint, 0 < a < b")
    p.add_argument("--b", type=float, help="right endpoint")
    p.add_argument("--alpha", type=num)
    p.add_argument("--m", type=num)
    p.add_argument("--q", type=num)
    p.add_argument("--p", type=num, dest="p", help="exponent split, 0 < p < q")
    p.add_argument("--g", help="second function expression (product bounds)")
    p.add_argument("--alpha2", type=float, help="alpha for g (defaults to --alpha)")
    p.add_argument("--m2", type=float, help="m for g (defaults to --m)")
    p.add_argument("--theorems",
                   help="comma separated theorem ids, or 'all' (default)")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--config", help="TOML file supplying defaults for any flag")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gaconvex",
        description="verify logarithmic-mean integral bounds for functions "
                    "satisfying multiplicative convexity laws")
    sub = ap.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("convexity", help="search for a convexity violation")
    pc.add_argument("--f")
    pc.add_argument("--lo", type=float)
    pc.add_argument("--hi", type=float)
    pc.add_argument("--kind", choices=("ga", "ordinary"))
    pc.add_argument("--direction", choices=("convex", "concave"))
    pc.add_argument("--alpha", type=float)
    pc.add_argument("--m", type=float)
    pc.add_argument("--deriv-power", type=float, dest="deriv_power",
                    help="check |f'|^Q instead of f itself")
    pc.add_argument("--samples", type=int)
    pc.add_argument("--seed", type=int)
    pc.add_argument("--tol", type=float)
    pc.add_argument("--config")

    pv = sub.add_parser("verify", help="evaluate bounds at one point")
    _add_common(pv)
    pv.add_argument("--out", help="write rows to this file")
    pv.add_argument("--format", choices=("csv", "json"))
    pv.add_argument("--plot", help="write an SVG margin chart here")

    ps = sub.add_parser("sweep", help="evaluate bounds over parameter grids")
    _add_common(ps, grids=True)
    ps.add_argument("--out")
    ps.add_argument("--format", choices=("csv", "json"))
    ps.add_argument("--plot")
    ps.add_argument("--jobs", type=int, help="worker threads (default 1)")

    pm = sub.add_parser("compare", help="rank upper bounds, tightest first")
    _add_common(pm)

    pi = sub.add_parser("identity", help="check the integral identity residual")
    pi.add_argument("--f")
    pi.add_argument("--a", type=float)
    pi.add_argument("--b", type=float)
    pi.add_argument("--tol", type=float)
    pi.add_argument("--config")

    return ap


def _load_config(path: str) -> dict:
    try:
        import tomllib
    except ModuleNotFoundError:  # python 3.10
        import tomli as tomllib
    with open(path, "rb") as fh:
        data = tomllib.load(fh)
    return {str(k).replace("-", "_"): v for k, v in data.items()}


def _merge_config(args, parser):
    if getattr(args, "config", None):
        known = vars(args)
        for key, value in _load_config(args.config).items():
            if key not in known or key in ("command", "config"):
                parser.error("unknown config key %r" % key)
            if known[key] is None:
                setattr(args, key, value)
    for key, value in _DEFAULTS[args.command].items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    for key in _REQUIRED[args.command]:
        if getattr(args, key, None) is None:
            parser.error("--%s is required (flag or config)" % key)


# ---------------------------------------------------------------------------
# Row assembly and writers

def parse_grid(text) -> list:
    """Grid syntax: 'lo:hi:step' (inclusive) or a comma separated list."""
    if isinstance(text, (list, tuple)):
        return [float(v) for v in text]
    if isinstance(text, (int, float)):
        return [float(text)]
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ParamError("grid %r: want lo:hi:step" % text)
        lo, hi, step = (float(s) for s in parts)
        if step <= 0.0 or hi < lo:
            raise ParamError("grid %r: need step > 0 and hi >= lo" % text)
        n = int(math.floor((hi - lo) / step + 1e-9)) + 1
        return [lo + i * step for i in range(n)]
    return [float(s) for s in text.split(",")]


def _row(pt: ParamPoint, rep: BoundReport) -> dict:
    return {
        "theorem_id": rep.theorem_id,
        "alpha": pt.alpha, "m": pt.m, "q": pt.q, "p": pt.p,
        "a": pt.a, "b": pt.b,
        "lhs": rep.lhs, "rhs": rep.rhs, "margin": rep.margin,
        "hypothesis": None if rep.hypothesis is None else rep.hypothesis.status,
        "holds": rep.holds,
        "quad_error": rep.quad_error,
    }


def _csv_cell(key, value) -> str:
    if value is None:
        return ""
    if key == "holds":
        return "true" if value else "false"
    if isinstance(value, float):
        return _fmt(value)
    return str(value)


def write_rows(rows, fmt: str, stream) -> None:
    if fmt == "csv":
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for row in rows:
            w.writerow([_csv_cell(k, row[k]) for k in CSV_FIELDS])
    else:
        # strict JSON has no NaN/Infinity token; emit null for those
        safe = [{k: (None if isinstance(v, float) and not math.isfinite(v)
                     else v) for k, v in row.items()} for row in rows]
        json.dump(safe, stream, indent=2)
        stream.write("\n")


def _emit(rows, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_rows(rows, args.format, fh)
    else:
        write_rows(rows, args.format, sys.stdout)


def write_svg(path: str, series, title: str) -> None:
    """series: ordered (label, [(x, y), ...]) pairs; finite points only."""
    width, height = 640, 400
    ml, mr, mt, mb = 60, 150, 36, 42
    pts = [p for _, data in series for p in data
           if math.isfinite(p[0]) and math.isfinite(p[1])]
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
           'viewBox="0 0 %d %d">' % (width, height, width, height),
           '<rect width="%d" height="%d" fill="white"/>' % (width, height),
           '<text x="%d" y="20" font-family="monospace" font-size="13">%s'
           '</text>' % (ml, escape(title))]
    if pts:
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
        if xmax == xmin:
            xmin, xmax = xmin - 0.5, xmax + 0.5
        if ymax == ymin:
            pad = max(abs(ymin), 1.0) * 0.1
            ymin, ymax = ymin - pad, ymax + pad

        def px(x):
            return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr)

        def py(y):
            return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb)

        out.append('<line x1="%g" y1="%g" x2="%g" y2="%g" stroke="black"/>'
                   % (ml, height - mb, width - mr, height - mb))
        out.append('<line x1="%g" y1="%g" x2="%g" y2="%g" stroke="black"/>'
                   % (ml, mt, ml, height - mb))
        if ymin < 0.0 < ymax:
            out.append('<line x1="%g" y1="%g" x2="%g" y2="%g" stroke="#999" '
                       'stroke-dasharray="4 3"/>'
                       % (ml, py(0.0), width - mr, py(0.0)))
        for val, anchor_y in ((ymin, height - mb), (ymax, mt)):
            out.append('<text x="%g" y="%g" font-family="monospace" '
                       'font-size="11" text-anchor="end">%s</text>'
                       % (ml - 6, anchor_y + 4, escape("%.3g" % val)))
        for val, anchor_x in ((xmin, ml), (xmax, width - mr)):
            out.append('<text x="%g" y="%g" font-family="monospace" '
                       'font-size="11" text-anchor="middle">%s</text>'
                       % (anchor_x, height - mb + 16, escape("%.3g" % val)))
        for i, (label, data) in enumerate(series):
            color = _PALETTE[i % len(_PALETTE)]
            clean = [(x, y) for x, y in data
                     if math.isfinite(x) and math.isfinite(y)]
            if len(clean) > 1:
                path_d = " ".join("%g,%g" % (px(x), py(y)) for x, y in clean)
                out.append('<polyline points="%s" fill="none" stroke="%s" '
                           'stroke-width="1.5"/>' % (path_d, color))
            for x, y in clean:
                out.append('<circle cx="%g" cy="%g" r="2.5" fill="%s"/>'
                           % (px(x), py(y), color))
            ly = mt + 14 * i
            out.append('<rect x="%g" y="%g" width="10" height="10" fill="%s"/>'
                       % (width - mr + 10, ly, color))
            out.append('<text x="%g" y="%g" font-family="monospace" '
                       'font-size="11">%s</text>'
                       % (width - mr + 25, ly + 9, escape(label)))
    else:
        out.append('<text x="%d" y="%d" font-family="monospace" '
                   'font-size="13">no finite data</text>'
                   % (ml, height // 2))
    out.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(out) + "\n")


def _plot_rows(path: str, rows, title: str) -> None:
    order = []
    series = {}
    index = {}
    for row in rows:
        tid = row["theorem_id"]
        if tid not in series:
            order.append(tid)
            series[tid] = []
            index[tid] = 0
        if isinstance(row["margin"], float) and math.isfinite(row["margin"]):
            series[tid].append((index[tid], row["margin"]))
        index[tid] += 1
    write_svg(path, [(tid, series[tid]) for tid in order], title)


# ---------------------------------------------------------------------------
# Subcommands

def _point_from_args(args) -> ParamPoint:
    return ParamPoint(alpha=float(args.alpha), m=float(args.m),
                      q=float(args.q), a=float(args.a), b=float(args.b),
                      p=None if args.p is None else float(args.p),
                      alpha2=None if args.alpha2 is None else float(args.alpha2),
                      m2=None if args.m2 is None else float(args.m2))


def _parsed(text: str, what: str) -> Expression:
    try:
        return parse(text)
    except ExprError as exc:
        raise ParamError("%s: %s" % (what, exc))


def _replay_line(args) -> str:
    # the --f= form keeps expressions with a leading minus parseable
    parts = ["gaconvex", "convexity", "--f=%s" % shlex.quote(args.f),
             "--kind", args.kind, "--direction", args.direction,
             "--alpha", "%g" % args.alpha, "--m", "%g" % args.m,
             "--lo", "%g" % args.lo, "--hi", "%g" % args.hi,
             "--samples", str(args.samples), "--seed", str(args.seed)]
    if args.deriv_power is not None:
        parts += ["--deriv-power", "%g" % args.deriv_power]
    return " ".join(parts)


def cmd_convexity(args) -> int:
    f = _parsed(args.f, "--f")
    spec = convexity.ConvexitySpec(args.kind, float(args.alpha), float(args.m),
                                   domain_hi=float(args.hi),
                                   domain_lo=float(args.lo),
                                   direction=args.direction)
    if args.deriv_power is not None:
        verdict = convexity.check_power_of_abs_deriv(
            f, float(args.deriv_power), spec, args.samples, args.seed)
    else:
        verdict = convexity.check(f, spec, args.samples, args.seed)
    if verdict.status == "certified":
        print("certified: no violation above %s across %d sampled pairs"
              % (_fmt(convexity.VIOLATION_TOL), verdict.samples_checked))
        return 0
    w = verdict.witness
    print("violated: x=%s y=%s lam=%s" % (_fmt(w.x), _fmt(w.y), _fmt(w.lam)))
    print("  lhs=%s rhs=%s gap=%s" % (_fmt(w.lhs), _fmt(w.rhs), _fmt(w.gap)))
    print("replay: %s" % _replay_line(args))
    return 1


def _verify_point(args):
    f = _parsed(args.f, "--f")
    g = _parsed(args.g, "--g") if args.g else None
    pt = _point_from_args(args)
    reports = bounds.verify(f, g, pt, theorems=args.theorems,
                            tol=float(args.tol), samples=args.samples,
                            seed=args.seed)
    return pt, reports


def _print_report_table(pt: ParamPoint, reports) -> None:
    print("point: alpha=%g m=%g q=%g%s a=%g b=%g"
          % (pt.alpha, pt.m, pt.q,
             "" if pt.p is None else " p=%g" % pt.p, pt.a, pt.b))
    print("%-10s %-22s %-22s %-14s %-10s %s"
          % ("theorem", "lhs", "rhs", "margin", "hypothesis", "holds"))
    for rep in reports:
        hyp = "-" if rep.hypothesis is None else rep.hypothesis.status
        holds = "n/a" if rep.holds is None else ("yes" if rep.holds else "NO")
        print("%-10s %-22s %-22s %-14s %-10s %s"
              % (rep.theorem_id, "%.15g" % rep.lhs, "%.15g" % rep.rhs,
                 "%.6g" % rep.margin, hyp, holds))


def cmd_verify(args) -> int:
    pt, reports = _verify_point(args)
    _print_report_table(pt, reports)
    rows = [_row(pt, rep) for rep in reports]
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_rows(rows, args.format, fh)
    if args.plot:
        _plot_rows(args.plot, rows, "bound margins (rhs - lhs)")
    return 1 if any(rep.holds is False for rep in reports) else 0


def _sweep_points(args):
    alphas = parse_grid(args.alpha)
    ms = parse_grid(args.m)
    qs = parse_grid(args.q)
    ps = [None] if args.p is None else parse_grid(args.p)
    combos = []
    for alpha in alphas:
        for m in ms:
            for q in qs:
                for p in ps:
                    combos.append((alpha, m, q, p))
    return combos


def cmd_sweep(args) -> int:
    f = _parsed(args.f, "--f")
    g = _parsed(args.g, "--g") if args.g else None
    combos = _sweep_points(args)
    hyp_cache: dict = {}

    def eval_point(combo):
        alpha, m, q, p = combo
        try:
            pt = ParamPoint(alpha=alpha, m=m, q=q, a=float(args.a),
                            b=float(args.b), p=p,
                            alpha2=None if args.alpha2 is None else float(args.alpha2),
                            m2=None if args.m2 is None else float(args.m2))
            reports = bounds.verify(f, g, pt, theorems=args.theorems,
                                    tol=float(args.tol), samples=args.samples,
                                    seed=args.seed, hyp_cache=hyp_cache)
            return pt, reports, None
        except (ParamError, ExprError, means.NonConvergenceError,
                ArithmeticError, ValueError) as exc:
            return None, None, "%s" % exc

    jobs = max(1, int(args.jobs))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(eval_point, combos))
    else:
        results = [eval_point(c) for c in combos]

    rows = []
    skipped = 0
    for combo, (pt, reports, reason) in zip(combos, results):
        if reason is not None:
            skipped += 1
            _LOG.info("skip alpha=%g m=%g q=%g p=%s: %s",
                      combo[0], combo[1], combo[2], combo[3], reason)
            continue
        rows.extend(_row(pt, rep) for rep in reports)

    _emit(rows, args)
    if getattr(args, "plot", None):
        _plot_rows(args.plot, rows, "bound margins across the sweep")
    held = sum(1 for r in rows if r["holds"] is True)
    failed = sum(1 for r in rows if r["holds"] is False)
    na = sum(1 for r in rows if r["holds"] is None)
    _LOG.info("sweep: %d points (%d skipped), %d rows: %d hold, %d fail, "
              "%d not applicable", len(combos), skipped, len(rows), held,
              failed, na)
    return 1 if failed else 0


def cmd_compare(args) -> int:
    pt, reports = _verify_point(args)
    ranked = [rep for rep in reports
              if rep.theorem_id not in ("lemma21",) + bounds.LOWER_BOUND_IDS
              and rep.holds is not None and math.isfinite(rep.rhs)]
    if not ranked:
        print("no applicable upper bounds at this point", file=sys.stderr)
        return 2
    ranked.sort(key=lambda rep: (rep.rhs, rep.theorem_id))
    print("lhs = %s" % _fmt(ranked[0].lhs))
    print("%-5s %-10s %-22s %s" % ("rank", "theorem", "rhs", "margin"))
    for i, rep in enumerate(ranked, start=1):
        print("%-5d %-10s %-22s %s"
              % (i, rep.theorem_id, "%.15g" % rep.rhs, "%.6g" % rep.margin))
    return 0


def cmd_identity(args) -> int:
    f = _parsed(args.f, "--f")
    pt = ParamPoint(alpha=1.0, m=1.0, q=1.0, a=float(args.a), b=float(args.b))
    lhs, el = bounds.signed_identity_lhs(f, pt)
    rhs, er = bounds.identity_rhs(f, pt)
    residual = rhs - lhs
    print("lhs      = %s" % _fmt(lhs))
    print("rhs      = %s" % _fmt(rhs))
    print("residual = %s" % _fmt(residual))
    ok = abs(residual) <= max(float(args.tol), 10.0 * (el + er))
    return 0 if ok else 1


_COMMANDS = {
    "convexity": cmd_convexity,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "compare": cmd_compare,
    "identity": cmd_identity,
}


def main(argv=None) -> int:
    if not logging.getLogger().handlers:
        logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                            format="%(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    _merge_config(args, parser)
    try:
        return _COMMANDS[args.command](args)
    except (ParamError, ExprError, means.NonConvergenceError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
