"""Command-line entry point: ``topvertex <command> ...``.

Every value printed is exact.  Failures print a JSON diagnostic and exit
with status 1; usage errors exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import localflop, nekrasov, partfun, toricgeom
from .identities import run_battery
from .oracle import vertex_interval
from .partitions import Partition
from .toricgeom import FanError
from .vertex import vertex

__all__ = ["main", "build_parser"]


class Mismatch(Exception):
    """An identity or comparison failed; payload is printed as JSON."""

    def __init__(self, payload):
        super().__init__(payload.get("error", "mismatch"))
        self.payload = payload


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=str)


def _parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "-", "[]", "()"):
        return Partition()
    text = text.strip("[]()")
    try:
        return Partition(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _parse_points(text: str):
    # "1,0:0,1" or "1,0;0,1"
    out = []
    for chunk in text.replace(";", ":").split(":"):
        chunk = chunk.strip()
        if chunk:
            xs = [int(x) for x in chunk.split(",")]
            if len(xs) != 2:
                raise argparse.ArgumentTypeError(f"bad lattice point {chunk!r}")
            out.append(tuple(xs))
    return out


def _surface(arg: str):
    """Surface rays from a point list or from a fan of the form K_S."""
    if any(ch.isdigit() for ch in arg) and "," in arg and not arg.endswith(".json"):
        return _parse_points(arg)
    fan = toricgeom.load_fan(arg)
    return [r for r in fan.rays if r != (0, 0)]


def _cone(fan, name):
    return fan.resolve_edge(name)


def _series_rows(series):
    vs = series.variables
    rows = []
    for ex in sorted(series.terms):
        c = series.terms[ex]
        mono = "*".join(f"{v}^{e}" if e > 1 else v for v, e in zip(vs, ex) if e) or "1"
        rows.append(f"{mono}\t{c}")
    return rows


# -- fan ----------------------------------------------------------------------

def cmd_fan(args, out):
    if args.action == "ks":
        fan = toricgeom.ks_fan(_surface(args.fan))
        out.write(_dump(toricgeom.fan_to_json(fan)) + "\n")
        return 0
    if args.action == "blowup":
        if not args.cone:
            raise FanError("fan blowup needs --cone")
        rays = toricgeom.blowup(_surface(args.fan), _parse_points(args.cone))
        fan = toricgeom.ks_fan(rays)
        out.write(_dump({"surface": [list(r) for r in rays],
                         "fan": toricgeom.fan_to_json(fan)}) + "\n")
        return 0
    fan = toricgeom.load_fan(args.fan)
    if args.action == "validate":
        report = toricgeom.validate(fan)
        out.write(_dump(report.as_dict()) + "\n")
        return 0 if report.valid else 1
    if args.action == "graph":
        out.write(_dump(toricgeom.build_graph(fan).as_dict()) + "\n")
        return 0
    if args.action == "flop":
        if not args.edge:
            raise FanError("fan flop needs --edge", valid_names=sorted(fan.edge_labels()))
        res = toricgeom.flop(fan, _cone(fan, args.edge))
        new = res.fan
        payload = {
            "fan": toricgeom.fan_to_json(new),
            "flopped": new.name_of(res.new_cone),
            "class_map": {fan.name_of(k): {new.name_of(c): v for c, v in sorted(m.items())}
                          for k, m in sorted(res.class_map.items())},
            "framing_shift": {fan.name_of(k): v for k, v in sorted(res.framing_shift.items())},
        }
        out.write(_dump(payload) + "\n")
        return 0
    raise FanError(f"unknown fan action {args.action!r}")


# -- computations ---------------------------------------------------------------

def cmd_vertex(args, out):
    ls = [_parse_partition(x) for x in args.partitions]
    value = vertex(*ls)
    out.write(f"{value}\n")
    status = 0
    for k in range(args.oracle_points):
        t0 = Fraction(2 + k)
        iv = vertex_interval(*ls, t0)
        ok = iv.contains(value.evaluate(t0))
        out.write(f"t={t0}\t{'ok' if ok else 'MISMATCH'}\n")
        status |= 0 if ok else 1
    return status


def cmd_zfun(args, out):
    fan = toricgeom.load_fan(args.fan)
    pf = partfun.z_fan(fan, args.cap, by_class=args.by_class, workers=args.workers)
    out.write("# variables\t" + ",".join(pf.variables) + "\n")
    for name, edges in zip(pf.variables, pf.var_edges):
        labels = ",".join(pf.graph.edges[e].name for e in edges)
        out.write(f"# {name}\t{labels}\n")
    for row in _series_rows(pf.series):
        out.write(row + "\n")
    return 0


def cmd_gw(args, out):
    fan = toricgeom.load_fan(args.fan)
    pf = partfun.z_fan(fan, args.cap, by_class=True, workers=args.workers)
    table = partfun.gw_extract(pf, args.genus_max)
    out.write(table.to_tsv())
    return 0


def cmd_flop_compare(args, out):
    fan = toricgeom.load_fan(args.fan)
    res = partfun.check_flop_global(fan, _cone(fan, args.edge), args.cap, workers=args.workers)
    out.write(_dump(res.as_dict()) + "\n")
    return 0 if res.holds else 1


def cmd_blowup_compare(args, out):
    rep = partfun.check_blowup(_surface(args.surface), _parse_points(args.cone), args.cap,
                               genus_max=args.genus_max, workers=args.workers)
    out.write(_dump(rep.as_dict()) + "\n")
    return 0 if rep.holds else 1


def cmd_nekrasov(args, out):
    lhs = nekrasov.z_inst(args.cap, args.fcap, workers=args.workers)
    rhs = nekrasov.nekrasov_rhs(args.cap, args.fcap, form=args.form).series
    out.write("# vertex\n")
    for row in _series_rows(lhs):
        out.write(row + "\n")
    out.write(f"# instanton sum ({args.form})\n")
    for row in _series_rows(rhs):
        out.write(row + "\n")
    out.write("# diff\n")
    diff = lhs - rhs
    for row in _series_rows(diff):
        out.write(row + "\n")
    return 0 if diff.is_zero() else 1


def cmd_check(args, out):
    if args.which == "identities":
        results = run_battery(args.max_size)
        out.write("identity\tcases\tfailures\tstatus\n")
        for r in results:
            out.write(f"{r.name}\t{r.cases}\t{r.failures}\t{'PASS' if r.holds else 'FAIL'}\n")
        bad = [r.as_dict() for r in results if not r.holds]
        if bad:
            raise Mismatch({"error": "identity failed", "failures": bad})
        return 0
    tuples = localflop.boundary_tuples(args.max_size)
    out.write("boundary\tdegree\tstatus\n")
    failures = []
    for lams in tuples:
        orig = localflop.normalized(localflop.z0(lams))
        w = localflop.check_flop_identity(lams, original=orig)
        label = " ".join(str(Partition(x)) for x in lams)
        out.write(f"{label}\t{orig.degree()}\t{'PASS' if w.holds else 'FAIL'}\n")
        if not w.holds:
            failures.append({"boundary": label, "power": w.power,
                             "lhs": str(w.lhs), "rhs": str(w.rhs)})
    out.write(f"# {len(tuples) - len(failures)}/{len(tuples)} hold\n")
    if failures:
        raise Mismatch({"error": "flop identity failed", "failures": failures})
    return 0


# -- parser ---------------------------------------------------------------------

def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topvertex", description="Topological vertex computations.")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: TOPVERTEX_WORKERS or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("fan", help="fan utilities")
    f.add_argument("action", choices=["validate", "graph", "flop", "blowup", "ks"])
    f.add_argument("fan", help="fan JSON, bundled fan name, or surface rays 'x,y:x,y:...'")
    f.add_argument("--edge")
    f.add_argument("--cone", help="two adjacent surface rays 'x,y:x,y'")
    f.set_defaults(func=cmd_fan)

    v = sub.add_parser("vertex", help="C_{l1 l2 l3} in canonical form")
    v.add_argument("partitions", nargs=3, metavar="PARTITION")
    v.add_argument("--oracle-points", type=_nonneg, default=0,
                   help="also check against tableau bounds at t = 2, 3, ...")
    v.set_defaults(func=cmd_vertex)

    z = sub.add_parser("zfun", help="truncated partition function")
    z.add_argument("fan")
    z.add_argument("--cap", type=_nonneg, required=True)
    z.add_argument("--by-class", action="store_true")
    z.set_defaults(func=cmd_zfun)

    g = sub.add_parser("gw", help="Gromov-Witten invariants as TSV")
    g.add_argument("fan")
    g.add_argument("--cap", type=_nonneg, required=True)
    g.add_argument("--genus-max", type=_nonneg, default=0)
    g.set_defaults(func=cmd_gw)

    fc = sub.add_parser("flop-compare", help="global flop comparison")
    fc.add_argument("fan")
    fc.add_argument("--edge", required=True)
    fc.add_argument("--cap", type=_nonneg, required=True)
    fc.set_defaults(func=cmd_flop_compare)

    b = sub.add_parser("blowup-compare", help="compare K_S with K of its blowup")
    b.add_argument("surface", help="surface rays 'x,y:x,y:...' or a K_S fan")
    b.add_argument("--cone", required=True, help="two adjacent surface rays 'x,y:x,y'")
    b.add_argument("--cap", type=_nonneg, required=True)
    b.add_argument("--genus-max", type=_nonneg, default=1)
    b.set_defaults(func=cmd_blowup_compare)

    n = sub.add_parser("nekrasov", help="vertex instanton part against the instanton sum")
    n.add_argument("--cap", type=_nonneg, required=True)
    n.add_argument("--fcap", type=_nonneg, default=2, help="cap on each fiber and Q0 degree")
    n.add_argument("--form", choices=nekrasov.FORMS, default="displayed")
    n.set_defaults(func=cmd_nekrasov)

    c = sub.add_parser("check", help="identity batteries")
    c.add_argument("which", choices=["identities", "flop-local"])
    c.add_argument("--max-size", type=_nonneg, default=4)
    c.set_defaults(func=cmd_check)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    if args.workers is not None and args.workers < 1:
        args.workers = 1
    try:
        return args.func(args, out)
    except FanError as exc:
        out.write(_dump({"error": str(exc), **getattr(exc, "details", {})}) + "\n")
        return 1
    except Mismatch as exc:
        out.write(_dump(exc.payload) + "\n")
        return 1
    except (ValueError, ArithmeticError) as exc:
        out.write(_dump({"error": str(exc), "type": type(exc).__name__}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
