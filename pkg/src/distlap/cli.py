"""Command line front end.

Exit codes: 0 success / no violations, 1 at least one violation found,
2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys

from .bounds import CHECKS, THEOREM_IDS
from .errors import DistlapError
from .families import QUANTITIES, build, closed_form, parse_family
from .graphs import from_graph6, to_graph6
from .linalg import eigenvalues
from .spectra import adjacency_matrix, dist_laplacian, dist_signless_laplacian, \
    distance_matrix, laplacian
from .transforms import KIND_TWINS, KIND_VERTEX, GraftSpec, apply_graft, \
    check_graft_monotone_L, check_graft_monotone_Q
from .verify import SCAN_IDS, emit_report, scan, table1_regression

_MATRICES = {
    "D": distance_matrix,
    "L": dist_laplacian,
    "Q": dist_signless_laplacian,
    "lap": laplacian,
    "A": adjacency_matrix,
}

_EPILOG = "theorem ids: " + " ".join(THEOREM_IDS)


def _fmt(x: float, precise: bool) -> str:
    return f"{x:.12g}" if precise else f"{x:.4f}"


def _input_graphs(args):
    """Yield (label, Graph) for --graph6 / --file / --family."""
    if getattr(args, "graph6", None) is not None:
        yield args.graph6, from_graph6(args.graph6)
    elif getattr(args, "family", None) is not None:
        g = build(parse_family(args.family))
        yield args.family, g
    elif getattr(args, "file", None) is not None:
        with open(args.file, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    yield line, from_graph6(line)
    else:
        raise DistlapError("one of --graph6, --file, --family is required")


def _verdict_line(v, precise: bool) -> str:
    return (f"{v.theorem_id} bound={_fmt(v.bound_value, precise)} "
            f"observed={_fmt(v.observed, precise)} holds={v.holds} "
            f"strict={v.strict} equality={v.equality} applicable={v.applicable}")


def _cmd_spectrum(args) -> int:
    fn = _MATRICES[args.matrix]
    many = args.file is not None
    for label, g in _input_graphs(args):
        vals = eigenvalues(fn(g)).values
        text = " ".join(_fmt(v, args.precise) for v in vals)
        print(f"{label}: {text}" if many else text)
    return 0


def _cmd_bounds(args) -> int:
    ids = THEOREM_IDS if "all" in args.check else tuple(args.check)
    for tid in ids:
        if tid not in CHECKS:
            raise DistlapError(f"unknown theorem id {tid!r}")
    bad = 0
    for label, g in _input_graphs(args):
        prefix = f"{label} " if args.file is not None else ""
        for tid in ids:
            v = CHECKS[tid](g, args.tolerance)
            print(prefix + _verdict_line(v, args.precise))
            if v.applicable and not v.holds:
                bad += 1
    return 1 if bad else 0


def _cmd_family(args) -> int:
    spec = parse_family(args.family)
    g = build(spec)
    print(to_graph6(g))
    if args.quantity:
        print(_fmt(closed_form(spec, args.quantity), args.precise))
    return 0


def _parse_anchor(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise DistlapError(f"bad --anchor {text!r}") from exc


def _cmd_graft(args) -> int:
    base = from_graph6(args.base)
    kind = KIND_TWINS if args.kind == "twins" else KIND_VERTEX
    spec = GraftSpec(base, kind, _parse_anchor(args.anchor), args.k, args.l)
    print(to_graph6(apply_graft(spec)))
    if args.check:
        bad = 0
        for v in (check_graft_monotone_L(spec), check_graft_monotone_Q(spec)):
            print(_verdict_line(v, args.precise))
            if v.applicable and not v.holds:
                bad += 1
        return 1 if bad else 0
    return 0


def _emit(report, fmt: str, precise: bool) -> None:
    if fmt in ("json", "csv"):
        sys.stdout.buffer.write(emit_report(report, fmt))
        sys.stdout.buffer.flush()
        return
    print(f"{report.theorem_id} corpus={report.corpus} "
          f"checked={report.graphs_checked} skipped={report.skipped} "
          f"violations={len(report.violations)} "
          f"equality_witnesses={len(report.equality_witnesses)}")
    for g6, v in report.violations:
        print(f"  VIOLATION {g6} " + _verdict_line(v, precise))
    for n, kite, tstar, ok in report.rows:
        print(f"  n={n} kite={_fmt(kite, precise)} tstar={_fmt(tstar, precise)} "
              f"pass={ok}")


def _cmd_scan(args) -> int:
    ids = SCAN_IDS if "all" in args.check else tuple(args.check)
    corpus = args.n if args.n is not None else args.file
    if corpus is None:
        raise DistlapError("one of --n, --file is required")
    bad = 0
    for tid in ids:
        r = scan(tid, corpus, jobs=args.jobs, fail_fast=args.fail_fast,
                 tolerance=args.tolerance)
        _emit(r, args.format, args.precise)
        bad += len(r.violations)
    return 1 if bad else 0


def _cmd_table1(args) -> int:
    r = table1_regression()
    _emit(r, args.format, args.precise)
    return 0 if all(ok for *_, ok in r.rows) else 1


def _add_common(p, tolerance: bool = False) -> None:
    p.add_argument("--precise", action="store_true",
                   help="print 12 significant digits instead of 4 decimals")
    if tolerance:
        p.add_argument("--tolerance", type=float, default=1e-7,
                       help="equality detection tolerance (default 1e-7)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="distlap",
        description="distance Laplacian and signless Laplacian spectra, "
                    "bounds, and exhaustive verification",
        epilog=_EPILOG)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="print a spectrum", epilog=_EPILOG)
    p.add_argument("--graph6")
    p.add_argument("--file")
    p.add_argument("--family")
    p.add_argument("--matrix", choices=sorted(_MATRICES), default="L")
    _add_common(p)
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("bounds", help="evaluate bound checks on one graph",
                       epilog=_EPILOG)
    p.add_argument("--graph6")
    p.add_argument("--file")
    p.add_argument("--family")
    p.add_argument("--check", action="append", required=True,
                   help="theorem id, repeatable, or 'all'")
    _add_common(p, tolerance=True)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("family", help="build a named family member",
                       epilog=_EPILOG)
    p.add_argument("--family", required=True, help="kind:args, e.g. kite:7")
    p.add_argument("--quantity", choices=QUANTITIES,
                   help="also print this closed-form value")
    _add_common(p)
    p.set_defaults(fn=_cmd_family)

    p = sub.add_parser("graft", help="attach two paths and check monotonicity",
                       epilog=_EPILOG)
    p.add_argument("--base", required=True, help="graph6 of the base graph")
    p.add_argument("--kind", choices=("vertex", "twins"), required=True)
    p.add_argument("--anchor", required=True,
                   help="anchor vertex, or two comma-separated twins")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="also run the radius monotonicity checks")
    _add_common(p)
    p.set_defaults(fn=_cmd_graft)

    p = sub.add_parser("scan", help="verify a theorem over a corpus",
                       epilog=_EPILOG)
    p.add_argument("--check", action="append", required=True,
                   help="theorem id, repeatable, or 'all'")
    p.add_argument("--n", type=int, help="native corpus: all connected graphs "
                                         "of this order")
    p.add_argument("--file", help="graph6 file, one graph per line")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: DISTLAP_JOBS or cpu count)")
    p.add_argument("--fail-fast", action="store_true")
    _add_common(p, tolerance=True)
    p.set_defaults(fn=_cmd_scan)

    p = sub.add_parser("table1", help="recompute the kite vs T* radius table",
                       epilog=_EPILOG)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    _add_common(p)
    p.set_defaults(fn=_cmd_table1)

    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.fn(args)
    except DistlapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
