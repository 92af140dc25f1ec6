"""Command-line front end: drglocal <subcommand> ..."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import exactlinalg as xl
from .arrays import IntersectionArray, feasibility, spectrum
from .classification import (
    local_property,
    scan_diameter2,
    scan_diameter3plus,
    verify_local_eigenvalue_list,
    verify_properties,
    verify_smallest_eigenvalue_list,
)
from .constructions import FamilySpec, check_drg
from .errors import DrgError, GraphFormatError
from .graphcore import find_isomorphism, format_native, read_graph

SCHEMA_VERSION = 1

EXIT_CODES = [
    (0, "success (for feasible/spectrum/scan/iso also when the verdict is negative)"),
    (1, "a verification failed (verify, local-check)"),
    (2, "usage error"),
    (3, "malformed intersection array literal"),
    (4, "unknown family or invalid family parameters"),
    (5, "graph file missing, unreadable or malformed"),
    (6, "search budget exceeded"),
    (7, "graph is disconnected"),
    (8, "infeasible array or inapplicable bound"),
    (9, "embedded asset failed its certificate"),
    (10, "internal error"),
]

EPILOG = "exit codes:\n" + "\n".join(f"  {c:>2}  {d}" for c, d in EXIT_CODES) + \
    "\n\nDRG_THREADS caps worker processes for verify and scans."


def _emit(args, record, text):
    if args.json:
        record = {"schema": SCHEMA_VERSION, "command": args.command, **record}
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        print(text)


def _load(path):
    try:
        return read_graph(path)
    except OSError as e:
        raise GraphFormatError(f"cannot read {path}: {e.strerror or e}") from None


def _spectrum_pairs(pairs):
    return [{"eigenvalue": str(t), "multiplicity": None if m is None else str(m)} for t, m in pairs]


def cmd_construct(args):
    spec = FamilySpec.parse(args.family, tuple(args.params))
    G = spec.build()
    body = format_native(G)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
    arr = check_drg(G)
    record = {"family": str(spec), "vertices": G.n, "edges": G.num_edges,
              "array": str(arr) if arr else None, "out": args.out}
    if args.json:
        if not args.out:
            record["native"] = body
        _emit(args, record, "")
    elif args.out:
        print(f"{spec}: {G.n} vertices, {G.num_edges} edges, array {arr if arr else 'not distance-regular'} -> {args.out}")
    else:
        sys.stdout.write(body)
    return 0


def cmd_spectrum(args):
    src = args.source
    if src.lstrip().startswith("{"):
        arr = IntersectionArray.parse(src)
        sp = spectrum(arr)
        pairs = sp.pairs()
        record = {"source": "array", "array": str(arr), "nu": str(sp.nu), "feasible": sp.feasible,
                  "spectrum": _spectrum_pairs(pairs)}
    else:
        G = _load(src)
        pairs = xl.exact_spectrum(G)
        record = {"source": "graph", "file": src, "vertices": G.n, "spectrum": _spectrum_pairs(pairs)}
    text = "\n".join(f"{str(t):>24}  multiplicity {m}" for t, m in pairs)
    _emit(args, record, text)
    return 0


def cmd_local_check(args):
    G = _load(args.file)
    summary = local_property(G, Fraction(args.t))
    _emit(args, summary.to_dict(), summary.text())
    return 0 if summary.all_pass else 1


def cmd_feasible(args):
    arr = IntersectionArray.parse(args.array)
    rep = feasibility(arr, ("quadrangle",) if args.quadrangle else ())
    _emit(args, rep.to_dict(), rep.text())
    return 0


def cmd_scan(args):
    res = scan_diameter2() if args.which == "diam2" else scan_diameter3plus()
    _emit(args, res.to_dict(), res.text())
    return 0


_SUITES = {"thm-1-1": verify_smallest_eigenvalue_list, "thm-1-2": verify_local_eigenvalue_list, "props": verify_properties}


def cmd_verify(args):
    reports = _SUITES[args.suite]()
    failed = [r for r in reports if r.status == "fail"]
    text = "\n".join(r.text() for r in reports)
    text += f"\n{len(reports)} entries, {len(failed)} failed" + (": " + ", ".join(r.name for r in failed) if failed else "")
    _emit(args, {"suite": args.suite, "reports": [r.to_dict() for r in reports], "failed": [r.name for r in failed]}, text)
    return 1 if failed else 0


def cmd_iso(args):
    G, H = _load(args.a), _load(args.b)
    perm = find_isomorphism(G, H)
    record = {"isomorphic": perm is not None, "map": perm}
    _emit(args, record, "isomorphic" if perm is not None else "not isomorphic")
    return 0


def make_parser():
    p = argparse.ArgumentParser(prog="drglocal", description="Exact tools for distance-regular graphs and local eigenvalues.",
                                epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_, epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    sp = add("construct", cmd_construct, "build a named family member and write native format")
    sp.add_argument("family", help="e.g. 'Paley(13)', 'Johnson 6 3', 'doro'")
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--out", help="output file (default stdout)")

    sp = add("spectrum", cmd_spectrum, "exact spectrum of a graph file or an intersection array")
    sp.add_argument("source", help="graph file or array literal such as '{5,4;1,2}'")

    sp = add("local-check", cmd_local_check, "second largest local eigenvalue <= t at every vertex")
    sp.add_argument("file")
    sp.add_argument("--t", default="1", help="rational threshold (default 1)")

    sp = add("feasible", cmd_feasible, "run the feasibility filters on an array")
    sp.add_argument("array")
    sp.add_argument("--quadrangle", action="store_true", help="assume an induced quadrangle")

    sp = add("scan", cmd_scan, "parameter scans")
    sp.add_argument("which", choices=["diam2", "diam3"])

    sp = add("verify", cmd_verify, "verification suites")
    sp.add_argument("suite", choices=sorted(_SUITES))

    sp = add("iso", cmd_iso, "isomorphism test of two graph files")
    sp.add_argument("a")
    sp.add_argument("b")
    return p


def run(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except DrgError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:  # noqa: BLE001
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 10


def main():
    sys.exit(run())
