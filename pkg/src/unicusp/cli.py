"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .candidates import FamilyKind
from .diophantine import solve_cbar2_equation
from .obstructions import FilterSet
from .pell import decompose, family_generate, lucas_fibonacci_index, pell_enumerate
from .polyalg import kashiwara_sequence, pencil_degree_check
from .report import Cbar2Range, classify, search
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _positive(name: str, v: int, least: int) -> int:
    if v < least:
        raise UsageError(f"{name} must be >= {least}, got {v}")
    return v


def cmd_search(args) -> int:
    _positive("--dmax", args.dmax, 3)
    _positive("--jobs", args.jobs, 1)
    try:
        fs = FilterSet.parse(args.filters)
        crange = Cbar2Range.parse(args.cbar2)
    except (KeyError, ValueError) as e:
        raise UsageError(str(e)) from e
    rep = search(args.dmax, fs, crange, jobs=args.jobs)
    _emit(rep.render(args.format), args.out)
    return 0


def cmd_classify(args) -> int:
    rep = classify(args.d, args.a, args.b)
    _emit(rep.render(args.format), args.out)
    return 0


def cmd_families(args) -> int:
    _positive("--dmax", args.dmax, 3)
    kinds = [k.strip().lower() for k in args.kinds.split(",") if k.strip()]
    bad = [k for k in kinds if k not in {f.value for f in FamilyKind}]
    if bad:
        raise UsageError(f"unknown family kind(s) {bad}; choose from a,b,c,d,e,f")
    rows = [{"family": k, "d": t.d, "a": t.a, "b": t.b, "cbar2": t.cbar2}
            for k in kinds for t in family_generate(k, args.dmax)]
    if args.format == "json":
        text = json.dumps({"dmax": args.dmax, "members": rows}, indent=2, sort_keys=True) + "\n"
    else:
        text = "".join(f"{r['family']}  ({r['d']},{r['a']},{r['b']})  C^2={r['cbar2']}\n" for r in rows)
    _emit(text, args.out)
    return 0


def cmd_pell(args) -> int:
    _positive("--ymax", args.ymax, 1)
    rows = []
    for s in pell_enumerate(args.ymax):
        dec = decompose(s)
        rows.append({"x": s.x, "y": s.y, "fibonacci_index": lucas_fibonacci_index(s),
                     "form": dec.family.value, "j": dec.j, "sign": dec.sign})
    if args.format == "json":
        text = json.dumps({"ymax": args.ymax, "solutions": rows}, indent=2, sort_keys=True) + "\n"
    else:
        text = "".join(f"({r['x']}, {r['y']})  index {r['fibonacci_index']}  form {r['form']}"
                       + (f" j={r['j']} sign={r['sign']:+d}" if r["j"] is not None else "") + "\n"
                       for r in rows)
    _emit(text, args.out)
    return 0


def cmd_diophantine(args) -> int:
    if not 0 <= args.x <= 5:
        raise UsageError(f"--x must lie in [0, 5], got {args.x}")
    case = solve_cbar2_equation(args.x)
    rows = [{"a": c.a, "reason": c.reason, "d": c.d, "b": c.b, "cbar2": c.cbar2} for c in case.examined]
    if args.format == "json":
        text = json.dumps({"x": args.x, "divisor_bound": case.divisor_bound, "candidates": rows,
                           "solutions": [list(t.as_tuple()) for t in case.solutions]},
                          indent=2, sort_keys=True) + "\n"
    else:
        lines = [f"x={args.x}: a-1 divides {case.divisor_bound}"]
        for r in rows:
            tail = f"  (d,a,b)=({r['d']},{r['a']},{r['b']}) C^2={r['cbar2']}" if r["d"] is not None else ""
            lines.append(f"  a={r['a']}: {r['reason']}{tail}")
        lines.append("solutions: " + ", ".join(str(t) for t in case.solutions))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_construct(args) -> int:
    _positive("--smax", args.smax, 1)
    pairs = kashiwara_sequence(args.smax)
    out = []
    for p in pairs:
        row = {"s": p.s, "degree": p.degree, "exponent_used": p.exponent_used,
               "stated_exponent": p.stated_exponent, "note": p.note}
        if p.s >= 0:
            pc = pencil_degree_check(p.s, p)
            row["pencil"] = {"fibonacci_identity": pc.identity_holds,
                             "measured_degrees": list(pc.measured_degrees),
                             "measured_identity": pc.measured_identity_holds}
        if args.emit_polys:
            row["P"] = p.P.to_text()
        out.append(row)
    if args.format == "json":
        text = json.dumps({"smax": args.smax, "pairs": out}, indent=2, sort_keys=True) + "\n"
    else:
        lines = []
        for r in out:
            lines.append(f"s={r['s']}: deg P = {r['degree']}"
                         + (f", exponent {r['exponent_used']}" if r["exponent_used"] is not None else ""))
            if r["note"]:
                lines.append(f"  note: {r['note']}")
            if "P" in r:
                lines.append(f"  P = {r['P']}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    try:
        results = run_suite(args.suite)
    except KeyError as e:
        raise UsageError(e.args[0]) from e
    if args.format == "json":
        text = json.dumps([{"suite": r.name, "passed": r.passed, "lines": r.lines} for r in results],
                          indent=2) + "\n"
    else:
        text = "".join(r.summary() + "\n" + "".join(f"  {ln}\n" for ln in r.lines) for r in results)
        failed = [r.name for r in results if not r.passed]
        text += f"\n{len(results) - len(failed)}/{len(results)} suites passed"
        text += (f"; failing: {', '.join(failed)}\n" if failed else "\n")
    _emit(text, args.out)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unicusp", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("table", "json", "csv")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    sp = sub.add_parser("search", help="classify every genus-valid triple up to a degree")
    sp.add_argument("--dmax", type=int, required=True)
    sp.add_argument("--filters", default="FULL", help="preset (BOUNDED_SEARCH, FULL) or comma-separated filter ids")
    sp.add_argument("--cbar2", default=None, metavar="MIN..MAX",
                    help="restrict C^2, e.g. --cbar2=..-2 or --cbar2=-7..-2")
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("classify", help="full filter trace for one triple")
    for name in ("d", "a", "b"):
        sp.add_argument(name, type=int)
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("families", help="list members of the realizable families")
    sp.add_argument("--kinds", default="a,b,c,d,e,f")
    sp.add_argument("--dmax", type=int, required=True)
    common(sp, ("table", "json"))
    sp.set_defaults(func=cmd_families)

    sp = sub.add_parser("pell", help="solutions of x^2 - 5y^2 = -4")
    sp.add_argument("--ymax", type=int, required=True)
    common(sp, ("table", "json"))
    sp.set_defaults(func=cmd_pell)

    sp = sub.add_parser("diophantine", help="case analysis of the C^2 <= -2 equation for one x")
    sp.add_argument("--x", type=int, required=True)
    common(sp, ("table", "json"))
    sp.set_defaults(func=cmd_diophantine)

    sp = sub.add_parser("construct", help="build the recursive polynomial pairs")
    sp.add_argument("--smax", type=int, required=True)
    sp.add_argument("--emit-polys", action="store_true")
    common(sp, ("table", "json"))
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="run acceptance suites")
    sp.add_argument("--suite", default="all", help="all, " + ", ".join(SUITES))
    common(sp, ("table", "json"))
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"unicusp {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
