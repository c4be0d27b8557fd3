"""Command-line interface.

Exit codes: 0 on success, 1 when a property fails or no square root exists
(the counterexample is printed), 2 on usage or spec errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .algebra import AlgebraError, check_axioms
from .ideals import enumerate_ideals, is_maximal, is_normal, is_prime
from .report import FAIL
from .search import DEFAULT_MAX_SIZE, SEARCH_PROPERTIES, SearchError, counterexample_search, table_dict, table_lines
from .spec import SpecError, load_spec, parse_element, print_spec
from .sqrt import classification_line, sqrt_decision, w_and_classify
from .suites import SUITE_NAMES, SuiteError, run_property_suite

OK, FAILED, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    p.add_argument("--budget", type=int, default=checks.DEFAULT_BUDGET,
                   help="points per sampled property (default %(default)s)")
    p.add_argument("--seed", type=int, default=0, help="sampling seed (default %(default)s)")
    p.add_argument("--depth", type=int, default=8, help="orbit depth (default %(default)s)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="pmvsqrt", description="Exact pseudo MV-algebras and square roots.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    spec_help = "inline JSON, a spec file or a bundled corpus name"

    p = sub.add_parser("check-axioms", parents=[common], help="check A1-A8")
    p.add_argument("spec", help=spec_help)
    p = sub.add_parser("sqrt", parents=[common], help="decide whether a square root exists")
    p.add_argument("spec", help=spec_help)
    p.add_argument("--element", help="element literal to evaluate r at, e.g. '\"1/2\"'")
    p = sub.add_parser("classify", parents=[common], help="Boolean, strict or mixed")
    p.add_argument("spec", help=spec_help)
    p = sub.add_parser("suite", parents=[common], help="run a named property suite")
    p.add_argument("name", choices=SUITE_NAMES, metavar="NAME")
    p.add_argument("spec", help=spec_help)
    p = sub.add_parser("ideals", parents=[common], help="enumerate ideals of a finite algebra")
    p.add_argument("spec", help=spec_help)
    p = sub.add_parser("counterexample", parents=[common], help="search small algebras")
    p.add_argument("--property", required=True, choices=SEARCH_PROPERTIES, metavar="PROPERTY")
    p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE,
                   help="largest carrier size (default %(default)s)")
    p = sub.add_parser("print", parents=[common], help="print the canonical spec")
    p.add_argument("spec", help=spec_help)
    return parser


def _emit(args, data: dict, lines: list[str]):
    if args.json:
        print(json.dumps(data, ensure_ascii=False, indent=2))
    else:
        print("\n".join(lines))


def _report_lines(report) -> list[str]:
    lines = [f"{report.status}, {report.points} points"]
    if report.note:
        lines.append(f"note: {report.note}")
    if report.counterexample is not None:
        lines.append(f"counterexample: {report.counterexample}")
    if report.checks:
        for c in report.checks:
            lines.extend(c.lines("  "))
    return lines


def _cmd_check_axioms(args) -> int:
    M = load_spec(args.spec).algebra
    report = check_axioms(M, args.budget, args.seed)
    _emit(args, report.to_dict(), [M.describe()] + _report_lines(report))
    return FAILED if report.status == FAIL else OK


def _cmd_sqrt(args) -> int:
    M = load_spec(args.spec).algebra
    d = sqrt_decision(M, args.budget, args.seed)
    data = {"algebra": M.describe(), "status": d.status, "method": d.method, "reason": d.reason,
            "report": d.report.to_dict() if d.report is not None else None}
    if d.status != "found":
        head = "no square root" if d.status == "absent" else "undecided"
        _emit(args, data, [f"{head}; {d.reason}" if d.reason else head])
        return FAILED
    w = d.witness
    data["form"] = w.describe()
    data["verified"] = w.verified
    data["r(0)"] = M.format(w(M.zero))
    lines = [f"square root: {w.describe()} ({w.verified})", f"r(0) = {M.show(w(M.zero))}"]
    if args.element is not None:
        x = parse_element(M, args.element)
        data["element"] = M.format(x)
        data["value"] = M.format(w(x))
        lines.append(f"r({M.show(x)}) = {M.show(w(x))}")
    if w.table is not None and M.size <= 64:
        data["table"] = [[M.format(x), M.format(y)] for x, y in w.table.items()]
    _emit(args, data, lines)
    return OK


def _cmd_classify(args) -> int:
    M = load_spec(args.spec).algebra
    d = sqrt_decision(M, args.budget, args.seed)
    if d.status != "found":
        msg = f"cannot classify: no square root ({d.status}); {d.reason}"
        _emit(args, {"algebra": M.describe(), "status": d.status, "reason": d.reason}, [msg])
        return FAILED
    res = w_and_classify(M, d.witness, args.budget, args.seed)
    line = classification_line(M, res)
    data = {"algebra": M.describe(), "kind": res.kind, "w": M.format(res.w), "v": M.format(res.v),
            "r(0)": M.format(res.r0), "line": line, "notes": res.notes}
    for key, rep in (("boolean_report", res.boolean_report), ("strict_report", res.strict_report)):
        if rep is not None:
            data[key] = rep.to_dict()
    _emit(args, data, [line] + res.notes)
    return FAILED if res.notes else OK


def _cmd_suite(args) -> int:
    M = load_spec(args.spec).algebra
    d = sqrt_decision(M, args.budget, args.seed)
    if d.status != "found":
        msg = f"no square root to test ({d.status}); {d.reason}"
        _emit(args, {"suite": args.name, "status": FAIL, "points": 0, "note": msg}, [msg])
        return FAILED
    report = run_property_suite(args.name, M, d.witness, args.budget, args.seed, args.depth)
    _emit(args, report.to_dict(), _report_lines(report))
    return FAILED if report.status == FAIL else OK


def _cmd_ideals(args) -> int:
    M = load_spec(args.spec).algebra
    rows = []
    for I in enumerate_ideals(M):
        rows.append({"members": [M.format(x) for x in I.sorted()], "show": I.show(),
                     "normal": is_normal(M, I.members), "prime": is_prime(M, I.members),
                     "maximal": is_maximal(M, I.members)})
    lines = [f"{len(rows)} ideals of {M.describe()}"]
    for row in rows:
        flags = [k for k in ("normal", "prime", "maximal") if row[k]]
        lines.append(f"  {row['show']}" + (f"  [{', '.join(flags)}]" if flags else ""))
    _emit(args, {"algebra": M.describe(), "ideals": rows}, lines)
    return OK


def _cmd_counterexample(args) -> int:
    res = counterexample_search(args.property, args.max_size)
    if res is None:
        msg = f"no counterexample to {args.property} up to size {args.max_size}"
        _emit(args, {"property": args.property, "max_size": args.max_size, "found": False}, [msg])
        return OK
    M = res.spec.algebra
    data = {"property": args.property, "max_size": args.max_size, "found": True,
            "spec": res.spec.tree, "table": table_dict(res.table), "report": res.report.to_dict()}
    lines = [f"counterexample: {M.describe()}, {res.size} elements",
             f"spec: {print_spec(res.spec)}"] + table_lines(res.table) + _report_lines(res.report)
    _emit(args, data, lines)
    return FAILED


def _cmd_print(args) -> int:
    spec = load_spec(args.spec)
    text = print_spec(spec)
    _emit(args, {"spec": spec.tree, "algebra": spec.algebra.describe()}, [text])
    return OK


_COMMANDS = {
    "check-axioms": _cmd_check_axioms, "sqrt": _cmd_sqrt, "classify": _cmd_classify,
    "suite": _cmd_suite, "ideals": _cmd_ideals, "counterexample": _cmd_counterexample,
    "print": _cmd_print,
}


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    try:
        return _COMMANDS[args.command](args)
    except (SpecError, SuiteError, SearchError, AlgebraError) as exc:
        print(f"pmvsqrt: error: {exc}", file=sys.stderr)
        return USAGE


def main(argv: list[str] | None = None) -> int:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
