"""Command line: compute, table, oracle, verify.

Exit codes: 0 success, 2 parse or validation error, 3 enumeration cap
exceeded, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .coxeter import CoxeterMatrixError, is_spherical
from .diagrams import build_all, complex_to_dot, graph_to_dot
from .families import FamilyParseError, loads_document, parse_family
from .formulas import h1, h2_report, h3_report, homology_le3
from .golden import published_rows
from .linalg import INTEGERS
from .resolution import homology_dcs
from .verify import SUITES, run_suite, summary
from .words import EnumerationLimitError

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_MISMATCH = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _load_matrix(args):
    if bool(args.family) == bool(getattr(args, "input", None)):
        raise UsageError("give exactly one of --family or --input")
    if args.family:
        return parse_family(args.family), args.family
    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()
    M = loads_document(text)
    name = json.loads(text).get("name") or os.path.basename(args.input)
    return M, name


def _group_json(g) -> dict:
    return {"free_rank": g.free_rank, "torsion": list(g.torsion), "text": str(g)}


def compute_report(M, name: str, literal_a3: bool = False) -> dict:
    D = build_all(M, literal_a3=literal_a3)
    r1 = h1(M, D)
    r2 = h2_report(M, D)
    r3 = h3_report(M, D)
    out = {"name": name, "generators": list(M.names),
           "H1": {**_group_json(r1), "summands": [
               {"source": "odd-components", **_group_json(r1), "detail": ""}]}}
    for key, rep in (("H2", r2), ("H3", r3)):
        out[key] = {**_group_json(rep.group), "summands": [
            {"source": s.source, **_group_json(s.group), "detail": s.detail}
            for s in rep.summands]}
    if literal_a3:
        out["note"] = "diagnostic: alternative A3 edge rule in use"
    return out


def _format_text(rep: dict) -> str:
    lines = [f"W = {rep['name']} ({len(rep['generators'])} generators)"]
    for key in ("H1", "H2", "H3"):
        lines.append(f"{key} = {rep[key]['text']}")
        for s in rep[key]["summands"]:
            if s["torsion"] or s["free_rank"]:
                extra = f"  [{s['detail']}]" if s["detail"] else ""
                lines.append(f"  {s['source']}: {s['text']}{extra}")
    if "note" in rep:
        lines.append(rep["note"])
    return "\n".join(lines) + "\n"


def _emit_diagrams(M, directory: str, literal_a3: bool) -> None:
    os.makedirs(directory, exist_ok=True)
    D = build_all(M, literal_a3=literal_a3)
    for g in D.graphs():
        with open(os.path.join(directory, f"{g.kind}.dot"), "w", encoding="utf-8") as fh:
            fh.write(graph_to_dot(M, g))
    with open(os.path.join(directory, "dotdot_squares.dot"), "w", encoding="utf-8") as fh:
        fh.write(complex_to_dot(M, D.squares))


def cmd_compute(args) -> int:
    M, name = _load_matrix(args)
    rep = compute_report(M, name, literal_a3=args.literal_a3)
    if args.emit_diagrams:
        _emit_diagrams(M, args.emit_diagrams, args.literal_a3)
    if args.out == "json":
        sys.stdout.write(json.dumps(rep, indent=2) + "\n")
    else:
        sys.stdout.write(_format_text(rep))
    return EXIT_OK


def table_rows(max_rank: int) -> list[list[str]]:
    rows = []
    for name, _ in published_rows(max_rank):
        h = homology_le3(parse_family(name))
        rows.append([name, str(h[1]), str(h[2]), str(h[3])])
    return rows


def render_table(max_rank: int, fmt: str) -> str:
    header = ["W", "H1", "H2", "H3"]
    rows = table_rows(max_rank)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    if args.max_rank < 1:
        raise UsageError("--max-rank must be at least 1")
    sys.stdout.write(render_table(args.max_rank, args.out))
    return EXIT_OK


def cmd_oracle(args) -> int:
    M = parse_family(args.family)
    if not is_spherical(M):
        print(f"error: {args.family} is not a finite Coxeter group", file=sys.stderr)
        return EXIT_PARSE
    got = homology_dcs(M, None, args.degree, args.coefficients, cap=args.cap)
    print(f"oracle  H{args.degree}(W; {args.coefficients}) = {got}")
    if args.coefficients == "trivial":
        expected = INTEGERS if args.degree == 0 else homology_le3(M)[args.degree]
        print(f"formula H{args.degree}(W; {args.coefficients}) = {expected}")
        if got != expected:
            print("MISMATCH")
            return EXIT_MISMATCH
        print("MATCH")
    return EXIT_OK


def cmd_verify(args) -> int:
    cases = run_suite(args.suite, slow=args.slow)
    out = summary(args.suite, cases)
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return EXIT_OK if out["failed"] == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxhom",
                                description="Low-degree integral homology of Coxeter groups.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="H1, H2, H3 from the closed formulas")
    c.add_argument("--family", help="family expression, e.g. 'B3' or 'cycle(3,3,3) x A1'")
    c.add_argument("--input", help="JSON matrix document (0 means infinity)")
    c.add_argument("--out", choices=("text", "json"), default="text")
    c.add_argument("--emit-diagrams", metavar="DIR", help="write DOT files for the diagrams")
    c.add_argument("--literal-a3", action="store_true",
                   help="diagnostic: use the alternative A3 edge rule")
    c.set_defaults(func=cmd_compute)

    t = sub.add_parser("table", help="homology table of the finite irreducible types")
    t.add_argument("--max-rank", type=int, default=8)
    t.add_argument("--out", choices=("csv", "md"), default="md")
    t.set_defaults(func=cmd_table)

    o = sub.add_parser("oracle", help="homology from the explicit free resolution")
    o.add_argument("--family", required=True)
    o.add_argument("--degree", type=int, default=3, choices=(0, 1, 2, 3))
    o.add_argument("--coefficients", choices=("trivial", "orientation"), default="trivial")
    o.add_argument("--cap", type=int, default=None, help="element cap (overrides COXHOM_CAP)")
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--slow", action="store_true", help="include H4 in oracle and chain suites")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK
    try:
        return args.func(args)
    except (FamilyParseError, CoxeterMatrixError, UsageError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except EnumerationLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
