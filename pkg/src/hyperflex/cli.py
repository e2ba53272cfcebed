"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 the degree
routes disagree (a bug in this library).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import formulas, verify
from .catalan import trapezoid
from .contact import INFINITE, contact_order, is_kflex_line
from .formulas import LocusKind
from .parser import PolynomialSyntaxError, infer_nvars, parse_point, parse_poly

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_int_list(text: str) -> list[int]:
    """``"3,5,7-9"`` -> ``[3, 5, 7, 8, 9]``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise UsageError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    if not out:
        raise UsageError(f"no values in {text!r}")
    return out


def render_rows(rows: list[dict], fields: list[str], fmt: str, payload=None) -> str:
    if fmt == "json":
        return json.dumps(payload if payload is not None else rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({f: "" if row.get(f) is None else row.get(f) for f in fields})
        return buf.getvalue()
    cells = [[str(f) for f in fields]] + [["" if r.get(f) is None else str(r.get(f)) for f in fields] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(fields))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def cmd_degree(args) -> tuple[str, int]:
    rep = formulas.build_report(args.n, args.d, args.k)
    data = rep.to_dict()
    if args.format == "json":
        text = json.dumps(data, indent=2) + "\n"
    elif args.format == "csv":
        row = dict(data)
        for name in formulas.ROUTES:
            row[f"route_{name}"] = data["routes"][name]
        fields = ["n", "d", "k", "effective_k", "stabilized", "locus", "dim", "degree"]
        fields += [f"route_{r}" for r in formulas.ROUTES] + ["routes_agree", "formula_value_when_empty"]
        text = render_rows([row], fields, "csv")
    else:
        lines = [
            f"n={rep.n} d={rep.d} k={rep.k}" + (f" (stabilized to k={rep.effective_k})" if rep.stabilized else ""),
            f"locus: {rep.locus}",
            f"degree: {rep.degree}",
        ]
        for name in formulas.ROUTES:
            value = rep.routes.get(name)
            lines.append(f"route {name}: {value if value is not None else 'n/a (' + rep.route_errors[name] + ')'}")
        if rep.formula_value_when_empty is not None:
            lines.append(f"formula value (locus empty): {rep.formula_value_when_empty}")
        lines.append(f"routes agree: {'yes' if rep.routes_agree else 'NO'}")
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if rep.routes_agree else EXIT_DISAGREE


def table_rows(ns: list[int], ds: list[int]) -> tuple[list[dict], bool]:
    rows = []
    agree = True
    for n in ns:
        if n < 2:
            raise UsageError(f"n must be >= 2, got {n}")
        for k in range(n + 1, 2 * n):
            cells = []
            for d in ds:
                rep = formulas.build_report(n, d, k)
                agree &= rep.routes_agree
                cells.append(
                    {
                        "d": d,
                        "degree": str(rep.degree),
                        "locus": rep.locus.kind.name,
                        "dim": rep.locus.dim,
                        "empty": rep.locus.kind is LocusKind.EMPTY,
                        "stabilized": rep.stabilized,
                    }
                )
            poly = formulas.format_polynomial(formulas.degree_polynomial(n, k))
            rows.append({"n": n, "k": k, "polynomial": poly, "cells": cells})
    return rows, agree


def _cell_text(cell: dict) -> str:
    text = cell["degree"]
    if cell["empty"]:
        text += "*"
    if cell["stabilized"]:
        text += "~"
    return text


def cmd_table(args) -> tuple[str, int]:
    ns = parse_int_list(args.n)
    ds = parse_int_list(args.d) if args.d else []
    if any(d < 1 for d in ds):
        raise UsageError("degrees must be positive")
    rows, agree = table_rows(ns, ds)
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        flat = []
        for row in rows:
            entry = {"n": row["n"], "k": row["k"], "polynomial": row["polynomial"]}
            for cell in row["cells"]:
                entry[f"d={cell['d']}"] = cell["degree"] if args.format == "csv" else _cell_text(cell)
                entry[f"d={cell['d']}_locus"] = cell["locus"]
            flat.append(entry)
        fields = ["n", "k", "polynomial"]
        if args.format == "csv":
            for d in ds:
                fields += [f"d={d}", f"d={d}_locus"]
        else:
            fields += [f"d={d}" for d in ds]
        text = render_rows(flat, fields, args.format)
        if args.format == "text" and ds:
            text += "* empty locus (degree 0)   ~ k > d+1, stabilized at k = d+1\n"
    return text, EXIT_OK if agree else EXIT_DISAGREE


def cmd_stratification(args) -> tuple[str, int]:
    n, d = args.n, args.d
    rows = []
    agree = True
    for k in range(1, d + 2):
        rep = formulas.build_report(n, d, k)
        agree &= rep.routes_agree
        rows.append({"k": k, "locus": rep.locus.kind.name, "dim": rep.locus.dim, "degree": str(rep.degree)})
    ruled, ruled_deg = formulas.ruled_locus(n, d)
    payload = {
        "n": n,
        "d": d,
        "strata": rows,
        "ruled": {"locus": ruled.kind.name, "dim": ruled.dim, "degree": str(ruled_deg)},
    }
    text = render_rows(rows, ["k", "locus", "dim", "degree"], args.format, payload)
    if args.format == "text":
        text += f"V_k = V_{d + 1} for all k > {d + 1}; ruled locus: {ruled}, degree {ruled_deg}\n"
    return text, EXIT_OK if agree else EXIT_DISAGREE


def cmd_lines(args) -> tuple[str, int]:
    count = formulas.lines_on_general_hypersurface(args.n)
    row = {"n": args.n, "d": 2 * args.n - 3, "lines": str(count)}
    if args.format == "text":
        return f"{count}\n", EXIT_OK
    return render_rows([row], ["n", "d", "lines"], args.format, row), EXIT_OK


def cmd_catalan(args) -> tuple[str, int]:
    rows = trapezoid(args.a, args.rows)
    if args.format == "json":
        return json.dumps({"a": args.a, "rows": [[str(v) for v in r] for r in rows]}, indent=2) + "\n", EXIT_OK
    width = args.rows + args.a - 1
    fields = ["u"] + [str(v) for v in range(width)]
    flat = [{"u": u, **{str(v): x for v, x in enumerate(r)}} for u, r in enumerate(rows)]
    return render_rows(flat, fields, args.format), EXIT_OK


def cmd_contact(args) -> tuple[str, int]:
    nvars = args.nvars or infer_nvars(args.poly)
    try:
        f = parse_poly(args.poly, nvars)
        p, q = parse_point(args.p), parse_point(args.q)
    except PolynomialSyntaxError as exc:
        raise UsageError(str(exc)) from exc
    order = contact_order(f, p, q)
    shown = "INFINITE" if order == INFINITE else str(order)
    row = {"poly": str(f), "p": args.p, "q": args.q, "order": shown}
    if args.k is not None:
        row["k"] = args.k
        row["kflex"] = is_kflex_line(f, p, q, args.k)
    if args.format == "text":
        text = shown + "\n"
        if args.k is not None:
            text += f"{args.k}-flex line: {'yes' if row['kflex'] else 'no'}\n"
        return text, EXIT_OK
    fields = ["poly", "p", "q", "order"] + (["k", "kflex"] if args.k is not None else [])
    return render_rows([row], fields, args.format, row), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    results = verify.run(args.suite)
    ok = all(r.ok for r in results)
    if args.format == "json":
        payload = [{"suite": r.name, "checks": r.checks, "passed": r.ok, "failures": r.failures} for r in results]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = []
        for r in results:
            lines.append(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.checks} checks, {len(r.failures)} failures")
            lines.extend(f"  counterexample: {msg}" for msg in r.failures)
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperflex", description="Degrees of k-flex loci of general hypersurfaces.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "csv", "json"], default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degree", parents=[common], help="dimension and degree of V_k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("table", parents=[common], help="degree table for n+1 <= k <= 2n-1")
    p.add_argument("--n", required=True, help="values or ranges, e.g. 2-6")
    p.add_argument("--d", help="degrees to evaluate, e.g. 3,5,10-12")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("stratification", parents=[common], help="V_k for k = 1..d+1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_stratification)

    p = sub.add_parser("lines", parents=[common], help="lines on a general degree 2n-3 hypersurface")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_lines)

    p = sub.add_parser("catalan", parents=[common], help="Catalan trapezoid table")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("contact", parents=[common], help="contact order of a line with a hypersurface")
    p.add_argument("--poly", required=True)
    p.add_argument("--p", required=True, help="comma-separated rationals")
    p.add_argument("--q", required=True, help="comma-separated rationals")
    p.add_argument("--k", type=int)
    p.add_argument("--nvars", type=int, help="number of variables (default: inferred from the text)")
    p.set_defaults(func=cmd_contact)

    p = sub.add_parser("verify", parents=[common], help="run cross-route property suites")
    p.add_argument("suite", nargs="?", default="all", choices=list(verify.SUITES) + ["all"])
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
