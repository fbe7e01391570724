"""Command line: per-case reports and the verification suite.

    g2series report --case so4 --format json
    g2series verify --case all

Exit status: 0 when every check passes, 1 when one fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .inertial import CASES, Case, canonical_ram
from .verification import SCOPES, asymptotic_checks, report_sections, run_checks

__all__ = ["main", "run_report", "run_verify", "render_markdown", "SCHEMA_VERSION"]

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _check_modulus(case: str, modulus: int) -> None:
    if modulus < 1:
        raise UsageError("--ramified-order-modulus must be positive")
    targets = CASES if case == "all" else (Case(case),)
    for c in targets:
        try:
            canonical_ram(c, modulus)
        except ValueError as exc:
            raise UsageError(f"{c}: {exc}") from None


def run_report(case: str, degree: int = 4, modulus: int = 12) -> dict:
    if case not in {c.value for c in CASES}:
        raise UsageError(f"unknown case {case!r}")
    _check_modulus(case, modulus)
    sections = [{"title": title, "rows": rows} for title, rows in report_sections(case)]
    checks = run_checks(case, degree, modulus)
    if case == Case.SO4.value:
        ranks = {r["name"]: r["observed"] for r in asymptotic_checks(degree)
                 if r["name"].startswith("so4.j.rank")}
        sections.append({"title": "evaluation ranks", "rows": [
            {"origin": ranks[f"so4.j.rank.origin.D{degree}"],
             "generic": ranks[f"so4.j.rank.generic.D{degree}"][0], "degree": degree}]})
    return {"schema_version": SCHEMA_VERSION, "case": case,
            "parameters": {"degree": degree, "ramified_order_modulus": modulus,
                           "ramified_pair": list(canonical_ram(case, modulus))},
            "sections": sections, "checks": checks}


def _cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return "; ".join(f"{k}: {_cell(v)}" for k, v in value.items())
    return str(value).replace("|", "\\|")


def _table(rows: list[dict]) -> list[str]:
    if not rows:
        return ["(none)"]
    keys = list(rows[0])
    out = ["| " + " | ".join(keys) + " |", "|" + "---|" * len(keys)]
    out += ["| " + " | ".join(_cell(r.get(k, "")) for k in keys) + " |" for r in rows]
    return out


def render_markdown(doc: dict) -> str:
    lines = [f"# Report: {doc['case']}", ""]
    lines += [f"- {k}: {_cell(v)}" for k, v in doc["parameters"].items()]
    for section in doc["sections"]:
        lines += ["", f"## {section['title']}", ""] + _table(section["rows"])
    lines += ["", "## checks", ""]
    lines += _table([{"check": c["name"], "claim": c["claim"],
                      "result": "pass" if c["pass"] else "FAIL"} for c in doc["checks"]])
    return "\n".join(lines) + "\n"


def run_verify(scope: str = "all", degree: int = 4, modulus: int = 12,
               stream=None) -> int:
    stream = stream or sys.stdout
    if scope not in SCOPES:
        raise UsageError(f"unknown scope {scope!r}")
    _check_modulus(scope, modulus)
    rows = run_checks(scope, degree, modulus)
    for r in rows:
        status = "PASS" if r["pass"] else "FAIL"
        extra = "" if r["pass"] else f" expected={r['expected']!r} observed={r['observed']!r}"
        print(f"{status} {r['name']}: {r['claim']}{extra}", file=stream)
    failed = [r["name"] for r in rows if not r["pass"]]
    print(f"{len(rows) - len(failed)}/{len(rows)} checks passed", file=stream)
    if failed:
        print("failing: " + ", ".join(failed), file=stream)
        return EXIT_FAIL
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="g2series",
                                description="Extended quotients and the principal series of G2.")
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree", type=int, default=4,
                        help="polynomial truncation for the based-ring checks")
    common.add_argument("--ramified-order-modulus", type=int, default=12, dest="modulus",
                        metavar="N", help="ramified parts live in Z/N")
    common.add_argument("--out", default=None, help="output file (default: stdout)")
    rep = sub.add_parser("report", parents=[common], help="tables for one case")
    rep.add_argument("--case", required=True)
    rep.add_argument("--format", choices=("json", "md"), default="md")
    ver = sub.add_parser("verify", parents=[common], help="run the checks")
    ver.add_argument("--case", default="all", help="'all' or a case tag")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.degree < 1:
        print("error: --degree must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        if args.command == "report":
            doc = run_report(args.case, args.degree, args.modulus)
            if args.format == "json":
                out.write(json.dumps(doc, indent=2, ensure_ascii=False, default=str) + "\n")
            else:
                out.write(render_markdown(doc))
            return EXIT_OK
        return run_verify(args.case, args.degree, args.modulus, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if args.out:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
