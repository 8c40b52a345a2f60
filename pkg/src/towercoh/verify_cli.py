"""Command-line verification front end.

    verify run <scenario>|all [--json] [--jobs N]
    verify query --space S --expr E [--twist T] [--ext E2] [--euler] [--json]
    verify check --collection FILE [--json]

Exit codes: 0 all pass, 1 assertion failure, 2 usage/parse error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .cohomology import (check_collection, cohomology, ext_table,
                         CohomologyTable)
from .laurent import ResourceLimitError
from .scenarios import ALL_ORDER, REGISTRY, table_text
from .tower import ParseError, Tensor, ValidationError, build_space, parse_expr

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _run_assertion(assertion):
    start = time.perf_counter()
    try:
        ok, expected, got = assertion.run()
        status = "pass" if ok else "fail"
    except ResourceLimitError:
        raise  # handled at the command level: exit code 3
    except Exception as exc:  # pragma: no cover - defensive
        status, expected, got = "error", "", "%s: %s" % (type(exc).__name__, exc)
    ms = int((time.perf_counter() - start) * 1000)
    return {
        "id": assertion.id,
        "anchor": assertion.anchor,
        "provenance": assertion.provenance,
        "status": status,
        "expected": expected,
        "got": got,
        "ms": ms,
    }


def run_scenario(name: str, jobs: int = 1) -> dict:
    """Execute one scenario; returns the report dict (see --json schema)."""
    scenario = REGISTRY[name]
    assertions = scenario.build()
    jobs = max(1, jobs)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_assertion, assertions))
    else:
        results = [_run_assertion(a) for a in assertions]
    results.sort(key=lambda r: r["id"])
    return {
        "scenario": name,
        "description": scenario.description,
        "assertions": results,
        "passed": sum(1 for r in results if r["status"] == "pass"),
        "failed": sum(1 for r in results if r["status"] == "fail"),
        "errors": sum(1 for r in results if r["status"] == "error"),
    }


def _print_report(report: dict, verbose: bool = False):
    print("scenario %s: %s" % (report["scenario"], report["description"]))
    for r in report["assertions"]:
        if r["status"] == "pass" and not verbose:
            continue
        print("  %-5s %s  [%s: %s]" % (r["status"].upper(), r["id"],
                                       r["provenance"], r["anchor"]))
        if r["status"] != "pass":
            print("        expected: %s" % r["expected"])
            print("        got:      %s" % r["got"])
    print("  %d passed, %d failed, %d errors"
          % (report["passed"], report["failed"], report["errors"]))


def _cmd_run(args) -> int:
    names = ALL_ORDER if args.scenario == "all" else [args.scenario]
    unknown = [n for n in names if n not in REGISTRY]
    if unknown:
        print("unknown scenario %r; known: %s"
              % (unknown[0], ", ".join(ALL_ORDER + ["all"])), file=sys.stderr)
        return EXIT_USAGE
    reports = []
    code = EXIT_PASS
    try:
        for n in names:
            rep = run_scenario(n, jobs=args.jobs)
            reports.append(rep)
            if rep["failed"] or rep["errors"]:
                code = EXIT_FAIL
    except ResourceLimitError as exc:
        print("resource limit exceeded: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    if args.json:
        payload = reports[0] if len(reports) == 1 else {"scenarios": reports}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for rep in reports:
            _print_report(rep, verbose=args.verbose)
    return code


def _table_json(table: CohomologyTable):
    return table.to_json()


def _cmd_query(args) -> int:
    try:
        X = build_space(args.space)
        e = parse_expr(args.expr, X)
        twist = parse_expr(args.twist, X) if args.twist else None
        if args.ext:
            # the twist lands on the target: Ext^*(E, E2 (x) T)
            e2 = parse_expr(args.ext, X)
            if twist is not None:
                e2 = Tensor(e2, twist)
            table = ext_table(e, e2, X)
            label = "Ext^*(%s, %s%s)" % (args.expr, args.ext,
                                         " (x) " + args.twist if args.twist else "")
        else:
            if twist is not None:
                e = Tensor(e, twist)
            table = cohomology(e, X)
            label = "H^*(%s%s)" % (args.expr,
                                   " (x) " + args.twist if args.twist else "")
    except (ParseError, ValidationError) as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print("resource limit exceeded: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    payload = {
        "space": str(X),
        "dim": X.dim,
        "query": label,
        "table": _table_json(table),
        "total_dim": table.total_dim(),
    }
    if args.euler:
        chi = table.euler()
        payload["euler"] = {"module": chi.to_json(), "dim": chi.dim()}
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("space: %s (dim %d)" % (X, X.dim))
        print(label + ":")
        print("  " + table_text(table).replace("; ", "\n  "))
        if args.euler:
            chi = table.euler()
            print("euler characteristic: %s (dim %d)" % (chi, chi.dim()))
    return EXIT_PASS


def _parse_collection_file(text: str):
    """First line: tower spec.  Optional 'mode:'/'twists:' header.  Blocks of
    expressions separated by blank lines."""
    lines = text.splitlines()
    lines = [ln for ln in lines if not ln.strip().startswith("#")]
    if not lines:
        raise ParseError("empty collection file", 0)
    space_spec = lines[0]
    mode = "plain"
    body_start = 1
    if len(lines) > 1 and lines[1].strip().lower().startswith("mode:"):
        header = lines[1]
        for piece in header.split(";"):
            piece = piece.strip()
            if piece.lower().startswith("mode:"):
                mode = piece.split(":", 1)[1].strip()
            # a "twists: a..b" range is implied by the number of blocks
        body_start = 2
    blocks = [[]]
    for ln in lines[body_start:]:
        if not ln.strip():
            if blocks[-1]:
                blocks.append([])
            continue
        blocks[-1].append(ln.strip())
    if blocks and not blocks[-1]:
        blocks.pop()
    return space_spec, mode, blocks


def _cmd_check(args) -> int:
    try:
        with open(args.collection) as fh:
            text = fh.read()
        space_spec, mode, blocks = _parse_collection_file(text)
        X = build_space(space_spec)
        parsed = [[parse_expr(t, X) for t in block] for block in blocks]
        report = check_collection(parsed, X, mode)
    except (ParseError, ValidationError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print("resource limit exceeded: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    if args.json:
        payload = {
            "space": str(X),
            "mode": mode,
            "objects": [str(e) for e in report.objects],
            "exceptional": [
                {"index": i, "ok": ok,
                 "table": _table_json(t) if isinstance(t, CohomologyTable)
                 else str(t)}
                for i, ok, t in report.exceptional],
            "pairs": [
                {"later": p.later, "earlier": p.earlier, "ok": p.ok,
                 "table": _table_json(p.table) if p.table is not None else None,
                 "error": p.error}
                for p in report.pairs],
            "ok": report.ok,
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("space: %s" % X)
        print("mode: %s, %s" % (mode, report.summary()))
        for i, ok, t in report.exceptional:
            if not ok:
                print("  object %d NOT exceptional: %s"
                      % (i, table_text(t) if isinstance(t, CohomologyTable)
                         else t))
        for p in report.pairs:
            if not p.ok:
                print("  Hom(%d -> %d) != 0: %s"
                      % (p.later, p.earlier,
                         p.error if p.error else table_text(p.table)))
        print("collection OK" if report.ok else "collection FAILED")
    return EXIT_PASS if report.ok else EXIT_FAIL


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="exact cohomology checks on towers of Grassmann bundles")
    sub = parser.add_subparsers(dest="command")

    p_run = sub.add_parser("run", help="run a named scenario (or 'all')")
    p_run.add_argument("scenario")
    p_run.add_argument("--json", action="store_true")
    p_run.add_argument("--jobs", type=int, default=1)
    p_run.add_argument("--verbose", action="store_true",
                       help="also list passing assertions")

    p_query = sub.add_parser("query", help="ad-hoc cohomology query")
    p_query.add_argument("--space", required=True)
    p_query.add_argument("--expr", required=True)
    p_query.add_argument("--twist")
    p_query.add_argument("--ext")
    p_query.add_argument("--euler", action="store_true")
    p_query.add_argument("--json", action="store_true")

    p_check = sub.add_parser("check", help="check a collection file")
    p_check.add_argument("--collection", required=True)
    p_check.add_argument("--json", action="store_true")

    args = parser.parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "query":
        return _cmd_query(args)
    if args.command == "check":
        return _cmd_check(args)
    parser.print_usage(sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
