"""Command-line front end.

    ordtri analyze POINTS
    ordtri find-triangle POINTS --c C [--method brute|case1|auto]
    ordtri verify-lemmas POINTS [--k-max K]
    ordtri construct --kind KIND [--params key=value ...] --out FILE
    ordtri bound --n N [--c C] [--B B] [--l L] [--line-count M]
    ordtri bound --threshold --c C
    ordtri search DIR --c C --results FILE [--jobs J]

Exit status: 0 success, 1 "not found" / "does not hold", 2 usage or input
errors.  Primary output is JSON on stdout with a fixed key order.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional, Sequence

import mpmath

from . import __version__
from .bounds import DEFAULT_DPS, bound_report, final_bound, threshold_n
from .constructions import KINDS, ConstructionSpec, generate
from .errors import NoRichLine, OrdtriError, Unsatisfied
from .geometry import format_points, read_points
from .incidence import analyze
from .lemmas import verify_all
from .ordinary import find_triangle

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_USAGE = 2


def _dump(payload: Any) -> str:
    return json.dumps(payload, separators=(", ", ": "))


def _digits(value, dps: int) -> str:
    return mpmath.nstr(value, dps, strip_zeros=False)


def _emit(payload: Any) -> None:
    print(_dump(payload))


def triangle_payload(path: str, c: int, method: str) -> tuple[dict, int]:
    P = read_points(path)
    S, _ = analyze(P)
    payload: dict[str, Any] = {"file": str(path), "n": len(P), "c": c}
    try:
        cert, used = find_triangle(P, S, c, method)
    except NoRichLine as exc:
        payload.update(method=method, status="no_rich_line", reason=str(exc))
        return payload, EXIT_NOT_FOUND
    except Unsatisfied as exc:
        payload.update(method=method, status="unsatisfied", reason=str(exc))
        return payload, EXIT_NOT_FOUND
    payload["method"] = used
    if cert is None:
        payload["status"] = "none"
        return payload, EXIT_NOT_FOUND
    payload["status"] = "found"
    payload["certificate"] = cert.to_json(P)
    return payload, EXIT_OK


def cmd_analyze(args) -> int:
    P = read_points(args.points)
    _, summary = analyze(P)
    _emit(summary.to_json())
    return EXIT_OK


def cmd_find_triangle(args) -> int:
    payload, status = triangle_payload(args.points, args.c, args.method)
    _emit(payload)
    return status


def cmd_verify_lemmas(args) -> int:
    P = read_points(args.points)
    _, summary = analyze(P)
    status = EXIT_OK
    for verdict in verify_all(summary, range(2, args.k_max + 1)):
        _emit(verdict.to_json())
        if not verdict.ok:
            status = EXIT_NOT_FOUND
    return status


def _parse_param(text: str) -> tuple[str, Any]:
    key, sep, raw = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key, value


def cmd_construct(args) -> int:
    spec = ConstructionSpec(args.kind, dict(args.params or []))
    P = generate(spec)
    header = f"{spec.kind} {_dump(spec.params)}"
    text = format_points(P, header)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        _emit({"kind": spec.kind, "params": spec.params, "n": len(P), "out": args.out})
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.threshold:
        if args.c is None:
            raise OrdtriError("--threshold requires --c")
        n = threshold_n(args.c, args.precision)
        payload = {
            "c": args.c,
            "threshold_n": n,
            "final_bound_at_threshold": _digits(final_bound(n, args.precision), args.precision),
            "final_bound_before_threshold": (
                _digits(final_bound(n - 1, args.precision), args.precision) if n - 1 > 27 else None
            ),
            "precision": args.precision,
            "note": (
                f"final_bound(n) < c first holds at n = {n}; "
                f"the result is sometimes quoted for n > {n}, which is implied"
            ),
        }
        _emit(payload)
        return EXIT_OK
    if args.n is None:
        raise OrdtriError("bound requires --n (or --threshold --c)")
    report = bound_report(args.n, args.c, args.l, args.line_count, args.B, args.precision)
    _emit(report.to_json())
    return EXIT_OK


def _search_one(job: tuple[str, int, str]) -> dict:
    path, c, method = job
    inputs = {"file": path, "c": c, "method": method}
    try:
        payload, status = triangle_payload(path, c, method)
    except OrdtriError as exc:
        payload, status = {"error": str(exc)}, EXIT_USAGE
    return {"command": "find-triangle", "inputs": inputs, "outputs": payload, "exit_status": status}


def cmd_search(args) -> int:
    files = sorted(str(p) for p in Path(args.directory).glob(args.pattern))
    jobs = [(f, args.c, args.method) for f in files]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_search_one, jobs))
    else:
        results = [_search_one(j) for j in jobs]
    found = 0
    with open(args.results, "a", encoding="utf-8") as fh:
        for record in results:
            record["timestamp"] = datetime.now(timezone.utc).isoformat()
            record["tool_version"] = __version__
            fh.write(json.dumps(record) + "\n")
            found += record["exit_status"] == EXIT_OK
    _emit({"files": len(files), "found": found, "results": args.results})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordtri", description="c-ordinary lines and triangles in planar point sets")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="incidence summary of a point set")
    p.add_argument("points")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("find-triangle", help="search for a c-ordinary triangle")
    p.add_argument("points")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--method", choices=("brute", "case1", "auto"), default="auto")
    p.set_defaults(func=cmd_find_triangle)

    p = sub.add_parser("verify-lemmas", help="check the incidence lemmas as oracles")
    p.add_argument("points")
    p.add_argument("--k-max", type=int, default=12)
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser("construct", help="generate a point set")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--params", nargs="*", type=_parse_param, metavar="KEY=VALUE",
                   help="values are parsed as JSON when possible")
    p.add_argument("--out", required=True, help="output file, or - for stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bound", help="evaluate the counting bound")
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--B", type=str, help="regime parameter in [sqrt 2, sqrt 6)")
    p.add_argument("--l", type=int, help="degree of the chosen point")
    p.add_argument("--line-count", type=int)
    p.add_argument("--threshold", action="store_true", help="report the smallest n for --c")
    p.add_argument("--precision", type=int, default=DEFAULT_DPS, help="significant digits")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("search", help="run find-triangle over a directory of point sets")
    p.add_argument("directory")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--method", choices=("brute", "case1", "auto"), default="auto")
    p.add_argument("--pattern", default="*.pts")
    p.add_argument("--results", required=True, help="JSON-lines file to append to")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OrdtriError, OSError, ValueError) as exc:
        print(f"ordtri {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
