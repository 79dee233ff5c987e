"""Command-line interface: count, enumerate, bijection, table, render, verify.

Exit status is 0 on success, 1 when a check or consistency test fails or
an input object is invalid, and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks, closed_forms, hamilton, kernels, tilings
from .bijection import ConsistencyError, path_to_tiling, tiling_to_path
from .grid import build_grid
from .hamilton import ENUMERATION_LIMIT, EnumerationLimitError, HamPath
from .render import KINDS, RenderSpec, render_ascii, render_svg
from .tilings import Domino, Tiling

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _cell_size(text):
    value = _positive(text)
    if value < 8:
        raise argparse.ArgumentTypeError(f"cell size must be at least 8: {value}")
    return value


def _fixed(x) -> str:
    return f"{x:.12f}"


def _emit(args, text_lines, payload):
    if args.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _check_size(args, p, q):
    if p * q > ENUMERATION_LIMIT and not args.force:
        raise UsageError(f"DGG_{{{p},{q}}} has more than {ENUMERATION_LIMIT} "
                         "vertices; pass --force to enumerate anyway")


def cmd_count(args) -> int:
    p, q = args.p, args.q
    methods = ["enumerate", "tilings", "kasteleyn"] if args.all_methods else [args.method]
    if "enumerate" in methods:
        _check_size(args, p, q)
    counts, lines, payload = {}, [], {"p": p, "q": q}
    for m in methods:
        if m == "kasteleyn":
            k = closed_forms.kasteleyn_count(p, q)
            counts[m] = k.rounded
            payload["kasteleyn"] = {"raw": _fixed(k.raw), "rounded": k.rounded,
                                    "residual": _fixed(k.residual)}
            text = f"{_fixed(k.raw)} (rounded {k.rounded}, residual {_fixed(k.residual)})"
        else:
            counts[m] = hamilton.count_ham_paths(p, q, method=m, force=True)
            payload[m] = counts[m]
            text = str(counts[m])
        lines.append(f"{m}: {text}" if len(methods) > 1 else text)
    agree = len(set(counts.values())) == 1
    if len(methods) > 1:
        lines.append("agree" if agree else "DISAGREE")
        payload["agree"] = agree
    _emit(args, lines, payload)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_enumerate(args) -> int:
    p, q = args.p, args.q
    _check_size(args, p, q)
    grid = build_grid(p, q)
    if args.kind == "paths":
        items = hamilton.enumerate_ham_paths(grid, force=True)
        spec = RenderSpec("path")
    else:
        items = tilings.enumerate_tilings(p, q)
        spec = RenderSpec("tiling")
    if args.format == "svg-dir" and not args.dir:
        raise UsageError("--format svg-dir needs --dir")
    for i, item in enumerate(items, start=1):
        if args.limit is not None and i > args.limit:
            break
        if args.format == "jsonl":
            print(item.to_json())
        elif args.format == "ascii":
            if i > 1:
                print()
            sys.stdout.write(render_ascii(grid, item, spec))
        else:
            out = Path(args.dir)
            out.mkdir(parents=True, exist_ok=True)
            name = out / f"{args.kind[:-1]}_{i:06d}.svg"
            name.write_text(render_svg(grid, item, spec), encoding="utf-8")
            print(name)
    return EXIT_OK


def _read_json(source: str) -> dict:
    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    return data


def cmd_bijection(args) -> int:
    try:
        data = _read_json(args.input)
        if args.direction == "to-path":
            tiling = Tiling.from_dict(data)
            grid = tiling.grid
            result = tiling_to_path(grid, tiling)
            if path_to_tiling(grid, result) != tiling:
                raise ConsistencyError("roundtrip did not return the input tiling")
        else:
            path = HamPath.from_dict(data)
            grid = path.grid
            result = path_to_tiling(grid, path)
            if tiling_to_path(grid, result) != path:
                raise ConsistencyError("roundtrip did not return the input path")
    except (OSError, ValueError, ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(result.to_json())
    return EXIT_OK


def cmd_table(args) -> int:
    rows = [[hamilton.count_ham_paths(p, q) for p in range(1, args.pmax + 1)]
            for q in range(1, args.qmax + 1)]
    width = max(len(str(v)) for row in rows for v in row)
    width = max(width, len(f"p={args.pmax}"))
    header = " " * 10 + " ".join(f"{'p=' + str(p):>{width}}" for p in range(1, args.pmax + 1))
    lines = [header.rstrip()]
    for q, row in enumerate(rows, start=1):
        lines.append(f"{'h(p,' + str(q) + ')=':<10}" + " ".join(f"{v:>{width}}" for v in row))
    _emit(args, lines, {"pmax": args.pmax, "qmax": args.qmax, "rows": rows})
    return EXIT_OK


def cmd_render(args) -> int:
    grid = build_grid(args.p, args.q)
    kind = args.kind
    try:
        payload = None
        if kind in ("path", "path-with-tiling"):
            if args.input:
                path = HamPath.from_dict(_read_json(args.input))
            else:
                _check_size(args, args.p, args.q)
                path = _nth(hamilton.enumerate_ham_paths(grid, force=True), args.index)
            payload = path if kind == "path" else (path, path_to_tiling(grid, path))
        elif kind == "tiling":
            if args.input:
                payload = Tiling.from_dict(_read_json(args.input))
            else:
                payload = _nth(tilings.enumerate_tilings(args.p, args.q), args.index)
        elif kind == "canonical-numbering":
            if not args.input:
                raise UsageError("canonical-numbering needs --input with a domino object")
            payload = Domino.from_dict(_read_json(args.input))
        spec = RenderSpec(kind, args.cell_size, not args.no_arrows)
        render = render_svg if args.format == "svg" else render_ascii
        text = render(grid, payload, spec)
    except (OSError, ValueError, TypeError, KeyError, ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _nth(items, index):
    for i, item in enumerate(items):
        if i == index:
            return item
    raise ValueError(f"there is no object number {index}")


def cmd_verify(args) -> int:
    wanted = args.section or None
    if wanted:
        known = set(checks.SECTIONS) | {name for name, *_ in checks.CHECKS}
        unknown = [s for s in wanted if s not in known]
        if unknown:
            raise UsageError(f"unknown section(s) {unknown}; choose from {list(checks.SECTIONS)}")
    results = checks.run_checks(wanted)
    ok = all(r.passed for r in results)
    if args.output == "json":
        payload = {"passed": ok, "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail,
             **({"seconds": round(r.seconds, 3)} if args.timing else {})}
            for r in results]}
        if args.timing:
            payload["backend"] = kernels.BACKEND
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in results:
            print(r.line(args.timing))
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--force", action="store_true", default=argparse.SUPPRESS,
                        help=f"allow enumeration above {ENUMERATION_LIMIT} vertices")

    parser = argparse.ArgumentParser(
        prog="dggpaths", parents=[common],
        description="Hamiltonian paths on odd-even directed grids and domino tilings.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="print h(p,q)")
    c.add_argument("--p", type=_positive, required=True)
    c.add_argument("--q", type=_positive, required=True)
    c.add_argument("--method", choices=("tilings", "enumerate", "kasteleyn"), default="tilings")
    c.add_argument("--all-methods", action="store_true")
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("enumerate", parents=[common], help="stream paths or tilings")
    e.add_argument("--p", type=_positive, required=True)
    e.add_argument("--q", type=_positive, required=True)
    e.add_argument("--kind", choices=("paths", "tilings"), default="paths")
    e.add_argument("--limit", type=int)
    e.add_argument("--format", choices=("jsonl", "ascii", "svg-dir"), default="jsonl")
    e.add_argument("--dir", help="target directory for --format svg-dir")
    e.set_defaults(func=cmd_enumerate)

    b = sub.add_parser("bijection", parents=[common], help="map a tiling to its path or back")
    b.add_argument("--direction", choices=("to-path", "to-tiling"), required=True)
    b.add_argument("--input", required=True, help="JSON file, or - for stdin")
    b.set_defaults(func=cmd_bijection)

    t = sub.add_parser("table", parents=[common], help="print the table of h(p,q)")
    t.add_argument("--pmax", type=_positive, required=True)
    t.add_argument("--qmax", type=_positive, required=True)
    t.set_defaults(func=cmd_table)

    r = sub.add_parser("render", parents=[common], help="draw a figure as SVG or ASCII")
    r.add_argument("--p", type=_positive, required=True)
    r.add_argument("--q", type=_positive, required=True)
    r.add_argument("--kind", choices=KINDS, default="grid")
    r.add_argument("--input", help="payload JSON file (path, tiling or domino)")
    r.add_argument("--index", type=int, default=0,
                   help="without --input, take this enumerated path/tiling")
    r.add_argument("--cell-size", type=_cell_size, default=40)
    r.add_argument("--no-arrows", action="store_true")
    r.add_argument("--format", choices=("svg", "ascii"), default="svg")
    r.add_argument("--out", "-o")
    r.set_defaults(func=cmd_render)

    v = sub.add_parser("verify", parents=[common], help="reproduce every table and identity")
    v.add_argument("--section", action="append",
                   help=f"run only this section (repeatable): {', '.join(checks.SECTIONS)}")
    v.add_argument("--timing", action="store_true", help="append run times")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.output = getattr(args, "output", "text")
    args.force = getattr(args, "force", False)
    try:
        return args.func(args)
    except (UsageError, EnumerationLimitError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
