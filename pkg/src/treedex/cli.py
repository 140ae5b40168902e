"""Command line front end.

Subcommands: index, bound, construct, enumerate, transform, squeeze,
verify. Exit codes: 0 success, 1 usage error, 2 validation error (bad
tree or bad constraint); verify exits 0 even when cells are REFUTED.
Output is human-readable by default, --json switches to the machine
schema. Timing goes to stderr so identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .bounds import THEOREM_FAMILY, THEOREM_NAMES, FamilyConstraint, construct_extremal, theorem_bound
from .enumeration import family_members, free_trees
from .indices import r0_general, sei
from .trees import parse_tree, squeeze
from .transforms import TRANSFORMS, predicted_delta
from .verify import check_theorem, reports_to_csv, reports_to_json


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1; argparse defaults to 2
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(value: float) -> str:
    rounded = round(value)
    if abs(value - rounded) < 1e-9 * max(1.0, abs(value)):
        return str(int(rounded))
    return repr(value)


def _read_tree(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_tree(text)


def _index_value(tree, alpha, a):
    if alpha is not None:
        return "r0", alpha, r0_general(tree, alpha)
    return "sei", a, sei(tree, a)


def _cmd_index(args) -> int:
    tree = _read_tree(args.input)
    kind, x, value = _index_value(tree, args.alpha, args.a)
    if args.json:
        print(json.dumps({"index": kind, "index_param": x, "n": tree.n, "value": value}))
    else:
        print(_fmt(value))
    return 0


def _theorem_param(args) -> int | None:
    family = THEOREM_FAMILY[args.theorem]
    given = {"n1": args.n1, "k": args.k, "b": args.b}
    set_flags = [name for name, val in given.items() if val is not None]
    if family is None:
        if set_flags:
            raise _UsageError("the star theorem takes no --n1/--k/--b flag")
        return None
    expected = {"pt": "n1", "st": "k", "bt": "b"}[family]
    if set_flags != [expected]:
        raise _UsageError(f"theorem {args.theorem} requires exactly --{expected}")
    return given[expected]


def _cmd_bound(args) -> int:
    param = _theorem_param(args)
    bound = theorem_bound(args.theorem, args.n, param, alpha=args.alpha, a=args.a)
    if args.json:
        print(
            json.dumps(
                {
                    "theorem": args.theorem,
                    "n": args.n,
                    "param": param,
                    "index": "r0" if args.alpha is not None else "sei",
                    "index_param": args.alpha if args.alpha is not None else args.a,
                    "value": bound.value,
                    "direction": bound.direction,
                    "degree_sequence": list(bound.equality_degseq.degrees),
                }
            )
        )
    else:
        print(_fmt(bound.value))
        print("degree sequence:", " ".join(str(d) for d in bound.equality_degseq.degrees))
        print("direction:", bound.direction if bound.direction else "unclaimed in this regime")
    return 0


def _cmd_construct(args) -> int:
    param = _theorem_param(args)
    tree = construct_extremal(args.theorem, args.n, param)
    text = tree.edge_text() + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_enumerate(args) -> int:
    if (args.family is None) != (args.param is None):
        raise _UsageError("--family and --param must be given together")
    if args.family is not None:
        stream = family_members(FamilyConstraint(args.family, args.n, args.param))
    else:
        stream = free_trees(args.n)
    blocks = (t.edge_text() for t in stream)
    text = "\n\n".join(blocks)
    if text:
        text += "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_transform(args) -> int:
    tree = _read_tree(args.input)
    move = TRANSFORMS[args.lemma](tree)
    deltas = {}
    if args.alpha is not None or args.a is not None:
        kind, x, before_value = _index_value(move.before, args.alpha, args.a)
        _, _, after_value = _index_value(move.after, args.alpha, args.a)
        deltas = {
            "index": kind,
            "index_param": x,
            "predicted_delta": predicted_delta(move, alpha=args.alpha, a=args.a),
            "actual_delta": before_value - after_value,
        }
    if args.json:
        print(
            json.dumps(
                {
                    "transform": move.kind,
                    "actors": list(move.actors),
                    "removed": [list(e) for e in move.removed_edges],
                    "added": [list(e) for e in move.added_edges],
                    "before": move.before.edge_text(),
                    "after": move.after.edge_text(),
                    **deltas,
                }
            )
        )
    else:
        print("transform:", move.kind)
        print("actors:", " ".join(str(v) for v in move.actors))
        print("removed:", "; ".join(f"{u} {v}" for u, v in move.removed_edges))
        print("added:", "; ".join(f"{u} {v}" for u, v in move.added_edges))
        print("before:")
        print(move.before.edge_text())
        print("after:")
        print(move.after.edge_text())
        if deltas:
            print("predicted delta:", repr(deltas["predicted_delta"]))
            print("actual delta:", repr(deltas["actual_delta"]))
    return 0


def _cmd_squeeze(args) -> int:
    tree = _read_tree(args.input)
    print(squeeze(tree).edge_text())
    return 0


def _parse_range(text: str) -> range:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
    else:
        lo_text = hi_text = text
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise _UsageError(f"bad range {text!r}, expected LO..HI") from None
    if lo > hi:
        raise _UsageError(f"bad range {text!r}, expected LO <= HI")
    return range(lo, hi + 1)


def _parse_grid(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError:
        raise _UsageError(f"bad grid {text!r}, expected comma-separated reals") from None


def _cmd_verify(args) -> int:
    if args.theorems == "all":
        theorems = list(THEOREM_NAMES)
    else:
        theorems = [t.strip() for t in args.theorems.split(",")]
        unknown = [t for t in theorems if t not in THEOREM_NAMES]
        if unknown:
            raise _UsageError(f"unknown theorems: {', '.join(unknown)}")
    n_range = _parse_range(args.n)
    kwargs = {}
    if args.alpha_grid is not None:
        kwargs["alpha_grid"] = _parse_grid(args.alpha_grid)
    if args.a_grid is not None:
        kwargs["a_grid"] = _parse_grid(args.a_grid)
    started = time.perf_counter()
    reports = []
    for theorem in theorems:
        reports.extend(check_theorem(theorem, n_range, **kwargs))
    elapsed = time.perf_counter() - started
    if args.report:
        Path(args.report).write_text(reports_to_json(reports), encoding="utf-8")
    if args.csv:
        Path(args.csv).write_text(reports_to_csv(reports), encoding="utf-8")
    if args.json:
        sys.stdout.write(reports_to_json(reports))
    else:
        for r in reports:
            param = "-" if r.param is None else r.param
            name = "alpha" if r.index_kind == "r0" else "a"
            print(
                f"{r.verdict} {r.theorem} n={r.n} param={param} "
                f"{name}={r.index_param!r} {r.direction} "
                f"bound={r.bound!r} oracle={r.oracle!r}"
            )
        confirmed = sum(1 for r in reports if r.verdict == "CONFIRMED")
        print(f"cells: {len(reports)}  confirmed: {confirmed}  refuted: {len(reports) - confirmed}")
    print(f"verify: {len(reports)} cells in {elapsed:.1f}s", file=sys.stderr)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="treedex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    def add_index_params(p, required):
        group = p.add_mutually_exclusive_group(required=required)
        group.add_argument("--alpha", type=float, help="power-sum exponent (not 0 or 1)")
        group.add_argument("--a", type=float, help="expsum base (positive, not 1)")

    p = sub.add_parser("index", help="evaluate an index on an edge-list file")
    p.add_argument("--input", required=True, help="edge-list file, or - for stdin")
    add_index_params(p, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_index)

    def add_theorem_flags(p):
        p.add_argument("--theorem", required=True, choices=THEOREM_NAMES)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--n1", type=int, help="pendant count (pt-* theorems)")
        p.add_argument("--k", type=int, help="segment count (st-* theorems)")
        p.add_argument("--b", type=int, help="branching count (bt-* theorems)")

    p = sub.add_parser("bound", help="closed-form bound and equality degree sequence")
    add_theorem_flags(p)
    add_index_params(p, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("construct", help="build the extremal tree for a theorem")
    add_theorem_flags(p)
    p.add_argument("--out", help="write edge list to this file instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("enumerate", help="list trees as edge-list blocks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=("pt", "st", "bt"))
    p.add_argument("--param", type=int, help="family parameter (n1, k, or b)")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("transform", help="apply a move and report the deltas")
    p.add_argument("--lemma", required=True, choices=sorted(TRANSFORMS))
    p.add_argument("--input", required=True, help="edge-list file, or - for stdin")
    add_index_params(p, required=False)
    add_json(p)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("squeeze", help="contract every segment to an edge")
    p.add_argument("--input", required=True, help="edge-list file, or - for stdin")
    p.set_defaults(func=_cmd_squeeze)

    p = sub.add_parser("verify", help="check theorems against brute-force enumeration")
    p.add_argument("--theorems", required=True, help="'all' or comma-separated theorem names")
    p.add_argument("--n", required=True, help="inclusive range LO..HI")
    p.add_argument("--alpha-grid", help="comma-separated alpha values")
    p.add_argument("--a-grid", help="comma-separated a values")
    p.add_argument("--report", help="write the JSON cell array to this file")
    p.add_argument("--csv", help="write the CSV flattening to this file")
    add_json(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"treedex: error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"treedex: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
