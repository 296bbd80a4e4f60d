"""Command-line interface: construct | check | search | gate | canon | verify.

Results are printed as ``key=value`` lines; ``--table`` switches to an
aligned human-readable layout.  Exit codes: 0 success or free, 1 contains or
failed verification, 2 usage, 3 parse error, 4 infeasible or timed out.
"""

from __future__ import annotations

import argparse
import os
import sys
import warnings
from pathlib import Path
from typing import Sequence

from . import constructions as C
from .core import GraphError
from .gates import GateError, audit_graph
from .iso import automorphism_group_order, canonical_form, canonical_graph
from .patterns import PatternName, get_pattern, pattern_witness
from .search import BOUNDS, InfeasibleError, Mode, Objective, SearchProblem, extremal_search
from .textio import MODES, ParseError, format_graph, read_graph, write_graph
from .verify import SCOPES, verify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INFEASIBLE = 4

WORKERS_ENV = "DHG_WORKERS"


def emit(pairs: Sequence[tuple[str, object]], table: bool = False, out=None) -> None:
    out = out or sys.stdout
    if table:
        width = max((len(k) for k, _ in pairs), default=0)
        for k, v in pairs:
            print(f"{k:<{width}}  {v}", file=out)
    else:
        for k, v in pairs:
            print(f"{k}={v}", file=out)


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _pattern(name: str) -> PatternName:
    try:
        return PatternName.parse(name)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown pattern {name!r}") from None


# ---------------------------------------------------------------- subcommands


def cmd_construct(args: argparse.Namespace) -> int:
    pattern = args.pattern.value
    if args.all_variants:
        if (pattern, args.mode) != ("i0", "oriented"):
            print("error: --all-variants applies to i0 oriented only", file=sys.stderr)
            return EXIT_USAGE
        out_dir = Path(args.out or f"i0_oriented_n{args.n}")
        out_dir.mkdir(parents=True, exist_ok=True)
        manifest = []
        for i, (variant, graph) in enumerate(C.enumerate_i0_oriented_classes(args.n)):
            name = f"class_{i:02d}.dhg"
            write_graph(out_dir / name, graph, "oriented")
            digest = canonical_form(graph).hexdigest()
            manifest.append(f"file={name} edges={len(graph)} shape={variant.shape} canon={digest}")
        (out_dir / "manifest.txt").write_text("\n".join(manifest) + "\n")
        emit([("classes", len(manifest)), ("dir", out_dir)], args.table)
        return EXIT_OK
    variant = args.variant
    if variant is not None and variant.isdigit():
        variant = int(variant)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        graph = C.build(pattern, args.mode, args.n, variant)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    text = format_graph(graph, args.mode)
    if args.out:
        Path(args.out).write_text(text)
        emit([("edges", len(graph)), ("file", args.out)], args.table)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    graph, mode = read_graph(args.file)
    witness = pattern_witness(graph, get_pattern(args.pattern))
    pairs: list[tuple[str, object]] = [("pattern", args.pattern.value), ("n", graph.n), ("edges", len(graph))]
    if witness is None:
        emit(pairs + [("result", "free")], args.table)
        return EXIT_OK
    mapping = ",".join(f"{k}:{v}" for k, v in sorted(witness.items()))
    emit(pairs + [("result", "contains"), ("map", mapping)], args.table)
    return EXIT_FAIL


def cmd_search(args: argparse.Namespace) -> int:
    mode = Mode(args.mode)
    problem = SearchProblem(args.n, args.pattern, mode, Objective(args.objective))
    try:
        out = extremal_search(problem, bound=args.bound, workers=args.workers, timeout=args.timeout)
    except InfeasibleError as exc:
        emit([("status", "infeasible"), ("reason", exc)], args.table)
        return EXIT_INFEASIBLE
    try:
        expected: object = C.expected_edges(args.pattern.value, args.mode, args.n)
    except GraphError:
        expected = "none"
    pairs: list[tuple[str, object]] = [
        ("claim", f"{args.pattern.value}.{args.mode}.{args.objective}.n{args.n}"),
        ("n", args.n),
        ("pattern", args.pattern.value),
        ("mode", args.mode),
        ("objective", args.objective),
        ("max_edges", out.max_edges),
        ("value", out.max_edges),
        ("expected", expected),
    ]
    if out.labeled_count is not None:
        pairs.append(("labeled_count", out.labeled_count))
    if out.class_count is not None:
        pairs.append(("class_count", out.class_count))
    pairs += [
        ("nodes", out.nodes_expanded),
        ("time", f"{out.wall_time:.3f}"),
        ("status", "complete" if out.complete else "timeout"),
    ]
    emit(pairs, args.table)
    if args.out_dir and out.witnesses:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        lines = []
        for i, g in enumerate(out.witnesses):
            name = f"witness_{i:03d}.dhg"
            write_graph(out_dir / name, g, args.mode)
            lines.append(f"file={name} edges={len(g)} canon={canonical_form(g).hexdigest()}")
        (out_dir / "manifest.txt").write_text("\n".join(lines) + "\n")
    return EXIT_OK if out.complete else EXIT_INFEASIBLE


def cmd_gate(args: argparse.Namespace) -> int:
    graph, _ = read_graph(args.file)
    try:
        rows = audit_graph(graph)
    except GateError as exc:
        emit([("status", "no-gate"), ("reason", exc)], args.table)
        return EXIT_FAIL
    pairs: list[tuple[str, object]] = [("n", graph.n), ("edges", len(graph)), ("components", len(rows))]
    for i, (comp, regime, audit) in enumerate(rows):
        p = f"component.{i}"
        pairs += [
            (f"{p}.vertices", ",".join(map(str, sorted(comp.vertices)))),
            (f"{p}.shape", comp.shape()),
            (f"{p}.regime", regime.value),
            (f"{p}.sum_t", audit.sum_t),
            (f"{p}.bound", audit.bound),
            (f"{p}.tight", audit.tight),
            (f"{p}.checked", audit.checked),
            (f"{p}.possible", audit.possible_set_size),
            (f"{p}.possible_multiset", audit.possible_multiset_size),
        ]
    emit(pairs, args.table)
    return EXIT_OK


def cmd_canon(args: argparse.Namespace) -> int:
    graph, mode = read_graph(args.file)
    sys.stdout.write(format_graph(canonical_graph(graph), mode))
    emit([("canon", canonical_form(graph).hexdigest()), ("aut", automorphism_group_order(graph))], args.table)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    def show(entry) -> None:
        if args.table:
            print(f"{entry.status:<18} {entry.claim_id:<45} expected={entry.expected} actual={entry.actual}")
        else:
            print(entry.line())
        sys.stdout.flush()

    report = verify(args.scope, progress=show)
    counts = {s: sum(1 for e in report.entries if e.status == s) for s in ("pass", "fail", "skipped-infeasible")}
    emit([("summary", " ".join(f"{k}={v}" for k, v in counts.items()))], args.table)
    return EXIT_OK if report.ok else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dhg", description="Extremal problems for 2->1 directed hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--table", action="store_true", help="human-readable output")

    p = sub.add_parser("construct", help="build an extremal construction")
    p.add_argument("--pattern", type=_pattern, required=True)
    p.add_argument("--mode", choices=MODES, default="standard")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", help="construction variant (index or name)")
    p.add_argument("--all-variants", action="store_true", help="write one file per isomorphism class")
    p.add_argument("--out", help="output file, or directory with --all-variants")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="test a graph file for a pattern")
    p.add_argument("file")
    p.add_argument("--pattern", type=_pattern, required=True)
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="exact extremal search")
    p.add_argument("--pattern", type=_pattern, required=True)
    p.add_argument("--mode", choices=MODES, default="standard")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--objective", choices=[o.value for o in Objective], default=Objective.MAX_EDGES.value)
    p.add_argument("--bound", choices=BOUNDS, default="cliques")
    p.add_argument("--workers", type=int, default=_default_workers(), help=f"default from ${WORKERS_ENV}")
    p.add_argument("--timeout", type=float, default=None, help="seconds")
    p.add_argument("--out-dir", help="write witnesses and a manifest here")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gate", help="gate components and audits of an I0-free graph")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_gate)

    p = sub.add_parser("canon", help="canonical form of a graph file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("verify", help="re-check the extremal results")
    p.add_argument("--scope", choices=SCOPES, default="all")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
