"""Batch command-line frontend.

Subcommands: partition, verify, audit, oracle, gen, check.  Reports are
line-oriented with a stable machine-parsable prefix per record.  Exit
codes: 0 success or property true, 1 property false, 2 input error,
3 precondition violation, 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .discharging import audit as run_audit
from .discharging import dump_ledger, run_discharging
from .embedding import EmbeddingError, check_preconditions, trace_faces
from .generate import FAMILIES, GenParams, GenerationError, gen_instance
from .graph import Graph, GraphInputError, find_monochromatic_cycle
from .oracle import OracleSizeError, arboricity_at_most, vertex_arboricity
from .partition import partition
from .textio import (
    InputFormatError,
    format_coloring,
    format_graph,
    format_rotation,
    parse_coloring,
    parse_graph,
    parse_rotation,
)
from .triangles import PreconditionError, SearchBudgetExceeded

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _emit(out: str | None, text: str) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)
        print(f"WROTE {out}")


def _cmd_partition(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    rot = parse_rotation(_read(args.rot), g) if args.rot else None
    if args.require_embedding:
        if rot is None:
            print("FAIL step=precondition missing rotation for --require-embedding")
            return EXIT_PRECONDITION
        report = check_preconditions(g, rot)
        if not report.meets_preconditions:
            print(
                "FAIL step=precondition"
                f" connected={str(report.connected).lower()}"
                f" genus={report.genus}"
                f" four_cycle={_fmt_cycle(report.four_cycle)}"
            )
            return EXIT_PRECONDITION
    result = partition(g, budget=args.budget, collect_trace=args.trace)
    if args.trace:
        for step in result.trace:
            print(f"STEP {step.kind} {','.join(map(str, step.vertices))}")
    if not result.ok:
        print(f"FAIL step={result.failure_step} {result.message}")
        return EXIT_BUDGET if result.failure_step == "budget" else EXIT_PRECONDITION
    witness = find_monochromatic_cycle(g, result.coloring)
    assert witness is None, "solver returned a bad coloring"
    _emit(args.out, format_coloring(result.coloring))
    print("OK")
    return EXIT_OK


def _fmt_cycle(cycle) -> str:
    return "none" if cycle is None else ",".join(map(str, cycle))


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    f = parse_coloring(_read(args.coloring), g)
    print(f"TOTAL {str(f.is_total_on(g)).lower()}")
    witness = find_monochromatic_cycle(g, f)
    if witness is None:
        print("GOOD")
        return EXIT_OK
    color, cycle = witness
    print(f"BAD color={color} cycle={','.join(map(str, cycle))}")
    return EXIT_FALSE


def _cmd_audit(args: argparse.Namespace) -> int:
    from .triangles import build_aux_graph

    g = _load_graph(args.graph)
    rot = parse_rotation(_read(args.rot), g)
    faces = trace_faces(g, rot)
    h = build_aux_graph(g)
    ledgers = run_discharging(g, faces, h)
    report = run_audit(ledgers[-1], g, faces, h)
    lines = [dump_ledger(ledgers, report.genus).rstrip("\n")]
    for c in report.checks:
        lines.append(f"CLAIM {c.name} {'PASS' if c.passed else 'FAIL'}")
        if c.witness:
            lines.append(f"WITNESS {c.name} {c.witness}")
    for w in report.positive_witnesses:
        lines.append(f"POSITIVE {w}")
    _emit(args.out, "\n".join(lines) + "\n")
    if args.figures:
        from .figures import render_audit_figures

        for path in render_audit_figures(ledgers, args.figures):
            print(f"FIGURE {path}")
    return EXIT_OK if report.all_passed else EXIT_FALSE


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.at_most is not None:
        value = arboricity_at_most(g, args.at_most)
        print(f"AT_MOST {args.at_most} {str(value).lower()}")
        return EXIT_OK if value else EXIT_FALSE
    print(f"ARBORICITY {vertex_arboricity(g)}")
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    params = GenParams(seed=args.seed, size=args.size, family=args.family, s=args.s)
    g, rot = gen_instance(params)
    prefix = args.out
    adj_path = f"{prefix}.adj"
    Path(adj_path).write_text(format_graph(g))
    print(f"WROTE {adj_path}")
    if rot is not None:
        rot_path = f"{prefix}.rot"
        Path(rot_path).write_text(format_rotation(rot))
        print(f"WROTE {rot_path}")
    manifest_path = f"{prefix}.manifest"
    Path(manifest_path).write_text(params.manifest_line() + "\n")
    print(f"WROTE {manifest_path}")
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    rot = parse_rotation(_read(args.rot), g) if args.rot else None
    report = check_preconditions(g, rot)
    print(f"CONNECTED {str(report.connected).lower()}")
    print(f"MIN_DEGREE {report.min_degree}")
    print(f"FOUR_CYCLE {_fmt_cycle(report.four_cycle)}")
    print(f"GENUS {report.genus if report.genus is not None else 'unknown'}")
    print(f"FACES {report.face_count if report.face_count is not None else 'unknown'}")
    ok = report.meets_preconditions
    print(f"PRECONDITIONS {'ok' if ok else 'violated'}")
    return EXIT_OK if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoforests",
        description="Partition 4-cycle-free toroidal graphs into two induced"
        " forests and audit exact charge ledgers on embedded instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="compute a two-forest vertex partition")
    p.add_argument("graph", help="graph file (shared 'n m' edge-list format)")
    p.add_argument("--rot", help="rotation file (used with --require-embedding)")
    p.add_argument(
        "--require-embedding",
        action="store_true",
        help="refuse to run unless the embedding certifies the preconditions",
    )
    p.add_argument("--out", help="write the coloring here instead of stdout")
    p.add_argument("--trace", action="store_true", help="print reduction steps")
    p.add_argument("--budget", type=int, default=10**6, help="search node budget")
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("verify", help="check a coloring's classes are forests")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("audit", help="run the charge rules and claim audit")
    p.add_argument("graph")
    p.add_argument("rot")
    p.add_argument("--out", help="write the ledger and report here")
    p.add_argument("--figures", help="also render figures into this directory")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("oracle", help="exhaustive vertex-arboricity oracle")
    p.add_argument("graph")
    p.add_argument("--at-most", type=int, choices=(1, 2), help="decide a(G) <= k")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="generate an instance deterministically")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, default=30, help="target vertex count")
    p.add_argument("--s", type=int, help="cycle length for config_bearing")
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="report the embedding certificate")
    p.add_argument("graph")
    p.add_argument("rot", nargs="?", help="optional rotation file")
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PreconditionError, EmbeddingError, GenerationError) as exc:
        print(f"ERROR precondition: {exc}")
        return EXIT_PRECONDITION
    except SearchBudgetExceeded as exc:
        print(f"ERROR budget: {exc}")
        return EXIT_BUDGET
    except (InputFormatError, GraphInputError, OracleSizeError, ValueError) as exc:
        print(f"ERROR input: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
