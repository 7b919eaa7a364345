"""Shared text formats: graphs, rotations, colorings, manifests.

Graph files: first line "n m", then m lines "u v" with 0-based ids.
Rotation files: one line "v: a b c ..." per vertex, neighbors in cyclic
order.  Coloring files: one line "v c" per vertex with c in {1, 2}.
Everything after '#' on a line is a comment; blank lines are skipped.
Writers are canonical (sorted) so identical inputs give identical bytes.
"""

from __future__ import annotations

from .graph import Graph, GraphInputError, TwoColoring, build_graph
from .embedding import RotationSystem


class InputFormatError(ValueError):
    """A file does not parse under the shared formats."""


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body))
    return out


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise InputFormatError("empty graph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise InputFormatError(f"line {lineno}: expected 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputFormatError(f"line {lineno}: non-integer header {header!r}")
    if len(lines) - 1 != m:
        raise InputFormatError(
            f"header says {m} edges but file has {len(lines) - 1} edge lines"
        )
    edges = []
    for lineno, body in lines[1:]:
        parts = body.split()
        if len(parts) != 2:
            raise InputFormatError(f"line {lineno}: expected 'u v', got {body!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputFormatError(f"line {lineno}: non-integer edge {body!r}")
    try:
        return build_graph(n, edges)
    except GraphInputError as exc:
        raise InputFormatError(str(exc)) from exc


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def parse_rotation(text: str, g: Graph) -> RotationSystem:
    lines = _content_lines(text)
    rows: dict[int, tuple[int, ...]] = {}
    for lineno, body in lines:
        if ":" not in body:
            raise InputFormatError(f"line {lineno}: expected 'v: a b ...', got {body!r}")
        head, tail = body.split(":", 1)
        try:
            v = int(head.strip())
            nbrs = tuple(int(x) for x in tail.split())
        except ValueError:
            raise InputFormatError(f"line {lineno}: non-integer entry in {body!r}")
        if v in rows:
            raise InputFormatError(f"line {lineno}: vertex {v} listed twice")
        rows[v] = nbrs
    missing = [v for v in range(g.n) if v not in rows]
    if missing:
        raise InputFormatError(f"rotation missing vertices {missing}")
    extra = [v for v in rows if not 0 <= v < g.n]
    if extra:
        raise InputFormatError(f"rotation lists unknown vertices {sorted(extra)}")
    rot = RotationSystem(rotation=tuple(rows[v] for v in range(g.n)))
    for v in range(g.n):
        if tuple(sorted(rot.rotation[v])) != g.adj[v]:
            raise InputFormatError(
                f"rotation at vertex {v} is not a permutation of its adjacency"
            )
    return rot


def format_rotation(rot: RotationSystem) -> str:
    lines = [
        f"{v}: " + " ".join(str(w) for w in row) if row else f"{v}:"
        for v, row in enumerate(rot.rotation)
    ]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, g: Graph) -> TwoColoring:
    lines = _content_lines(text)
    assignment: dict[int, int] = {}
    for lineno, body in lines:
        parts = body.split()
        if len(parts) != 2:
            raise InputFormatError(f"line {lineno}: expected 'v c', got {body!r}")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError(f"line {lineno}: non-integer entry {body!r}")
        if not 0 <= v < g.n:
            raise InputFormatError(f"line {lineno}: vertex {v} out of range")
        if c not in (1, 2):
            raise InputFormatError(f"line {lineno}: color {c} not in {{1,2}}")
        if v in assignment:
            raise InputFormatError(f"line {lineno}: vertex {v} colored twice")
        assignment[v] = c
    return TwoColoring(assignment)


def format_coloring(f: TwoColoring) -> str:
    lines = [f"{v} {c}" for v, c in sorted(f.assignment.items())]
    return "\n".join(lines) + "\n" if lines else ""
