"""Constructive partition of a vertex set into two induced forests.

The solver recursively reduces the instance: brute force below 9 vertices,
split across components and blocks, peel a vertex of degree at most 3, or
remove the chordless cycle of a cycle-plus-apex configuration and extend
the recursive coloring back over it.  Every extension is validated, so a
violated precondition surfaces as a loud failure instead of a bad answer.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .graph import (
    BlockDecomposition,
    Graph,
    TwoColoring,
    block_decomposition,
    connected_components,
    find_monochromatic_cycle,
    induced_subgraph,
    other_color,
)
from .oracle import find_good_total_coloring
from .triangles import (
    SearchBudgetExceeded,
    TriangularCycleConfig,
    find_triangular_cycle_config,
    validate_config,
)


class ExtensionError(RuntimeError):
    """An extension produced a bad coloring; inputs violated a precondition."""


class MergeError(ValueError):
    """Block colorings cannot be merged consistently."""


@dataclass(frozen=True)
class TraceStep:
    kind: str  # base | component | block | low_degree | config
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class PartitionResult:
    coloring: TwoColoring | None
    failure_step: str | None = None
    message: str | None = None
    trace: tuple[TraceStep, ...] = ()

    @property
    def ok(self) -> bool:
        return self.coloring is not None


class _Failure(Exception):
    def __init__(self, step: str, message: str) -> None:
        super().__init__(message)
        self.step = step
        self.message = message


def _checked(g: Graph, f: TwoColoring, where: str) -> TwoColoring:
    witness = find_monochromatic_cycle(g, f)
    if witness is not None:
        raise ExtensionError(
            f"{where}: coloring has a monochromatic cycle {witness[1]} in color"
            f" {witness[0]}"
        )
    return f


# =====================================================================
# Extension operations
# =====================================================================


def extend_low_degree(g: Graph, f: TwoColoring, v: int) -> TwoColoring:
    """Color a vertex of degree at most 3 with a color used at most once
    among its neighbors; such a vertex cannot close a monochromatic cycle."""
    if g.degree(v) > 3:
        raise ValueError(f"vertex {v} has degree {g.degree(v)} > 3")
    nbr_colors = [f.color(w) for w in g.adj[v]]
    if any(c is None for c in nbr_colors):
        raise ValueError(f"vertex {v} has uncolored neighbors")
    if nbr_colors.count(1) <= 1:
        c = 1
    elif nbr_colors.count(2) <= 1:
        c = 2
    else:
        raise ValueError("no color is used at most once; degree precondition broken")
    return _checked(g, f.extended({v: c}), "extend_low_degree")


@dataclass(frozen=True)
class ExtensionContext:
    """A chordless cycle whose vertices each have exactly two neighbors
    outside it, with those neighbors' colors supplied by the ambient
    coloring.  In the apex case the apex appears as the shared outside
    neighbor of the first two cycle vertices."""

    cycle: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    apex: int | None = None

    @property
    def s(self) -> int:
        return len(self.cycle)


EXTENDED = "extended"
CASE_ONE = "case_one"
CASE_TWO = "case_two"


@dataclass(frozen=True)
class ExtensionOutcome:
    kind: str
    coloring: TwoColoring | None = None


def context_from_config(cfg: TriangularCycleConfig) -> ExtensionContext:
    pairs = []
    for i in range(cfg.s):
        if i < 2:
            pairs.append((cfg.external[i][0], cfg.apex))
        else:
            pairs.append(cfg.external[i])
    return ExtensionContext(cycle=cfg.cycle, pairs=tuple(pairs), apex=cfg.apex)


def _validate_context(ctx: ExtensionContext, f: TwoColoring) -> None:
    if len(ctx.pairs) != ctx.s or ctx.s < 3:
        raise ValueError("context must pair every cycle vertex with two neighbors")
    for x, y in ctx.pairs:
        if x == y:
            raise ValueError(f"cycle vertex pair ({x},{y}) is degenerate")
        if f.color(x) is None or f.color(y) is None:
            raise ValueError(f"outside neighbors {x},{y} must be colored")


def extend_over_cycle(g: Graph, ctx: ExtensionContext, f: TwoColoring) -> ExtensionOutcome:
    """Extend a good coloring over a chordless 4-regular cycle, or report
    which of the two non-extendable cases holds.

    Case one: every outside neighbor of the cycle has the same color.
    Case two: the cycle is odd and every outside pair is bichromatic.
    Otherwise the coloring extends: an even cycle with all-bichromatic
    pairs is colored alternately; else the monochromatic-pair positions
    get the opposite of their pair color and the rest are filled in cyclic
    order from the first such position, each opposite its predecessor.
    """
    _validate_context(ctx, f)
    s = ctx.s
    outside = sorted({v for pair in ctx.pairs for v in pair})
    outside_colors = {f.color(v) for v in outside}
    if len(outside_colors) == 1:
        return ExtensionOutcome(kind=CASE_ONE)
    mono = [i for i, (x, y) in enumerate(ctx.pairs) if f.color(x) == f.color(y)]
    if not mono and s % 2 == 1:
        return ExtensionOutcome(kind=CASE_TWO)
    upd: dict[int, int] = {}
    if not mono:
        for i, v in enumerate(ctx.cycle):
            upd[v] = 1 if i % 2 == 0 else 2
    else:
        for i in mono:
            upd[ctx.cycle[i]] = other_color(f.color(ctx.pairs[i][0]))
        j = mono[0]
        for step in range(1, s):
            i = (j + step) % s
            if ctx.cycle[i] in upd:
                continue
            upd[ctx.cycle[i]] = other_color(upd[ctx.cycle[(i - 1) % s]])
    out = _checked(g, f.extended(upd), "extend_over_cycle")
    return ExtensionOutcome(kind=EXTENDED, coloring=out)


def extend_triangular_config(
    g: Graph, cfg: TriangularCycleConfig, f: TwoColoring
) -> TwoColoring:
    """Extend a good coloring of everything but the configuration's cycle
    to all of the graph.  The apex stays colored throughout.

    The generic cycle extension handles most colorings.  In case one the
    first cycle vertex joins the outside color and the rest oppose it,
    flipping the apex if a monochromatic cycle through it appears.  In
    case two the cycle is colored alternately with the apex flipped, and
    if that fails the alternation is reversed with the apex restored.
    """
    validate_config(g, cfg)
    ctx = context_from_config(cfg)
    _checked(g, f, "extend_triangular_config precondition")
    out = extend_over_cycle(g, ctx, f)
    if out.kind == EXTENDED:
        return out.coloring
    cyc, apex, s = cfg.cycle, cfg.apex, cfg.s
    if out.kind == CASE_ONE:
        a = f.color(ctx.pairs[0][0])
        work = f if a == 1 else f.flipped()
        swapped = a != 1
        upd = {cyc[0]: 1}
        upd.update({cyc[p]: 2 for p in range(1, s)})
        candidate = work.extended(upd)
        if find_monochromatic_cycle(g, candidate) is not None:
            candidate = candidate.extended({apex: 2})
            if find_monochromatic_cycle(g, candidate) is not None:
                raise ExtensionError(
                    "case-one candidates both bad; configuration preconditions violated"
                )
        return candidate.flipped() if swapped else candidate
    # case two: normalize so the apex has color 2, hence both first-vertex
    # outside neighbors have color 1
    swapped = f.color(apex) == 1
    work = f.flipped() if swapped else f
    upd_a = {cyc[0]: 2, apex: 1}
    upd_a.update({cyc[p]: (1 if p % 2 == 0 else 2) for p in range(1, s)})
    candidate = work.extended(upd_a)
    if find_monochromatic_cycle(g, candidate) is not None:
        upd_b = {cyc[0]: 2, apex: 2}
        upd_b.update({cyc[p]: (2 if p % 2 == 0 else 1) for p in range(1, s)})
        candidate = work.extended(upd_b)
        if find_monochromatic_cycle(g, candidate) is not None:
            raise ExtensionError(
                "case-two candidates both bad; configuration preconditions violated"
            )
    return candidate.flipped() if swapped else candidate


def merge_block_colorings(
    decomp: BlockDecomposition, per_block: list[TwoColoring]
) -> TwoColoring:
    """Glue per-block good colorings, flipping whole blocks so they agree
    at cut vertices.  Any cycle lies inside one block, so the union stays
    good."""
    if len(per_block) != len(decomp.blocks):
        raise MergeError(
            f"{len(per_block)} colorings for {len(decomp.blocks)} blocks"
        )
    for block, coloring in zip(decomp.blocks, per_block):
        if set(block) - coloring.domain:
            raise MergeError(f"coloring does not cover block {block}")
    at_block: dict[int, list[int]] = {}
    for i, block in enumerate(decomp.blocks):
        for v in block:
            at_block.setdefault(v, []).append(i)
    merged: dict[int, int] = {}
    seen = [False] * len(decomp.blocks)
    for root in range(len(decomp.blocks)):
        if seen[root]:
            continue
        queue = [(root, None)]
        seen[root] = True
        while queue:
            i, anchor = queue.pop(0)
            coloring = per_block[i].restricted(decomp.blocks[i])
            if anchor is not None and coloring.color(anchor) != merged[anchor]:
                coloring = coloring.flipped()
            for v in decomp.blocks[i]:
                if v in merged and merged[v] != coloring.color(v):
                    raise MergeError(
                        f"blocks disagree at cut vertex {v} even after flipping"
                    )
                merged[v] = coloring.color(v)
            for v in decomp.blocks[i]:
                for j in at_block[v]:
                    if not seen[j]:
                        seen[j] = True
                        queue.append((j, v))
    return TwoColoring(merged)


# =====================================================================
# The solver
# =====================================================================


def partition(
    g: Graph, budget: int = 10**6, collect_trace: bool = False
) -> PartitionResult:
    """Produce a total good 2-coloring, or a report naming the failed step.

    Reduction order at every level: brute force at 8 or fewer vertices;
    split disconnected graphs; split at cut vertices; peel a vertex of
    degree at most 3; remove the cycle of a found configuration.  Failure
    occurs only when the input violates the intended preconditions or the
    configuration search exhausts its budget.
    """
    trace: list[TraceStep] = []
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10 * g.n + 1000))
    try:
        f = _solve(g, list(range(g.n)), budget, trace if collect_trace else None)
    except _Failure as exc:
        return PartitionResult(
            coloring=None,
            failure_step=exc.step,
            message=exc.message,
            trace=tuple(trace),
        )
    except SearchBudgetExceeded as exc:
        return PartitionResult(
            coloring=None,
            failure_step="budget",
            message=str(exc),
            trace=tuple(trace),
        )
    return PartitionResult(coloring=f, trace=tuple(trace))


def _note(trace: list[TraceStep] | None, kind: str, vertices: tuple[int, ...]) -> None:
    if trace is not None:
        trace.append(TraceStep(kind=kind, vertices=vertices))


def _solve(
    g: Graph, names: list[int], budget: int, trace: list[TraceStep] | None
) -> TwoColoring:
    """Solve g (local ids); names maps local ids to original ids for the
    trace.  Returns a total good coloring of g in local ids."""
    if g.n <= 8:
        f = find_good_total_coloring(g)
        if f is None:
            raise _Failure(
                "base",
                f"no good 2-coloring exists on a {g.n}-vertex base case"
                f" (vertices {sorted(names)})",
            )
        _note(trace, "base", tuple(sorted(names)))
        return _checked(g, f, "base case")

    comps = connected_components(g)
    if len(comps) > 1:
        merged: dict[int, int] = {}
        for comp in comps:
            _note(trace, "component", tuple(names[v] for v in comp))
            sub, keep = induced_subgraph(g, comp)
            fsub = _solve(sub, [names[k] for k in keep], budget, trace)
            for local, c in fsub.assignment.items():
                merged[keep[local]] = c
        return _checked(g, TwoColoring(merged), "component union")

    decomp = block_decomposition(g)
    if len(decomp.blocks) > 1:
        _note(trace, "block", tuple(names[v] for v in decomp.cut_vertices))
        per_block = []
        for block in decomp.blocks:
            sub, keep = induced_subgraph(g, block)
            fsub = _solve(sub, [names[k] for k in keep], budget, trace)
            per_block.append(
                TwoColoring({keep[local]: c for local, c in fsub.assignment.items()})
            )
        return _checked(g, merge_block_colorings(decomp, per_block), "block merge")

    low = [v for v in range(g.n) if g.degree(v) <= 3]
    if low:
        v = low[0]
        _note(trace, "low_degree", (names[v],))
        rest = [w for w in range(g.n) if w != v]
        sub, keep = induced_subgraph(g, rest)
        fsub = _solve(sub, [names[k] for k in keep], budget, trace)
        f = TwoColoring({keep[local]: c for local, c in fsub.assignment.items()})
        return extend_low_degree(g, f, v)

    cfg = find_triangular_cycle_config(g, budget=budget)
    if cfg is not None:
        _note(trace, "config", tuple(names[v] for v in cfg.cycle) + (names[cfg.apex],))
        removed = set(cfg.cycle)
        rest = [w for w in range(g.n) if w not in removed]
        sub, keep = induced_subgraph(g, rest)
        fsub = _solve(sub, [names[k] for k in keep], budget, trace)
        f = TwoColoring({keep[local]: c for local, c in fsub.assignment.items()})
        return extend_triangular_config(g, cfg, f)

    raise _Failure(
        "no-reduction",
        "no reduction applies: graph is 2-connected with minimum degree >= 4"
        " and no cycle-plus-apex configuration; the instance violates the"
        " solver's preconditions",
    )
