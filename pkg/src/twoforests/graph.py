"""Simple undirected graphs and the structural queries the solver needs.

Vertices are dense integers 0..n-1.  All containers are sorted so every
operation is deterministic; all types are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping


class GraphInputError(ValueError):
    """Raised when an edge list or coloring violates the input contract."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    @cached_property
    def adj_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adj)

    @cached_property
    def m(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, lexicographically."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        return min(len(row) for row in self.adj)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list, rejecting malformed input.

    Loops, out-of-range endpoints and duplicate edges are errors rather
    than silently repaired; malformed instances would otherwise invalidate
    every downstream guarantee.
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    rows: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphInputError(f"loop edge ({u},{v}) rejected")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphInputError(f"duplicate edge ({u},{v}) rejected")
        seen.add(key)
        rows[u].append(v)
        rows[v].append(u)
    return Graph(n=n, adj=tuple(tuple(sorted(row)) for row in rows))


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph plus the list mapping new ids back to old ids."""
    keep = sorted(set(vertices))
    index = {old: new for new, old in enumerate(keep)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    return build_graph(len(keep), edges), keep


def find_four_cycle(g: Graph) -> tuple[int, int, int, int] | None:
    """Some 4-cycle (a, b, c, d) in cyclic order, or None.

    Two distinct vertices with two common neighbors certify a 4-cycle,
    and every 4-cycle produces such a pair.
    """
    for u in range(g.n):
        for w in range(u + 1, g.n):
            common = g.adj_sets[u] & g.adj_sets[w]
            if len(common) >= 2:
                it = iter(sorted(common))
                a, b = next(it), next(it)
                return (u, a, w, b)
    return None


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests.

    BFS from every vertex; the first non-tree edge seen from root r bounds
    the shortest cycle through r, and the minimum over roots is exact.
    """
    best: int | None = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in g.adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v]:
                    cycle_len = dist[v] + dist[w] + 1
                    if best is None or cycle_len < best:
                        best = cycle_len
            if best is not None and dist[v] * 2 >= best:
                break
    return best


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All 3-cliques, each listed once as a sorted triple, in sorted order."""
    out = []
    for u, v in g.edges():
        for w in sorted(g.adj_sets[u] & g.adj_sets[v]):
            if w > v:
                out.append((u, v, w))
    out.sort()
    return out


def triangles_at(g: Graph, v: int) -> list[tuple[int, int, int]]:
    """Triangles containing v, as sorted triples."""
    out = []
    nbrs = g.adj[v]
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if g.has_edge(a, b):
                out.append(tuple(sorted((v, a, b))))
    return sorted(out)


# =====================================================================
# Two-colorings
# =====================================================================

COLORS = (1, 2)


def other_color(c: int) -> int:
    return 3 - c


@dataclass(frozen=True)
class TwoColoring:
    """Partial map vertex -> {1, 2}.  Treated as immutable; updates copy."""

    assignment: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for v, c in self.assignment.items():
            if c not in COLORS:
                raise GraphInputError(f"color {c} of vertex {v} not in {{1,2}}")

    def color(self, v: int) -> int | None:
        return self.assignment.get(v)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self.assignment)

    def extended(self, updates: Mapping[int, int]) -> "TwoColoring":
        merged = dict(self.assignment)
        merged.update(updates)
        return TwoColoring(merged)

    def flipped(self) -> "TwoColoring":
        """Global color swap; preserves goodness."""
        return TwoColoring({v: other_color(c) for v, c in self.assignment.items()})

    def restricted(self, vertices: Iterable[int]) -> "TwoColoring":
        keep = set(vertices)
        return TwoColoring({v: c for v, c in self.assignment.items() if v in keep})

    def is_total_on(self, g: Graph) -> bool:
        return all(v in self.assignment for v in range(g.n))

    def class_of(self, c: int) -> list[int]:
        return sorted(v for v, col in self.assignment.items() if col == c)


def find_monochromatic_cycle(
    g: Graph, f: TwoColoring
) -> tuple[int, list[int]] | None:
    """A cycle whose vertices are all colored with one color, or None.

    f is good exactly when this returns None.
    """
    for c in COLORS:
        verts = f.class_of(c)
        member = set(verts)
        parent: dict[int, int] = {}
        state: dict[int, int] = {}
        for root in verts:
            if root in state:
                continue
            parent[root] = -1
            stack = [(root, iter(g.adj[root]))]
            state[root] = 1
            while stack:
                v, it = stack[-1]
                advanced = False
                for w in it:
                    if w not in member:
                        continue
                    if w not in state:
                        parent[w] = v
                        state[w] = 1
                        stack.append((w, iter(g.adj[w])))
                        advanced = True
                        break
                    if state[w] == 1 and w != parent[v]:
                        cycle = [v]
                        x = v
                        while x != w:
                            x = parent[x]
                            cycle.append(x)
                        return (c, cycle[::-1])
                if not advanced:
                    state[v] = 2
                    stack.pop()
    return None


def color_classes_are_forests(g: Graph, f: TwoColoring) -> bool:
    return find_monochromatic_cycle(g, f) is None


# =====================================================================
# Biconnected decomposition
# =====================================================================


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs or bridges) and cut vertices."""

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Standard Hopcroft-Tarjan biconnected components, iteratively.

    Blocks are vertex sets sorted internally and ordered lexicographically;
    isolated vertices belong to no block.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    blocks: list[tuple[int, ...]] = []
    cuts: set[int] = set()

    def pop_block(u: int, v: int) -> None:
        verts: set[int] = set()
        while edge_stack:
            a, b = edge_stack.pop()
            verts.add(a)
            verts.add(b)
            if (a, b) == (u, v):
                break
        blocks.append(tuple(sorted(verts)))

    for start in range(g.n):
        if disc[start] != -1 or g.degree(start) == 0:
            continue
        stack: list[tuple[int, int, Iterator[int]]] = []
        disc[start] = low[start] = timer
        timer += 1
        stack.append((start, -1, iter(g.adj[start])))
        root_children = 0
        while stack:
            v, parent_v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adj[w])))
                    advanced = True
                    break
                if w != parent_v and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if u == start:
                    root_children += 1
                if low[v] >= disc[u]:
                    if u != start:
                        cuts.add(u)
                    pop_block(u, v)
        if root_children >= 2:
            cuts.add(start)
    blocks.sort()
    return BlockDecomposition(blocks=tuple(blocks), cut_vertices=tuple(sorted(cuts)))
