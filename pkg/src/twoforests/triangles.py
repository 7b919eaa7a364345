"""Bad vertices, the triangle-adjacency auxiliary graph, and the search
for the reducible cycle-plus-apex configuration.

A vertex is bad when it has degree 4 and lies in two triangles.  The
auxiliary graph has one node per triangle touching a bad vertex and one
edge per bad vertex (joining its two triangles).  In a 4-cycle-free graph
every component of that auxiliary graph is a cycle or a tree unless the
graph contains a 4-regular chordless cycle with a degree-4 apex; that
configuration is what find_triangular_cycle_config looks for.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, find_four_cycle, triangles_at

Triangle = tuple[int, int, int]


class PreconditionError(ValueError):
    """Input violates a documented precondition (e.g. contains a 4-cycle)."""


class SearchBudgetExceeded(RuntimeError):
    """The configuration search ran out of its node budget.

    Distinguished from a None result: None means exhaustively absent.
    """


def bad_vertices(g: Graph) -> tuple[int, ...]:
    """Degree-4 vertices lying in at least two triangles, sorted."""
    out = []
    for v in range(g.n):
        if g.degree(v) == 4 and len(triangles_at(g, v)) >= 2:
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class AuxGraph:
    """Triangles incident to bad vertices, joined by the bad vertices.

    nodes are sorted vertex triples in sorted order; edges are
    (i, j, bad_vertex) with i < j indexing into nodes.
    """

    nodes: tuple[Triangle, ...]
    edges: tuple[tuple[int, int, int], ...]

    def node_index(self, t: Triangle) -> int:
        return self.nodes.index(t)

    def degree(self, i: int) -> int:
        return sum(1 for a, b, _ in self.edges if i in (a, b))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.nodes]
        for a, b, _ in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return [sorted(row) for row in adj]

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components as sorted node-index tuples, canonical order."""
        adj = self.adjacency()
        seen = [False] * len(self.nodes)
        comps = []
        for start in range(len(self.nodes)):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)


def build_aux_graph(g: Graph) -> AuxGraph:
    """Build the auxiliary graph.  Rejects graphs with 4-cycles, where a
    vertex could lie in two triangles sharing an edge."""
    c4 = find_four_cycle(g)
    if c4 is not None:
        raise PreconditionError(f"input contains a 4-cycle {c4}")
    bad = bad_vertices(g)
    nodes: set[Triangle] = set()
    pairs: list[tuple[Triangle, Triangle, int]] = []
    for v in bad:
        tris = triangles_at(g, v)
        assert len(tris) == 2, "degree-4 vertex in >2 triangles despite no 4-cycle"
        t1, t2 = tris
        nodes.update((t1, t2))
        pairs.append((t1, t2, v))
    node_list = tuple(sorted(nodes))
    index = {t: i for i, t in enumerate(node_list)}
    edges = []
    for t1, t2, v in pairs:
        i, j = sorted((index[t1], index[t2]))
        edges.append((i, j, v))
    return AuxGraph(nodes=node_list, edges=tuple(sorted(edges)))


COMPONENT_CYCLE = "cycle"
COMPONENT_TREE = "tree"
COMPONENT_OTHER = "other"


def classify_components(h: AuxGraph) -> tuple[str, ...]:
    """Tag each component: cycle (all degrees 2, |E|=|V|), tree (|E|=|V|-1),
    or other.  An 'other' component certifies the reducible configuration."""
    tags = []
    adj = h.adjacency()
    for comp in h.components():
        nodes = set(comp)
        ne = sum(1 for a, b, _ in h.edges if a in nodes)
        if ne == len(comp) and all(len(adj[i]) == 2 for i in comp):
            tags.append(COMPONENT_CYCLE)
        elif ne == len(comp) - 1:
            tags.append(COMPONENT_TREE)
        else:
            tags.append(COMPONENT_OTHER)
    return tuple(tags)


@dataclass(frozen=True)
class DegreeCensus:
    """Counts of degree-1, degree-2, degree-3 nodes in a tree component."""

    z1: int
    z2: int
    z3: int


def degree_census(h: AuxGraph, component: tuple[int, ...]) -> DegreeCensus:
    tags = classify_components(h)
    comps = h.components()
    if component not in comps or tags[comps.index(component)] != COMPONENT_TREE:
        raise PreconditionError("degree census requires a tree component")
    adj = h.adjacency()
    counts = [0, 0, 0, 0]
    for i in component:
        d = len(adj[i])
        if d > 3:
            raise PreconditionError(f"component node {i} has degree {d} > 3")
        counts[d] += 1
    return DegreeCensus(z1=counts[1], z2=counts[2], z3=counts[3])


# =====================================================================
# The reducible configuration
# =====================================================================


@dataclass(frozen=True)
class TriangularCycleConfig:
    """Chordless cycle v1..vs plus an apex adjacent to v1 and v2, all of
    degree exactly 4 in the ambient graph, with s >= 5."""

    cycle: tuple[int, ...]
    apex: int
    external: tuple[tuple[int, ...], ...]  # N(vi) \ S per cycle vertex
    apex_external: tuple[int, ...]         # N(apex) \ {v1, v2}

    @property
    def s(self) -> int:
        return len(self.cycle)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.cycle) | {self.apex}


def validate_config(g: Graph, cfg: TriangularCycleConfig) -> None:
    """Assert every structural invariant of the configuration; raise on failure."""
    s = cfg.s
    if s < 5:
        raise PreconditionError(f"cycle length {s} < 5")
    S = cfg.vertex_set
    if len(S) != s + 1:
        raise PreconditionError("cycle vertices and apex are not distinct")
    for v in S:
        if g.degree(v) != 4:
            raise PreconditionError(f"vertex {v} of S has degree {g.degree(v)} != 4")
    cyc = cfg.cycle
    cycle_edges = {tuple(sorted((cyc[i], cyc[(i + 1) % s]))) for i in range(s)}
    apex_edges = {tuple(sorted((cfg.apex, cyc[0]))), tuple(sorted((cfg.apex, cyc[1])))}
    induced = {
        (u, v) for u, v in g.edges() if u in S and v in S
    }
    expected = cycle_edges | apex_edges
    if induced != expected:
        raise PreconditionError(
            f"induced edges on S differ from cycle+apex: extra {induced - expected},"
            f" missing {expected - induced}"
        )
    for i, v in enumerate(cyc):
        ext = tuple(sorted(set(g.adj[v]) - S))
        if ext != cfg.external[i]:
            raise PreconditionError(f"external list of cycle vertex {v} is wrong")
        want = 1 if i < 2 else 2
        if len(ext) != want:
            raise PreconditionError(
                f"cycle vertex {v} has {len(ext)} external neighbors, expected {want}"
            )
    apex_ext = tuple(sorted(set(g.adj[cfg.apex]) - {cyc[0], cyc[1]}))
    if apex_ext != cfg.apex_external or len(apex_ext) != 2:
        raise PreconditionError("apex external neighbors are wrong")


def _make_config(g: Graph, cycle: list[int], apex: int) -> TriangularCycleConfig:
    S = set(cycle) | {apex}
    external = tuple(tuple(sorted(set(g.adj[v]) - S)) for v in cycle)
    apex_external = tuple(sorted(set(g.adj[apex]) - {cycle[0], cycle[1]}))
    return TriangularCycleConfig(
        cycle=tuple(cycle), apex=apex, external=external, apex_external=apex_external
    )


def find_triangular_cycle_config(
    g: Graph, budget: int = 10**6
) -> TriangularCycleConfig | None:
    """Exhaustive search for a valid configuration, shortest cycles first.

    For each edge (v1, v2) with both endpoints of degree 4 and each common
    neighbor u of degree 4, DFS over degree-4 vertices for a chordless
    cycle of the target length through the edge that avoids u and all of
    u's other neighbors.  None means exhaustively absent; running out of
    budget raises SearchBudgetExceeded instead.
    """
    if find_four_cycle(g) is not None:
        raise PreconditionError("configuration search requires a 4-cycle-free graph")
    deg4 = [v for v in range(g.n) if g.degree(v) == 4]
    if len(deg4) < 6:
        return None
    candidates: list[tuple[int, int, int]] = []
    deg4_set = set(deg4)
    for u, v in g.edges():
        if u in deg4_set and v in deg4_set:
            for w in sorted(g.adj_sets[u] & g.adj_sets[v]):
                if w in deg4_set:
                    candidates.append((u, v, w))
    nodes_left = budget
    max_s = len(deg4) - 1
    for s in range(5, max_s + 1):
        for v1, v2, apex in candidates:
            nodes_left = _dfs_cycle(g, v1, v2, apex, s, deg4_set, nodes_left)
            if isinstance(nodes_left, TriangularCycleConfig):
                return nodes_left
    return None


def _dfs_cycle(
    g: Graph,
    v1: int,
    v2: int,
    apex: int,
    target: int,
    deg4: set[int],
    budget: int,
) -> int | TriangularCycleConfig:
    """Depth-first search for a chordless degree-4 cycle of length target
    through edge (v1, v2) avoiding the apex and its other neighbors.
    Returns the remaining budget, or the found configuration."""
    apex_nbrs = g.adj_sets[apex]
    path = [v1, v2]
    on_path = {v1, v2}

    def extendable(w: int, closing: bool) -> bool:
        if w in on_path or w == apex or w not in deg4 or w in apex_nbrs:
            return False
        allowed = {path[-1], v1} if closing else {path[-1]}
        return (g.adj_sets[w] & on_path) <= allowed

    def rec(budget: int) -> int | TriangularCycleConfig:
        if budget <= 0:
            raise SearchBudgetExceeded(
                f"configuration search exceeded its node budget"
            )
        budget -= 1
        if len(path) == target:
            last = path[-1]
            if v1 in g.adj_sets[last]:
                cfg = _make_config(g, list(path), apex)
                try:
                    validate_config(g, cfg)
                except PreconditionError:
                    return budget
                return cfg
            return budget
        closing = len(path) == target - 1
        for w in g.adj[path[-1]]:
            if not extendable(w, closing):
                continue
            if closing and v1 not in g.adj_sets[w]:
                continue
            path.append(w)
            on_path.add(w)
            budget = rec(budget)
            if isinstance(budget, TriangularCycleConfig):
                return budget
            path.pop()
            on_path.discard(w)
        return budget

    return rec(budget)


def aux_graph_text(h: AuxGraph) -> str:
    """The auxiliary graph in the shared text format with a node-id legend."""
    lines = [f"{len(h.nodes)} {len(h.edges)}"]
    for i, j, v in h.edges:
        lines.append(f"{i} {j}")
    for i, t in enumerate(h.nodes):
        lines.append(f"# node {i} = triangle ({t[0]},{t[1]},{t[2]})")
    for i, j, v in h.edges:
        lines.append(f"# edge {i}-{j} = bad vertex {v}")
    return "\n".join(lines) + "\n"
