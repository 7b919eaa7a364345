"""Shared builders and independent mini-oracles for the test suite."""

from __future__ import annotations

import random

import pytest

from twoforests.graph import Graph, TwoColoring, build_graph


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    edges = (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    )
    return build_graph(10, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return build_graph(n, edges)


def random_bounded_tree(rng: random.Random, n: int, max_degree: int = 3) -> Graph:
    """Random tree on n vertices with every degree at most max_degree."""
    degrees = [0] * n
    edges = []
    available = [0]
    for v in range(1, n):
        u = rng.choice(available)
        edges.append((u, v))
        degrees[u] += 1
        degrees[v] += 1
        if degrees[u] >= max_degree:
            available.remove(u)
        available.append(v)
    return build_graph(n, edges)


# ---------------------------------------------------------------------
# Independent oracles (kept deliberately separate from the library paths
# they cross-check)
# ---------------------------------------------------------------------


def girth_by_edge_removal(g: Graph) -> int | None:
    """Shortest cycle length via: for each edge, remove it and BFS the
    distance between its endpoints."""
    best = None
    for u, v in g.edges():
        dist = {u: 0}
        queue = [u]
        while queue:
            x = queue.pop(0)
            for w in g.adj[x]:
                if (x, w) in ((u, v), (v, u)):
                    continue
                if w not in dist:
                    dist[w] = dist[x] + 1
                    queue.append(w)
        if v in dist and (best is None or dist[v] + 1 < best):
            best = dist[v] + 1
    return best


def classes_are_forests_by_union_find(g: Graph, f: TwoColoring) -> bool:
    """Forest test per color class: a class with m edges, k vertices and c
    components is a forest iff m == k - c; implemented via union-find."""
    for color in (1, 2):
        members = [v for v in range(g.n) if f.color(v) == color]
        parent = {v: v for v in members}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in g.edges():
            if u in parent and v in parent:
                ru, rv = find(u), find(v)
                if ru == rv:
                    return False
                parent[ru] = rv
    return True


def has_two_common_neighbors(g: Graph) -> bool:
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if len(g.adj_sets[u] & g.adj_sets[v]) >= 2:
                return True
    return False


def cut_vertices_by_removal(g: Graph) -> set[int]:
    """Brute-force cut vertices: removing one increases the component count."""
    from twoforests.graph import connected_components, induced_subgraph

    base = len(connected_components(g))
    cuts = set()
    for v in range(g.n):
        rest = [w for w in range(g.n) if w != v]
        sub, _ = induced_subgraph(g, rest)
        isolated_loss = 1 if g.degree(v) == 0 else 0
        if len(connected_components(sub)) > base - isolated_loss:
            cuts.add(v)
    return cuts


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
