"""Exhaustive ground truth for vertex arboricity at desk scale.

The decision procedure enumerates 2-colorings by backtracking with the
first vertex pinned to color 1 (a global color swap preserves goodness,
so this halves the space without losing completeness).  A union-find per
color class rejects a branch as soon as a color class acquires a cycle,
which keeps the exhaustive search fast in practice.
"""

from __future__ import annotations

from .graph import Graph, TwoColoring

ORACLE_VERTEX_CAP = 24


class OracleSizeError(ValueError):
    """Instance too large for the exhaustive oracle."""


class _Forests:
    """One union-find structure per color with an undo stack."""

    def __init__(self, n: int, k: int) -> None:
        self.parent = [[i for i in range(n)] for _ in range(k)]
        self.rank = [[0] * n for _ in range(k)]
        self.trail: list[tuple[int, int, int]] = []

    def find(self, c: int, x: int) -> int:
        p = self.parent[c]
        while p[x] != x:
            x = p[x]
        return x

    def union(self, c: int, x: int, y: int) -> bool:
        """Merge classes of x and y in color c; False if already joined."""
        rx, ry = self.find(c, x), self.find(c, y)
        if rx == ry:
            return False
        if self.rank[c][rx] < self.rank[c][ry]:
            rx, ry = ry, rx
        self.parent[c][ry] = rx
        if self.rank[c][rx] == self.rank[c][ry]:
            self.rank[c][rx] += 1
            self.trail.append((c, ry, 1))
        else:
            self.trail.append((c, ry, 0))
        return True

    def mark(self) -> int:
        return len(self.trail)

    def rollback(self, mark: int) -> None:
        while len(self.trail) > mark:
            c, y, bumped = self.trail.pop()
            if bumped:
                self.rank[c][self.find(c, y)] -= 1
            self.parent[c][y] = y


def _search(g: Graph, k: int, order: list[int]) -> list[int] | None:
    """Backtracking partition into k induced forests.

    Returns a color list (1-based colors) or None.  Exhaustive: a branch is
    pruned only when some color class already contains a cycle, which no
    completion can repair.  Colors are interchangeable, so the first vertex
    of the order is pinned to color 1.
    """
    n = g.n
    if n == 0:
        return []
    colors = [0] * n
    forests = _Forests(n, k)

    def assign(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        choices = range(1, 2 if idx == 0 else k + 1)
        for c in choices:
            mark = forests.mark()
            ok = True
            for w in g.adj[v]:
                if colors[w] == c:
                    if not forests.union(c - 1, v, w):
                        ok = False
                        break
            if ok:
                colors[v] = c
                if assign(idx + 1):
                    return True
                colors[v] = 0
            forests.rollback(mark)
        return False

    if assign(0):
        return list(colors)
    return None


def _degree_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def arboricity_at_most(g: Graph, k: int) -> bool:
    """True iff the vertex set splits into k induced forests (exhaustive)."""
    if k not in (1, 2):
        raise ValueError(f"decision supports k in {{1,2}}, got {k}")
    if k == 1:
        return _is_forest(g)
    if g.n > ORACLE_VERTEX_CAP:
        raise OracleSizeError(
            f"{g.n} vertices exceeds the oracle cap of {ORACLE_VERTEX_CAP}"
        )
    return _search(g, 2, _degree_order(g)) is not None


def _is_forest(g: Graph) -> bool:
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        stack = [(root, -1)]
        seen[root] = True
        while stack:
            v, parent = stack.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, v))
                elif w != parent:
                    return False
    return True


def vertex_arboricity(g: Graph) -> int:
    """Minimum k such that the vertex set splits into k induced forests."""
    if g.n > ORACLE_VERTEX_CAP:
        raise OracleSizeError(
            f"{g.n} vertices exceeds the oracle cap of {ORACLE_VERTEX_CAP}"
        )
    if g.n == 0:
        return 0
    if _is_forest(g):
        return 1
    k = 2
    order = _degree_order(g)
    while _search(g, k, order) is None:
        k += 1
    return k


def find_good_total_coloring(g: Graph) -> TwoColoring | None:
    """A total good 2-coloring if one exists; brute force for small graphs."""
    if g.n > ORACLE_VERTEX_CAP:
        raise OracleSizeError(
            f"{g.n} vertices exceeds the oracle cap of {ORACLE_VERTEX_CAP}"
        )
    colors = _search(g, 2, _degree_order(g))
    if colors is None:
        return None
    return TwoColoring({v: colors[v] for v in range(g.n)})
