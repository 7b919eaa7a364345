"""Rotation-system embeddings: face tracing, genus, precondition reports.

A rotation system (cyclic neighbor order per vertex) determines an
orientable embedding.  Faces come from the next-edge rule: after arriving
along (u, v), leave along (v, w) where w follows u in the rotation at v.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graph import Graph, find_four_cycle, is_connected


class EmbeddingError(ValueError):
    """Raised for rotations inconsistent with the graph, or disconnected input."""


@dataclass(frozen=True)
class RotationSystem:
    """Per-vertex cyclic sequence of neighbor ids."""

    rotation: tuple[tuple[int, ...], ...]

    def successor(self, v: int, u: int) -> int:
        """Neighbor following u in the cyclic order at v."""
        row = self.rotation[v]
        i = row.index(u)
        return row[(i + 1) % len(row)]

    def validate_for(self, g: Graph) -> None:
        if len(self.rotation) != g.n:
            raise EmbeddingError(
                f"rotation covers {len(self.rotation)} vertices, graph has {g.n}"
            )
        for v in range(g.n):
            if tuple(sorted(self.rotation[v])) != g.adj[v]:
                raise EmbeddingError(
                    f"rotation at vertex {v} is not a permutation of its adjacency"
                )


@dataclass(frozen=True)
class FaceSet:
    """Closed walks of directed edges; every directed edge appears exactly once."""

    faces: tuple[tuple[tuple[int, int], ...], ...]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(walk) for walk in self.faces)

    def __len__(self) -> int:
        return len(self.faces)


def _canonical_walk(walk: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    k = walk.index(min(walk))
    return tuple(walk[k:] + walk[:k])


def trace_faces(g: Graph, rot: RotationSystem) -> FaceSet:
    """Trace all faces of the embedding given by rot.

    Each directed edge is consumed exactly once; faces are canonicalized to
    start at their lexicographically smallest directed edge and sorted.
    """
    rot.validate_for(g)
    if not is_connected(g):
        raise EmbeddingError("face tracing requires a connected graph")
    remaining = {(u, v) for u in range(g.n) for v in g.adj[u]}
    faces: list[tuple[tuple[int, int], ...]] = []
    while remaining:
        start = min(remaining)
        walk: list[tuple[int, int]] = []
        edge = start
        while True:
            if edge not in remaining:
                raise EmbeddingError(f"directed edge {edge} consumed twice")
            remaining.discard(edge)
            walk.append(edge)
            u, v = edge
            edge = (v, rot.successor(v, u))
            if edge == start:
                break
        faces.append(_canonical_walk(walk))
    faces.sort()
    fs = FaceSet(faces=tuple(faces))
    assert sum(fs.degrees) == 2 * g.m
    return fs


def genus(g: Graph, rot: RotationSystem) -> int:
    """Genus of the embedding: V - E + F = 2 - 2g for connected graphs."""
    if not is_connected(g):
        raise EmbeddingError("genus per component is out of scope; input disconnected")
    f = len(trace_faces(g, rot))
    euler = g.n - g.m + f
    if euler % 2 != 0 or euler > 2:
        raise EmbeddingError(f"impossible Euler characteristic {euler}")
    return (2 - euler) // 2


@dataclass(frozen=True)
class EmbeddingReport:
    """Validity certificate for a (graph, optional rotation) pair."""

    connected: bool
    min_degree: int
    four_cycle: tuple[int, int, int, int] | None
    genus: int | None
    face_count: int | None

    @property
    def has_four_cycle(self) -> bool:
        return self.four_cycle is not None

    @property
    def meets_preconditions(self) -> bool:
        """No 4-cycle, connected, and genus at most 1 when an embedding is given."""
        if self.has_four_cycle or not self.connected:
            return False
        return self.genus is None or self.genus <= 1


def check_preconditions(g: Graph, rot: RotationSystem | None = None) -> EmbeddingReport:
    connected = is_connected(g)
    g_val: int | None = None
    f_count: int | None = None
    if rot is not None and connected:
        faces = trace_faces(g, rot)
        f_count = len(faces)
        g_val = (2 - (g.n - g.m + f_count)) // 2
    return EmbeddingReport(
        connected=connected,
        min_degree=g.min_degree(),
        four_cycle=find_four_cycle(g),
        genus=g_val,
        face_count=f_count,
    )
