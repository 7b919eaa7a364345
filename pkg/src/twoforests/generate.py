"""Deterministic instance generators.

Random graphs almost always contain 4-cycles, so instances are grown from
small embedded seeds by genus-preserving local operations (subdivision,
pendants, triangle apexes, face chords), each applied only when it keeps
the graph 4-cycle-free.  Structured gadgets plant bad-vertex trees, bad
vertex rings, and the cycle-plus-apex configuration on demand.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import (
    Graph,
    block_decomposition,
    build_graph,
    find_four_cycle,
    is_connected,
)
from .embedding import RotationSystem, trace_faces
from .triangles import TriangularCycleConfig, validate_config

FAMILIES = (
    "planar_c4free",
    "toroidal_c4free",
    "config_bearing",
    "tree_H",
    "cycle_H",
)


@dataclass(frozen=True)
class GenParams:
    """Identical params always produce the identical instance."""

    seed: int
    size: int
    family: str
    s: int | None = None

    def manifest_line(self) -> str:
        s = self.s if self.s is not None else "-"
        return f"GENPARAMS family={self.family} seed={self.seed} size={self.size} s={s}"


class GenerationError(ValueError):
    """The requested family is unsatisfiable under the given bounds."""


# =====================================================================
# Embedded builder: grow a graph together with its rotation system
# =====================================================================


class EmbeddedBuilder:
    """Mutable embedded graph under genus-preserving local operations."""

    def __init__(self, rotation: tuple[tuple[int, ...], ...]) -> None:
        self.rot: list[list[int]] = [list(r) for r in rotation]

    @property
    def n(self) -> int:
        return len(self.rot)

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def graph(self) -> Graph:
        edges = [(u, v) for u in range(self.n) for v in self.rot[u] if u < v]
        return build_graph(self.n, edges)

    def rotation(self) -> RotationSystem:
        return RotationSystem(rotation=tuple(tuple(r) for r in self.rot))

    def snapshot(self) -> list[list[int]]:
        return [list(r) for r in self.rot]

    def restore(self, snap: list[list[int]]) -> None:
        self.rot = [list(r) for r in snap]

    def common_neighbors(self, u: int, v: int) -> set[int]:
        return set(self.rot[u]) & set(self.rot[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rot[u]

    def subdivide(self, u: int, v: int) -> int:
        """Replace edge (u, v) by a path through a new vertex.  Preserves
        genus; creates a 4-cycle only when (u, v) lay in a triangle."""
        w = self.n
        self.rot.append([u, v])
        self.rot[u][self.rot[u].index(v)] = w
        self.rot[v][self.rot[v].index(u)] = w
        return w

    def add_pendant(self, v: int) -> int:
        """Attach a new leaf at v.  Any corner serves; genus is unchanged."""
        w = self.n
        self.rot.append([v])
        self.rot[v].insert(0, w)
        return w

    def add_apex(self, u: int, v: int) -> int:
        """New vertex adjacent to both ends of edge (u, v), forming a
        triangle face.  Safe against 4-cycles iff u and v have no common
        neighbor."""
        w = self.n
        self.rot.append([u, v])
        ru = self.rot[u]
        ru.insert(ru.index(v) + 1, w)
        rv = self.rot[v]
        rv.insert(rv.index(u), w)
        return w

    def add_chord(self, a: int, b: int) -> bool:
        """Join a and b through a shared face, splitting it.  Returns False
        when no face contains corners of both."""
        if a == b or self.has_edge(a, b):
            return False
        faces = trace_faces(self.graph(), self.rotation())
        for walk in faces.faces:
            ia = next((i for i, (t, _) in enumerate(walk) if t == a), None)
            ib = next((i for i, (t, _) in enumerate(walk) if t == b), None)
            if ia is None or ib is None:
                continue
            prev_a = walk[ia - 1][0]
            prev_b = walk[ib - 1][0]
            ra = self.rot[a]
            ra.insert(ra.index(prev_a) + 1, b)
            rb = self.rot[b]
            rb.insert(rb.index(prev_b) + 1, a)
            return True
        return False


# =====================================================================
# Seed embeddings (rotations verified by the embedding tests)
# =====================================================================


def cycle_seed(k: int) -> EmbeddedBuilder:
    rot = tuple(((v - 1) % k, (v + 1) % k) for v in range(k))
    return EmbeddedBuilder(rot)


def triangle_seed() -> EmbeddedBuilder:
    return cycle_seed(3)


K4_PLANAR_ROTATION = ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1))

CUBE_PLANAR_ROTATION = (
    (1, 3, 4), (0, 5, 2), (1, 6, 3), (0, 2, 7),
    (0, 7, 5), (1, 4, 6), (2, 5, 7), (3, 6, 4),
)

K5_TORUS_ROTATION = (
    (1, 2, 3, 4), (0, 2, 3, 4), (0, 1, 4, 3), (0, 2, 1, 4), (0, 3, 1, 2),
)

K33_TORUS_ROTATION = (
    (3, 4, 5), (3, 4, 5), (3, 4, 5), (0, 1, 2), (0, 1, 2), (0, 1, 2),
)

PETERSEN_TORUS_ROTATION = (
    (1, 4, 5), (0, 2, 6), (1, 3, 7), (2, 4, 8), (0, 3, 9),
    (0, 7, 8), (1, 9, 8), (2, 5, 9), (3, 6, 5), (4, 6, 7),
)


def petersen_graph() -> Graph:
    edges = (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    )
    return build_graph(10, edges)


def _full_subdivide(b: EmbeddedBuilder) -> None:
    """Subdivide every current edge once, doubling the girth."""
    for u, v in list(b.graph().edges()):
        b.subdivide(u, v)


def _planar_seed(rng: random.Random) -> EmbeddedBuilder:
    choice = rng.randrange(5)
    if choice == 0:
        return triangle_seed()
    if choice == 1:
        return cycle_seed(rng.choice((5, 6, 7)))
    if choice == 2:
        b = EmbeddedBuilder(K4_PLANAR_ROTATION)
        _full_subdivide(b)
        return b
    if choice == 3:
        b = EmbeddedBuilder(CUBE_PLANAR_ROTATION)
        _full_subdivide(b)
        return b
    b = triangle_seed()
    stem = b.add_pendant(0)
    b.add_apex(0, stem)
    return b


def _toroidal_seed(rng: random.Random) -> EmbeddedBuilder:
    choice = rng.randrange(3)
    if choice == 0:
        return EmbeddedBuilder(PETERSEN_TORUS_ROTATION)
    if choice == 1:
        b = EmbeddedBuilder(K5_TORUS_ROTATION)
        _full_subdivide(b)
        return b
    b = EmbeddedBuilder(K33_TORUS_ROTATION)
    _full_subdivide(b)
    return b


# =====================================================================
# Mutation loop
# =====================================================================


def _length3_path_exists(g: Graph, a: int, b: int) -> bool:
    for p in g.adj[a]:
        if p == b:
            continue
        for q in g.adj[p]:
            if q != a and q != b and b in g.adj_sets[q]:
                return True
    return False


def _mutate(
    b: EmbeddedBuilder,
    rng: random.Random,
    size: int,
    frozen: frozenset[int] = frozenset(),
    pendant_only: frozenset[int] = frozenset(),
    rounds: int | None = None,
) -> None:
    """Apply random safe operations until the builder reaches size vertices.

    Frozen vertices keep their degree; pendant_only vertices accept new
    leaves but no triangle- or cycle-creating edges (so planted gadget
    vertices never gain a second triangle).  Every application re-checks
    4-cycle-freeness and reverts on violation.
    """
    guarded = frozen | pendant_only
    attempts = rounds if rounds is not None else 4 * max(size - b.n, 0) + 20
    for _ in range(attempts):
        if b.n >= size:
            break
        g = b.graph()
        op = rng.choices(
            ("subdivide", "pendant", "apex", "chord"), weights=(25, 35, 25, 15)
        )[0]
        snap = b.snapshot()
        try:
            if op == "subdivide":
                edges = [
                    (u, v)
                    for u, v in g.edges()
                    if not (g.adj_sets[u] & g.adj_sets[v])
                ]
                if not edges:
                    continue
                b.subdivide(*rng.choice(edges))
            elif op == "pendant":
                candidates = [v for v in range(g.n) if v not in frozen]
                b.add_pendant(rng.choice(candidates))
            elif op == "apex":
                edges = [
                    (u, v)
                    for u, v in g.edges()
                    if u not in guarded
                    and v not in guarded
                    and not (g.adj_sets[u] & g.adj_sets[v])
                ]
                if not edges:
                    continue
                b.add_apex(*rng.choice(edges))
            else:
                a = rng.randrange(g.n)
                c = rng.randrange(g.n)
                if (
                    a == c
                    or a in guarded
                    or c in guarded
                    or g.has_edge(a, c)
                    or _length3_path_exists(g, a, c)
                ):
                    continue
                if not b.add_chord(a, c):
                    continue
        except Exception:
            b.restore(snap)
            continue
        if find_four_cycle(b.graph()) is not None:
            b.restore(snap)


# =====================================================================
# Gadgets for auxiliary-graph families
# =====================================================================


def _plant_tree_gadget(
    b: EmbeddedBuilder, rng: random.Random, chain: int
) -> tuple[frozenset[int], frozenset[int]]:
    """Plant a chain of `chain` bad vertices; the auxiliary graph gains a
    path component with chain edges.  Returns (frozen, pendant_only)."""
    anchor = rng.randrange(b.n)
    a = b.add_pendant(anchor)
    c = b.add_pendant(a)
    touching = [a, c]
    v = b.add_apex(a, c)
    bad = [v]
    for _ in range(chain - 1):
        nxt = b.add_pendant(v)
        w = b.add_apex(v, nxt)
        touching.append(w)
        v = nxt
        bad.append(v)
    tail = b.add_pendant(v)
    d = b.add_apex(v, tail)
    touching += [tail, d]
    return frozenset(bad), frozenset(touching)


def _plant_ring_gadget(b: EmbeddedBuilder, k: int) -> tuple[frozenset[int], frozenset[int]]:
    """Turn a length-k cycle seed (vertices 0..k-1) into a bad-vertex ring:
    an apex on every cycle edge makes each cycle vertex bad, and the
    auxiliary graph gains a k-node cycle component.  Returns
    (frozen, pendant_only)."""
    apexes = [b.add_apex(i, (i + 1) % k) for i in range(k)]
    return frozenset(range(k)), frozenset(apexes)


# =====================================================================
# The cycle-plus-apex configuration instance
# =====================================================================

_CAGE_DIFFERENCES = (0, 1, 3, 9)  # planar difference set mod 13
_SLOT_FORBIDDEN = frozenset({1, 3, 4, 9, 10, 12})


def _assign_slots(
    rng: random.Random, s: int, ncopies: int
) -> dict[str, tuple[int, int]] | None:
    """Choose (copy, matching index) per attachment slot by backtracking.

    Slots wired to adjacent configuration vertices must not be joined by a
    host edge; within a copy that means their matching-index difference
    mod 13 stays outside _SLOT_FORBIDDEN.
    """
    order = ["x"] + [f"v{i}" for i in range(3, s + 1)] + ["u"]
    neighbors: dict[str, list[str]] = {name: [] for name in order}
    ring = ["x"] + [f"v{i}" for i in range(3, s + 1)]
    for i, name in enumerate(ring):
        neighbors[name].append(ring[(i + 1) % len(ring)])
        neighbors[ring[(i + 1) % len(ring)]].append(name)
    neighbors["x"].append("u")
    neighbors["u"].append("x")
    candidates = [(c, k) for c in range(ncopies) for k in range(13)]
    rng.shuffle(candidates)
    chosen: dict[str, tuple[int, int]] = {}

    def conflict(a: tuple[int, int], b: tuple[int, int]) -> bool:
        if a[0] != b[0]:
            return False
        return a[1] == b[1] or (a[1] - b[1]) % 13 in _SLOT_FORBIDDEN

    def bt(idx: int) -> bool:
        if idx == len(order):
            return True
        used = set(chosen.values())
        for cand in candidates:
            if cand in used:
                continue
            if any(
                conflict(cand, chosen[nb])
                for nb in neighbors[order[idx]]
                if nb in chosen
            ):
                continue
            chosen[order[idx]] = cand
            if bt(idx + 1):
                return True
            del chosen[order[idx]]
        return False

    return chosen if bt(0) else None


def gen_config_instance(
    seed: int, s: int, anchor: str = "hosts", link: str | None = None
) -> Graph:
    """A 4-cycle-free graph containing a valid cycle-plus-apex
    configuration on vertices 0..s (cycle 0..s-1, apex s).

    anchor="hosts": every attachment lands in a 4-regular girth-6 host
    (the point-line incidence graph of the order-3 projective plane) with
    one matching edge deleted per slot, so external vertices keep degree
    exactly 4 and the instance is 2-connected with minimum degree 4; the
    configuration reduction is then genuinely reachable by the solver.

    anchor="trees": attachments are pendant trees, optionally linked by a
    path between the first cycle vertex's outside neighbor and an apex
    neighbor, or between the two apex neighbors; those links are what
    force the fallback branches of the triangular extension.
    """
    if s < 5:
        raise ValueError(f"cycle length must be at least 5, got {s}")
    if anchor == "trees":
        return _tree_anchored_config_instance(random.Random(seed), s, link)
    if anchor != "hosts":
        raise ValueError(f"anchor must be 'hosts' or 'trees', got {anchor!r}")
    for attempt in range(64):
        g = _try_config_instance(random.Random((seed << 8) ^ attempt), s)
        if g is not None:
            return g
    raise GenerationError(f"no valid configuration instance for seed={seed} s={s}")


CONFIG_LINKS = ("none", "caseone", "casetwo")


def _tree_anchored_config_instance(
    rng: random.Random, s: int, link: str | None
) -> Graph:
    if link is None:
        link = rng.choice(CONFIG_LINKS)
    if link not in CONFIG_LINKS:
        raise ValueError(f"link must be one of {CONFIG_LINKS}, got {link!r}")
    edges = [(i, (i + 1) % s) for i in range(s)] + [(s, 0), (s, 1)]
    nxt = s + 1

    def new() -> int:
        nonlocal nxt
        nxt += 1
        return nxt - 1

    x1, x2 = new(), new()
    edges += [(0, x1), (1, x2)]
    z1, z2 = new(), new()
    edges += [(s, z1), (s, z2)]
    externals = [x1, x2, z1, z2]
    if link == "caseone":
        m = new()
        edges += [(x1, m), (m, z1)]
        externals.append(m)
    elif link == "casetwo":
        p, q = new(), new()
        edges += [(z1, p), (p, q), (q, z2)]
        externals += [p, q]
    if link != "casetwo":
        # a second triangle at the apex makes it a bad vertex; with the
        # casetwo link this edge would close a 4-cycle through the path
        edges.append((z1, z2))
    for i in range(2, s):
        a, b = new(), new()
        edges += [(i, a), (i, b)]
        externals += [a, b]
    for _ in range(rng.randrange(0, 2 * s)):
        host = rng.choice(externals)
        leaf = new()
        edges.append((host, leaf))
        externals.append(leaf)
    g = build_graph(nxt, edges)
    assert find_four_cycle(g) is None
    validate_config(g, _planted_config(g, s))
    return g


def _try_config_instance(rng: random.Random, s: int) -> Graph | None:
    ncopies = max(1, (s + 6) // 10)
    base = s + 1
    n = base + 26 * ncopies
    assignment = _assign_slots(rng, s, ncopies)
    if assignment is None:
        return None
    # the apex slot's matching edge stays: its endpoints then form a second
    # triangle with the apex, making the apex a bad vertex
    deleted = {slot for name, slot in assignment.items() if name != "u"}

    def pid(c: int, k: int) -> int:
        return base + 26 * c + k

    def lid(c: int, k: int) -> int:
        return base + 26 * c + 13 + k

    edges = [(i, (i + 1) % s) for i in range(s)] + [(s, 0), (s, 1)]
    for c in range(ncopies):
        for i in range(13):
            for j in range(13):
                if (i - j) % 13 not in _CAGE_DIFFERENCES:
                    continue
                if i == j and (c, i) in deleted:
                    continue
                edges.append((pid(c, i), lid(c, j)))
    cx, kx = assignment["x"]
    edges += [(0, pid(cx, kx)), (1, lid(cx, kx))]
    cu, ku = assignment["u"]
    edges += [(s, pid(cu, ku)), (s, lid(cu, ku))]
    for i in range(3, s + 1):
        c, k = assignment[f"v{i}"]
        edges += [(i - 1, pid(c, k)), (i - 1, lid(c, k))]
    g = build_graph(n, edges)
    if find_four_cycle(g) is not None:
        return None
    if not is_connected(g) or g.min_degree() != 4:
        return None
    if block_decomposition(g).cut_vertices:
        return None
    cfg = _planted_config(g, s)
    validate_config(g, cfg)
    return g


def _planted_config(g: Graph, s: int) -> TriangularCycleConfig:
    S = set(range(s + 1))
    external = tuple(tuple(sorted(set(g.adj[v]) - S)) for v in range(s))
    apex_external = tuple(sorted(set(g.adj[s]) - {0, 1}))
    return TriangularCycleConfig(
        cycle=tuple(range(s)), apex=s, external=external, apex_external=apex_external
    )


def planted_config_of(g: Graph, s: int) -> TriangularCycleConfig:
    """Recover the configuration planted by gen_config_instance."""
    return _planted_config(g, s)


# =====================================================================
# Top-level generation
# =====================================================================


def gen_instance(p: GenParams) -> tuple[Graph, RotationSystem | None]:
    """Generate an instance of the requested family.

    planar_c4free and toroidal_c4free come with a rotation certifying
    genus 0 or 1; tree_H and cycle_H are planar gadget instances; the
    config_bearing family has no embedding certificate.
    """
    if p.family not in FAMILIES:
        raise GenerationError(f"unknown family {p.family!r}; choose from {FAMILIES}")
    if p.family == "config_bearing":
        rng = random.Random(p.seed)
        s = p.s if p.s is not None else rng.choice((5, 6, 7))
        return gen_config_instance(p.seed, s), None
    for attempt in range(32):
        rng = random.Random((p.seed << 8) ^ attempt)
        g, rot = _grow_family(p, rng)
        if _family_ok(p.family, g):
            return g, rot
    raise GenerationError(
        f"family {p.family} unsatisfiable for seed={p.seed} size={p.size}"
    )


def _grow_family(p: GenParams, rng: random.Random) -> tuple[Graph, RotationSystem]:
    if p.family == "planar_c4free":
        b = _planar_seed(rng)
        _mutate(b, rng, p.size)
    elif p.family == "toroidal_c4free":
        b = _toroidal_seed(rng)
        _mutate(b, rng, p.size)
    elif p.family == "tree_H":
        b = _planar_seed(rng)
        chain = max(1, min(5, (p.size - b.n - 3) // 3))
        frozen, tender = _plant_tree_gadget(b, rng, chain)
        _mutate(b, rng, p.size, frozen=frozen, pendant_only=tender)
    else:  # cycle_H
        k = 5 + 2 * rng.randrange(3)
        b = cycle_seed(k)
        frozen, tender = _plant_ring_gadget(b, k)
        _mutate(b, rng, p.size, frozen=frozen, pendant_only=tender)
    g = b.graph()
    if find_four_cycle(g) is not None:
        raise GenerationError("generator produced a 4-cycle; ops are broken")
    return g, b.rotation()


def _family_ok(family: str, g: Graph) -> bool:
    if family in ("planar_c4free", "toroidal_c4free"):
        return True
    from .triangles import COMPONENT_CYCLE, COMPONENT_TREE, build_aux_graph, classify_components

    tags = classify_components(build_aux_graph(g))
    want = COMPONENT_TREE if family == "tree_H" else COMPONENT_CYCLE
    return want in tags
