import pytest

from twoforests.generate import (
    GenParams,
    gen_config_instance,
    gen_instance,
    planted_config_of,
)
from twoforests.graph import build_graph
from twoforests.triangles import (
    AuxGraph,
    COMPONENT_CYCLE,
    COMPONENT_OTHER,
    COMPONENT_TREE,
    PreconditionError,
    SearchBudgetExceeded,
    aux_graph_text,
    bad_vertices,
    build_aux_graph,
    classify_components,
    degree_census,
    find_triangular_cycle_config,
    validate_config,
)

from conftest import cycle_graph, petersen, random_bounded_tree


def bowtie_plus():
    """A degree-4 vertex in two triangles, other ends distinct, no 4-cycle."""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def bad_chain(k: int):
    """k bad vertices joining k+1 triangles in a path.

    Vertices: b_1..b_k the chain; each chain edge has an apex; the two chain
    ends close their second triangles with a pendant pair.
    """
    edges = []
    n = 0

    def new():
        nonlocal n
        n += 1
        return n - 1

    chain = [new() for _ in range(k)]
    for a, b in zip(chain, chain[1:]):
        edges.append((a, b))
        w = new()
        edges += [(a, w), (b, w)]
    for end in (chain[0], chain[-1]):
        p, q = new(), new()
        edges += [(end, p), (end, q), (p, q)]
    return build_graph(n, edges), chain


def pg24_incidence():
    """5-regular girth-6 incidence graph (42 vertices); minimum degree 5."""
    diffs = (3, 6, 7, 12, 14)
    edges = [
        (i, 21 + j)
        for i in range(21)
        for j in range(21)
        if (i - j) % 21 in diffs
    ]
    return build_graph(42, edges)


class TestBadVertices:
    def test_petersen_none(self):
        assert bad_vertices(petersen()) == ()

    def test_bowtie_center(self):
        assert bad_vertices(bowtie_plus()) == (0,)

    def test_tree_family_has_some(self):
        g, _ = gen_instance(GenParams(seed=0, size=30, family="tree_H"))
        assert len(bad_vertices(g)) >= 1

    def test_config_instance_apex_is_bad(self):
        from twoforests.graph import triangles

        g = gen_config_instance(seed=0, s=5)
        bad = bad_vertices(g)
        assert len(bad) >= 1
        # recount independently: degree 4 and two listed triangles
        for v in bad:
            assert g.degree(v) == 4
            assert sum(1 for t in triangles(g) if v in t) == 2


class TestAuxGraph:
    def test_no_bad_vertices_empty(self):
        h = build_aux_graph(petersen())
        assert h.nodes == () and h.edges == ()

    def test_single_bad_vertex_single_edge(self):
        h = build_aux_graph(bowtie_plus())
        assert len(h.nodes) == 2
        assert len(h.edges) == 1
        assert h.edges[0][2] == 0

    @pytest.mark.parametrize("k", [1, 2, 3, 5])
    def test_chain_of_bad_vertices_is_a_path(self, k):
        g, chain = bad_chain(k)
        assert set(bad_vertices(g)) == set(chain)
        h = build_aux_graph(g)
        assert len(h.nodes) == k + 1
        assert len(h.edges) == k
        assert classify_components(h) == (COMPONENT_TREE,)

    def test_rejects_four_cycles(self):
        with pytest.raises(PreconditionError):
            build_aux_graph(cycle_graph(4))

    def test_edge_count_matches_bad_vertices(self):
        for fam in ("tree_H", "cycle_H", "planar_c4free"):
            for seed in range(3):
                g, _ = gen_instance(GenParams(seed=seed, size=28, family=fam))
                h = build_aux_graph(g)
                assert len(h.edges) == len(bad_vertices(g))

    def test_max_degree_three(self):
        for seed in range(3):
            g, _ = gen_instance(GenParams(seed=seed, size=28, family="tree_H"))
            h = build_aux_graph(g)
            assert all(h.degree(i) <= 3 for i in range(len(h.nodes)))

    def test_text_dump_has_legend(self):
        text = aux_graph_text(build_aux_graph(bowtie_plus()))
        assert text.startswith("2 1\n0 1\n")
        assert "# node 0 = triangle" in text
        assert "bad vertex 0" in text


class TestClassify:
    def test_hand_built_components(self):
        # nodes 0-1-2 a path, 3-4-5 a triangle, 6-7-8-9 a triangle plus pendant
        nodes = tuple((100 + i, 200 + i, 300 + i) for i in range(10))
        edges = (
            (0, 1, 50), (1, 2, 51),
            (3, 4, 52), (4, 5, 53), (3, 5, 54),
            (6, 7, 55), (7, 8, 56), (6, 8, 57), (8, 9, 58),
        )
        h = AuxGraph(nodes=nodes, edges=edges)
        assert classify_components(h) == (
            COMPONENT_TREE,
            COMPONENT_CYCLE,
            COMPONENT_OTHER,
        )

    def test_ring_family_yields_cycle(self):
        g, _ = gen_instance(GenParams(seed=4, size=26, family="cycle_H"))
        assert COMPONENT_CYCLE in classify_components(build_aux_graph(g))


class TestDegreeCensus:
    def test_single_edge(self):
        g, _ = bad_chain(1)
        h = build_aux_graph(g)
        c = degree_census(h, h.components()[0])
        assert (c.z1, c.z2, c.z3) == (2, 0, 0)

    def test_star(self):
        # center triangle with three bad corners: K_{1,3} in the aux graph
        edges = [(0, 1), (1, 2), (0, 2)]
        nxt = 3
        for corner in (0, 1, 2):
            p, q = nxt, nxt + 1
            nxt += 2
            edges += [(corner, p), (corner, q), (p, q)]
        g = build_graph(nxt, edges)
        h = build_aux_graph(g)
        assert len(h.nodes) == 4 and len(h.edges) == 3
        comp = max(h.components(), key=len)
        c = degree_census(h, comp)
        assert (c.z1, c.z2, c.z3) == (3, 0, 1)

    def test_non_tree_rejected(self):
        g, _ = gen_instance(GenParams(seed=4, size=26, family="cycle_H"))
        h = build_aux_graph(g)
        tags = classify_components(h)
        comp = h.components()[tags.index(COMPONENT_CYCLE)]
        with pytest.raises(PreconditionError):
            degree_census(h, comp)

    def test_leaf_excess_on_random_trees(self, rng):
        for _ in range(60):
            n = rng.randrange(2, 60)
            t = random_bounded_tree(rng, n)
            z = [0, 0, 0, 0]
            for v in range(n):
                z[t.degree(v)] += 1
            assert z[1] == z[3] + 2


class TestConfigSearch:
    def test_planted_config_found(self):
        g = gen_config_instance(seed=5, s=5)
        cfg = find_triangular_cycle_config(g)
        assert cfg is not None
        assert len(cfg.vertex_set) == 6
        validate_config(g, cfg)

    def test_petersen_none(self):
        assert find_triangular_cycle_config(petersen()) is None

    def test_min_degree_five_none(self):
        assert find_triangular_cycle_config(pg24_incidence()) is None

    def test_rejects_four_cycles(self):
        with pytest.raises(PreconditionError):
            find_triangular_cycle_config(cycle_graph(4))

    def test_budget_exhaustion_is_distinguished(self):
        g = gen_config_instance(seed=5, s=5)
        with pytest.raises(SearchBudgetExceeded):
            find_triangular_cycle_config(g, budget=2)

    @pytest.mark.parametrize("s", [5, 6, 7])
    def test_planted_config_validates(self, s):
        g = gen_config_instance(seed=9, s=s)
        cfg = planted_config_of(g, s)
        validate_config(g, cfg)
        found = find_triangular_cycle_config(g)
        assert found is not None
        validate_config(g, found)

    def test_returned_config_structure(self):
        g = gen_config_instance(seed=3, s=6)
        cfg = find_triangular_cycle_config(g)
        S = cfg.vertex_set
        induced = [(u, v) for u, v in g.edges() if u in S and v in S]
        assert len(induced) == cfg.s + 2
        assert all(g.degree(v) == 4 for v in S)
        assert cfg.s >= 5

    def test_no_other_components_without_config(self):
        for fam in ("planar_c4free", "toroidal_c4free", "tree_H", "cycle_H"):
            for seed in range(3):
                g, _ = gen_instance(GenParams(seed=seed, size=26, family=fam))
                if find_triangular_cycle_config(g) is None:
                    tags = classify_components(build_aux_graph(g))
                    assert COMPONENT_OTHER not in tags
