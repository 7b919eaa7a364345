import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twoforests.graph import (
    GraphInputError,
    TwoColoring,
    block_decomposition,
    build_graph,
    connected_components,
    find_four_cycle,
    find_monochromatic_cycle,
    girth,
    induced_subgraph,
    triangles,
)

from conftest import (
    classes_are_forests_by_union_find,
    complete_graph,
    cut_vertices_by_removal,
    cycle_graph,
    girth_by_edge_removal,
    has_two_common_neighbors,
    path_graph,
    petersen,
    random_graph,
)


def edge_sets(max_n=12):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.sets(
                st.tuples(
                    st.integers(0, n - 1), st.integers(0, n - 1)
                ).map(lambda e: (min(e), max(e))).filter(lambda e: e[0] != e[1]),
                max_size=3 * n,
            ),
        )
    )


class TestBuildGraph:
    def test_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
        assert [g.degree(v) for v in range(3)] == [2, 2, 2]
        assert g.m == 3

    def test_loop_rejected(self):
        with pytest.raises(GraphInputError):
            build_graph(2, [(0, 0)])

    def test_duplicate_rejected(self):
        with pytest.raises(GraphInputError):
            build_graph(3, [(0, 1), (1, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphInputError):
            build_graph(2, [(0, 2)])

    def test_petersen_census(self):
        g = petersen()
        assert g.m == 15
        assert all(g.degree(v) == 3 for v in range(10))

    @settings(max_examples=150, deadline=None)
    @given(edge_sets())
    def test_degree_sum_is_twice_edges(self, ne):
        n, edges = ne
        g = build_graph(n, edges)
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


class TestFourCycle:
    def test_c4_is_its_own_witness(self):
        g = cycle_graph(4)
        cyc = find_four_cycle(g)
        assert cyc is not None and len(set(cyc)) == 4

    def test_k5_has_one(self):
        assert find_four_cycle(complete_graph(5)) is not None

    def test_petersen_has_none(self):
        assert find_four_cycle(petersen()) is None

    def test_found_cycle_is_a_real_cycle(self):
        g = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)])
        a, b, c, d = find_four_cycle(g)
        for u, v in ((a, b), (b, c), (c, d), (d, a)):
            assert g.has_edge(u, v)

    @settings(max_examples=150, deadline=None)
    @given(edge_sets())
    def test_agrees_with_common_neighbor_criterion(self, ne):
        n, edges = ne
        g = build_graph(n, edges)
        assert (find_four_cycle(g) is not None) == has_two_common_neighbors(g)


class TestGirth:
    def test_tree_has_none(self):
        assert girth(path_graph(5)) is None

    def test_triangle(self):
        assert girth(build_graph(3, [(0, 1), (1, 2), (2, 0)])) == 3

    def test_petersen(self):
        assert girth(petersen()) == 5

    @settings(max_examples=120, deadline=None)
    @given(edge_sets())
    def test_agrees_with_edge_removal_oracle(self, ne):
        n, edges = ne
        g = build_graph(n, edges)
        assert girth(g) == girth_by_edge_removal(g)


class TestTriangles:
    def test_c5_empty(self):
        assert triangles(cycle_graph(5)) == []

    def test_k4_has_four(self):
        assert len(triangles(complete_graph(4))) == 4

    def test_k5_has_ten(self):
        assert len(triangles(complete_graph(5))) == 10

    def test_each_listed_once_sorted(self):
        tris = triangles(complete_graph(5))
        assert tris == sorted(set(tris))
        assert all(a < b < c for a, b, c in tris)


class TestMonochromaticCycle:
    def test_all_one_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
        color, cycle = find_monochromatic_cycle(g, TwoColoring({0: 1, 1: 1, 2: 1}))
        assert color == 1 and sorted(cycle) == [0, 1, 2]

    def test_path_is_fine(self):
        g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
        assert find_monochromatic_cycle(g, TwoColoring({0: 1, 1: 1, 2: 2})) is None

    def test_partial_coloring_ignores_uncolored(self):
        g = cycle_graph(5)
        f = TwoColoring({0: 1, 1: 1, 2: 1, 3: 1})
        assert find_monochromatic_cycle(g, f) is None

    def test_witness_is_a_cycle(self):
        g = cycle_graph(6)
        f = TwoColoring({v: 1 for v in range(6)})
        color, cycle = find_monochromatic_cycle(g, f)
        assert len(cycle) >= 3
        for i, v in enumerate(cycle):
            assert g.has_edge(v, cycle[(i + 1) % len(cycle)])
            assert f.color(v) == color

    @settings(max_examples=200, deadline=None)
    @given(edge_sets(10), st.integers(0, 3**10 - 1))
    def test_agrees_with_union_find(self, ne, colorseed):
        n, edges = ne
        g = build_graph(n, edges)
        assignment = {}
        x = colorseed
        for v in range(n):
            x, r = divmod(x, 3)
            if r:
                assignment[v] = r
        f = TwoColoring(assignment)
        assert (find_monochromatic_cycle(g, f) is None) == (
            classes_are_forests_by_union_find(g, f)
        )


class TestBlocks:
    def test_two_triangles_sharing_a_vertex(self):
        g = build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        d = block_decomposition(g)
        assert d.blocks == ((0, 1, 2), (2, 3, 4))
        assert d.cut_vertices == (2,)

    def test_c6_single_block(self):
        d = block_decomposition(cycle_graph(6))
        assert d.blocks == (tuple(range(6)),)
        assert d.cut_vertices == ()

    def test_p4_three_bridges(self):
        d = block_decomposition(path_graph(4))
        assert d.blocks == ((0, 1), (1, 2), (2, 3))
        assert d.cut_vertices == (1, 2)

    def test_isolated_vertex_in_no_block(self):
        g = build_graph(4, [(0, 1), (1, 2), (0, 2)])
        d = block_decomposition(g)
        assert d.blocks == ((0, 1, 2),)

    def test_random_graphs_against_brute_force(self, rng):
        for trial in range(40):
            n = rng.randrange(2, 50)
            g = random_graph(rng, n, rng.choice((0.05, 0.1, 0.3)))
            d = block_decomposition(g)
            # identity: sum over blocks of (|B|-1) = |V| - #components
            ncomp = len(connected_components(g))
            assert sum(len(b) - 1 for b in d.blocks) == n - ncomp
            assert set(d.cut_vertices) == cut_vertices_by_removal(g)
            # every edge in exactly one block
            cover = {}
            for i, b in enumerate(d.blocks):
                bset = set(b)
                for u, v in g.edges():
                    if u in bset and v in bset:
                        cover.setdefault((u, v), []).append(i)
            assert set(cover) == set(g.edges())
            assert all(len(owners) == 1 for owners in cover.values())
            # blocks pairwise share at most one vertex, a cut vertex
            for i in range(len(d.blocks)):
                for j in range(i + 1, len(d.blocks)):
                    shared = set(d.blocks[i]) & set(d.blocks[j])
                    assert len(shared) <= 1
                    assert shared <= set(d.cut_vertices)
            # each block with >= 3 vertices is 2-connected on its own
            for b in d.blocks:
                if len(b) >= 3:
                    sub, _ = induced_subgraph(g, b)
                    assert not cut_vertices_by_removal(sub)
                    assert len(connected_components(sub)) == 1
