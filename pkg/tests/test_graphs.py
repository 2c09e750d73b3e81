import math

import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs
from socolor.graphs import (
    Graph,
    Multigraph,
    Orientation,
    cartesian_product,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    from_edge_list,
    girth,
    is_claw_free,
    kd_profile,
    line_graph,
    path,
    petersen,
    random_graph,
    square,
)


class TestConstruction:
    def test_k2(self):
        g = from_edge_list(2, [(0, 1)])
        assert [g.degree(v) for v in range(2)] == [1, 1]

    def test_c4(self):
        g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert all(g.degree(v) == 2 for v in range(4))

    def test_loop_rejected(self):
        with pytest.raises(ValueError, match=r"\(0, 0\)"):
            from_edge_list(3, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match=r"\(1, 5\)"):
            from_edge_list(3, [(1, 5)])

    def test_duplicates_collapse(self):
        g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
        assert g.m == 1

    def test_immutable(self):
        g = complete(3)
        with pytest.raises(AttributeError):
            g.n = 5


class TestSquare:
    def test_c5_squares_to_k5(self):
        assert square(cycle(5)) == oracles.square_oracle(cycle(5)) == complete(5)

    def test_k2_fixed_point(self):
        assert square(complete(2)) == complete(2)

    def test_p4_edges(self):
        # distance table of 0-1-2-3: pairs at distance <= 2
        assert square(path(4)).edges == frozenset(
            {(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)}
        )

    @given(graphs())
    @settings(max_examples=60)
    def test_contains_original_edges(self, g):
        assert g.edges <= square(g).edges

    @given(graphs())
    @settings(max_examples=60)
    def test_matches_bfs_reachability(self, g):
        assert square(g) == oracles.square_oracle(g)


class TestGirth:
    def test_c7(self):
        assert girth(cycle(7)) == 7

    def test_trees_are_acyclic(self):
        assert girth(path(6)) == math.inf
        assert girth(complete_bipartite(1, 4)) == math.inf

    def test_petersen(self):
        p = petersen()
        assert girth(p) == oracles.girth_oracle(p) == 5

    @given(graphs())
    @settings(max_examples=60)
    def test_infinite_iff_acyclic(self, g):
        assert (girth(g) == math.inf) == oracles.acyclic_oracle(g)

    @given(graphs(min_n=3, max_n=8))
    @settings(max_examples=60)
    def test_matches_edge_deletion_oracle(self, g):
        assert girth(g) == oracles.girth_oracle(g)


class TestCartesianProduct:
    def test_k2_k2_is_a_quadrilateral(self):
        g = cartesian_product(complete(2), complete(2))
        assert (g.n, g.m) == (4, 4)
        assert all(g.degree(v) == 2 for v in range(4))
        assert girth(g) == 4

    def test_k3_k3_shape(self):
        g = cartesian_product(complete(3), complete(3))
        assert (g.n, g.m) == (9, 18)
        assert all(g.degree(v) == 4 for v in range(9))

    def test_k1_is_identity(self):
        g = petersen()
        assert cartesian_product(complete(1), g) == g

    @given(graphs(max_n=5), graphs(max_n=5))
    @settings(max_examples=40)
    def test_counts(self, g, h):
        prod = cartesian_product(g, h)
        assert prod.n == g.n * h.n
        assert prod.m == g.n * h.m + h.n * g.m


class TestClawFree:
    def test_claw_itself(self):
        assert not is_claw_free(complete_bipartite(1, 3))

    def test_c6(self):
        assert is_claw_free(cycle(6))

    def test_petersen(self):
        p = petersen()
        assert is_claw_free(p) == oracles.claw_free_oracle(p) is False

    @given(graphs(max_n=10))
    @settings(max_examples=60)
    def test_matches_subset_enumeration(self, g):
        assert is_claw_free(g) == oracles.claw_free_oracle(g)


class TestKdProfile:
    def test_c4(self):
        g = cycle(4)
        assert all(kd_profile(g, v) == (2, 2) for v in range(4))

    def test_star_center(self):
        assert kd_profile(complete_bipartite(1, 4), 0) == (4, 0)

    def test_p3(self):
        g = path(3)
        assert kd_profile(g, 1) == (2, 0)
        assert kd_profile(g, 0) == (1, 1)


class TestGenerators:
    def test_petersen_shape(self):
        g = petersen()
        assert (g.n, g.m) == (10, 15)
        assert all(g.degree(v) == 3 for v in range(10))

    def test_complete_bipartite_degrees(self):
        g = complete_bipartite(2, 3)
        assert sorted((g.degree(v) for v in range(5)), reverse=True) == [3, 3, 2, 2, 2]

    def test_random_graph_deterministic(self):
        assert random_graph(8, 0.3, 42) == random_graph(8, 0.3, 42)

    def test_random_graph_seed_matters(self):
        assert random_graph(12, 0.5, 1) != random_graph(12, 0.5, 2)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            cycle(2)
        with pytest.raises(ValueError):
            random_graph(5, 1.5, 0)
        with pytest.raises(ValueError):
            complete(0)

    def test_complete_multipartite(self):
        g = complete_multipartite([2, 2, 2])
        assert (g.n, g.m) == (6, 12)
        assert all(g.degree(v) == 4 for v in range(6))

    def test_line_graph_of_path(self):
        assert line_graph(path(4)) == path(3)


class TestMultigraph:
    def test_parallel_edges_kept(self):
        mg = Multigraph(2, [(0, 1), (0, 1), (1, 0)])
        assert len(mg.edges) == 3
        assert mg.degree(0) == 3

    def test_loops_rejected(self):
        with pytest.raises(ValueError):
            Multigraph(2, [(1, 1)])

    def test_orientation_validates_arcs(self):
        mg = Multigraph(3, [(0, 1), (1, 2)])
        with pytest.raises(ValueError):
            Orientation(mg, ((0, 1), (0, 2)))
        with pytest.raises(ValueError):
            Orientation(mg, ((0, 1),))

    def test_in_degree(self):
        mg = Multigraph(3, [(0, 1), (1, 2), (0, 1)])
        ori = Orientation(mg, ((0, 1), (2, 1), (1, 0)))
        assert [ori.in_degree(v) for v in range(3)] == [1, 2, 0]
