from fractions import Fraction

import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs, seeded_graph
from socolor.density import (
    SizeGuardError,
    corollary_premise,
    has_four_cycle,
    mad,
    mad_bruteforce,
    rational_str,
    subset_density,
)
from socolor.graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    path,
    petersen,
    random_graph,
)


class TestMad:
    def test_cycles(self):
        for n in range(3, 9):
            assert mad(cycle(n))[0] == 2

    def test_k4(self):
        assert mad(complete(4))[0] == 3

    def test_petersen(self):
        value, witness = mad(petersen())
        assert value == mad_bruteforce(petersen()) == 3
        assert subset_density(petersen(), witness) == 3

    def test_p4(self):
        value, _ = mad(path(4))
        assert value == oracles.mad_oracle_small(path(4)) == Fraction(3, 2)

    def test_k23(self):
        assert mad(complete_bipartite(2, 3))[0] == Fraction(12, 5)
        assert mad_bruteforce(complete_bipartite(2, 3)) == Fraction(12, 5)

    def test_single_edge(self):
        assert mad(complete(2))[0] == 1
        assert mad_bruteforce(complete(2)) == 1

    def test_edgeless_degenerate(self):
        value, witness = mad(Graph(4))
        assert value == 0
        assert len(witness) == 1

    def test_dense_pocket_found(self):
        # K4 hanging off a long path: the witness must zoom into the clique
        pairs = list(complete(4).edges) + [(3, 4), (4, 5), (5, 6), (6, 7)]
        value, witness = mad(Graph(8, pairs))
        assert value == 3
        assert set(witness) == {0, 1, 2, 3}

    def test_witness_density_matches(self):
        for g in (petersen(), complete_bipartite(2, 3), path(4)):
            value, witness = mad(g)
            assert subset_density(g, witness) == value

    @given(graphs(min_n=1, max_n=10))
    @settings(max_examples=80, deadline=None)
    def test_flow_equals_bruteforce(self, g):
        assert mad(g)[0] == mad_bruteforce(g)

    @given(graphs(min_n=2, max_n=9))
    @settings(max_examples=40, deadline=None)
    def test_monotone_under_edge_addition(self, g):
        missing = [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.has_edge(u, v)
        ]
        if not missing:
            return
        bigger = Graph(g.n, list(g.edges) + [missing[0]])
        assert mad(bigger)[0] >= mad(g)[0]

    def test_whole_graph_lower_bound(self):
        for seed in range(10):
            g = seeded_graph(seed, lo=3, hi=9)
            value, _ = mad(g)
            assert value >= Fraction(2 * g.m, g.n)

    def test_regular_graphs(self):
        assert mad(petersen())[0] == 3
        assert mad(complete(5))[0] == 4
        assert mad(cycle(7))[0] == 2

    def test_bruteforce_guard(self):
        with pytest.raises(SizeGuardError, match="20"):
            mad_bruteforce(Graph(21))


class TestRationalStr:
    def test_wire_form(self):
        assert rational_str(Fraction(3, 2)) == "3/2"
        assert rational_str(Fraction(2)) == "2/1"
        assert rational_str(Fraction(20, 7)) == "20/7"


class TestFourCycle:
    def test_c4_family(self):
        assert has_four_cycle(cycle(4))
        assert has_four_cycle(complete_bipartite(2, 3))
        assert has_four_cycle(complete(4))

    def test_free(self):
        assert not has_four_cycle(petersen())
        assert not has_four_cycle(cycle(5))
        assert not has_four_cycle(path(6))


class TestCorollaryPremise:
    def test_c7(self):
        p = corollary_premise(cycle(7))
        assert p["mad"] == 2 and p["girth"] == 7
        assert p["product_lt_4"] is True
        assert p["mad_le_20_7"]

    def test_k4(self):
        p = corollary_premise(complete(4))
        assert p["mad"] == 3 and p["girth"] == 3
        # (3-2)(3-2) = 1 < 4
        assert p["product_lt_4"] is True

    def test_petersen(self):
        p = corollary_premise(petersen())
        assert p["mad"] == 3 and p["girth"] == 5
        # (3-2)(5-2) = 3 < 4, but 3 = 33/11 > 30/11 and 21/7 > 20/7
        assert p["product_lt_4"] is True
        assert not p["mad_le_20_7"]
        assert not p["mad_le_30_11_delta_ge_4"]

    def test_forest_product_not_applicable(self):
        p = corollary_premise(path(5))
        assert p["product_lt_4"] is None
        assert p["girth"] == float("inf")

    def test_exactly_at_20_7(self):
        from socolor.corpus import tight_charge_fixture

        p = corollary_premise(tight_charge_fixture())
        assert p["mad"] == Fraction(20, 7)
        assert p["mad_le_20_7"]

    def test_dense_graph_fails_product(self):
        p = corollary_premise(complete(6))
        assert p["product_lt_4"] is False
