import pytest
from hypothesis import given, settings

from conftest import graphs
from socolor.graphio import (
    FormatError,
    format_coloring,
    format_edge_list,
    format_graph6,
    parse_coloring,
    parse_edge_list,
    parse_graph6,
)
from socolor.graphs import Graph, complete, cycle, petersen, random_graph


class TestEdgeList:
    def test_round_trip_named(self):
        for g in (petersen(), cycle(5), complete(4), Graph(3)):
            assert parse_edge_list(format_edge_list(g)) == g

    @given(graphs())
    @settings(max_examples=60)
    def test_round_trip(self, g):
        assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_and_blanks(self):
        text = "# a triangle\n3 3\n\n0 1  # first\n1 2\n2 0\n"
        assert parse_edge_list(text) == complete(3)

    def test_bad_header(self):
        with pytest.raises(FormatError, match="line 1"):
            parse_edge_list("3\n")

    def test_bad_edge_line(self):
        with pytest.raises(FormatError, match="line 3"):
            parse_edge_list("3 1\n# c\n0 x\n")

    def test_wrong_edge_count(self):
        with pytest.raises(FormatError, match="promises 2"):
            parse_edge_list("3 2\n0 1\n")

    def test_out_of_range(self):
        with pytest.raises(FormatError, match="line 2"):
            parse_edge_list("2 1\n0 5\n")

    def test_loop(self):
        with pytest.raises(FormatError, match="loop"):
            parse_edge_list("2 1\n1 1\n")


class TestGraph6:
    def test_known_small_encodings(self):
        # n is chr(n+63); K4's six upper-triangle bits are all ones
        assert format_graph6(complete(4)) == "C~"
        assert format_graph6(Graph(1)) == "@"
        assert parse_graph6("C~") == complete(4)

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<C~") == complete(4)

    @given(graphs())
    @settings(max_examples=80)
    def test_round_trip(self, g):
        assert parse_graph6(format_graph6(g)) == g

    def test_long_form_size(self):
        g = random_graph(70, 0.05, 9)
        encoded = format_graph6(g)
        assert encoded.startswith(chr(126))
        assert parse_graph6(encoded) == g

    def test_truncated_body(self):
        with pytest.raises(FormatError, match="too short"):
            parse_graph6("C")

    def test_invalid_character(self):
        with pytest.raises(FormatError):
            parse_graph6("C" + chr(10) + chr(12))


class TestColoringFiles:
    def test_round_trip(self):
        mapping = {0: 2, 1: 1, 2: 3}
        assert parse_coloring(format_coloring(mapping)) == mapping

    def test_duplicate_vertex(self):
        with pytest.raises(FormatError, match="twice"):
            parse_coloring("0 1\n0 2\n")

    def test_colors_one_based(self):
        with pytest.raises(FormatError, match="1-based"):
            parse_coloring("0 0\n")

    def test_malformed_line(self):
        with pytest.raises(FormatError, match="line 2"):
            parse_coloring("0 1\n1\n")
