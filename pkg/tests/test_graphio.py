import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_connected
from periwiener.errors import (
    EdgeListSyntaxError,
    GraphError,
    MalformedGraph6Error,
    SelfLoopError,
    TooLargeError,
    VertexRangeError,
)
from periwiener.generators import complete, path
from periwiener.graphio import (
    iter_graph6,
    parse_edge_list,
    parse_graph6,
    read_edge_list_document,
    write_edge_list,
    write_graph6,
)
from periwiener.graphs import build_graph


class TestEdgeList:
    def test_p3(self):
        assert parse_edge_list("3\n0 1\n1 2\n") == path(3)

    def test_k3_with_comment(self):
        doc = read_edge_list_document("# K3\n3\n0 1\n0 2\n1 2\n")
        assert doc.comments == ("# K3",)
        assert parse_edge_list("# K3\n3\n0 1\n0 2\n1 2\n") == complete(3)

    def test_vertex_out_of_range_names_line(self):
        with pytest.raises(VertexRangeError, match="line 2"):
            parse_edge_list("3\n0 3\n")

    def test_self_loop_names_line(self):
        with pytest.raises(SelfLoopError, match="line 3"):
            parse_edge_list("3\n0 1\n2 2\n")

    def test_bad_tokens(self):
        with pytest.raises(EdgeListSyntaxError, match="line 2"):
            parse_edge_list("3\n0 x\n")
        with pytest.raises(EdgeListSyntaxError):
            parse_edge_list("")

    def test_whitespace_tolerant(self):
        assert parse_edge_list(b"  3 \n\n  0   1 \n 1  2  \n") == path(3)

    def test_round_trip(self, rng):
        for _ in range(50):
            g = random_connected(rng, rng.randrange(2, 15))
            assert parse_edge_list(write_edge_list(g)) == g

    @given(st.binary(max_size=120))
    @settings(max_examples=300, deadline=None)
    def test_fuzz_never_crashes(self, data):
        try:
            parse_edge_list(data)
        except GraphError:
            pass


def _random_graph(rng, n):
    edges = [
        (i, j) for j in range(1, n) for i in range(j) if rng.random() < 0.4
    ]
    return build_graph(n, edges)


class TestGraph6:
    def test_bw_is_k3(self):
        assert parse_graph6("Bw") == complete(3)

    def test_bg_is_p3(self):
        g = parse_graph6("Bg")
        assert set(g.edges()) == {(0, 1), (1, 2)}

    def test_at_sign_is_k1(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.m == 0

    def test_order_zero_rejected(self):
        with pytest.raises(MalformedGraph6Error):
            parse_graph6("?")

    def test_write_k3(self):
        assert write_graph6(complete(3)) == "Bw"

    def test_write_p3(self):
        assert write_graph6(path(3)) == "Bg"

    def test_header_tolerated(self):
        assert parse_graph6(">>graph6<<Bw") == complete(3)

    def test_round_trip_small(self, rng):
        for _ in range(1000):
            g = _random_graph(rng, rng.randrange(1, 21))
            assert parse_graph6(write_graph6(g)) == g

    def test_round_trip_long_form(self, rng):
        for n in (63, 64, 100, 258):
            g = _random_graph(random.Random(n), n)
            s = write_graph6(g)
            assert s.startswith("~")
            assert parse_graph6(s) == g

    def test_write_too_large(self):
        g = build_graph(259, [(0, 1)])
        with pytest.raises(TooLargeError):
            write_graph6(g)

    def test_matches_networkx(self, rng):
        for _ in range(100):
            g = _random_graph(rng, rng.randrange(1, 25))
            ng = nx.Graph()
            ng.add_nodes_from(range(g.n))
            ng.add_edges_from(g.edges())
            nx_bytes = nx.to_graph6_bytes(ng, header=False).strip()
            assert write_graph6(g).encode() == nx_bytes
            back = nx.from_graph6_bytes(write_graph6(g).encode())
            assert set(back.edges()) == {tuple(e) for e in g.edges()}

    @pytest.mark.parametrize(
        "bad",
        [
            "",            # empty
            "B",           # truncated body
            "Bww",         # excess body
            "B\x1f",       # byte below 63
            "BC",          # nonzero padding bits for n=3
            "~?",          # truncated long form
            "~~????",      # beyond-supported long-long form
            "~??B?",       # non-canonical long form (n = 2)
        ],
    )
    def test_malformed(self, bad):
        with pytest.raises(MalformedGraph6Error):
            parse_graph6(bad)

    def test_multi_record(self):
        graphs = list(iter_graph6("Bw\nBg\n\nA_\n"))
        assert [g.n for g in graphs] == [3, 3, 2]
        assert graphs[0] == complete(3)

    @given(st.binary(max_size=60))
    @settings(max_examples=400, deadline=None)
    def test_fuzz_never_crashes(self, data):
        try:
            parse_graph6(data)
        except GraphError:
            pass

    @given(st.text(max_size=60))
    @settings(max_examples=200, deadline=None)
    def test_fuzz_text_never_crashes(self, data):
        try:
            list(iter_graph6(data))
        except GraphError:
            pass
