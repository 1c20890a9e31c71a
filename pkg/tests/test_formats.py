import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from pow2free.formats import (
    G6_HEADER,
    ParseError,
    encode_edgelist,
    encode_graph6,
    looks_like_edgelist,
    parse_edgelist,
    parse_graph6,
    read_graph6_lines,
    read_graph_text,
    to_dot,
)
from pow2free.graph import complete_graph, graph_from_edge_list


def test_k4_encodes_to_known_string():
    assert encode_graph6(complete_graph(4)) == "C~"


@given(graphs(min_n=0, max_n=30))
@settings(max_examples=1000)
def test_graph6_round_trip(g):
    assert parse_graph6(encode_graph6(g)) == g


@given(graphs(min_n=31, max_n=70))
def test_graph6_round_trip_larger(g):
    assert parse_graph6(encode_graph6(g)) == g


@given(graphs(min_n=1, max_n=40))
def test_graph6_agrees_with_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    ours = encode_graph6(g)
    assert ours == nx.to_graph6_bytes(h, header=False).decode().strip()
    back = nx.from_graph6_bytes(ours.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges()) == list(g.edges)


def test_large_order_uses_long_header():
    g = graph_from_edge_list(100, [(0, 99)])
    s = encode_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g


def test_optional_header_accepted():
    assert parse_graph6(G6_HEADER + "C~") == complete_graph(4)


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("C~~", 2),      # one byte too many for n=4
        ("C", 1),        # data missing
        ("C\x07", 1),    # control character
        ("A`", 1),       # padding bits set
    ],
)
def test_graph6_errors_report_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(text)
    assert info.value.offset == offset


@given(graphs(min_n=0, max_n=20))
def test_edgelist_round_trip(g):
    text = encode_edgelist(g)
    assert text.splitlines()[0] == f"{g.n} {g.m}"
    assert parse_edgelist(text) == g


@pytest.mark.parametrize(
    "text, offset",
    [
        ("3 x\n", 0),
        ("3 2\n0 1\n", 8),
        ("3 1\n0 9\n", 4),
        ("3 2\n0 1\n1 0\n", 8),
        ("3 1\n0 a\n", 4),
    ],
)
def test_edgelist_errors_report_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_edgelist(text)
    assert info.value.offset == offset


def test_auto_detection():
    assert looks_like_edgelist("4 6")
    assert not looks_like_edgelist("C~")
    assert not looks_like_edgelist("4")
    k4 = complete_graph(4)
    assert read_graph_text("\n  C~\n") == k4
    assert read_graph_text(encode_edgelist(k4)) == k4


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("   \n", 0),
        ("\n\nC~x", 4),
        ("\n3 1\n0 5\n", 5),
        ("C~\nC~\n", 3),
    ],
)
def test_read_graph_text_offsets_count_from_input_start(text, offset):
    with pytest.raises(ParseError) as info:
        read_graph_text(text)
    assert info.value.offset == offset


def test_read_graph6_lines_skips_blanks():
    gs = read_graph6_lines(["C~\n", "\n", "A_\n"])
    assert [g.n for g in gs] == [4, 2]


@given(st.lists(st.text(alphabet="ab\"", max_size=3), min_size=3, max_size=3))
def test_dot_output(labels):
    g = graph_from_edge_list(3, [(0, 1), (1, 2)])
    dot = to_dot(g, labels, name="P3")
    assert dot.startswith("graph P3 {")
    assert "0 -- 1;" in dot and "1 -- 2;" in dot
    assert dot.count("label=") == 3
