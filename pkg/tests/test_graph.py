from math import comb

import pytest
from hypothesis import given

from conftest import graphs
from nzcgraph import (InvalidEdge, SelfLoopRejected, SpaceParams, build_explicit, build_graph,
                      complement, degrees, edge_count)
from nzcgraph.graph import (complete_graph, from_json, parse_edgelist, path_graph, to_dot,
                            to_edgelist, to_json)

K3 = complete_graph(3)
P3 = path_graph(3)


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g == P3
    assert edge_count(g) == 2


def test_build_dedups_reversed_pairs():
    g = build_graph(3, [(0, 1), (1, 0)])
    assert g.edges == ((0, 1),)
    assert g.vertex_count == 3


def test_single_vertex():
    g = build_graph(1, [])
    assert g.vertex_count == 1 and g.edges == ()
    assert list(degrees(g)) == [0]


def test_out_of_range_edge():
    with pytest.raises(InvalidEdge):
        build_graph(2, [(0, 2)])
    with pytest.raises(InvalidEdge):
        build_graph(2, [(-1, 0)])


def test_self_loop():
    with pytest.raises(SelfLoopRejected):
        build_graph(2, [(1, 1)])


def test_degrees_small():
    assert list(degrees(P3)) == [1, 2, 1]
    assert list(degrees(K3)) == [2, 2, 2]


def test_degrees_gamma_2_3():
    g = build_explicit(SpaceParams(2, 3))
    assert sorted(degrees(g)) == [3, 3, 3, 5, 5, 5, 6]


def test_edge_counts():
    assert edge_count(K3) == 3
    assert edge_count(P3) == 2
    assert edge_count(build_explicit(SpaceParams(2, 3))) == 15


def test_complement_small():
    assert complement(K3) == build_graph(3, [])
    assert complement(P3) == build_graph(3, [(0, 2)])


def test_complement_gamma_2_3():
    c = complement(build_explicit(SpaceParams(2, 3)))
    assert c.vertex_count == 7
    assert edge_count(c) == 6
    assert sorted(degrees(c)) == [0, 1, 1, 1, 3, 3, 3]


def test_labels_do_not_affect_equality():
    a = build_graph(2, [(0, 1)], labels=["x", "y"])
    b = build_graph(2, [(0, 1)])
    assert a == b


@given(graphs())
def test_handshake(g):
    assert sum(degrees(g)) == 2 * edge_count(g)
    assert len(degrees(g)) == g.vertex_count


@given(graphs())
def test_complement_involution_and_partition(g):
    c = complement(g)
    assert complement(c) == g
    assert edge_count(g) + edge_count(c) == comb(g.vertex_count, 2)


@given(graphs())
def test_edges_canonical(g):
    assert all(u < v for u, v in g.edges)
    assert list(g.edges) == sorted(set(g.edges))


def test_edgelist_format():
    g = build_explicit(SpaceParams(2, 2))
    assert to_edgelist(g) == "0 2\n1 2\n"


@given(graphs())
def test_edgelist_round_trip(g):
    text = to_edgelist(g)
    again = parse_edgelist(text, vertex_count=g.vertex_count)
    assert again == g
    assert to_edgelist(again) == text


@given(graphs())
def test_json_round_trip(g):
    assert from_json(to_json(g)) == g


def test_parse_edgelist_comments_and_errors():
    g = parse_edgelist("# header\n0 1\n\n1 2  # trailing\n")
    assert g == P3
    with pytest.raises(InvalidEdge):
        parse_edgelist("0 1 2\n")
    with pytest.raises(InvalidEdge):
        parse_edgelist("a b\n")


def test_dot_output():
    g = build_explicit(SpaceParams(2, 2))
    assert to_dot(g) == (
        'graph G {\n'
        '  0 [label="1,0"];\n'
        '  1 [label="0,1"];\n'
        '  2 [label="1,1"];\n'
        '  0 -- 2;\n'
        '  1 -- 2;\n'
        '}\n'
    )
    assert "\r" not in to_dot(g)
