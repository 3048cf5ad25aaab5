from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from helpers import graphs
from me2c.errors import GraphError, GraphFormatError
from me2c.graph import (
    Graph,
    components,
    component_subgraphs,
    find_bridges,
    find_claw,
    is_claw_free,
    is_subcubic,
    list_triangles,
    parse_graph,
)


def test_parse_triangle():
    g = parse_graph("3 3\n0 1\n1 2\n2 0")
    assert g.n == 3
    assert g.m == 3
    assert g.edges == ((0, 1), (1, 2), (0, 2))
    assert g.degrees() == [2, 2, 2]


def test_parse_k4(k4):
    assert k4.m == 6
    assert k4.degrees() == [3, 3, 3, 3]
    assert k4.edge_id(3, 2) == 5


def test_parse_skips_comments_and_blank_lines():
    g = parse_graph("# a path\n\n3 2  # header\n0 1\n\n1 2 # last\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "text, line",
    [
        ("2 1\n0 0\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 1\n0 3\n", 2),
        ("3 1\n0 x\n", 2),
        ("3 1\n0 1 2\n", 2),
        ("3 1\n0 1\n1 2\n", 3),
        ("3 2\n0 1\n", 2),
        ("-1 0\n", 1),
        ("# nothing here\n", 1),
    ],
)
def test_parse_errors_carry_the_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")
    assert info.value.exit_code == 3


def test_constructor_rejects_non_simple_graphs():
    with pytest.raises(GraphError):
        Graph(2, ((0, 0),))
    with pytest.raises(GraphError):
        Graph(2, ((0, 1), (1, 0)))
    with pytest.raises(GraphError):
        Graph(2, ((0, 2),))


def test_text_round_trip_keeps_identities(petersen):
    again = Graph.from_text(petersen.to_text())
    assert again == petersen
    assert again.edges == petersen.edges


def test_from_path(tmp_path, k4):
    path = tmp_path / "k4.g"
    path.write_text(k4.to_text())
    assert Graph.from_path(path) == k4
    with pytest.raises(FileNotFoundError):
        Graph.from_path(tmp_path / "missing.g")


def test_queries(p3):
    assert p3.neighbors(1) == [0, 2]
    assert p3.incident(1) == [0, 1]
    assert p3.other(1, 2) == 1
    assert p3.leaves() == [0, 2]
    assert p3.has_edge(2, 1)
    assert not p3.has_edge(0, 2)
    assert p3.edge_id(0, 2) is None
    assert p3.max_degree() == 2
    assert Graph(0, ()).max_degree() == 0


def test_derived_graphs(p3, k3):
    union = p3.disjoint_union(k3)
    assert union.n == 6
    assert union.edges[2:] == ((3, 4), (4, 5), (3, 5))

    extended = k3.add_isolated_edge()
    assert extended.n == 5
    assert extended.edges[-1] == (3, 4)

    relabeled = p3.relabel([2, 0, 1])
    assert relabeled.edges == ((0, 2), (0, 1))
    with pytest.raises(GraphError):
        p3.relabel([0, 0, 1])

    sub, vids, eids = union.subgraph([3, 4, 5])
    assert sub == Graph(3, ((0, 1), (1, 2), (0, 2)))
    assert vids == [3, 4, 5]
    assert eids == [2, 3, 4]


def test_to_networkx_keeps_edge_ids(k4):
    h = k4.to_networkx()
    assert h.number_of_nodes() == 4
    assert h.edges[2, 3]["id"] == 5


def test_components_of_k4(k4):
    view = components(k4)
    assert view.count == 1
    assert view.leaf_counts == (0,)
    assert view.nontrivial() == [0]


def test_components_of_two_edges(two_edges):
    view = components(two_edges)
    assert view.count == 2
    assert view.is_trivial(0) and view.is_trivial(1)
    assert view.members(1) == [2, 3]
    assert view.edge_counts == (1, 1)
    assert view.leaf_counts == (2, 2)


def test_components_with_isolated_vertex():
    g = Graph(5, ((1, 2), (2, 3), (3, 1)))
    view = components(g)
    assert view.labels == (0, 1, 1, 1, 2)
    assert view.vertex_counts == (1, 3, 1)
    assert [sub.n for sub, _, _ in component_subgraphs(g)] == [1, 3, 1]


@given(graphs(max_n=8, max_m=14))
def test_components_partition_vertices(g):
    view = components(g)
    assert sum(view.vertex_counts) == g.n
    assert sum(view.edge_counts) == g.m
    assert sum(view.leaf_counts) == len(g.leaves())
    assert view.count == nx.number_connected_components(g.to_networkx())


def _bridges_by_deletion(g: Graph):
    base = nx.number_connected_components(g.to_networkx())
    out = set()
    for e in range(g.m):
        h = Graph(g.n, tuple(p for f, p in enumerate(g.edges) if f != e))
        if nx.number_connected_components(h.to_networkx()) > base:
            out.add(e)
    return out


@given(graphs(max_n=10, max_m=30))
def test_bridges_match_deletion_oracle(g):
    assert find_bridges(g) == _bridges_by_deletion(g)


def test_bridges_of_dumbbell(dumbbell):
    assert find_bridges(dumbbell) == {dumbbell.edge_id(6, 13)}


def test_bridges_on_a_long_path():
    n = 5000
    g = Graph(n, tuple((i, i + 1) for i in range(n - 1)))
    assert len(find_bridges(g)) == n - 1


def test_claws(claw, k4):
    assert find_claw(claw) == (0, 1, 2, 3)
    assert not is_claw_free(claw)
    assert is_claw_free(k4)
    assert is_subcubic(k4)
    assert not is_subcubic(Graph(5, tuple((0, i) for i in range(1, 5))))


def test_triangles(k4, petersen):
    assert list_triangles(k4) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert list_triangles(petersen) == []


@given(graphs(max_n=8, max_m=16))
def test_triangles_match_networkx(g):
    assert len(list_triangles(g)) == sum(nx.triangles(g.to_networkx()).values()) // 3


@given(graphs(max_n=10, max_m=20))
def test_bridges_match_networkx(g):
    expected = {g.edge_id(u, v) for u, v in nx.bridges(g.to_networkx())}
    assert find_bridges(g) == expected


@given(graphs(max_n=7, max_m=12))
def test_relabel_is_an_isomorphism(g):
    order = list(reversed(range(g.n)))
    assert nx.is_isomorphic(g.relabel(order).to_networkx(), g.to_networkx())
