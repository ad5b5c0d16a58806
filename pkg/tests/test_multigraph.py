import pytest
from hypothesis import given, strategies as st

from roundup.multigraph import (
    GraphInputError,
    Multigraph,
    degree,
    delete_edge,
    format_edge_list,
    format_weights,
    induced_subgraph,
    is_isomorphic,
    line_graph,
    max_degree,
    multiplicity,
    parse_edge_list,
    parse_weights,
    replicate_edges,
    replicate_vertices,
    underlying_simple,
)
from roundup.structure import complete_graph, cycle_graph, h_m

from conftest import multigraphs, relabel, simple_graphs

K3 = complete_graph(3)
DOUBLED_K3 = Multigraph(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)])


def test_degree_examples():
    assert degree(K3, 0) == 2
    assert degree(DOUBLED_K3, 1) == 4
    assert degree(Multigraph(1), 0) == 0


def test_max_degree_examples():
    assert max_degree(h_m(3)) == 7
    assert max_degree(cycle_graph(5)) == 2
    assert max_degree(Multigraph(4)) == 0


def test_multiplicity_examples():
    assert multiplicity(K3, 0) == 1
    h3 = h_m(3)
    cycle_edge = next(e for e, (u, v) in enumerate(h3.edges) if 5 not in (u, v))
    assert multiplicity(h3, cycle_edge) == 3
    assert multiplicity(Multigraph(2, [(0, 1), (0, 1)]), 1) == 2


def test_delete_edge_examples():
    p = delete_edge(K3, 2)
    assert p.n == 3 and p.m == 2 and max_degree(p) == 2
    single = delete_edge(Multigraph(2, [(0, 1), (0, 1)]), 0)
    assert single.edges == ((0, 1),)
    empty = delete_edge(Multigraph(2, [(0, 1)]), 0)
    assert empty.n == 2 and empty.m == 0


def test_underlying_simple_examples():
    assert is_isomorphic(underlying_simple(DOUBLED_K3), K3)
    assert underlying_simple(K3) == K3
    frame = underlying_simple(h_m(3))
    assert frame.m == 7 and frame.n == 6
    assert sorted(frame.neighbors(5)) == [0, 2]


def test_induced_subgraph_examples():
    empty, _, _ = induced_subgraph(K3, [])
    assert empty.n == 0
    k3, _, _ = induced_subgraph(complete_graph(4), [0, 1, 2])
    assert k3 == K3
    double, _, emap = induced_subgraph(DOUBLED_K3, [0, 1])
    assert double.edges == ((0, 1), (0, 1)) and sorted(emap) == [0, 1]


def test_replicate_edges_examples():
    c5 = cycle_graph(5)
    assert replicate_edges(c5, [1] * 5)[0] == c5
    triple, origin = replicate_edges(Multigraph(2, [(0, 1)]), [3])
    assert triple.m == 3 and origin == [0, 0, 0]
    doubled, _ = replicate_edges(c5, [2] * 5)
    assert is_isomorphic(doubled, Multigraph(5, [e for e in h_m(2).edges if 5 not in e]))


def test_replicate_vertices_examples():
    c5 = cycle_graph(5)
    six, origin = replicate_vertices(c5, [2, 1, 1, 1, 1])
    assert six.n == 6 and six.m == 8 and origin.count(0) == 2
    assert replicate_vertices(c5, [1] * 5)[0] == c5
    assert replicate_vertices(Multigraph(1), [3])[0] == K3


def test_line_graph_examples():
    assert line_graph(Multigraph(3, [(0, 1), (1, 2)])) == Multigraph(2, [(0, 1)])
    assert line_graph(Multigraph(4, [(0, 1), (0, 2), (0, 3)])) == K3
    assert is_isomorphic(line_graph(cycle_graph(5)), cycle_graph(5))


def test_rejects_loops_and_bad_ids():
    with pytest.raises(GraphInputError):
        Multigraph(2, [(1, 1)])
    with pytest.raises(GraphInputError):
        Multigraph(2, [(0, 2)])


def test_parse_reports_line_number():
    with pytest.raises(GraphInputError) as info:
        parse_edge_list("3 2\n0 1\n1 x\n")
    assert info.value.line == 3


def test_weights_round_trip():
    assert parse_weights(format_weights([0, 3, 1]), 3) == [0, 3, 1]
    with pytest.raises(GraphInputError):
        parse_weights("1 -2", 2)


@given(multigraphs())
def test_handshake(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


@given(multigraphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


@given(multigraphs(), st.data())
def test_isomorphism_under_relabeling(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    assert is_isomorphic(g, relabel(g, perm))


@given(multigraphs(max_n=5, max_edges=6), st.data())
def test_line_graph_commutes_with_replication(h, data):
    c = data.draw(st.lists(st.integers(1, 2), min_size=h.m, max_size=h.m))
    blown, _ = replicate_edges(h, c)
    assert is_isomorphic(line_graph(blown), replicate_vertices(line_graph(h), c)[0])


@given(simple_graphs())
def test_line_graph_degree_formula(h):
    lg = line_graph(h)
    for e, (u, v) in enumerate(h.edges):
        assert lg.degree(e) == h.degree(u) + h.degree(v) - 2
