import pytest
from hypothesis import given, settings, strategies as st

from roundup.bounds import chi_weighted_formula, omega_weighted
from roundup.corpus import (
    c5_hanging_diamond,
    diamond,
    diamond_ring,
    icosahedron,
    line_graph_roots,
    small_simple_graphs,
    star,
    tperfect_clawfree_corpus,
    two_diamonds_in_c5,
)
from roundup.multigraph import GraphInputError, Multigraph, is_isomorphic, line_graph
from roundup.oracle import brute_chi_weighted
from roundup.structure import complete_graph, cycle_graph, square_of_circuit
from roundup.vertex_color import (
    DiamondStep,
    RejectedInput,
    color_line_graph_weighted,
    color_tperfect_clawfree,
    parse_vertex_coloring,
    reinsert_small_diamond,
    root_graph,
    validate_tperfect_clawfree_input,
    verify_vertex_coloring,
)

C5 = cycle_graph(5)


def test_line_graph_coloring_examples():
    k13 = star(3)
    col = color_line_graph_weighted(k13, [1, 1, 1])
    assert sorted(len(s) for s in col.stable_sets) == [1, 1, 1]
    col = color_line_graph_weighted(C5, [1] * 5)
    assert sorted(len(s) for s in col.stable_sets) == [1, 2, 2]
    col = color_line_graph_weighted(C5, [2] * 5)
    assert len(col) == 5
    assert verify_vertex_coloring(line_graph(C5), [2] * 5, col)


def test_root_graph_examples():
    assert line_graph(root_graph(C5)).same_edges(C5)
    root = root_graph(complete_graph(3))
    assert line_graph(root) == complete_graph(3)
    assert root_graph(star(3)) is None
    assert root_graph(square_of_circuit(7)) is None


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_root_graph_round_trip(seed):
    (h,) = small_simple_graphs(1, max_edges=8, seed=seed)
    g = line_graph(h)
    root = root_graph(g)
    assert root is not None and line_graph(root) == g


def test_reinsert_diamond_new_singleton():
    g = diamond()
    sets = [frozenset({0, 3}), frozenset({2})]
    out, step = reinsert_small_diamond(g, [1, 1, 1, 1], 1, sets)
    assert len(out) == 3 and step.mode == "new-singleton"
    assert verify_vertex_coloring(g, [1, 1, 1, 1], out)


def test_reinsert_free_set():
    g = diamond()
    sets = [frozenset({0, 3}), frozenset({2}), frozenset()]
    out, step = reinsert_small_diamond(g, [1, 1, 1, 1], 1, sets)
    assert len(out) == 3 and step.mode == "free-set"


def test_reinsert_rejects_zero_weight():
    with pytest.raises(GraphInputError):
        reinsert_small_diamond(diamond(), [1, 0, 1, 1], 1, [])


@pytest.mark.parametrize(
    "g, c",
    [
        (c5_hanging_diamond(), [0, 0, 2, 1, 2, 2, 3, 3, 1, 1]),
        (diamond_ring(3), [1, 0, 1, 0, 1, 2, 1, 3, 2]),
    ],
)
def test_swap_forcing_fixture(g, c):
    col, trace = color_tperfect_clawfree(g, c)
    modes = [s.mode for s in trace.steps if isinstance(s, DiamondStep)]
    assert "kempe-swaps" in modes
    assert verify_vertex_coloring(g, c, col)
    assert len(col) == chi_weighted_formula(g, c) == brute_chi_weighted(g, c)


def test_color_tperfect_examples():
    col, _ = color_tperfect_clawfree(C5, [1] * 5)
    assert len(col) == 3
    col, trace = color_tperfect_clawfree(diamond(), [1] * 4)
    assert len(col) == 3 and any(isinstance(s, DiamondStep) for s in trace.steps)
    with pytest.raises(RejectedInput) as info:
        color_tperfect_clawfree(square_of_circuit(7), [1] * 7)
    assert info.value.witness.kind == "square_of_circuit" and info.value.witness.k == 7


def test_rejects_claw_and_k4():
    with pytest.raises(RejectedInput) as info:
        color_tperfect_clawfree(star(3), [1] * 4)
    assert info.value.witness.kind == "claw"
    with pytest.raises(RejectedInput) as info:
        color_tperfect_clawfree(complete_graph(4), [1] * 4)
    assert info.value.witness.kind == "k4"


def test_non_tperfect_gadget_is_rejected():
    g = two_diamonds_in_c5()
    assert any(w.kind == "odd_hole_neighbors" for w in validate_tperfect_clawfree_input(g))


def test_verify_examples():
    col, _ = color_tperfect_clawfree(diamond(), [1] * 4)
    assert verify_vertex_coloring(diamond(), [1] * 4, col)
    check = verify_vertex_coloring(C5, [1] * 5, [frozenset({0, 1}), frozenset({2, 3, 4})])
    assert not check and check.reason == "set contains an edge"
    check = verify_vertex_coloring(C5, [1] * 5, [frozenset({0, 2}), frozenset({1, 3})])
    assert not check and check.witness == (4,)


def test_validator_examples():
    (w,) = [w for w in validate_tperfect_clawfree_input(square_of_circuit(10))
            if w.kind == "square_of_circuit"]
    assert w.k == 10
    kinds = {w.kind for w in validate_tperfect_clawfree_input(icosahedron())}
    assert "degree" in kinds
    assert validate_tperfect_clawfree_input(square_of_circuit(6)) == []


def test_coloring_text_round_trip():
    col, _ = color_tperfect_clawfree(C5, [2, 1, 1, 1, 1])
    assert parse_vertex_coloring(col.format()) == col.stable_sets


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(tperfect_clawfree_corpus().items())), st.data())
def test_monotone_in_weights(item, data):
    _, g = item
    c = data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    v = data.draw(st.integers(0, g.n - 1))
    bigger = list(c)
    bigger[v] += 1
    small, _ = color_tperfect_clawfree(g, c)
    large, _ = color_tperfect_clawfree(g, bigger)
    assert len(small) <= len(large) <= len(small) + 1
    assert len(large) >= omega_weighted(g, bigger)


@pytest.mark.parametrize("name", sorted(line_graph_roots()))
def test_line_root_paths_agree(name):
    h = line_graph_roots()[name]
    g = line_graph(h)
    c = [(i % 3) + 1 for i in range(g.n)]
    via_root = color_line_graph_weighted(h, c)
    direct, _ = color_tperfect_clawfree(g, c)
    assert len(via_root) == len(direct) == chi_weighted_formula(g, c)


def test_greedy_fallback_is_valid_but_not_optimal():
    from roundup.vertex_color import _greedy_weighted

    g = square_of_circuit(7)
    c = [2, 0, 1, 3, 1, 0, 2]
    col = _greedy_weighted(g, c)
    assert verify_vertex_coloring(g, c, col) and not col.optimal
