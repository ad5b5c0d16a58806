from itertools import permutations

import pytest
from hypothesis import assume, given, settings, strategies as st

from roundup.bounds import kappa_edge
from roundup.edge_color import (
    Colored,
    ColoringError,
    DegreeCertificate,
    EdgeColoring,
    NewColorNeeded,
    OddC5PlusFound,
    OddRingCertificate,
    color_edges,
    find_ab_pair,
    format_edge_coloring,
    insert_edge,
    is_r_matching,
    kempe_swap,
    parse_edge_coloring,
    verify_edge_coloring,
)
from roundup.multigraph import Multigraph
from roundup.oracle import brute_chi_prime
from roundup.structure import (
    c5_plus,
    complete_graph,
    cycle_graph,
    enumerate_odd_rings,
    find_odd_c5p,
    h_m,
    petersen,
    verify_odd_c5p,
)

from conftest import multigraphs

C5 = cycle_graph(5)


def test_kempe_swap_path():
    path = Multigraph(3, [(0, 1), (1, 2)])
    col = EdgeColoring.from_colors(path, [0, 1])
    out = kempe_swap(col, 0, 1, {0, 1})
    assert out.color_of == [1, 0] and col.color_of == [0, 1]


def test_kempe_swap_isolated_edge():
    g = Multigraph(4, [(0, 1), (2, 3)])
    col = EdgeColoring.from_colors(g, [0, 0], k=2)
    out = kempe_swap(col, 0, 1, {1})
    assert out.color_of == [0, 1]


def test_kempe_swap_even_cycle():
    c4 = cycle_graph(4)
    col = EdgeColoring.from_colors(c4, [0, 1, 0, 1])
    out = kempe_swap(col, 0, 1, range(4))
    assert verify_edge_coloring(c4, out)
    assert [out.color_of[e] for e in range(4)] == [1, 0, 1, 0]


def test_kempe_swap_rejects_partial_component():
    path = Multigraph(3, [(0, 1), (1, 2)])
    col = EdgeColoring.from_colors(path, [0, 1])
    with pytest.raises(ColoringError):
        kempe_swap(col, 0, 1, {0})


def test_find_ab_pair_examples():
    # e joins the two ends of a 2-colored path 0-1-2
    g = Multigraph(3, [(0, 1), (1, 2), (0, 2)])
    col = EdgeColoring.from_colors(g, [0, 1, None])
    assert find_ab_pair(col, 0, 2) == (0, 1)
    # every class misses both ends
    g = Multigraph(4, [(0, 1), (2, 3)])
    col = EdgeColoring.from_colors(g, [0, None], k=2)
    assert find_ab_pair(col, 2, 3) is None
    # star: every class covers the center, none covers the new leaf
    star = Multigraph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    col = EdgeColoring.from_colors(star, [0, 1, 2, None])
    assert find_ab_pair(col, 0, 4) is None


def test_insert_closing_c5_edge():
    col = EdgeColoring.from_colors(C5, [0, 1, 0, 1, None])
    out = insert_edge(col, 4)
    assert isinstance(out, NewColorNeeded)
    cert = out.certificate
    assert isinstance(cert, OddRingCertificate)
    assert sorted(cert.ring.vertices) == [0, 1, 2, 3, 4]
    assert len(cert.ring.edge_ids) == 5 == cert.k * cert.ring.r + 1
    assert cert.identity_holds


def test_insert_disjoint_edge_reuses_class():
    g = Multigraph(6, [(0, 1), (2, 3), (4, 5)])
    col = EdgeColoring.from_colors(g, [0, 0, None])
    out = insert_edge(col, 2)
    assert isinstance(out, Colored) and out.color == 0
    assert col.color_of == [0, 0, 0]


def test_insert_finds_chord():
    h = c5_plus()
    e = h.edges.index((0, 4))
    colors = [None] * h.m
    for i, pair in enumerate([(0, 1), (1, 2), (2, 3), (3, 4)]):
        colors[h.edges.index(pair)] = i % 2
    colors[h.edges.index((1, 4))] = 2
    col = EdgeColoring.from_colors(h, colors)
    out = insert_edge(col, e)
    assert isinstance(out, OddC5PlusFound)
    assert verify_odd_c5p(h, out.certificate)


def test_insert_degree_certificate():
    star = Multigraph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    col = EdgeColoring.from_colors(star, [0, 1, 2, None])
    out = insert_edge(col, 3)
    assert isinstance(out, NewColorNeeded)
    assert isinstance(out.certificate, DegreeCertificate)
    assert out.certificate.degree == 4 > out.certificate.k


def test_insert_leaves_coloring_valid_after_swaps():
    # 0-1-2 colored 0,1 and 3-4 colored 1; edge 2-3 needs a swap
    g = Multigraph(5, [(0, 1), (1, 2), (3, 4), (2, 3), (0, 2)])
    col = EdgeColoring.from_colors(g, [0, 1, 0, None, None])
    out = insert_edge(col, 3)
    assert isinstance(out, Colored)
    assert verify_edge_coloring(g, col, complete=False)


def test_color_edges_examples():
    assert color_edges(C5).palette == 3
    assert color_edges(h_m(3)).palette == 8
    star = Multigraph(5, [(0, i) for i in range(1, 5)])
    assert color_edges(star).palette == 4


def test_verify_examples():
    res = color_edges(h_m(2))
    assert verify_edge_coloring(h_m(2), res.coloring)
    bad = EdgeColoring(C5, 2)
    bad.color_of = [0, 0, 1, 0, 1]
    bad.at = [dict() for _ in range(5)]
    check = verify_edge_coloring(C5, bad)
    assert not check and check.witness == (0, 1)
    partial = EdgeColoring.from_colors(C5, [0, 1, 0, 1, None])
    check = verify_edge_coloring(C5, partial)
    assert not check and check.witness == (4,)


def test_is_r_matching_examples():
    (ring,) = enumerate_odd_rings(C5)
    col = EdgeColoring.from_colors(C5, [0, 1, 0, 1, 2])
    assert is_r_matching(col, 0, ring)
    assert not is_r_matching(col, 2, ring)
    k3 = complete_graph(3)
    (tri,) = enumerate_odd_rings(k3)
    empty = EdgeColoring.from_colors(k3, [1, 2, 3], k=4)
    assert not is_r_matching(empty, 0, tri)


def test_petersen_is_flagged():
    res = color_edges(petersen())
    assert res.palette == 4 and not res.optimal
    assert any(not isinstance(c, (OddRingCertificate, DegreeCertificate)) for c in res.certificates)


def test_coloring_text_round_trip():
    h = h_m(2)
    col = color_edges(h).coloring
    assert parse_edge_coloring(h, format_edge_coloring(col)) == col


def test_determinism():
    h = h_m(3)
    assert color_edges(h).coloring == color_edges(h).coloring


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_n=5, max_edges=5))
def test_every_insertion_order_is_optimal(h):
    assume(find_odd_c5p(h) is None)
    target = brute_chi_prime(h)
    for order in permutations(range(h.m)):
        res = color_edges(h, order, debug=True)
        assert res.palette == target and res.optimal


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=7, max_edges=12))
def test_palette_never_exceeds_two_delta_minus_one(h):
    res = color_edges(h, debug=True)
    assert verify_edge_coloring(h, res.coloring)
    assert res.palette <= max(0, 2 * h.max_degree() - 1)
    assert res.palette >= kappa_edge(h)
    for cert in res.certificates:
        if isinstance(cert, OddRingCertificate):
            assert cert.identity_holds


@settings(max_examples=100, deadline=None)
@given(multigraphs(max_n=6, max_edges=10), st.randoms(use_true_random=False))
def test_random_kempe_swaps_stay_valid(h, rnd):
    col = color_edges(h).coloring
    for _ in range(10):
        if col.k < 2 or h.m == 0:
            break
        a, b = rnd.sample(range(col.k), 2)
        e = rnd.randrange(h.m)
        if col.color_of[e] not in (a, b):
            continue
        comp = col.component(a, b, h.edges[e][0])
        col = kempe_swap(col, a, b, comp)
        assert verify_edge_coloring(h, col)
