from fractions import Fraction

from hypothesis import given, settings

from roundup.bounds import (
    chi_weighted_formula,
    format_rational,
    gamma_prime,
    gamma_weighted,
    kappa_edge,
    omega_weighted,
    parse_rational,
)
from roundup.multigraph import Multigraph
from roundup.oracle import brute_chi_prime
from roundup.structure import complete_graph, cycle_graph, h_m
from roundup.corpus import diamond

from conftest import multigraphs


def test_gamma_prime_examples():
    assert gamma_prime(complete_graph(3)) == 3
    assert gamma_prime(cycle_graph(5)) == Fraction(5, 2)
    assert gamma_prime(h_m(3)) == Fraction(15, 2)


def test_omega_examples():
    assert omega_weighted(complete_graph(3), [1, 2, 3]) == 6
    assert omega_weighted(Multigraph(1), [5]) == 5
    assert omega_weighted(cycle_graph(5), [1] * 5) == 2


def test_gamma_weighted_examples():
    assert gamma_weighted(cycle_graph(5), [1] * 5) == Fraction(5, 2)
    assert gamma_weighted(diamond(), [3, 1, 4, 1]) == 0
    assert gamma_weighted(cycle_graph(5), [2, 1, 1, 1, 1]) == 3


def test_kappa_examples():
    assert kappa_edge(h_m(3)) == 8
    assert kappa_edge(cycle_graph(5)) == 3
    assert kappa_edge(Multigraph(3)) == 0


def test_formula_examples():
    assert chi_weighted_formula(cycle_graph(5), [1] * 5) == 3
    assert chi_weighted_formula(complete_graph(3), [2, 2, 2]) == 6
    assert chi_weighted_formula(diamond(), [1] * 4) == 3


def test_rational_text():
    assert format_rational(Fraction(15, 2)) == "15/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational("15/2") == Fraction(15, 2)


@settings(max_examples=80, deadline=None)
@given(multigraphs(max_n=6, max_edges=8))
def test_kappa_is_a_lower_bound(h):
    assert kappa_edge(h) <= brute_chi_prime(h)


def test_gamma_prime_scales_under_uniform_replication():
    from roundup.multigraph import replicate_edges

    for h in (cycle_graph(5), complete_graph(3), cycle_graph(7)):
        for m in (1, 2, 3):
            blown, _ = replicate_edges(h, [m] * h.m)
            assert gamma_prime(blown) == m * gamma_prime(h)
