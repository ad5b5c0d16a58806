"""Exact lower-bound functionals and the two min-max formulas.

All fractional quantities are :class:`fractions.Fraction`; nothing here
touches floating point.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from .multigraph import Multigraph, check_weights
from .structure import enumerate_odd_rings, maximal_cliques, odd_holes


def ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def ring_bound(num_edges: int, num_vertices: int) -> Fraction:
    return Fraction(2 * num_edges, num_vertices - 1)


def gamma_prime(h: Multigraph) -> Fraction:
    """Largest ``2|E(R)| / (|V(R)| - 1)`` over odd rings ``R``; 0 without rings."""
    return max(
        (ring_bound(len(r.edge_ids), len(r.vertices)) for r in enumerate_odd_rings(h)),
        default=Fraction(0),
    )


def omega_weighted(g: Multigraph, c: Sequence[int]) -> int:
    """Maximum total weight of a clique."""
    c = check_weights(c, g.n)
    return max((sum(c[v] for v in k) for k in maximal_cliques(g.adjacency)), default=0)


def gamma_weighted(g: Multigraph, c: Sequence[int]) -> Fraction:
    """Largest ``2 c(V(C)) / (|V(C)| - 1)`` over odd holes ``C`` (length >= 5)."""
    c = check_weights(c, g.n)
    return max(
        (Fraction(2 * sum(c[v] for v in hole), len(hole) - 1) for hole in odd_holes(g)),
        default=Fraction(0),
    )


def kappa_edge(h: Multigraph) -> int:
    """``max(Delta, ceil(Gamma'))``: a lower bound on the chromatic index,
    tight on multigraphs without an odd subdivided house."""
    return max(h.max_degree(), ceil_fraction(gamma_prime(h)))


def chi_weighted_formula(g: Multigraph, c: Sequence[int]) -> int:
    """``max(omega(G,c), ceil(Gamma(G,c)))``, computed for any input; equals
    the weighted chromatic number on t-perfect claw-free graphs and
    h-perfect line graphs."""
    return max(omega_weighted(g, c), ceil_fraction(gamma_weighted(g, c)))

