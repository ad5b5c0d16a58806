"""Brute-force ground truth: exact chromatic index, exact weighted chromatic
number, and exhaustive matching / stable set enumeration.

Nothing here imports the solver modules; pruning uses only the maximum
degree and clique weights, so a bug in the ring bounds cannot leak in.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import combinations

from .budget import DEFAULT_BUDGET, BudgetExceeded, SearchBudget
from .multigraph import Multigraph, check_weights

__all__ = [
    "BudgetExceeded",
    "SearchBudget",
    "brute_chi_prime",
    "brute_chi_weighted",
    "edge_colorable",
    "enumerate_matchings",
    "enumerate_stable_sets",
]


def edge_colorable(h: Multigraph, k: int, budget: SearchBudget = DEFAULT_BUDGET) -> bool:
    """Decide whether ``h`` has a proper edge coloring with ``k`` colors.

    Parallel edges are handled as bundles receiving a ``mu``-subset of the
    palette. Unused colors are interchangeable, so a bundle may only open
    new colors in increasing order.
    """
    if h.m == 0:
        return True
    if k < h.max_degree():
        return False
    meter = budget.meter()
    bundles = [(u, v, len(ids)) for (u, v), ids in h.bundles.items()]
    used: list[int] = [0] * h.n  # bitmask of colors at each vertex
    done = [False] * len(bundles)
    full = (1 << k) - 1

    def pick() -> int:
        best, best_slack = -1, None
        for i, (u, v, mu) in enumerate(bundles):
            if done[i]:
                continue
            free = full & ~(used[u] | used[v])
            slack = bin(free).count("1") - mu
            if best_slack is None or slack < best_slack:
                best, best_slack = i, slack
        return best

    def search(top: int, remaining: int) -> bool:
        meter.tick()
        if remaining == 0:
            return True
        i = pick()
        u, v, mu = bundles[i]
        free = full & ~(used[u] | used[v])
        old_colors = [c for c in range(top) if free >> c & 1]
        fresh = list(range(top, k))
        if len(old_colors) + len(fresh) < mu:
            return False
        done[i] = True
        for n_new in range(0, min(mu, len(fresh)) + 1):
            n_old = mu - n_new
            if n_old > len(old_colors):
                continue
            new_mask = sum(1 << c for c in fresh[:n_new])
            for olds in combinations(old_colors, n_old):
                mask = new_mask | sum(1 << c for c in olds)
                used[u] |= mask
                used[v] |= mask
                ok = search(top + n_new, remaining - 1)
                used[u] &= ~mask
                used[v] &= ~mask
                if ok:
                    done[i] = False
                    return True
        done[i] = False
        return False

    return search(0, len(bundles))


def brute_chi_prime(h: Multigraph, budget: SearchBudget = DEFAULT_BUDGET) -> int:
    """Exact chromatic index by trying ``k = Delta, Delta + 1, ...``.

    Raises :class:`BudgetExceeded` rather than returning a guess.
    """
    k = h.max_degree()
    while not edge_colorable(h, k, budget):
        k += 1
    return k


def _stable_masks(g: Multigraph) -> list[int]:
    nbr = [sum(1 << w for w in g.adjacency[v]) for v in range(g.n)]
    out = [0]
    for v in range(g.n):
        out += [s | 1 << v for s in out if not s & nbr[v]]
    return out


def brute_chi_weighted(
    g: Multigraph, c: Sequence[int], budget: SearchBudget = DEFAULT_BUDGET
) -> int:
    """Least number of stable sets covering each vertex ``v`` at least ``c[v]`` times.

    Depth-first search on residual demands: the lowest vertex with positive
    demand must lie in some chosen set, which can be taken maximal among
    the vertices still in demand. Residual states are memoized.
    """
    c = check_weights(c, g.n)
    meter = budget.meter()
    nbr = [sum(1 << w for w in g.adjacency[v]) for v in range(g.n)]
    stables = _stable_masks(g)
    memo: dict[tuple[int, ...], int] = {}

    def clique_bound(demand: tuple[int, ...]) -> int:
        # heaviest vertex or edge; any clique weight is a valid floor
        best = max(demand)
        for v, w in g.edges:
            best = max(best, demand[v] + demand[w])
        return best

    def solve(demand: tuple[int, ...]) -> int:
        if demand in memo:
            return memo[demand]
        meter.tick()
        support = sum(1 << v for v in range(g.n) if demand[v])
        if not support:
            return 0
        low = (support & -support).bit_length() - 1
        best = sum(demand)  # singletons always work
        floor = clique_bound(demand)
        for s in stables:
            if not s >> low & 1 or s & ~support:
                continue
            extendable = support & ~s
            maximal = True
            for w in range(g.n):
                if extendable >> w & 1 and not s & nbr[w]:
                    maximal = False
                    break
            if not maximal:
                continue
            nxt = tuple(d - 1 if s >> v & 1 else d for v, d in enumerate(demand))
            val = 1 + solve(nxt)
            if val < best:
                best = val
                if best == floor:
                    break
        memo[demand] = best
        return best

    return solve(tuple(c))


def enumerate_matchings(h: Multigraph, maximal: bool = False) -> Iterator[tuple[int, ...]]:
    """All matchings of ``h`` as sorted edge-id tuples, in lexicographic order."""

    def rec(start: int, chosen: list[int], covered: set[int]) -> Iterator[tuple[int, ...]]:
        if not maximal or not _matching_extendable(h, covered):
            yield tuple(chosen)
        for e in range(start, h.m):
            u, v = h.edges[e]
            if u in covered or v in covered:
                continue
            chosen.append(e)
            covered |= {u, v}
            yield from rec(e + 1, chosen, covered)
            covered -= {u, v}
            chosen.pop()

    yield from sorted(rec(0, [], set()))


def _matching_extendable(h: Multigraph, covered: set[int]) -> bool:
    return any(u not in covered and v not in covered for u, v in h.edges)


def enumerate_stable_sets(g: Multigraph, maximal: bool = False) -> Iterator[tuple[int, ...]]:
    """All stable sets of ``g`` as sorted vertex tuples, in lexicographic order."""
    nbr = [sum(1 << w for w in g.adjacency[v]) for v in range(g.n)]
    out = []
    for s in _stable_masks(g):
        if maximal and any(not s >> w & 1 and not s & nbr[w] for w in range(g.n)):
            continue
        out.append(tuple(v for v in range(g.n) if s >> v & 1))
    yield from sorted(out)
