"""Seeded instance generators shared by the test suite and the experiment scripts."""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, product

from .multigraph import Multigraph, line_graph
from .structure import complete_graph, cycle_graph, find_odd_c5p, square_of_circuit


@dataclass(frozen=True)
class MultigraphCorpusConfig:
    count: int = 500
    max_vertices: int = 7
    max_multiplicity: int = 3
    max_edges: int = 10
    seed: int = 20240601


def random_multigraph(rng: random.Random, cfg: MultigraphCorpusConfig) -> Multigraph:
    n = rng.randint(2, cfg.max_vertices)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    target = rng.randint(min(n - 1, cfg.max_edges), cfg.max_edges)
    edges: list[tuple[int, int]] = []
    for pair in pairs:
        if len(edges) >= target:
            break
        mult = rng.randint(1, cfg.max_multiplicity)
        mult = min(mult, target - len(edges))
        edges.extend([pair] * mult)
    rng.shuffle(edges)
    return Multigraph(n, edges)


def odd_c5p_free_corpus(cfg: MultigraphCorpusConfig = MultigraphCorpusConfig()) -> list[Multigraph]:
    """``cfg.count`` random multigraphs, each verified free of odd subdivided houses."""
    rng = random.Random(cfg.seed)
    out = []
    while len(out) < cfg.count:
        h = random_multigraph(rng, cfg)
        if find_odd_c5p(h) is None:
            out.append(h)
    return out


def random_simple_graph(rng: random.Random, n: int, m: int) -> Multigraph:
    pairs = list(combinations(range(n), 2))
    return Multigraph(n, sorted(rng.sample(pairs, min(m, len(pairs)))))


def without_isolated(g: Multigraph) -> Multigraph:
    used = sorted({x for e in g.edges for x in e})
    new = {v: i for i, v in enumerate(used)}
    return Multigraph(len(used), [(new[u], new[v]) for u, v in g.edges])


def small_simple_graphs(count: int, max_edges: int = 8, seed: int = 7) -> list[Multigraph]:
    """Random simple graphs with 1..``max_edges`` edges and no isolated vertices."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_edges + 1)
        m = rng.randint(1, max_edges)
        g = without_isolated(random_simple_graph(rng, n, m))
        if g.m:
            out.append(g)
    return out


# ---------------------------------------------------------------------------
# t-perfect claw-free fixtures


def diamond() -> Multigraph:
    """Centrals 1, 2; tips 0, 3."""
    return Multigraph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def paw() -> Multigraph:
    return Multigraph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def prism() -> Multigraph:
    return Multigraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def bull() -> Multigraph:
    return Multigraph(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)])


def star(k: int) -> Multigraph:
    return Multigraph(k + 1, [(0, i) for i in range(1, k + 1)])


def path_graph(n: int) -> Multigraph:
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def line_graph_roots() -> dict[str, Multigraph]:
    """Ten small simple roots with maximum degree 3 and no odd subdivided house,
    so their line graphs are claw-free and K4-free."""
    return {
        "C5": cycle_graph(5),
        "C7": cycle_graph(7),
        "K4": complete_graph(4),
        "K1,3": star(3),
        "paw": paw(),
        "bull": bull(),
        "P5": path_graph(5),
        "C4+pendant": Multigraph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]),
        "K4-e+pendant": Multigraph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]),
        "C5+pendants": Multigraph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (2, 6)]),
    }


def diamond_in_c5() -> Multigraph:
    """A 5-circuit whose edge 0-1 is replaced by a diamond with tips 0 and 1
    and centrals 5, 6 (both small)."""
    return Multigraph(7, [(1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (0, 6), (1, 5), (1, 6), (5, 6)])


def c5_hanging_diamond() -> Multigraph:
    """A 5-circuit with a triangle on edge 0-1 (apex 5), a pendant edge 5-6,
    and a diamond with tips 6, 9 and small centrals 7, 8."""
    return Multigraph(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (1, 5), (5, 6),
         (6, 7), (6, 8), (7, 8), (7, 9), (8, 9)],
    )


def diamond_ring(k: int = 3) -> Multigraph:
    """``k`` diamonds glued tip to tip into a ring; every central vertex is small."""
    edges = []
    for i in range(k):
        tip, a, b, nxt = 3 * i, 3 * i + 1, 3 * i + 2, (3 * i + 3) % (3 * k)
        edges += [(tip, a), (tip, b), (a, b), (a, nxt), (b, nxt)]
    return Multigraph(3 * k, edges)


def two_diamonds_in_c5() -> Multigraph:
    """Not t-perfect: replacing two edges of a 5-circuit by diamonds leaves a
    7-hole 7-2-1-6-0-4-3 on which vertex 8 has three neighbors."""
    return Multigraph(
        9,
        [(1, 2), (3, 4), (0, 4),
         (0, 5), (0, 6), (1, 5), (1, 6), (5, 6),
         (2, 7), (2, 8), (3, 7), (3, 8), (7, 8)],
    )


def tperfect_clawfree_corpus() -> dict[str, Multigraph]:
    graphs = {"C5": cycle_graph(5), "C6^2": square_of_circuit(6), "diamond": diamond()}
    for name, h in line_graph_roots().items():
        graphs[f"L({name})"] = line_graph(h)
    graphs["diamond-in-C5"] = diamond_in_c5()
    graphs["C5-hanging-diamond"] = c5_hanging_diamond()
    graphs["diamond-ring"] = diamond_ring(3)
    return graphs


def weight_vectors(n: int, cap: int = 200, seed: int = 11, values=(0, 1, 2, 3)) -> Iterator[list[int]]:
    """All vectors in ``values^n`` when there are at most ``cap``, else ``cap`` seeded samples."""
    total = len(values) ** n
    if total <= cap:
        for vec in product(values, repeat=n):
            yield list(vec)
        return
    rng = random.Random(seed + n)
    for _ in range(cap):
        yield [rng.choice(values) for _ in range(n)]


def icosahedron() -> Multigraph:
    """5-regular, claw-free, triangle-rich, K4-free."""
    edges = set()
    top, bottom = 0, 11
    upper = [1, 2, 3, 4, 5]
    lower = [6, 7, 8, 9, 10]
    for i in range(5):
        edges.add((top, upper[i]))
        edges.add((lower[i], bottom))
        edges.add(tuple(sorted((upper[i], upper[(i + 1) % 5]))))
        edges.add(tuple(sorted((lower[i], lower[(i + 1) % 5]))))
        edges.add((upper[i], lower[i]))
        edges.add((upper[i], lower[(i + 1) % 5]))
    return Multigraph(12, sorted(edges))
