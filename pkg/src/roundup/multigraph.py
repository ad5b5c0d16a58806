"""Loopless multigraphs with dense integer ids.

Vertices are ``0..n-1`` and edges are ``0..m-1``; parallel edges are
distinct edge ids sharing an endpoint pair. Graphs are treated as
immutable: every operation that changes the edge set returns a new graph.
"""

from __future__ import annotations

import io
from collections.abc import Iterable, Sequence
from itertools import combinations
from typing import TextIO


class GraphInputError(ValueError):
    """Raised on malformed graphs, ids out of range, or unparsable files."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Multigraph:
    """A multigraph without loops.

    ``edges[i]`` is the endpoint pair of edge ``i``, stored with the smaller
    vertex first. ``incidence[v]`` lists the edge ids at ``v`` in increasing
    order, so ``degree(v)`` counts parallel edges with multiplicity.
    """

    __slots__ = ("n", "edges", "incidence", "_adj", "_bundles")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphInputError(f"negative vertex count {n}")
        normalized = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            normalized.append((u, v) if u < v else (v, u))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(normalized)
        incidence: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            incidence[u].append(i)
            incidence[v].append(i)
        self.incidence: tuple[tuple[int, ...], ...] = tuple(tuple(x) for x in incidence)
        self._adj: tuple[frozenset[int], ...] | None = None
        self._bundles: dict[tuple[int, int], tuple[int, ...]] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={list(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def same_edges(self, other: Multigraph) -> bool:
        """Equal as labeled multigraphs, ignoring the order of edge ids."""
        return self.n == other.n and sorted(self.edges) == sorted(other.edges)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} out of range for n={self.n}")

    def _check_edge(self, e: int) -> None:
        if not 0 <= e < len(self.edges):
            raise GraphInputError(f"edge {e} out of range for m={len(self.edges)}")

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets of the underlying simple graph."""
        if self._adj is None:
            adj: list[set[int]] = [set() for _ in range(self.n)]
            for u, v in self.edges:
                adj[u].add(v)
                adj[v].add(u)
            self._adj = tuple(frozenset(s) for s in adj)
        return self._adj

    @property
    def bundles(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Map each adjacent pair ``(u, v)``, ``u < v``, to its parallel edge ids."""
        if self._bundles is None:
            b: dict[tuple[int, int], list[int]] = {}
            for i, pair in enumerate(self.edges):
                b.setdefault(pair, []).append(i)
            self._bundles = {k: tuple(v) for k, v in b.items()}
        return self._bundles

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.incidence[v])

    def max_degree(self) -> int:
        return max((len(inc) for inc in self.incidence), default=0)

    def multiplicity(self, e: int) -> int:
        self._check_edge(e)
        return len(self.bundles[self.edges[e]])

    def edges_between(self, u: int, v: int) -> tuple[int, ...]:
        key = (u, v) if u < v else (v, u)
        return self.bundles.get(key, ())

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def is_simple(self) -> bool:
        return len(self.bundles) == len(self.edges)

    def max_multiplicity(self) -> int:
        return max((len(b) for b in self.bundles.values()), default=0)

    def components(self) -> list[list[int]]:
        """Vertex sets of the connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


def degree(g: Multigraph, v: int) -> int:
    return g.degree(v)


def max_degree(g: Multigraph) -> int:
    """Largest degree, counting parallel edges; 0 for edgeless graphs."""
    return g.max_degree()


def multiplicity(g: Multigraph, e: int) -> int:
    return g.multiplicity(e)


def delete_edge(g: Multigraph, e: int) -> Multigraph:
    """Remove edge ``e`` only; its parallel copies stay. Later edge ids shift down by one."""
    g._check_edge(e)
    return Multigraph(g.n, g.edges[:e] + g.edges[e + 1:])


def add_edge(g: Multigraph, u: int, v: int) -> Multigraph:
    """Append an edge ``uv``; it receives id ``g.m``."""
    return Multigraph(g.n, g.edges + ((u, v),))


def underlying_simple(g: Multigraph) -> Multigraph:
    """Keep one edge per adjacent pair, in order of first appearance."""
    return Multigraph(g.n, list(dict.fromkeys(g.edges)))


def induced_subgraph(
    g: Multigraph, vertices: Iterable[int]
) -> tuple[Multigraph, list[int], list[int]]:
    """Subgraph on ``vertices`` keeping every parallel copy between them.

    Returns ``(sub, vertex_map, edge_map)`` where ``vertex_map[i]`` and
    ``edge_map[j]`` give the ids in ``g`` of vertex ``i`` and edge ``j`` of
    ``sub``. New vertex ids follow increasing old ids.
    """
    keep = sorted(set(vertices))
    for v in keep:
        g._check_vertex(v)
    new_id = {v: i for i, v in enumerate(keep)}
    sub_edges, edge_map = [], []
    for i, (u, v) in enumerate(g.edges):
        if u in new_id and v in new_id:
            sub_edges.append((new_id[u], new_id[v]))
            edge_map.append(i)
    return Multigraph(len(keep), sub_edges), keep, edge_map


def replicate_edges(h: Multigraph, c: Sequence[int]) -> tuple[Multigraph, list[int]]:
    """Replace each edge ``e`` by ``c[e]`` parallel copies (``c[e] = 0`` deletes it).

    Returns the new graph and, for each new edge, the id of the edge it copies.
    """
    _check_weights(c, h.m, "edge")
    edges, origin = [], []
    for i, pair in enumerate(h.edges):
        for _ in range(c[i]):
            edges.append(pair)
            origin.append(i)
    return Multigraph(h.n, edges), origin


def replicate_vertices(g: Multigraph, c: Sequence[int]) -> tuple[Multigraph, list[int]]:
    """Blow each vertex ``v`` up into a clique of size ``c[v]``, fully joined
    to the cliques of its neighbors.

    Returns the new graph and, for each new vertex, the vertex it copies.
    """
    if not g.is_simple():
        raise GraphInputError("replicate_vertices expects a simple graph")
    _check_weights(c, g.n, "vertex")
    origin = [v for v in range(g.n) for _ in range(c[v])]
    copies: list[list[int]] = [[] for _ in range(g.n)]
    for i, v in enumerate(origin):
        copies[v].append(i)
    # follow g's edge order so that all-ones weights give back g exactly
    edges = [(i, j) for a, b in g.edges for i in copies[a] for j in copies[b]]
    for group in copies:
        edges.extend(combinations(group, 2))
    return Multigraph(len(origin), edges), origin


def line_graph(h: Multigraph) -> Multigraph:
    """Simple graph on ``E(h)``; edges ``i`` and ``j`` are adjacent when they
    share an end (parallel edges share two). Vertex ``i`` of the result is
    edge ``i`` of ``h``.
    """
    pairs = set()
    for inc in h.incidence:
        for i, j in combinations(inc, 2):
            pairs.add((i, j) if i < j else (j, i))
    return Multigraph(h.m, sorted(pairs))


def _check_weights(c: Sequence[int], size: int, what: str) -> None:
    if len(c) != size:
        raise GraphInputError(f"expected {size} {what} weights, got {len(c)}")
    for i, x in enumerate(c):
        if x < 0:
            raise GraphInputError(f"negative weight {x} at {what} {i}")


def check_weights(c: Sequence[int], size: int, what: str = "vertex") -> list[int]:
    """Validate a nonnegative integer weight vector and return it as a list."""
    c = [int(x) for x in c]
    _check_weights(c, size, what)
    return c


# ---------------------------------------------------------------------------
# isomorphism (small graphs; used by tests and round-trip checks)


def is_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    """Backtracking isomorphism test respecting edge multiplicities.

    Candidates are pruned by degree and neighbor count; intended for graphs
    with a dozen or so vertices.
    """
    if g.n != h.n or g.m != h.m:
        return False
    n = g.n

    def mult_table(x: Multigraph) -> list[dict[int, int]]:
        t: list[dict[int, int]] = [dict() for _ in range(x.n)]
        for (a, b), ids in x.bundles.items():
            t[a][b] = len(ids)
            t[b][a] = len(ids)
        return t

    mg, mh = mult_table(g), mult_table(h)

    def signature(x: Multigraph, t: list[dict[int, int]], v: int):
        return (x.degree(v), len(t[v]), tuple(sorted(t[v].values())))

    sg = [signature(g, mg, v) for v in range(n)]
    sh = [signature(h, mh, v) for v in range(n)]
    if sorted(sg) != sorted(sh):
        return False
    order = sorted(range(n), key=lambda v: (-len(mg[v]), sg[v]))
    # prefer vertices adjacent to already placed ones
    placed_order: list[int] = []
    remaining = set(order)
    while remaining:
        best = max(
            remaining,
            key=lambda v: (sum(1 for u in placed_order if u in mg[v]), len(mg[v]), -v),
        )
        placed_order.append(best)
        remaining.remove(best)

    mapping: dict[int, int] = {}
    used = set()

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        v = placed_order[idx]
        for w in range(n):
            if w in used or sh[w] != sg[v]:
                continue
            ok = True
            for u, k in mg[v].items():
                if u in mapping and mh[w].get(mapping[u], 0) != k:
                    ok = False
                    break
            if ok:
                for u2, img in mapping.items():
                    if mh[w].get(img, 0) and u2 not in mg[v]:
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(idx + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# text formats


def parse_edge_list(text: str | TextIO) -> Multigraph:
    """Parse ``n m`` followed by ``m`` lines ``u v``. Blank lines and ``#``
    comments are skipped; errors carry the 1-based line number."""
    stream = io.StringIO(text) if isinstance(text, str) else text
    header = None
    edges: list[tuple[int, int]] = []
    expected = 0
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphInputError("negative header value", lineno)
            header = (a, b)
            expected = b
            continue
        if len(edges) >= expected:
            raise GraphInputError(f"more than {expected} edge lines", lineno)
        if not (0 <= a < header[0] and 0 <= b < header[0]):
            raise GraphInputError(f"vertex out of range in edge ({a}, {b})", lineno)
        if a == b:
            raise GraphInputError(f"loop at vertex {a}", lineno)
        edges.append((a, b))
    if header is None:
        raise GraphInputError("missing 'n m' header")
    if len(edges) != expected:
        raise GraphInputError(f"header announces {expected} edges, found {len(edges)}")
    return Multigraph(header[0], edges)


def format_edge_list(g: Multigraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_weights(text: str | TextIO, size: int | None = None) -> list[int]:
    """Whitespace-separated nonnegative integers, indexed by vertex (or edge) id."""
    stream = io.StringIO(text) if isinstance(text, str) else text
    values = []
    for lineno, raw in enumerate(stream, start=1):
        for token in raw.split("#", 1)[0].split():
            try:
                x = int(token)
            except ValueError:
                raise GraphInputError(f"expected an integer, got {token!r}", lineno) from None
            if x < 0:
                raise GraphInputError(f"negative weight {x}", lineno)
            values.append(x)
    if size is not None and len(values) != size:
        raise GraphInputError(f"expected {size} weights, found {len(values)}")
    return values


def format_weights(c: Sequence[int]) -> str:
    return "".join(f"{x}\n" for x in c)
