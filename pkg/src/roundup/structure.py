"""Detectors and generators for claws, diamonds, odd rings, odd holes,
odd subdivisions of the house graph, and squares of circuits."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations

from .budget import DEFAULT_BUDGET, SearchBudget
from .multigraph import GraphInputError, Multigraph

Adjacency = Sequence[frozenset[int]]


@dataclass(frozen=True)
class Diamond:
    """Induced K4 minus an edge. ``centrals`` are the two degree-3 vertices
    inside the diamond, ``tips`` the two non-adjacent ones."""

    centrals: tuple[int, int]
    tips: tuple[int, int]
    small_centrals: tuple[int, ...] = ()

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (*self.centrals, *self.tips)

    @property
    def is_small(self) -> bool:
        return bool(self.small_centrals)

    @property
    def triangles(self) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
        a, b = self.centrals
        return (a, b, self.tips[0]), (a, b, self.tips[1])


@dataclass(frozen=True)
class OddRing:
    """Induced subgraph whose underlying simple graph is an odd circuit.

    ``vertices`` is in cyclic order; ``edge_ids`` holds every edge of the
    host multigraph between consecutive ring vertices.
    """

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def r(self) -> int:
        return (len(self.vertices) - 1) // 2

    def format(self) -> str:
        return (
            "ring: " + " ".join(map(str, self.vertices))
            + " ; edges: " + " ".join(map(str, self.edge_ids))
        )


@dataclass(frozen=True)
class OddC5PlusCertificate:
    """An odd circuit plus an odd ear whose interior avoids the circuit.

    Vertex sequences are paired with the edge ids joining consecutive
    vertices; ``circuit`` is cyclic, so ``circuit_edges[-1]`` closes it.
    """

    circuit: tuple[int, ...]
    circuit_edges: tuple[int, ...]
    ear: tuple[int, ...]
    ear_edges: tuple[int, ...]

    def format(self) -> str:
        return (
            "circuit: " + " ".join(map(str, self.circuit))
            + " ; ear: " + " ".join(map(str, self.ear))
        )


# ---------------------------------------------------------------------------
# small induced patterns


def _require_simple(g: Multigraph) -> None:
    if not g.is_simple():
        raise GraphInputError("expected a simple graph")


def find_claw(g: Multigraph) -> tuple[int, int, int, int] | None:
    """Return ``(center, a, b, c)`` with ``a, b, c`` pairwise non-adjacent
    neighbors of ``center``, or ``None`` when ``g`` is claw-free."""
    _require_simple(g)
    adj = g.adjacency
    for v in range(g.n):
        for a, b, c in combinations(sorted(adj[v]), 3):
            if b not in adj[a] and c not in adj[a] and c not in adj[b]:
                return (v, a, b, c)
    return None


def find_k4(g: Multigraph) -> tuple[int, int, int, int] | None:
    _require_simple(g)
    adj = g.adjacency
    for a in range(g.n):
        higher = sorted(x for x in adj[a] if x > a)
        for b, c, d in combinations(higher, 3):
            if c in adj[b] and d in adj[b] and d in adj[c]:
                return (a, b, c, d)
    return None


def triangles(g: Multigraph) -> list[tuple[int, int, int]]:
    adj = g.adjacency
    out = []
    for a in range(g.n):
        for b in sorted(x for x in adj[a] if x > a):
            for c in sorted(x for x in adj[a] & adj[b] if x > b):
                out.append((a, b, c))
    return out


def clique_number(g: Multigraph) -> int:
    best = 0
    for k in maximal_cliques(g.adjacency):
        best = max(best, len(k))
    return best


def maximal_cliques(adj: Adjacency, within: set[int] | None = None) -> Iterator[frozenset[int]]:
    """Bron-Kerbosch with pivoting over the vertices in ``within`` (default all)."""
    vertices = set(range(len(adj))) if within is None else set(within)

    def expand(r: set[int], p: set[int], x: set[int]) -> Iterator[frozenset[int]]:
        if not p and not x:
            yield frozenset(r)
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            nv = adj[v] & vertices
            yield from expand(r | {v}, p & nv, x & nv)
            p = p - {v}
            x = x | {v}

    if not vertices:
        return
    yield from expand(set(), vertices, set())


def find_diamonds(g: Multigraph) -> list[Diamond]:
    """Every induced K4-minus-an-edge, once each, with the centrals whose
    degree in ``g`` is 3 recorded as small."""
    _require_simple(g)
    adj = g.adjacency
    found = []
    for u, w in sorted(g.bundles):
        common = sorted(adj[u] & adj[w])
        for x, y in combinations(common, 2):
            if y in adj[x]:
                continue
            small = tuple(c for c in (u, w) if len(adj[c]) == 3)
            found.append(Diamond((u, w), (x, y), small))
    return found


def _check_triangle(g: Multigraph, t: Sequence[int]) -> None:
    adj = g.adjacency
    if len(set(t)) != 3 or any(b not in adj[a] for a, b in combinations(t, 2)):
        raise GraphInputError(f"{tuple(t)} is not a triangle")


def is_odd_triangle(g: Multigraph, t: Sequence[int]) -> bool:
    """True if some vertex outside ``t`` sees an odd number of its vertices."""
    _check_triangle(g, t)
    adj = g.adjacency
    ts = set(t)
    candidates = set().union(*(adj[x] for x in t)) - ts
    return any(len(adj[z] & ts) % 2 == 1 for z in candidates)


def is_odd_diamond(g: Multigraph, d: Diamond) -> bool:
    return all(is_odd_triangle(g, t) for t in d.triangles)


def find_odd_diamond(g: Multigraph) -> Diamond | None:
    for d in find_diamonds(g):
        if is_odd_diamond(g, d):
            return d
    return None


# ---------------------------------------------------------------------------
# induced circuits


def induced_cycles(
    adj: Adjacency, min_len: int = 3, max_len: int | None = None, parity: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Induced circuits of a simple graph, each once.

    A circuit is reported starting from its smallest vertex, in the
    direction where the second vertex is smaller than the last.
    """
    n = len(adj)
    for s in range(n):
        path = [s]
        on_path = {s}

        def grow() -> Iterator[tuple[int, ...]]:
            last = path[-1]
            inner = path[1:-1]
            for x in sorted(adj[last]):
                if x <= s or x in on_path:
                    continue
                if any(x in adj[p] for p in inner):
                    continue
                length = len(path) + 1
                if len(path) >= 2 and s in adj[x]:
                    if (
                        path[1] < x
                        and length >= min_len
                        and (parity is None or length % 2 == parity)
                        and (max_len is None or length <= max_len)
                    ):
                        yield (*path, x)
                    continue
                if max_len is not None and length >= max_len:
                    continue
                path.append(x)
                on_path.add(x)
                yield from grow()
                path.pop()
                on_path.discard(x)

        yield from grow()


def ring_from_cycle(h: Multigraph, cycle: Sequence[int]) -> OddRing:
    ids: list[int] = []
    k = len(cycle)
    for i in range(k):
        ids.extend(h.edges_between(cycle[i], cycle[(i + 1) % k]))
    return OddRing(tuple(cycle), tuple(sorted(ids)))


def enumerate_odd_rings(h: Multigraph, max_len: int | None = None) -> list[OddRing]:
    """All odd rings of ``h`` (induced odd circuits of the underlying simple
    graph, triangles included) with their parallel edges."""
    return [ring_from_cycle(h, cyc) for cyc in induced_cycles(h.adjacency, 3, max_len, 1)]


def odd_holes(g: Multigraph, max_len: int | None = None) -> list[tuple[int, ...]]:
    """Induced odd circuits with at least 5 vertices."""
    return list(induced_cycles(g.adjacency, 5, max_len, 1))


def is_induced_odd_circuit(g: Multigraph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 3 or k % 2 == 0 or len(set(cycle)) != k:
        return False
    if any(not 0 <= v < g.n for v in cycle):
        return False
    adj = g.adjacency
    pos = {v: i for i, v in enumerate(cycle)}
    for i, v in enumerate(cycle):
        inside = adj[v] & pos.keys()
        if inside != {cycle[(i - 1) % k], cycle[(i + 1) % k]}:
            return False
    return True


def count_neighbors_in_odd_hole(
    g: Multigraph, v: int, cycle: Sequence[int]
) -> tuple[int, tuple[int, tuple[int, ...]] | None]:
    """Number of neighbors of ``v`` on the induced odd circuit ``cycle``.

    A t-perfect claw-free graph allows at most 2; with 3 or more the pair
    ``(v, cycle)`` is returned as a witness against t-perfection.
    """
    if not is_induced_odd_circuit(g, cycle):
        raise GraphInputError(f"{tuple(cycle)} is not an induced odd circuit")
    if v in cycle:
        raise GraphInputError(f"vertex {v} lies on the circuit")
    count = len(g.neighbors(v) & set(cycle))
    witness = (v, tuple(cycle)) if count >= 3 else None
    return count, witness


# ---------------------------------------------------------------------------
# odd subdivisions of the house


def _odd_cycles(adj: Adjacency, meter) -> Iterator[tuple[int, ...]]:
    """All odd circuits (not necessarily induced) of a simple graph, once each."""
    n = len(adj)
    for s in range(n):
        path = [s]
        on_path = {s}

        def grow() -> Iterator[tuple[int, ...]]:
            meter.tick()
            last = path[-1]
            for x in sorted(adj[last]):
                if x <= s or x in on_path:
                    continue
                if len(path) >= 2 and s in adj[x] and path[1] < x and len(path) % 2 == 0:
                    yield (*path, x)
                path.append(x)
                on_path.add(x)
                yield from grow()
                path.pop()
                on_path.discard(x)

        yield from grow()


def _odd_ear(adj: Adjacency, cycle: tuple[int, ...], meter) -> tuple[int, ...] | None:
    """An odd path between two circuit vertices whose interior avoids the
    circuit and which closes a totally odd house (chord, or length >= 3)."""
    k = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    for i, a in enumerate(cycle):
        for b in sorted(adj[a] & pos.keys()):
            j = pos[b]
            if (i - j) % k not in (1, k - 1) and a < b:
                return (a, b)
    outside_ok = [v not in pos for v in range(len(adj))]
    for a in cycle:
        path = [a]
        on_path = {a}

        def walk() -> tuple[int, ...] | None:
            meter.tick()
            last = path[-1]
            for x in sorted(adj[last]):
                if x in on_path:
                    continue
                if x in pos:
                    # len(path) edges after appending x; need odd and >= 3
                    if len(path) >= 3 and len(path) % 2 == 1:
                        return (*path, x)
                    continue
                if not outside_ok[x]:
                    continue
                path.append(x)
                on_path.add(x)
                found = walk()
                if found:
                    return found
                path.pop()
                on_path.discard(x)
            return None

        for x in sorted(adj[a]):
            if x in pos:
                continue
            path.append(x)
            on_path.add(x)
            found = walk()
            if found:
                return found
            path.pop()
            on_path.discard(x)
    return None


def _edge_ids(h: Multigraph, seq: Sequence[int], cyclic: bool) -> tuple[int, ...]:
    pairs = list(zip(seq, seq[1:]))
    if cyclic:
        pairs.append((seq[-1], seq[0]))
    return tuple(h.edges_between(a, b)[0] for a, b in pairs)


def make_c5p_certificate(
    h: Multigraph, circuit: Sequence[int], ear: Sequence[int]
) -> OddC5PlusCertificate:
    return OddC5PlusCertificate(
        tuple(circuit), _edge_ids(h, circuit, True), tuple(ear), _edge_ids(h, ear, False)
    )


def find_odd_c5p(
    h: Multigraph, budget: SearchBudget = DEFAULT_BUDGET
) -> OddC5PlusCertificate | None:
    """Exhaustively search ``h`` for a totally odd subdivision of the house.

    Returns a verified certificate, or ``None`` when none exists. Raises
    :class:`~roundup.budget.BudgetExceeded` if the node budget runs out,
    which means "unknown", never "absent".
    """
    adj = h.adjacency
    meter = budget.meter()
    for cycle in _odd_cycles(adj, meter):
        ear = _odd_ear(adj, cycle, meter)
        if ear is not None:
            cert = make_c5p_certificate(h, cycle, ear)
            assert verify_odd_c5p(h, cert), cert
            return cert
    return None


def verify_odd_c5p(h: Multigraph, cert: OddC5PlusCertificate) -> bool:
    """Independent check that ``cert`` is a totally odd subdivision of the house in ``h``."""
    c, ear = cert.circuit, cert.ear
    k, q = len(c), len(ear) - 1
    if k < 3 or k % 2 == 0 or len(set(c)) != k:
        return False
    if q < 1 or q % 2 == 0 or len(set(ear)) != len(ear):
        return False
    if len(cert.circuit_edges) != k or len(cert.ear_edges) != q:
        return False
    if any(not 0 <= e < h.m for e in (*cert.circuit_edges, *cert.ear_edges)):
        return False
    if len(set(cert.circuit_edges) | set(cert.ear_edges)) != k + q:
        return False
    for i, e in enumerate(cert.circuit_edges):
        if set(h.edges[e]) != {c[i], c[(i + 1) % k]}:
            return False
    for i, e in enumerate(cert.ear_edges):
        if set(h.edges[e]) != {ear[i], ear[i + 1]}:
            return False
    a, b = ear[0], ear[-1]
    if a not in c or b not in c or a == b:
        return False
    if set(ear[1:-1]) & set(c):
        return False
    gap = (c.index(b) - c.index(a)) % k
    odd_arc = gap if gap % 2 == 1 else k - gap
    return max(q, odd_arc) >= 3


# ---------------------------------------------------------------------------
# squares of circuits


def square_of_circuit(n: int) -> Multigraph:
    """Vertices ``0..n-1``, edges between indices at cyclic distance 1 or 2."""
    if n < 3:
        raise GraphInputError(f"square_of_circuit needs n >= 3, got {n}")
    pairs = set()
    for i in range(n):
        for d in (1, 2):
            j = (i + d) % n
            if i != j:
                pairs.add((min(i, j), max(i, j)))
    return Multigraph(n, sorted(pairs))


def recognize_square_of_circuit(g: Multigraph) -> int | None:
    """Return ``k`` if ``g`` is isomorphic to the square of the ``k``-circuit.

    Grows a sequence ``z_1, z_2, ...`` in which each new vertex is adjacent
    to the previous two, then checks that the ordering closes cyclically.
    Fixing ``z_1`` is enough because squares of circuits are vertex-transitive.
    """
    if not g.is_simple() or g.n < 3:
        return None
    k = g.n
    target = square_of_circuit(k)
    if g.m != target.m:
        return None
    if sorted(len(a) for a in g.adjacency) != sorted(len(a) for a in target.adjacency):
        return None
    adj = g.adjacency

    def closes(order: list[int]) -> bool:
        return all(
            order[(i + d) % k] in adj[order[i]] or order[(i + d) % k] == order[i]
            for i in range(k)
            for d in (1, 2)
        )

    order = [0]
    used = {0}

    def grow() -> bool:
        if len(order) == k:
            return closes(order)
        last = order[-1]
        cands = adj[last] - used
        if len(order) >= 2:
            cands &= adj[order[-2]]
        for x in sorted(cands):
            order.append(x)
            used.add(x)
            if grow():
                return True
            order.pop()
            used.discard(x)
        return False

    return k if grow() else None


# ---------------------------------------------------------------------------
# generators


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, outer + spokes + inner)


def c5_plus() -> Multigraph:
    """The house on vertices 0..4 (labels 1..5 shifted down): 12 23 34 45 15 25."""
    return Multigraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 4)])


def h_m(m: int) -> Multigraph:
    """A 5-circuit with every edge replaced by ``m`` parallel edges, plus a
    vertex 5 joined to the non-adjacent circuit vertices 0 and 2."""
    if m < 1:
        raise GraphInputError(f"h_m needs m >= 1, got {m}")
    edges = [(i, (i + 1) % 5) for i in range(5) for _ in range(m)]
    edges += [(5, 0), (5, 2)]
    return Multigraph(6, edges)


def odd_ring(length: int, mult: int = 1) -> Multigraph:
    if length < 3 or length % 2 == 0:
        raise GraphInputError(f"odd_ring needs an odd length >= 3, got {length}")
    if mult < 1:
        raise GraphInputError(f"odd_ring needs mult >= 1, got {mult}")
    return Multigraph(length, [(i, (i + 1) % length) for i in range(length) for _ in range(mult)])


def cycle_graph(n: int) -> Multigraph:
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, list(combinations(range(n), 2)))
