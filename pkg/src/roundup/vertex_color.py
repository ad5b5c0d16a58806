"""Weighted vertex coloring of h-perfect line graphs and t-perfect claw-free graphs.

Line graphs are colored through their roots: replicating each root edge
``c_e`` times turns a weighted coloring of ``L(h)`` into an edge coloring
of a multigraph. Claw-free graphs are first stripped of weight on small
diamonds (a central vertex of degree 3), one unit at a time; once no small
diamond carries weight the rest is a line graph. The removed units are put
back in reverse order, each by a free set, a new singleton, or a sequence
of Kempe swaps.
"""

from __future__ import annotations

import io
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import TextIO, Union

from .edge_color import CheckResult, color_edges
from .multigraph import (
    GraphInputError,
    Multigraph,
    check_weights,
    induced_subgraph,
    replicate_edges,
)
from .structure import (
    find_claw,
    find_diamonds,
    find_k4,
    is_induced_odd_circuit,
    odd_holes,
    recognize_square_of_circuit,
)


@dataclass(frozen=True)
class Witness:
    """Evidence that an input violates a requirement.

    ``kind`` is one of ``claw``, ``k4``, ``degree``, ``odd_hole_neighbors`` or
    ``square_of_circuit``.
    """

    kind: str
    vertices: tuple[int, ...] = ()
    k: int | None = None
    detail: str = ""

    def format(self) -> str:
        if self.kind == "square_of_circuit":
            return f"square_of_circuit k={self.k} vertices: " + " ".join(map(str, self.vertices))
        if self.kind == "odd_hole_neighbors":
            v, *hole = self.vertices
            return f"odd_hole_neighbors vertex {v} hole: " + " ".join(map(str, hole))
        if self.kind == "degree":
            return f"degree vertex {self.vertices[0]} has {self.k} neighbors"
        text = f"{self.kind} " + " ".join(map(str, self.vertices))
        return f"{text} ({self.detail})" if self.detail else text


class RejectedInput(ValueError):
    """The graph is outside the class the algorithm handles; see ``witness``."""

    def __init__(self, witness: Witness):
        self.witness = witness
        super().__init__(witness.format())


@dataclass
class VertexColoring:
    stable_sets: list[frozenset[int]]
    optimal: bool = True

    def __len__(self) -> int:
        return len(self.stable_sets)

    def format(self) -> str:
        lines = [str(len(self.stable_sets))]
        lines.extend(" ".join(map(str, sorted(s))) for s in self.stable_sets)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DiamondStep:
    vertex: int
    mode: str = ""  # free-set | new-singleton | kempe-swaps
    swaps: int = 0

    def format(self) -> str:
        return f"diamond vertex={self.vertex} mode={self.mode} swaps={self.swaps}"


@dataclass(frozen=True)
class LineGraphStep:
    component: tuple[int, ...]
    root: Multigraph
    edge_weights: tuple[int, ...]

    def format(self) -> str:
        edges = " ".join(f"{u}-{v}" for u, v in self.root.edges)
        return (
            "line-graph component=" + ",".join(map(str, self.component))
            + f" root_n={self.root.n} root_edges={edges} weights="
            + ",".join(map(str, self.edge_weights))
        )


Step = Union[DiamondStep, LineGraphStep]


@dataclass
class ReductionTrace:
    steps: list[Step] = field(default_factory=list)

    def format(self) -> str:
        return "".join(s.format() + "\n" for s in self.steps)


def parse_vertex_coloring(text: str | TextIO) -> list[frozenset[int]]:
    stream = io.StringIO(text) if isinstance(text, str) else text
    count = None
    sets: list[frozenset[int]] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n").split("#", 1)[0]
        if count is None:
            if not line.strip():
                continue
            try:
                count = int(line)
            except ValueError:
                raise GraphInputError(f"expected the set count, got {line!r}", lineno) from None
            continue
        try:
            sets.append(frozenset(int(x) for x in line.split()))
        except ValueError:
            raise GraphInputError(f"bad stable set line {line!r}", lineno) from None
    if count is None:
        raise GraphInputError("empty coloring")
    sets = sets[:count] + [frozenset()] * (count - len(sets))
    return sets


def verify_vertex_coloring(
    g: Multigraph, c: Sequence[int], sets: Sequence[frozenset[int]] | VertexColoring
) -> CheckResult:
    """Every set is stable and each vertex ``v`` lies in at least ``c[v]`` sets."""
    if isinstance(sets, VertexColoring):
        sets = sets.stable_sets
    c = check_weights(c, g.n)
    adj = g.adjacency
    count = [0] * g.n
    for i, s in enumerate(sets):
        for v in s:
            if not 0 <= v < g.n:
                return CheckResult(False, "vertex out of range", (i, v))
            count[v] += 1
        for a in s:
            for b in adj[a] & s:
                return CheckResult(False, "set contains an edge", (a, b))
    for v in range(g.n):
        if count[v] < c[v]:
            return CheckResult(False, "vertex covered too few times", (v,))
    return CheckResult(True)


# ---------------------------------------------------------------------------
# line graphs


def color_line_graph_weighted(h: Multigraph, c: Sequence[int]) -> VertexColoring:
    """Weighted coloring of ``L(h)``; vertex ``e`` of ``L(h)`` is edge ``e`` of ``h``.

    Each color class of the replicated multigraph is a matching and maps to
    a stable set of ``L(h)``. ``optimal`` is False when the edge coloring
    ran into a totally odd subdivided house.
    """
    c = check_weights(c, h.m, "edge")
    blown, origin = replicate_edges(h, c)
    res = color_edges(blown)
    sets = [frozenset(origin[e] for e in cls) for cls in res.coloring.classes]
    return VertexColoring(sets, optimal=res.optimal)


def root_graph(g: Multigraph) -> Multigraph | None:
    """A simple graph ``h`` with ``line_graph(h).same_edges(g)`` (edge ``i`` of ``h``
    is vertex ``i`` of ``g``), or ``None`` if ``g`` is not a line graph.

    Searches for a Krausz partition: edge-disjoint cliques covering every
    edge, each vertex in at most two. Vertices are handled in order and the
    uncovered neighborhood of each is split into at most ``2 - used``
    cliques, trying a single clique first. For ``K3`` this yields the star.
    """
    if not g.is_simple():
        raise GraphInputError("root_graph expects a simple graph")
    if find_claw(g) is not None:
        return None
    adj = g.adjacency
    n = g.n
    covered: set[tuple[int, int]] = set()
    member: list[list[int]] = [[] for _ in range(n)]
    cliques: list[tuple[int, ...]] = []

    def key(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    def usable(group: Sequence[int]) -> bool:
        if any(len(member[w]) >= 2 for w in group):
            return False
        for a, b in combinations(group, 2):
            if b not in adj[a] or key(a, b) in covered:
                return False
        return True

    def place(group: tuple[int, ...]) -> None:
        idx = len(cliques)
        cliques.append(group)
        for w in group:
            member[w].append(idx)
        for a, b in combinations(group, 2):
            covered.add(key(a, b))

    def unplace() -> None:
        group = cliques.pop()
        for w in group:
            member[w].pop()
        for a, b in combinations(group, 2):
            covered.discard(key(a, b))

    def options(x: int, rest: list[int]):
        cap = 2 - len(member[x])
        if cap <= 0:
            return
        whole = (x, *rest)
        if usable(whole):
            yield [whole]
        if cap == 2 and len(rest) >= 2:
            first, others = rest[0], rest[1:]
            for r in range(0, len(others)):
                for pick in combinations(others, r):
                    g1 = (x, first, *pick)
                    g2 = (x, *[w for w in others if w not in pick])
                    if usable(g1) and usable(g2):
                        yield [g1, g2]

    def search(x: int) -> bool:
        while x < n and all(key(x, y) in covered for y in adj[x]):
            x += 1
        if x == n:
            return True
        rest = sorted(y for y in adj[x] if key(x, y) not in covered)
        for groups in options(x, rest):
            for grp in groups:
                place(grp)
            if search(x + 1):
                return True
            for _ in groups:
                unplace()
        return False

    if not search(0):
        return None
    q = len(cliques)
    extra = q
    edges = []
    for v in range(n):
        ends = list(member[v])
        while len(ends) < 2:
            ends.append(extra)
            extra += 1
        edges.append((ends[0], ends[1]))
    return Multigraph(extra, edges)


# ---------------------------------------------------------------------------
# small diamonds


def _diamond_roles(g: Multigraph, v: int) -> tuple[int, int, int]:
    """Return ``(x, y, w)`` for a small central vertex ``v``: ``w`` is the
    other central vertex, ``x`` and ``y`` the non-adjacent tips."""
    nb = sorted(g.adjacency[v])
    if len(nb) != 3:
        raise GraphInputError(f"vertex {v} has degree {len(nb)}, not 3")
    adj = g.adjacency
    for w in nb:
        x, y = (z for z in nb if z != w)
        if x in adj[w] and y in adj[w] and y not in adj[x]:
            return x, y, w
    raise GraphInputError(f"vertex {v} is not the small central vertex of a diamond")


def _vertex_component(adj, members: frozenset[int], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b in adj[a] & members:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return seen


def _shortest_path(adj, members: set[int], s: int, t: int) -> list[int]:
    prev = {s: None}
    queue = deque([s])
    while queue:
        a = queue.popleft()
        if a == t:
            break
        for b in sorted(adj[a] & members):
            if b not in prev:
                prev[b] = a
                queue.append(b)
    path = [t]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def reinsert_small_diamond(
    g: Multigraph, c: Sequence[int], v: int, sets: Sequence[frozenset[int]]
) -> tuple[list[frozenset[int]], DiamondStep]:
    """Extend a coloring of ``(g, c - 1_v)`` to ``(g, c)``.

    ``sets`` must cover each vertex exactly as often as its reduced weight.
    The result has at most ``max(len(sets), omega(g, c))`` sets. Raises
    :class:`RejectedInput` when a swap would reach ``y``, which exhibits an
    odd hole with a vertex seeing three of its vertices.
    """
    c = check_weights(c, g.n)
    if c[v] < 1:
        raise GraphInputError(f"vertex {v} has zero weight")
    x, y, w = _diamond_roles(g, v)
    adj = g.adjacency
    closed = adj[v] | {v}
    family = [frozenset(s) for s in sets]
    swaps = 0
    while True:
        for i, s in enumerate(family):
            if not s & closed:
                family[i] = s | {v}
                return family, DiamondStep(v, "free-set" if swaps == 0 else "kempe-swaps", swaps)
        fx = {i for i, s in enumerate(family) if x in s}
        fy = {i for i, s in enumerate(family) if y in s}
        if fx <= fy or fy <= fx:
            family.append(frozenset({v}))
            return family, DiamondStep(v, "new-singleton" if swaps == 0 else "kempe-swaps", swaps)
        si, ti = min(fx - fy), min(fy - fx)
        s, t = family[si], family[ti]
        both = s ^ t
        comp = _vertex_component(adj, both, x)
        if y in comp:
            path = _shortest_path(adj, comp, x, y)
            hole = (v, *path)
            if not is_induced_odd_circuit(g, hole):
                raise AssertionError(f"expected an odd hole through {v}, got {hole}")
            raise RejectedInput(
                Witness("odd_hole_neighbors", (w, *hole), detail="swap chain reached y")
            )
        family[si] = s ^ comp
        family[ti] = t ^ comp
        swaps += 1


# ---------------------------------------------------------------------------
# t-perfect claw-free graphs


def validate_tperfect_clawfree_input(g: Multigraph) -> list[Witness]:
    """Cheap necessary conditions for t-perfect claw-free graphs.

    An empty list means nothing was found, not that ``g`` is t-perfect.
    """
    if not g.is_simple():
        raise GraphInputError("expected a simple graph")
    found: list[Witness] = []
    claw = find_claw(g)
    if claw is not None:
        found.append(Witness("claw", claw))
    k4 = find_k4(g)
    if k4 is not None:
        found.append(Witness("k4", k4))
    for v in range(g.n):
        d = len(g.adjacency[v])
        if d >= 5:
            found.append(Witness("degree", (v,), k=d))
    for hole in odd_holes(g):
        hs = set(hole)
        for v in range(g.n):
            if v not in hs and len(g.adjacency[v] & hs) >= 3:
                found.append(Witness("odd_hole_neighbors", (v, *hole)))
    for comp in g.components():
        sub, vmap, _ = induced_subgraph(g, comp)
        k = recognize_square_of_circuit(sub)
        if k is not None and k not in (3, 6):
            found.append(Witness("square_of_circuit", tuple(vmap), k=k))
    return found


def _small_central(g: Multigraph) -> int | None:
    best = None
    for d in find_diamonds(g):
        for u in d.small_centrals:
            if best is None or u < best:
                best = u
    return best


def _greedy_weighted(g: Multigraph, c: Sequence[int]) -> VertexColoring:
    """First-fit weighted coloring; valid but with no optimality claim."""
    sets: list[set[int]] = []
    adj = g.adjacency
    for v in range(g.n):
        need = c[v]
        for s in sets:
            if need == 0:
                break
            if not adj[v] & s:
                s.add(v)
                need -= 1
        sets.extend({v} for _ in range(need))
    return VertexColoring([frozenset(s) for s in sets], optimal=False)


def _color_base(
    g: Multigraph, c: list[int], trace: ReductionTrace
) -> VertexColoring:
    """Color ``(g, c)`` when ``g`` has no small diamond, component by component."""
    merged: list[set[int]] = []
    optimal = True
    for comp in g.components():
        sub, vmap, _ = induced_subgraph(g, comp)
        root = root_graph(sub)
        if root is None:
            k = recognize_square_of_circuit(sub)
            if k is not None:
                raise RejectedInput(Witness("square_of_circuit", tuple(vmap), k=k))
            witnesses = validate_tperfect_clawfree_input(sub)
            if witnesses:
                wit = witnesses[0]
                raise RejectedInput(
                    Witness(wit.kind, tuple(vmap[i] for i in wit.vertices), wit.k, wit.detail)
                )
            # passes every cheap check yet is no line graph: not t-perfect
            part = _greedy_weighted(sub, [c[u] for u in vmap])
            optimal = False
        else:
            weights = [c[u] for u in vmap]
            trace.steps.append(LineGraphStep(tuple(vmap), root, tuple(weights)))
            part = color_line_graph_weighted(root, weights)
            optimal &= part.optimal
        for i, s in enumerate(part.stable_sets):
            if i == len(merged):
                merged.append(set())
            merged[i] |= {vmap[e] for e in s}
    return VertexColoring([frozenset(s) for s in merged], optimal)


def color_tperfect_clawfree(
    g: Multigraph, c: Sequence[int]
) -> tuple[VertexColoring, ReductionTrace]:
    """Weighted coloring of a claw-free K4-free graph, optimal when it is t-perfect.

    While some small central vertex of the weighted support carries weight,
    one unit is removed from it (lowest vertex first). The remainder is
    colored through root graphs and the units are reinserted in reverse.
    Raises :class:`RejectedInput` on a claw, a K4, or evidence that ``g``
    is not t-perfect.
    """
    if not g.is_simple():
        raise GraphInputError("expected a simple graph")
    c = check_weights(c, g.n)
    claw = find_claw(g)
    if claw is not None:
        raise RejectedInput(Witness("claw", claw))
    k4 = find_k4(g)
    if k4 is not None:
        raise RejectedInput(Witness("k4", k4))

    weights = list(c)
    removed: list[tuple[list[int], int]] = []  # (support, vertex) per unit removed
    while True:
        support = [u for u in range(g.n) if weights[u] > 0]
        sub, vmap, _ = induced_subgraph(g, support)
        local = _small_central(sub)
        if local is None:
            break
        v = vmap[local]
        removed.append((support, v))
        weights[v] -= 1

    trace = ReductionTrace()
    sub, vmap, _ = induced_subgraph(g, [u for u in range(g.n) if weights[u] > 0])
    base = _color_base(sub, [weights[u] for u in vmap], trace)
    family = [frozenset(vmap[i] for i in s) for s in base.stable_sets]

    diamond_steps: list[DiamondStep] = []
    for support, v in reversed(removed):
        sub, vmap, _ = induced_subgraph(g, support)
        local_of = {u: i for i, u in enumerate(vmap)}
        local_sets = [frozenset(local_of[u] for u in s) for s in family]
        weights[v] += 1
        local_c = [weights[u] for u in vmap]
        try:
            local_sets, step = reinsert_small_diamond(sub, local_c, local_of[v], local_sets)
        except RejectedInput as exc:
            wit = exc.witness
            raise RejectedInput(
                Witness(wit.kind, tuple(vmap[i] for i in wit.vertices), wit.k, wit.detail)
            ) from None
        family = [frozenset(vmap[i] for i in s) for s in local_sets]
        diamond_steps.append(DiamondStep(v, step.mode, step.swaps))
    trace.steps = [*reversed(diamond_steps), *trace.steps]
    return VertexColoring(family, base.optimal), trace
