"""Incremental edge coloring by Kempe-chain cascades.

Edges are inserted one at a time. When no color class misses both ends of
the new edge ``e = uv``, the algorithm tries a short list of Kempe
recolorings: a swap along the ``A/B`` chain from ``u``, then for every
other class ``M`` a swap along an ``M/B`` chain followed by an ``M/A``
chain. If all fail, either an odd ring ``R`` through ``e`` with
``|E(R)| = k*r + 1`` certifies that ``k + 1`` colors are necessary, or the
search stumbled on a totally odd subdivision of the house containing ``e``.

On multigraphs without such a subdivision every new color is certified,
so the final palette equals ``max(Delta, ceil(Gamma'))``, the chromatic index.
"""

from __future__ import annotations

import io
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import TextIO, Union

from .bounds import ceil_fraction, ring_bound
from .multigraph import GraphInputError, Multigraph
from .structure import OddC5PlusCertificate, OddRing, make_c5p_certificate, verify_odd_c5p


class ColoringError(ValueError):
    """A coloring or Kempe component violates its contract."""


class ProofInvariantError(AssertionError):
    """An intermediate claim of the recoloring argument failed (a bug)."""


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


class EdgeColoring:
    """Partial edge coloring of ``graph`` with palette ``0..k-1``.

    ``color_of[e]`` is ``None`` for uncolored edges, which take no part in
    any chain. ``at[v]`` maps each color present at ``v`` to its edge.
    """

    __slots__ = ("graph", "k", "color_of", "at")

    def __init__(self, graph: Multigraph, k: int = 0):
        self.graph = graph
        self.k = k
        self.color_of: list[int | None] = [None] * graph.m
        self.at: list[dict[int, int]] = [dict() for _ in range(graph.n)]

    @classmethod
    def from_colors(
        cls, graph: Multigraph, colors: Sequence[int | None], k: int | None = None
    ) -> EdgeColoring:
        """Build a coloring from per-edge colors; raises on clashes."""
        if len(colors) != graph.m:
            raise ColoringError(f"expected {graph.m} colors, got {len(colors)}")
        used = [c for c in colors if c is not None]
        col = cls(graph, k if k is not None else (max(used) + 1 if used else 0))
        for e, c in enumerate(colors):
            if c is None:
                continue
            if not 0 <= c < col.k:
                raise ColoringError(f"color {c} of edge {e} outside palette {col.k}")
            for x in graph.edges[e]:
                if c in col.at[x]:
                    raise ColoringError(
                        f"edges {col.at[x][c]} and {e} share color {c} at vertex {x}"
                    )
            col.assign(e, c)
        return col

    def copy(self) -> EdgeColoring:
        other = EdgeColoring.__new__(EdgeColoring)
        other.graph = self.graph
        other.k = self.k
        other.color_of = list(self.color_of)
        other.at = [dict(d) for d in self.at]
        return other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.graph == other.graph and self.k == other.k and self.color_of == other.color_of

    @property
    def classes(self) -> list[set[int]]:
        out: list[set[int]] = [set() for _ in range(self.k)]
        for e, c in enumerate(self.color_of):
            if c is not None:
                out[c].add(e)
        return out

    def covers(self, color: int, v: int) -> bool:
        return color in self.at[v]

    def assign(self, e: int, color: int) -> None:
        u, v = self.graph.edges[e]
        self.color_of[e] = color
        self.at[u][color] = e
        self.at[v][color] = e

    def unassign(self, e: int) -> None:
        c = self.color_of[e]
        if c is None:
            return
        u, v = self.graph.edges[e]
        del self.at[u][c]
        del self.at[v][c]
        self.color_of[e] = None

    def new_color(self) -> int:
        self.k += 1
        return self.k - 1

    def chain_from(self, a: int, b: int, start: int) -> tuple[list[int], list[int]]:
        """Walk the ``a/b`` chain from a vertex missing ``a`` or ``b``.

        Returns the vertices and edges in path order; the chain is a path
        because ``start`` has at most one of the two colors.
        """
        if a in self.at[start] and b in self.at[start]:
            raise ColoringError(f"vertex {start} is interior to its {a}/{b} chain")
        vertices, edges = [start], []
        x = start
        nxt = a if a in self.at[start] else b
        while nxt in self.at[x]:
            e = self.at[x][nxt]
            x = self.graph.other_end(e, x)
            edges.append(e)
            vertices.append(x)
            nxt = b if nxt == a else a
        return vertices, edges

    def component(self, a: int, b: int, vertex: int) -> set[int]:
        """Edges of the component of ``vertex`` in the union of classes ``a`` and ``b``."""
        seen = {vertex}
        edges: set[int] = set()
        queue = deque([vertex])
        while queue:
            x = queue.popleft()
            for c in (a, b):
                e = self.at[x].get(c)
                if e is None or e in edges:
                    continue
                edges.add(e)
                y = self.graph.other_end(e, x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return edges

    def swap(self, a: int, b: int, edges: Iterable[int]) -> None:
        """Exchange colors ``a`` and ``b`` on ``edges`` in place, unchecked."""
        edges = list(edges)
        old = [self.color_of[e] for e in edges]
        for e in edges:
            self.unassign(e)
        for e, c in zip(edges, old):
            self.assign(e, b if c == a else a)


def kempe_swap(col: EdgeColoring, a: int, b: int, component: Iterable[int]) -> EdgeColoring:
    """Return a copy of ``col`` with ``a`` and ``b`` exchanged on ``component``.

    ``component`` must be exactly one connected component of the union of
    the two classes; anything else raises :class:`ColoringError`.
    """
    comp = set(component)
    if a == b:
        raise ColoringError("kempe_swap needs two distinct colors")
    if not comp:
        raise ColoringError("empty component")
    for e in comp:
        if not 0 <= e < col.graph.m or col.color_of[e] not in (a, b):
            raise ColoringError(f"edge {e} is not colored {a} or {b}")
    first = min(comp)
    if col.component(a, b, col.graph.edges[first][0]) != comp:
        raise ColoringError("edges do not form a component of the two-colored subgraph")
    out = col.copy()
    out.swap(a, b, comp)
    return out


def verify_edge_coloring(h: Multigraph, col: EdgeColoring, complete: bool = True) -> CheckResult:
    """Check that every class is a matching, colors are in range, and (if
    ``complete``) every edge is colored."""
    if col.graph.n != h.n or col.graph.edges != h.edges:
        return CheckResult(False, "coloring belongs to another graph")
    seen: dict[tuple[int, int], int] = {}
    for e, c in enumerate(col.color_of):
        if c is None:
            if complete:
                return CheckResult(False, "uncolored edge", (e,))
            continue
        if not 0 <= c < col.k:
            return CheckResult(False, "color outside palette", (e, c))
        for x in h.edges[e]:
            if (x, c) in seen:
                return CheckResult(False, "incident edges share a color", (seen[x, c], e))
            seen[x, c] = e
    for v in range(h.n):
        expect = {c: e for (x, c), e in seen.items() if x == v}
        if col.at[v] != expect:
            return CheckResult(False, "vertex index out of sync", (v,))
    return CheckResult(True)


def find_ab_pair(col: EdgeColoring, u: int, v: int) -> tuple[int, int] | None:
    """Lowest classes ``A`` covering ``u`` but not ``v`` and ``B`` covering
    ``v`` but not ``u``; ``None`` if either does not exist."""
    a = next((c for c in range(col.k) if c in col.at[u] and c not in col.at[v]), None)
    b = next((c for c in range(col.k) if c in col.at[v] and c not in col.at[u]), None)
    if a is None or b is None:
        return None
    return a, b


def is_r_matching(col: EdgeColoring, color: int, ring: OddRing) -> bool:
    """``color`` has ``r`` edges in ``ring`` and misses one ring vertex entirely."""
    in_ring = [e for e in ring.edge_ids if col.color_of[e] == color]
    if len(in_ring) != ring.r:
        return False
    missed = [x for x in ring.vertices if color not in col.at[x]]
    return len(missed) == 1


# ---------------------------------------------------------------------------
# certificates and outcomes


@dataclass(frozen=True)
class OddRingCertificate:
    """Odd ring through the inserted edge with ``|E(R)| = k*r + 1``, so any
    coloring of the current graph needs at least ``k + 1`` colors."""

    ring: OddRing
    k: int

    @property
    def identity_holds(self) -> bool:
        return len(self.ring.edge_ids) == self.k * self.ring.r + 1

    @property
    def implied_bound(self) -> int:
        return ceil_fraction(ring_bound(len(self.ring.edge_ids), len(self.ring.vertices)))

    def format(self) -> str:
        return f"{self.ring.format()}\nk: {self.k}"


@dataclass(frozen=True)
class DegreeCertificate:
    """Vertex whose degree in the current graph exceeds the palette size ``k``."""

    vertex: int
    degree: int
    k: int

    def format(self) -> str:
        return f"degree: vertex {self.vertex} has degree {self.degree}\nk: {self.k}"


@dataclass(frozen=True)
class Colored:
    coloring: EdgeColoring
    color: int


@dataclass(frozen=True)
class NewColorNeeded:
    certificate: Union[OddRingCertificate, DegreeCertificate]


@dataclass(frozen=True)
class OddC5PlusFound:
    certificate: OddC5PlusCertificate


InsertOutcome = Union[Colored, NewColorNeeded, OddC5PlusFound]


# ---------------------------------------------------------------------------
# insertion


def _ring_on(col: EdgeColoring, cycle: Sequence[int], e: int) -> OddRing:
    """Ring on ``cycle`` in the current graph: colored edges plus ``e``."""
    g = col.graph
    k = len(cycle)
    ids = []
    for i in range(k):
        for f in g.edges_between(cycle[i], cycle[(i + 1) % k]):
            if f == e or col.color_of[f] is not None:
                ids.append(f)
    return OddRing(tuple(cycle), tuple(sorted(ids)))


def _find_chord(col: EdgeColoring, cycle: Sequence[int]) -> tuple[int, int, int] | None:
    pos = {x: i for i, x in enumerate(cycle)}
    k = len(cycle)
    for i, x in enumerate(cycle):
        for f in col.at[x].values():
            y = col.graph.other_end(f, x)
            j = pos.get(y)
            if j is not None and (i - j) % k not in (1, k - 1):
                return (x, y, f)
    return None


def _escape_segment(
    path_vertices: Sequence[int], path_edges: Sequence[int], ring: OddRing
) -> tuple[list[int], list[int]] | None:
    """First subpath leaving the ring and returning to it, if any."""
    ring_v = set(ring.vertices)
    ring_e = set(ring.edge_ids)
    t = len(path_edges)
    for i in range(t):
        if path_vertices[i] not in ring_v or path_edges[i] in ring_e:
            continue
        for j in range(i + 1, t + 1):
            if path_vertices[j] in ring_v:
                return list(path_vertices[i:j + 1]), list(path_edges[i:j])
    return None


def _ring_part_connected(
    path_vertices: Sequence[int], path_edges: Sequence[int], ring: OddRing
) -> bool:
    """Whether the intersection of a path with ``ring`` is connected."""
    ring_v = set(ring.vertices)
    ring_e = set(ring.edge_ids)
    pieces = 0
    inside = False
    for i, x in enumerate(path_vertices):
        if x not in ring_v:
            inside = False
            continue
        if not (inside and path_edges[i - 1] in ring_e):
            pieces += 1
        inside = True
    return pieces <= 1


def _ear_certificate(
    col: EdgeColoring, cycle_vertices: Sequence[int], cycle_edges: Sequence[int],
    ear_vertices: Sequence[int], ear_edges: Sequence[int],
) -> OddC5PlusCertificate:
    cert = OddC5PlusCertificate(
        tuple(cycle_vertices), tuple(cycle_edges), tuple(ear_vertices), tuple(ear_edges)
    )
    if not verify_odd_c5p(col.graph, cert):
        raise ProofInvariantError(f"escape path does not certify a subdivided house: {cert}")
    return cert


def insert_edge(col: EdgeColoring, e: int, debug: bool = False) -> InsertOutcome:
    """Try to color the uncolored edge ``e`` without enlarging the palette.

    On :class:`Colored` the coloring is updated in place. On the two other
    outcomes ``col`` is left untouched and the caller decides how to
    proceed (usually by opening a new color for ``e``).
    """
    g = col.graph
    if not 0 <= e < g.m:
        raise GraphInputError(f"edge {e} out of range")
    if col.color_of[e] is not None:
        raise ColoringError(f"edge {e} is already colored")
    if debug and not verify_edge_coloring(g, col, complete=False):
        raise ColoringError("malformed coloring")
    u, v = g.edges[e]
    at = col.at

    for c in range(col.k):
        if c not in at[u] and c not in at[v]:
            col.assign(e, c)
            return Colored(col, c)

    pair = find_ab_pair(col, u, v)
    if pair is None:
        # every class covers u or v, and one endpoint sees all k of them
        x = v if all(c in at[v] for c in range(col.k)) else u
        return NewColorNeeded(DegreeCertificate(x, len(at[x]) + 1, col.k))
    a, b = pair

    path_v, path_e = col.chain_from(a, b, u)
    if v not in path_v:
        col.swap(a, b, path_e)
        col.assign(e, a)
        return Colored(col, a)

    # path_v runs u ... v; closing it with e gives an odd circuit
    cycle = path_v
    cycle_edges = [*path_e, e]
    chord = _find_chord(col, cycle)
    if chord is not None:
        x, y, f = chord
        return OddC5PlusFound(_ear_certificate(col, cycle, cycle_edges, (x, y), (f,)))
    ring = _ring_on(col, cycle, e)
    if debug:
        for c in (a, b):
            if not is_r_matching(col, c, ring):
                raise ProofInvariantError(f"class {c} is not a ring matching")

    for m in range(col.k):
        if m in (a, b):
            continue
        if m in at[u]:
            x, y, cx, cy = u, v, a, b
        else:
            x, y, cx, cy = v, u, b, a
        # cy misses x, so the m/cy component of x is a path
        k_v, k_e = col.chain_from(m, cy, x)
        if not _ring_part_connected(k_v, k_e, ring):
            seg = _escape_segment(k_v, k_e, ring)
            if seg is None:
                raise ProofInvariantError("disconnected ring part without an escape path")
            return OddC5PlusFound(_ear_certificate(col, cycle, cycle_edges, *seg))
        scratch = col.copy()
        scratch.swap(m, cy, k_e)
        if debug and m in scratch.at[x]:
            raise ProofInvariantError("swapped class still covers the start vertex")
        if m not in scratch.at[y]:
            _commit(col, scratch)
            col.assign(e, m)
            return Colored(col, m)
        t_v, t_e = scratch.chain_from(m, cx, y)
        if not _ring_part_connected(t_v, t_e, ring):
            seg = _escape_segment(t_v, t_e, ring)
            if seg is None:
                raise ProofInvariantError("disconnected ring part without an escape path")
            return OddC5PlusFound(_ear_certificate(scratch, cycle, cycle_edges, *seg))
        if x not in t_v:
            scratch.swap(m, cx, t_e)
            _commit(col, scratch)
            col.assign(e, m)
            return Colored(col, m)
        if debug:
            in_ring = sum(1 for f in ring.edge_ids if scratch.color_of[f] == m)
            if in_ring != ring.r or set(t_v) != set(cycle):
                raise ProofInvariantError(f"class {m} does not span the ring as claimed")

    cert = OddRingCertificate(ring, col.k)
    if not cert.identity_holds:
        raise ProofInvariantError(
            f"ring with {len(ring.edge_ids)} edges violates |E(R)| = {col.k}*{ring.r}+1"
        )
    return NewColorNeeded(cert)


def _commit(col: EdgeColoring, scratch: EdgeColoring) -> None:
    col.color_of = scratch.color_of
    col.at = scratch.at
    col.k = scratch.k


Certificate = Union[OddRingCertificate, DegreeCertificate, OddC5PlusCertificate]


@dataclass
class EdgeColoringResult:
    coloring: EdgeColoring
    certificates: list[Certificate] = field(default_factory=list)

    @property
    def palette(self) -> int:
        return self.coloring.k

    @property
    def optimal(self) -> bool:
        """True when every color opened was certified necessary."""
        return not any(isinstance(c, OddC5PlusCertificate) for c in self.certificates)


def color_edges(
    h: Multigraph, order: Sequence[int] | None = None, debug: bool = False
) -> EdgeColoringResult:
    """Color all edges of ``h``, inserting them in ``order`` (default: by id).

    A new color is opened only when :func:`insert_edge` fails; the reason
    is recorded. Without an :class:`OddC5PlusCertificate` among the
    recorded reasons the palette is the chromatic index.
    """
    order = list(range(h.m)) if order is None else list(order)
    if sorted(order) != list(range(h.m)):
        raise GraphInputError("order must be a permutation of the edge ids")
    col = EdgeColoring(h)
    result = EdgeColoringResult(col)
    for e in order:
        outcome = insert_edge(col, e, debug=debug)
        if isinstance(outcome, Colored):
            continue
        result.certificates.append(outcome.certificate)
        col.assign(e, col.new_color())
    if debug and not verify_edge_coloring(h, col):
        raise ProofInvariantError("final coloring is invalid")
    return result


# ---------------------------------------------------------------------------
# text format


def format_edge_coloring(col: EdgeColoring) -> str:
    lines = [str(col.k)]
    lines.extend(f"{e} {c}" for e, c in enumerate(col.color_of) if c is not None)
    return "\n".join(lines) + "\n"


def parse_edge_coloring(h: Multigraph, text: str | TextIO) -> EdgeColoring:
    stream = io.StringIO(text) if isinstance(text, str) else text
    k = None
    colors: list[int | None] = [None] * h.m
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphInputError(f"expected integers, got {line!r}", lineno) from None
        if k is None:
            if len(nums) != 1:
                raise GraphInputError("expected the palette size", lineno)
            k = nums[0]
            continue
        if len(nums) != 2 or not 0 <= nums[0] < h.m:
            raise GraphInputError(f"bad coloring line {line!r}", lineno)
        colors[nums[0]] = nums[1]
    if k is None:
        raise GraphInputError("empty coloring")
    return EdgeColoring.from_colors(h, colors, k)
