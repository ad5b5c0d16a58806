from hypothesis import strategies as st

from roundup.multigraph import Multigraph


@st.composite
def multigraphs(draw, max_n=6, max_edges=9, max_mult=3, simple=False):
    n = draw(st.integers(1, max_n))
    if n < 2:
        return Multigraph(n)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=max_edges, unique=simple))
    edges = []
    for p in chosen:
        if not simple and edges.count(p) >= max_mult:
            continue
        edges.append(p)
    return Multigraph(n, edges)


def simple_graphs(max_n=7, max_edges=10):
    return multigraphs(max_n=max_n, max_edges=max_edges, simple=True)


def relabel(g: Multigraph, perm) -> Multigraph:
    return Multigraph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


# acceptance criterion -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = (ok, detail)
    assert ok, detail


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
