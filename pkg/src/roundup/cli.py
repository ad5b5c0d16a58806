"""Command-line front end.

Exit codes: 0 ok, 2 unparsable input, 3 input rejected with a witness,
4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from typing import TextIO

from .bounds import chi_weighted_formula, format_rational, gamma_prime, kappa_edge
from .budget import BudgetExceeded, SearchBudget
from .edge_color import color_edges, format_edge_coloring, verify_edge_coloring
from .multigraph import (
    GraphInputError,
    Multigraph,
    format_edge_list,
    line_graph,
    parse_edge_list,
    parse_weights,
    underlying_simple,
)
from .oracle import brute_chi_prime, brute_chi_weighted
from .structure import (
    c5_plus,
    enumerate_odd_rings,
    find_claw,
    find_diamonds,
    find_k4,
    find_odd_c5p,
    h_m,
    is_odd_diamond,
    odd_ring,
    petersen,
    recognize_square_of_circuit,
    square_of_circuit,
)
from .vertex_color import (
    RejectedInput,
    color_line_graph_weighted,
    color_tperfect_clawfree,
    root_graph,
    verify_vertex_coloring,
)

EXIT_OK, EXIT_PARSE, EXIT_REJECTED, EXIT_BUDGET = 0, 2, 3, 4


def _read_text(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str, stdin: TextIO) -> Multigraph:
    try:
        return parse_edge_list(_read_text(path, stdin))
    except GraphInputError as exc:
        raise GraphInputError(f"{path}: {exc}") from None


def _load_weights(source: str, size: int, stdin: TextIO) -> list[int]:
    if source == "ones":
        return [1] * size
    try:
        return parse_weights(_read_text(source, stdin), size)
    except GraphInputError as exc:
        raise GraphInputError(f"{source}: {exc}") from None


def _budget(args) -> SearchBudget:
    return SearchBudget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)


def _require_simple(g: Multigraph, what: str) -> None:
    if not g.is_simple():
        raise GraphInputError(f"{what} expects a simple graph")


def cmd_edge_color(args, out: TextIO, stdin: TextIO) -> int:
    h = _load_graph(args.file, stdin)
    res = color_edges(h)
    check = verify_edge_coloring(h, res.coloring)
    if not check:
        raise AssertionError(f"self-check failed: {check.reason} {check.witness}")
    out.write(format_edge_coloring(res.coloring))
    out.write(f"palette {res.palette}\n")
    out.write(f"optimal {'true' if res.optimal else 'false'}\n")
    out.write(f"certificates {len(res.certificates)}\n")
    for cert in res.certificates:
        out.write(cert.format() + "\n")
    return EXIT_OK


def cmd_chi_index(args, out: TextIO, stdin: TextIO) -> int:
    h = _load_graph(args.file, stdin)
    out.write(f"delta {h.max_degree()}\n")
    out.write(f"gamma_prime {format_rational(gamma_prime(h))}\n")
    out.write(f"kappa {kappa_edge(h)}\n")
    if args.oracle:
        out.write(f"chi_prime {brute_chi_prime(h, _budget(args))}\n")
    return EXIT_OK


def cmd_vertex_color(args, out: TextIO, stdin: TextIO) -> int:
    g = _load_graph(args.file, stdin)
    _require_simple(g, "vertex-color")
    c = _load_weights(args.weights, g.n, stdin)
    if args.line_root:
        root = _load_graph(args.line_root, stdin)
        if not line_graph(root).same_edges(g):
            raise GraphInputError(
                "graph is not the line graph of the root (vertex i must be root edge i)"
            )
        coloring = color_line_graph_weighted(root, c)
    else:
        coloring, _ = color_tperfect_clawfree(g, c)
    check = verify_vertex_coloring(g, c, coloring)
    if not check:
        raise AssertionError(f"self-check failed: {check.reason} {check.witness}")
    out.write(coloring.format())
    out.write(f"formula {chi_weighted_formula(g, c)}\n")
    out.write(f"optimal {'true' if coloring.optimal else 'false'}\n")
    if args.oracle:
        out.write(f"chi {brute_chi_weighted(g, c, _budget(args))}\n")
    return EXIT_OK


def cmd_line_graph(args, out: TextIO, stdin: TextIO) -> int:
    out.write(format_edge_list(line_graph(_load_graph(args.file, stdin))))
    return EXIT_OK


def cmd_root_graph(args, out: TextIO, stdin: TextIO) -> int:
    g = _load_graph(args.file, stdin)
    _require_simple(g, "root-graph")
    root = root_graph(g)
    out.write("NOT-A-LINE-GRAPH\n" if root is None else format_edge_list(root))
    return EXIT_OK


def cmd_analyze(args, out: TextIO, stdin: TextIO) -> int:
    h = _load_graph(args.file, stdin)
    s = underlying_simple(h)
    out.write(f"vertices {h.n}\nedges {h.m}\n")
    out.write(f"simple {'true' if h.is_simple() else 'false'}\n")
    out.write(f"max_multiplicity {h.max_multiplicity()}\n")
    claw = find_claw(s)
    out.write("claw none\n" if claw is None else "claw " + " ".join(map(str, claw)) + "\n")
    k4 = find_k4(s)
    out.write("k4 none\n" if k4 is None else "k4 " + " ".join(map(str, k4)) + "\n")
    diamonds = find_diamonds(s)
    small = sum(d.is_small for d in diamonds)
    odd = sum(is_odd_diamond(s, d) for d in diamonds)
    out.write(f"diamonds {len(diamonds)} small {small} large {len(diamonds) - small} odd {odd}\n")
    rings = enumerate_odd_rings(h)
    out.write(f"odd_rings {len(rings)}\n")
    out.write(f"delta {h.max_degree()}\n")
    out.write(f"gamma_prime {format_rational(gamma_prime(h))}\n")
    out.write(f"kappa {kappa_edge(h)}\n")
    try:
        cert = find_odd_c5p(h, _budget(args))
    except BudgetExceeded:
        out.write("odd_c5plus unknown\n")
    else:
        out.write("odd_c5plus absent\n" if cert is None else f"odd_c5plus found {cert.format()}\n")
    comps = s.components()
    if len(comps) == 1:
        k = recognize_square_of_circuit(s)
        out.write("square_of_circuit none\n" if k is None else f"square_of_circuit k={k}\n")
    else:
        out.write("square_of_circuit none\n")
    return EXIT_OK


def cmd_gen(args, out: TextIO, stdin: TextIO) -> int:
    name, params = args.family, args.params
    expected = {"c5plus": 0, "petersen": 0, "hm": 1, "square": 1, "ring": 2}
    if name not in expected:
        raise GraphInputError(f"unknown family {name!r}")
    if len(params) != expected[name]:
        raise GraphInputError(f"{name} takes {expected[name]} integer parameter(s)")
    try:
        p = [int(x) for x in params]
    except ValueError:
        raise GraphInputError(f"non-integer parameter in {params}") from None
    g = {
        "c5plus": lambda: c5_plus(),
        "petersen": lambda: petersen(),
        "hm": lambda: h_m(p[0]),
        "square": lambda: square_of_circuit(p[0]),
        "ring": lambda: odd_ring(p[0], p[1]),
    }[name]()
    out.write(format_edge_list(g))
    return EXIT_OK


def cmd_oracle(args, out: TextIO, stdin: TextIO) -> int:
    g = _load_graph(args.file, stdin)
    if args.quantity == "chi-prime":
        out.write(f"chi_prime {brute_chi_prime(g, _budget(args))}\n")
    else:
        _require_simple(g, "oracle chi")
        c = _load_weights(args.weights, g.n, stdin)
        out.write(f"chi {brute_chi_weighted(g, c, _budget(args))}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="roundup", description="Multigraph edge coloring and weighted vertex coloring."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, file_arg: bool = True):
        p = sub.add_parser(name, help=help_text)
        if file_arg:
            p.add_argument("file", help="edge-list file, or - for stdin")
        p.add_argument("--max-nodes", type=int, default=5_000_000)
        p.add_argument("--max-seconds", type=float, default=None)
        p.set_defaults(func=func)
        return p

    add("edge-color", cmd_edge_color, "edge-color a multigraph")
    p = add("chi-index", cmd_chi_index, "print Delta, Gamma' and kappa")
    p.add_argument("--oracle", action="store_true", help="also run the exact search")
    p = add("vertex-color", cmd_vertex_color, "weighted vertex coloring")
    p.add_argument("--weights", required=True, help="weight file, - or 'ones'")
    p.add_argument("--line-root", help="root multigraph; the graph must be its line graph")
    p.add_argument("--oracle", action="store_true", help="also run the exact search")
    add("line-graph", cmd_line_graph, "print the line graph")
    add("root-graph", cmd_root_graph, "reconstruct a root graph")
    add("analyze", cmd_analyze, "report structural features")
    p = add("gen", cmd_gen, "generate a named graph", file_arg=False)
    p.add_argument("family", help="c5plus | hm M | petersen | square N | ring L MULT")
    p.add_argument("params", nargs="*")
    p = add("oracle", cmd_oracle, "exact values by exhaustive search", file_arg=False)
    p.add_argument("quantity", choices=["chi-prime", "chi"])
    p.add_argument("file")
    p.add_argument("--weights", default="ones")
    return parser


def run(
    argv: Sequence[str] | None = None,
    stdout: TextIO | None = None,
    stdin: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    inp = stdin or sys.stdin
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out, inp)
    except GraphInputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except RejectedInput as exc:
        out.write(f"witness {exc.witness.format()}\n")
        return EXIT_REJECTED
    except BudgetExceeded as exc:
        err.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())
