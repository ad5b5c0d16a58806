"""Weighted coloring of the t-perfect claw-free fixtures against the formula and brute force.

    python3 scripts/weighted_corpus.py --cap 200 --max-weight 3
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from roundup.bounds import chi_weighted_formula
from roundup.corpus import tperfect_clawfree_corpus, weight_vectors
from roundup.oracle import brute_chi_weighted
from roundup.vertex_color import DiamondStep, color_tperfect_clawfree, verify_vertex_coloring


@dataclass(frozen=True)
class WeightedConfig:
    cap: int = 200
    max_weight: int = 3
    seed: int = 11


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--cap", type=int, default=WeightedConfig.cap)
    parser.add_argument("--max-weight", type=int, default=WeightedConfig.max_weight)
    parser.add_argument("--seed", type=int, default=WeightedConfig.seed)
    args = parser.parse_args()
    cfg = WeightedConfig(args.cap, args.max_weight, args.seed)
    values = tuple(range(cfg.max_weight + 1))
    print(f"{'graph':22} {'vectors':>7} {'agree':>5} {'swaps':>5} {'modes'}")
    for name, g in tperfect_clawfree_corpus().items():
        agree = total = swaps = 0
        modes: Counter = Counter()
        for c in weight_vectors(g.n, cfg.cap, cfg.seed, values):
            col, trace = color_tperfect_clawfree(g, c)
            total += 1
            ok = verify_vertex_coloring(g, c, col)
            agree += bool(ok) and len(col) == chi_weighted_formula(g, c) == brute_chi_weighted(g, c)
            for step in trace.steps:
                if isinstance(step, DiamondStep):
                    modes[step.mode] += 1
                    swaps += step.swaps
        print(f"{name:22} {total:>7} {agree:>5} {swaps:>5} {dict(modes)}")


if __name__ == "__main__":
    main()
