"""Tabulate Delta, Gamma', kappa, the palette and (optionally) brute force on H_m.

    python3 scripts/hm_family.py --max-m 6 --brute-up-to 3
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from roundup.bounds import format_rational, gamma_prime, kappa_edge
from roundup.edge_color import color_edges
from roundup.oracle import brute_chi_prime
from roundup.structure import h_m


@dataclass(frozen=True)
class HmConfig:
    max_m: int = 6
    brute_up_to: int = 3


def rows(cfg: HmConfig):
    for m in range(1, cfg.max_m + 1):
        h = h_m(m)
        res = color_edges(h, debug=True)
        brute = brute_chi_prime(h) if m <= cfg.brute_up_to else None
        yield m, h.max_degree(), gamma_prime(h), kappa_edge(h), res.palette, res.optimal, brute


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-m", type=int, default=HmConfig.max_m)
    parser.add_argument("--brute-up-to", type=int, default=HmConfig.brute_up_to)
    args = parser.parse_args()
    print(f"{'m':>3} {'delta':>5} {'gamma_prime':>11} {'kappa':>5} {'palette':>7} {'optimal':>7} {'brute':>5}")
    for m, delta, gp, kappa, palette, optimal, brute in rows(HmConfig(args.max_m, args.brute_up_to)):
        print(f"{m:>3} {delta:>5} {format_rational(gp):>11} {kappa:>5} {palette:>7} "
              f"{str(optimal).lower():>7} {'-' if brute is None else brute:>5}")


if __name__ == "__main__":
    main()
