"""Edge-color a seeded random corpus and compare palette, kappa and brute force.

    python3 scripts/roundup_corpus.py --count 500 --max-vertices 7
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass, fields

from roundup.bounds import kappa_edge
from roundup.corpus import MultigraphCorpusConfig, odd_c5p_free_corpus
from roundup.edge_color import DegreeCertificate, OddRingCertificate, color_edges
from roundup.oracle import brute_chi_prime


@dataclass(frozen=True)
class RunConfig:
    corpus: MultigraphCorpusConfig = MultigraphCorpusConfig()
    brute: bool = True


def run(cfg: RunConfig) -> Counter:
    stats: Counter = Counter()
    start = time.perf_counter()
    for h in odd_c5p_free_corpus(cfg.corpus):
        res = color_edges(h, debug=True)
        stats["graphs"] += 1
        stats["palette==kappa"] += res.palette == kappa_edge(h)
        if cfg.brute:
            stats["palette==brute"] += res.palette == brute_chi_prime(h)
        for cert in res.certificates:
            if isinstance(cert, OddRingCertificate):
                stats["ring certificates"] += 1
                stats["identity violations"] += not cert.identity_holds
            elif isinstance(cert, DegreeCertificate):
                stats["degree certificates"] += 1
    stats["seconds"] = round(time.perf_counter() - start, 2)
    return stats


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(MultigraphCorpusConfig):
        parser.add_argument("--" + f.name.replace("_", "-"), type=int, default=f.default)
    parser.add_argument("--no-brute", action="store_true")
    args = parser.parse_args()
    corpus = MultigraphCorpusConfig(
        **{f.name: getattr(args, f.name) for f in fields(MultigraphCorpusConfig)}
    )
    stats = run(RunConfig(corpus, brute=not args.no_brute))
    for key, value in stats.items():
        print(f"{key:22} {value}")


if __name__ == "__main__":
    main()
