#!/usr/bin/env python3
"""Scan small corpora for edge cases of the gf-versus-Af comparison.

Reports, over all connected graphs with a perfect matching on up to
--n-max vertices (labeled): how often gf < Af, gf = Af, gf > Af, split by
membership in the no-two-disjoint-odd-cycles class, and shows the first
examples outside the class where gf >= Af still holds (the implication
only runs one way, so such graphs are expected to exist).

Usage: python3 scripts/scan_counterexamples.py [--n-max 6] [--limit 5]
"""

import argparse
from collections import Counter

from matchforce.analysis import GraphAnalysis
from matchforce.families import enumerate_corpus, write_graph6


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--limit", type=int, default=5, help="examples to print")
    args = parser.parse_args()

    tally = Counter()
    shown = 0
    for g in enumerate_corpus(args.n_max, require_pm=True, require_connected=True):
        a = GraphAnalysis(g)
        side = "inside" if a.in_class_g else "outside"
        cmp = "lt" if a.gf < a.max_anti_forcing else ("eq" if a.gf == a.max_anti_forcing else "gt")
        tally[(side, cmp)] += 1
        if side == "outside" and cmp != "lt" and shown < args.limit:
            shown += 1
            print(
                f"outside class, gf >= Af: {write_graph6(g)}  "
                f"gf={a.gf} Af={a.max_anti_forcing}"
            )
    print()
    for (side, cmp), count in sorted(tally.items()):
        print(f"{side:8} gf {cmp} Af: {count}")
    inside_lt = tally[("inside", "lt")]
    print()
    print(f"graphs inside the class with gf < Af: {inside_lt} (must be 0)")


if __name__ == "__main__":
    main()
