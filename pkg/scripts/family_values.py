#!/usr/bin/env python3
"""Tabulate gf / Af / F / Phi for the built-in graph families.

Closed forms printed alongside: complete graphs K_{2n} have gf = 2(n-1)^2 and
Af = n^2 - n; balanced complete bipartite graphs have gf = n^2 - 2n + 1; the
minus-one-edge variant has gf = n^2 - 2n - 1 and Af = (n-2)(n+1)/2 for
n >= 4; prism chains have gf = 3k - 1 and Af = 4k - 1.

Usage: python3 scripts/family_values.py [--max-seconds S]
"""

import argparse
import time

from matchforce.families import FamilySpec, generate
from matchforce.forcing import forcing_summary
from matchforce.graph import count_perfect_matchings

CASES = [
    ("complete", (2,), 0, 0),
    ("complete", (4,), 2, 2),
    ("complete", (6,), 8, 6),
    ("complete_bipartite", (2,), 1, 1),
    ("complete_bipartite", (3,), 4, 3),
    ("complete_bipartite", (4,), 9, 6),
    ("complete_bipartite_minus_edge", (4,), 7, 5),
    ("prism_chain", (1,), 2, 3),
    ("prism_chain", (2,), 5, 7),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-seconds", type=float, default=120.0)
    args = parser.parse_args()

    print(f"{'family':36} {'n':>3} {'e':>3} {'phi':>5} {'F':>3} {'gf':>4} {'Af':>4}  formula")
    start = time.perf_counter()
    for name, params, want_gf, want_af in CASES:
        if time.perf_counter() - start > args.max_seconds:
            print("time budget reached, stopping")
            break
        g = generate(FamilySpec(name, params))
        s = forcing_summary(g)
        phi = count_perfect_matchings(g)
        tag = "ok" if (s.gf, s.af_max) == (want_gf, want_af) else "MISMATCH"
        label = f"{name}:{','.join(map(str, params))}"
        print(
            f"{label:36} {g.n:>3} {g.e:>3} {phi:>5} {s.f_max:>3} {s.gf:>4} {s.af_max:>4}"
            f"  gf={want_gf} Af={want_af} [{tag}]"
        )


if __name__ == "__main__":
    main()
