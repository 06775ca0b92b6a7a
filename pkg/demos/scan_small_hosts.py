"""Exhaustive density scans against 2^-a(H) on all tournaments up to n vertices."""

import sys

from tourney_sandwich.graph_core import build_path
from tourney_sandwich.hom_engine import anti_sidorenko_scan

n = int(sys.argv[1]) if len(sys.argv) > 1 else 6

for blocks in [(2,), (3,), (1, 2), (2, 2), (1, 3, 3, 1), (1, 1)]:
    rep = anti_sidorenko_scan(build_path(blocks), n)
    verdict = "ok" if rep.verdict else "VIOLATED"
    print(
        f"P{blocks}: max t = {rep.max_density} at n={rep.argmax_n} bits={rep.argmax_bits}, "
        f"bound {rep.bound}: {verdict} ({rep.hosts_scanned} hosts)"
    )
