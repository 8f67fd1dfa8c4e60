"""Flip graphs of convex n-gons: sizes, degrees, cycle ranks and embedding checks."""

from __future__ import annotations

import argparse
import time

from pachner.flipgraph import convex_polygon, cycle_words, flip_graph, verify_embedding


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--verify-up-to", type=int, default=7)
    args = ap.parse_args()
    print(f"{'n':>3} {'vertices':>8} {'edges':>6} {'cycles':>6} {'verified':>8} {'seconds':>8}")
    for n in range(4, args.max_n + 1):
        t0 = time.perf_counter()
        g = flip_graph(convex_polygon(n))
        ok = verify_embedding(g) if n <= args.verify_up_to else None
        dt = time.perf_counter() - t0
        shown = "-" if ok is None else str(ok)
        print(f"{n:>3} {len(g.vertices):>8} {len(g.edges):>6} {len(cycle_words(g)):>6} {shown:>8} {dt:>8.2f}")


if __name__ == "__main__":
    main()
