"""Standard Gale diagram counts: enumeration against the closed formula."""

from __future__ import annotations

import argparse
import time

from pachner.gale import count_standard_diagrams, enumerate_standard_diagrams


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=12)
    args = ap.parse_args()
    print(f"{'l':>3} {'enumerated':>10} {'formula':>8} {'seconds':>8}")
    for l in range(5, args.max_order + 1):
        t0 = time.perf_counter()
        n = len(enumerate_standard_diagrams(l))
        dt = time.perf_counter() - t0
        f = count_standard_diagrams(l)
        print(f"{l:>3} {n:>10} {f:>8} {dt:>8.2f}" + ("" if n == f else "  MISMATCH"))


if __name__ == "__main__":
    main()
