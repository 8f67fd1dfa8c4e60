"""Trace the loop around six co-spherical points and compare with the hexagon relator."""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

from pachner.dynamics import perturb, trace_events
from pachner.gale import enumerate_standard_diagrams
from pachner.groups import gon_relator, presentation, psi
from pachner.io import format_letter, format_word
from pachner.scenes import hexagon_loop, wandering_point_loop
from pachner.words import cyclically_equal, free_reduce


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--eps", default="1/20", help="half side of the square loop")
    ap.add_argument("--turns", type=int, default=1)
    ap.add_argument("--perturb", type=int, metavar="SEED", help="jitter the breakpoints first")
    ap.add_argument("--seven", action="store_true", help="trace the seven-point scene instead")
    args = ap.parse_args()

    traj = wandering_point_loop() if args.seven else hexagon_loop(Fraction(args.eps), args.turns)
    if args.perturb is not None:
        traj = perturb(traj, args.perturb)
    t0 = time.perf_counter()
    events = trace_events(traj)
    dt = time.perf_counter() - t0
    for e in events:
        lo, hi = e.bracket
        what = format_letter(e.letter) if e.letter else "boundary"
        print(f"t in [{float(lo):.10f}, {float(hi):.10f}]  {what}")
    w = tuple(e.letter for e in events if e.letter)
    print("word:", format_word(w))
    print("free reduction length:", len(free_reduce(w)))
    print("psi zero:", psi(w, traj.n, traj.dim).is_zero())
    pres = presentation(traj.n, traj.dim + 2)
    print("Z2 image in relator span:", pres.ab_basis().contains(pres.ab_row(w)))
    if not args.seven and traj.n == 6:
        for t in range(len(enumerate_standard_diagrams(6))):
            M = (1, 3, 4, 6, 5, 2)
            if cyclically_equal(w, gon_relator(t, M, 6)):
                print(f"matches diagram {t} relator on labels {M}")
    widest = max((hi - lo for lo, hi in (e.bracket for e in events)), default=0)
    print(f"traced in {dt:.2f}s, widest bracket {float(widest):.3g}")


if __name__ == "__main__":
    main()
