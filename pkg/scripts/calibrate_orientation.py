"""Z2 ranks of the oriented (6,5) presentation under each orientation policy.

The test word is a_{35,164} a_{46,253}^-1 a_{46,135} a_{35,246}^-1 read with
the written orders. Expected for the calibrated policy: 90, then 91.
"""

from __future__ import annotations

import time

from pachner.groups import POLICIES, abelianization_rank_z2, policy_letter, presentation

W_SEQS = [((3, 5), (1, 6, 4), 1), ((4, 6), (2, 5, 3), -1), ((4, 6), (1, 3, 5), 1), ((3, 5), (2, 4, 6), -1)]


def main() -> None:
    for policy in POLICIES:
        t0 = time.perf_counter()
        pres = presentation(6, 5, "oriented", policy)
        w = [policy_letter(P, Q, e, policy) for P, Q, e in W_SEQS]
        before = abelianization_rank_z2(pres)
        after = abelianization_rank_z2(pres, [w])
        print(
            f"{policy:>10}: generators={len(pres.generators)} relators={pres.count_gon_relators()} "
            f"rank={before} with w={after}  [{time.perf_counter() - t0:.2f}s]"
        )


if __name__ == "__main__":
    main()
