#!/usr/bin/env python3
"""Cross-check the core-based minimality classifier against brute force.

For every partition up to --max-size and every delta in the range, the
fast is_minimal (no balanced removable skew confined to the stripped
core) is compared with the definitional search over all balanced proper
subpartitions.  Any divergence is printed; none is expected.
"""

import argparse
import sys
import time

from brauerblocks.blocks import is_balanced, is_minimal
from brauerblocks.partitions import EMPTY, Partition, partitions_of, subpartitions


def brute_minimal(lam: Partition, delta: int) -> bool:
    for mu in subpartitions(lam):
        if mu == lam:
            continue
        if delta == 0 and mu == EMPTY:
            continue
        if is_balanced(lam, mu, delta):
            return False
    return True


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=10)
    ap.add_argument("--deltas", type=int, nargs="+",
                    default=[-2, -1, 0, 1, 2, 3])
    args = ap.parse_args()

    t0 = time.time()
    checked, bad = 0, []
    for k in range(args.max_size + 1):
        for lam in partitions_of(k):
            for delta in args.deltas:
                fast = is_minimal(lam, delta)
                slow = brute_minimal(lam, delta)
                checked += 1
                if fast != slow:
                    bad.append((lam, delta, fast, slow))
                    print(f"DIVERGENCE {lam} delta={delta}: "
                          f"classifier {fast}, brute force {slow}")
    print(f"{checked} cases in {time.time() - t0:.1f}s, "
          f"{len(bad)} divergences")
    return 0 if not bad else 1


if __name__ == "__main__":
    sys.exit(main())
