#!/usr/bin/env python3
"""Fuzz the Smith normal form against the independent reduction and
determinantal-divisor oracles, and check the transform identities."""

import argparse
import random
import sys
import time

from groupcover.snf import (
    determinantal_divisor_diagonal,
    mat_det,
    mat_mul,
    smith_diagonal_reference,
    smith_normal_form,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cases", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=20260810)
    parser.add_argument("--max-dim", type=int, default=4)
    parser.add_argument("--max-entry", type=int, default=3)
    parser.add_argument(
        "--minors-up-to",
        type=int,
        default=1500,
        help="cases also checked against the minor-gcd oracle",
    )
    args = parser.parse_args()

    rng = random.Random(args.seed)
    start = time.monotonic()
    failures = 0
    for i in range(args.cases):
        m = rng.randint(1, args.max_dim)
        n = rng.randint(1, args.max_dim)
        a = [
            [rng.randint(-args.max_entry, args.max_entry) for _ in range(n)]
            for _ in range(m)
        ]
        result = smith_normal_form(a)
        diag = list(result.diagonal)
        u = [list(r) for r in result.u]
        v = [list(r) for r in result.v]
        ok = (
            diag == smith_diagonal_reference(a)
            and mat_mul(mat_mul(u, a), v) == [list(r) for r in result.d]
            and abs(mat_det(u)) == 1
            and abs(mat_det(v)) == 1
            and (i >= args.minors_up_to or diag == determinantal_divisor_diagonal(a))
        )
        if not ok:
            failures += 1
            print(f"FAIL on {a} -> {diag}")
    elapsed = time.monotonic() - start
    print(f"{args.cases} cases, {failures} failures, {elapsed:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
