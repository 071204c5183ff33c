#!/usr/bin/env python3
"""Tabulate isomorphism classes of the dihedral smash products over a grid of
(m, n), with the parity-based predicted count, and optionally cross-check the
arithmetic criterion against the brute-force morphism oracle."""

import argparse
import itertools
import time

from taftsmash import (classify, predicted_class_count, parameter_pairs,
                       dihedral_smash_spec, are_isomorphic, oracle_isomorphic)
from taftsmash.cyclofield import CyclotomicField
import math


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, nargs="+", default=[2, 3, 4, 5])
    parser.add_argument("--n", type=int, nargs="+", default=[3, 4, 5])
    parser.add_argument("--oracle", action="store_true",
                        help="cross-check each verdict against the brute-force "
                             "oracle (slow)")
    args = parser.parse_args()

    print("  m   n  classes  predicted  representatives")
    for m, n in itertools.product(args.m, args.n):
        res = classify(m, n)
        predicted = predicted_class_count(m, n)
        reps = ", ".join(f"({b},{s})" for b, s in res.representatives)
        flag = "" if res.count == predicted else "  MISMATCH"
        print(f"{m:>3} {n:>3}  {res.count:>7}  {predicted:>9}  {reps}{flag}")

        if args.oracle:
            field = CyclotomicField(math.lcm(2, m, n))
            start = time.perf_counter()
            for pa, pb in itertools.product(parameter_pairs(m, n, field),
                                            repeat=2):
                sa = dihedral_smash_spec(m, n, *pa)
                sb = dihedral_smash_spec(m, n, *pb)
                fast = are_isomorphic(sa, sb, field) is not None
                slow = oracle_isomorphic(sa, sb, field) is not None
                if fast != slow:
                    print(f"    ORACLE DISAGREES at {pa} vs {pb}")
            print(f"    oracle sweep done in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
