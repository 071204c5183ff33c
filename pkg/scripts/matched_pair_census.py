#!/usr/bin/env python3
"""Run the exhaustive matched-pair search for a list of (m, l, n, k) shapes
and compare each survivor count with the closed form l * gcd(n, k-1)."""

import argparse
import time

from taftsmash import MetacyclicSpec, TaftSpec, SearchContext, run_census
from taftsmash.pairsearch import DEFAULT_MAX_CANDIDATES

DEFAULT_SHAPES = [(2, 2, 3, 2), (2, 2, 4, 3), (3, 2, 3, 2)]


def parse_shape(text: str) -> tuple[int, int, int, int]:
    parts = tuple(int(p) for p in text.split(","))
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("shape must be m,l,n,k")
    return parts


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("shapes", nargs="*", type=parse_shape,
                        default=DEFAULT_SHAPES, metavar="m,l,n,k")
    parser.add_argument("--max-candidates", type=int,
                        default=DEFAULT_MAX_CANDIDATES)
    args = parser.parse_args()

    for m, l, n, k in args.shapes:
        start = time.perf_counter()
        ctx = SearchContext(MetacyclicSpec(l=l, n=n, k=k), TaftSpec(m=m))
        res = run_census(ctx, max_candidates=args.max_candidates)
        elapsed = time.perf_counter() - start
        verdict = "match" if res.count == res.expected_count else "MISMATCH"
        print(f"(m,l,n,k)=({m},{l},{n},{k})  N={ctx.field.n}  "
              f"candidates={res.candidate_total}  "
              f"survivors={res.survivors}  "
              f"expected={res.expected_count}  {verdict}  [{elapsed:.1f}s]")


if __name__ == "__main__":
    main()
