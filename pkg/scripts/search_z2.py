"""Exhaustive (lambda, eta) search on (Z_n, Z_m) with timing."""

import argparse
import time

from anncat.algebra import make_zn, zn_bimodule
from anncat.config import DEFAULT_CAPS
from anncat.presentation import from_rm
from anncat.report import to_json
from anncat.search import search


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    R = make_zn(args.n)
    M = zn_bimodule(R, args.m)
    t = time.perf_counter()
    res = search(R, M, DEFAULT_CAPS.override(workers=args.workers))
    dt = time.perf_counter() - t
    if args.json:
        print(to_json(res.to_dict(from_rm(R, M))), end="")
        return
    print(f"(Z{args.n}, Z{args.m}): {res.candidates} candidates, {res.count} valid, {dt:.2f} s")
    for name, k in sorted(res.rejected_by.items(), key=lambda kv: -kv[1]):
        print(f"  {k:6d} first rejected by {name}")


if __name__ == "__main__":
    main()
