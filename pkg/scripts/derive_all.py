#!/usr/bin/env python3
"""Derive and print the closed form of W_(a,b) for every supported level.

For each level the provider resolves a basis (embedded table or certified
repair), derives the formula for every coprime split, verifies it against
the direct sum to n=200, and prints the exact coefficients.

Usage: python scripts/derive_all.py [--levels 10,11,...] [--verify N]
"""

import argparse
import sys
import time

from divconv.arith import coprime_pairs
from divconv.cache import encode_rational
from divconv.convolution import FormulaProvider, brute_force_W, evaluate_W
from divconv.fixtures import FIXTURE_LEVELS


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--levels", default=",".join(str(n) for n in FIXTURE_LEVELS))
    ap.add_argument("--verify", type=int, default=200)
    args = ap.parse_args()
    levels = [int(x) for x in args.levels.split(",")]
    provider = FormulaProvider(verify_to=args.verify)
    for N in levels:
        for a, b in [(x, y) for x, y in coprime_pairs(N) if x < y]:
            t0 = time.time()
            f, basis = provider.formula(a, b)
            ok = all(
                evaluate_W(f, basis, n) == brute_force_W(a, b, n)
                for n in range(1, args.verify + 1)
            )
            origin = provider.notes.get(N, {}).get("basis", "?")
            print(
                f"W_({a},{b})  level {N}  basis={origin}  "
                f"verified<= {f.verified_to}  oracle<= {args.verify}: "
                f"{'ok' if ok else 'MISMATCH'}  [{time.time() - t0:.1f}s]"
            )
            for d in sorted(f.x):
                c = f.sigma3_coefficient(d)
                if c:
                    print(f"    {encode_rational(c):>18} * sigma3(n/{d})")
            print(f"    (1/24 - n/{4 * b}) sigma(n/{a}) + (1/24 - n/{4 * a}) sigma(n/{b})")
            for j in range(len(f.y)):
                c = f.cusp_coefficient(j)
                if c:
                    print(f"    {encode_rational(c):>18} * b_{j + 1}(n)  [{basis.cusp[j].describe()}]")
            if not ok:
                return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
