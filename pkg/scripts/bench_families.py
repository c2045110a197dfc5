#!/usr/bin/env python3
"""Time every solver family on random, fibonacci, and periodic-block words.

The periodic-block family (aab)^k maximizes the number of maximal
bounded-gap repeats, so it stresses the enumeration-adjacent paths hardest.
"""

import argparse
import random
import time
from dataclasses import dataclass

from gapped.alphagap import longest_alpha
from gapped.basicfactors import build_dbf
from gapped.boundedgap import lpf_bounded, lprf_bounded
from gapped.positionalgap import lpf_positional, lprf_positional
from gapped.textcore import build_index


@dataclass(frozen=True)
class FamilyConfig:
    families: tuple
    sizes: tuple
    seed: int


def make_word(family: str, n: int, rng: random.Random) -> str:
    if family == "random":
        return "".join(rng.choice("ab") for _ in range(n))
    if family == "fibonacci":
        a, b = "a", "ab"
        while len(b) < n:
            a, b = b, b + a
        return b[:n]
    if family == "adversarial":
        return ("aab" * (n // 3 + 1))[:n]
    raise ValueError(f"unknown family {family!r}")


def bench(cfg: FamilyConfig):
    rng = random.Random(cfg.seed)
    print("family\tn\top\tseconds")
    for family in cfg.families:
        for n in cfg.sizes:
            w = make_word(family, n, rng)
            t0 = time.perf_counter()
            idx = build_index(w)
            idx._combined()
            dbf = build_dbf(idx)
            print(f"{family}\t{n}\tbuild\t{time.perf_counter() - t0:.4f}")
            gapfn = [1] * n
            for name, call in (
                ("lprf_bounded", lambda: lprf_bounded(idx, 0, max(1, n // 4))),
                ("lpf_bounded", lambda: lpf_bounded(idx, dbf, 0, max(1, n // 4))),
                ("lprf_positional", lambda: lprf_positional(idx, gapfn)),
                ("lpf_positional", lambda: lpf_positional(idx, gapfn)),
                ("longest_alpha_rep",
                 lambda: longest_alpha(idx, dbf, idx.text, 2, "repeat")),
                ("longest_alpha_pal",
                 lambda: longest_alpha(idx, dbf, idx.text, 2, "palindrome")),
            ):
                t0 = time.perf_counter()
                call()
                print(f"{family}\t{n}\t{name}\t{time.perf_counter() - t0:.4f}")
            del idx, dbf


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--families", default="random,fibonacci,adversarial")
    ap.add_argument("--sizes", default="16384,65536")
    ap.add_argument("--seed", type=int, default=20240601)
    args = ap.parse_args()
    bench(FamilyConfig(families=tuple(args.families.split(",")),
                       sizes=tuple(int(s) for s in args.sizes.split(",")),
                       seed=args.seed))


if __name__ == "__main__":
    main()
