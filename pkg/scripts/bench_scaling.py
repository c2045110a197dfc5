#!/usr/bin/env python3
"""Scaling smoke for the per-position tables on random binary words.

Times index construction and the four table computations across doubling
word lengths, and prints per-doubling time ratios.  Near-linear passes
stay around 2x per doubling; the O(n log n) table may drift higher.
"""

import argparse
import random
import time
from dataclasses import dataclass

from gapped.basicfactors import build_dbf
from gapped.boundedgap import lpf_bounded, lprf_bounded
from gapped.positionalgap import lpf_positional, lprf_positional
from gapped.textcore import build_index


@dataclass(frozen=True)
class ScalingConfig:
    sizes: tuple
    seed: int
    window_div: int = 4


def measure(cfg: ScalingConfig):
    rng = random.Random(cfg.seed)
    rows = []
    for n in cfg.sizes:
        w = "".join(rng.choice("ab") for _ in range(n))
        t0 = time.perf_counter()
        idx = build_index(w)
        idx._combined()
        dbf = build_dbf(idx)
        built = time.perf_counter() - t0
        gapfn = [1] * n
        cell = {"n": n, "build": built}
        for name, call in (
            ("lprf_bounded", lambda: lprf_bounded(idx, 0, n // cfg.window_div)),
            ("lpf_bounded", lambda: lpf_bounded(idx, dbf, 0, n // cfg.window_div)),
            ("lprf_positional", lambda: lprf_positional(idx, gapfn)),
            ("lpf_positional", lambda: lpf_positional(idx, gapfn)),
        ):
            t0 = time.perf_counter()
            call()
            cell[name] = time.perf_counter() - t0
        rows.append(cell)
        del idx, dbf
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="262144,524288,1048576,2097152",
                    help="comma-separated word lengths")
    ap.add_argument("--seed", type=int, default=20240601)
    args = ap.parse_args()
    cfg = ScalingConfig(sizes=tuple(int(s) for s in args.sizes.split(",")),
                        seed=args.seed)
    rows = measure(cfg)
    ops = ("build", "lprf_bounded", "lpf_bounded",
           "lprf_positional", "lpf_positional")
    print("n\t" + "\t".join(ops))
    for row in rows:
        print(str(row["n"]) + "\t" +
              "\t".join(f"{row[op]:.3f}" for op in ops))
    if len(rows) > 1:
        print("\nper-doubling ratios")
        for op in ops:
            ratios = [rows[k + 1][op] / rows[k][op] for k in range(len(rows) - 1)]
            print(op + "\t" + "\t".join(f"{r:.2f}" for r in ratios))


if __name__ == "__main__":
    main()
