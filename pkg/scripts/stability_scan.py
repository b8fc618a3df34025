#!/usr/bin/env python3
"""Depth-stability scan for generated rings.

Recomputes the chain group of each generated catalog ring at increasing
exploration depths and prints when the answer stops changing.  Useful for
choosing a default depth and for spotting rings whose structure is still
settling at a given truncation.

Usage: python scripts/stability_scan.py [--max-depth N]
"""

import argparse
import time

import fusionrings as fr


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-depth", type=int, default=7)
    args = ap.parse_args()

    rings = {
        "su2": fr.su2_ring(),
        "so3": fr.so3_ring(),
        "au2": fr.au_word_ring(2),
        "z": fr.z_group_ring(),
    }
    for name, ring in rings.items():
        print(f"== {name}")
        for depth in range(2, args.max_depth + 1):
            start = time.monotonic()
            _, desc = fr.chain_group(ring, depth)
            elapsed = time.monotonic() - start
            label = desc.name or f"order {desc.order}"
            print(f"  depth {depth}: {label:8s} [{desc.flag}]  {elapsed:.2f}s")


if __name__ == "__main__":
    main()
