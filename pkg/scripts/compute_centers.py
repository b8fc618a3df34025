#!/usr/bin/env python3
"""Survey the catalog: chain group / center of every built-in ring.

Usage: python scripts/compute_centers.py [--depth N]
"""

import argparse

import fusionrings as fr


def catalog(depth):
    yield "Z2 group ring", fr.group_ring(fr.cyclic_group(2)), None
    yield "Z3 group ring", fr.group_ring(fr.cyclic_group(3)), None
    yield "Z4 group ring", fr.group_ring(fr.cyclic_group(4)), None
    yield "Klein group ring", fr.group_ring(fr.klein_group()), None
    yield "S3 group ring", fr.group_ring(fr.s3_group()), None
    yield "character ring of S3", fr.rep_s3_ring(), None
    yield "character ring of Z4", fr.rep_z4_ring(), None
    yield "rank-2 self-dual tower (SU(2) fusion)", fr.su2_ring(), depth
    yield "odd-dimensional tower (SO(3) fusion)", fr.so3_ring(), depth
    yield "free-unitary word ring", fr.au_word_ring(2), depth
    yield "Z group ring (circle dual)", fr.z_group_ring(), depth


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--depth", type=int, default=6)
    args = ap.parse_args()

    for name, ring, depth in catalog(args.depth):
        if depth is None:
            _, desc = fr.chain_group(ring)
        else:
            _, desc = fr.chain_group(ring, depth)
        label = desc.name or f"order {desc.order}"
        print(f"{name:45s} center group: {label:10s} [{desc.flag}]")


if __name__ == "__main__":
    main()
