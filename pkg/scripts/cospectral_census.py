"""How many connected graphs on n vertices share their normalized-Laplacian
spectrum with another one? Groups graphs by exact fingerprint.

    python scripts/cospectral_census.py --max-n 8
"""

from __future__ import annotations

import argparse
import json
from collections import defaultdict

from nlspec.enumeration import EnumFilter, enumerate_graphs
from nlspec.spectral import fingerprint, trace_moments


def census(n: int) -> dict:
    # bucket by exact spectral moments first, fingerprint only inside buckets
    buckets = defaultdict(list)
    for cg in enumerate_graphs(EnumFilter(n, connected_only=True)):
        buckets[trace_moments(cg.graph)].append(cg)
    classes = defaultdict(list)
    total = 0
    for group in buckets.values():
        total += len(group)
        if len(group) == 1:
            continue
        for cg in group:
            classes[fingerprint(cg.graph)].append(cg.g6)
    shared = [sorted(v) for v in classes.values() if len(v) > 1]
    return {
        "n": n,
        "connected_graphs": total,
        "graphs_with_mate": sum(len(s) for s in shared),
        "cospectral_families": sorted(shared),
    }


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--families", action="store_true", help="print the families, not just counts")
    args = ap.parse_args(argv)
    for n in range(2, args.max_n + 1):
        res = census(n)
        if not args.families:
            res.pop("cospectral_families")
        print(json.dumps(res))


if __name__ == "__main__":
    main()
