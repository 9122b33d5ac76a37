"""Tabulate DS verification of F_{p,q} for every pq+1 <= max_n.

    python scripts/reproduce_theorem.py --max-n 9 --out theorem.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from nlspec.ds import FingerprintCache, verify_ds


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--out", default=None, help="CSV path (default stdout)")
    ap.add_argument("--cache", default=None)
    ap.add_argument("--threads", type=int, default=None)
    args = ap.parse_args(argv)

    cache = FingerprintCache(args.cache) if args.cache else None
    rows = []
    for n in range(2, args.max_n + 1):
        for p in range(1, n):
            if (n - 1) % p:
                continue
            q = (n - 1) // p
            t0 = time.perf_counter()
            r = verify_ds(p, q, max_n=args.max_n, workers=args.threads, cache=cache)
            rows.append({
                "p": p, "q": q, "n": n, "search_space": r.search_space, "mates": len(r.mates),
                "determined": r.determined, "predicted": r.predicted, "agrees": r.agrees,
                "seconds": round(time.perf_counter() - t0, 2),
            })
            print(f"F_{{{p},{q}}} n={n}: determined={r.determined} mates={len(r.mates)} "
                  f"over {r.search_space}", file=sys.stderr)

    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.DictWriter(fh, fieldnames=list(rows[0]))
    w.writeheader()
    w.writerows(rows)
    if args.out:
        fh.close()
    return 0 if all(r["agrees"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
