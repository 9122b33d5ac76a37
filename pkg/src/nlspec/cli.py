"""Command-line entry point: ``python -m nlspec <subcommand> ...``.

Exit codes: 0 success, 1 a verification contradicted the expected result,
2 usage or parameter error. Every subcommand prints JSON with ``--json``;
the plain output is a flattened view of the same document.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional

from . import graph6
from .canon import canonical_form
from .ds import (
    DS_DEFAULT_CAP,
    FingerprintCache,
    cycle_mate_report,
    find_cospectral_mates,
    star_mate_report,
    verify_ds,
)
from .enumeration import EnumFilter, count_graphs, enumerate_graphs, import_stream
from .graph import (
    Graph,
    GraphError,
    complete,
    complete_bipartite,
    cycle,
    empty,
    gamma_graph,
    generalized_friendship,
    path,
    star,
)
from .spectral import (
    closed_form_fpq,
    float_spectrum,
    fingerprint,
    fpq_deg_product,
    frac_str,
    group_multiplicities,
    spectrum_to_fingerprint,
)
from .structure import lemma_witness_check, three_eigenvalue_check

CONSTRUCTORS = {
    "complete": (complete, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "empty": (empty, 1),
    "kbip": (complete_bipartite, 2),
    "fpq": (generalized_friendship, 2),
    "gamma": (gamma_graph, 1),
}


class UsageError(Exception):
    pass


def parse_construct(spec: str) -> Graph:
    family, _, rest = spec.partition(":")
    if family not in CONSTRUCTORS:
        raise UsageError(f"--construct: unknown family {family!r} (choose from {', '.join(CONSTRUCTORS)})")
    fn, arity = CONSTRUCTORS[family]
    try:
        params = [int(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise UsageError(f"--construct: parameters must be integers, got {rest!r}") from None
    if len(params) != arity:
        raise UsageError(f"--construct: {family} takes {arity} parameter(s), got {len(params)}")
    try:
        return fn(*params)
    except GraphError as exc:
        raise UsageError(f"--construct: {exc}") from None


def input_graphs(args) -> list[tuple[str, Graph]]:
    """(label, graph) pairs from --graph6 / --construct / --stdin."""
    out = []
    for s in args.graph6 or []:
        try:
            out.append((s, graph6.decode(s)))
        except GraphError as exc:
            raise UsageError(f"--graph6: {exc}") from None
    for c in args.construct or []:
        out.append((c, parse_construct(c)))
    if args.stdin:
        for i, line in enumerate(sys.stdin):
            line = line.strip()
            if not line:
                continue
            try:
                out.append((line, graph6.decode(line)))
            except GraphError as exc:
                raise UsageError(f"--stdin line {i + 1}: {exc}") from None
    if not out:
        raise UsageError("no input graph: give --graph6, --construct or --stdin")
    return out


def single_graph(args) -> tuple[str, Graph]:
    gs = input_graphs(args)
    if len(gs) != 1:
        raise UsageError(f"expected exactly one input graph, got {len(gs)}")
    return gs[0]


def _cache(args) -> Optional[FingerprintCache]:
    path = args.cache or os.environ.get("NLSPEC_CACHE")
    return FingerprintCache(path) if path else None


def _workers(args) -> Optional[int]:
    if args.threads is not None and args.threads < 1:
        raise UsageError(f"--threads must be >= 1, got {args.threads}")
    return args.threads


def _override(args, n: int) -> bool:
    """Enumeration override: --max-n above the default cap of 10."""
    if args.max_n is not None and n > args.max_n:
        raise UsageError(f"--max-n {args.max_n} is below the requested n={n}")
    return args.max_n is not None and args.max_n > 10


def _ds_cap(args) -> int:
    return DS_DEFAULT_CAP if args.max_n is None else args.max_n


def _graph_summary(label: str, g: Graph) -> dict:
    return {"input": label, "g6": graph6.encode(g), "canonical_g6": canonical_form(g).g6,
            "n": g.n, "m": g.m, "degrees": list(g.deg)}


# -- subcommands ------------------------------------------------------------


def cmd_construct(args) -> tuple[dict, int]:
    return {"schema": 1, "graphs": [_graph_summary(lbl, g) for lbl, g in input_graphs(args)]}, 0


def cmd_spectrum(args) -> tuple[dict, int]:
    items = []
    status = 0
    for label, g in input_graphs(args):
        fp = fingerprint(g)
        item = _graph_summary(label, g)
        item["fingerprint"] = fp.to_json()
        item["charpoly"] = [frac_str(c) for c in fp.monic()]
        item["zero_multiplicity"] = fp.zero_multiplicity()
        if label.startswith("fpq:"):
            p, q = (int(x) for x in label[4:].split(","))
            cf = closed_form_fpq(p, q)
            equal = spectrum_to_fingerprint(cf, fpq_deg_product(p, q)) == fp
            item["closed_form"] = cf.to_json()
            item["closed_form_equal"] = equal
            if not equal:
                status = 1
        if args.float:
            vals = float_spectrum(g)
            item["float_spectrum"] = [round(v, 12) + 0.0 for v in vals]
            item["float_grouped"] = [[round(v, 12) + 0.0, m] for v, m in group_multiplicities(vals, args.tol)]
        items.append(item)
    return {"schema": 1, "graphs": items}, status


def cmd_mates(args) -> tuple[dict, int]:
    label, g = single_graph(args)
    n = g.n if args.n is None else args.n
    if n != g.n:
        raise UsageError(f"--n {n} does not match the input graph's {g.n} vertices")
    mates = find_cospectral_mates(g, n, connected_only=not args.all_graphs,
                                  max_n=_ds_cap(args), workers=_workers(args), cache=_cache(args))
    return {"schema": 1, "target": canonical_form(g).g6, "n": n, "connected_only": not args.all_graphs,
            "mates": [m.g6 for m in mates]}, 0


def cmd_verify_ds(args) -> tuple[dict, int]:
    if args.p < 1 or args.q < 1:
        raise UsageError(f"-p and -q must be >= 1, got p={args.p} q={args.q}")
    rep = verify_ds(args.p, args.q, connected_only=not args.all_graphs, max_n=_ds_cap(args),
                    workers=_workers(args), cache=_cache(args))
    return rep.to_json(timing=args.timing), 0 if rep.agrees else 1


def cmd_verify_stars(args) -> tuple[dict, int]:
    ps = args.p or [3, 4, 5]
    for p in ps:
        if p < 3:
            raise UsageError(f"-p must be >= 3, got {p}")
    reports = [star_mate_report(p, max_n=_ds_cap(args), workers=_workers(args), cache=_cache(args))
               for p in ps]
    ok = all(r["matches_p_plus_1_reading"] for r in reports)
    return {"schema": 1, "reports": reports, "ok": ok}, 0 if ok else 1


def cmd_verify_cycles(args) -> tuple[dict, int]:
    ks = args.k or [2]
    for k in ks:
        if k < 2:
            raise UsageError(f"-k must be >= 2 (gamma_4 is undefined), got {k}")
    reports = [cycle_mate_report(k, max_n=_ds_cap(args), workers=_workers(args), cache=_cache(args))
               for k in ks]
    ok = all(r.ok for r in reports)
    return {"schema": 1, "reports": [r.to_json() for r in reports], "ok": ok}, 0 if ok else 1


def cmd_check_three_eig(args) -> tuple[dict, int]:
    if args.q < 2:
        raise UsageError(f"-q must be >= 2, got {args.q}")
    items = []
    for label, g in input_graphs(args):
        if g.n < 2 or not g.is_connected():
            raise UsageError(f"{label}: needs a connected graph on at least 2 vertices")
        items.append({"input": label, "q": args.q, **three_eigenvalue_check(g, args.q).to_json()})
    return {"schema": 1, "results": items}, 0


def cmd_check_witness(args) -> tuple[dict, int]:
    if args.p < 2 or args.q < 2:
        raise UsageError(f"-p and -q must be >= 2, got p={args.p} q={args.q}")
    items = [{"input": label, "p": args.p, "q": args.q, **lemma_witness_check(g, args.p, args.q).to_json()}
             for label, g in input_graphs(args)]
    return {"schema": 1, "results": items}, 0


def _filter(args) -> EnumFilter:
    try:
        return EnumFilter(args.n, connected_only=args.connected, min_degree=args.min_degree,
                          max_degree=args.max_degree)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def cmd_enumerate(args) -> tuple[dict, int]:
    f = _filter(args)
    if args.import_file:
        with open(args.import_file) as fh:
            graphs = import_stream(fh, f)
    else:
        graphs = list(enumerate_graphs(f, override=_override(args, f.n), workers=_workers(args)))
    return {"schema": 1, "n": f.n, "count": len(graphs), "graphs": [g.g6 for g in graphs]}, 0


def cmd_count(args) -> tuple[dict, int]:
    f = _filter(args)
    c = count_graphs(f, override=_override(args, f.n), workers=_workers(args))
    return {"schema": 1, "n": f.n, "connected_only": f.connected_only, "min_degree": f.min_degree,
            "max_degree": f.max_degree, "count": c}, 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default: all cores)")
    common.add_argument("--max-n", type=int, default=None, help="raise the enumeration cap (up to 12)")
    common.add_argument("--cache", default=None, help="fingerprint cache file (else $NLSPEC_CACHE)")
    common.add_argument("-v", "--verbose", action="store_true")

    graphs = argparse.ArgumentParser(add_help=False)
    graphs.add_argument("--graph6", action="append", help="input graph in graph6")
    graphs.add_argument("--construct", action="append", metavar="FAMILY:PARAMS",
                        help="complete:n cycle:n path:n star:p empty:n kbip:r,s fpq:p,q gamma:k")
    graphs.add_argument("--stdin", action="store_true", help="read newline-delimited graph6 from stdin")

    filt = argparse.ArgumentParser(add_help=False)
    filt.add_argument("--n", type=int, required=True)
    filt.add_argument("--connected", action="store_true")
    filt.add_argument("--min-degree", type=int, default=None)
    filt.add_argument("--max-degree", type=int, default=None)

    ap = argparse.ArgumentParser(prog="nlspec", description="exact normalized-Laplacian spectra of small graphs")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common, graphs], help="exact fingerprint and characteristic polynomial")
    p.add_argument("--float", action="store_true", help="also print floating eigenvalues")
    p.add_argument("--tol", type=float, default=1e-9, help="grouping tolerance for --float display")
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("construct", parents=[common, graphs], help="build graphs and print graph6")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("mates", parents=[common, graphs], help="cospectral mates by exhaustive search")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--all-graphs", action="store_true", help="include disconnected candidates")
    p.set_defaults(fn=cmd_mates)

    p = sub.add_parser("verify-ds", parents=[common], help="is F_{p,q} determined by its spectrum")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--all-graphs", action="store_true", help="include disconnected candidates")
    p.add_argument("--timing", action="store_true", help="add elapsed_ms (breaks byte-identical output)")
    p.set_defaults(fn=cmd_verify_ds)

    p = sub.add_parser("verify-stars", parents=[common], help="mates of K_{1,p}")
    p.add_argument("-p", type=int, action="append")
    p.set_defaults(fn=cmd_verify_stars)

    p = sub.add_parser("verify-cycles", parents=[common], help="gamma_{4k} versus C_{4k}")
    p.add_argument("-k", type=int, action="append")
    p.set_defaults(fn=cmd_verify_cycles)

    p = sub.add_parser("check-three-eig", parents=[common, graphs], help="three-eigenvalue equations")
    p.add_argument("-q", type=int, required=True)
    p.set_defaults(fn=cmd_check_three_eig)

    p = sub.add_parser("check-witness", parents=[common, graphs], help="degree witnesses for F_{p,q} mates")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.set_defaults(fn=cmd_check_witness)

    p = sub.add_parser("enumerate", parents=[common, filt], help="list isomorphism classes as graph6")
    p.add_argument("--import", dest="import_file", default=None,
                   help="canonicalize an external graph6 file instead of generating")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("count", parents=[common, filt], help="count isomorphism classes")
    p.set_defaults(fn=cmd_count)
    return ap


def _human(doc: dict, command: str) -> str:
    if command == "enumerate":
        return "\n".join(doc["graphs"])
    lines = []

    def walk(prefix, v):
        if isinstance(v, dict):
            for k, x in v.items():
                walk(f"{prefix}.{k}" if prefix else k, x)
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            for i, x in enumerate(v):
                walk(f"{prefix}[{i}]", x)
        elif isinstance(v, list):
            lines.append(f"{prefix}: {' '.join(str(x) for x in v)}")
        else:
            lines.append(f"{prefix}: {v}")

    walk("", {k: v for k, v in doc.items() if k != "schema"})
    return "\n".join(lines)


def run(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        doc, status = args.fn(args)
    except UsageError as exc:
        print(f"nlspec {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"nlspec {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(doc, sort_keys=False))
    else:
        print(_human(doc, args.command))
    return status


def main() -> None:
    sys.exit(run())
