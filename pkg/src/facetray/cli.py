"""Command-line front end: every subcommand reads JSON files, writes one
JSON document, and is deterministic byte-for-byte for identical inputs.

Exit codes: 0 success, 1 unparseable input, 2 precondition violation.
Numbers are serialized as exact rational strings throughout, so any
emitted certificate can be re-checked exactly.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import ParseError, PreconditionError
from .graphs import Graph, CycleSubgraph, cycle_graph, graph_from_json
from .linalg import (is_psd, rank, rat_to_str, symmat_from_json,
                     symmat_to_json)
from .cutpoly import (all_cut_vectors, cut_from_json, cycle_inequality,
                      facets_k5_free, ineq_from_json, ineq_to_json,
                      is_facet, is_valid, switch)
from .extremal import (certificate_to_json, certify_frip_k5free,
                       delta_matrix, extremal_rank_set_series_parallel,
                       is_extremal, polar_point, respects_pattern,
                       sparsity_order_bounds, _certificate)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _load_graph(path: str) -> Graph:
    return graph_from_json(_load_json(path))


def _sorted_ineqs(ineqs):
    return sorted(ineqs, key=lambda q: (q.alpha, q.b))


def _cmd_cuts(args) -> dict:
    g = _load_graph(args.graph)
    return {
        "p": g.p,
        "edges": [list(e) for e in g.edges],
        "cut_vectors": [
            {"U": sorted(cv.cut), "vector": list(cv.coords)}
            for cv in all_cut_vectors(g)
        ],
    }


def _cmd_facets(args) -> dict:
    g = _load_graph(args.graph)
    facets = _sorted_ineqs(facets_k5_free(g))
    payload = {"count": len(facets),
               "facets": [ineq_to_json(q, g) for q in facets]}
    if args.oracle:
        payload["oracle_verified"] = all(is_facet(g, q) for q in facets)
    return payload


def _parse_subset(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError as exc:
        raise ParseError(f"bad subset {text!r}: expected comma-separated integers") from exc


def _cmd_delta(args) -> dict:
    f = _parse_subset(args.subset)
    m = delta_matrix(args.p, f)
    host = cycle_graph(args.p)
    cyc = CycleSubgraph(tuple(range(1, args.p + 1)))
    f_edges = [e for t, e in enumerate(cyc.edge_list()) if t + 1 in set(f)]
    facet = cycle_inequality(cyc, f_edges, host)
    cert = _certificate(host, m, facet, sign=-1)
    return {"p": args.p, "F": sorted(set(f)),
            "matrix": symmat_to_json(m),
            "certificate": certificate_to_json(cert, host)}


def _cert_payload(pair):
    g, cert = pair
    return certificate_to_json(cert, g)


def _cmd_certify(args) -> dict:
    g = _load_graph(args.graph)
    certs = certify_frip_k5free(g)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            payloads = list(pool.map(_cert_payload, [(g, c) for c in certs]))
    else:
        payloads = [certificate_to_json(c, g) for c in certs]
    return {"count": len(certs), "certificates": payloads}


def _cmd_ranks(args) -> dict:
    g = _load_graph(args.graph)
    result = extremal_rank_set_series_parallel(g)
    return {"ranks": sorted(result.ranks), "order": result.order}


def _cmd_order_bounds(args) -> dict:
    g = _load_graph(args.graph)
    lower, upper = sparsity_order_bounds(g)
    return {"lower": lower, "upper": upper}


def _cmd_check_ineq(args) -> dict:
    g = _load_graph(args.graph)
    q = ineq_from_json(_load_json(args.ineq), g)
    return {"valid": is_valid(g, q), "facet": is_facet(g, q)}


def _cmd_switch(args) -> dict:
    g = _load_graph(args.graph)
    q = ineq_from_json(_load_json(args.ineq), g)
    u = cut_from_json(_load_json(args.cut), g)
    return ineq_to_json(switch(q, u, g), g)


def _cmd_verify_matrix(args) -> dict:
    g = _load_graph(args.graph)
    m = symmat_from_json(_load_json(args.matrix))
    if m.p != g.p:
        raise PreconditionError("matrix dimension does not match the graph")
    psd = is_psd(m)
    pattern_ok = respects_pattern(m, g)
    extremal_flag = is_extremal(g, m) if psd and pattern_ok else False
    polar = None
    if pattern_ok and m.trace() > 0:
        polar = {f"{i}-{j}": rat_to_str(x)
                 for (i, j), x in zip(g.edges, polar_point(m, g))}
    return {"psd": psd,
            "rank": rank(m.entries),
            "zero_pattern_ok": pattern_ok,
            "extremal": extremal_flag,
            "polar_point": polar}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facetray",
        description="Cut-polytope facets and extremal PSD matrix certificates, "
                    "in exact rational arithmetic.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", metavar="PATH",
                        help="write the JSON result to PATH instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cuts", parents=[common], help="all cut vectors of a graph")
    s.add_argument("graph")
    s.set_defaults(func=_cmd_cuts)

    s = sub.add_parser("facets", parents=[common],
                       help="facet list for a K_5-minor-free graph")
    s.add_argument("graph")
    s.add_argument("--oracle", action="store_true",
                   help="re-verify each facet against the vertex description")
    s.set_defaults(func=_cmd_facets)

    s = sub.add_parser("delta", parents=[common],
                       help="cycle extremal matrix for an odd subset")
    s.add_argument("p", type=int)
    s.add_argument("subset", help="odd subset of 1..p, e.g. 2,3,4")
    s.set_defaults(func=_cmd_delta)

    s = sub.add_parser("certify", parents=[common],
                       help="facet-ray certificates for a graph")
    s.add_argument("graph")
    s.add_argument("--jobs", type=int, default=1,
                   help="certify facets in parallel (deterministic merge order)")
    s.set_defaults(func=_cmd_certify)

    s = sub.add_parser("ranks", parents=[common],
                       help="extremal rank set of a series-parallel graph")
    s.add_argument("graph")
    s.set_defaults(func=_cmd_ranks)

    s = sub.add_parser("order-bounds", parents=[common],
                       help="bounds on the sparsity order")
    s.add_argument("graph")
    s.set_defaults(func=_cmd_order_bounds)

    s = sub.add_parser("check-ineq", parents=[common],
                       help="validity and facet status of an inequality")
    s.add_argument("graph")
    s.add_argument("ineq")
    s.set_defaults(func=_cmd_check_ineq)

    s = sub.add_parser("switch", parents=[common],
                       help="apply the switching symmetry to an inequality")
    s.add_argument("graph")
    s.add_argument("ineq")
    s.add_argument("cut")
    s.set_defaults(func=_cmd_switch)

    s = sub.add_parser("verify-matrix", parents=[common],
                       help="PSD / pattern / extremality report")
    s.add_argument("graph")
    s.add_argument("matrix")
    s.set_defaults(func=_cmd_verify_matrix)

    return parser


def _emit(payload: dict, output: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except ParseError as exc:
        _emit({"error": {"type": "parse", "message": str(exc)}}, args.output)
        return 1
    except PreconditionError as exc:
        _emit({"error": {"type": "precondition", "message": str(exc)}}, args.output)
        return 2
    _emit(payload, args.output)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
