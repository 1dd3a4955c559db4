"""Command-line front end.

Subcommands mirror the library: labelled counts (``gw``), multigraded
generating functions (``genfun``), graph series (``igamma``), Hurwitz series
by any of the three computation paths (``fg``), graph enumeration
(``graphs``), tropical cover dumps (``covers``) and Eisenstein fits
(``qfit``).  All numbers are printed exactly; ``--json`` switches to
machine-readable output.  ``--threads`` fans the vertex-order sum out over
worker processes; the library itself stays sequential and pure.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import sys
from fractions import Fraction

from . import graphs as graphs_mod
from . import integrals, monodromy, quasimodular, tropical
from .graphs import FeynmanGraph
from .laurent import coeff_str
from .quasimodular import QSeries


def _load_graph(path: str) -> FeynmanGraph:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    graph = FeynmanGraph.from_json(data)
    graphs_mod.validate(graph)
    return graph


def _parse_ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"expected a comma-separated integer list, got {text!r}")


def _pool_map(func, tasks, threads):
    if threads <= 1 or len(tasks) <= 1:
        return [func(t) for t in tasks]
    ctx = multiprocessing.get_context("fork") if sys.platform != "win32" else multiprocessing
    with ctx.Pool(min(threads, len(tasks))) as pool:
        return pool.map(func, tasks)


def _integral_task(task):
    graph, a, order = task
    return integrals.integral_coeff(graph, a, order)


def _igamma_task(task):
    graph, order, d_max = task
    return integrals.i_gamma_coeffs_for_order(graph, order, d_max)


def _gw_total(graph, a, threads):
    if graphs_mod.bridges(graph):
        return 0, "bridge"
    tasks = [(graph, a, order) for order in integrals.all_orders(graph)]
    return sum(_pool_map(_integral_task, tasks, threads)), None


def _igamma(graph, d_max, threads) -> QSeries:
    if graphs_mod.bridges(graph):
        return QSeries.zero(2 * d_max + 2)
    tasks = [(graph, order, d_max) for order in integrals.all_orders(graph)]
    coeffs = {}
    for partial in _pool_map(_igamma_task, tasks, threads):
        for d, c in partial.items():
            coeffs[2 * d] = coeffs.get(2 * d, 0) + c
    return QSeries(coeffs, 2 * d_max + 2)


def _emit(args, human: str, payload: dict):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _series_payload(series: QSeries) -> dict:
    return {
        "coefficients": {str(e): coeff_str(c) for e, c in sorted(series.coeffs.items())},
        "truncation_order": series.order,
    }


def cmd_gw(args):
    graph = _load_graph(args.graph)
    if (args.branch is None) == (args.degree is None):
        raise ValueError("specify exactly one of --branch and --degree")
    if args.branch is not None:
        a = _parse_ints(args.branch)
        integrals.check_branch_type(graph, a)
        value, reason = _gw_total(graph, a, args.threads)
        payload = {"branch_type": list(a), "count": value}
    else:
        if args.degree < 0:
            raise ValueError("degree must be non-negative")
        if graphs_mod.bridges(graph):
            value, reason = 0, "bridge"
        else:
            tasks = [
                (graph, a, order)
                for a in integrals.compositions(args.degree, len(graph.edges))
                for order in integrals.all_orders(graph)
            ]
            value, reason = sum(_pool_map(_integral_task, tasks, args.threads)), None
        payload = {"degree": args.degree, "count": value}
    if reason:
        payload["reason"] = reason
    _emit(args, str(value), payload)


def cmd_genfun(args):
    graph = _load_graph(args.graph)
    series = integrals.generating_function(graph, args.degree)
    payload = {
        "max_degree": args.degree,
        "terms": [{"branch_type": list(a), "count": c} for a, c in series.sorted_items()],
    }
    _emit(args, str(series), payload)


def cmd_igamma(args):
    graph = _load_graph(args.graph)
    series = _igamma(graph, args.max_degree, args.threads)
    _emit(args, str(series), _series_payload(series))


def cmd_fg(args):
    if args.oracle == "integral":
        series = integrals.f_g(args.genus, args.max_degree)
    elif args.oracle == "tropical":
        total = {}
        for graph in graphs_mod.enumerate_genus(args.genus):
            if graphs_mod.bridges(graph):
                continue
            aut = graphs_mod.automorphism_count(graph)
            for d in range(1, args.max_degree + 1):
                s = sum(
                    tropical.count_covers_total(graph, a)
                    for a in integrals.compositions(d, len(graph.edges))
                )
                total[2 * d] = total.get(2 * d, 0) + Fraction(s, aut)
        coeffs = {}
        for e, c in total.items():
            if c != 0:
                if c.denominator != 1:
                    raise ArithmeticError(f"coefficient of q^{e} is {c}, expected an integer")
                coeffs[e] = c.numerator
        series = QSeries(coeffs, 2 * args.max_degree + 2)
    else:
        coeffs = {}
        for d in range(1, args.max_degree + 1):
            value = monodromy.hurwitz_count(d, args.genus)
            if value:
                coeffs[2 * d] = value
        series = QSeries(coeffs, 2 * args.max_degree + 2)
    _emit(args, str(series), _series_payload(series))


def cmd_graphs(args):
    found = graphs_mod.enumerate_genus(args.genus, bridgeless=args.bridgeless)
    rows = []
    for graph in found:
        bridged, bridge_list = graphs_mod.has_bridge(graph)
        rows.append(
            {
                "vertices": graph.vertex_count,
                "edges": [list(e) for e in graph.edges],
                "aut": graphs_mod.automorphism_count(graph),
                "bridges": [k + 1 for k in bridge_list],
                "bridgeless": not bridged,
            }
        )
    if args.json:
        print(json.dumps(rows, sort_keys=True))
    else:
        for row in rows:
            print(
                "edges={} |Aut|={} bridges={}".format(
                    row["edges"], row["aut"], row["bridges"] or "none"
                )
            )
        print(f"{len(rows)} graph(s) of genus {args.genus}" + (" without bridges" if args.bridgeless else ""))


def cmd_covers(args):
    graph = _load_graph(args.graph)
    a = _parse_ints(args.branch)
    order = _parse_ints(args.order)
    for tup in tropical.enumerate_tuples(graph, a, order):
        cover = tropical.reconstruct_cover(graph, a, order, tup)
        print(json.dumps(cover.to_json(), sort_keys=True))


def cmd_qfit(args):
    graph = _load_graph(args.graph)
    g = graphs_mod.validate(graph)
    series = _igamma(graph, args.max_degree, args.threads)
    rep = quasimodular.fit(series, g)
    payload = {
        "weight": rep.weight,
        "coefficients": {
            f"E2^{i}*E4^{j}*E6^{k}": coeff_str(c) for (i, j, k), c in sorted(rep.coeffs.items())
        },
    }
    _emit(args, str(rep), payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellcover",
        description="Exact Hurwitz numbers of elliptic curves, three ways.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes for the vertex-order fan-out (default: all cores)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gw", help="labelled count for a branch type or degree")
    p.add_argument("--graph", required=True)
    p.add_argument("--branch", help="comma-separated branch type, one entry per edge")
    p.add_argument("--degree", type=int, help="total degree (sums counts over branch types)")
    p.set_defaults(func=cmd_gw)

    p = sub.add_parser("genfun", help="multigraded generating function")
    p.add_argument("--graph", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("igamma", help="graph series in q")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_igamma)

    p = sub.add_parser("fg", help="Hurwitz number series for a genus")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--oracle", choices=("integral", "tropical", "sym"), default="integral")
    p.set_defaults(func=cmd_fg)

    p = sub.add_parser("graphs", help="enumerate trivalent graphs of a genus")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--bridgeless", action="store_true")
    p.set_defaults(func=cmd_graphs)

    p = sub.add_parser("covers", help="dump tropical covers as JSON lines")
    p.add_argument("--graph", required=True)
    p.add_argument("--branch", required=True)
    p.add_argument("--order", required=True, help="comma-separated vertex labels, earliest first")
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("qfit", help="Eisenstein-series representation of the graph series")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_qfit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        message = {"error": type(exc).__name__, "message": str(exc)}
        if args.json:
            print(json.dumps(message), file=sys.stderr)
        else:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
