"""Tropical covers of a circle by enumeration of weighted edge tuples.

An admissible tuple assigns every edge a positive weight and a direction:
edges of branch degree a_k > 0 take any divisor of a_k as weight and either
direction; edges of branch degree 0 point from the earlier vertex (in the
chosen vertex order) to the later one and take any weight up to the total
degree.  The tuple must balance at every vertex: outgoing weight equals
incoming weight.  Each tuple contributes the product of its weights.

This is a complete combinatorial description of the labelled tropical covers
with the given branch profile over the base point, and it never touches
Laurent-polynomial arithmetic, so it serves as an independent oracle for the
integral path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import FeynmanGraph, bridges
from .integrals import check_branch_type, check_order
from .propagator import divisors


@dataclass(frozen=True)
class CoverTuple:
    """One admissible choice per edge: weight, source vertex (the direction
    of flow) and wrap count (number of times the edge passes over the base
    point: a_k / w_k, or 0 for branch degree 0)."""

    weights: tuple
    sources: tuple
    wraps: tuple

    @property
    def multiplicity(self) -> int:
        m = 1
        for w in self.weights:
            m *= w
        return m

    @property
    def degree(self) -> int:
        return sum(w * l for w, l in zip(self.weights, self.wraps))


@dataclass(frozen=True)
class TropicalCover:
    """A cover tuple spelled out as a cover description: per-edge weights,
    base-point fiber counts, total degree and multiplicity."""

    graph: FeynmanGraph
    order: tuple
    weights: tuple
    sources: tuple
    fiber_counts: tuple
    degree: int
    multiplicity: int

    def to_json(self) -> dict:
        return {
            "order": list(self.order),
            "weights": list(self.weights),
            "sources": list(self.sources),
            "fiber_counts": list(self.fiber_counts),
            "degree": self.degree,
            "multiplicity": self.multiplicity,
        }


def _edge_candidates(graph, a, order, w_bound):
    """Per edge, the admissible (weight, source, wrap) choices."""
    rank = {lab: i for i, lab in enumerate(order)}
    cands = []
    for k, (u, v) in enumerate(graph.edges):
        if a[k] > 0:
            options = []
            for w in divisors(a[k]):
                options.append((w, u, a[k] // w))
                if u != v:
                    options.append((w, v, a[k] // w))
            cands.append(options)
        else:
            src = u if rank[u] < rank[v] else v
            cands.append([(w, src, 0) for w in range(1, w_bound + 1)])
    return cands


def enumerate_tuples(graph: FeynmanGraph, a, order, w_bound=None) -> list:
    """All admissible tuples for the branch type and vertex order.

    Bridged graphs admit none.  The weight bound for degree-0 edges defaults
    to the total degree sum(a), which is exhaustive: every edge of a cover of
    degree d has weight at most d.
    """
    order = check_order(graph, order)
    a = check_branch_type(graph, a)
    if bridges(graph):
        return []
    total = sum(a)
    if w_bound is None:
        w_bound = total
    cands = _edge_candidates(graph, a, order, w_bound)
    m = len(graph.edges)

    # assign edges in an order that completes vertices early, so balance can
    # be checked (and the search pruned) as soon as a vertex is saturated
    rank = {lab: i for i, lab in enumerate(order)}
    edge_seq = sorted(range(m), key=lambda k: (max(rank[x] for x in graph.edges[k]), k))
    remaining = {v: 0 for v in range(1, graph.vertex_count + 1)}
    for u, v in graph.edges:
        remaining[u] += 1
        remaining[v] += 1

    results = []
    weights = [0] * m
    sources = [0] * m
    wraps = [0] * m
    balance = {v: 0 for v in remaining}

    def assign(i):
        if i == m:
            results.append(CoverTuple(tuple(weights), tuple(sources), tuple(wraps)))
            return
        k = edge_seq[i]
        u, v = graph.edges[k]
        for w, src, wrap in cands[k]:
            snk = v if src == u else u
            weights[k], sources[k], wraps[k] = w, src, wrap
            balance[src] += w
            balance[snk] -= w
            remaining[u] -= 1
            remaining[v] -= 1
            ok = (remaining[u] > 0 or balance[u] == 0) and (remaining[v] > 0 or balance[v] == 0)
            if ok:
                assign(i + 1)
            balance[src] -= w
            balance[snk] += w
            remaining[u] += 1
            remaining[v] += 1
        weights[k] = sources[k] = wraps[k] = 0

    assign(0)
    return results


def count_covers(graph: FeynmanGraph, a, order) -> int:
    """Weighted tuple count for one vertex order: the sum of weight products."""
    return sum(t.multiplicity for t in enumerate_tuples(graph, a, order))


def count_covers_total(graph: FeynmanGraph, a) -> int:
    """Weighted tuple count summed over all (2g-2)! vertex orders."""
    a = check_branch_type(graph, a)
    if bridges(graph):
        return 0
    n = graph.vertex_count
    return sum(
        count_covers(graph, a, order)
        for order in itertools.permutations(range(1, n + 1))
    )


def reconstruct_cover(graph: FeynmanGraph, a, order, tup: CoverTuple) -> TropicalCover:
    """Spell a tuple out as the cover it encodes.

    The fiber count of edge k over the base point is its wrap count, so the
    fiber condition  fiber_count * weight = branch degree  holds by
    construction, and the degree is the total branch degree.
    """
    a = check_branch_type(graph, a)
    order = check_order(graph, order)
    for k, (w, wrap) in enumerate(zip(tup.weights, tup.wraps)):
        if wrap * w != a[k]:
            raise ValueError(f"edge {k}: fiber count {wrap} * weight {w} != branch degree {a[k]}")
    return TropicalCover(
        graph=graph,
        order=order,
        weights=tup.weights,
        sources=tup.sources,
        fiber_counts=tup.wraps,
        degree=sum(a),
        multiplicity=tup.multiplicity,
    )
