"""Graph integrals by iterated constant-term extraction.

For a graph of genus g, a branch type a (one non-negative integer per edge)
and a total order on the vertices, the integral coefficient is the constant
term, in every vertex variable, of the product of the per-edge factors from
:mod:`.propagator`.  Extraction runs one variable at a time; an edge's factor
is multiplied into the running product just before its first endpoint is
eliminated, which keeps intermediate supports small without changing the
result.

Summing over all (2g-2)! vertex orders gives the labelled count for the
branch type; summing those over compositions of d gives degree counts and
the graph series.  Graphs with a bridge contribute zero and are
short-circuited (their loop edges, whose factors would be singular, are never
expanded).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .graphs import FeynmanGraph, automorphism_count, bridges, enumerate_genus, validate
from .laurent import LaurentPoly
from .propagator import edge_factor
from .quasimodular import QSeries


def all_orders(graph: FeynmanGraph):
    """All total orders of the vertices, as tuples of 1-based labels."""
    return itertools.permutations(range(1, graph.vertex_count + 1))


def check_order(graph: FeynmanGraph, order) -> tuple:
    order = tuple(order)
    if sorted(order) != list(range(1, graph.vertex_count + 1)):
        raise ValueError(f"{order!r} is not a permutation of 1..{graph.vertex_count}")
    return order


def check_branch_type(graph: FeynmanGraph, a) -> tuple:
    a = tuple(a)
    if len(a) != len(graph.edges):
        raise ValueError(f"branch type has {len(a)} entries, expected {len(graph.edges)}")
    if any(x < 0 for x in a):
        raise ValueError("branch type entries must be non-negative")
    return a


def compositions(d: int, parts: int):
    """All ways to write d as an ordered sum of ``parts`` non-negative ints."""
    if parts == 0:
        if d == 0:
            yield ()
        return
    for first in range(d + 1):
        for rest in compositions(d - first, parts - 1):
            yield (first,) + rest


def _eliminate(graph, factors, elimination_order):
    """Multiply edge factors in lazily and extract the x^0 coefficient of
    each vertex variable in turn.  Returns the resulting constant."""
    poly = LaurentPoly.one(graph.vertex_count)
    used = set()
    for v in elimination_order:
        for k in graph.incident_edges(v):
            if k not in used:
                used.add(k)
                poly = poly * factors[k]
                if poly.is_zero():
                    return 0
        poly = poly.coeff_in(v - 1, 0)
        if poly.is_zero():
            return 0
    assert len(used) == len(graph.edges)
    return poly.constant_term()


def integral_coeff(graph: FeynmanGraph, a, order, w_max=None, elimination_order=None) -> int:
    """Coefficient of the branch-type monomial in the single-order integral.

    ``order`` fixes the one-sided expansion of every degree-0 edge factor.
    ``elimination_order`` (defaults to ``order``) is the sequence in which
    vertex variables are extracted; any choice yields the same value.
    ``w_max`` bounds the degree-0 expansions and defaults to sum(a), which is
    exact: no balanced monomial can involve a larger weight.
    """
    order = check_order(graph, order)
    a = check_branch_type(graph, a)
    if bridges(graph):
        return 0
    total = sum(a)
    if total == 0:
        # positive weights on an acyclically oriented factor set cannot balance
        return 0
    if w_max is None:
        w_max = total
    n = graph.vertex_count
    factors = [
        edge_factor(n, k, graph.edges[k], a[k], order, w_max).expansion
        for k in range(len(graph.edges))
    ]
    elim = order if elimination_order is None else check_order(graph, elimination_order)
    return _eliminate(graph, factors, elim)


def gromov_witten_a(graph: FeynmanGraph, a) -> int:
    """Labelled count for one branch type: the sum of the single-order
    integrals over all vertex orders."""
    a = check_branch_type(graph, a)
    if bridges(graph):
        return 0
    total = 0
    for order in all_orders(graph):
        total += integral_coeff(graph, a, order)
    return total


def gromov_witten_d(graph: FeynmanGraph, d: int) -> int:
    """Degree-d count scaled by |Aut|: the sum of the labelled counts over
    every composition of d into one part per edge."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    if bridges(graph):
        return 0
    return sum(gromov_witten_a(graph, a) for a in compositions(d, len(graph.edges)))


@dataclass(frozen=True)
class MultiSeries:
    """Multigraded generating function: branch type -> count."""

    arity: int
    coeffs: dict

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {tuple(a): c for a, c in self.coeffs.items() if c != 0})

    def coeff(self, a) -> int:
        return self.coeffs.get(tuple(a), 0)

    def sorted_items(self):
        """Monomials in graded reverse lexicographic order, highest degree
        first (the order a computer algebra system would print)."""
        return sorted(self.coeffs.items(), key=lambda kv: (-sum(kv[0]), tuple(reversed(kv[0]))))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for a, c in self.sorted_items():
            mono = "*".join(
                f"q({i + 1})^{e}" if e > 1 else f"q({i + 1})"
                for i, e in enumerate(a)
                if e
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return "+".join(parts)


def generating_function(graph: FeynmanGraph, d_max: int) -> MultiSeries:
    """All labelled counts with total branch degree at most d_max."""
    coeffs = {}
    if not bridges(graph):
        for d in range(d_max + 1):
            for a in compositions(d, len(graph.edges)):
                coeffs[a] = gromov_witten_a(graph, a)
    return MultiSeries(len(graph.edges), coeffs)


def _graded_edge_series(graph, order, d_max):
    """Per edge, the map branch-degree -> expanded factor, all degrees up to
    d_max at once (degree-0 slots truncated at weight d_max)."""
    n = graph.vertex_count
    out = []
    for k in range(len(graph.edges)):
        slots = {
            a_k: edge_factor(n, k, graph.edges[k], a_k, order, d_max).expansion
            for a_k in range(d_max + 1)
        }
        out.append(slots)
    return out


def i_gamma_coeffs_for_order(graph: FeynmanGraph, order, d_max: int) -> dict:
    """Degree -> coefficient of the single-order integral, all degrees up to
    d_max in one pass.

    Works with the total-degree grading alongside the vertex variables: the
    running product is a map (degree so far) -> Laurent polynomial, convolved
    with each edge's graded factor and truncated at d_max.
    """
    order = check_order(graph, order)
    if bridges(graph) or d_max < 1:
        return {}
    factors = _graded_edge_series(graph, order, d_max)
    state = {0: LaurentPoly.one(graph.vertex_count)}
    used = set()
    for v in order:
        for k in graph.incident_edges(v):
            if k in used:
                continue
            used.add(k)
            new_state = {}
            for t1, p1 in state.items():
                for t2, p2 in factors[k].items():
                    t = t1 + t2
                    if t > d_max:
                        continue
                    prod = p1 * p2
                    if prod.is_zero():
                        continue
                    acc = new_state.get(t)
                    new_state[t] = prod if acc is None else acc + prod
            state = new_state
        state = {t: q for t, p in state.items() if not (q := p.coeff_in(v - 1, 0)).is_zero()}
    return {t: p.constant_term() for t, p in state.items() if p.constant_term() != 0}


def i_gamma_series(graph: FeynmanGraph, d_max: int) -> QSeries:
    """The graph series: coefficient of q^{2d} is the total labelled count in
    degree d, summed over all vertex orders, for d <= d_max."""
    validate(graph)
    coeffs = {}
    if not bridges(graph):
        for order in all_orders(graph):
            for d, c in i_gamma_coeffs_for_order(graph, order, d_max).items():
                coeffs[2 * d] = coeffs.get(2 * d, 0) + c
    return QSeries(coeffs, 2 * d_max + 2)


def f_g(g: int, d_max: int, max_genus: int = 5) -> QSeries:
    """Generating series of the genus-g Hurwitz numbers of an elliptic curve,
    assembled as the automorphism-weighted sum of the graph series over all
    trivalent genus-g graphs.

    Every coefficient is checked to be a non-negative integer.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    total = {}
    for graph in enumerate_genus(g, max_genus=max_genus):
        if bridges(graph):
            continue
        aut = automorphism_count(graph)
        series = i_gamma_series(graph, d_max)
        for e, c in series.coeffs.items():
            total[e] = total.get(e, 0) + Fraction(c, aut)
    out = {}
    for e, c in total.items():
        if c != 0:
            frac = Fraction(c)
            if frac.denominator != 1 or frac < 0:
                raise ArithmeticError(f"coefficient of q^{e} is {frac}, expected a non-negative integer")
            out[e] = int(frac)
    return QSeries(out, 2 * d_max + 2)
