"""Per-edge factors of the graph integrand.

For an edge joining vertices x and y, the weight-series factor at branch
degree d is

    d > 0:   sum over divisors w of d of  w * ((x/y)^{2w} + (y/x)^{2w}),

an honest Laurent polynomial, symmetric in x and y.  At d = 0 the factor is
the rational function x^2 y^2 / (x^2 - y^2)^2, which has no canonical Laurent
expansion: expanding the geometric series requires choosing which variable is
"small".  That choice is dictated by a total order on the vertices: the
earlier vertex goes in the numerator, giving the one-sided expansion

    sum_{w >= 1} w * (x_early / x_late)^{2w},

truncated at a weight bound.  All signs are absorbed here, so downstream code
multiplies plain factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly


class LoopEdge(ValueError):
    """Raised when asked to expand a factor for a loop; the integrand is
    singular there.  Callers must exclude loops via the bridge criterion."""


def divisors(n: int) -> list:
    return [w for w in range(1, n + 1) if n % w == 0]


@dataclass(frozen=True)
class ZeroDegreeFactor:
    """Tag for the unexpanded degree-0 factor x^2 y^2 / (x^2 - y^2)^2.

    Stands in for a rational function; turning it into a series requires an
    orientation choice, see :func:`expand_zero_term`.
    """

    x_index: int
    y_index: int


def propagator_coeff(arity: int, x: int, y: int, d: int):
    """Degree-2d weight coefficient of the edge factor in variables x, y
    (0-based slots).

    Returns a LaurentPoly for d > 0 and a :class:`ZeroDegreeFactor` tag for
    d = 0.
    """
    if d < 0:
        raise ValueError("branch degree must be non-negative")
    if d == 0:
        return ZeroDegreeFactor(x, y)
    terms = {}
    for w in divisors(d):
        e1 = [0] * arity
        e1[x] += 2 * w
        e1[y] -= 2 * w
        e2 = [0] * arity
        e2[x] -= 2 * w
        e2[y] += 2 * w
        terms[tuple(e1)] = terms.get(tuple(e1), 0) + w
        terms[tuple(e2)] = terms.get(tuple(e2), 0) + w
    return LaurentPoly(arity, terms)


def expand_zero_term(arity: int, source: int, sink: int, w_max: int) -> LaurentPoly:
    """Truncated geometric expansion sum_{w=1}^{w_max} w*(x_source/x_sink)^{2w}.

    ``source`` must be the vertex slot earlier in the active vertex order.
    """
    if w_max < 1:
        raise ValueError("w_max must be at least 1")
    if source == sink:
        raise LoopEdge("cannot expand the degree-0 factor of a loop")
    terms = {}
    for w in range(1, w_max + 1):
        e = [0] * arity
        e[source] = 2 * w
        e[sink] = -2 * w
        terms[tuple(e)] = w
    return LaurentPoly(arity, terms)


@dataclass(frozen=True)
class EdgeFactor:
    """An edge's expanded integrand factor.

    Every monomial of ``expansion`` has even exponents and its two nonzero
    exponents (in the slots of the edge's endpoints) are negatives of each
    other.
    """

    edge_index: int
    endpoints: tuple
    branch_degree: int
    expansion: LaurentPoly


def edge_factor(arity: int, edge_index: int, endpoints, a_k: int, order, w_max: int) -> EdgeFactor:
    """Expanded factor for one edge under a vertex order.

    ``endpoints`` are 1-based vertex labels, ``order`` is the vertex order as
    a sequence of 1-based labels (earliest first).  For a_k = 0 the earlier
    endpoint becomes the numerator of the expansion; for a_k > 0 the factor
    is symmetric and the order is irrelevant.
    """
    u, v = endpoints
    if u == v:
        raise LoopEdge(f"edge {edge_index} is a loop; its factor is singular")
    if a_k == 0:
        rank = {lab: i for i, lab in enumerate(order)}
        src, snk = (u, v) if rank[u] < rank[v] else (v, u)
        exp = expand_zero_term(arity, src - 1, snk - 1, w_max)
    else:
        exp = propagator_coeff(arity, u - 1, v - 1, a_k)
    return EdgeFactor(edge_index, (u, v), a_k, exp)
