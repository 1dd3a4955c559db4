"""Exact Hurwitz numbers of elliptic curves, computed three independent ways:
constant-term extraction over trivalent graphs, tropical cover enumeration,
and symmetric-group monodromy counts, with Eisenstein-series fits of the
resulting generating functions."""

from .graphs import (
    BadCardinality,
    BalancedFlow,
    FeynmanGraph,
    GenusTooLarge,
    GraphError,
    HasBridge,
    NotConnected,
    NotTrivalent,
    Orientation,
    automorphism_count,
    balanced_orientation,
    bridges,
    canonical_form,
    enumerate_genus,
    has_bridge,
    is_isomorphic,
    validate,
)
from .integrals import (
    MultiSeries,
    compositions,
    f_g,
    generating_function,
    gromov_witten_a,
    gromov_witten_d,
    i_gamma_series,
    integral_coeff,
)
from .laurent import ArityMismatch, LaurentPoly
from .monodromy import BudgetExceeded, hurwitz_count, verify_tuple
from .propagator import (
    EdgeFactor,
    LoopEdge,
    ZeroDegreeFactor,
    edge_factor,
    expand_zero_term,
    propagator_coeff,
)
from .quasimodular import (
    Inconsistent,
    QSeries,
    QuasimodularRep,
    Underdetermined,
    eisenstein,
    eval_rep,
    fit,
    weight_monomials,
)
from .tropical import CoverTuple, TropicalCover, count_covers, count_covers_total, enumerate_tuples, reconstruct_cover

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "BadCardinality",
    "BalancedFlow",
    "BudgetExceeded",
    "CoverTuple",
    "EdgeFactor",
    "FeynmanGraph",
    "GenusTooLarge",
    "GraphError",
    "HasBridge",
    "Inconsistent",
    "LaurentPoly",
    "LoopEdge",
    "MultiSeries",
    "NotConnected",
    "NotTrivalent",
    "Orientation",
    "QSeries",
    "QuasimodularRep",
    "TropicalCover",
    "Underdetermined",
    "ZeroDegreeFactor",
    "automorphism_count",
    "balanced_orientation",
    "bridges",
    "canonical_form",
    "compositions",
    "count_covers",
    "count_covers_total",
    "edge_factor",
    "eisenstein",
    "enumerate_genus",
    "enumerate_tuples",
    "eval_rep",
    "expand_zero_term",
    "f_g",
    "fit",
    "generating_function",
    "gromov_witten_a",
    "gromov_witten_d",
    "has_bridge",
    "hurwitz_count",
    "i_gamma_series",
    "integral_coeff",
    "is_isomorphic",
    "propagator_coeff",
    "reconstruct_cover",
    "validate",
    "verify_tuple",
    "weight_monomials",
]
