"""Base-cobase graphs of matroids.

Matroids are given by rank oracles over ground sets ``{0, ..., n-1}``;
subsets are Python ints used as bitsets.
"""

from __future__ import annotations

from .bcg import (
    FAILS,
    HOLDS,
    UNKNOWN,
    BCGraph,
    PropertyReport,
    build_base_graph,
    build_bc_graph,
    check_circ,
    check_con,
    check_diam,
    check_ham,
    check_mat,
    check_poly,
    check_scirc,
    is_hypercube,
)
from .description import DescriptionError, parse_matroid
from .matroid import (
    BaseFamily,
    BudgetExceeded,
    ExplicitBases,
    Graphic,
    LinearGF2,
    Matroid,
    MatroidError,
    Transversal,
    Uniform,
    base_cobases,
    direct_sum,
    dual,
    enumerate_bases,
    minor,
    parallel_extend,
    series_extend,
)
from .wheels import CubeVertex, StitchedModel, necklace, wheel, whirl

__all__ = [
    "FAILS",
    "HOLDS",
    "UNKNOWN",
    "BCGraph",
    "BaseFamily",
    "BudgetExceeded",
    "CubeVertex",
    "DescriptionError",
    "ExplicitBases",
    "Graphic",
    "LinearGF2",
    "Matroid",
    "MatroidError",
    "PropertyReport",
    "StitchedModel",
    "Transversal",
    "Uniform",
    "base_cobases",
    "build_base_graph",
    "build_bc_graph",
    "check_circ",
    "check_con",
    "check_diam",
    "check_ham",
    "check_mat",
    "check_poly",
    "check_scirc",
    "direct_sum",
    "dual",
    "enumerate_bases",
    "is_hypercube",
    "minor",
    "necklace",
    "parallel_extend",
    "parse_matroid",
    "series_extend",
    "wheel",
    "whirl",
]

__version__ = "0.1.0"
