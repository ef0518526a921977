"""Exact bounds on maximum partial t-spreads A_q(n, 2t; t)."""

from .bounds import (
    BoundResult,
    SpreadInstance,
    best_bounds,
    decompose,
    drake_freeman_bound,
    lower_bound_construction,
    packing_bound,
    theorem1_bound,
    theorem2_bound,
)
from .exactmath import ceil_bound_term, gaussian_binomial, isqrt, q_bracket, q_pow
from .vsp_analysis import HoleType, exclude_hole_type, lemma8_family, tau

__version__ = "0.1.0"
