"""Structured linear theories over integers, difference constraints and rationals."""

from amt_kernel.theory_lin.difference import difference_edges, sat_D
from amt_kernel.theory_lin.handles import TheoryName, make_handle
from amt_kernel.theory_lin.linear import DEFAULT_MAX_CELLS, sat_L, witnesses_L
from amt_kernel.theory_lin.rational import DEFAULT_MAX_CASE_SPLITS, sat_R
from amt_kernel.theory_lin.structure import (
    DEFAULT_HI,
    DEFAULT_LO,
    Bounds,
    Domain,
    Structure,
    as_sum,
    complement,
    den_contains,
    parse_interval,
    parse_var_interval,
    substitute,
)

__all__ = [
    "DEFAULT_HI",
    "DEFAULT_LO",
    "DEFAULT_MAX_CASE_SPLITS",
    "DEFAULT_MAX_CELLS",
    "Bounds",
    "Domain",
    "Structure",
    "TheoryName",
    "as_sum",
    "complement",
    "den_contains",
    "difference_edges",
    "make_handle",
    "parse_interval",
    "parse_var_interval",
    "sat_D",
    "sat_L",
    "sat_R",
    "substitute",
    "witnesses_L",
]
