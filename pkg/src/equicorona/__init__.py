"""Equitable colorings of iterated corona products of cubic graphs."""

from .coloring import (
    Coloring,
    equitable_profile,
    format_coloring,
    is_equitable,
    is_semi_equitable,
    is_strong_equitable,
    parse_coloring,
    verify_proper,
)
from .corona import CoronaSpec, corona_product, decode_address, encode_address, l_corona
from .corona_dp import equitable_corona_k
from .cubic import CubicClass, classify_cubic
from .dispatch import DispatchResult, dispatch, table1_cell, table2_value
from .engine import (
    color_complete_outer,
    equitable3,
    equitable4_Q2outer,
    equitable5_div4,
    equitable5_general,
    extend_strong_4,
    extend_strong_k,
    ordinary_coloring,
    recursion3,
    small_center_fallback,
)
from .graph import Graph, format_graph, parse_graph
from .solver import (
    BudgetExhausted,
    SearchBudget,
    chromatic_number,
    equitable_chromatic_number,
    find_equitable_k,
    find_semi_equitable,
    find_strong_equitable_k,
)

__all__ = [
    "BudgetExhausted",
    "Coloring",
    "CoronaSpec",
    "CubicClass",
    "DispatchResult",
    "Graph",
    "SearchBudget",
    "chromatic_number",
    "classify_cubic",
    "color_complete_outer",
    "corona_product",
    "decode_address",
    "dispatch",
    "encode_address",
    "equitable3",
    "equitable4_Q2outer",
    "equitable5_div4",
    "equitable5_general",
    "equitable_chromatic_number",
    "equitable_corona_k",
    "equitable_profile",
    "extend_strong_4",
    "extend_strong_k",
    "find_equitable_k",
    "find_semi_equitable",
    "find_strong_equitable_k",
    "format_coloring",
    "format_graph",
    "is_equitable",
    "is_semi_equitable",
    "is_strong_equitable",
    "l_corona",
    "ordinary_coloring",
    "parse_coloring",
    "parse_graph",
    "recursion3",
    "small_center_fallback",
    "table1_cell",
    "table2_value",
    "verify_proper",
]
