"""Greedy change-making, canonical coin systems and totally greedy recurrence sequences."""

from .canonicality import (
    TriadQuery,
    four_element_equivalence,
    is_greedy,
    is_totally_greedy,
    one_point_extension,
    triad_is_greedy,
)
from .coin_core import (
    CoinSystem,
    GreedinessReport,
    PaymentVector,
    Verdict,
    greedy_cost,
    greedy_payment,
    optimal_cost,
    optimal_payment,
)
from .recurrences import (
    NonHomogParams,
    Type1Params,
    Type2Params,
    char_roots,
    closed_form_eval,
    even_subsequence_modified,
    generate_nonhomog,
    generate_type1,
    generate_type2,
    odd_subsequence,
)

__version__ = "0.1.0"

__all__ = [
    "CoinSystem",
    "GreedinessReport",
    "NonHomogParams",
    "PaymentVector",
    "TriadQuery",
    "Type1Params",
    "Type2Params",
    "Verdict",
    "char_roots",
    "closed_form_eval",
    "even_subsequence_modified",
    "four_element_equivalence",
    "generate_nonhomog",
    "generate_type1",
    "generate_type2",
    "greedy_cost",
    "greedy_payment",
    "is_greedy",
    "is_totally_greedy",
    "odd_subsequence",
    "one_point_extension",
    "optimal_cost",
    "optimal_payment",
    "triad_is_greedy",
]
