# -*- coding: utf-8 -*-
"""完全 3-グラフの全域木と Pfaffian 木多項式。"""

from .decompositions import (
    TreeDecomposition,
    aut_factor,
    coeff_via_decompositions,
    format_decompositions,
    graph_of_monomial,
    ordered_tree_decompositions,
)
from .errors import ThreeGraphInputError, TreeCriterionError
from .pm import (
    MuTable,
    PfaffianCheckResult,
    evaluate_pm,
    lambda_skew,
    monomial_of,
    pfaffian_sign_table,
    pfaffian_tree_poly,
    pmtt_check,
    run_pmtt,
    triples_of,
)
from .three_graph import (
    ThreeGraph,
    Triple,
    epsilon,
    is_tree3,
    normalize_triple,
    parse_three_graph,
    read_three_graph,
)

__all__ = [
    "MuTable",
    "PfaffianCheckResult",
    "ThreeGraph",
    "ThreeGraphInputError",
    "TreeCriterionError",
    "TreeDecomposition",
    "Triple",
    "aut_factor",
    "coeff_via_decompositions",
    "epsilon",
    "evaluate_pm",
    "format_decompositions",
    "graph_of_monomial",
    "is_tree3",
    "lambda_skew",
    "monomial_of",
    "normalize_triple",
    "ordered_tree_decompositions",
    "parse_three_graph",
    "pfaffian_sign_table",
    "pfaffian_tree_poly",
    "pmtt_check",
    "read_three_graph",
    "run_pmtt",
    "triples_of",
]
