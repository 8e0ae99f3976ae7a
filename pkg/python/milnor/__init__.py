# -*- coding: utf-8 -*-
"""普遍 Milnor 不変量の木表現と、Alexander-Conway 係数を与える多項式 F, G。"""

from .checks import h_replace, lemma_relations_check, xi_from_linking
from .errors import DegreeMismatchError, TreeFormatError, UnsupportedAssemblyError
from .fpoly import F, F_as_polynomial, F_tilde, G_eval, G_value, multilinear_weight
from .io import format_xi, parse_mu_table, parse_xi, read_mu_table, read_xi_file
from .levine import levine_traldi_det, levine_traldi_matrix
from .lift import lift_to_circles
from .phi import F_general, edge_move, phi, phi_confluence_check, phi_equivalent, phi_tree
from .quotient import W0Subspace, w0_generators, w0_subspace
from .recursion import has_doubled_index, recursion_check, recursion_identities, square_pm
from .trees import (
    LabeledTree,
    TreeGraph,
    canonicalize,
    format_tree,
    parse_tree,
    random_tree,
    strut,
    tree_ihx,
    wedge,
)
from .xi import EtaVar, XiElement

__all__ = [
    "DegreeMismatchError",
    "EtaVar",
    "F",
    "F_as_polynomial",
    "F_general",
    "F_tilde",
    "G_eval",
    "G_value",
    "LabeledTree",
    "TreeFormatError",
    "TreeGraph",
    "UnsupportedAssemblyError",
    "W0Subspace",
    "XiElement",
    "canonicalize",
    "edge_move",
    "format_tree",
    "format_xi",
    "h_replace",
    "has_doubled_index",
    "lemma_relations_check",
    "levine_traldi_det",
    "levine_traldi_matrix",
    "lift_to_circles",
    "multilinear_weight",
    "parse_mu_table",
    "parse_tree",
    "parse_xi",
    "phi",
    "phi_confluence_check",
    "phi_equivalent",
    "phi_tree",
    "random_tree",
    "read_mu_table",
    "read_xi_file",
    "recursion_check",
    "recursion_identities",
    "square_pm",
    "strut",
    "tree_ihx",
    "w0_generators",
    "w0_subspace",
    "wedge",
    "xi_from_linking",
]
