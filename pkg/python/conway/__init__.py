# -*- coding: utf-8 -*-
"""組紐閉包の Conway 多項式と連結数、絡み目レベルの照合。"""

from .braid import (
    BraidWord,
    closure_components,
    linking_matrix,
    linking_numbers_from_word,
    parse_braid,
    random_braid,
)
from .burau import burau_determinant, burau_matrix, conway, generator_matrix, resolved_normalization
from .checks import (
    BraidSuiteReport,
    hoste_check,
    hoste_suite,
    markov_check,
    parity_and_renorm_check,
    skein_check,
    skein_suite,
)
from .errors import BraidWordError
from .polynomial import ConwayPoly, parse_z_terms

__all__ = [
    "BraidSuiteReport",
    "BraidWord",
    "BraidWordError",
    "ConwayPoly",
    "burau_determinant",
    "burau_matrix",
    "closure_components",
    "conway",
    "generator_matrix",
    "hoste_check",
    "hoste_suite",
    "linking_matrix",
    "linking_numbers_from_word",
    "markov_check",
    "parity_and_renorm_check",
    "parse_braid",
    "parse_z_terms",
    "random_braid",
    "resolved_normalization",
    "skein_check",
    "skein_suite",
]
