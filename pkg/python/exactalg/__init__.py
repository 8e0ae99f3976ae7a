# -*- coding: utf-8 -*-
"""厳密演算の基盤 (多項式・行列・形式べき級数) をまとめて公開するパッケージ。"""

from .errors import (
    InvalidVariableError,
    MatrixIndexError,
    NotSkewSymmetricError,
    SeriesCompositionError,
)
from .matrix import ExactMatrix, det_exact, pfaffian
from .polynomial import (
    Coefficient,
    Monomial,
    Polynomial,
    format_coefficient,
    normalize_coefficient,
    polynomial_sum,
)
from .series import PowerSeries, half_sinh_series, renormalization_prefactor, series_renormalize
from .substitution import kill_index, merge_basis, partial_derivative, relabel
from .variables import VarId, parse_variable, x_var, y_canon, y_var

__all__ = [
    "Coefficient",
    "ExactMatrix",
    "InvalidVariableError",
    "MatrixIndexError",
    "Monomial",
    "NotSkewSymmetricError",
    "Polynomial",
    "PowerSeries",
    "SeriesCompositionError",
    "VarId",
    "det_exact",
    "format_coefficient",
    "half_sinh_series",
    "kill_index",
    "merge_basis",
    "normalize_coefficient",
    "parse_variable",
    "partial_derivative",
    "pfaffian",
    "polynomial_sum",
    "relabel",
    "renormalization_prefactor",
    "series_renormalize",
    "x_var",
    "y_canon",
    "y_var",
]
