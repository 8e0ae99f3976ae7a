"""Kirchhoff 多項式と行列木定理のテスト。"""

from __future__ import annotations

import pytest

from exactalg import Monomial, Polynomial, x_var  # type: ignore  # noqa: E402
from kirchhoff import (  # type: ignore  # noqa: E402
    EdgeSet,
    GraphInputError,
    LinkingMatrix,
    kirchhoff_poly,
    kirchhoff_value,
    laplacian_linking,
    mtt_check,
    prufer_decode,
    reduced_det,
    spanning_trees_brute_force,
    spanning_trees_complete,
)

@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_spanning_tree_count_is_cayley(m: int) -> None:
    assert len(spanning_trees_complete(m)) == m ** (m - 2)

@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_prufer_enumeration_matches_brute_force(m: int) -> None:
    assert spanning_trees_complete(m) == spanning_trees_brute_force(m), "Prüfer 列挙と総当たりが一致しません"

def test_spanning_trees_are_trees() -> None:
    assert all(tree.is_spanning_tree() for tree in spanning_trees_complete(5))

def test_prufer_decode_star() -> None:
    assert prufer_decode([1, 1], 4) == EdgeSet.of(4, [(1, 2), (1, 3), (1, 4)])

def test_prufer_decode_rejects_bad_sequences() -> None:
    with pytest.raises(GraphInputError):
        prufer_decode([1], 4)
    with pytest.raises(GraphInputError):
        prufer_decode([5, 1], 4)

def test_spanning_trees_rejects_single_vertex() -> None:
    with pytest.raises(GraphInputError):
        spanning_trees_complete(1)

def test_kirchhoff_poly_small_cases() -> None:
    x12, x13, x23 = (Polynomial.variable(x_var(*pair)) for pair in ((1, 2), (1, 3), (2, 3)))
    assert kirchhoff_poly(2) == x12
    assert kirchhoff_poly(3) == x12 * x13 + x12 * x23 + x13 * x23

def test_kirchhoff_poly_is_multilinear_with_unit_coefficients() -> None:
    poly = kirchhoff_poly(5)
    assert len(poly) == 125
    assert poly.is_multilinear()
    assert all(coefficient == 1 for _, coefficient in poly)
    assert all(monomial.degree == 4 for monomial, _ in poly)

@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_mtt_check_symbolic(m: int) -> None:
    assert mtt_check(m) is True

@pytest.mark.slow
def test_mtt_check_symbolic_six() -> None:
    assert len(kirchhoff_poly(6)) == 6 ** 4, "D_6 の項数は Cayley の公式 6^4 の想定です"
    assert mtt_check(6) is True

def test_reduced_det_agrees_for_every_row() -> None:
    laplacian = laplacian_linking(LinkingMatrix.symbolic(4))
    values = {reduced_det(laplacian, p) for p in range(1, 5)}
    assert values == {kirchhoff_poly(4)}

def test_laplacian_rows_sum_to_zero() -> None:
    laplacian = laplacian_linking(LinkingMatrix.from_pairs(3, {(1, 2): 2, (2, 3): -1}))
    assert all(total.is_zero() for total in laplacian.row_sums())
    assert laplacian.entry(0, 0) == 2
    assert laplacian.entry(1, 2) == 1

def test_kirchhoff_value_on_integer_matrix() -> None:
    linking = LinkingMatrix.from_pairs(3, {(1, 2): 2, (2, 3): 1, (1, 3): -1})
    assert kirchhoff_value(linking) == 2 * -1 + 2 * 1 + (-1) * 1
    assert kirchhoff_value(LinkingMatrix.from_pairs(2, {(1, 2): 3})) == 3

def test_linking_matrix_validation() -> None:
    with pytest.raises(GraphInputError):
        LinkingMatrix.from_integers([[1, 0], [0, 0]])
    with pytest.raises(GraphInputError):
        LinkingMatrix.from_integers([[0, 1], [2, 0]])

def test_edge_set_rejects_out_of_range() -> None:
    with pytest.raises(GraphInputError):
        EdgeSet.of(3, [(1, 4)])
    with pytest.raises(GraphInputError):
        EdgeSet.of(3, [(2, 2)])

def test_kirchhoff_monomials_match_trees() -> None:
    trees = spanning_trees_complete(4)
    poly = kirchhoff_poly(4)
    for tree in trees:
        monomial = Monomial.of(x_var(i, j) for i, j in tree.edges)
        assert poly.coefficient(monomial) == 1
