"""Pfaffian 木多項式・3-グラフ・順序付き木分解のテスト。"""

from __future__ import annotations

import random
from itertools import combinations, permutations
from pathlib import Path

import pytest

from exactalg import Monomial, Polynomial, x_var, y_var  # type: ignore  # noqa: E402
from pfaffian_tree import (  # type: ignore  # noqa: E402
    MuTable,
    ThreeGraph,
    ThreeGraphInputError,
    aut_factor,
    coeff_via_decompositions,
    epsilon,
    evaluate_pm,
    format_decompositions,
    is_tree3,
    lambda_skew,
    monomial_of,
    ordered_tree_decompositions,
    parse_three_graph,
    pfaffian_tree_poly,
    pmtt_check,
    read_three_graph,
    run_pmtt,
    triples_of,
)

def test_pfaffian_tree_poly_three_is_single_variable() -> None:
    assert pfaffian_tree_poly(3) == Polynomial.variable(y_var(1, 2, 3))

@pytest.mark.parametrize("m", [2, 4, 6])
def test_pfaffian_tree_poly_vanishes_for_even_m(m: int) -> None:
    assert pfaffian_tree_poly(m).is_zero()

def test_pfaffian_tree_poly_five() -> None:
    poly = pfaffian_tree_poly(5)
    assert len(poly) == 15
    assert poly.coefficient(monomial_of([(1, 2, 3), (1, 4, 5)])) == 1
    assert poly.coefficient(monomial_of([(1, 2, 4), (1, 3, 5)])) == -1
    assert poly.coefficient(monomial_of([(1, 2, 5), (1, 3, 4)])) == 1
    assert poly.to_text().startswith("+1*y[1,2,3]*y[1,4,5] "), "正規順の先頭は y123·y145 の想定です"
    assert all(abs(coefficient) == 1 for _, coefficient in poly)
    assert poly.is_multilinear()

def test_pfaffian_tree_poly_rejects_tiny_m() -> None:
    with pytest.raises(ThreeGraphInputError):
        pfaffian_tree_poly(1)

def test_epsilon_values() -> None:
    assert epsilon([(1, 2, 3), (1, 4, 5)], 5) == 1
    assert epsilon([(1, 2, 4), (1, 3, 5)], 5) == -1
    assert epsilon([(1, 2, 3), (1, 2, 3)], 5) == 0, "全域木でない場合は 0 の想定です"
    with pytest.raises(ThreeGraphInputError):
        epsilon([(1, 1, 2)], 3)

def test_is_tree3_criteria_agree() -> None:
    assert is_tree3(ThreeGraph.of(5, [(1, 2, 3), (1, 4, 5)])) is True
    assert is_tree3(ThreeGraph.of(5, [(1, 2, 3), (1, 2, 4)])) is False
    assert is_tree3(ThreeGraph.of(5, [(1, 2, 3), (3, 4, 5)])) is True
    assert is_tree3(ThreeGraph.of(3, [(1, 2, 3), (1, 2, 3)])) is False

@pytest.mark.parametrize(
    ("m", "expected_trees"),
    [(3, 1), (5, 15), pytest.param(7, None, marks=pytest.mark.slow)],
)
def test_tree_criteria_and_epsilon_order_exhaustive(m: int, expected_trees: int | None) -> None:
    size = (m - 1) // 2
    trees = 0
    for chosen in combinations(combinations(range(1, m + 1), 3), size):
        # 判定が食い違えば is_tree3 が TreeCriterionError を送出する
        tree = is_tree3(ThreeGraph.of(m, chosen))
        signs = {epsilon(order, m) for order in permutations(chosen)}
        assert len(signs) == 1, f"{chosen} で ε が積の順序に依存しています: {signs}"
        assert (signs.pop() != 0) == tree
        trees += tree
    if expected_trees is not None:
        assert trees == expected_trees
    assert trees == len(pfaffian_tree_poly(m))

def test_three_graph_rejects_out_of_range() -> None:
    with pytest.raises(ThreeGraphInputError):
        ThreeGraph.of(3, [(1, 2, 4)])

@pytest.mark.parametrize(
    ("triples", "m", "decompositions", "aut", "coefficient"),
    [
        ([(1, 2, 3), (1, 2, 3)], 3, 2, 2, 1),
        ([(1, 2, 3), (1, 2, 3), (2, 4, 5), (3, 4, 5)], 5, 4, 2, 2),
        ([(1, 4, 5), (1, 4, 6), (2, 5, 6), (2, 5, 7), (3, 4, 7), (3, 6, 7)], 7, 6, 1, 6),
    ],
)
def test_worked_decompositions(
    triples: list, m: int, decompositions: int, aut: int, coefficient: int
) -> None:
    graph = ThreeGraph.of(m, triples)
    found = ordered_tree_decompositions(graph)
    assert len(found) == decompositions
    assert aut_factor(graph) == aut
    assert coeff_via_decompositions(monomial_of(graph.edges)) == coefficient

def test_decomposition_count_matches_square_for_five() -> None:
    square = pfaffian_tree_poly(5) ** 2
    for monomial, coefficient in square:
        assert coeff_via_decompositions(monomial) == coefficient, f"{monomial.to_text()} の係数が一致しません"

def test_decomposition_count_off_support_monomial() -> None:
    monomial = monomial_of([(1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 5)])
    assert (pfaffian_tree_poly(5) ** 2).coefficient(monomial) == coeff_via_decompositions(monomial)

def _square_coefficient(poly: Polynomial, monomial: Monomial) -> int:
    """poly² における monomial の係数を、因子の 2 分割ごとの積の和として求める。"""

    half = monomial.degree // 2
    total = 0
    for first in set(combinations(monomial.factors, half)):
        rest = list(monomial.factors)
        for factor in first:
            rest.remove(factor)
        total += poly.coefficient(Monomial.of(first)) * poly.coefficient(Monomial.of(rest))
    return total

def test_decomposition_count_on_random_seven_monomials() -> None:
    p7 = pfaffian_tree_poly(7)
    terms = [monomial for monomial, _ in p7]
    rng = random.Random(77)
    for _ in range(25):
        monomial = rng.choice(terms).times(rng.choice(terms))
        assert coeff_via_decompositions(monomial) == _square_coefficient(p7, monomial), monomial.to_text()

def test_ordered_tree_decompositions_requires_m_minus_one_edges() -> None:
    with pytest.raises(ThreeGraphInputError):
        ordered_tree_decompositions(ThreeGraph.of(5, [(1, 2, 3)]))

def test_format_decompositions_reports_totals() -> None:
    graph = ThreeGraph.of(3, [(1, 2, 3), (1, 2, 3)])
    text = format_decompositions(graph, ordered_tree_decompositions(graph))
    lines = text.splitlines()
    assert len(lines) == 3
    assert lines[0] == "+1 T=y[1,2,3] T'=y[1,2,3]"
    assert lines[-1] == "count +2 aut 2 coefficient 1"

def test_triples_of_rejects_x_variables() -> None:
    with pytest.raises(ThreeGraphInputError):
        triples_of(Monomial.of([x_var(1, 2)]))

def test_parse_three_graph_with_comments_and_header() -> None:
    graph = parse_three_graph("vertices 7  # 頂点数\n1 2 3\n3 2 1\n\n4 5 6 # 多重辺と別成分\n")
    assert graph.m == 7
    assert graph.edges == ((1, 2, 3), (1, 2, 3), (4, 5, 6))
    assert graph.multiplicities()[(1, 2, 3)] == 2

@pytest.mark.parametrize("text", ["", "1 2", "1 1 2", "a b c", "vertices x\n1 2 3"])
def test_parse_three_graph_rejects_bad_input(text: str) -> None:
    with pytest.raises(ThreeGraphInputError):
        parse_three_graph(text)

def test_read_three_graph_from_file(tmp_path: Path) -> None:
    path = tmp_path / "graph.txt"
    path.write_text("1 2 3\n1 4 5\n", encoding="utf-8")
    graph = read_three_graph(path)
    assert graph.m == 5
    assert is_tree3(graph)

def test_lambda_skew_is_skew_with_symbolic_entries() -> None:
    matrix = lambda_skew(MuTable.symbolic(4))
    assert matrix.is_skew()
    assert matrix.entry(0, 1) == Polynomial.variable(y_var(1, 2, 3)) + Polynomial.variable(y_var(1, 2, 4))

def test_mu_table_from_integers_normalizes_order() -> None:
    table = MuTable.from_integers(3, {(2, 1, 3): 4})
    assert table.get(1, 2, 3) == -4
    assert table.get(3, 2, 1) == 4
    with pytest.raises(ThreeGraphInputError):
        MuTable.from_integers(3, {(1, 2, 3): 1, (2, 1, 3): 1})
    with pytest.raises(ThreeGraphInputError):
        MuTable.from_integers(3, {(1, 1, 2): 5})

@pytest.mark.parametrize("m", [3, 4, 5])
def test_pmtt_symbolic(m: int) -> None:
    assert pmtt_check(m) is True

def test_pmtt_records_pfaffian_signs() -> None:
    result = run_pmtt(5, samples=5, seed=3)
    assert result.passed
    assert set(result.signs) == {1, 2, 3, 4, 5}
    assert set(result.signs.values()) <= {1, -1}

def test_evaluate_pm_matches_polynomial() -> None:
    table = MuTable.random(5, random.Random(11))
    assert evaluate_pm(5, table) == pfaffian_tree_poly(5).evaluate(table.as_assignment())

@pytest.mark.slow
def test_pmtt_seven_randomized() -> None:
    assert pmtt_check(7, samples=100, seed=42) is True
