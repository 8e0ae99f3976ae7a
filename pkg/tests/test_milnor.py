"""木表現 ξ・φ 写像・多項式 F, G と漸化式のテスト。"""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from diagrams import DiagramFormatError, weight_oracle  # type: ignore  # noqa: E402
from exactalg import Monomial, Polynomial, y_var  # type: ignore  # noqa: E402
from kirchhoff import LinkingMatrix, kirchhoff_poly, kirchhoff_value  # type: ignore  # noqa: E402
from milnor import (  # type: ignore  # noqa: E402
    DegreeMismatchError,
    EtaVar,
    F,
    F_as_polynomial,
    F_general,
    F_tilde,
    G_eval,
    G_value,
    TreeFormatError,
    UnsupportedAssemblyError,
    XiElement,
    canonicalize,
    format_tree,
    format_xi,
    h_replace,
    has_doubled_index,
    lemma_relations_check,
    levine_traldi_det,
    levine_traldi_matrix,
    lift_to_circles,
    parse_mu_table,
    parse_tree,
    parse_xi,
    phi,
    phi_confluence_check,
    phi_equivalent,
    phi_tree,
    random_tree,
    read_xi_file,
    recursion_check,
    recursion_identities,
    square_pm,
    strut,
    tree_ihx,
    w0_generators,
    w0_subspace,
    wedge,
    xi_from_linking,
)

H_TREE = "1:[2,[2,1]]"

LINKING = {(1, 2): 2, (2, 3): 1, (1, 3): -1}

def _h_tau() -> XiElement:
    return XiElement.of(3, 2, [(1, parse_tree(H_TREE))])

# ---- 木 ----------------------------------------------------------------------
def test_parse_tree_ignores_whitespace() -> None:
    tree = parse_tree(" 1 : [ 2 , [3,4] ] ")
    assert format_tree(tree) == "1:[2,[3,4]]"
    assert tree.leaves == (1, 2, 3, 4)
    assert tree.degree == 3
    assert tree.max_label == 4

@pytest.mark.parametrize("text", ["1[2,3]", "1:[2,3", "1:[2 3]", "1:[2,3]x", "0:2", "a:2", "1:"])
def test_parse_tree_rejects_malformed_text(text: str) -> None:
    with pytest.raises(TreeFormatError):
        parse_tree(text)

def test_canonicalize_tracks_antisymmetry() -> None:
    assert canonicalize(wedge(2, 1, 3)) == (wedge(1, 2, 3), -1)
    assert canonicalize(wedge(3, 1, 2)) == (wedge(1, 2, 3), 1)
    assert canonicalize(strut(2, 1)) == (strut(1, 2), 1)
    assert canonicalize(wedge(1, 2, 2)) == (None, 0), "同じ部分木の入れ替えで 0 になる想定です"
    assert canonicalize(parse_tree("1:[1,2]")) == (None, 0)

def test_tree_ihx_returns_three_regroupings() -> None:
    terms = tree_ihx(parse_tree("1:[2,[3,4]]"))
    assert len(terms) == 3
    assert all(term.degree == 3 for term in terms)
    assert all(sorted(term.leaves) == [1, 2, 3, 4] for term in terms)
    with pytest.raises(TreeFormatError):
        tree_ihx(wedge(1, 2, 3))

def test_random_tree_respects_degree_and_labels() -> None:
    rng = random.Random(9)
    for degree in range(1, 6):
        tree = random_tree(degree, 3, rng)
        assert tree.degree == degree
        assert tree.max_label <= 3
    with pytest.raises(TreeFormatError):
        random_tree(0, 3, rng)

def test_eta_var_orientation() -> None:
    eta = EtaVar(1, 2, 3, 4)
    assert eta.to_text() == "eta[1,2,3,4]"
    assert eta.tree.to_text() == "1:[2,[4,3]]"
    assert eta.canonical()[1] in (1, -1)

# ---- ξ -----------------------------------------------------------------------
def test_xi_element_collects_antisymmetric_terms() -> None:
    xi = XiElement.of(2, 3, [(1, wedge(1, 2, 3)), (2, wedge(2, 1, 3))])
    assert xi.coefficient(wedge(1, 2, 3)) == -1
    assert xi.coefficient(wedge(2, 1, 3)) == 1
    assert xi.wedge_coordinates() == {(1, 2, 3): -1}
    assert (xi - xi).is_zero()

def test_xi_element_rejects_wrong_degree_and_labels() -> None:
    with pytest.raises(DegreeMismatchError):
        XiElement.of(1, 3, [(1, wedge(1, 2, 3))])
    with pytest.raises(TreeFormatError):
        XiElement.of(1, 2, [(1, strut(1, 3))])
    with pytest.raises(DegreeMismatchError):
        XiElement.from_struts(3, {(1, 2): 1}) + XiElement.from_wedges(3, {(1, 2, 3): 1})

def test_strut_coordinates_drop_diagonal_by_default() -> None:
    xi = XiElement.from_struts(2, {(1, 1): 3, (2, 1): 5})
    assert xi.strut_coordinates() == {(1, 2): 5}
    assert xi.strut_coordinates(include_diagonal=True) == {(1, 1): 3, (1, 2): 5}

def test_as_assignment_fills_missing_variables_with_zero() -> None:
    assignment = XiElement.from_wedges(4, {(1, 2, 4): 2}).as_assignment()
    assert len(assignment) == 4
    assert assignment[y_var(1, 2, 4)] == 2
    assert assignment[y_var(2, 3, 4)] == 0
    with pytest.raises(DegreeMismatchError):
        _h_tau().as_assignment()

def test_to_lines_uses_signed_coefficients() -> None:
    xi = XiElement.from_struts(3, {(1, 2): 1, (2, 3): Fraction(-1, 2)})
    assert xi.to_lines() == ["tree 1 1:2 * +1", "tree 1 2:3 * -1/2"]

# ---- 入出力 ------------------------------------------------------------------
def test_parse_xi_applies_antisymmetry_and_labels() -> None:
    text = "labels 4\ntree 2 1:[2,3] * 1/2\ntree 2 2:[1,3] * 1/2  # AS で打ち消す\n"
    xi = parse_xi(text)
    assert xi.is_zero()
    assert xi.m == 4
    assert parse_xi("tree 2 1:[2,3] * 3\n").m == 3

def test_format_xi_output_reads_back(tmp_path: Path) -> None:
    xi = XiElement.from_wedges(5, {(1, 2, 3): 2, (1, 4, 5): Fraction(-1, 3)})
    path = tmp_path / "xi.txt"
    path.write_text(format_xi(xi), encoding="utf-8")
    restored = read_xi_file(path)
    assert restored == xi
    assert restored.m == 5

@pytest.mark.parametrize(
    ("text", "error"),
    [
        ("tree 3 1:[2,3] * 1\n", DegreeMismatchError),
        ("tree 1 1:2 * 1\ntree 2 1:[2,3] * 1\n", DegreeMismatchError),
        ("", TreeFormatError),
        ("tree 1 1:2 * x\n", TreeFormatError),
        ("labels x\ntree 1 1:2 * 1\n", TreeFormatError),
        ("tree 1 1:2\n", TreeFormatError),
    ],
)
def test_parse_xi_rejects_bad_input(text: str, error: type) -> None:
    with pytest.raises(error):
        parse_xi(text)

def test_parse_mu_table_with_comments() -> None:
    table = parse_mu_table("mu 1 2 3 = 4\n# コメント行\nmu 2 1 3 = -4  # AS\n")
    assert table == {(1, 2, 3): 4, (2, 1, 3): -4}

@pytest.mark.parametrize(
    ("text", "error"),
    [
        ("mu 1 2 = 1\nmu 1 2 3 = 1\n", DegreeMismatchError),
        ("mu 1 = 3\n", TreeFormatError),
        ("mu 1 2 3 = 1\nmu 1 2 3 = 2\n", TreeFormatError),
        ("mu 0 1 = 1\n", TreeFormatError),
        ("nu 1 2 = 1\n", TreeFormatError),
    ],
)
def test_parse_mu_table_rejects_bad_input(text: str, error: type) -> None:
    with pytest.raises(error):
        parse_mu_table(text)

# ---- 持ち上げと F, G ----------------------------------------------------------
def test_lift_to_circles_builds_double_y() -> None:
    diagram = lift_to_circles([wedge(1, 2, 3), wedge(1, 2, 3)], 3)
    assert diagram.m == 3
    assert diagram.trivalent_count == 2
    assert diagram.univalent_count == 6
    assert weight_oracle(diagram) == 2
    assert weight_oracle(lift_to_circles([wedge(1, 2, 3), wedge(1, 2, 3)], 3, seed=5)) == 2
    with pytest.raises(TreeFormatError):
        lift_to_circles([wedge(1, 2, 4)], 3)

def test_f_tilde_on_struts_and_wedges() -> None:
    s12 = XiElement.from_struts(3, {(1, 2): 1})
    s23 = XiElement.from_struts(3, {(2, 3): 1})
    assert F_tilde([s12, s23], 3) == 1
    assert F_tilde([s12, s12], 3) == 0
    assert F_tilde([XiElement.from_wedges(3, {(1, 2, 3): 1})] * 2, 3) == 2

def test_f_tilde_validates_arguments() -> None:
    s12 = XiElement.from_struts(3, {(1, 2): 1})
    with pytest.raises(DegreeMismatchError):
        F_tilde([s12], 3)
    with pytest.raises(DegreeMismatchError):
        F_tilde([s12, XiElement.from_wedges(3, {(1, 2, 3): 1})], 3)
    with pytest.raises(DegreeMismatchError):
        F_tilde([], 1)

def test_f_as_polynomial_small_cases() -> None:
    y123 = y_var(1, 2, 3)
    assert F_as_polynomial(2, 3) == Polynomial.monomial(Monomial.of([y123, y123]))
    assert F_as_polynomial(1, 3) == kirchhoff_poly(3)
    assert F_as_polynomial(2, 4).is_zero()

def test_f_as_polynomial_degree_one_is_kirchhoff_four() -> None:
    assert F_as_polynomial(1, 4) == kirchhoff_poly(4)

@pytest.mark.slow
def test_f_as_polynomial_five_circles() -> None:
    assert F_as_polynomial(1, 5) == kirchhoff_poly(5)
    assert F_as_polynomial(2, 5) == square_pm(5), "F_5^(2) は P_5² と一致する想定です"

def test_f_as_polynomial_rejects_unsupported_sizes() -> None:
    with pytest.raises(UnsupportedAssemblyError):
        F_as_polynomial(3, 3)
    with pytest.raises(UnsupportedAssemblyError):
        F_as_polynomial(1, 6)
    with pytest.raises(UnsupportedAssemblyError):
        F_as_polynomial(1, 1)

def test_f_of_linking_element_matches_kirchhoff() -> None:
    linking = LinkingMatrix.from_pairs(3, LINKING)
    assert F(xi_from_linking(linking), 3) == kirchhoff_value(linking)

def test_g_on_h_diagram() -> None:
    assert G_eval([], _h_tau(), 2) == -2
    assert G_value(XiElement.from_wedges(2, {}), _h_tau(), 2) == -2
    with pytest.raises(DegreeMismatchError):
        G_eval([XiElement.from_wedges(3, {(1, 2, 3): 1})], XiElement.from_wedges(3, {(1, 2, 3): 1}), 3)
    with pytest.raises(DegreeMismatchError):
        G_eval([], _h_tau(), 3)

def test_h_replace_relates_h_to_double_y() -> None:
    h_diagram = lift_to_circles([parse_tree(H_TREE)], 2)
    double_y = lift_to_circles([wedge(1, 2, 3), wedge(1, 2, 3)], 3)
    assert weight_oracle(h_diagram) == -2
    replaced = h_replace(h_diagram)
    assert replaced.m == 3
    assert weight_oracle(replaced) == -weight_oracle(double_y)
    with pytest.raises(DiagramFormatError):
        h_replace(double_y)

# ---- φ -----------------------------------------------------------------------
def test_phi_keeps_low_degree_trees() -> None:
    assert phi_tree(strut(1, 2), 2) == XiElement.from_struts(2, {(1, 2): 1})
    assert phi_tree(wedge(1, 2, 3), 3) == XiElement.from_wedges(3, {(1, 2, 3): 1})

def test_phi_lowers_degree_by_parity() -> None:
    odd = XiElement.of(3, 4, [(1, parse_tree("1:[2,[3,4]]"))])
    even = XiElement.of(4, 4, [(1, parse_tree("1:[2,[3,[4,1]]]"))])
    assert phi(odd).degree == 1
    assert phi(even).degree == 2

def test_phi_equivalent_uses_quotient() -> None:
    assert phi_equivalent(
        XiElement.from_struts(2, {(1, 1): 1, (1, 2): 2}),
        XiElement.from_struts(2, {(1, 2): 2}),
    )
    generator = w0_generators(4)[0]
    assert phi_equivalent(XiElement.from_wedges(4, generator), XiElement.zero(2, 4))
    assert not phi_equivalent(XiElement.from_wedges(4, {(1, 2, 3): 1}), XiElement.zero(2, 4))
    assert not phi_equivalent(XiElement.zero(1, 4), XiElement.zero(2, 4))

def test_w0_subspace_dimensions() -> None:
    assert w0_subspace(3).dimension == 0
    subspace = w0_subspace(4)
    assert subspace.dimension == 1
    assert all(subspace.contains(generator) for generator in w0_generators(4))
    assert not subspace.contains({(1, 2, 3): Fraction(1)})

def test_f_general_matches_determinant_formulas() -> None:
    struts = XiElement.from_struts(3, LINKING)
    assert F_general(1, 3, struts) == kirchhoff_value(LinkingMatrix.from_pairs(3, LINKING))
    wedges = XiElement.from_wedges(3, {(1, 2, 3): 3})
    assert F_general(2, 3, wedges) == F(wedges, 3) == 9
    with pytest.raises(DegreeMismatchError):
        F_general(2, 3, struts)

def test_f_general_single_degree_three_tree_on_two_circles() -> None:
    xi = XiElement.of(3, 2, [(1, parse_tree("1:[2,[2,1]]"))])
    assert F_general(3, 2, xi) == F(xi, 2, engine="oracle") == F(xi, 2, engine="reduced")

@pytest.mark.parametrize(
    ("n", "m"),
    [
        (3, 2),
        (3, 3),
        (4, 2),
        (4, 3),
        pytest.param(3, 4, marks=pytest.mark.slow),
        pytest.param(4, 4, marks=pytest.mark.slow),
    ],
)
def test_f_general_matches_weight_definition(n: int, m: int) -> None:
    rng = random.Random(100 * n + m)
    for _ in range(3):
        items = [(rng.choice([-2, -1, 1, 2]), random_tree(n, m, rng)) for _ in range(2)]
        xi = XiElement.of(n, m, items)
        assert F_general(n, m, xi) == F(xi, m), f"n={n}, m={m}, ξ={xi.to_lines()}"

@pytest.mark.parametrize("n", [3, 4])
def test_phi_confluence_small_degrees(n: int) -> None:
    assert phi_confluence_check(n, 4, samples=20, seed=42) is True

def test_phi_confluence_rejects_degree_out_of_range() -> None:
    with pytest.raises(DegreeMismatchError):
        phi_confluence_check(2, 4)

@pytest.mark.slow
def test_phi_confluence_high_degrees() -> None:
    assert phi_confluence_check(5, 4, samples=50, seed=7) is True
    assert phi_confluence_check(6, 4, samples=50, seed=7) is True

def test_lemma_relations_agree_on_integer_linking() -> None:
    assert lemma_relations_check(LinkingMatrix.from_pairs(3, LINKING)) is True
    assert lemma_relations_check(LinkingMatrix.from_pairs(4, {(1, 2): 1, (2, 3): -2, (3, 4): 1, (1, 4): 3})) is True

# ---- 漸化式と Levine-Traldi -----------------------------------------------------
def test_square_pm_worked_coefficient() -> None:
    monomial = Monomial.of(y_var(*triple) for triple in ((1, 2, 3), (1, 4, 5), (2, 3, 5), (3, 4, 5)))
    assert square_pm(5).coefficient(monomial) == 2
    assert square_pm(3) == Polynomial.variable(y_var(1, 2, 3)) ** 2

def test_recursion_identities_and_doubled_index() -> None:
    names = [identity[0] for identity in recursion_identities(5)]
    assert names == ["square", "shared-pair", "disjoint-pair"]
    assert has_doubled_index(square_pm(5))
    assert not has_doubled_index(Polynomial.variable(y_var(1, 2, 3)))

def test_recursion_check_five() -> None:
    assert recursion_check(5, samples=1) is True

def test_recursion_check_rejects_unsupported_m() -> None:
    for m in (4, 6, 9):
        with pytest.raises(DegreeMismatchError):
            recursion_check(m)

@pytest.mark.slow
def test_recursion_check_seven() -> None:
    assert recursion_check(7, samples=1, seed=3) is True

def test_levine_traldi_matrix_reads_reversed_indices() -> None:
    matrix = levine_traldi_matrix(2, 3, {(1, 2, 3): 1})
    assert matrix.entry(2, 1) == 1
    assert matrix.entry(1, 2) == 0

def test_levine_traldi_det_on_laplacian_table() -> None:
    table = {}
    for (i, j), value in LINKING.items():
        table[(i, j)] = table[(j, i)] = -value
        table[(i, i)] = table.get((i, i), 0) + value
        table[(j, j)] = table.get((j, j), 0) + value
    expected = kirchhoff_value(LinkingMatrix.from_pairs(3, LINKING))
    assert levine_traldi_det(1, 3, table) == expected
    assert levine_traldi_det(1, 3, table, p=3) == expected

def test_levine_traldi_rejects_inconsistent_table() -> None:
    with pytest.raises(DegreeMismatchError):
        levine_traldi_matrix(2, 3, {(1, 2): 1})
    with pytest.raises(DegreeMismatchError):
        levine_traldi_matrix(0, 3, {})
