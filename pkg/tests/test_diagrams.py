"""円周上の uni-trivalent 図式と重み W のテスト。"""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from diagrams import (  # type: ignore  # noqa: E402
    DiagramBuilder,
    DiagramFormatError,
    NonChordDiagramError,
    ScanParameterError,
    apply_as,
    canonical_key,
    chord_diagram,
    chord_spanning_check,
    chord_weight,
    format_diagram,
    ihx_terms,
    insert_wheel2,
    parse_diagram,
    profile_components,
    random_diagram,
    random_shape,
    read_diagram,
    resolved_rule_table,
    smooth_all_chords,
    smooth_chord,
    stu_expand,
    vanishing_scan,
    weight,
    weight_oracle,
    weight_reduced,
)
from diagrams.generator import ComponentSpec  # type: ignore  # noqa: E402
from diagrams.reduction import bubble_reference, h_reference, relb_reference  # type: ignore  # noqa: E402
from diagrams.vanishing import must_vanish  # type: ignore  # noqa: E402
from milnor import lift_to_circles, parse_tree, wedge  # type: ignore  # noqa: E402

def _double_y():
    builder = DiagramBuilder(3)
    builder.y(1, 2, 3)
    builder.y(1, 2, 3)
    return builder.build()

def test_unknot_has_weight_one() -> None:
    diagram = chord_diagram(1, [[]])
    assert smooth_all_chords(diagram) == 1
    assert chord_weight(diagram) == 1
    assert weight(diagram) == 1

def test_spanning_chords_have_weight_one() -> None:
    diagram = chord_diagram(3, [[1], [1, 2], [2]])
    assert weight_oracle(diagram) == 1
    assert weight_reduced(diagram) == 1

def test_non_spanning_chords_vanish() -> None:
    assert weight(chord_diagram(3, [[1, 2], [1, 2], []])) == 0
    assert weight(chord_diagram(1, [[1, 1]])) == 0, "同じ円周上の弦は円周を 2 本に分けます"

def test_smooth_chord_merges_two_circles() -> None:
    diagram = chord_diagram(2, [[1], [1]])
    smoothed = smooth_chord(diagram, diagram.circles[0][0])
    assert smoothed.m == 1
    assert smoothed.circles == ((),)

def test_smoothing_rejects_trivalent_diagram() -> None:
    with pytest.raises(NonChordDiagramError):
        smooth_all_chords(_double_y())

def test_chord_spanning_lemma_exhaustive() -> None:
    for m in (2, 3, 4):
        report = chord_spanning_check(m)
        assert report.passed, f"m={m} で不一致: {report.mismatches[:3]}"
        assert report.spanning > 0
    with pytest.raises(ScanParameterError):
        chord_spanning_check(5)

def test_single_y_vanishes_and_expands_to_nothing() -> None:
    builder = DiagramBuilder(3)
    builder.y(1, 2, 3)
    diagram = builder.build()
    assert weight_oracle(diagram) == 0
    assert len(stu_expand(diagram)) == 0

def test_double_y_weight_is_two() -> None:
    diagram = _double_y()
    assert weight_oracle(diagram) == 2
    assert weight_reduced(diagram) == 2

def test_stu_expand_sums_to_oracle() -> None:
    diagram = _double_y()
    total = sum((coefficient * chord_weight(term) for coefficient, term in stu_expand(diagram).items()), Fraction(0))
    assert total == weight_oracle(diagram)
    assert all(term.is_chord_diagram() for _, term in stu_expand(diagram).items())

def test_antisymmetry_flips_weight() -> None:
    diagram = _double_y()
    assert weight_oracle(apply_as(diagram, 0)) == -weight_oracle(diagram)
    assert weight_oracle(apply_as(apply_as(diagram, 1), 0)) == weight_oracle(diagram)
    with pytest.raises(DiagramFormatError):
        apply_as(diagram, 5)

def test_ihx_terms_sum_to_zero() -> None:
    diagram = h_reference()
    slot = diagram.vertices[0][0]
    terms = ihx_terms(diagram, slot)
    assert len(terms) == 3
    assert sum((weight_oracle(term) for term in terms), Fraction(0)) == 0

def test_ihx_rejects_leg_edges() -> None:
    diagram = _double_y()
    with pytest.raises(DiagramFormatError):
        ihx_terms(diagram, diagram.vertices[0][0])

def test_two_legged_wheel_multiplies_by_minus_two() -> None:
    base = chord_diagram(3, [[1], [1, 2], [2]])
    wheeled = insert_wheel2(base, 1, 0, 2, 1)
    assert weight_oracle(wheeled) == -2 * weight_oracle(base)
    assert weight_reduced(wheeled) == weight_oracle(wheeled)
    with pytest.raises(DiagramFormatError):
        insert_wheel2(base, 4, 0, 1, 0)

def test_resolved_rule_table_is_consistent() -> None:
    rules = resolved_rule_table()
    assert rules.bubble_planar == weight_oracle(bubble_reference(True))
    assert rules.bubble_crossed == -rules.bubble_planar
    assert rules.bubble_planar == -2
    assert rules.edge_sign in (1, -1)
    assert rules.relb_sign in (1, -1)
    assert weight_reduced(relb_reference()) == weight_oracle(relb_reference())

def test_reduced_engine_matches_oracle_on_random_diagrams() -> None:
    rng = random.Random(2024)
    for _ in range(40):
        m = rng.randint(1, 3)
        degree = rng.randint(1, 5)
        diagram = random_diagram(m, random_shape(degree, rng), rng)
        assert weight_reduced(diagram) == weight_oracle(diagram), diagram.describe()

@pytest.mark.slow
def test_reduced_engine_matches_oracle_at_full_scale() -> None:
    rng = random.Random(7)
    mismatches = []
    for _ in range(500):
        m = rng.randint(2, 4)
        degree = rng.randint(1, 8)
        diagram = random_diagram(m, random_shape(degree, rng), rng)
        if weight_reduced(diagram) != weight_oracle(diagram):
            mismatches.append(diagram.describe())
    assert not mismatches, f"{len(mismatches)} 件で簡約エンジンとオラクルが食い違いました: {mismatches[:3]}"

def test_weight_rejects_unknown_engine() -> None:
    with pytest.raises(ValueError):
        weight(_double_y(), "fast")  # type: ignore[arg-type]

def test_canonical_key_ignores_rotation_and_ids() -> None:
    first = chord_diagram(2, [[1, 2], [1, 2]])
    second = chord_diagram(2, [[7, 3], [3, 7]])
    assert canonical_key(first) == canonical_key(second)

def test_profile_components_classifies_shapes() -> None:
    rng = random.Random(5)
    diagram = random_diagram(
        2,
        [ComponentSpec("tree", 4), ComponentSpec("wheel", 3), ComponentSpec("other", 3)],
        rng,
    )
    kinds = sorted(shape.kind for shape in profile_components(diagram).components)
    assert kinds == ["other", "tree", "wheel"]
    tree = next(shape for shape in profile_components(diagram).components if shape.kind == "tree")
    assert tree.degree == 4
    assert tree.legs == 5
    assert profile_components(_double_y()).summary() == "Y + Y"
    assert profile_components(chord_diagram(2, [[1], [1]])).summary() == "chord"

def test_must_vanish_by_parity_and_shape() -> None:
    profile = profile_components(chord_diagram(3, [[1], [1, 2], [2]]))
    assert must_vanish(profile, 1, 3, 2) is False
    assert must_vanish(profile, 1, 3, 3) is True
    assert must_vanish(profile, 2, 3, 3) is True, "次数 n 未満の木は消滅補題の例外にならない想定です"

def test_vanishing_scan_small_parameters() -> None:
    report = vanishing_scan(1, 3, 2, 40, seed=42)
    assert report.passed
    assert report.samples == 40
    assert report.allowed_shape > 0
    assert sum(report.profiles.values()) == 40

def test_vanishing_scan_rejects_bad_parameters() -> None:
    with pytest.raises(ScanParameterError):
        vanishing_scan(0, 3, 2, 10)
    with pytest.raises(ScanParameterError):
        vanishing_scan(1, 3, 4, 10)

@pytest.mark.slow
def test_vanishing_scan_degree_two_trees() -> None:
    assert vanishing_scan(2, 3, 4, 200, seed=7).passed
    assert vanishing_scan(2, 3, 5, 200, seed=7).passed

@pytest.mark.slow
@pytest.mark.parametrize(("n", "m"), [(2, 3), (2, 4), (3, 3)])
def test_vanishing_scan_at_lowest_tree_degree(n: int, m: int) -> None:
    d = n * (m - 1)
    report = vanishing_scan(n, m, d, 200, seed=11)
    assert report.passed, report.counterexamples[:3]
    assert report.samples == 200
    assert report.allowed_shape > 0, "m-1 個の木からなる例外形が 1 件も生成されていません"

def test_vanishing_scan_below_chord_count_is_zero() -> None:
    report = vanishing_scan(1, 4, 2, 60, seed=3)
    assert report.passed
    assert report.nonzero == 0, "弦が m-1 本未満なら W = 0 の想定です"

def _lowest_parity_degree(n: int, m: int) -> int:
    base = n * (m - 1)
    return base if (base - m) % 2 != 0 else base + 1

@pytest.mark.parametrize(
    ("n", "m", "diagram", "expected"),
    [
        (1, 3, chord_diagram(3, [[1], [1, 2], [2]]), 1),
        (2, 3, lift_to_circles([wedge(1, 2, 3), wedge(1, 2, 3)], 3), 2),
        (2, 2, lift_to_circles([parse_tree("1:[2,[2,1]]")], 2), -2),
    ],
)
def test_lowest_nonvanishing_degree(n: int, m: int, diagram, expected: int) -> None:
    d = _lowest_parity_degree(n, m)
    assert d in (n * (m - 1), n * (m - 1) + 1)
    assert diagram.degree == d
    assert weight_oracle(diagram) == expected
    assert weight_reduced(diagram) == expected
    below = vanishing_scan(n, m, d - 1, 40, seed=5)
    assert below.passed
    assert below.nonzero == 0, f"次数 {d - 1} では W が全て 0 の想定です"

def test_parse_diagram_builds_h_shape() -> None:
    text = """\
# H 字の木
circles 2
circle 1: a c
circle 2: b d
triv 1: e x y
triv 2: f z w
edge 1.e 2.f
edge 1.x a
edge 2.z c
edge 1.y b
edge 2.w d
"""
    diagram = parse_diagram(text)
    assert diagram.m == 2
    assert diagram.trivalent_count == 2
    assert diagram.univalent_count == 4
    assert diagram.degree == 3
    assert weight_oracle(diagram) == weight_oracle(h_reference())

def test_format_diagram_output_parses_back(tmp_path: Path) -> None:
    diagram = _double_y()
    path = tmp_path / "double_y.txt"
    path.write_text(format_diagram(diagram), encoding="utf-8")
    restored = read_diagram(path)
    assert canonical_key(restored) == canonical_key(diagram)
    assert format_diagram(diagram).startswith("circles 3\ncircle 1: 1 2\n")

@pytest.mark.parametrize(
    "text",
    [
        "circle 1: a\n",
        "circles 1\ncircle 1: a b\nedge a c\n",
        "circles 1\ncircle 1: a b c\nedge a b\nedge a c\n",
        "circles 1\ncircle 1:\ntriv 1: a b c\ntriv 2: d e f\nedge 1.a 2.d\nedge 1.b 2.e\nedge 1.c 2.f\n",
        "circles 1\ncircle 1: a b\nwire a b\n",
        "circles 2\ncircle 1: a b\nedge a b\n",
    ],
)
def test_parse_diagram_rejects_malformed_input(text: str) -> None:
    with pytest.raises(DiagramFormatError):
        parse_diagram(text)

def test_builder_rejects_double_connection() -> None:
    builder = DiagramBuilder(1)
    first, second = builder.chord(1, 1)
    with pytest.raises(DiagramFormatError):
        builder.connect(first, builder.leg(1))
    with pytest.raises(DiagramFormatError):
        chord_diagram(1, [[1]])
