"""組紐閉包の Conway 多項式と絡み目レベルの照合のテスト。"""

from __future__ import annotations

import logging
import random
from fractions import Fraction

import pytest

from conway import (  # type: ignore  # noqa: E402
    BraidWord,
    BraidWordError,
    ConwayPoly,
    closure_components,
    conway,
    hoste_check,
    hoste_suite,
    linking_matrix,
    linking_numbers_from_word,
    markov_check,
    parity_and_renorm_check,
    parse_braid,
    parse_z_terms,
    random_braid,
    resolved_normalization,
    skein_check,
    skein_suite,
)
from kirchhoff import kirchhoff_value  # type: ignore  # noqa: E402

HOPF = BraidWord(2, (1, 1))
TREFOIL = BraidWord(2, (1, 1, 1))
BORROMEAN = BraidWord(3, (1, -2, 1, -2, 1, -2))

def test_parse_braid_accepts_spacing_variants() -> None:
    assert parse_braid("k=3; 1 -2 1") == BraidWord(3, (1, -2, 1))
    assert parse_braid("  k=2;1 1 ") == HOPF
    assert parse_braid("k=2;") == BraidWord(2)

@pytest.mark.parametrize("text", ["3; 1", "k=2 1 1", "k=2; 1 x", "k=2; 2", "k=2; 0", "k=0;", "k=x; 1"])
def test_parse_braid_rejects_bad_words(text: str) -> None:
    with pytest.raises(BraidWordError):
        parse_braid(text)

def test_braid_word_text_and_operations() -> None:
    word = BraidWord(3, (1, -2))
    assert word.to_text() == "k=3; 1 -2"
    assert str(BraidWord(2)) == "k=2;"
    assert word.inverse() == BraidWord(3, (2, -1))
    assert word.writhe == 0
    assert HOPF.stabilize() == BraidWord(3, (1, 1, 2))
    assert HOPF.stabilize(False) == BraidWord(3, (1, 1, -2))
    assert TREFOIL.with_sign(2, False) == BraidWord(2, (1, -1, 1))
    assert TREFOIL.without(1) == HOPF

def test_braid_word_rejects_bad_positions_and_concatenation() -> None:
    with pytest.raises(BraidWordError):
        TREFOIL.with_sign(0, True)
    with pytest.raises(BraidWordError):
        TREFOIL.without(4)
    with pytest.raises(BraidWordError):
        HOPF + BORROMEAN

def test_closure_components_follow_permutation_cycles() -> None:
    assert closure_components(BraidWord(3, (1, 2))) == [(1, 2, 3)]
    assert closure_components(BraidWord(3, (1,))) == [(1, 2), (3,)]
    assert closure_components(BORROMEAN) == [(1,), (2,), (3,)]
    assert closure_components(BraidWord(2)) == [(1,), (2,)]

def test_linking_numbers_of_hopf_and_borromean() -> None:
    hopf, component_of = linking_numbers_from_word(HOPF)
    assert hopf.m == 2
    assert hopf.entry(1, 2) == 1
    assert component_of == {1: 1, 2: 2}
    negative = linking_matrix(BraidWord(2, (-1, -1)))
    assert negative.entry(1, 2) == -1
    borromean = linking_matrix(BORROMEAN)
    assert all(borromean.entry(i, j) == 0 for i in range(1, 4) for j in range(1, 4) if i != j)

@pytest.mark.parametrize(
    ("braid", "expected"),
    [
        (BraidWord(1), "+1"),
        (BraidWord(2), "0"),
        (HOPF, "+1*z"),
        (BraidWord(2, (-1, -1)), "-1*z"),
        (TREFOIL, "+1 +1*z^2"),
        (BraidWord(3, (1, -2, 1, -2)), "+1 -1*z^2"),
        (BORROMEAN, "+1*z^4"),
    ],
)
def test_conway_of_standard_closures(braid: BraidWord, expected: str) -> None:
    assert conway(braid).to_text() == expected

def test_resolved_normalization_logs_calibration(caplog: pytest.LogCaptureFixture) -> None:
    resolved_normalization.cache_clear()
    with caplog.at_level(logging.INFO, logger="conway.burau"):
        normalization = resolved_normalization()

    matching = [record for record in caplog.records if record.getMessage() == "burau normalization calibrated"]
    assert matching, "正規化の決定ログがありません"
    assert getattr(matching[-1], "event_level", "") == "calibration"
    assert normalization == resolved_normalization()

def test_skein_relation_on_trefoil_positions() -> None:
    for position in range(1, 4):
        assert skein_check(TREFOIL, position)
    assert skein_check(BORROMEAN, 3)

def test_hoste_relation_on_standard_links() -> None:
    assert hoste_check(HOPF)
    assert hoste_check(TREFOIL)
    assert hoste_check(BORROMEAN)
    assert hoste_check(BraidWord(3, (1, 1, 2, 2)), with_weights=True)
    assert conway(BraidWord(3, (1, 1, 2, 2))).coefficient(2) == kirchhoff_value(linking_matrix(BraidWord(3, (1, 1, 2, 2))))

def test_parity_and_renormalization() -> None:
    assert parity_and_renorm_check(TREFOIL)
    assert parity_and_renorm_check(HOPF)
    assert parity_and_renorm_check(BORROMEAN, order=4)

def test_markov_moves_preserve_conway() -> None:
    assert markov_check(TREFOIL, seed=1)
    assert markov_check(BORROMEAN, seed=2, conjugations=2)
    assert markov_check(BraidWord(1), seed=3)

def test_random_braid_stays_in_range() -> None:
    rng = random.Random(17)
    for _ in range(30):
        braid = random_braid(rng, 4, 6)
        assert 2 <= braid.strands <= 4
        assert 1 <= len(braid) <= 6

def test_braid_suites_pass_with_small_samples() -> None:
    skein = skein_suite(20, seed=3)
    assert skein.passed, skein.failures
    assert skein.samples == 20
    hoste = hoste_suite(15, seed=3, with_weights=True)
    assert hoste.passed, hoste.failures
    with pytest.raises(BraidWordError):
        skein_suite(-1)

def test_parse_z_terms_collects_powers() -> None:
    assert parse_z_terms("1 z2 -3z2 2z -z2") == [1, 2, -3]
    assert parse_z_terms("z") == [0, 1]
    assert parse_z_terms("1/2z3") == [0, 0, 0, Fraction(1, 2)]

@pytest.mark.parametrize("text", ["", "+", "z-2", "2x", "1 2y"])
def test_parse_z_terms_rejects_bad_terms(text: str) -> None:
    with pytest.raises(BraidWordError):
        parse_z_terms(text)

def test_conway_poly_text_and_arithmetic() -> None:
    assert ConwayPoly.of([1, 0, 1, 0]).coefficients == (1, 0, 1)
    assert ConwayPoly.of([0, -2]).to_text() == "-2*z"
    assert ConwayPoly.of([]).to_text() == "0"
    assert ConwayPoly.of([0, 0, 3]).lowest_nonzero() == (2, 3)
    assert ConwayPoly.of([1]).times_z() == ConwayPoly.of([0, 1])
    assert (ConwayPoly.of([1, 1]) - ConwayPoly.of([1])).to_text() == "+1*z"
