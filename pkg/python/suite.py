# -*- coding: utf-8 -*-
"""固定例の再現と乱択性質検査をまとめて実行するスイート。

``paper-examples`` は値が既知の固定例を全て再計算し、``properties`` は
設定のサンプル数と seed で乱択の不変性を検査する。結果は JSON で出力できる
pydantic モデルで返す。"""

from __future__ import annotations

import logging
import random
from fractions import Fraction
from typing import Callable, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, computed_field

from config import CheckConfig, load_check_config
from conway import (
    BraidWord,
    conway,
    hoste_check,
    hoste_suite,
    markov_check,
    parity_and_renorm_check,
    random_braid,
    skein_check,
    skein_suite,
)
from diagrams import (
    Diagram,
    DiagramBuilder,
    chord_diagram,
    chord_spanning_check,
    insert_wheel2,
    random_diagram,
    random_shape,
    vanishing_scan,
    weight,
    weight_oracle,
    weight_reduced,
)
from exactalg import (
    Monomial,
    Polynomial,
    merge_basis,
    renormalization_prefactor,
    series_renormalize,
    y_canon,
    y_var,
)
from kirchhoff import LinkingMatrix, kirchhoff_poly, kirchhoff_value, mtt_check, spanning_trees_complete
from milnor import (
    F,
    F_as_polynomial,
    F_general,
    F_tilde,
    G_eval,
    XiElement,
    h_replace,
    lift_to_circles,
    parse_tree,
    phi_confluence_check,
    recursion_check,
    square_pm,
    wedge,
)
from pfaffian_tree import (
    ThreeGraph,
    aut_factor,
    coeff_via_decompositions,
    epsilon,
    is_tree3,
    ordered_tree_decompositions,
    pfaffian_tree_poly,
    pmtt_check,
)
from utils import log_structured_event, setup_logger, span_context

logger = setup_logger("conway.suite")

SuiteName = Literal["paper-examples", "properties"]
SUITE_NAMES: Tuple[str, ...] = ("paper-examples", "properties")

BORROMEAN = BraidWord(3, (1, -2, 1, -2, 1, -2))


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class SuiteReport(BaseModel):
    """スイート 1 回分の結果。時刻など実行ごとに変わる値は含めない。"""

    suite: str
    seed: int
    checks: List[CheckResult] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> int:
        return sum(1 for check in self.checks if check.passed)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def failed(self) -> int:
        return sum(1 for check in self.checks if not check.passed)

    @property
    def ok(self) -> bool:
        return self.failed == 0


Check = Tuple[str, Callable[[], Tuple[bool, str]]]


def _expect(actual: object, expected: object) -> Tuple[bool, str]:
    return actual == expected, f"actual={actual} expected={expected}"


def _y_product(*triples: Tuple[int, int, int]) -> Monomial:
    return Monomial.of(y_var(*triple) for triple in triples)


def spanning_chain_diagram() -> Diagram:
    """円周 1-2, 2-3 を弦で結んだ全域木型の弦図式 (W = 1)。"""

    return chord_diagram(3, [[1], [1, 2], [2]])


def double_y_diagram() -> Diagram:
    """円周 1, 2, 3 に脚を持つ Y 字成分 2 個 (W = 2)。"""

    return lift_to_circles([wedge(1, 2, 3), wedge(1, 2, 3)], 3)


H_TREE = "1:[2,[2,1]]"


def h_diagram() -> Diagram:
    """円周 1, 2 にそれぞれ 2 本の脚を持つ H 字の木 (W = -2)。"""

    return lift_to_circles([parse_tree(H_TREE)], 2)


def _h_tau() -> XiElement:
    return XiElement.of(3, 2, [(Fraction(1), parse_tree(H_TREE))])


def _strut_xi(m: int, i: int, j: int) -> XiElement:
    return XiElement.from_struts(m, {(i, j): 1})


def _fixed_example_checks() -> List[Check]:
    p5 = pfaffian_tree_poly(5)
    y123, sign = y_canon(2, 1, 3)
    double = ThreeGraph.of(3, [(1, 2, 3), (1, 2, 3)])
    five = ThreeGraph.of(5, [(1, 2, 3), (1, 2, 3), (2, 4, 5), (3, 4, 5)])
    seven_triples = [(1, 4, 5), (1, 4, 6), (2, 5, 6), (2, 5, 7), (3, 4, 7), (3, 6, 7)]
    seven = ThreeGraph.of(7, seven_triples)
    lemma_sparse = DiagramBuilder(4)
    lemma_sparse.chord(1, 2)
    lemma_sparse.y(1, 2, 3)
    worked = Polynomial.monomial(_y_product((1, 2, 3), (1, 4, 5)), 2) * (
        Polynomial.variable(y_var(2, 3, 4)) + Polynomial.variable(y_var(2, 3, 5))
    ) * (Polynomial.variable(y_var(2, 4, 5)) + Polynomial.variable(y_var(3, 4, 5)))
    prefactor = renormalization_prefactor(8).exact_values()
    return [
        ("y_canon antisymmetry", lambda: _expect((y123, sign), (y_var(1, 2, 3), -1))),
        ("y_canon repeated index", lambda: _expect(y_canon(1, 1, 2)[0], None)),
        (
            "merge_basis worked substitution",
            lambda: _expect(
                merge_basis(Polynomial.variable(y_var(2, 3, 5)), {3: {3: 1, 4: 1}}),
                Polynomial.variable(y_var(2, 3, 5)) + Polynomial.variable(y_var(2, 4, 5)),
            ),
        ),
        ("renormalization prefactor", lambda: _expect(prefactor[:5], [1, 0, Fraction(-1, 24), 0, Fraction(7, 5760)])),
        ("spanning trees of K_2", lambda: _expect(len(spanning_trees_complete(2)), 1)),
        ("spanning trees of K_3", lambda: _expect(len(spanning_trees_complete(3)), 3)),
        ("D_3 has three terms", lambda: _expect(len(kirchhoff_poly(3)), 3)),
        ("matrix-tree m=3", lambda: _expect(mtt_check(3), True)),
        ("3-graph tree m=5", lambda: _expect(is_tree3(ThreeGraph.of(5, [(1, 2, 3), (1, 4, 5)])), True)),
        ("epsilon leading term", lambda: _expect(epsilon([(1, 2, 3), (1, 4, 5)], 5), 1)),
        ("epsilon second term", lambda: _expect(epsilon([(1, 2, 4), (1, 3, 5)], 5), -1)),
        ("P_4 vanishes", lambda: _expect(pfaffian_tree_poly(4).is_zero(), True)),
        ("P_5 has 15 terms", lambda: _expect(len(p5), 15)),
        (
            "P_5 leading terms",
            lambda: _expect(
                [
                    p5.coefficient(_y_product((1, 2, 3), (1, 4, 5))),
                    p5.coefficient(_y_product((1, 2, 4), (1, 3, 5))),
                    p5.coefficient(_y_product((1, 2, 5), (1, 3, 4))),
                ],
                [1, -1, 1],
            ),
        ),
        ("pfaffian matrix-tree m=5", lambda: _expect(pmtt_check(5), True)),
        ("pfaffian matrix-tree m=4", lambda: _expect(pmtt_check(4), True)),
        ("double edge decompositions", lambda: _expect(len(ordered_tree_decompositions(double)), 2)),
        ("double edge aut", lambda: _expect(aut_factor(double), 2)),
        ("five-vertex decompositions", lambda: _expect(len(ordered_tree_decompositions(five)), 4)),
        ("five-vertex aut", lambda: _expect(aut_factor(five), 2)),
        ("seven-vertex decompositions", lambda: _expect(len(ordered_tree_decompositions(seven)), 6)),
        ("seven-vertex aut", lambda: _expect(aut_factor(seven), 1)),
        ("y123^2 in P_3^2", lambda: _expect(coeff_via_decompositions(_y_product((1, 2, 3), (1, 2, 3))), 1)),
        (
            "five-vertex coefficient",
            lambda: _expect(coeff_via_decompositions(_y_product((1, 2, 3), (1, 2, 3), (2, 4, 5), (3, 4, 5))), 2),
        ),
        ("seven-vertex coefficient", lambda: _expect(coeff_via_decompositions(_y_product(*seven_triples)), 6)),
        ("spanning chain weight", lambda: _expect(weight_oracle(spanning_chain_diagram()), 1)),
        ("chord spanning lemma m=3", lambda: _expect(chord_spanning_check(3).passed, True)),
        ("non-tree chords vanish", lambda: _expect(weight_oracle(chord_diagram(3, [[1, 2], [1, 2], []])), 0)),
        ("double Y weight", lambda: _expect(weight_oracle(double_y_diagram()), 2)),
        (
            "two-legged wheel factor",
            lambda: _expect(
                weight_oracle(insert_wheel2(spanning_chain_diagram(), 1, 0, 2, 0)),
                -2 * weight_oracle(spanning_chain_diagram()),
            ),
        ),
        ("sparse diagram vanishes", lambda: _expect(weight(lemma_sparse.build()), 0)),
        ("parity scan n=1 m=4", lambda: _expect(vanishing_scan(1, 4, 2, 30).passed, True)),
        ("F struts spanning", lambda: _expect(F_tilde([_strut_xi(3, 1, 2), _strut_xi(3, 2, 3)], 3), 1)),
        ("F struts non-tree", lambda: _expect(F_tilde([_strut_xi(3, 1, 2), _strut_xi(3, 1, 2)], 3), 0)),
        (
            "F wedges double Y",
            lambda: _expect(
                F_tilde([XiElement.from_wedges(3, {(1, 2, 3): 1})] * 2, 3),
                2,
            ),
        ),
        (
            "F_3^(2) is y123^2",
            lambda: _expect(F_as_polynomial(2, 3), Polynomial.monomial(_y_product((1, 2, 3), (1, 2, 3)))),
        ),
        ("F_3^(1) is D_3", lambda: _expect(F_as_polynomial(1, 3), kirchhoff_poly(3))),
        ("F_4^(2) vanishes", lambda: _expect(F_as_polynomial(2, 4).is_zero(), True)),
        ("recursion m=5", lambda: _expect(recursion_check(5, samples=1), True)),
        (
            "F_5 worked coefficient",
            lambda: _expect(square_pm(5).coefficient(_y_product((1, 2, 3), (1, 4, 5), (2, 3, 5), (3, 4, 5))), 2),
        ),
        (
            "worked product coefficients in F_5",
            lambda: _expect(
                all(square_pm(5).coefficient(monomial) == value for monomial, value in worked),
                True,
            ),
        ),
        ("phi confluence degree 4", lambda: _expect(phi_confluence_check(4, 4, samples=20), True)),
        (
            "F_general n=1 is D_m",
            lambda: _expect(
                F_general(1, 3, XiElement.from_struts(3, {(1, 2): 2, (2, 3): 1, (1, 3): -1})),
                kirchhoff_value(LinkingMatrix.from_pairs(3, {(1, 2): 2, (2, 3): 1, (1, 3): -1})),
            ),
        ),
        (
            "F_general n=2 is P_m^2",
            lambda: _expect(
                F_general(2, 3, XiElement.from_wedges(3, {(1, 2, 3): 3})),
                F(XiElement.from_wedges(3, {(1, 2, 3): 3}), 3),
            ),
        ),
        ("G_2^(2) on H diagram", lambda: _expect(G_eval([], _h_tau(), 2), -2)),
        ("H diagram weight", lambda: _expect(weight_oracle(h_diagram()), -2)),
        ("H replacement", lambda: _expect(weight_oracle(h_replace(h_diagram())), -weight_oracle(double_y_diagram()))),
        ("unknot", lambda: _expect(conway(BraidWord(1)).to_text(), "+1")),
        ("2-unlink", lambda: _expect(conway(BraidWord(2)).to_text(), "0")),
        ("hopf", lambda: _expect(conway(BraidWord(2, (1, 1))).to_text(), "+1*z")),
        ("trefoil", lambda: _expect(conway(BraidWord(2, (1, 1, 1))).to_text(), "+1 +1*z^2")),
        ("borromean", lambda: _expect(conway(BORROMEAN).to_text(), "+1*z^4")),
        ("borromean hoste", lambda: _expect(hoste_check(BORROMEAN), True)),
        ("hopf hoste", lambda: _expect(hoste_check(BraidWord(2, (1, 1))), True)),
        ("borromean renormalization", lambda: _expect(parity_and_renorm_check(BORROMEAN), True)),
    ]


def _oracle_agreement(config: CheckConfig, seed: int) -> Tuple[bool, str]:
    rng = random.Random(seed)
    mismatches = 0
    for _ in range(config.diagram_samples):
        m = rng.randint(2, 4)
        degree = rng.randint(1, 8)
        diagram = random_diagram(m, random_shape(degree, rng), rng)
        if weight_oracle(diagram) != weight_reduced(diagram):
            mismatches += 1
    return mismatches == 0, f"samples={config.diagram_samples} mismatches={mismatches}"


def _vanishing(config: CheckConfig, seed: int) -> Tuple[bool, str]:
    failures: List[str] = []
    for n, m in ((2, 3), (2, 4), (3, 3)):
        report = vanishing_scan(n, m, n * (m - 1), config.vanish_samples, seed=seed)
        if not report.passed:
            failures.append(f"(n={n}, m={m}): {report.counterexample_count}")
    return not failures, "; ".join(failures) or f"samples={config.vanish_samples}"


def _phi(config: CheckConfig, seed: int) -> Tuple[bool, str]:
    per_degree = max(config.phi_samples // 4, 1)
    failed = [n for n in range(3, 7) if not phi_confluence_check(n, 4, samples=per_degree, seed=seed)]
    return not failed, f"failed degrees={failed}"


def _braids(config: CheckConfig, seed: int) -> Tuple[bool, str]:
    skein = skein_suite(config.braid_samples, seed)
    hoste = hoste_suite(config.braid_samples, seed)
    return skein.passed and hoste.passed, f"skein={len(skein.failures)} hoste={len(hoste.failures)}"


def _markov_and_parity(config: CheckConfig, seed: int) -> Tuple[bool, str]:
    rng = random.Random(seed)
    samples = max(config.braid_samples // 10, 1)
    failures = 0
    for index in range(samples):
        braid = random_braid(rng, 3, 8)
        if not markov_check(braid, seed=seed + index) or not parity_and_renorm_check(braid, config.series_order):
            failures += 1
    return failures == 0, f"samples={samples} failures={failures}"


def _renormalization(config: CheckConfig, seed: int) -> Tuple[bool, str]:
    rng = random.Random(seed)
    order = config.series_order
    failures = 0
    for _ in range(100):
        lowest = rng.randint(0, order)
        values = [0] * lowest + [rng.choice((-3, -2, -1, 1, 2, 3))]
        values += [rng.randint(-3, 3) for _ in range(rng.randint(0, order - lowest))]
        result = series_renormalize(values, order)
        if any(result[:lowest]) or result[lowest] != values[lowest]:
            failures += 1
    return failures == 0, f"failures={failures}"


def _skein_spot(seed: int) -> Tuple[bool, str]:
    rng = random.Random(seed)
    braid = random_braid(rng, 4, 10)
    position = rng.randint(1, len(braid))
    return skein_check(braid, position), f"{braid} @ {position}"


def _property_checks(config: CheckConfig, seed: int) -> List[Check]:
    return [
        ("oracle agreement", lambda: _oracle_agreement(config, seed)),
        ("vanishing lemma", lambda: _vanishing(config, seed)),
        ("phi confluence", lambda: _phi(config, seed)),
        ("braid skein and hoste", lambda: _braids(config, seed)),
        ("markov and parity", lambda: _markov_and_parity(config, seed)),
        ("renormalization lowest coefficient", lambda: _renormalization(config, seed)),
        ("skein spot check", lambda: _skein_spot(seed)),
        ("pfaffian matrix-tree m=7", lambda: _expect(pmtt_check(7, samples=config.pm7_samples, seed=seed), True)),
        ("recursion permutations m=5", lambda: _expect(recursion_check(5, samples=3, seed=seed), True)),
    ]


def run_suite(name: SuiteName, seed: int, config: Optional[CheckConfig] = None) -> SuiteReport:
    """``name`` のスイートを実行する。未知の名前は ValueError。"""

    if name not in SUITE_NAMES:
        raise ValueError(f"未知のスイートです: {name} ({'/'.join(SUITE_NAMES)})")
    resolved = config or load_check_config().config
    checks = _fixed_example_checks() if name == "paper-examples" else _property_checks(resolved, seed)
    report = SuiteReport(suite=name, seed=seed)
    with span_context("run_suite", check_name=name, run_seed=seed, event_level="progress"):
        for check_name, run in checks:
            try:
                passed, detail = run()
            except Exception as exc:  # noqa: BLE001
                passed, detail = False, f"{type(exc).__name__}: {exc}"
                log_structured_event(
                    logger,
                    "suite check raised",
                    level=logging.ERROR,
                    event_level="fault",
                    context={"check": check_name, "error": detail},
                )
            report.checks.append(CheckResult(name=check_name, passed=passed, detail="" if passed else detail))
    log_structured_event(
        logger,
        "suite finished",
        level=logging.INFO if report.ok else logging.WARNING,
        check_name=name,
        run_seed=seed,
        event_level="progress" if report.ok else "violation",
        context={"passed": report.passed, "failed": report.failed},
    )
    return report


__all__ = [
    "CheckResult",
    "SUITE_NAMES",
    "SuiteReport",
    "double_y_diagram",
    "h_diagram",
    "run_suite",
    "spanning_chain_diagram",
]
