# -*- coding: utf-8 -*-
"""生成・評価・検証コマンドの CLI エントリポイント。

終了コードは成功 0、検証失敗 1、入力エラー 2。数値出力は全て厳密値
(整数・有理数・正規形の多項式) で、同じ入力と seed なら同じ出力になる。
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Dict, Optional, Sequence

from dotenv import load_dotenv

from config import CheckConfig, load_check_config
from conway import ConwayPoly, conway, hoste_check, parse_braid, parse_z_terms, skein_suite
from diagrams import read_diagram, vanishing_scan, weight
from exactalg import series_renormalize
from kirchhoff import kirchhoff_poly, mtt_check
from milnor import F, F_as_polynomial, F_general, G_value, read_xi_file
from pfaffian_tree import format_decompositions, ordered_tree_decompositions, pfaffian_tree_poly, pmtt_check, read_three_graph
from suite import SUITE_NAMES, run_suite
from utils import log_structured_event, setup_logger

logger = setup_logger("conway.cli")

_EPILOG = """\
ファイル形式:
  図式      circles 2 / circle 1: a b / circle 2: c d / edge a c / edge b d
  3-グラフ  vertices 5 / 1 2 3 / 1 4 5
  ξ         labels 3 / tree 2 1:[2,3] * 1
  組紐語    k=3; 1 -2 1 -2 1 -2
  z の多項式 1 z2 -3z2 2z
"""


def _add_seed(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="乱数 seed (既定: CONWAY_SEED)")


def _add_engine(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--engine",
        choices=("oracle", "reduced"),
        default=None,
        help="重み系の評価方法 (既定: CONWAY_WEIGHT_ENGINE)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conway-trees",
        description="Conway 多項式の係数と Milnor 不変量をつなぐ木の公式の計算・検証",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen_dm = subparsers.add_parser("gen-dm", help="Kirchhoff 多項式 D_m を出力する (例: gen-dm --m 3)")
    gen_dm.add_argument("--m", type=int, required=True)

    gen_pm = subparsers.add_parser("gen-pm", help="Pfaffian 木多項式 P_m を出力する (例: gen-pm --m 5)")
    gen_pm.add_argument("--m", type=int, required=True)

    verify_mtt = subparsers.add_parser("verify-mtt", help="D_m = det Λ^(p) を記号的に確かめる")
    verify_mtt.add_argument("--m", type=int, required=True)

    verify_pmtt = subparsers.add_parser("verify-pmtt", help="P_m² = det Λ^(p) を確かめる (m >= 7 は乱択)")
    verify_pmtt.add_argument("--m", type=int, required=True)
    verify_pmtt.add_argument("--samples", type=int, default=None, help="m >= 7 での乱択 μ 表の数")
    _add_seed(verify_pmtt)

    weight_cmd = subparsers.add_parser("weight", help="図式ファイルの重み W を出力する")
    weight_cmd.add_argument("--file", required=True, help="図式ファイル (例: circles 2 ...)")
    _add_engine(weight_cmd)

    decompose = subparsers.add_parser("decompose", help="3-グラフの順序付き木分解と係数を出力する")
    decompose.add_argument("--file", required=True, help="3-グラフファイル (例: vertices 5 ...)")

    fpoly = subparsers.add_parser("fpoly", help="F_m^(n) を μ 座標の多項式として出力する (n <= 2)")
    fpoly.add_argument("--n", type=int, required=True)
    fpoly.add_argument("--m", type=int, required=True)
    _add_engine(fpoly)

    feval = subparsers.add_parser("feval", help="ξ ファイルでの F_m^(n)(ξ) を出力する")
    feval.add_argument("--xi", required=True, help="ξ ファイル (例: tree 1 1:2 * 1)")
    feval.add_argument("--m", type=int, default=None, help="円周の数 (既定: ファイルの labels)")
    feval.add_argument("--via", choices=("weights", "phi"), default="weights", help="重み系で組み立てるか φ で簡約するか")
    _add_engine(feval)

    geval = subparsers.add_parser("geval", help="G_m^(n)(ξ, τ) を出力する")
    geval.add_argument("--xi", required=True, help="次数 n の ξ ファイル")
    geval.add_argument("--tau", required=True, help="次数 n+1 の τ ファイル")
    geval.add_argument("--m", type=int, required=True)
    _add_engine(geval)

    conway_cmd = subparsers.add_parser("conway", help="組紐閉包の Conway 多項式を出力する")
    conway_cmd.add_argument("--braid", required=True, help='組紐語 (例: "k=2;1 1")')

    hoste = subparsers.add_parser("hoste-check", help="c_i = 0 (i <= m-2) と c_{m-1} = D_m(ℓ) を確かめる")
    hoste.add_argument("--braid", required=True, help='組紐語 (例: "k=3;1 -2 1 -2 1 -2")')
    hoste.add_argument("--with-weights", action="store_true", help="重み系側の F_m^(1) とも突き合わせる")

    skein = subparsers.add_parser("skein-suite", help="乱択組紐語でスケイン関係を確かめる")
    skein.add_argument("--samples", type=int, default=None)
    _add_seed(skein)

    vanish = subparsers.add_parser("vanish-scan", help="消滅補題を乱択図式で走査する")
    vanish.add_argument("--n", type=int, required=True)
    vanish.add_argument("--m", type=int, required=True)
    vanish.add_argument("--d", type=int, required=True)
    vanish.add_argument("--samples", type=int, default=None)
    _add_seed(vanish)
    _add_engine(vanish)

    renorm = subparsers.add_parser("renorm", help="∇ の係数列を再正規化する")
    renorm.add_argument("--poly", required=True, help='z の多項式 (例: "1 z2")')
    renorm.add_argument("--order", type=int, default=None, help="打ち切り次数 (既定: CONWAY_SERIES_ORDER)")

    suite = subparsers.add_parser("run-suite", help="固定例または乱択性質のスイートを実行し JSON で出力する")
    suite.add_argument("name", choices=SUITE_NAMES)
    _add_seed(suite)

    return parser


def _verdict(check_name: str, passed: bool, context: Dict[str, object]) -> int:
    log_structured_event(
        logger,
        f"{check_name} finished",
        level=logging.INFO if passed else logging.WARNING,
        check_name=check_name,
        event_level="progress" if passed else "violation",
        context={**context, "passed": passed},
    )
    print("OK" if passed else "FAIL")
    return 0 if passed else 1


def _pick(value: Optional[object], fallback: object) -> object:
    return fallback if value is None else value


def _run_gen_dm(args: argparse.Namespace, config: CheckConfig) -> int:
    print(kirchhoff_poly(args.m).to_text())
    return 0


def _run_gen_pm(args: argparse.Namespace, config: CheckConfig) -> int:
    print(pfaffian_tree_poly(args.m).to_text())
    return 0


def _run_verify_mtt(args: argparse.Namespace, config: CheckConfig) -> int:
    return _verdict("verify-mtt", mtt_check(args.m), {"m": args.m})


def _run_verify_pmtt(args: argparse.Namespace, config: CheckConfig) -> int:
    samples = _pick(args.samples, config.pm7_samples)
    seed = _pick(args.seed, config.seed)
    passed = pmtt_check(args.m, samples=samples, seed=seed)  # type: ignore[arg-type]
    return _verdict("verify-pmtt", passed, {"m": args.m, "samples": samples, "seed": seed})


def _run_weight(args: argparse.Namespace, config: CheckConfig) -> int:
    print(weight(read_diagram(args.file), _pick(args.engine, config.weight_engine)))  # type: ignore[arg-type]
    return 0


def _run_decompose(args: argparse.Namespace, config: CheckConfig) -> int:
    graph = read_three_graph(args.file)
    print(format_decompositions(graph, ordered_tree_decompositions(graph)))
    return 0


def _run_fpoly(args: argparse.Namespace, config: CheckConfig) -> int:
    engine = _pick(args.engine, config.weight_engine)
    print(F_as_polynomial(args.n, args.m, engine=engine).to_text())  # type: ignore[arg-type]
    return 0


def _run_feval(args: argparse.Namespace, config: CheckConfig) -> int:
    xi = read_xi_file(args.xi, args.m)
    if args.via == "phi":
        print(F_general(xi.degree, xi.m, xi))
    else:
        print(F(xi, xi.m, engine=_pick(args.engine, config.weight_engine)))  # type: ignore[arg-type]
    return 0


def _run_geval(args: argparse.Namespace, config: CheckConfig) -> int:
    xi = read_xi_file(args.xi, args.m)
    tau = read_xi_file(args.tau, args.m)
    print(G_value(xi, tau, args.m, engine=_pick(args.engine, config.weight_engine)))  # type: ignore[arg-type]
    return 0


def _run_conway(args: argparse.Namespace, config: CheckConfig) -> int:
    print(conway(parse_braid(args.braid)).to_text())
    return 0


def _run_hoste(args: argparse.Namespace, config: CheckConfig) -> int:
    braid = parse_braid(args.braid)
    passed = hoste_check(braid, with_weights=args.with_weights)
    return _verdict("hoste-check", passed, {"braid": str(braid)})


def _run_skein(args: argparse.Namespace, config: CheckConfig) -> int:
    report = skein_suite(_pick(args.samples, config.braid_samples), _pick(args.seed, config.seed))  # type: ignore[arg-type]
    print(report.model_dump_json(indent=2))
    return 0 if report.passed else 1


def _run_vanish(args: argparse.Namespace, config: CheckConfig) -> int:
    report = vanishing_scan(
        args.n,
        args.m,
        args.d,
        _pick(args.samples, config.vanish_samples),  # type: ignore[arg-type]
        seed=_pick(args.seed, config.seed),  # type: ignore[arg-type]
        engine=_pick(args.engine, config.weight_engine),  # type: ignore[arg-type]
    )
    print(report.model_dump_json(indent=2))
    return 0 if report.passed else 1


def _run_renorm(args: argparse.Namespace, config: CheckConfig) -> int:
    order = _pick(args.order, config.series_order)
    print(ConwayPoly.of(series_renormalize(parse_z_terms(args.poly), order)).to_text())  # type: ignore[arg-type]
    return 0


def _run_suite(args: argparse.Namespace, config: CheckConfig) -> int:
    report = run_suite(args.name, _pick(args.seed, config.seed), config)  # type: ignore[arg-type]
    print(report.model_dump_json(indent=2))
    return 0 if report.ok else 1


_HANDLERS: Dict[str, Callable[[argparse.Namespace, CheckConfig], int]] = {
    "gen-dm": _run_gen_dm,
    "gen-pm": _run_gen_pm,
    "verify-mtt": _run_verify_mtt,
    "verify-pmtt": _run_verify_pmtt,
    "weight": _run_weight,
    "decompose": _run_decompose,
    "fpoly": _run_fpoly,
    "feval": _run_feval,
    "geval": _run_geval,
    "conway": _run_conway,
    "hoste-check": _run_hoste,
    "skein-suite": _run_skein,
    "vanish-scan": _run_vanish,
    "renorm": _run_renorm,
    "run-suite": _run_suite,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    ns = build_parser().parse_args(argv)
    config = load_check_config().config
    handler = _HANDLERS[ns.command]
    try:
        return handler(ns, config)
    except (ValueError, OSError) as exc:
        log_structured_event(
            logger,
            "command rejected input",
            level=logging.ERROR,
            check_name=ns.command,
            event_level="fault",
            context={"error": str(exc), "type": type(exc).__name__},
        )
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
