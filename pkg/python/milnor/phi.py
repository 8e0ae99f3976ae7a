# -*- coding: utf-8 -*-
"""Alexander-Conway 関係による木の次数下げ写像 φ_n と F の一般形。

内部辺 (u=(e,a,b), w=(f,c,d)) を
σ_E [J(a,d)K(b,c) + J(b,c)K(a,d) - J(a,c)K(b,d) - J(b,d)K(a,c)]
に書き換える。J(x, y) は x, y の先同士を繋ぎ、K(x, y) は先が両方葉ならその 2 葉を消す。
3 つの隣接点が全て三価頂点である頂点を持つ木は 0。
各書き換えで次数は 2 下がり、奇数次は strut (次数 1)、偶数次は Y (次数 2) まで落ちる。
"""

from __future__ import annotations

import logging
import random
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from diagrams import resolved_rule_table
from exactalg import Coefficient
from kirchhoff import kirchhoff_poly
from pfaffian_tree import pfaffian_tree_poly
from utils import log_structured_event, setup_logger, span_context

from .errors import DegreeMismatchError
from .quotient import w0_subspace
from .trees import LabeledTree, TreeGraph, canonicalize, random_tree, tree_ihx
from .xi import XiElement

logger = setup_logger("milnor.phi")


def edge_move(graph: TreeGraph, u: int, w: int) -> List[Tuple[int, TreeGraph]]:
    """内部辺 (u, w) での 4 項の書き換え。符号 σ_E は含めない。"""

    _, a, b = graph.rotated(u, w)
    _, c, d = graph.rotated(w, u)
    pattern = (
        (1, (a, d), (b, c)),
        (1, (b, c), (a, d)),
        (-1, (a, c), (b, d)),
        (-1, (b, d), (a, c)),
    )
    owner = {a: u, b: u, c: w, d: w}
    terms: List[Tuple[int, TreeGraph]] = []
    for sign, (x, y), (z, t) in pattern:
        if not (graph.is_leaf(z) and graph.is_leaf(t)):
            continue
        reduced = graph.copy()
        reduced.remove(u, w, z, t)
        reduced.replace_neighbour(x, owner[x], y)
        reduced.replace_neighbour(y, owner[y], x)
        terms.append((sign, reduced))
    return terms


def phi_tree(tree: LabeledTree, m: int, rng: Optional[random.Random] = None) -> XiElement:
    """木 1 本の φ。``rng`` を渡すと書き換える内部辺をランダムに選ぶ (既定は最初の内部辺)。"""

    target = 1 if tree.degree % 2 == 1 else 2
    edge_sign = resolved_rule_table().edge_sign
    result: Dict[LabeledTree, Fraction] = {}
    pending: List[Tuple[Fraction, TreeGraph]] = [(Fraction(1), TreeGraph.from_tree(tree))]
    while pending:
        coefficient, graph = pending.pop()
        if graph.degree <= target:
            root = min(graph.labels)
            canonical, sign = canonicalize(graph.to_tree(root))
            if canonical is not None:
                result[canonical] = result.get(canonical, Fraction(0)) + sign * coefficient
            continue
        if graph.has_inner_vertex():
            continue
        edges = graph.internal_edges()
        u, w = rng.choice(edges) if rng is not None else edges[0]
        for sign, reduced in edge_move(graph, u, w):
            pending.append((coefficient * sign * edge_sign, reduced))
    return XiElement.of(target, m, ((value, tree) for tree, value in result.items() if value))


def phi(xi: XiElement, rng: Optional[random.Random] = None) -> XiElement:
    """線形に拡張した φ_n(ξ)。"""

    target = 1 if xi.degree % 2 == 1 else 2
    total = XiElement.zero(target, xi.m)
    for value, tree in xi.items():
        total = total + phi_tree(tree, xi.m, rng).scale(value)
    return total


def phi_equivalent(first: XiElement, second: XiElement) -> bool:
    """φ の値としての同一視。次数 1 は対角 strut を除いて一致、次数 2 は W_0 を法として一致。"""

    if first.degree != second.degree:
        return False
    if first.degree == 1:
        return first.strut_coordinates() == second.strut_coordinates()
    m = max(first.m, second.m)
    return w0_subspace(m).equivalent(first.wedge_coordinates(), second.wedge_coordinates())


def F_general(n: int, m: int, xi: XiElement) -> Coefficient:
    """奇数 n では D_m(φ_n(ξ))、偶数 n では P_m(φ_n(ξ))²。"""

    if xi.degree != n:
        raise DegreeMismatchError(f"ξ の次数 {xi.degree} が n={n} と一致しません")
    reduced = phi(xi)
    if n % 2 == 1:
        return kirchhoff_poly(m).evaluate(reduced.as_assignment())
    value = pfaffian_tree_poly(m).evaluate(reduced.as_assignment())
    return value * value


def phi_confluence_check(n: int, m: int, samples: int = 200, seed: int = 42) -> bool:
    """ランダムな木で、書き換え順序の違いと IHX による置き換えが φ の値を変えないか確かめる。"""

    if not 3 <= n <= 6:
        raise DegreeMismatchError(f"合流性の検査は 3 <= n <= 6 のみ対応します: n={n}")
    rng = random.Random(seed)
    failures = 0
    with span_context("phi_confluence", check_name="phi-confluence", run_seed=seed, event_level="progress"):
        for _ in range(samples):
            tree = random_tree(n, m, rng)
            base = phi_tree(tree, m)
            shuffled = phi_tree(tree, m, random.Random(rng.random()))
            ihx_sum = XiElement.zero(base.degree, m)
            for term in tree_ihx(tree):
                ihx_sum = ihx_sum + phi_tree(term, m)
            order_ok = phi_equivalent(base, shuffled)
            ihx_ok = phi_equivalent(ihx_sum, XiElement.zero(base.degree, m))
            if not (order_ok and ihx_ok):
                failures += 1
                log_structured_event(
                    logger,
                    "phi reduction is not confluent",
                    level=logging.WARNING,
                    event_level="violation",
                    context={"tree": tree.to_text(), "order_ok": order_ok, "ihx_ok": ihx_ok},
                )
    log_structured_event(
        logger,
        "phi confluence checked",
        check_name="phi-confluence",
        run_seed=seed,
        event_level="progress",
        context={"n": n, "m": m, "samples": samples, "failures": failures},
    )
    return failures == 0


__all__ = ["F_general", "edge_move", "phi", "phi_confluence_check", "phi_equivalent", "phi_tree"]
