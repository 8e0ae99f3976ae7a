# -*- coding: utf-8 -*-
"""F_m = P_m² が満たす漸化式の検証。

v_1 = 0 とした μ_123 などでの 2 階偏微分を、2 本の基底ベクトルを足し合わせた
F_{m-2} の組み合わせと比べる。添字の置換を施した版も乱択で確かめる。
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from typing import Dict, List, Sequence, Tuple

from exactalg import Polynomial, kill_index, merge_basis, partial_derivative, y_canon
from pfaffian_tree import pfaffian_tree_poly
from utils import log_structured_event, setup_logger, span_context

from .errors import DegreeMismatchError

logger = setup_logger("milnor.recursion")

# F_{m-2} の引数: 各要素は足し合わせる元の添字 (1 始まり、置換前)
Arguments = Sequence[Tuple[int, ...]]
Identity = Tuple[str, Tuple[int, int, int], Tuple[int, int, int], List[Tuple[int, Arguments]]]


def square_pm(m: int) -> Polynomial:
    poly = pfaffian_tree_poly(m)
    return poly * poly


def _second_derivative(poly: Polynomial, first: Tuple[int, int, int], second: Tuple[int, int, int]) -> Polynomial:
    result = poly
    for triple in (first, second):
        var, sign = y_canon(*triple)
        if var is None:
            return Polynomial()
        result = partial_derivative(result, var) * sign
    return result


def _evaluate_smaller(smaller: Polynomial, arguments: Arguments) -> Polynomial:
    """F_{m-2}(v_{a}+v_{b}, v_c, …) を y 変数の多項式として展開する。"""

    substitution: Dict[int, Dict[int, int]] = {}
    for index, sources in enumerate(arguments, start=1):
        image: Dict[int, int] = {}
        for source in sources:
            image[source] = image.get(source, 0) + 1
        substitution[index] = image
    return merge_basis(smaller, substitution)


def _rest(m: int, used: Sequence[int]) -> List[Tuple[int, ...]]:
    return [(index,) for index in range(1, m + 1) if index not in used]


def recursion_identities(m: int) -> List[Identity]:
    """(名前, 微分する 3 つ組 2 個, [(係数, F_{m-2} の引数)]) の一覧。v_1 を 0 にする。"""

    first = (
        "square",
        (1, 2, 3),
        (1, 2, 3),
        [(2, [(2, 3), *_rest(m, (1, 2, 3))])],
    )
    second = (
        "shared-pair",
        (1, 2, 3),
        (1, 2, 4),
        [
            (1, [(2, 3), (4,), *_rest(m, (1, 2, 3, 4))]),
            (1, [(2, 4), (3,), *_rest(m, (1, 2, 3, 4))]),
            (-1, [(3, 4), (2,), *_rest(m, (1, 2, 3, 4))]),
        ],
    )
    third = (
        "disjoint-pair",
        (1, 2, 3),
        (1, 4, 5),
        [
            (1, [(3, 4), (2,), (5,), *_rest(m, (1, 2, 3, 4, 5))]),
            (1, [(2, 5), (3,), (4,), *_rest(m, (1, 2, 3, 4, 5))]),
            (-1, [(2, 4), (3,), (5,), *_rest(m, (1, 2, 3, 4, 5))]),
            (-1, [(3, 5), (2,), (4,), *_rest(m, (1, 2, 3, 4, 5))]),
        ],
    )
    return [first, second, third]


def _permute(triple: Tuple[int, ...], permutation: Sequence[int]) -> Tuple[int, ...]:
    return tuple(permutation[index - 1] for index in triple)


def check_identity(
    m: int,
    identity: Identity,
    permutation: Sequence[int],
    big: Polynomial,
    smaller: Polynomial,
) -> bool:
    _, first, second, terms = identity
    killed = permutation[0]
    lhs = kill_index(
        _second_derivative(big, _permute(first, permutation), _permute(second, permutation)),  # type: ignore[arg-type]
        killed,
    )
    rhs = Polynomial()
    for coefficient, arguments in terms:
        permuted = [_permute(argument, permutation) for argument in arguments]
        rhs = rhs + _evaluate_smaller(smaller, permuted) * coefficient
    return lhs == rhs


def has_doubled_index(poly: Polynomial) -> bool:
    """全ての非零単項式に、添字列にちょうど 2 回現れる添字があるか。"""

    for monomial, _ in poly:
        counts: Counter = Counter()
        for var, power in monomial.grouped():
            for index in var.indices:
                counts[index] += power
        if 2 not in counts.values():
            return False
    return True


def recursion_check(m: int, samples: int = 3, seed: int = 42) -> bool:
    """3 つの漸化式 (恒等置換と ``samples`` 個の乱択置換) と二重添字の性質を確かめる。"""

    if m % 2 == 0 or not 5 <= m <= 7:
        raise DegreeMismatchError(f"漸化式の検証は m = 5, 7 のみ対応します: m={m}")
    rng = random.Random(seed)
    big = square_pm(m)
    smaller = square_pm(m - 2)
    permutations = [list(range(1, m + 1))]
    for _ in range(samples):
        shuffled = list(range(1, m + 1))
        rng.shuffle(shuffled)
        permutations.append(shuffled)

    passed = True
    with span_context("recursion_check", check_name="recursion", run_seed=seed, event_level="progress"):
        for identity in recursion_identities(m):
            for permutation in permutations:
                if not check_identity(m, identity, permutation, big, smaller):
                    passed = False
                    log_structured_event(
                        logger,
                        "recursion identity failed",
                        level=logging.WARNING,
                        event_level="violation",
                        context={"identity": identity[0], "permutation": permutation},
                    )
        doubled = has_doubled_index(big)
        if not doubled:
            passed = False
            log_structured_event(
                logger,
                "monomial without doubled index",
                level=logging.WARNING,
                event_level="violation",
                context={"m": m},
            )
    log_structured_event(
        logger,
        "recursion relations checked",
        check_name="recursion",
        run_seed=seed,
        event_level="progress",
        context={"m": m, "passed": passed, "permutations": len(permutations)},
    )
    return passed


__all__ = [
    "check_identity",
    "has_doubled_index",
    "recursion_check",
    "recursion_identities",
    "square_pm",
]
