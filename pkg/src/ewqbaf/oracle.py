"""Brute-force and analytic reference implementations for tests.

Everything here trades speed for independence: the recursive strength
evaluator re-expands shared parents instead of memoizing, the
finite-difference estimator never touches the reverse-accumulation code,
and the grid search is an exhaustive scan. The multiset machinery
(core / dominance / balance) backs the aggregation-level property tests.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Optional, Union

from .model import CyclicGraphError, Edge, EdgeKey, Polarity, Qbaf, topological_order
from .semantics import (
    SemanticsKind,
    SemanticsSpec,
    aggregate_product,
    aggregate_sum,
    influence,
)


def core(values: Iterable[float], zero_tolerance: float = 0.0) -> tuple[float, ...]:
    """Non-zero elements of a multiset, multiplicities preserved.

    Returned sorted so equal multisets compare equal as tuples.
    """
    return tuple(sorted(x for x in values if abs(x) > zero_tolerance))


class Dominance(Enum):
    STRICTLY_DOMINATES = "strictly_dominates"
    DOMINATES = "dominates"
    NO_DOMINATION = "no_domination"


def dominates(
    s: Iterable[float], t: Iterable[float], zero_tolerance: float = 0.0
) -> Dominance:
    """Whether multiset ``s`` (strictly) dominates ``t``.

    ``s`` dominates ``t`` when both cores are empty, or the core of ``t``
    maps injectively into the core of ``s`` with every element matched to
    one at least as large; strict when the cores additionally differ in
    size or some match is strictly larger. Decided greedily on
    descending-sorted cores, which is equivalent to trying all matchings.
    """
    cs = sorted(core(s, zero_tolerance), reverse=True)
    ct = sorted(core(t, zero_tolerance), reverse=True)
    if len(ct) > len(cs):
        return Dominance.NO_DOMINATION
    strict = len(cs) > len(ct)
    for x, y in zip(ct, cs):
        if x > y + zero_tolerance:
            return Dominance.NO_DOMINATION
        if x < y - zero_tolerance:
            strict = True
    return Dominance.STRICTLY_DOMINATES if strict else Dominance.DOMINATES


def balanced(s: Iterable[float], t: Iterable[float], zero_tolerance: float = 0.0) -> bool:
    """True when the cores are equal as multisets."""
    cs = core(s, zero_tolerance)
    ct = core(t, zero_tolerance)
    if len(cs) != len(ct):
        return False
    return all(abs(x - y) <= zero_tolerance for x, y in zip(cs, ct))


def strength_recursive(q: Qbaf, spec: SemanticsSpec, arg: str) -> float:
    """Naive recursive strength evaluation (no memoization, deliberately
    re-expanding shared ancestors), independent of the forward-pass code."""
    if arg not in q.base_scores:
        from .model import UnknownArgumentError

        raise UnknownArgumentError(f"unknown argument {arg!r}")
    parents: dict[str, list[tuple[str, Polarity, float]]] = {a.id: [] for a in q.arguments}
    for e in q.edges:
        parents[e.target].append((e.source, e.polarity, e.weight))
    product = spec.kind is SemanticsKind.DFQUAD

    def evaluate(aid: str, visiting: frozenset[str]) -> float:
        if aid in visiting:
            raise CyclicGraphError("recursive evaluation is defined only for acyclic graphs")
        below = visiting | {aid}
        attacks = []
        supports = []
        for src, pol, w in parents[aid]:
            value = evaluate(src, below) * w
            (attacks if pol is Polarity.ATTACK else supports).append(value)
        agg = aggregate_product(attacks, supports) if product else aggregate_sum(attacks, supports)
        return influence(spec.kind, q.base_scores[aid], agg, spec.logit_clamp)

    return evaluate(arg, frozenset())


def _strength_at_weight(q: Qbaf, spec: SemanticsSpec, topic: str, key: EdgeKey, w: float) -> float:
    from .semantics import compute_strengths

    value = compute_strengths(q.with_weights({key: w}), spec)[topic]
    assert value is not None
    return value


def finite_difference_grae(
    q: Qbaf, spec: SemanticsSpec, topic: str, edge: Union[Edge, EdgeKey], h: float
) -> float:
    """Central-difference estimate of the attribution score, one-sided at
    the weight-domain boundaries 0 and 1."""
    if h <= 0:
        raise ValueError("step h must be positive")
    key = edge.key if isinstance(edge, Edge) else tuple(edge)
    w = q.weight_of(key)
    if topological_order(q) is None:
        raise CyclicGraphError("finite differences are defined only for acyclic graphs")
    lo_ok = w - h >= 0.0
    hi_ok = w + h <= 1.0
    if lo_ok and hi_ok:
        return (
            _strength_at_weight(q, spec, topic, key, w + h)
            - _strength_at_weight(q, spec, topic, key, w - h)
        ) / (2.0 * h)
    if hi_ok:
        return (
            _strength_at_weight(q, spec, topic, key, w + h)
            - _strength_at_weight(q, spec, topic, key, w)
        ) / h
    if lo_ok:
        return (
            _strength_at_weight(q, spec, topic, key, w)
            - _strength_at_weight(q, spec, topic, key, w - h)
        ) / h
    raise ValueError(f"step {h} cannot probe weight {w} inside [0, 1]")


def grid_search_single_edge(
    q: Qbaf,
    spec: SemanticsSpec,
    topic: str,
    edge: Union[Edge, EdgeKey],
    target: float,
    resolution: int = 10000,
    error_threshold: float = 0.01,
) -> Optional[float]:
    """Exhaustive scan of one edge weight over {0, 1/res, ..., 1}.

    Returns the weight whose topic strength is closest to the target, or
    None when even the best gap exceeds the error threshold.
    """
    if resolution < 1:
        raise ValueError("resolution must be at least 1")
    key = edge.key if isinstance(edge, Edge) else tuple(edge)
    best_w = None
    best_gap = None
    for i in range(resolution + 1):
        w = i / resolution
        gap = abs(_strength_at_weight(q, spec, topic, key, w) - target)
        if best_gap is None or gap < best_gap:
            best_gap = gap
            best_w = w
    if best_gap is None or best_gap > error_threshold:
        return None
    return best_w
