"""Modular gradual semantics for edge-weighted bipolar argumentation.

A semantics pairs an aggregation function (combining the edge-weighted
strengths of attackers and supporters into one signed number) with an
influence function (shifting the base score by that aggregate while staying
inside [0, 1]):

  sum aggregation       sum(supports) - sum(attacks)
  product aggregation   prod(1 - a) - prod(1 - s)     (attacks a, supports s)

  dfquad   product aggregation; infl(B,A) = B - B*h(-A) + (1-B)*h(A), h = max(0, .)
  qe       sum aggregation;     same shape with h(x) = max(0,x)^2 / (1 + max(0,x)^2)
  reb      sum aggregation;     infl(B,A) = 1 - (1 - B^2) / (1 + B*e^A)
  mlp      sum aggregation;     infl(B,A) = logistic(logit(clamp(B)) + A)

Acyclic graphs are evaluated by a single forward pass in topological order.
Cyclic graphs fall back to synchronous fixed-point iteration from the base
scores; arguments on or downstream of a non-converged cycle come back as
None (undefined).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .model import Qbaf

# Strength maps associate every argument id with a strength in [0, 1], or
# None for arguments left undefined by a diverging cyclic evaluation.
StrengthMap = dict[str, Optional[float]]


class SemanticsKind(Enum):
    DFQUAD = "dfquad"
    QE = "qe"
    REB = "reb"
    MLP = "mlp"

    @classmethod
    def parse(cls, name: str) -> "SemanticsKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown semantics {name!r}; expected one of: {valid}") from None


@dataclass(frozen=True)
class SemanticsSpec:
    """Semantics selection plus iteration controls for the cyclic case."""

    kind: SemanticsKind
    convergence_epsilon: float = 1e-6
    max_update_rounds: int = 10000
    logit_clamp: float = 1e-9  # mlp only: keeps logit(base) finite

    def __post_init__(self):
        if self.convergence_epsilon <= 0:
            raise ValueError("convergence_epsilon must be positive")
        if self.max_update_rounds < 1:
            raise ValueError("max_update_rounds must be at least 1")
        if not (0.0 < self.logit_clamp < 0.5):
            raise ValueError("logit_clamp must lie in (0, 0.5)")


def aggregate_sum(attack_values: Iterable[float], support_values: Iterable[float]) -> float:
    """Signed sum: supports minus attacks (empty sums are 0)."""
    return math.fsum(support_values) - math.fsum(attack_values)


def aggregate_product(attack_values: Iterable[float], support_values: Iterable[float]) -> float:
    """prod(1 - a) - prod(1 - s); empty products are 1, so the result is
    in [-1, 1] and 0 when both sides are empty."""
    pa = 1.0
    for a in attack_values:
        pa *= 1.0 - a
    ps = 1.0
    for s in support_values:
        ps *= 1.0 - s
    return pa - ps


def _h_qe(x: float) -> float:
    if x <= 0.0:
        return 0.0
    x2 = x * x
    return x2 / (1.0 + x2)


def _logistic(z: float) -> float:
    if z >= 0.0:
        return 1.0 / (1.0 + math.exp(-z))
    e = math.exp(z)
    return e / (1.0 + e)


def influence(kind: SemanticsKind, base: float, aggregate: float, logit_clamp: float = 1e-9) -> float:
    """Shift a base score by a signed aggregate; the result stays in [0, 1]."""
    if kind is SemanticsKind.DFQUAD:
        if aggregate >= 0.0:
            return base + (1.0 - base) * aggregate
        return base + base * aggregate
    if kind is SemanticsKind.QE:
        return base - base * _h_qe(-aggregate) + (1.0 - base) * _h_qe(aggregate)
    if kind is SemanticsKind.REB:
        if base == 0.0:
            return 0.0
        if aggregate > 700.0:  # e^A overflows; the quotient limit is 0
            return 1.0
        return 1.0 - (1.0 - base * base) / (1.0 + base * math.exp(aggregate))
    if kind is SemanticsKind.MLP:
        b = min(max(base, logit_clamp), 1.0 - logit_clamp)
        return _logistic(math.log(b / (1.0 - b)) + aggregate)
    raise ValueError(f"unhandled semantics kind {kind!r}")


def influence_slope(kind: SemanticsKind, base: float, aggregate: float, strength: float) -> float:
    """d influence / d aggregate at the given point.

    For dfquad the kink at aggregate 0 takes slope 0 (the subgradient
    convention used by the exact attribution method). ``strength`` is the
    already-computed influence value, reused for the mlp case.
    """
    if kind is SemanticsKind.DFQUAD:
        if aggregate > 0.0:
            return 1.0 - base
        if aggregate < 0.0:
            return base
        return 0.0
    if kind is SemanticsKind.QE:
        if aggregate > 0.0:
            x = aggregate
            return (1.0 - base) * 2.0 * x / (1.0 + x * x) ** 2
        if aggregate < 0.0:
            x = -aggregate
            return base * 2.0 * x / (1.0 + x * x) ** 2
        return 0.0
    if kind is SemanticsKind.REB:
        if base == 0.0 or aggregate > 700.0:
            return 0.0
        e = math.exp(aggregate)
        d = 1.0 + base * e
        return (1.0 - base * base) * base * e / (d * d)
    if kind is SemanticsKind.MLP:
        return strength * (1.0 - strength)
    raise ValueError(f"unhandled semantics kind {kind!r}")


def uses_product_aggregation(kind: SemanticsKind) -> bool:
    return kind is SemanticsKind.DFQUAD


def compute_strengths(q: Qbaf, spec: SemanticsSpec) -> StrengthMap:
    """Evaluate every argument's strength under the chosen semantics.

    Acyclic graphs take one forward pass in topological order (linear in
    arguments + edges). Cyclic graphs iterate synchronously from the base
    scores until the max-abs change drops below ``convergence_epsilon``;
    if ``max_update_rounds`` is exhausted, arguments on or downstream of a
    non-converged cycle map to None.
    """
    from ._engine import compile_qbaf

    compiled = compile_qbaf(q)
    if compiled.topo is not None:
        values = compiled.forward(spec, compiled.weights0)
        return {compiled.ids[i]: values[i] for i in range(len(values))}
    values = compiled.iterate(spec, compiled.weights0)
    return {compiled.ids[i]: values[i] for i in range(len(values))}
