"""Edge-weight attribution scores for a topic argument.

The attribution score of an edge is the partial derivative of the topic
argument's strength with respect to that edge's weight. Two routes:

  grae_exact    one forward pass + one reverse accumulation over the
                reversed topological order (analytic partials), linear in
                arguments + edges;
  grae_approx   one strength recomputation per perturbed edge, so
                O(edges * (arguments + edges)) overall.

Both are defined on acyclic graphs only.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ._engine import compile_qbaf
from .model import EdgeKey, Qbaf
from .semantics import SemanticsSpec

_ACYCLIC_MSG = "gradients defined only for acyclic EW-QBAFs"


@dataclass(frozen=True)
class GraeMap:
    """Signed attribution score per edge, for one topic argument."""

    topic: str
    scores: dict[EdgeKey, float]

    def ranked(self) -> list[tuple[EdgeKey, float]]:
        """Edges sorted by descending score (key as tiebreak)."""
        return sorted(self.scores.items(), key=lambda kv: (-kv[1], kv[0]))


class AttributionInfluence(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"


def grae_exact(q: Qbaf, spec: SemanticsSpec, topic: str) -> GraeMap:
    """Exact attribution scores via reverse accumulation.

    Edges with no path to the topic score exactly 0.0.
    """
    compiled = compile_qbaf(q)
    compiled.require_acyclic(_ACYCLIC_MSG)
    topic_idx = compiled.arg_index(topic)
    grads = compiled.gradients(spec, compiled.weights0, topic_idx)
    return GraeMap(topic, {e.key: grads[i] for i, e in enumerate(compiled.edges)})


def grae_approx(q: Qbaf, spec: SemanticsSpec, topic: str, perturbation: float = 1e-5) -> GraeMap:
    """Perturbation-based attribution scores.

    Each edge weight is nudged by the perturbation (flipped in sign when
    the probe would leave [0, 1], with the applied delta folded into the
    quotient) and the topic strength recomputed.
    """
    if perturbation == 0.0 or abs(perturbation) > 1.0:
        raise ValueError("perturbation must be nonzero with magnitude at most 1")
    compiled = compile_qbaf(q)
    compiled.require_acyclic(_ACYCLIC_MSG)
    topic_idx = compiled.arg_index(topic)
    weights = list(compiled.weights0)
    s0 = compiled.forward(spec, weights)[topic_idx]
    scores: dict[EdgeKey, float] = {}
    for i, edge in enumerate(compiled.edges):
        w = weights[i]
        delta = perturbation
        if not (0.0 <= w + delta <= 1.0):
            delta = -perturbation
            if not (0.0 <= w + delta <= 1.0):
                raise ValueError(
                    f"perturbation {perturbation} cannot probe weight {w} of edge "
                    f"{edge.source!r} -> {edge.target!r} within [0, 1]"
                )
        weights[i] = w + delta
        s1 = compiled.forward(spec, weights)[topic_idx]
        weights[i] = w
        scores[edge.key] = (s1 - s0) / delta
    return GraeMap(topic, scores)


def classify_influence(score: float, zero_tolerance: float = 1e-9) -> AttributionInfluence:
    """Sign of an attribution score, with a dead zone for float noise."""
    if zero_tolerance < 0:
        raise ValueError("zero_tolerance must be nonnegative")
    if abs(score) <= zero_tolerance:
        return AttributionInfluence.NEUTRAL
    return AttributionInfluence.POSITIVE if score > 0 else AttributionInfluence.NEGATIVE
