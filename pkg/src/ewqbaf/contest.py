"""Attainability analysis and the iterative edge-weight solver.

Attainable strengths for a topic argument form a closed interval whose
endpoints are realized by two extreme weight functions (all supports
maxed / direct influences flipped). The solver walks edge weights along
their attribution scores with a gap-proportional step until the topic
argument's strength lands within the error threshold of the target,
restarting from random weights when an attempt exhausts its iteration
budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

import numpy as np

from ._engine import CompiledQbaf, compile_qbaf
from .model import EdgeKey, Polarity, Qbaf
from .semantics import SemanticsSpec

# Slack applied to the interval bounds before declaring a target
# unattainable, covering float noise at the boundary.
ATTAINABILITY_TOLERANCE = 1e-6

# Step halvings tried within one solver iteration before the attempt is
# declared stuck at a directional local optimum.
_MAX_HALVINGS = 40

_ACYCLIC_MSG = "attainability and contestation are defined only for acyclic EW-QBAFs"

ProgressCallback = Callable[[int, float], None]


@dataclass(frozen=True)
class AttainableInterval:
    topic: str
    min: float
    max: float

    def contains(self, value: float, slack: float = ATTAINABILITY_TOLERANCE) -> bool:
        return self.min - slack <= value <= self.max + slack


class ContestStatus(Enum):
    SOLVED = "solved"
    UNATTAINABLE = "unattainable"
    ITERATION_BUDGET_EXHAUSTED = "iteration_budget_exhausted"


@dataclass(frozen=True)
class ContestRequest:
    topic: str
    desired_strength: float
    error_threshold: float = 0.01
    max_iterations: int = 1000
    max_attempts: int = 10
    perturbation: float = 1e-5
    step_min: float = 0.5
    step_max: float = 25.0
    seed: int = 0
    use_exact_grae: bool = False

    def __post_init__(self):
        if not (0.0 <= self.desired_strength <= 1.0):
            raise ValueError("desired_strength must lie in [0, 1]")
        if not (0.0 < self.error_threshold < 1.0):
            raise ValueError("error_threshold must lie in (0, 1)")
        if self.max_iterations < 1 or self.max_attempts < 1:
            raise ValueError("max_iterations and max_attempts must be at least 1")
        if self.perturbation == 0.0 or abs(self.perturbation) > 1.0:
            raise ValueError("perturbation must be nonzero with magnitude at most 1")
        if not (0.0 < self.step_min <= self.step_max):
            raise ValueError("steps must satisfy 0 < step_min <= step_max")
        if self.seed < 0:
            raise ValueError("seed must be a nonnegative integer")


@dataclass(frozen=True)
class ContestOutcome:
    status: ContestStatus
    weights: dict[EdgeKey, float] = field(compare=False)
    final_strength: float
    iterations_used: int
    attempts_used: int


def max_min_weight_functions(q: Qbaf, topic: str) -> tuple[dict[EdgeKey, float], dict[EdgeKey, float]]:
    """The two extreme weight functions for a topic argument.

    max: every support 1, every attack 0. min: direct attacks on the topic
    and non-direct supports 1; direct supports and non-direct attacks 0
    (attackers elsewhere stay silenced so the topic's attackers reach full
    strength).
    """
    if not q.has_argument(topic):
        from .model import UnknownArgumentError

        raise UnknownArgumentError(f"unknown argument {topic!r}")
    weights_max: dict[EdgeKey, float] = {}
    weights_min: dict[EdgeKey, float] = {}
    for e in q.edges:
        is_support = e.polarity is Polarity.SUPPORT
        weights_max[e.key] = 1.0 if is_support else 0.0
        if e.target == topic:
            weights_min[e.key] = 0.0 if is_support else 1.0
        else:
            weights_min[e.key] = 1.0 if is_support else 0.0
    return weights_max, weights_min


def _extreme_strengths(compiled: CompiledQbaf, spec: SemanticsSpec, topic_idx: int) -> tuple[float, float]:
    topic = compiled.ids[topic_idx]
    n_edges = len(compiled.edges)
    wmax = [0.0] * n_edges
    wmin = [0.0] * n_edges
    for i, e in enumerate(compiled.edges):
        is_support = e.polarity is Polarity.SUPPORT
        wmax[i] = 1.0 if is_support else 0.0
        if e.target == topic:
            wmin[i] = 0.0 if is_support else 1.0
        else:
            wmin[i] = 1.0 if is_support else 0.0
    smin = compiled.forward(spec, wmin)[topic_idx]
    smax = compiled.forward(spec, wmax)[topic_idx]
    return smin, smax


def attainable_interval(q: Qbaf, spec: SemanticsSpec, topic: str) -> AttainableInterval:
    """Strengths reachable for the topic by varying edge weights; every
    value between the bounds is attainable."""
    compiled = compile_qbaf(q)
    compiled.require_acyclic(_ACYCLIC_MSG)
    topic_idx = compiled.arg_index(topic)
    smin, smax = _extreme_strengths(compiled, spec, topic_idx)
    return AttainableInterval(topic, smin, smax)


def _probe_gradients(
    compiled: CompiledQbaf,
    spec: SemanticsSpec,
    weights: list[float],
    topic_idx: int,
    perturbation: float,
    base_strength: float,
) -> list[float]:
    """Perturbation quotient per edge, against the supplied weights."""
    grads = [0.0] * len(weights)
    forward = compiled.forward
    for i in range(len(weights)):
        w = weights[i]
        delta = perturbation if w + perturbation <= 1.0 else -perturbation
        weights[i] = w + delta
        s1 = forward(spec, weights)[topic_idx]
        weights[i] = w
        grads[i] = (s1 - base_strength) / delta
    return grads


def _restart_weights(seed: int, attempt: int, n_edges: int) -> list[float]:
    # Restart k is reproducible per request seed: PCG64(SeedSequence([seed, k])).
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, attempt])))
    return [float(x) for x in rng.random(n_edges)]


def contest(
    q: Qbaf,
    spec: SemanticsSpec,
    req: ContestRequest,
    progress: Optional[ProgressCallback] = None,
) -> ContestOutcome:
    """Solve for edge weights that give the topic the desired strength.

    Returns UNATTAINABLE without iterating when the target falls outside
    the attainable interval (with a small slack); SOLVED immediately with
    unchanged weights when the current strength is already within the
    error threshold. Otherwise runs the attribution-guided update loop,
    clamping every weight to [0, 1] per iteration; after exhausting the
    iteration budget it restarts from seeded uniform random weights, up to
    ``max_attempts``. ``progress`` is invoked after every iteration with
    the cumulative iteration number and the current topic strength.
    """
    compiled = compile_qbaf(q)
    compiled.require_acyclic(_ACYCLIC_MSG)
    topic_idx = compiled.arg_index(req.topic)
    target = req.desired_strength
    delta = req.error_threshold

    current = compiled.forward(spec, compiled.weights0)[topic_idx]
    smin, smax = _extreme_strengths(compiled, spec, topic_idx)
    if not (smin - ATTAINABILITY_TOLERANCE <= target <= smax + ATTAINABILITY_TOLERANCE):
        return ContestOutcome(ContestStatus.UNATTAINABLE, q.weights(), current, 0, 0)
    if abs(current - target) <= delta:
        return ContestOutcome(ContestStatus.SOLVED, q.weights(), current, 0, 1)

    n_edges = len(compiled.edges)
    iterations_total = 0
    best_gap = abs(current - target)
    best_weights = list(compiled.weights0)
    best_strength = current

    for attempt in range(1, req.max_attempts + 1):
        if attempt == 1:
            weights = list(compiled.weights0)
            strength = current
        else:
            weights = _restart_weights(req.seed, attempt, n_edges)
            strength = compiled.forward(spec, weights)[topic_idx]
        gap = abs(target - strength)
        gap0 = max(gap, 1e-12)
        damping = 1.0
        solved = gap <= delta
        for _ in range(req.max_iterations):
            if solved:
                break
            if req.use_exact_grae:
                grads = compiled.gradients(spec, weights, topic_idx)
            else:
                grads = _probe_gradients(compiled, spec, weights, topic_idx, req.perturbation, strength)
            step = req.step_max * gap / gap0
            if step < req.step_min:
                step = req.step_min
            elif step > req.step_max:
                step = req.step_max
            direction = 1.0 if target > strength else -1.0
            # Trial steps from the scheduled size downward; accept the first
            # that strictly shrinks the gap. A step too large for the
            # remaining distance would otherwise fling every weight to a box
            # corner and limit-cycle between the interval extremes.
            accepted = False
            trial = damping
            for _halving in range(_MAX_HALVINGS):
                scale = step * trial * direction
                candidate = [0.0] * n_edges
                for i in range(n_edges):
                    w = weights[i] + grads[i] * scale
                    candidate[i] = 0.0 if w < 0.0 else (1.0 if w > 1.0 else w)
                s_candidate = compiled.forward(spec, candidate)[topic_idx]
                if abs(target - s_candidate) < gap:
                    accepted = True
                    break
                trial *= 0.5
            iterations_total += 1
            if accepted:
                weights = candidate
                strength = s_candidate
                gap = abs(target - strength)
                damping = min(trial * 2.0, 1.0)
            if progress is not None:
                progress(iterations_total, strength)
            if gap <= delta:
                solved = True
            elif not accepted:
                # No step along the attribution direction improves: this
                # attempt sits at a directional local optimum, so staying in
                # the loop would only replay the identical iteration.
                break
        if gap < best_gap:
            best_gap = gap
            best_weights = list(weights)
            best_strength = strength
        if solved:
            weight_map = {e.key: weights[i] for i, e in enumerate(compiled.edges)}
            return ContestOutcome(ContestStatus.SOLVED, weight_map, strength, iterations_total, attempt)

    weight_map = {e.key: best_weights[i] for i, e in enumerate(compiled.edges)}
    return ContestOutcome(
        ContestStatus.ITERATION_BUDGET_EXHAUSTED,
        weight_map,
        best_strength,
        iterations_total,
        req.max_attempts,
    )
