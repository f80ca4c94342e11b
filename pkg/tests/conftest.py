"""Shared test helpers: small random graphs and structural utilities.

The generators here are test-local on purpose (independent of the bench
module) so that model/semantics tests do not lean on the code they check.
"""

from __future__ import annotations

import numpy as np
import pytest

from ewqbaf import Qbaf, SemanticsKind, SemanticsSpec, compute_strengths, qbaf_from_parts
from ewqbaf.data import movie_qbaf
from ewqbaf.semantics import aggregate_product, aggregate_sum, uses_product_aggregation

ALL_KINDS = list(SemanticsKind)

# One line per acceptance criterion, printed at the end of the run.
ACCEPTANCE_LINES: list[str] = []


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    line = f"[{status}] {name}{suffix}"
    ACCEPTANCE_LINES.append(line)
    print(line, flush=True)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def movie() -> Qbaf:
    return movie_qbaf()


def random_dag(rng: np.random.Generator, n: int, p: float) -> Qbaf:
    """Forward-ordered random graph: ids sort like their positions, so edges
    respect the lexicographic order and the graph is acyclic."""
    ids = [f"n{i:03d}" for i in range(n)]
    args = [(ids[i], float(rng.random())) for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                pol = "attack" if rng.random() < 0.5 else "support"
                edges.append((ids[i], ids[j], pol, float(rng.random())))
    return qbaf_from_parts(args, edges)


def parents_map(q: Qbaf) -> dict[str, list]:
    out = {a.id: [] for a in q.arguments}
    for e in q.edges:
        out[e.target].append(e)
    return out


def children_map(q: Qbaf) -> dict[str, list]:
    out = {a.id: [] for a in q.arguments}
    for e in q.edges:
        out[e.source].append(e)
    return out


def reachable_from(q: Qbaf, start: str) -> set[str]:
    """Arguments reachable from start by directed paths of length >= 1."""
    kids = children_map(q)
    seen: set[str] = set()
    stack = [start]
    while stack:
        for e in kids[stack.pop()]:
            if e.target not in seen:
                seen.add(e.target)
                stack.append(e.target)
    return seen


def ancestors_of(q: Qbaf, target: str) -> set[str]:
    pars = parents_map(q)
    seen: set[str] = set()
    stack = [target]
    while stack:
        for e in pars[stack.pop()]:
            if e.source not in seen:
                seen.add(e.source)
                stack.append(e.source)
    return seen


def enumerate_paths(q: Qbaf, source: str, target: str, cap: int = 10_000) -> list[list]:
    """All directed paths (as edge lists) from source to target by DFS."""
    kids = children_map(q)
    paths: list[list] = []

    def walk(node, trail):
        if len(paths) >= cap:
            return
        for e in kids[node]:
            if e.target == target:
                paths.append(trail + [e])
            else:
                walk(e.target, trail + [e])

    walk(source, [])
    return paths


def node_aggregates(q: Qbaf, spec: SemanticsSpec) -> dict[str, float]:
    """Each argument's aggregate, recomputed from final strengths."""
    strengths = compute_strengths(q, spec)
    pars = parents_map(q)
    product = uses_product_aggregation(spec.kind)
    out = {}
    for a in q.arguments:
        attacks, supports = [], []
        for e in pars[a.id]:
            value = strengths[e.source] * e.weight
            (attacks if e.polarity.value == "attack" else supports).append(value)
        out[a.id] = aggregate_product(attacks, supports) if product else aggregate_sum(attacks, supports)
    return out


def kink_adjacent(q: Qbaf, spec: SemanticsSpec, edge_key, topic: str, margin: float = 1e-4) -> bool:
    """Whether a weight probe on this edge crosses a dfquad influence kink.

    Only nodes whose aggregate can move under the probe matter: the edge's
    target and its descendants, intersected with the topic and its
    ancestors. A finite difference across aggregate 0 there averages the
    two one-sided slopes and is meaningless as a derivative check.
    """
    if spec.kind is not SemanticsKind.DFQUAD:
        return False
    affected = reachable_from(q, edge_key[1]) | {edge_key[1]}
    relevant = affected & (ancestors_of(q, topic) | {topic})
    if not relevant:
        return False
    aggs = node_aggregates(q, spec)
    return any(abs(aggs[a]) <= margin for a in relevant)
