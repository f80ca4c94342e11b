"""Core data model for edge-weighted bipolar argumentation graphs.

An argument graph holds arguments with base scores in [0, 1] and typed,
weighted edges (attack or support, weight in [0, 1]). Graphs are immutable
value objects kept in a canonical order (arguments sorted by id, edges by
(source, target)), so structural equality and serialization are
deterministic. Structural queries (validation, topological order,
path counting, edge classification) and the JSON file format live here.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping, Optional, Union


class Polarity(str, Enum):
    ATTACK = "attack"
    SUPPORT = "support"


class EdgeClass(Enum):
    """Relation of an edge to a topic argument, by paths from its target."""

    DIRECT = "direct"
    INDIRECT = "indirect"
    MULTIFOLD = "multifold"
    INDEPENDENT = "independent"


class PathCount(Enum):
    """Saturating path count: MANY stands for every count >= 2."""

    ZERO = 0
    ONE = 1
    MANY = 2


class ParseError(ValueError):
    """Malformed graph document. Carries line/column when known."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        loc = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + loc)
        self.line = line
        self.column = column


class InvalidQbafError(ValueError):
    """A structurally well-formed document that violates graph invariants."""

    def __init__(self, violations: "list[Violation]"):
        super().__init__("; ".join(v.message for v in violations))
        self.violations = violations


class CyclicGraphError(ValueError):
    pass


class UnknownArgumentError(ValueError):
    pass


class UnknownEdgeError(ValueError):
    pass


@dataclass(frozen=True)
class Argument:
    id: str
    base_score: float


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    polarity: Polarity
    weight: float

    @property
    def key(self) -> tuple[str, str]:
        return (self.source, self.target)


# Edges are identified by (source, target); weight maps use this key.
EdgeKey = tuple[str, str]


@dataclass(frozen=True)
class Violation:
    code: str
    subject: str
    message: str


@dataclass(frozen=True)
class Qbaf:
    """Immutable argument graph. Construction canonicalizes order only;
    invariants are checked by :func:`validate`, not the constructor, so
    invalid graphs can be built and inspected."""

    arguments: tuple[Argument, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        args = tuple(
            sorted(
                (a if isinstance(a, Argument) else Argument(str(a[0]), float(a[1])) for a in self.arguments),
                key=lambda a: a.id,
            )
        )
        edges = tuple(
            sorted(self.edges, key=lambda e: (e.source, e.target, e.polarity.value, e.weight))
        )
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "edges", edges)

    @cached_property
    def base_scores(self) -> dict[str, float]:
        return {a.id: a.base_score for a in self.arguments}

    @cached_property
    def edge_index(self) -> dict[EdgeKey, Edge]:
        return {e.key: e for e in self.edges}

    @property
    def argument_ids(self) -> list[str]:
        return [a.id for a in self.arguments]

    def has_argument(self, arg_id: str) -> bool:
        return arg_id in self.base_scores

    def weight_of(self, key: EdgeKey) -> float:
        try:
            return self.edge_index[key].weight
        except KeyError:
            raise UnknownEdgeError(f"edge {key[0]!r} -> {key[1]!r} not in graph") from None

    def weights(self) -> dict[EdgeKey, float]:
        return {e.key: e.weight for e in self.edges}

    def with_weights(self, weights: Mapping[EdgeKey, float]) -> "Qbaf":
        """Copy with edge weights replaced where the mapping provides a value."""
        unknown = set(weights) - set(self.edge_index)
        if unknown:
            raise UnknownEdgeError(f"weight given for unknown edge(s): {sorted(unknown)}")
        new_edges = tuple(
            Edge(e.source, e.target, e.polarity, float(weights.get(e.key, e.weight)))
            for e in self.edges
        )
        return Qbaf(self.arguments, new_edges)


def validate(q: Qbaf) -> list[Violation]:
    """Check all graph invariants; an empty list means the graph is valid.

    Violations are data, not failures: each one names the offending
    argument or edge.
    """
    violations: list[Violation] = []
    seen_ids: set[str] = set()
    for a in q.arguments:
        if not a.id:
            violations.append(Violation("empty-id", a.id, "argument id is empty"))
        elif any(ch.isspace() for ch in a.id):
            violations.append(Violation("whitespace-id", a.id, f"argument id {a.id!r} contains whitespace"))
        if a.id in seen_ids:
            violations.append(Violation("duplicate-argument", a.id, f"duplicate argument id {a.id!r}"))
        seen_ids.add(a.id)
        if not (0.0 <= a.base_score <= 1.0):
            violations.append(
                Violation("base-score-out-of-range", a.id, f"base score {a.base_score} of {a.id!r} out of range [0,1]")
            )
    seen_pairs: set[EdgeKey] = set()
    for e in q.edges:
        subject = f"{e.source}->{e.target}"
        for endpoint in (e.source, e.target):
            if endpoint not in seen_ids:
                violations.append(
                    Violation("unknown-endpoint", subject, f"edge {subject} names unknown argument {endpoint!r}")
                )
        if e.source == e.target:
            violations.append(Violation("self-loop", subject, f"self-loop on {e.source!r}"))
        if not (0.0 <= e.weight <= 1.0):
            violations.append(
                Violation("weight-out-of-range", subject, f"weight {e.weight} of edge {subject} out of range [0,1]")
            )
        if e.key in seen_pairs:
            violations.append(
                Violation("duplicate-edge", subject, f"duplicate edge pair {subject} (attack and support are exclusive)")
            )
        seen_pairs.add(e.key)
    return violations


def topological_order(q: Qbaf) -> Optional[list[str]]:
    """Arguments ordered so every edge goes from earlier to later.

    Ties are broken lexicographically so the order is deterministic.
    Returns None when the edge graph has a directed cycle.
    """
    indegree = {a.id: 0 for a in q.arguments}
    successors: dict[str, list[str]] = {a.id: [] for a in q.arguments}
    for e in q.edges:
        indegree[e.target] += 1
        successors[e.source].append(e.target)
    ready = [aid for aid, deg in indegree.items() if deg == 0]
    heapq.heapify(ready)
    order: list[str] = []
    while ready:
        aid = heapq.heappop(ready)
        order.append(aid)
        for succ in successors[aid]:
            indegree[succ] -= 1
            if indegree[succ] == 0:
                heapq.heappush(ready, succ)
    if len(order) != len(q.arguments):
        return None
    return order


def path_count(q: Qbaf, source: str, target: str) -> PathCount:
    """Count directed paths from source to target, saturating at MANY.

    Paths have length >= 1, so the count from an argument to itself is
    ZERO. Only defined on acyclic graphs.
    """
    for arg in (source, target):
        if not q.has_argument(arg):
            raise UnknownArgumentError(f"unknown argument {arg!r}")
    order = topological_order(q)
    if order is None:
        raise CyclicGraphError("path counts are defined only for acyclic graphs")
    parents: dict[str, list[str]] = {a.id: [] for a in q.arguments}
    for e in q.edges:
        parents[e.target].append(e.source)
    # Saturating DP over the topological order; source seeds one "path of
    # length 0" that never counts toward the source itself.
    counts = {aid: 0 for aid in order}
    for aid in order:
        if aid == source:
            continue
        total = 0
        for p in parents[aid]:
            total += counts[p] + (1 if p == source else 0)
            if total >= 2:
                total = 2
                break
        counts[aid] = total
    if target == source:
        return PathCount.ZERO
    return PathCount(counts[target])


def classify_edge(q: Qbaf, edge: Union[Edge, EdgeKey], topic: str) -> EdgeClass:
    """Classify an edge against a topic argument.

    DIRECT when the edge targets the topic; otherwise INDIRECT, MULTIFOLD
    or INDEPENDENT as the number of paths from the edge's target to the
    topic is one, more than one, or zero.
    """
    key = edge.key if isinstance(edge, Edge) else tuple(edge)
    if key not in q.edge_index:
        raise UnknownEdgeError(f"edge {key[0]!r} -> {key[1]!r} not in graph")
    if not q.has_argument(topic):
        raise UnknownArgumentError(f"unknown argument {topic!r}")
    if key[1] == topic:
        return EdgeClass.DIRECT
    count = path_count(q, key[1], topic)
    if count is PathCount.ONE:
        return EdgeClass.INDIRECT
    if count is PathCount.MANY:
        return EdgeClass.MULTIFOLD
    return EdgeClass.INDEPENDENT


# ---------------------------------------------------------------------------
# File format: UTF-8 JSON with exactly the keys shown below; unknown keys are
# rejected. This document is also the wire payload for the service and CLI.
#
#   {"arguments": [{"id": "Movie", "base_score": 0.5}, ...],
#    "edges": [{"source": "Acting", "target": "Movie",
#               "polarity": "support", "weight": 0.8}, ...]}
# ---------------------------------------------------------------------------

_ARGUMENT_KEYS = {"id", "base_score"}
_EDGE_KEYS = {"source", "target", "polarity", "weight"}


def _require_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where} must be a number, got {value!r}")
    return float(value)


def parse_qbaf(data: Union[bytes, str], check: bool = True) -> Qbaf:
    """Parse a graph document.

    Raises ParseError (with line/column for JSON syntax errors) on
    malformed input and, when ``check`` is true, InvalidQbafError carrying
    the violation list for well-formed documents with invalid content.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not valid UTF-8: {exc}") from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc

    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    unknown = set(doc) - {"arguments", "edges"}
    if unknown:
        raise ParseError(f"unknown top-level key(s): {sorted(unknown)}")
    for field in ("arguments", "edges"):
        if field not in doc:
            raise ParseError(f"missing {field!r} array")
        if not isinstance(doc[field], list):
            raise ParseError(f"{field!r} must be an array")

    arguments = []
    for i, item in enumerate(doc["arguments"]):
        where = f"arguments[{i}]"
        if not isinstance(item, dict):
            raise ParseError(f"{where} must be an object")
        if set(item) != _ARGUMENT_KEYS:
            raise ParseError(f"{where} must have exactly keys id, base_score")
        if not isinstance(item["id"], str):
            raise ParseError(f"{where}.id must be a string")
        arguments.append(Argument(item["id"], _require_number(item["base_score"], f"{where}.base_score")))

    edges = []
    for i, item in enumerate(doc["edges"]):
        where = f"edges[{i}]"
        if not isinstance(item, dict):
            raise ParseError(f"{where} must be an object")
        if set(item) != _EDGE_KEYS:
            raise ParseError(f"{where} must have exactly keys source, target, polarity, weight")
        for field in ("source", "target"):
            if not isinstance(item[field], str):
                raise ParseError(f"{where}.{field} must be a string")
        if item["polarity"] not in ("attack", "support"):
            raise ParseError(f"{where}.polarity must be \"attack\" or \"support\"")
        edges.append(
            Edge(
                item["source"],
                item["target"],
                Polarity(item["polarity"]),
                _require_number(item["weight"], f"{where}.weight"),
            )
        )

    q = Qbaf(tuple(arguments), tuple(edges))
    if check:
        violations = validate(q)
        if violations:
            raise InvalidQbafError(violations)
    return q


def serialize_qbaf(q: Qbaf) -> bytes:
    """Deterministic UTF-8 bytes; parse(serialize(q)) == q structurally."""
    doc = {
        "arguments": [{"id": a.id, "base_score": a.base_score} for a in q.arguments],
        "edges": [
            {"source": e.source, "target": e.target, "polarity": e.polarity.value, "weight": e.weight}
            for e in q.edges
        ],
    }
    return (json.dumps(doc, ensure_ascii=False, separators=(",", ": "), indent=1) + "\n").encode("utf-8")


def qbaf_from_parts(
    arguments: Iterable[tuple[str, float]],
    edges: Iterable[tuple[str, str, str, float]],
) -> Qbaf:
    """Build a graph from plain tuples; edge polarity given as its name."""
    return Qbaf(
        tuple(Argument(i, float(b)) for i, b in arguments),
        tuple(Edge(s, t, Polarity(p), float(w)) for s, t, p, w in edges),
    )
