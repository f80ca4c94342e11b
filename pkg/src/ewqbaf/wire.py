"""Canonical JSON payloads shared by the CLI and the HTTP service.

Both front ends render computed results (strengths, attribution scores,
attainable intervals, contest outcomes) through these builders so the two
surfaces are byte-identical for identical inputs. Floats are written with
17 significant digits, which round-trips doubles exactly.
"""

from __future__ import annotations

import math
from typing import Optional

from .attribution import GraeMap
from .contest import AttainableInterval, ContestOutcome
from .model import Qbaf
from .semantics import SemanticsSpec, StrengthMap


def format_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"non-finite number {x!r} in payload")
    return f"{x:.17g}"


def _encode(value, out: list[str]) -> None:
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, str):
        import json

        out.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        out.append(format_float(value))
    elif isinstance(value, dict):
        out.append("{")
        first = True
        for k, v in value.items():
            if not first:
                out.append(",")
            first = False
            _encode(str(k), out)
            out.append(":")
            _encode(v, out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        first = True
        for v in value:
            if not first:
                out.append(",")
            first = False
            _encode(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot encode {type(value).__name__} canonically")


def canonical_json(payload) -> bytes:
    """Deterministic UTF-8 JSON: insertion-ordered keys, 17-digit floats."""
    out: list[str] = []
    _encode(payload, out)
    out.append("\n")
    return "".join(out).encode("utf-8")


def strengths_payload(spec: SemanticsSpec, strengths: StrengthMap) -> dict:
    return {
        "semantics": spec.kind.value,
        "strengths": {aid: strengths[aid] for aid in sorted(strengths)},
    }


def graes_payload(
    spec: SemanticsSpec,
    q: Qbaf,
    grae: GraeMap,
    method: str,
    perturbation: Optional[float] = None,
) -> dict:
    scores = []
    for key, score in grae.ranked():
        edge = q.edge_index[key]
        scores.append(
            {
                "source": edge.source,
                "target": edge.target,
                "polarity": edge.polarity.value,
                "weight": edge.weight,
                "score": score,
            }
        )
    payload = {
        "semantics": spec.kind.value,
        "topic": grae.topic,
        "method": method,
        "scores": scores,
    }
    if perturbation is not None:
        payload["perturbation"] = perturbation
    return payload


def attainability_payload(spec: SemanticsSpec, interval: AttainableInterval) -> dict:
    return {
        "semantics": spec.kind.value,
        "topic": interval.topic,
        "min": interval.min,
        "max": interval.max,
    }


def outcome_payload(spec: SemanticsSpec, outcome: ContestOutcome) -> dict:
    return {
        "semantics": spec.kind.value,
        "status": outcome.status.value,
        "final_strength": outcome.final_strength,
        "iterations_used": outcome.iterations_used,
        "attempts_used": outcome.attempts_used,
        "weights": [
            {"source": s, "target": t, "weight": w}
            for (s, t), w in sorted(outcome.weights.items())
        ],
    }
