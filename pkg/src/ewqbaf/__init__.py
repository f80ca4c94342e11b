"""Edge-weighted quantitative bipolar argumentation: gradual semantics,
gradient-based edge attributions, attainability analysis and an iterative
contestation solver, with a CLI, HTTP service and benchmark harness."""

from .model import (
    Argument,
    CyclicGraphError,
    Edge,
    EdgeClass,
    EdgeKey,
    InvalidQbafError,
    ParseError,
    PathCount,
    Polarity,
    Qbaf,
    UnknownArgumentError,
    UnknownEdgeError,
    Violation,
    classify_edge,
    parse_qbaf,
    path_count,
    qbaf_from_parts,
    serialize_qbaf,
    topological_order,
    validate,
)
from .semantics import (
    SemanticsKind,
    SemanticsSpec,
    StrengthMap,
    aggregate_product,
    aggregate_sum,
    compute_strengths,
    influence,
)
from .attribution import (
    AttributionInfluence,
    GraeMap,
    classify_influence,
    grae_approx,
    grae_exact,
)
from .contest import (
    AttainableInterval,
    ContestOutcome,
    ContestRequest,
    ContestStatus,
    attainable_interval,
    contest,
    max_min_weight_functions,
)
from .data import movie_qbaf

__version__ = "0.1.0"

__all__ = [
    "Argument",
    "AttainableInterval",
    "AttributionInfluence",
    "ContestOutcome",
    "ContestRequest",
    "ContestStatus",
    "CyclicGraphError",
    "Edge",
    "EdgeClass",
    "EdgeKey",
    "GraeMap",
    "InvalidQbafError",
    "ParseError",
    "PathCount",
    "Polarity",
    "Qbaf",
    "SemanticsKind",
    "SemanticsSpec",
    "StrengthMap",
    "UnknownArgumentError",
    "UnknownEdgeError",
    "Violation",
    "aggregate_product",
    "aggregate_sum",
    "attainable_interval",
    "classify_edge",
    "classify_influence",
    "compute_strengths",
    "contest",
    "grae_approx",
    "grae_exact",
    "influence",
    "max_min_weight_functions",
    "movie_qbaf",
    "parse_qbaf",
    "path_count",
    "qbaf_from_parts",
    "serialize_qbaf",
    "topological_order",
    "validate",
]
