"""Random graph generators and the contestation experiment runner.

Two synthetic families:

  prs       n arguments in a fixed order; each forward pair (i < j) gets an
            edge with probability p (default 2/n), so the graph is acyclic
            by construction and the last argument is the topic.
  mlp-like  a layered graph; edges only between adjacent layers, each kept
            with the configured probability; the sole last-layer argument
            is the topic.

Base scores and edge weights are i.i.d. uniform on [0, 1]; every edge is an
attack or support with equal probability. All randomness flows through
PCG64: graph number k of a run seeded with s draws from
SeedSequence([s, k]), so sweeps are reproducible stream-by-stream.

The runner targets the midpoint of each topic's attainable interval
(always attainable) and aggregates validity, attempts and wall-clock
runtime of the solver into one row per grid point.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .contest import ContestRequest, ContestStatus, attainable_interval, contest
from .model import Argument, Edge, Polarity, Qbaf
from .semantics import SemanticsSpec


@dataclass(frozen=True)
class PrsGenConfig:
    n: int
    p: Optional[float] = None  # edge probability; defaults to 2/n
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.p is not None and not (0.0 <= self.p <= 1.0):
            raise ValueError("p must lie in [0, 1]")

    @property
    def edge_probability(self) -> float:
        return self.p if self.p is not None else 2.0 / self.n


@dataclass(frozen=True)
class MlpGenConfig:
    layer_sizes: tuple[int, ...]
    connect_prob: float = 1.0
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "layer_sizes", tuple(int(s) for s in self.layer_sizes))
        if len(self.layer_sizes) < 2:
            raise ValueError("at least 2 layers required")
        if any(s < 1 for s in self.layer_sizes):
            raise ValueError("layer sizes must be positive")
        if self.layer_sizes[-1] != 1:
            raise ValueError("last layer must hold exactly the one topic argument")
        if not (0.0 <= self.connect_prob <= 1.0):
            raise ValueError("connect_prob must lie in [0, 1]")


class BenchFamily(Enum):
    PRS = "prs"
    MLP_LIKE = "mlp"


@dataclass(frozen=True)
class BenchRow:
    family: str
    config: str
    semantics: str
    validity: Optional[float]
    attempts_avg: Optional[float]
    attempts_max: Optional[int]
    runtime_median_s: Optional[float]
    runtime_avg_s: Optional[float]


CSV_HEADER = "family,config,semantics,validity,attempts_avg,attempts_max,runtime_median_s,runtime_avg_s"


def _rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))


def _prs_ids(n: int) -> list[str]:
    width = len(str(n))
    return [f"a{i:0{width}d}" for i in range(1, n + 1)]


def generate_prs(cfg: PrsGenConfig, index: int = 0) -> Qbaf:
    """Forward-pair random graph; the stream split by ``index`` keeps every
    repetition of a sweep independently reproducible."""
    rng = _rng(cfg.seed, index)
    ids = _prs_ids(cfg.n)
    base = rng.random(cfg.n)
    arguments = tuple(Argument(ids[i], float(base[i])) for i in range(cfg.n))
    p = cfg.edge_probability
    edges = []
    for i in range(cfg.n):
        for j in range(i + 1, cfg.n):
            if rng.random() < p:
                polarity = Polarity.ATTACK if rng.random() < 0.5 else Polarity.SUPPORT
                edges.append(Edge(ids[i], ids[j], polarity, float(rng.random())))
    return Qbaf(arguments, tuple(edges))


def prs_topic(cfg: PrsGenConfig) -> str:
    return _prs_ids(cfg.n)[-1]


def _mlp_ids(layer_sizes: Sequence[int]) -> list[list[str]]:
    width = max(len(str(s)) for s in layer_sizes)
    return [
        [f"l{li}n{ni:0{width}d}" for ni in range(size)]
        for li, size in enumerate(layer_sizes)
    ]


def generate_mlp_like(cfg: MlpGenConfig, index: int = 0) -> Qbaf:
    """Layered random graph with edges only between adjacent layers."""
    rng = _rng(cfg.seed, index)
    layers = _mlp_ids(cfg.layer_sizes)
    flat = [aid for layer in layers for aid in layer]
    base = rng.random(len(flat))
    arguments = tuple(Argument(aid, float(b)) for aid, b in zip(flat, base))
    edges = []
    for li in range(len(layers) - 1):
        for src in layers[li]:
            for tgt in layers[li + 1]:
                if rng.random() < cfg.connect_prob:
                    polarity = Polarity.ATTACK if rng.random() < 0.5 else Polarity.SUPPORT
                    edges.append(Edge(src, tgt, polarity, float(rng.random())))
    return Qbaf(arguments, tuple(edges))


def mlp_topic(cfg: MlpGenConfig) -> str:
    return _mlp_ids(cfg.layer_sizes)[-1][0]


def _describe(cfg) -> str:
    if isinstance(cfg, PrsGenConfig):
        return f"n={cfg.n};p={cfg.edge_probability:g}"
    return "layers=" + "-".join(str(s) for s in cfg.layer_sizes) + f";p={cfg.connect_prob:g}"


def iter_experiment(
    family: BenchFamily,
    grid: Iterable,
    repetitions: int,
    spec: SemanticsSpec,
    contest_defaults: ContestRequest,
) -> Iterator[BenchRow]:
    """Yield one row per grid point as soon as it is finished.

    Per repetition: generate the graph, aim the solver at the midpoint of
    the topic's attainable interval, and time the contest call alone.
    Failures count against validity instead of raising.
    """
    for cfg in grid:
        if isinstance(cfg, PrsGenConfig):
            generate, topic_of = generate_prs, prs_topic
        else:
            generate, topic_of = generate_mlp_like, mlp_topic
        solved = 0
        attempts: list[int] = []
        runtimes: list[float] = []
        for rep in range(repetitions):
            q = generate(cfg, rep)
            topic = topic_of(cfg)
            interval = attainable_interval(q, spec, topic)
            desired = (interval.min + interval.max) / 2.0
            request = replace(contest_defaults, topic=topic, desired_strength=desired)
            began = time.perf_counter()
            outcome = contest(q, spec, request)
            runtimes.append(time.perf_counter() - began)
            if outcome.status is ContestStatus.SOLVED:
                solved += 1
            attempts.append(max(outcome.attempts_used, 1))
        if repetitions == 0:
            yield BenchRow(family.value, _describe(cfg), spec.kind.value, None, None, None, None, None)
            continue
        yield BenchRow(
            family.value,
            _describe(cfg),
            spec.kind.value,
            solved / repetitions,
            sum(attempts) / len(attempts),
            max(attempts),
            statistics.median(runtimes),
            sum(runtimes) / len(runtimes),
        )


def run_experiment(
    family: BenchFamily,
    grid: Iterable,
    repetitions: int,
    spec: SemanticsSpec,
    contest_defaults: ContestRequest,
) -> list[BenchRow]:
    return list(iter_experiment(family, grid, repetitions, spec, contest_defaults))


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for r in rows:
        writer.writerow(
            [
                r.family,
                r.config,
                r.semantics,
                _cell(r.validity),
                _cell(r.attempts_avg),
                _cell(r.attempts_max),
                _cell(r.runtime_median_s),
                _cell(r.runtime_avg_s),
            ]
        )
    return out.getvalue()


def rows_to_json(rows: Iterable[BenchRow]) -> str:
    payload = [
        {
            "family": r.family,
            "config": r.config,
            "semantics": r.semantics,
            "validity": r.validity,
            "attempts_avg": r.attempts_avg,
            "attempts_max": r.attempts_max,
            "runtime_median_s": r.runtime_median_s,
            "runtime_avg_s": r.runtime_avg_s,
        }
        for r in rows
    ]
    return json.dumps(payload, indent=2) + "\n"
