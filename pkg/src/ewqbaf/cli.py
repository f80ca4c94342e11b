"""Command-line front end.

Subcommands: validate, eval, grae, attain, contest, bench, serve.
Computed results print as canonical JSON (byte-identical with the HTTP
service). Exit codes: 0 success, 1 domain error (cyclic graph where
acyclicity is required, invalid graph under ``validate``, unattainable
target under ``--strict``), 2 usage or document-parse error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import bench as bench_mod
from .attribution import grae_approx, grae_exact
from .contest import ContestRequest, ContestStatus, attainable_interval, contest
from .model import (
    CyclicGraphError,
    InvalidQbafError,
    ParseError,
    Qbaf,
    UnknownArgumentError,
    UnknownEdgeError,
    parse_qbaf,
    serialize_qbaf,
    validate,
)
from .semantics import SemanticsKind, SemanticsSpec, compute_strengths
from .wire import (
    attainability_payload,
    canonical_json,
    graes_payload,
    outcome_payload,
    strengths_payload,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def _read_qbaf(path: str, check: bool = True) -> Qbaf:
    with open(path, "rb") as fh:
        return parse_qbaf(fh.read(), check=check)


def _semantics_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--semantics",
        default="mlp",
        help="semantics kind: dfquad, qe, reb or mlp (default mlp)",
    )


def _spec(args) -> SemanticsSpec:
    return SemanticsSpec(SemanticsKind.parse(args.semantics))


def _emit(payload) -> None:
    sys.stdout.buffer.write(canonical_json(payload))
    sys.stdout.buffer.flush()


def _cmd_validate(args) -> int:
    q = _read_qbaf(args.file, check=False)
    violations = validate(q)
    _emit(
        {
            "valid": not violations,
            "violations": [
                {"code": v.code, "subject": v.subject, "message": v.message} for v in violations
            ],
        }
    )
    return EXIT_OK if not violations else EXIT_DOMAIN


def _cmd_eval(args) -> int:
    q = _read_qbaf(args.file)
    spec = _spec(args)
    _emit(strengths_payload(spec, compute_strengths(q, spec)))
    return EXIT_OK


def _cmd_grae(args) -> int:
    q = _read_qbaf(args.file)
    spec = _spec(args)
    if args.exact:
        grae = grae_exact(q, spec, args.topic)
        payload = graes_payload(spec, q, grae, "exact")
    else:
        grae = grae_approx(q, spec, args.topic, args.eps)
        payload = graes_payload(spec, q, grae, "approx", perturbation=args.eps)
    _emit(payload)
    return EXIT_OK


def _cmd_attain(args) -> int:
    q = _read_qbaf(args.file)
    spec = _spec(args)
    _emit(attainability_payload(spec, attainable_interval(q, spec, args.topic)))
    return EXIT_OK


def _cmd_contest(args) -> int:
    q = _read_qbaf(args.file)
    spec = _spec(args)
    request = ContestRequest(
        topic=args.topic,
        desired_strength=args.target,
        error_threshold=args.error_threshold,
        max_iterations=args.max_iterations,
        max_attempts=args.max_attempts,
        perturbation=args.eps,
        step_min=args.step_min,
        step_max=args.step_max,
        seed=args.seed,
        use_exact_grae=args.exact,
    )
    outcome = contest(q, spec, request)
    _emit(outcome_payload(spec, outcome))
    if args.out and outcome.status is ContestStatus.SOLVED:
        with open(args.out, "wb") as fh:
            fh.write(serialize_qbaf(q.with_weights(outcome.weights)))
    if args.strict and outcome.status is not ContestStatus.SOLVED:
        return EXIT_DOMAIN
    return EXIT_OK


def _parse_layers(text: str) -> list[tuple[int, ...]]:
    shapes = []
    for part in text.split(";"):
        part = part.strip()
        if part:
            shapes.append(tuple(int(x) for x in part.split(",")))
    if not shapes:
        raise ValueError("no layer shapes given")
    return shapes


def _cmd_bench(args) -> int:
    spec = _spec(args)
    defaults = ContestRequest(
        topic="placeholder",
        desired_strength=0.5,
        error_threshold=args.error_threshold,
        max_iterations=args.max_iterations,
        max_attempts=args.max_attempts,
        perturbation=args.eps,
        seed=args.seed,
    )
    if args.family == "prs":
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
        grid = [bench_mod.PrsGenConfig(n=n, p=args.p, seed=args.seed + n) for n in sizes]
        family = bench_mod.BenchFamily.PRS
    else:
        probs = [float(p) for p in args.probs.split(",") if p.strip()]
        grid = [
            bench_mod.MlpGenConfig(layer_sizes=shape, connect_prob=p, seed=args.seed)
            for shape in _parse_layers(args.layers)
            for p in probs
        ]
        family = bench_mod.BenchFamily.MLP_LIKE

    rows = []
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        out.write(bench_mod.CSV_HEADER + "\n")
        out.flush()
        for row in bench_mod.iter_experiment(family, grid, args.reps, spec, defaults):
            rows.append(row)
            # One finished grid point per line so interrupted sweeps keep
            # their completed rows.
            out.write(bench_mod.rows_to_csv([row]).splitlines()[1] + "\n")
            out.flush()
    finally:
        if args.out:
            out.close()
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(bench_mod.rows_to_json(rows))
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(store_dir=args.store, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ewqbaf",
        description="Evaluate, explain and contest edge-weighted bipolar argumentation graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a graph document against all invariants")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("eval", help="print every argument's strength")
    p.add_argument("file")
    _semantics_arg(p)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("grae", help="print per-edge attribution scores, descending")
    p.add_argument("file")
    p.add_argument("--topic", required=True)
    _semantics_arg(p)
    p.add_argument("--exact", action="store_true", help="analytic gradients instead of perturbation")
    p.add_argument("--eps", type=float, default=1e-5, help="perturbation size (default 1e-5)")
    p.set_defaults(func=_cmd_grae)

    p = sub.add_parser("attain", help="print the attainable strength interval of a topic")
    p.add_argument("file")
    p.add_argument("--topic", required=True)
    _semantics_arg(p)
    p.set_defaults(func=_cmd_attain)

    p = sub.add_parser("contest", help="solve for weights giving the topic a desired strength")
    p.add_argument("file")
    p.add_argument("--topic", required=True)
    p.add_argument("--target", type=float, required=True)
    _semantics_arg(p)
    p.add_argument("--out", help="write the revised graph document here when solved")
    p.add_argument("--error-threshold", type=float, default=0.01)
    p.add_argument("--max-iterations", type=int, default=1000)
    p.add_argument("--max-attempts", type=int, default=10)
    p.add_argument("--eps", type=float, default=1e-5)
    p.add_argument("--step-min", type=float, default=0.5)
    p.add_argument("--step-max", type=float, default=25.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--strict", action="store_true", help="exit 1 unless the target was solved")
    p.set_defaults(func=_cmd_contest)

    p = sub.add_parser("bench", help="run a synthetic contestation sweep, one CSV row per grid point")
    p.add_argument("--family", choices=["prs", "mlp"], required=True)
    _semantics_arg(p)
    p.add_argument("--sizes", default="10,20,30,40,50,60,70,80,90,100", help="prs sizes")
    p.add_argument("--p", type=float, default=None, help="prs edge probability (default 2/n)")
    p.add_argument("--layers", default="8,32,1;8,32,16,1;8,32,16,8,1", help='mlp shapes, ";"-separated')
    p.add_argument("--probs", default="0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0", help="mlp connect probs")
    p.add_argument("--reps", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--error-threshold", type=float, default=0.01)
    p.add_argument("--max-iterations", type=int, default=1000)
    p.add_argument("--max-attempts", type=int, default=10)
    p.add_argument("--eps", type=float, default=1e-5)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--json", help="also write rows as JSON here")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=int(os.environ.get("QBAF_PORT", "8080")))
    p.add_argument("--store", default=os.environ.get("QBAF_STORE"), help="persist handles in this directory")
    p.add_argument("--ui-dir", default=None, help="serve this directory as the web workbench")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidQbafError as exc:
        print(f"error: invalid graph: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (CyclicGraphError, UnknownArgumentError, UnknownEdgeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
