"""HTTP service: stored graphs plus computation routes.

Routes mirror the library operations over a handle store:

  POST /qbafs                         store a graph document, returns an id
  GET  /qbafs/{id}                    the stored document
  PUT  /qbafs/{id}/weights            replace edge weights (total mapping)
  GET  /qbafs/{id}/strengths          ?semantics=
  GET  /qbafs/{id}/graes              ?topic=&semantics=&exact=&eps=
  GET  /qbafs/{id}/attainability      ?topic=&semantics=
  POST /qbafs/{id}/contest            body: semantics + solver fields

Computed payloads are rendered by :mod:`ewqbaf.wire`, byte-identical with
the CLI. Contest accepts ``Accept: text/event-stream`` and then streams
one ``progress`` event per solver iteration followed by exactly one
``outcome`` event. With a store directory, handles persist as one graph
file per id and reload on start.
"""

from __future__ import annotations

import datetime as _dt
import queue
import threading
import uuid
from dataclasses import dataclass

from fastapi import FastAPI, Request, Response
from fastapi.responses import StreamingResponse

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
)
from .semantics import SemanticsKind, SemanticsSpec, compute_strengths
from .wire import (
    attainability_payload,
    canonical_json,
    graes_payload,
    outcome_payload,
    strengths_payload,
)

# Workbench hygiene caps for solver requests.
MAX_CONTEST_ITERATIONS = 100_000
MAX_GRAPH_EDGES = 100_000


@dataclass
class QbafHandle:
    id: str
    qbaf: Qbaf
    created_at: str


class HandleStore:
    """In-memory handles with optional file-per-handle persistence."""

    def __init__(self, store_dir=None):
        self._lock = threading.Lock()
        self._handles: dict[str, QbafHandle] = {}
        self._dir = None
        if store_dir:
            import pathlib

            self._dir = pathlib.Path(store_dir)
            self._dir.mkdir(parents=True, exist_ok=True)
            for path in sorted(self._dir.glob("*.qbaf")):
                created = _dt.datetime.fromtimestamp(
                    path.stat().st_mtime, tz=_dt.timezone.utc
                ).isoformat()
                self._handles[path.stem] = QbafHandle(path.stem, parse_qbaf(path.read_bytes()), created)

    def add(self, q: Qbaf) -> QbafHandle:
        handle = QbafHandle(
            uuid.uuid4().hex,
            q,
            _dt.datetime.now(tz=_dt.timezone.utc).isoformat(),
        )
        with self._lock:
            self._handles[handle.id] = handle
            self._persist(handle)
        return handle

    def get(self, handle_id: str) -> QbafHandle:
        with self._lock:
            handle = self._handles.get(handle_id)
        if handle is None:
            raise KeyError(handle_id)
        return handle

    def replace_qbaf(self, handle_id: str, q: Qbaf) -> QbafHandle:
        with self._lock:
            old = self._handles.get(handle_id)
            if old is None:
                raise KeyError(handle_id)
            handle = QbafHandle(old.id, q, old.created_at)
            self._handles[handle_id] = handle
            self._persist(handle)
        return handle

    def _persist(self, handle: QbafHandle) -> None:
        if self._dir is not None:
            (self._dir / f"{handle.id}.qbaf").write_bytes(serialize_qbaf(handle.qbaf))


def _json_response(payload, status_code: int = 200) -> Response:
    return Response(canonical_json(payload), status_code=status_code, media_type="application/json")


def _error(status_code: int, message: str, **extra) -> Response:
    return _json_response({"error": message, **extra}, status_code)


def create_app(store_dir=None, ui_dir=None) -> FastAPI:
    app = FastAPI(title="ewqbaf workbench", docs_url=None, redoc_url=None)
    store = HandleStore(store_dir)

    def parse_semantics(name) -> SemanticsSpec:
        return SemanticsSpec(SemanticsKind.parse(name or "mlp"))

    @app.exception_handler(CyclicGraphError)
    async def _cyclic(_request, exc):
        return _error(409, str(exc))

    @app.exception_handler(UnknownArgumentError)
    async def _unknown_arg(_request, exc):
        return _error(404, str(exc))

    @app.exception_handler(KeyError)
    async def _unknown_handle(_request, exc):
        return _error(404, f"unknown handle {exc.args[0]!r}")

    @app.exception_handler(ValueError)
    async def _bad_value(_request, exc):
        return _error(400, str(exc))

    @app.post("/qbafs")
    async def create_qbaf(request: Request):
        body = await request.body()
        if len(body) > 64 * 1024 * 1024:
            return _error(400, "document too large")
        try:
            q = parse_qbaf(body)
        except InvalidQbafError as exc:
            return _error(
                400,
                "invalid graph",
                violations=[
                    {"code": v.code, "subject": v.subject, "message": v.message}
                    for v in exc.violations
                ],
            )
        except ParseError as exc:
            return _error(400, str(exc))
        if len(q.edges) > MAX_GRAPH_EDGES:
            return _error(400, f"graph exceeds the {MAX_GRAPH_EDGES}-edge service cap")
        handle = store.add(q)
        return _json_response({"id": handle.id, "created_at": handle.created_at}, 201)

    @app.get("/qbafs/{handle_id}")
    async def get_qbaf(handle_id: str):
        handle = store.get(handle_id)
        return Response(serialize_qbaf(handle.qbaf), media_type="application/json")

    @app.put("/qbafs/{handle_id}/weights")
    async def put_weights(handle_id: str, request: Request):
        handle = store.get(handle_id)
        try:
            body = await request.json()
        except Exception:
            return _error(400, "body must be JSON")
        if not isinstance(body, dict) or not isinstance(body.get("weights"), list):
            return _error(400, 'body must be {"weights": [{"source","target","weight"}, ...]}')
        mapping = {}
        for item in body["weights"]:
            if (
                not isinstance(item, dict)
                or not isinstance(item.get("source"), str)
                or not isinstance(item.get("target"), str)
                or isinstance(item.get("weight"), bool)
                or not isinstance(item.get("weight"), (int, float))
            ):
                return _error(400, "each weight entry needs source, target and a numeric weight")
            if not (0.0 <= float(item["weight"]) <= 1.0):
                return _error(400, f"weight {item['weight']} out of range [0,1]")
            mapping[(item["source"], item["target"])] = float(item["weight"])
        missing = set(handle.qbaf.edge_index) - set(mapping)
        if missing:
            return _error(400, f"weight replacement must cover every edge; missing {sorted(missing)}")
        try:
            revised = handle.qbaf.with_weights(mapping)
        except UnknownEdgeError as exc:
            return _error(400, str(exc))
        handle = store.replace_qbaf(handle_id, revised)
        return Response(serialize_qbaf(handle.qbaf), media_type="application/json")

    @app.get("/qbafs/{handle_id}/strengths")
    async def get_strengths(handle_id: str, semantics: str = "mlp"):
        handle = store.get(handle_id)
        spec = parse_semantics(semantics)
        return _json_response(strengths_payload(spec, compute_strengths(handle.qbaf, spec)))

    @app.get("/qbafs/{handle_id}/graes")
    async def get_graes(
        handle_id: str,
        topic: str,
        semantics: str = "mlp",
        exact: bool = False,
        eps: float = 1e-5,
    ):
        handle = store.get(handle_id)
        spec = parse_semantics(semantics)
        if exact:
            grae = grae_exact(handle.qbaf, spec, topic)
            payload = graes_payload(spec, handle.qbaf, grae, "exact")
        else:
            grae = grae_approx(handle.qbaf, spec, topic, eps)
            payload = graes_payload(spec, handle.qbaf, grae, "approx", perturbation=eps)
        return _json_response(payload)

    @app.get("/qbafs/{handle_id}/attainability")
    async def get_attainability(handle_id: str, topic: str, semantics: str = "mlp"):
        handle = store.get(handle_id)
        spec = parse_semantics(semantics)
        return _json_response(attainability_payload(spec, attainable_interval(handle.qbaf, spec, topic)))

    @app.post("/qbafs/{handle_id}/contest")
    async def post_contest(handle_id: str, request: Request):
        handle = store.get(handle_id)
        try:
            body = await request.json()
        except Exception:
            return _error(400, "body must be JSON")
        if not isinstance(body, dict):
            return _error(400, "body must be a JSON object")
        spec = parse_semantics(body.get("semantics"))
        known = {
            "topic",
            "desired_strength",
            "error_threshold",
            "max_iterations",
            "max_attempts",
            "perturbation",
            "step_min",
            "step_max",
            "seed",
            "use_exact_grae",
        }
        unknown = set(body) - known - {"semantics"}
        if unknown:
            return _error(400, f"unknown field(s): {sorted(unknown)}")
        if not isinstance(body.get("topic"), str):
            return _error(400, "topic (string) is required")
        if isinstance(body.get("desired_strength"), bool) or not isinstance(
            body.get("desired_strength"), (int, float)
        ):
            return _error(400, "desired_strength (number) is required")
        try:
            req = ContestRequest(**{k: body[k] for k in known if k in body})
        except (TypeError, ValueError) as exc:
            return _error(400, str(exc))
        if req.max_iterations > MAX_CONTEST_ITERATIONS:
            return _error(400, f"max_iterations exceeds the service cap {MAX_CONTEST_ITERATIONS}")

        q = handle.qbaf  # snapshot: a concurrent PUT never affects this run
        interval = attainable_interval(q, spec, req.topic)
        if not interval.contains(req.desired_strength):
            return _json_response(
                {
                    "error": "desired strength is not attainable",
                    "attainability": attainability_payload(spec, interval),
                },
                422,
            )

        if "text/event-stream" in request.headers.get("accept", ""):
            return StreamingResponse(
                _contest_event_stream(q, spec, req),
                media_type="text/event-stream",
                headers={"Cache-Control": "no-store"},
            )
        outcome = contest(q, spec, req)
        return _json_response(outcome_payload(spec, outcome))

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def _sse(event: str, data: bytes) -> bytes:
    return b"event: " + event.encode() + b"\ndata: " + data.strip() + b"\n\n"


def _contest_event_stream(q: Qbaf, spec: SemanticsSpec, req: ContestRequest):
    """Run the solver in a worker thread, yielding one progress event per
    iteration and a single final outcome event."""
    events: queue.Queue = queue.Queue(maxsize=10_000)

    def on_progress(iteration: int, strength: float) -> None:
        events.put(("progress", {"iteration": iteration, "strength": strength}))

    def worker() -> None:
        try:
            outcome = contest(q, spec, req, progress=on_progress)
            events.put(("outcome", outcome_payload(spec, outcome)))
        except Exception as exc:  # surfaced as a terminal event, not a broken stream
            events.put(("outcome", {"status": "error", "error": str(exc)}))
        events.put(None)

    threading.Thread(target=worker, daemon=True).start()
    while True:
        item = events.get()
        if item is None:
            break
        name, payload = item
        yield _sse(name, canonical_json(payload))
