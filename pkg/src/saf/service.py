"""HTTP/JSON session service for stepping through extension construction.

Upload a framework, open a session under a semantics preset, inspect the
α-eligible initial sets of the current reduct, commit to one, undo, and
replay canonical decompositions.  Sessions live in memory with TTL
eviction; each session is mutated under a per-session lock, and the
framework store is append-only, so concurrent requests are safe.

Beyond the engine's own validation, ``step`` also rejects selections whose
class the session's selection rule does not allow, so a client cannot
drive the system outside the chosen semantics.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles

from . import initial, io_formats, serial
from .core import ContractError, Framework
from .io_formats import ParseError
from .serial import InvalidStep, SemanticsSpec, SerialisationState

DEFAULT_TTL_SECONDS = 3600.0
DEFAULT_BOUND = 20

_FALLBACK_PAGE = """<!doctype html>
<html><head><title>saf explorer</title></head>
<body>
<h1>saf explanation service</h1>
<p>The browser bundle is not built. The JSON API lives under <code>/api</code>.</p>
</body></html>
"""


@dataclass
class Session:
    id: str
    framework_id: str
    spec: SemanticsSpec
    states: list[SerialisationState]
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_access: float = field(default_factory=time.monotonic)

    @property
    def state(self) -> SerialisationState:
        return self.states[-1]


class ApiError(Exception):
    def __init__(self, status: int, message: str, reason: str | None = None):
        super().__init__(message)
        self.status = status
        self.message = message
        self.reason = reason


class Store:
    """In-memory framework and session stores with lazy TTL eviction."""

    def __init__(self, ttl_seconds: float, clock=time.monotonic):
        self.frameworks: dict[str, Framework] = {}
        self.sessions: dict[str, Session] = {}
        self.ttl = ttl_seconds
        self.clock = clock
        self._lock = threading.RLock()

    def evict_idle(self) -> None:
        now = self.clock()
        with self._lock:
            stale = [sid for sid, s in self.sessions.items() if now - s.last_access > self.ttl]
            for sid in stale:
                del self.sessions[sid]

    def add_framework(self, f: Framework) -> str:
        fid = uuid.uuid4().hex[:12]
        with self._lock:
            self.frameworks[fid] = f
        return fid

    def framework(self, fid: str) -> Framework:
        f = self.frameworks.get(fid)
        if f is None:
            raise ApiError(404, f"unknown framework id {fid!r}")
        return f

    def add_session(self, session: Session) -> None:
        session.last_access = self.clock()
        with self._lock:
            self.sessions[session.id] = session

    def session(self, sid: str) -> Session:
        self.evict_idle()
        s = self.sessions.get(sid)
        if s is None:
            raise ApiError(404, f"unknown session id {sid!r}")
        s.last_access = self.clock()
        return s


def _expect_json_object(request_body: bytes) -> dict:
    import json

    try:
        data = json.loads(request_body)
    except json.JSONDecodeError as exc:
        raise ApiError(400, f"malformed JSON body: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ApiError(400, "request body must be a JSON object")
    return data


def _string_list(data: dict, key: str) -> list[str]:
    value = data.get(key)
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ApiError(400, f"field {key!r} must be a list of argument labels")
    return value


def _labels_to_set(f: Framework, labels: list[str]):
    try:
        return f.set_of(*labels)
    except ContractError as exc:
        raise ApiError(422, str(exc)) from None


def _state_payload(f: Framework, state: SerialisationState, spec: SemanticsSpec) -> dict:
    eligible = serial.choices(state, spec.alpha)
    return {
        "remaining": list(f.labels(state.remaining)),
        "accumulated": list(f.labels(state.accumulated)),
        "choices": [
            {
                "set": list(f.labels(info.arguments)),
                "class": info.kind.value,
                "conflicts": sorted(list(f.labels(c)) for c in info.conflicts),
            }
            for info in eligible
        ],
        "terminal": serial.is_terminal(state, spec.beta),
    }


def _session_sequence(f: Framework, session: Session) -> dict:
    steps = session.state.history
    seq = serial.SerialisationSequence(
        steps=steps,
        extension=session.state.accumulated,
        spec=session.spec,
    )
    return io_formats.sequence_record(f, seq)


def create_app(
    *,
    ttl_seconds: float = DEFAULT_TTL_SECONDS,
    bound: int = DEFAULT_BOUND,
    static_dir: Path | None = None,
    validate_states: bool = False,
    clock=time.monotonic,
) -> FastAPI:
    """Build the service; ``validate_states`` re-checks every state invariant
    after each mutation (used by the test suite)."""
    app = FastAPI(title="saf explanation service")
    store = Store(ttl_seconds, clock)
    app.state.store = store

    def check_bound(f: Framework) -> None:
        if f.n > bound:
            raise ApiError(422, f"framework has {f.n} arguments, exceeding the service bound of {bound}")

    @app.exception_handler(ApiError)
    async def handle_api_error(_request, exc: ApiError):
        body = {"error": exc.message}
        if exc.reason:
            body["reason"] = exc.reason
        return JSONResponse(body, status_code=exc.status)

    # -- frameworks ---------------------------------------------------------
    @app.post("/api/frameworks", status_code=201)
    async def upload_framework(request: Request):
        data = _expect_json_object(await request.body())
        fmt = data.get("format", "tgf")
        content = data.get("content")
        if not isinstance(fmt, str) or not isinstance(content, str):
            raise ApiError(400, "fields 'format' and 'content' must be strings")
        try:
            f = io_formats.parse_framework(content, fmt).framework
        except (ParseError, ContractError, ValueError) as exc:
            raise ApiError(400, f"parse error: {exc}") from None
        fid = store.add_framework(f)
        return {
            "id": fid,
            "args": list(f.names),
            "attacks": [[a, b] for a, b in f.attack_labels()],
        }

    @app.get("/api/frameworks/{fid}/initial-sets")
    def framework_initial_sets(fid: str):
        f = store.framework(fid)
        check_bound(f)
        return io_formats.initial_sets_record(f, initial.enumerate_initial_sets(f))

    @app.get("/api/frameworks/{fid}/extensions")
    def framework_extensions(fid: str, semantics: str = "pr"):
        f = store.framework(fid)
        check_bound(f)
        try:
            spec = serial.preset(semantics)
        except ContractError as exc:
            raise ApiError(422, str(exc)) from None
        witnesses = serial.enumerate_extensions(f, spec, with_witnesses=True)
        return {
            "semantics": spec.name,
            "extensions": [
                {
                    "extension": list(f.labels(ext)),
                    "sequence": io_formats.sequence_record(f, witnesses[ext]),
                }
                for ext in sorted(witnesses, key=f.labels)
            ],
        }

    @app.post("/api/frameworks/{fid}/decompose")
    async def framework_decompose(fid: str, request: Request):
        f = store.framework(fid)
        check_bound(f)
        data = _expect_json_object(await request.body())
        labels = _string_list(data, "extension")
        extension = _labels_to_set(f, labels)
        try:
            seq = serial.decompose(f, extension)
        except ContractError as exc:
            raise ApiError(422, str(exc)) from None
        return io_formats.sequence_record(f, seq)

    # -- sessions -----------------------------------------------------------
    @app.post("/api/sessions", status_code=201)
    async def open_session(request: Request):
        data = _expect_json_object(await request.body())
        fid = data.get("frameworkId")
        semantics = data.get("semantics")
        if not isinstance(fid, str) or not isinstance(semantics, str):
            raise ApiError(400, "fields 'frameworkId' and 'semantics' must be strings")
        f = store.framework(fid)
        check_bound(f)
        try:
            spec = serial.preset(semantics)
        except ContractError as exc:
            raise ApiError(422, str(exc)) from None
        session = Session(
            id=uuid.uuid4().hex[:12],
            framework_id=fid,
            spec=spec,
            states=[serial.init_state(f)],
        )
        store.add_session(session)
        return {"sessionId": session.id, "state": _state_payload(f, session.state, spec)}

    @app.post("/api/sessions/{sid}/step")
    async def session_step(sid: str, request: Request):
        session = store.session(sid)
        f = store.framework(session.framework_id)
        data = _expect_json_object(await request.body())
        labels = _string_list(data, "select")
        selection = _labels_to_set(f, labels)
        with session.lock:
            state = session.state
            eligible = {info.arguments for info in serial.choices(state, session.spec.alpha)}
            try:
                new_state = serial.step(state, selection)
            except InvalidStep as exc:
                raise ApiError(422, str(exc), reason=exc.reason) from None
            if selection not in eligible:
                raise ApiError(
                    422,
                    f"selection is an initial set but its class is not eligible under "
                    f"the {session.spec.name!r} semantics",
                    reason="not-eligible",
                )
            if validate_states:
                serial.validate_state(new_state)
            session.states.append(new_state)
            return {"state": _state_payload(f, new_state, session.spec)}

    @app.post("/api/sessions/{sid}/undo")
    def session_undo(sid: str):
        session = store.session(sid)
        f = store.framework(session.framework_id)
        with session.lock:
            if len(session.states) == 1:
                raise ApiError(409, "already at the initial state")
            session.states.pop()
            if validate_states:
                serial.validate_state(session.state)
            return {"state": _state_payload(f, session.state, session.spec)}

    @app.get("/api/sessions/{sid}/sequence")
    def session_sequence(sid: str):
        session = store.session(sid)
        f = store.framework(session.framework_id)
        with session.lock:
            return _session_sequence(f, session)

    # -- static bundle ------------------------------------------------------
    bundle = static_dir
    if bundle is None:
        candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        bundle = candidate if candidate.is_dir() else None
    if bundle is not None and bundle.is_dir():
        app.mount("/", StaticFiles(directory=str(bundle), html=True), name="ui")
    else:
        @app.get("/", response_class=HTMLResponse)
        def index() -> str:
            return _FALLBACK_PAGE

    return app
