"""JSON-over-HTTP facade for the workbench.

All numeric work is delegated to the engine modules; the service only loads
project snapshots, serializes results, and enforces optimistic concurrency
(every mutation must carry the current revision token). The panel UI bundle
is served from a static directory at the site root.
"""

from __future__ import annotations

import threading
from pathlib import Path

from fastapi import Body, FastAPI, Query, Request
from fastapi.responses import FileResponse, JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from .errors import DomainError, InputError, McdmError, StaleComputationError, ValidationError
from .fahp import build_matrix, consistency_ratio, inconsistent_triads
from .report import render_markdown, render_svg_charts
from .sensitivity import roadmap_tiers
from .topsis import topsis_pipeline
from .workspace import (
    PROJECT_SUFFIX,
    Alternative,
    Criterion,
    Expert,
    Judgment,
    Project,
    load_project,
    save_project,
)

DEFAULT_STATIC_DIR = Path(__file__).parent / "static"


class ProjectStore:
    """File-backed project registry with one write lock per project."""

    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def path(self, project_id: str) -> Path:
        if "/" in project_id or project_id.startswith("."):
            raise InputError(f"bad project id {project_id!r}")
        return self.root / f"{project_id}{PROJECT_SUFFIX}"

    def lock(self, project_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(project_id, threading.Lock())

    def ids(self):
        return sorted(p.name[: -len(PROJECT_SUFFIX)]
                      for p in self.root.glob(f"*{PROJECT_SUFFIX}"))

    def load(self, project_id: str) -> Project:
        path = self.path(project_id)
        if not path.exists():
            raise KeyError(project_id)
        return load_project(path)

    def save(self, project_id: str, p: Project):
        save_project(p, self.path(project_id))


def _error(status: int, code: str, message: str, location=None, extra=None):
    body = {"code": code, "message": message}
    if location:
        body["location"] = location
    if extra:
        body.update(extra)
    return JSONResponse(body, status_code=status)


def create_app(project_root, static_dir=None) -> FastAPI:
    store = ProjectStore(project_root)
    app = FastAPI(title="mcdm-workbench")

    @app.exception_handler(ValidationError)
    async def _validation(_, exc: ValidationError):
        return _error(400, "validation", str(exc), exc.location)

    @app.exception_handler(InputError)
    async def _input(_, exc: InputError):
        return _error(400, "input", str(exc))

    @app.exception_handler(DomainError)
    async def _domain(_, exc: DomainError):
        return _error(400, "domain", str(exc))

    @app.exception_handler(StaleComputationError)
    async def _stale(_, exc: StaleComputationError):
        return _error(409, "stale_computation", str(exc))

    @app.exception_handler(McdmError)
    async def _generic(_, exc: McdmError):
        return _error(400, "error", str(exc))

    @app.exception_handler(KeyError)
    async def _missing(_, exc: KeyError):
        return _error(404, "not_found", f"unknown project {exc.args[0]!r}")

    @app.get("/projects")
    def list_projects():
        return {"projects": store.ids()}

    @app.post("/projects", status_code=201)
    def create_project(body: dict = Body(...)):
        project_id = body.get("id") or body.get("name", "project").lower().replace(" ", "-")
        path = store.path(project_id)
        if path.exists():
            return _error(409, "exists", f"project {project_id!r} already exists")
        p = Project(name=body.get("name", project_id))
        for c in body.get("criteria", []):
            p.add_criterion(Criterion(c["id"], c.get("name", c["id"]),
                                      c.get("direction", "benefit")))
        for a in body.get("alternatives", []):
            p.add_alternative(Alternative(a["id"], a.get("name", a["id"])))
        for e in body.get("experts", []):
            p.add_expert(Expert(e["id"], e.get("name", e["id"]),
                                e.get("role", "practitioner")))
        store.save(project_id, p)
        return {"id": project_id, "revision": p.revision}

    @app.get("/projects/{project_id}")
    def get_project(project_id: str):
        p = store.load(project_id)
        return {"id": project_id, "revision": p.revision, "project": p.to_json()}

    @app.put("/projects/{project_id}")
    def put_project(project_id: str, body: dict = Body(...)):
        token = body.get("revision")
        if token is None:
            return _error(400, "input", "revision token required")
        with store.lock(project_id):
            current = store.load(project_id)
            if token != current.revision:
                return _error(409, "stale_revision",
                              f"revision {token} is stale (current {current.revision})")
            p = Project.from_json(body["project"])
            p.revision = current.revision + 1
            store.save(project_id, p)
            return {"id": project_id, "revision": p.revision}

    def _mutate(project_id: str, token, apply):
        with store.lock(project_id):
            p = store.load(project_id)
            if token is not None and token != p.revision:
                return None, _error(409, "stale_revision",
                                    f"revision {token} is stale (current {p.revision})")
            result = apply(p)
            store.save(project_id, p)
            return (p, result), None

    @app.post("/projects/{project_id}/judgments")
    def post_judgments(project_id: str, body: dict = Body(...)):
        expert = body.get("expert")
        if not expert:
            return _error(400, "input", "expert id required")
        judgments = [Judgment(j["a"], j["b"], j["label"], bool(j.get("reciprocal")))
                     for j in body.get("judgments", [])]

        def apply(p: Project):
            p.set_judgments(expert, judgments)
            return None

        out, err = _mutate(project_id, body.get("revision"), apply)
        if err:
            return err
        p, _ = out
        ids = p.criterion_ids()
        index = {c: i for i, c in enumerate(ids)}
        expert_crs = {}
        for eid, js in sorted(p.judgments.items()):
            m = build_matrix(ids, [(index[j.a], index[j.b], j.label, j.reciprocal)
                                   for j in js])
            expert_crs[eid] = consistency_ratio(m)
        mats = p.expert_matrices()
        from .fahp import aggregate_expert_matrices
        agg = aggregate_expert_matrices(mats)
        agg_cr = consistency_ratio(agg)
        payload = {"revision": p.revision, "expert_crs": expert_crs,
                   "aggregate_cr": agg_cr}
        if agg_cr >= 0.1:
            payload["inconsistent_triads"] = [
                {"criteria": [ids[i], ids[j], ids[k]], "deviation": dev}
                for i, j, k, dev in inconsistent_triads(agg)
            ]
        return payload

    @app.post("/projects/{project_id}/scores")
    def post_scores(project_id: str, body: dict = Body(...)):
        expert = body.get("expert")
        if not expert:
            return _error(400, "input", "expert id required")

        def apply(p: Project):
            p.set_scores(expert, body.get("scores", {}))
            return None

        out, err = _mutate(project_id, body.get("revision"), apply)
        if err:
            return err
        p, _ = out
        return {"revision": p.revision}

    @app.get("/projects/{project_id}/weights")
    def get_weights(project_id: str, cr_threshold: float = Query(0.1)):
        p = store.load(project_id)
        outcome = p.compute_weights(cr_threshold)
        if not outcome.accepted:
            ids = p.criterion_ids()
            from .fahp import aggregate_expert_matrices
            agg = aggregate_expert_matrices(p.expert_matrices())
            triads = [{"criteria": [ids[i], ids[j], ids[k]], "deviation": dev}
                      for i, j, k, dev in inconsistent_triads(agg)]
            return _error(422, "cr_gate", f"consistency ratio {outcome.cr:.4f} >= "
                          f"threshold {cr_threshold}", extra={
                              "cr": outcome.cr,
                              "expert_crs": list(outcome.expert_crs),
                              "inconsistent_triads": triads,
                          })
        return outcome.to_json()

    @app.get("/projects/{project_id}/ranking")
    def get_ranking(project_id: str, round: int | None = Query(None)):
        p = store.load(project_id)
        p.compute_weights()
        return p.compute_ranking(round).to_json()

    @app.post("/projects/{project_id}/whatif")
    def post_whatif(project_id: str, body: dict = Body(...)):
        p = store.load(project_id)
        weights = body.get("weights")
        if not isinstance(weights, list) or not weights:
            return _error(400, "input", "weights array required")
        total = sum(weights)
        if total <= 0:
            return _error(400, "input", "weights must have a positive sum")
        weights = [w / total for w in weights]
        ranking = topsis_pipeline(p.decision_matrix(), weights,
                                  body.get("round"))
        return {"weights": weights, "ranking": ranking.to_json()}

    @app.post("/projects/{project_id}/sensitivity")
    def post_sensitivity(project_id: str, body: dict = Body(...)):
        p = store.load(project_id)
        p.compute_weights()
        out = p.compute_sensitivity(body.get("deltas"),
                                    int(body.get("mc_samples", 0)),
                                    int(body.get("seed", 0)))
        return {k: v.to_json() for k, v in out.items()}

    @app.get("/projects/{project_id}/tiers")
    def get_tiers(project_id: str, bands: str = Query("")):
        p = store.load(project_id)
        p.compute_weights()
        ranking = p.compute_ranking(None)
        band_sizes = tuple(int(x) for x in bands.split(",") if x) or (1, 2, 2)
        return roadmap_tiers(ranking, band_sizes).to_json()

    @app.get("/projects/{project_id}/report.md")
    def report_md(project_id: str, round: int | None = Query(None)):
        p = store.load(project_id)
        p.compute_weights()
        p.compute_ranking(round)
        return PlainTextResponse(render_markdown(p), media_type="text/markdown")

    @app.get("/projects/{project_id}/report.svg")
    def report_svg(project_id: str, round: int | None = Query(None),
                   chart: str = Query("closeness")):
        p = store.load(project_id)
        p.compute_weights()
        p.compute_ranking(round)
        charts = render_svg_charts(p)
        name = f"{chart}.svg"
        if name not in charts:
            return _error(404, "not_found", f"unknown chart {chart!r}")
        return PlainTextResponse(charts[name], media_type="image/svg+xml")

    static = Path(static_dir) if static_dir else DEFAULT_STATIC_DIR
    if static.is_dir():
        app.mount("/", StaticFiles(directory=static, html=True), name="ui")

    return app
