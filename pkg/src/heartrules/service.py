"""HTTP diagnosis service over a loaded rule-base artifact.

Four endpoints under /v1 back the clinician UI: schema metadata, the
selected rules, single diagnosis, and single-attribute what-if sweeps.  The
artifact is read-only; every response is deterministic for a fixed artifact.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .artifact import RuleBaseArtifact
from .errors import DataError, HeartRulesError
from .inference import diagnose
from .schema import canonical_label

MAX_SWEEP_STEPS = 1001


class RequestProblem(Exception):
    def __init__(self, field: str, message: str):
        self.field = field
        self.message = message
        super().__init__(f"{field}: {message}")


def _field_error(field: str, message: str, status: int = 400) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"detail": [{"field": field, "message": message}]})


def _coerce_attributes(artifact: RuleBaseArtifact, body) -> dict:
    if not isinstance(body, dict):
        raise RequestProblem("attributes", "expected an object of attribute values")
    known = {a.name: a for a in artifact.schema if a.role == "condition"}
    patient: dict = {}
    for name, value in body.items():
        attr = known.get(name)
        if attr is None:
            raise RequestProblem(
                f"attributes.{name}",
                f"unknown attribute; legal names: {', '.join(a.name for a in artifact.schema if a.role == 'condition')}")
        if value is None:
            patient[name] = None
            continue
        if attr.kind == "numeric":
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise RequestProblem(f"attributes.{name}", "expected a number or null")
            if not math.isfinite(float(value)):
                raise RequestProblem(f"attributes.{name}", "expected a finite number")
            patient[name] = float(value)
        else:
            label = canonical_label(str(value))
            if label not in attr.labels:
                raise RequestProblem(
                    f"attributes.{name}",
                    f"label {value!r} not one of {list(attr.labels)}")
            patient[name] = label
    return patient


def _diagnose_payload(artifact: RuleBaseArtifact, patient: dict) -> dict:
    rb = artifact.rulebase
    result = diagnose(rb, patient)
    order = sorted(range(len(rb.rules)),
                   key=lambda k: (-result.activations[k], rb.rules[k].source_id))
    activations = [{
        "rule_id": rb.rules[k].source_id,
        "activation": result.activations[k],
        "weight": rb.rules[k].weight,
    } for k in order]
    return {
        "percentage": result.percentage,
        "label": result.label,
        "uncovered": result.uncovered,
        "activations": activations,
    }


def create_app(artifact: RuleBaseArtifact, static_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="heartrules service", version=artifact.format_version)
    rb = artifact.rulebase

    @app.exception_handler(RequestProblem)
    async def _problem_handler(request: Request, exc: RequestProblem):
        return _field_error(exc.field, exc.message)

    @app.exception_handler(HeartRulesError)
    async def _engine_handler(request: Request, exc: HeartRulesError):
        if isinstance(exc, DataError):
            return _field_error("attributes", str(exc))
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.get("/v1/schema")
    def get_schema():
        attributes = []
        for a in artifact.schema:
            if a.role != "condition":
                continue
            entry: dict = {"name": a.name, "kind": a.kind, "role": a.role,
                           "description": a.description}
            try:
                var = rb.variable(a.name)
            except KeyError:
                var = None
            if a.kind == "numeric":
                rng = None
                if var is not None and all(math.isfinite(u) for u in var.universe):
                    rng = [var.universe[0], var.universe[1]]
                entry["range"] = rng
            else:
                entry["labels"] = list(a.labels)
            attributes.append(entry)
        return {"attributes": attributes,
                "decision": rb.decision_name,
                "threshold": rb.threshold,
                "fingerprint": artifact.fingerprint}

    @app.get("/v1/rules")
    def get_rules():
        fuzzy_by_source = {fr.source_id: fr for fr in rb.rules}
        rules = []
        for rule in artifact.crisp_rules.rules:
            fr = fuzzy_by_source[rule.id]
            rules.append({
                "id": rule.id,
                "text": rule.text(rb.decision_name),
                "support": rule.support,
                "weight": fr.weight,
                "consequent": fr.consequent,
                "terms": [{"attribute": attr, "labels": list(labels)}
                          for attr, labels in fr.terms],
            })
        return {"rules": rules}

    @app.post("/v1/diagnose")
    async def post_diagnose(request: Request):
        body = await _json_body(request)
        patient = _coerce_attributes(artifact, body.get("attributes", {}))
        return _diagnose_payload(artifact, patient)

    @app.post("/v1/whatif")
    async def post_whatif(request: Request):
        body = await _json_body(request)
        patient = _coerce_attributes(artifact, body.get("attributes", {}))
        sweep = body.get("sweep")
        if not isinstance(sweep, dict):
            raise RequestProblem("sweep", "expected an object {attribute, from, to, steps}")
        name = sweep.get("attribute")
        known = {a.name: a for a in artifact.schema if a.role == "condition"}
        if name not in known:
            raise RequestProblem("sweep.attribute", f"unknown attribute {name!r}")
        if known[name].kind != "numeric":
            raise RequestProblem("sweep.attribute",
                                 f"attribute {name!r} is {known[name].kind}; sweeps need numeric")
        try:
            lo = float(sweep["from"])
            hi = float(sweep["to"])
            steps = int(sweep["steps"])
        except (KeyError, TypeError, ValueError):
            raise RequestProblem("sweep", "from/to must be numbers and steps an integer") from None
        if steps < 1 or steps > MAX_SWEEP_STEPS:
            raise RequestProblem("sweep.steps", f"steps must lie in [1, {MAX_SWEEP_STEPS}]")
        values = [lo] if steps == 1 else list(np.linspace(lo, hi, steps))
        points = []
        for v in values:
            probe = dict(patient)
            probe[name] = float(v)
            out = _diagnose_payload(artifact, probe)
            points.append({"value": float(v), "percentage": out["percentage"],
                           "label": out["label"]})
        return points

    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception:
        raise RequestProblem("body", "request body must be JSON") from None
    if not isinstance(body, dict):
        raise RequestProblem("body", "request body must be a JSON object")
    return body
