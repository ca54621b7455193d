"""Stateless HTTP service over the model, consumed by the explorer UI.

POST /evaluate  config document -> resolved parameters + result
POST /sweep     config document with a sweep section -> grid
POST /contour   config document + contour section -> iso polylines
POST /crossover config document + crossover section -> boundary curve
GET  /scenarios                 -> catalog
GET  /scenarios/{id}/run        -> expectation report

Validation problems come back as 400 with a list of {field, message};
unknown scenario ids as 404. Responses reuse the CSV/JSON metric names.
"""

from __future__ import annotations

import math

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import scenarios as scenario_catalog
from . import sweep as sweep_mod
from .config import ConfigDocument, parse_config_dict
from .engine import evaluate
from .errors import (
    BitletError,
    ConfigError,
    EvaluationError,
    UnachievableLevelError,
    UnknownScenarioError,
    ValidationError,
)
from .quantities import GIGA, machine_to_dict, workload_to_dict
from .tables import metrics_dict

_CONTOUR_KEYS = {"metric", "levels", "cc_min", "cc_max", "points"}
_CROSSOVER_KEYS = {"metric", "bw_min_gbps", "bw_max_gbps", "points"}


def _error_response(status: int, errors: list[dict]) -> JSONResponse:
    return JSONResponse(status_code=status, content={"errors": errors})


def _bitlet_error(err: BitletError) -> JSONResponse:
    if isinstance(err, UnknownScenarioError):
        return _error_response(404, [{"field": "scenario", "message": str(err)}])
    if isinstance(err, (ConfigError, ValidationError)):
        field = err.path if isinstance(err, ConfigError) else err.field
        return _error_response(400, [{"field": field, "message": err.message}])
    if isinstance(err, (EvaluationError, UnachievableLevelError)):
        return _error_response(400, [{"field": "", "message": str(err)}])
    return _error_response(400, [{"field": "", "message": str(err)}])


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _resolve(doc: ConfigDocument):
    if doc.scenario is not None:
        scenario = scenario_catalog.get_scenario(doc.scenario)
        return scenario.machine, scenario.workload
    if doc.workload is None:
        raise ConfigError("workload", "config has neither a workload nor a scenario")
    return doc.machine, doc.workload


def _params_payload(machine, workload) -> dict:
    return {"machine": machine_to_dict(machine), "workload": workload_to_dict(workload)}


def _report_payload(report: scenario_catalog.ScenarioReport) -> dict:
    return {
        "scenario": report.scenario_id,
        "passed": report.passed,
        "checks": [
            {
                "field": c.field,
                "expected": c.expected,
                "computed": _json_safe(c.computed),
                "compared": _json_safe(c.compared),
                "passed": c.passed,
                "citation": c.citation,
            }
            for c in report.checks
        ],
    }


def create_app() -> FastAPI:
    app = FastAPI(title="bitlet", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(BitletError)
    async def bitlet_error_handler(request: Request, err: BitletError):
        return _bitlet_error(err)

    async def _body(request: Request) -> dict:
        try:
            return await request.json()
        except Exception:
            raise ConfigError("", "request body must be a JSON object") from None

    @app.post("/evaluate")
    async def evaluate_endpoint(request: Request):
        doc = parse_config_dict(await _body(request))
        machine, workload = _resolve(doc)
        result = evaluate(machine, workload)
        metrics = {k: _json_safe(v) for k, v in metrics_dict(machine, workload, result).items()}
        return {
            "params": _params_payload(machine, workload),
            "result": metrics,
            "tdp_flags": list(result.tdp_flags),
        }

    @app.post("/sweep")
    async def sweep_endpoint(request: Request):
        doc = parse_config_dict(await _body(request))
        machine, workload = _resolve(doc)
        if doc.sweep is None:
            raise ConfigError("sweep", "sweep section required")
        metrics = doc.sweep.metrics or sweep_mod.DEFAULT_METRICS
        grid = sweep_mod.grid_sweep(machine, workload, list(doc.sweep.axes), tuple(metrics))
        return {
            "params": _params_payload(machine, workload),
            "axes": [
                {"param": a.param, "values": grid.axis_values[i].tolist()}
                for i, a in enumerate(grid.axes)
            ],
            "metrics": list(grid.metrics),
            "values": [
                [_json_safe(v) for v in row] if grid.values.ndim == 2 else
                [[_json_safe(v) for v in cell] for cell in row]
                for row in grid.values.tolist()
            ],
        }

    @app.post("/contour")
    async def contour_endpoint(request: Request):
        body = await _body(request)
        if not isinstance(body, dict):
            raise ConfigError("", "request body must be a JSON object")
        contour = body.pop("contour", None)
        doc = parse_config_dict(body)
        if not isinstance(contour, dict):
            raise ConfigError("contour", "contour section required")
        for key in contour:
            if key not in _CONTOUR_KEYS:
                raise ConfigError(f"contour.{key}", "unknown key")
        metric = contour.get("metric", "tp_combined")
        levels = contour.get("levels")
        if not isinstance(levels, list) or not levels:
            raise ConfigError("contour.levels", "need a non-empty list of levels")
        lines = []
        for level in levels:
            if not isinstance(level, (int, float)) or isinstance(level, bool):
                raise ConfigError("contour.levels", "levels must be numbers")
            si_level = level * GIGA if metric == "tp_combined" else float(level)
            line = sweep_mod.iso_line_cc_dio(
                doc.machine,
                metric,
                si_level,
                cc_min=float(contour.get("cc_min", 10.0)),
                cc_max=float(contour.get("cc_max", 1e5)),
                points=int(contour.get("points", 256)),
            )
            lines.append(
                {
                    "metric": metric,
                    "level": level,
                    "points": [[cc, dio] for cc, dio in line.samples()],
                    "coefficients": {
                        "cc": line.cc_coeff, "dio": line.dio_coeff, "rhs": line.rhs,
                    },
                }
            )
        return {"machine": machine_to_dict(doc.machine), "lines": lines}

    @app.post("/crossover")
    async def crossover_endpoint(request: Request):
        body = await _body(request)
        if not isinstance(body, dict):
            raise ConfigError("", "request body must be a JSON object")
        section = body.pop("crossover", None) or {}
        doc = parse_config_dict(body)
        machine, workload = _resolve(doc)
        for key in section:
            if key not in _CROSSOVER_KEYS:
                raise ConfigError(f"crossover.{key}", "unknown key")
        curve = sweep_mod.crossover_xbs_bw(
            machine,
            workload.cc(),
            workload.dio_cpu,
            workload.dio_combined,
            bw_min=float(section.get("bw_min_gbps", 250.0)) * GIGA,
            bw_max=float(section.get("bw_max_gbps", 16000.0)) * GIGA,
            points=int(section.get("points", 64)),
            metric=str(section.get("metric", "throughput")),
        )
        return {
            "metric": curve.metric,
            "dominant": curve.dominant,
            "slope_per_gbps": None if curve.slope is None else curve.slope * GIGA,
            "points": [
                [bw / GIGA, xbs]
                for bw, xbs in zip(curve.bw.tolist(), curve.xbs_star.tolist())
            ],
        }

    @app.get("/scenarios")
    async def scenarios_endpoint():
        return {
            "scenarios": [
                {
                    "id": s.id,
                    "description": s.description,
                    "citation": s.citation,
                    "expectations": len(s.expectations),
                }
                for s in scenario_catalog.list_scenarios()
            ]
        }

    @app.get("/scenarios/{scenario_id:path}/run")
    async def run_scenario_endpoint(scenario_id: str):
        report = scenario_catalog.run_scenario(scenario_id)
        scenario = scenario_catalog.get_scenario(scenario_id)
        result = evaluate(scenario.machine, scenario.workload)
        metrics = metrics_dict(scenario.machine, scenario.workload, result)
        return {
            **_report_payload(report),
            "params": _params_payload(scenario.machine, scenario.workload),
            "result": {k: _json_safe(v) for k, v in metrics.items()},
        }

    return app
