"""Stateless HTTP JSON service consumed by the lab UI.

Endpoints:
  GET  /api/defaults   -> a default Scenario document
  POST /api/evaluate   -> densities, per-mode R/T, retardation report
  POST /api/classical  -> classical barrier traversal and retardation
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .classical import ClassicalBarrier, ClassicalParticle, retardation_distance, traversal_time
from .errors import DeltaLabError, SchemaError
from .retardation import ScenarioResult, evaluate_scenario
from .scenario import Scenario, default_scenario, parse_scenario, scenario_to_dict


def _cpx(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def evaluate_response(result: ScenarioResult) -> dict:
    return {
        "grid_x": result.rho_free.grid.points().tolist(),
        "free_density": result.rho_free.values.tolist(),
        "nonfree_density": result.rho_nonfree.values.tolist(),
        "rt": [
            {
                "k": sol.k,
                "R": _cpx(sol.reflection),
                "T": _cpx(sol.transmission),
                "abs_R2": abs(sol.reflection) ** 2,
                "abs_T2": abs(sol.transmission) ** 2,
            }
            for sol in result.solutions
        ],
        "report": result.report.to_dict(),
        "window": {
            "x_lo": result.window.x_lo,
            "x_hi": result.window.x_hi,
            "max_lag": result.window.max_lag,
        },
        "scatterers": [
            {"x": s.position, "alpha": s.strength}
            for s in result.scenario.set.scatterers
        ],
    }


def create_app(defaults: Scenario = None) -> FastAPI:
    app = FastAPI(title="deltalab", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    default = defaults or default_scenario()

    @app.exception_handler(DeltaLabError)
    async def _domain_error(_request, exc: DeltaLabError):
        return JSONResponse(status_code=400, content={"error": exc.oneline()})

    @app.get("/api/defaults")
    async def api_defaults():
        return scenario_to_dict(default)

    @app.post("/api/evaluate")
    async def api_evaluate(request: Request):
        try:
            body = await request.json()
        except Exception:
            raise SchemaError("request body is not valid JSON")
        if not isinstance(body, dict):
            raise SchemaError("request body must be a JSON object")
        scenario = parse_scenario(body)
        return evaluate_response(evaluate_scenario(scenario))

    @app.post("/api/classical")
    async def api_classical(request: Request):
        try:
            body = await request.json()
        except Exception:
            raise SchemaError("request body is not valid JSON")
        if not isinstance(body, dict):
            raise SchemaError("request body must be a JSON object")
        for key in ("mass", "v0", "f0", "w"):
            if key not in body:
                raise SchemaError("missing required field at /%s" % key)
        barrier = ClassicalBarrier(
            x0=float(body.get("x0", 0.0)),
            w=float(body["w"]),
            f0=float(body["f0"]),
            mass=float(body["mass"]),
        )
        particle = ClassicalParticle(v0=float(body["v0"]))
        t = traversal_time(barrier, particle)
        return {
            "traversal_time": t,
            "free_time": barrier.w / particle.v0,
            "retardation_distance": retardation_distance(barrier, particle),
        }

    return app
