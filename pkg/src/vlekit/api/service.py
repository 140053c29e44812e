"""HTTP service exposing the engine under /v1.

Every failure comes back as a structured body {"error": {"code", "message",
...}} with a machine-readable code taken from the exception hierarchy.
Tabular results honor ``Accept: text/csv`` and are produced by the same
exporters the CLI uses, so both surfaces emit identical bytes.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, Field

from ..errors import (
    ConsistencyViolation,
    ContractViolation,
    DecompositionFailed,
    InvalidSmiles,
    ParameterGap,
    RemoteUnavailable,
    VlekitError,
)
from ..export import export_csv
from .config import ServiceConfig, build_registry
from .tasks import (
    ACTIVITY,
    BOILING_TEMPERATURE,
    NRTL_FIT,
    VALIDATE,
    VAPOR_PRESSURE,
    VLE,
    FitOutcome,
    TaskRequest,
    report_to_jsonable,
    result_to_jsonable,
    run_task,
)

_GATEWAY_ERRORS = (RemoteUnavailable, ContractViolation)


class ValidateBody(BaseModel):
    smiles: list[str] = Field(min_length=1)


class VaporPressureBody(BaseModel):
    smiles: str
    T_K: float


class BoilingTemperatureBody(BaseModel):
    smiles: str
    p_Pa: float


class ActivityBody(BaseModel):
    smiles: list[str] = Field(min_length=2, max_length=2)
    model: str
    T_K: float


class VleBody(BaseModel):
    smiles: list[str] = Field(min_length=2, max_length=2)
    model: str
    T_K: float | None = None
    p_Pa: float | None = None


class FitBody(BaseModel):
    smiles: list[str] = Field(min_length=2, max_length=2)
    model: str
    variant: int
    T_K: float | None = None
    T_range_K: tuple[float, float] | None = None


def _error_body(exc: VlekitError) -> dict:
    err: dict = {"code": exc.code, "message": str(exc)}
    if isinstance(exc, InvalidSmiles) and getattr(exc, "offset", None) is not None:
        err["offset"] = exc.offset
    if isinstance(exc, ParameterGap) and exc.pair is not None:
        err["pair"] = list(exc.pair)
    if isinstance(exc, DecompositionFailed) and exc.uncovered:
        err["uncovered_atoms"] = list(exc.uncovered)
    if isinstance(exc, ConsistencyViolation) and exc.report is not None:
        err["report"] = report_to_jsonable(exc.report)
    return {"error": err}


def _wants_csv(request: Request) -> bool:
    return "text/csv" in request.headers.get("accept", "").lower()


def create_app(registry=None, config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    if registry is None:
        registry = build_registry(config)

    app = FastAPI(title="vlekit", version="0.1.0", docs_url=None, redoc_url=None)
    # The browser dialog is served from its own origin, so the API must
    # answer cross-origin requests. The service carries no credentials or
    # per-user state; a wildcard is appropriate here.
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(VlekitError)
    async def domain_error(request: Request, exc: VlekitError):
        status = 502 if isinstance(exc, _GATEWAY_ERRORS) else 422
        return JSONResponse(status_code=status, content=_error_body(exc))

    @app.exception_handler(ValueError)
    async def value_error(request: Request, exc: ValueError):
        return JSONResponse(
            status_code=422,
            content={"error": {"code": "invalid_request", "message": str(exc)}},
        )

    @app.exception_handler(RequestValidationError)
    async def body_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={
                "error": {
                    "code": "invalid_request",
                    "message": "request body failed validation",
                    "detail": exc.errors(),
                }
            },
        )

    def respond(request: Request, result):
        if _wants_csv(request) and not isinstance(result, dict):
            if isinstance(result, FitOutcome):
                text = export_csv(result.result, grid=result.grid)
            else:
                text = export_csv(result)
            return PlainTextResponse(text, media_type="text/csv")
        return JSONResponse(result_to_jsonable(result))

    @app.post("/v1/validate-smiles")
    async def validate_smiles(body: ValidateBody, request: Request):
        result = run_task(TaskRequest(VALIDATE, tuple(body.smiles)), registry)
        return respond(request, result)

    @app.post("/v1/vapor-pressure")
    async def vapor_pressure(body: VaporPressureBody, request: Request):
        result = run_task(
            TaskRequest(VAPOR_PRESSURE, (body.smiles,), T=body.T_K), registry
        )
        return respond(request, result)

    @app.post("/v1/boiling-temperature")
    async def boiling_temperature(body: BoilingTemperatureBody, request: Request):
        result = run_task(
            TaskRequest(BOILING_TEMPERATURE, (body.smiles,), p=body.p_Pa), registry
        )
        return respond(request, result)

    @app.post("/v1/activity")
    async def activity(body: ActivityBody, request: Request):
        result = run_task(
            TaskRequest(ACTIVITY, tuple(body.smiles), model=body.model, T=body.T_K),
            registry,
        )
        return respond(request, result)

    @app.post("/v1/vle")
    async def vle(body: VleBody, request: Request):
        result = run_task(
            TaskRequest(
                VLE, tuple(body.smiles), model=body.model, T=body.T_K, p=body.p_Pa
            ),
            registry,
        )
        return respond(request, result)

    @app.post("/v1/fit-nrtl")
    async def fit_nrtl(body: FitBody, request: Request):
        result = run_task(
            TaskRequest(
                NRTL_FIT,
                tuple(body.smiles),
                model=body.model,
                variant=body.variant,
                T=body.T_K,
                T_range=body.T_range_K,
            ),
            registry,
        )
        return respond(request, result)

    @app.get("/v1/models")
    async def models():
        return JSONResponse({"models": registry.model_names()})

    @app.get("/healthz")
    async def healthz():
        return JSONResponse({"status": "ok"})

    return app


def serve(config: ServiceConfig) -> None:  # pragma: no cover - thin wrapper
    import uvicorn

    uvicorn.run(create_app(config=config), host=config.host, port=config.port)
