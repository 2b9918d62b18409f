"""FastAPI service wrapping the solver package.

Error convention: structural problems are HTTP 422 (pydantic),
semantic problems are HTTP 400 with a ``code`` and details, and an
exact solve whose enumeration would blow the budget is HTTP 409 with
code ``oracle-budget-exceeded``.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse

from . import __version__
from .bench import run_bench
from .checks import checks_to_json, run_checks
from .errors import ContractViolationError, DegenerateInstanceError, OracleBudgetError
from .generate import ExplicitSizes, FixedSizes, GenParams, IntervalSizes, SizeModel, generate_instance
from .instance import Instance, instance_from_json, instance_to_json, validate_instance
from .reduction import CoverageInstance, mc_to_sap
from .schemas import (
    BenchRequest,
    BenchResponse,
    FromMcRequest,
    FromMcResponse,
    GenerateRequest,
    InstanceIn,
    InstanceOut,
    SolveRequest,
    SolveResponse,
    VerifyRequest,
    VerifyResponse,
)
from .solver import solve_exact, solve_full, solve_half


def _core_instance(model: InstanceIn) -> Instance:
    try:
        inst = instance_from_json(model.model_dump())
    except ValueError as exc:
        raise HTTPException(
            status_code=400, detail={"code": "invalid-instance", "violations": [str(exc)]}
        )
    violations = validate_instance(inst)
    if violations:
        raise HTTPException(
            status_code=400, detail={"code": "invalid-instance", "violations": violations}
        )
    return inst


def _size_model(kind: str, size_min: int, size_max: int | None, size_count: int, fixed_size: int | None) -> SizeModel:
    if kind == "interval":
        return IntervalSizes(min_size=size_min, max_size=size_max)
    if kind == "explicit":
        return ExplicitSizes(max_values=size_count, max_size=size_max)
    if fixed_size is None:
        raise HTTPException(
            status_code=400,
            detail={"code": "invalid-params", "message": "fixed size model needs fixed_size"},
        )
    return FixedSizes(size=fixed_size)


def create_app() -> FastAPI:
    app = FastAPI(title="sapsolve", version=__version__)

    @app.exception_handler(OracleBudgetError)
    def _budget_error(_, exc: OracleBudgetError):
        return JSONResponse(
            status_code=409,
            content={
                "detail": {
                    "code": "oracle-budget-exceeded",
                    "product_size": exc.product_size,
                    "budget": exc.budget,
                }
            },
        )

    @app.exception_handler(DegenerateInstanceError)
    @app.exception_handler(ContractViolationError)
    def _bad_params(_, exc: ValueError):
        return JSONResponse(
            status_code=400,
            content={"detail": {"code": "invalid-params", "message": str(exc)}},
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/solve", response_model=SolveResponse, response_model_exclude_none=True)
    def solve(request: SolveRequest):
        inst = _core_instance(request.instance)
        if request.algorithm == "half":
            report = solve_half(inst)
        elif request.algorithm == "full":
            report = solve_full(inst, request.max_support)
        else:
            report = solve_exact(inst, request.oracle_budget)
        return report.to_json(inst, include_trace=request.include_trace)

    @app.post("/generate", response_model=InstanceOut)
    def generate(request: GenerateRequest):
        model = _size_model(
            request.size_model, request.size_min, request.size_max,
            request.size_count, request.fixed_size,
        )
        params = GenParams(
            num_students=request.num_students,
            num_seminars=request.num_seminars,
            size_model=model,
            p_max=request.p_max,
            seed=request.seed,
        )
        return instance_to_json(generate_instance(params))

    @app.post("/generate/from-mc", response_model=FromMcResponse)
    def generate_from_mc(request: FromMcRequest):
        mc = CoverageInstance(
            universe_size=request.mc.universe_size,
            sets=tuple(frozenset(s) for s in request.mc.sets),
            k=request.mc.k,
        )
        inst, rmap = mc_to_sap(mc)
        return {
            "instance": instance_to_json(inst),
            "reduction_map": {
                "element_to_student": list(rmap.element_to_student),
                "set_to_seminar": list(rmap.set_to_seminar),
                "dummy_student_range": rmap.dummy_student_range,
            },
        }

    @app.post("/bench", response_model=BenchResponse)
    def bench(request: BenchRequest):
        model = _size_model(
            request.size_model, request.size_min, request.size_max,
            request.size_count, request.fixed_size,
        )
        report = run_bench(
            count=request.count,
            num_students=request.num_students,
            num_seminars=request.num_seminars,
            size_model=model,
            p_max=request.p_max,
            seed=request.seed,
            with_oracle=request.with_oracle,
            oracle_budget=request.oracle_budget,
            max_support=request.max_support,
        )
        return report.to_json()

    @app.post("/verify", response_model=VerifyResponse)
    def verify(request: VerifyRequest):
        results = run_checks(
            seed=request.seed,
            trials=request.trials,
            max_students=request.max_students,
            max_seminars=request.max_seminars,
            p_max=request.p_max,
        )
        return checks_to_json(results)

    return app


app = create_app()
