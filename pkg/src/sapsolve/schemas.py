"""Pydantic request and response models for the HTTP service.

Structural validation only (shapes, strict scalar types, unknown-field
rejection); semantic validation stays in the core package so both the
service and direct library use report identical violations.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, StrictInt, StrictStr

from .oracle import DEFAULT_SELECTION_BUDGET
from .solver import DEFAULT_SEED_SUPPORT


class SeminarIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: StrictStr
    allowed_sizes: list[StrictInt]


class InstanceIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    num_students: StrictInt
    seminars: list[SeminarIn]
    profits: list[list[StrictInt | StrictStr]]


class InstanceOut(BaseModel):
    num_students: int
    seminars: list[SeminarIn]
    profits: list[list[str]]


class SolveRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    instance: InstanceIn
    algorithm: Literal["half", "full", "exact"] = "full"
    max_support: int = DEFAULT_SEED_SUPPORT
    oracle_budget: int = DEFAULT_SELECTION_BUDGET
    include_trace: bool = False


class TraceStepOut(BaseModel):
    seminar: int
    new_count: int
    marginal_profit: str
    marginal_cost: int


class TraceOut(BaseModel):
    initial: list[int]
    final: list[int]
    steps: list[TraceStepOut]


class SolveResponse(BaseModel):
    algorithm: str
    profit: str
    assignment: dict[str, str]
    seed: list[int]
    seeds_evaluated: int
    wall_time_ms: float
    fixed_size_instance: bool
    trace: TraceOut | None = None


class GenerateRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    num_students: int
    num_seminars: int
    size_model: Literal["interval", "explicit", "fixed"] = "explicit"
    size_min: int = 1
    size_max: int | None = None
    size_count: int = 3
    fixed_size: int | None = None
    p_max: int = 9
    seed: int = 0


class CoverageIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    universe_size: StrictInt
    sets: list[list[StrictInt]]
    k: StrictInt


class FromMcRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    mc: CoverageIn


class ReductionMapOut(BaseModel):
    element_to_student: list[int]
    set_to_seminar: list[int]
    dummy_student_range: tuple[int, int]


class FromMcResponse(BaseModel):
    instance: InstanceOut
    reduction_map: ReductionMapOut


class BenchRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    count: int
    num_students: int
    num_seminars: int
    size_model: Literal["interval", "explicit", "fixed"] = "explicit"
    size_min: int = 1
    size_max: int | None = None
    size_count: int = 3
    fixed_size: int | None = None
    p_max: int = 9
    seed: int = 0
    with_oracle: bool = False
    oracle_budget: int = DEFAULT_SELECTION_BUDGET
    max_support: int = DEFAULT_SEED_SUPPORT


class BenchRowOut(BaseModel):
    index: int
    digest: str
    num_students: int
    num_seminars: int
    opt: str | None
    half_profit: str
    full_profit: str
    half_ratio: str | None
    full_ratio: str | None
    half_ms: float
    full_ms: float
    oracle_ms: float | None


class BenchResponse(BaseModel):
    seed: int
    count: int
    with_oracle: bool
    rows: list[BenchRowOut]
    aggregate: dict
    bound_violations: list[dict]


class VerifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    seed: int = 0
    trials: int = 200
    max_students: int = 6
    max_seminars: int = 3
    p_max: int = 9


class CheckSuiteOut(BaseModel):
    name: str
    trials: int
    failures: int
    passed: bool


class VerifyResponse(BaseModel):
    suites: list[CheckSuiteOut]
    all_passed: bool
