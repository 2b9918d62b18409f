"""Approximation-ratio benchmark harness.

Generates a batch of random instances, runs the half and full solvers
on each, optionally the exact oracle as well, and reports per-instance
profits and profit/optimum ratios as exact rationals.  Rows are keyed
by a digest of the canonical instance JSON so reruns are comparable;
timing fields are informational and excluded from any determinism
comparison.

Convention: an instance whose optimum is 0 gets ratio 1 (any feasible
output is optimal there).
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractViolationError
from .generate import ExplicitSizes, FixedSizes, GenParams, IntervalSizes, SizeModel, generate_instance
from .instance import Instance, instance_to_json
from .oracle import DEFAULT_SELECTION_BUDGET, exact_solve
from .rationals import format_fraction
from .solver import (
    DEFAULT_SEED_SUPPORT,
    FULL_GUARANTEE_FLOOR,
    HALF_GUARANTEE_FLOOR,
    solve_full,
    solve_half,
)


@dataclass(frozen=True)
class BenchRow:
    index: int
    digest: str
    num_students: int
    num_seminars: int
    opt: Fraction | None
    half_profit: Fraction
    full_profit: Fraction
    half_ratio: Fraction | None
    full_ratio: Fraction | None
    half_ms: float
    full_ms: float
    oracle_ms: float | None

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "digest": self.digest,
            "num_students": self.num_students,
            "num_seminars": self.num_seminars,
            "opt": None if self.opt is None else format_fraction(self.opt),
            "half_profit": format_fraction(self.half_profit),
            "full_profit": format_fraction(self.full_profit),
            "half_ratio": None if self.half_ratio is None else format_fraction(self.half_ratio),
            "full_ratio": None if self.full_ratio is None else format_fraction(self.full_ratio),
            "half_ms": self.half_ms,
            "full_ms": self.full_ms,
            "oracle_ms": self.oracle_ms,
        }


@dataclass(frozen=True)
class BenchReport:
    seed: int
    count: int
    with_oracle: bool
    rows: tuple[BenchRow, ...]
    bound_violations: tuple[dict, ...]

    def aggregate(self) -> dict:
        out: dict = {"instances": self.count}
        ratios = [(r.half_ratio, r.full_ratio) for r in self.rows if r.opt is not None]
        if ratios:
            halves = [h for h, _ in ratios]
            fulls = [f for _, f in ratios]
            out["min_half_ratio"] = format_fraction(min(halves))
            out["mean_half_ratio"] = format_fraction(sum(halves, Fraction(0)) / len(halves))
            out["min_full_ratio"] = format_fraction(min(fulls))
            out["mean_full_ratio"] = format_fraction(sum(fulls, Fraction(0)) / len(fulls))
        return out

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "count": self.count,
            "with_oracle": self.with_oracle,
            "rows": [row.to_json() for row in self.rows],
            "aggregate": self.aggregate(),
            "bound_violations": list(self.bound_violations),
        }


def instance_digest(inst: Instance) -> str:
    canonical = json.dumps(instance_to_json(inst), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()[:12]


def _ratio(profit: Fraction, opt: Fraction) -> Fraction:
    if opt == 0:
        return Fraction(1)
    return profit / opt


def _scaled_model(model: SizeModel, n: int) -> SizeModel:
    """Clamp a size-model template to an instance with n students."""
    if isinstance(model, IntervalSizes):
        hi = n if model.max_size is None else min(model.max_size, n)
        return IntervalSizes(min(model.min_size, hi), hi)
    if isinstance(model, ExplicitSizes):
        hi = n if model.max_size is None else min(model.max_size, n)
        return ExplicitSizes(model.max_values, hi)
    return FixedSizes(min(model.size, n))


def run_bench(
    count: int,
    num_students: int,
    num_seminars: int,
    size_model: SizeModel = ExplicitSizes(),
    p_max: int = 9,
    seed: int = 0,
    with_oracle: bool = False,
    oracle_budget: int = DEFAULT_SELECTION_BUDGET,
    max_support: int = DEFAULT_SEED_SUPPORT,
) -> BenchReport:
    """Solve ``count`` random instances with up to the given student and
    seminar counts; sizes vary per instance under a derived seed."""
    if count < 1:
        raise ContractViolationError(f"count must be positive, got {count}")
    master = random.Random(seed)
    rows: list[BenchRow] = []
    violations: list[dict] = []
    for index in range(count):
        derived = random.Random(master.randrange(2**63))
        n = derived.randint(1, num_students)
        m = derived.randint(1, num_seminars)
        params = GenParams(
            num_students=n,
            num_seminars=m,
            size_model=_scaled_model(size_model, n),
            p_max=p_max,
            seed=derived.randrange(2**63),
        )
        inst = generate_instance(params)

        t0 = time.perf_counter()
        half = solve_half(inst)
        t1 = time.perf_counter()
        full = solve_full(inst, max_support)
        t2 = time.perf_counter()
        opt = None
        oracle_ms = None
        if with_oracle:
            opt = exact_solve(inst, oracle_budget).profit
            oracle_ms = (time.perf_counter() - t2) * 1000.0

        half_ratio = None if opt is None else _ratio(half.profit, opt)
        full_ratio = None if opt is None else _ratio(full.profit, opt)
        rows.append(
            BenchRow(
                index=index,
                digest=instance_digest(inst),
                num_students=n,
                num_seminars=m,
                opt=opt,
                half_profit=half.profit,
                full_profit=full.profit,
                half_ratio=half_ratio,
                full_ratio=full_ratio,
                half_ms=(t1 - t0) * 1000.0,
                full_ms=(t2 - t1) * 1000.0,
                oracle_ms=oracle_ms,
            )
        )
        if half_ratio is not None and half_ratio < HALF_GUARANTEE_FLOOR:
            violations.append(
                {"index": index, "bound": "half", "ratio": format_fraction(half_ratio)}
            )
        if full_ratio is not None and full_ratio < FULL_GUARANTEE_FLOOR:
            violations.append(
                {"index": index, "bound": "full", "ratio": format_fraction(full_ratio)}
            )
    return BenchReport(
        seed=seed,
        count=count,
        with_oracle=with_oracle,
        rows=tuple(rows),
        bound_violations=tuple(violations),
    )
