"""Density greedy over feasible single-seminar increments.

Starting from a feasible selection, every step raises exactly one
seminar's headcount to a larger allowed size, choosing the raise with
the best marginal profit per added student.  The loop ends when no
raise fits the remaining student budget.  The result competes against
the best standalone single-seminar assignment over the seminars the
start selection left empty, and the better of the two is reported.

All density comparisons are exact (integer cross-multiplication on the
scaled profits).  Ties in the arg max go to the smallest seminar index,
then the smallest new headcount.

For a fixed seminar the marginal profit of adding students is concave
in the number added (a consequence of the submodularity of the partial
matching value), so the per-seminar density is maximised by the
smallest allowed raise.  The scan below therefore evaluates one
candidate per seminar instead of every feasible raise; the outcome is
identical to the full arg max and the tests check that equivalence.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import ContractViolationError
from .instance import (
    Assignment,
    Instance,
    SeminarSelection,
    is_feasible_selection,
    is_fixed_size_instance,
    selection_cost,
)
from .matching import ProfitEvaluator, profit_of_counts
from .rationals import format_fraction
from .reports import SolveReport


@dataclass(frozen=True)
class GreedyStep:
    seminar: int
    new_count: int
    marginal_profit: Fraction
    marginal_cost: int


@dataclass(frozen=True)
class GreedyTrace:
    initial: SeminarSelection
    final: SeminarSelection
    steps: tuple[GreedyStep, ...]

    def to_json(self) -> dict:
        return {
            "initial": list(self.initial.counts),
            "final": list(self.final.counts),
            "steps": [
                {
                    "seminar": step.seminar,
                    "new_count": step.new_count,
                    "marginal_profit": format_fraction(step.marginal_profit),
                    "marginal_cost": step.marginal_cost,
                }
                for step in self.steps
            ],
        }


def oplus(selection: SeminarSelection, seminar: int, count: int) -> SeminarSelection:
    """Raise one seminar's count to at least ``count``, leaving the rest alone."""
    if not 0 <= seminar < len(selection.counts):
        raise ContractViolationError(f"seminar index {seminar} out of range")
    counts = list(selection.counts)
    counts[seminar] = max(int(count), counts[seminar])
    return SeminarSelection(tuple(counts))


def increments(inst: Instance, selection: SeminarSelection) -> list[SeminarSelection]:
    """All feasible selections raising exactly one seminar above ``selection``.

    Ordered by (seminar index, new count).
    """
    if not is_feasible_selection(inst, selection):
        raise ContractViolationError(f"selection {selection.counts} is not feasible")
    budget = inst.num_students - selection_cost(selection)
    result = []
    for b, sem in enumerate(inst.seminars):
        current = selection.counts[b]
        for k in sem.allowed_sizes:
            if k <= current:
                continue
            if k - current > budget:
                break
            counts = list(selection.counts)
            counts[b] = k
            result.append(SeminarSelection(tuple(counts)))
    return result


class ScanResult(NamedTuple):
    best_value: int  # scaled; max of the greedy result and the fallback
    greedy_value: int
    final_counts: tuple[int, ...]
    steps: list[tuple[int, int, int, int]]  # (seminar, new_count, dprofit, dcost)
    fallback: tuple[int, int, int] | None  # (value, seminar, count)
    fallback_wins: bool


def _best_increment(
    ev: ProfitEvaluator, counts: list[int], total: int, current: int
) -> tuple[int, int, int, int] | None:
    """Arg max of marginal density over one raise per seminar.

    Per seminar only the smallest feasible raise is evaluated; larger
    raises never beat it because marginal profit is concave in the
    number of added students.  Ties go to the smallest seminar index.
    """
    inst = ev.instance
    n = inst.num_students
    best_dp = -1
    best_dc = 1
    best_b = -1
    best_k = -1
    for b, sem in enumerate(inst.seminars):
        have = counts[b]
        next_k = -1
        for k in sem.allowed_sizes:
            if k > have:
                if total + k - have <= n:
                    next_k = k
                break
        if next_k < 0:
            continue
        dc = next_k - have
        # a raise cannot gain more than the top dc profits of its column;
        # skip candidates that provably lose to the best density so far
        if best_b >= 0 and ev.top_column_sum(b, dc) * best_dc < best_dp * dc:
            continue
        counts[b] = next_k
        value = ev.value_scaled(tuple(counts))
        counts[b] = have
        dp = value - current
        if best_b < 0 or dp * best_dc > best_dp * dc:
            best_dp, best_dc, best_b, best_k = dp, dc, b, next_k
    if best_b < 0:
        return None
    return best_b, best_k, best_dp, best_dc


def _scan(ev: ProfitEvaluator, start: tuple[int, ...]) -> ScanResult:
    """Run the greedy loop on scaled integers; no assignments materialised."""
    inst = ev.instance
    n = inst.num_students
    allowed = [sem.allowed_sizes for sem in inst.seminars]
    counts = list(start)
    total = sum(counts)
    current = ev.value_scaled(tuple(counts))
    steps: list[tuple[int, int, int, int]] = []
    missing = object()
    while True:
        state = tuple(counts)
        step = ev.step_cache.get(state, missing)
        if step is missing:
            step = _best_increment(ev, counts, total, current)
            ev.step_cache[state] = step
        if step is None:
            break
        b, k, dp, dc = step
        counts[b] = k
        total += dc
        current += dp
        steps.append(step)

    fallback: tuple[int, int, int] | None = None
    for b in range(inst.num_seminars):
        if start[b] != 0:
            continue
        cand_k = 0
        cand_v = 0
        for k in allowed[b]:
            if k > n:
                continue
            v = ev.top_column_sum(b, k)
            if v > cand_v:
                cand_v = v
                cand_k = k
        if fallback is None or cand_v > fallback[0]:
            fallback = (cand_v, b, cand_k)

    fallback_wins = fallback is not None and fallback[0] > current
    best = fallback[0] if fallback_wins else current
    return ScanResult(best, current, tuple(counts), steps, fallback, fallback_wins)


def _single_seminar_assignment(inst: Instance, seminar: int, count: int) -> Assignment:
    """Top ``count`` students of one profit column, preferring low indices."""
    order = sorted(range(inst.num_students), key=lambda i: (-inst.profits[i][seminar], i))
    return Assignment(tuple((i, seminar) for i in sorted(order[:count])))


def _materialise(
    inst: Instance,
    ev: ProfitEvaluator,
    start: tuple[int, ...],
    scan: ScanResult,
    algorithm: str,
    wall_time_ms: float,
    seeds_evaluated: int,
) -> SolveReport:
    denom = ev.denominator
    trace = GreedyTrace(
        initial=SeminarSelection(start),
        final=SeminarSelection(scan.final_counts),
        steps=tuple(
            GreedyStep(b, k, Fraction(dp, denom), dc) for b, k, dp, dc in scan.steps
        ),
    )
    if scan.fallback_wins:
        assert scan.fallback is not None
        _, fb_seminar, fb_count = scan.fallback
        assignment = _single_seminar_assignment(inst, fb_seminar, fb_count)
    else:
        assignment = profit_of_counts(inst, scan.final_counts).assignment
    return SolveReport(
        algorithm=algorithm,
        profit=Fraction(scan.best_value, denom),
        assignment=assignment,
        seed_selection=SeminarSelection(start),
        trace=trace,
        wall_time_ms=wall_time_ms,
        seeds_evaluated=seeds_evaluated,
        fixed_size_instance=is_fixed_size_instance(inst),
    )


def greedy_from(
    inst: Instance,
    start: SeminarSelection,
    *,
    algorithm: str = "greedy",
    evaluator: ProfitEvaluator | None = None,
) -> SolveReport:
    """Run the density greedy from ``start`` and report the better of the
    greedy result and the single-seminar fallback (ties keep the greedy)."""
    if not is_feasible_selection(inst, start):
        raise ContractViolationError(f"start selection {start.counts} is not feasible")
    began = time.perf_counter()
    ev = evaluator if evaluator is not None else ProfitEvaluator(inst)
    scan = _scan(ev, start.counts)
    elapsed_ms = (time.perf_counter() - began) * 1000.0
    return _materialise(inst, ev, start.counts, scan, algorithm, elapsed_ms, 1)
