"""Randomized self-verification suites, exposed through `sapsolve verify`.

Three structural facts the solver stack leans on, each checked in
exact arithmetic on freshly generated small instances:

* matching-vs-enumeration: the matching kernel's selection profit
  equals a direct maximisation over raw student placements.
* matching-submodularity: the partial matching value f satisfies
  f(X) + f(Y) >= f(X | Y) + f(X & Y) on random slot subsets.
* oplus-increment-bound: raising a selection toward a target one
  seminar at a time gains, in total, at least the target's advantage.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .generate import ExplicitSizes, GenParams, generate_instance
from .greedy import oplus
from .instance import Instance, SeminarSelection, is_feasible_selection
from .matching import ProfitEvaluator, SlotSet, partial_matching_value, selection_profit
from .oracle import exact_assignment_enumeration


@dataclass(frozen=True)
class CheckSuiteResult:
    name: str
    trials: int
    failures: int

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _random_instance(rng: random.Random, max_students: int, max_seminars: int, p_max: int) -> Instance:
    n = rng.randint(1, max_students)
    m = rng.randint(1, max_seminars)
    return generate_instance(
        GenParams(
            num_students=n,
            num_seminars=m,
            size_model=ExplicitSizes(max_values=2, max_size=max(1, n // 2) if n > 1 else 1),
            p_max=p_max,
            seed=rng.randrange(2**63),
        )
    )


def _feasible_selections(inst: Instance) -> list[tuple[int, ...]]:
    combos = itertools.product(*(sem.allowed_sizes for sem in inst.seminars))
    return [c for c in combos if sum(c) <= inst.num_students]


def check_matching_vs_enumeration(
    rng: random.Random, trials: int, max_students: int = 6, max_seminars: int = 3, p_max: int = 9
) -> CheckSuiteResult:
    done = 0
    failures = 0
    while done < trials:
        inst = _random_instance(rng, max_students, max_seminars, p_max)
        for counts in _feasible_selections(inst):
            if done >= trials:
                break
            selection = SeminarSelection(counts)
            via_matching = selection_profit(inst, selection).value
            via_enumeration = exact_assignment_enumeration(inst, selection)
            if via_matching != via_enumeration:
                failures += 1
            done += 1
    return CheckSuiteResult("matching-vs-enumeration", done, failures)


def _random_slot_set(rng: random.Random, inst: Instance) -> SlotSet:
    slots = [
        (b, s)
        for b in range(inst.num_seminars)
        for s in range(inst.num_students)
        if rng.random() < 0.4
    ]
    return SlotSet(frozenset(slots))


def check_submodularity(
    rng: random.Random, trials: int, max_students: int = 5, max_seminars: int = 3, p_max: int = 9
) -> CheckSuiteResult:
    failures = 0
    for _ in range(trials):
        inst = _random_instance(rng, max_students, max_seminars, p_max)
        x = _random_slot_set(rng, inst)
        y = _random_slot_set(rng, inst)
        fx = partial_matching_value(inst, x)
        fy = partial_matching_value(inst, y)
        f_union = partial_matching_value(inst, x.union(y))
        f_inter = partial_matching_value(inst, x.intersection(y))
        if fx + fy < f_union + f_inter:
            failures += 1
    return CheckSuiteResult("matching-submodularity", trials, failures)


def _random_feasible_selection(rng: random.Random, inst: Instance) -> SeminarSelection:
    choices = _feasible_selections(inst)
    return SeminarSelection(rng.choice(choices))


def check_increment_sum_bound(
    rng: random.Random, trials: int, max_students: int = 6, max_seminars: int = 3, p_max: int = 9
) -> CheckSuiteResult:
    """For feasible S, T with every S (+) (b, T(b)) feasible, the summed
    single-seminar raises gain at least p(T) - p(S)."""
    done = 0
    failures = 0
    while done < trials:
        inst = _random_instance(rng, max_students, max_seminars, p_max)
        ev = ProfitEvaluator(inst)
        choices = _feasible_selections(inst)
        for _ in range(8):
            if done >= trials:
                break
            s = SeminarSelection(rng.choice(choices))
            t = SeminarSelection(rng.choice(choices))
            raised = [oplus(s, b, t.counts[b]) for b in range(inst.num_seminars)]
            if not all(is_feasible_selection(inst, r) for r in raised):
                continue
            p_s = ev.value(s.counts)
            p_t = ev.value(t.counts)
            gain_sum = sum(ev.value(r.counts) - p_s for r in raised)
            if gain_sum < p_t - p_s:
                failures += 1
            done += 1
    return CheckSuiteResult("oplus-increment-bound", done, failures)


def run_checks(
    seed: int = 0,
    trials: int = 200,
    max_students: int = 6,
    max_seminars: int = 3,
    p_max: int = 9,
) -> list[CheckSuiteResult]:
    rng = random.Random(seed)
    return [
        check_matching_vs_enumeration(rng, trials, max_students, max_seminars, p_max),
        check_submodularity(rng, trials, min(max_students, 5), max_seminars, p_max),
        check_increment_sum_bound(rng, trials, max_students, max_seminars, p_max),
    ]


def checks_to_json(results: list[CheckSuiteResult]) -> dict:
    return {
        "suites": [
            {"name": r.name, "trials": r.trials, "failures": r.failures, "passed": r.passed}
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
