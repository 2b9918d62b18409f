"""Exact exponential-time solvers for small instances.

``exact_solve`` enumerates every feasible selection and evaluates each
through the matching kernel; it is the ground truth for the
approximation-ratio tests.  ``exact_assignment_enumeration`` maximises
over raw student placements directly, with no matching machinery at
all, so the two provide independent routes to the same numbers.

Both refuse oversized inputs instead of silently truncating: a wrong
"exact" answer is worse than no answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import ContractViolationError, InfeasibleCountsError, OracleBudgetError
from .instance import Assignment, Instance, SeminarSelection
from .matching import ProfitEvaluator, profit_of_counts

DEFAULT_SELECTION_BUDGET = 200_000
ENUMERATION_STUDENT_LIMIT = 8


@dataclass(frozen=True)
class OracleResult:
    profit: Fraction
    assignment: Assignment
    selections_enumerated: int


def exact_solve(inst: Instance, budget: int = DEFAULT_SELECTION_BUDGET) -> OracleResult:
    """Maximum profit over every feasible selection, by full enumeration.

    Ties keep the lexicographically smallest selection.  Raises
    OracleBudgetError when the product of the allowed-size set sizes
    exceeds ``budget``.
    """
    product = prod(len(sem.allowed_sizes) for sem in inst.seminars)
    if product > budget:
        raise OracleBudgetError(product, budget)
    n = inst.num_students
    ev = ProfitEvaluator(inst)
    best_value = 0
    best_counts: tuple[int, ...] = (0,) * inst.num_seminars
    evaluated = 0
    for combo in itertools.product(*(sem.allowed_sizes for sem in inst.seminars)):
        if sum(combo) > n:
            continue
        evaluated += 1
        value = ev.value_scaled(combo)
        if value > best_value:
            best_value = value
            best_counts = combo
    result = profit_of_counts(inst, best_counts)
    return OracleResult(result.value, result.assignment, evaluated)


def exact_assignment_enumeration(inst: Instance, selection: SeminarSelection) -> Fraction:
    """Best profit over all raw placements realising ``selection``.

    Enumerates which students go to each seminar directly; deliberately
    avoids the matching kernel so it can serve as its cross-check.
    Limited to instances with at most 8 students.
    """
    if inst.num_students > ENUMERATION_STUDENT_LIMIT:
        raise ContractViolationError(
            f"direct enumeration is limited to {ENUMERATION_STUDENT_LIMIT} students"
        )
    counts = selection.counts
    if len(counts) != inst.num_seminars:
        raise ContractViolationError(
            f"{len(counts)} counts for {inst.num_seminars} seminars"
        )
    if sum(counts) > inst.num_students:
        raise InfeasibleCountsError(
            f"counts sum to {sum(counts)} but only {inst.num_students} students exist"
        )
    profits = inst.profits
    zero = Fraction(0)

    def best_from(seminar: int, pool: tuple[int, ...]) -> Fraction:
        if seminar == len(counts):
            return zero
        k = counts[seminar]
        if k == 0:
            return best_from(seminar + 1, pool)
        best = None
        for chosen in itertools.combinations(pool, k):
            taken = set(chosen)
            rest = tuple(i for i in pool if i not in taken)
            value = sum((profits[i][seminar] for i in chosen), zero)
            value += best_from(seminar + 1, rest)
            if best is None or value > best:
                best = value
        return best if best is not None else zero

    return best_from(0, tuple(range(inst.num_students)))
