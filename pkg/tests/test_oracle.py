import itertools
import random
from fractions import Fraction

import pytest

from sapsolve import (
    ContractViolationError,
    InfeasibleCountsError,
    OracleBudgetError,
    SeminarSelection,
    assignment_profit,
    exact_assignment_enumeration,
    exact_solve,
    is_feasible_assignment,
    selection_profit,
)

from conftest import make_instance, random_small_instance


def exhaustive_best_assignment(inst):
    """Third, fully independent route: try every map students -> seminar or
    unassigned, keep the best feasible one."""
    best = Fraction(0)
    options = list(range(inst.num_seminars)) + [None]
    for combo in itertools.product(options, repeat=inst.num_students):
        counts = [0] * inst.num_seminars
        value = Fraction(0)
        for i, b in enumerate(combo):
            if b is not None:
                counts[b] += 1
                value += inst.profits[i][b]
        if all(c in s.allowed_sizes for c, s in zip(counts, inst.seminars)):
            best = max(best, value)
    return best


class TestExactSolve:
    def test_worked_example(self, worked_instance):
        result = exact_solve(worked_instance)
        assert result.profit == 11
        assert result.selections_enumerated == 4
        assert is_feasible_assignment(worked_instance, result.assignment)
        assert assignment_profit(worked_instance, result.assignment) == result.profit

    def test_all_zero_profits(self):
        inst = make_instance(2, [(0, 1)], [[0], [0]])
        assert exact_solve(inst).profit == 0

    def test_trivial_single_choice(self):
        inst = make_instance(1, [(0, 1)], [[9]])
        assert exact_solve(inst).profit == 9

    def test_budget_guard_names_product(self):
        inst = make_instance(4, [(0, 1, 2)] * 4, [[1] * 4] * 4)
        with pytest.raises(OracleBudgetError) as err:
            exact_solve(inst, budget=80)
        assert err.value.product_size == 81
        assert "81" in str(err.value)

    def test_matches_fully_independent_enumeration(self):
        rng = random.Random(61)
        for _ in range(40):
            inst = random_small_instance(rng, max_students=4, max_seminars=3)
            assert exact_solve(inst).profit == exhaustive_best_assignment(inst)

    def test_dominates_any_feasible_assignment(self):
        from sapsolve import solve_full, solve_half

        rng = random.Random(62)
        for _ in range(30):
            inst = random_small_instance(rng)
            opt = exact_solve(inst).profit
            assert opt >= solve_half(inst).profit
            assert opt >= solve_full(inst).profit


class TestAssignmentEnumeration:
    def test_worked_example(self, worked_instance):
        value = exact_assignment_enumeration(worked_instance, SeminarSelection((1, 2)))
        assert value == 11

    def test_zero_counts(self, worked_instance):
        assert exact_assignment_enumeration(worked_instance, SeminarSelection((0, 0))) == 0

    def test_picks_column_max(self):
        inst = make_instance(2, [(0, 1)], [[5], [3]])
        assert exact_assignment_enumeration(inst, SeminarSelection((1,))) == 5

    def test_student_guard(self):
        inst = make_instance(9, [(0, 1)], [[1]] * 9)
        with pytest.raises(ContractViolationError):
            exact_assignment_enumeration(inst, SeminarSelection((1,)))

    def test_overfull_counts_rejected(self, worked_instance):
        with pytest.raises(InfeasibleCountsError):
            exact_assignment_enumeration(worked_instance, SeminarSelection((2, 2)))

    def test_agrees_with_matching_on_every_feasible_selection(self):
        rng = random.Random(63)
        for trial in range(40):
            inst = random_small_instance(
                rng, max_students=5, max_seminars=3, fractional=trial % 4 == 0
            )
            for combo in itertools.product(*(s.allowed_sizes for s in inst.seminars)):
                if sum(combo) > inst.num_students:
                    continue
                selection = SeminarSelection(combo)
                assert exact_assignment_enumeration(inst, selection) == selection_profit(
                    inst, selection
                ).value
