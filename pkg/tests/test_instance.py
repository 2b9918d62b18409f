import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sapsolve import (
    Assignment,
    ContractViolationError,
    SeminarSelection,
    assignment_profit,
    instance_from_json,
    instance_to_json,
    is_feasible_assignment,
    is_feasible_selection,
    is_fixed_size_instance,
    selection_cost,
    selection_of_assignment,
    validate_instance,
)

from conftest import make_instance, random_small_instance


class TestValidate:
    def test_valid_instance(self):
        inst = make_instance(2, [(0, 1)], [[3], [4]])
        assert validate_instance(inst) == []

    def test_zero_missing(self):
        inst = make_instance(3, [(1, 3)], [[1], [1], [1]])
        assert any("0 missing" in v for v in validate_instance(inst))

    def test_negative_profit(self):
        inst = make_instance(2, [(0, 1)], [[-1], [4]])
        assert any("negative profit" in v for v in validate_instance(inst))

    def test_size_beyond_student_body(self):
        inst = make_instance(2, [(0, 3)], [[1], [1]])
        assert any("exceeds num_students" in v for v in validate_instance(inst))

    def test_unsorted_sizes(self):
        inst = make_instance(3, [(0, 3, 2)], [[1], [1], [1]])
        assert any("not strictly increasing" in v for v in validate_instance(inst))

    def test_wrong_matrix_shape(self):
        inst = make_instance(3, [(0, 1)], [[1], [1]])
        assert any("rows" in v for v in validate_instance(inst))

    def test_duplicate_seminar_ids(self):
        inst = make_instance(2, [(0, 1), (0, 1)], [[1, 1], [1, 1]])
        inst = inst.__class__(
            num_students=2,
            seminars=(inst.seminars[0], inst.seminars[0]),
            profits=inst.profits,
        )
        assert any("duplicate seminar id" in v for v in validate_instance(inst))


class TestSelectionOps:
    @pytest.mark.parametrize(
        "counts,expected",
        [((0, 0, 0), 0), ((2, 3), 5), ((1, 0, 4), 5)],
    )
    def test_selection_cost(self, counts, expected):
        assert selection_cost(SeminarSelection(counts)) == expected

    def test_feasible_when_members_and_budget_fit(self):
        inst = make_instance(5, [(0, 2), (0, 3)], [[0, 0]] * 5)
        assert is_feasible_selection(inst, SeminarSelection((2, 3)))

    def test_infeasible_membership(self):
        inst = make_instance(5, [(0, 2), (0, 3)], [[0, 0]] * 5)
        assert not is_feasible_selection(inst, SeminarSelection((1, 3)))

    def test_infeasible_budget(self):
        inst = make_instance(4, [(0, 2), (0, 3)], [[0, 0]] * 4)
        assert not is_feasible_selection(inst, SeminarSelection((2, 3)))

    def test_length_mismatch_rejected(self):
        inst = make_instance(4, [(0, 2)], [[0]] * 4)
        with pytest.raises(ContractViolationError):
            is_feasible_selection(inst, SeminarSelection((1, 1)))


class TestAssignmentOps:
    def test_empty_profit(self, worked_instance):
        assert assignment_profit(worked_instance, Assignment(())) == 0

    def test_single_and_double(self, worked_instance):
        assert assignment_profit(worked_instance, Assignment.from_dict({0: 0})) == 5
        assert assignment_profit(worked_instance, Assignment.from_dict({0: 0, 1: 1})) == 9

    def test_out_of_range(self, worked_instance):
        with pytest.raises(ContractViolationError):
            assignment_profit(worked_instance, Assignment.from_dict({7: 0}))

    def test_duplicate_student_rejected(self):
        with pytest.raises(ContractViolationError):
            Assignment(((0, 1), (0, 0)))

    def test_selection_of_assignment(self):
        inst = make_instance(3, [(0, 1), (0, 2)], [[0, 0]] * 3)
        empty = selection_of_assignment(inst, Assignment(()))
        assert empty.counts == (0, 0)
        sel = selection_of_assignment(inst, Assignment.from_dict({0: 1, 2: 1}))
        assert sel.counts == (0, 2)

    def test_feasible_assignment_by_headcounts(self):
        inst = make_instance(3, [(0, 2)], [[0]] * 3)
        assert is_feasible_assignment(inst, Assignment.from_dict({0: 0, 1: 0}))
        assert not is_feasible_assignment(inst, Assignment.from_dict({0: 0}))
        assert is_feasible_assignment(inst, Assignment(()))


def test_feasible_assignment_yields_feasible_selection():
    rng = random.Random(5)
    for _ in range(50):
        inst = random_small_instance(rng)
        counts = [0] * inst.num_seminars
        pairs = []
        students = list(range(inst.num_students))
        rng.shuffle(students)
        for b, sem in enumerate(inst.seminars):
            want = rng.choice(sem.allowed_sizes)
            while counts[b] < want and students:
                pairs.append((students.pop(), b))
                counts[b] += 1
        assignment = Assignment(tuple(pairs))
        if is_feasible_assignment(inst, assignment):
            selection = selection_of_assignment(inst, assignment)
            assert is_feasible_selection(inst, selection)
            assert selection_cost(selection) == len(assignment)


def test_profit_additive_over_disjoint_parts(worked_instance):
    whole = Assignment.from_dict({0: 0, 1: 1, 2: 1})
    part_a = Assignment.from_dict({0: 0})
    part_b = Assignment.from_dict({1: 1, 2: 1})
    assert assignment_profit(worked_instance, whole) == assignment_profit(
        worked_instance, part_a
    ) + assignment_profit(worked_instance, part_b)


def test_fixed_size_flag():
    assert is_fixed_size_instance(make_instance(3, [(0, 2), (0, 3)], [[0, 0]] * 3))
    assert not is_fixed_size_instance(make_instance(3, [(0, 1, 2)], [[0]] * 3))


class TestJson:
    def test_parse_worked_example(self, worked_instance):
        data = {
            "num_students": 3,
            "seminars": [
                {"id": "s0", "allowed_sizes": [0, 1]},
                {"id": "s1", "allowed_sizes": [0, 2]},
            ],
            "profits": [[5, 4], [3, 4], [1, 2]],
        }
        assert instance_from_json(data) == worked_instance

    def test_rational_strings(self):
        data = {
            "num_students": 1,
            "seminars": [{"id": "a", "allowed_sizes": [0, 1]}],
            "profits": [["7/2"]],
        }
        inst = instance_from_json(data)
        assert inst.profits[0][0] == Fraction(7, 2)

    @pytest.mark.parametrize(
        "mutation",
        [
            lambda d: d.update(extra=1),
            lambda d: d.pop("profits"),
            lambda d: d["seminars"][0].update(weird=True),
            lambda d: d["seminars"][0].update(id=3),
            lambda d: d.update(num_students="3"),
            lambda d: d["profits"][0].__setitem__(0, 2.5),
            lambda d: d["profits"][0].__setitem__(0, True),
        ],
    )
    def test_malformed_rejected(self, mutation):
        data = {
            "num_students": 1,
            "seminars": [{"id": "a", "allowed_sizes": [0, 1]}],
            "profits": [[1]],
        }
        mutation(data)
        with pytest.raises(ValueError):
            instance_from_json(data)

    def test_field_order_irrelevant(self):
        text = '{"profits": [[1]], "num_students": 1, "seminars": [{"allowed_sizes": [0, 1], "id": "a"}]}'
        inst = instance_from_json(json.loads(text))
        assert inst.num_students == 1

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32))
    def test_round_trip(self, seed):
        inst = random_small_instance(random.Random(seed), fractional=seed % 2 == 0)
        assert instance_from_json(instance_to_json(inst)) == inst
