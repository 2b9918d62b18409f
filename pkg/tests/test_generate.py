import pytest

from sapsolve import (
    ContractViolationError,
    DegenerateInstanceError,
    ExplicitSizes,
    FixedSizes,
    GenParams,
    IntervalSizes,
    generate_instance,
    instance_to_json,
    validate_instance,
)


def test_fixed_seed_reproduces_instance():
    params = GenParams(num_students=8, num_seminars=3, seed=99)
    assert instance_to_json(generate_instance(params)) == instance_to_json(
        generate_instance(params)
    )


def test_different_seeds_differ():
    a = generate_instance(GenParams(8, 3, seed=1))
    b = generate_instance(GenParams(8, 3, seed=2))
    assert instance_to_json(a) != instance_to_json(b)


@pytest.mark.parametrize(
    "model",
    [
        IntervalSizes(1, 4),
        IntervalSizes(),
        ExplicitSizes(max_values=2, max_size=5),
        ExplicitSizes(),
        FixedSizes(size=3),
    ],
)
def test_generated_instances_validate(model):
    for seed in range(10):
        inst = generate_instance(GenParams(6, 4, model, p_max=7, seed=seed))
        assert validate_instance(inst) == []
        assert inst.num_students == 6
        assert inst.num_seminars == 4
        assert all(0 <= p <= 7 for row in inst.profits for p in row)


def test_interval_model_draws_contiguous_blocks():
    inst = generate_instance(GenParams(9, 5, IntervalSizes(2, 6), seed=4))
    for sem in inst.seminars:
        sizes = sem.allowed_sizes
        assert sizes[0] == 0
        block = sizes[1:]
        assert list(block) == list(range(block[0], block[-1] + 1))
        assert 2 <= block[0] and block[-1] <= 6


def test_explicit_model_bounds_value_count():
    inst = generate_instance(GenParams(9, 5, ExplicitSizes(max_values=2, max_size=4), seed=4))
    for sem in inst.seminars:
        assert len(sem.allowed_sizes) <= 3  # zero plus at most two values
        assert max(sem.allowed_sizes) <= 4


def test_fixed_model():
    inst = generate_instance(GenParams(5, 3, FixedSizes(size=5), seed=0))
    assert all(sem.allowed_sizes == (0, 5) for sem in inst.seminars)


@pytest.mark.parametrize(
    "params,error",
    [
        (GenParams(0, 3), DegenerateInstanceError),
        (GenParams(5, 0), DegenerateInstanceError),
        (GenParams(5, 2, FixedSizes(size=9)), ContractViolationError),
        (GenParams(5, 2, IntervalSizes(0, 3)), ContractViolationError),
        (GenParams(5, 2, ExplicitSizes(max_values=0)), ContractViolationError),
        (GenParams(5, 2, p_max=-1), ContractViolationError),
    ],
)
def test_bad_params_rejected(params, error):
    with pytest.raises(error):
        generate_instance(params)
