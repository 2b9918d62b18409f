"""Random instance generation.

Three allowed-size models:

* interval: sizes {0} plus a contiguous block l..u drawn per seminar
* explicit: sizes {0} plus a few distinct values drawn per seminar
* fixed: every seminar accepts exactly {0, size}

Profits are uniform integers in [0, p_max].  Generation is a pure
function of the parameters, so a fixed seed reproduces the instance
byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ContractViolationError, DegenerateInstanceError
from .instance import Instance, Seminar, validate_instance


@dataclass(frozen=True)
class IntervalSizes:
    """Sizes {0} plus l..u with l, u drawn from [min_size, max_size]."""

    min_size: int = 1
    max_size: int | None = None  # defaults to num_students


@dataclass(frozen=True)
class ExplicitSizes:
    """Sizes {0} plus up to max_values distinct draws from [1, max_size]."""

    max_values: int = 3
    max_size: int | None = None  # defaults to num_students


@dataclass(frozen=True)
class FixedSizes:
    """Every seminar accepts exactly {0, size}."""

    size: int


SizeModel = Union[IntervalSizes, ExplicitSizes, FixedSizes]


@dataclass(frozen=True)
class GenParams:
    num_students: int
    num_seminars: int
    size_model: SizeModel = ExplicitSizes()
    p_max: int = 9
    seed: int = 0


def _draw_sizes(rng: random.Random, model: SizeModel, n: int) -> tuple[int, ...]:
    if isinstance(model, IntervalSizes):
        hi = n if model.max_size is None else model.max_size
        a = rng.randint(model.min_size, hi)
        b = rng.randint(model.min_size, hi)
        low, high = min(a, b), max(a, b)
        return (0, *range(low, high + 1))
    if isinstance(model, ExplicitSizes):
        hi = n if model.max_size is None else model.max_size
        count = rng.randint(1, min(model.max_values, hi))
        values = rng.sample(range(1, hi + 1), count)
        return (0, *sorted(values))
    if isinstance(model, FixedSizes):
        return (0, model.size)
    raise ContractViolationError(f"unknown size model: {model!r}")


def _check_params(params: GenParams) -> None:
    if params.num_students < 1:
        raise DegenerateInstanceError(f"num_students must be positive, got {params.num_students}")
    if params.num_seminars < 1:
        raise DegenerateInstanceError(f"num_seminars must be positive, got {params.num_seminars}")
    if params.p_max < 0:
        raise ContractViolationError(f"p_max must be nonnegative, got {params.p_max}")
    model = params.size_model
    n = params.num_students
    if isinstance(model, IntervalSizes):
        hi = n if model.max_size is None else model.max_size
        if not 1 <= model.min_size <= hi <= n:
            raise ContractViolationError(
                f"interval size bounds [{model.min_size}, {hi}] invalid for {n} students"
            )
    elif isinstance(model, ExplicitSizes):
        hi = n if model.max_size is None else model.max_size
        if not 1 <= hi <= n:
            raise ContractViolationError(f"max_size {hi} invalid for {n} students")
        if model.max_values < 1:
            raise ContractViolationError(f"max_values must be positive, got {model.max_values}")
    elif isinstance(model, FixedSizes):
        if not 1 <= model.size <= n:
            raise ContractViolationError(f"fixed size {model.size} invalid for {n} students")
    else:
        raise ContractViolationError(f"unknown size model: {model!r}")


def generate_instance(params: GenParams) -> Instance:
    """Deterministically generate a valid instance from the parameters."""
    _check_params(params)
    rng = random.Random(params.seed)
    seminars = tuple(
        Seminar(id=f"s{b}", allowed_sizes=_draw_sizes(rng, params.size_model, params.num_students))
        for b in range(params.num_seminars)
    )
    profits = tuple(
        tuple(Fraction(rng.randint(0, params.p_max)) for _ in range(params.num_seminars))
        for _ in range(params.num_students)
    )
    inst = Instance(num_students=params.num_students, seminars=seminars, profits=profits)
    violations = validate_instance(inst)
    if violations:  # the models above cannot produce these; guard regressions
        raise AssertionError(f"generated instance is invalid: {violations}")
    return inst
