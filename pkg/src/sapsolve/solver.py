"""Top-level solvers.

``solve_half`` is the density greedy from the empty selection; its
profit is guaranteed to be at least half of (1 - 1/e) times the
optimum.  ``solve_full`` reruns the greedy from every feasible seed
selection supported on at most ``max_support`` seminars (default 3,
empty seed included) and keeps the best run, which raises the
guarantee to (1 - 1/e).  ``solve_exact`` wraps the enumeration oracle
in the same report format.

Seed runs are independent pure computations; they are evaluated in
enumeration order and ties are broken toward the earliest seed, so the
result does not depend on any evaluation schedule.
"""

from __future__ import annotations

import itertools
import time
from fractions import Fraction
from typing import Iterator

from .errors import ContractViolationError
from .greedy import _materialise, _scan, greedy_from
from .instance import (
    Instance,
    SeminarSelection,
    empty_selection,
    is_fixed_size_instance,
    selection_of_assignment,
)
from .matching import ProfitEvaluator
from .reports import SolveReport

# Certified rational lower bounds on the guarantee constants
# (1 - 1/e) / 2 = 0.3160602794... and 1 - 1/e = 0.6321205588...
HALF_GUARANTEE_FLOOR = Fraction(31606027, 10**8)
FULL_GUARANTEE_FLOOR = Fraction(63212055, 10**8)

DEFAULT_SEED_SUPPORT = 3


def enumerate_seed_selections(inst: Instance, max_support: int) -> Iterator[SeminarSelection]:
    """Yield every feasible selection supported on at most ``max_support``
    seminars, exactly once each.

    Order: support sets in lexicographic order (the empty support, and
    with it the empty selection, comes first), then counts in
    lexicographic order within each support set.
    """
    if max_support < 0:
        raise ContractViolationError("max_support must be nonnegative")
    n = inst.num_students
    m = inst.num_seminars
    nonzero = [
        tuple(k for k in sem.allowed_sizes if 0 < k <= n) for sem in inst.seminars
    ]

    def supports(prefix: tuple[int, ...], start: int, least: int) -> Iterator[tuple[int, ...]]:
        yield prefix
        if len(prefix) < max_support:
            for b in range(start, m):
                if nonzero[b] and least + nonzero[b][0] <= n:
                    yield from supports(prefix + (b,), b + 1, least + nonzero[b][0])

    for support in supports((), 0, 0):
        if not support:
            yield SeminarSelection((0,) * m)
            continue
        for combo in itertools.product(*(nonzero[b] for b in support)):
            if sum(combo) > n:
                continue
            counts = [0] * m
            for b, k in zip(support, combo):
                counts[b] = k
            yield SeminarSelection(tuple(counts))


def solve_half(inst: Instance) -> SolveReport:
    """Density greedy from the empty selection."""
    return greedy_from(inst, empty_selection(inst), algorithm="half")


def solve_full(inst: Instance, max_support: int = DEFAULT_SEED_SUPPORT) -> SolveReport:
    """Best greedy run over all seeds with support size up to ``max_support``.

    The empty seed is always included, so the result never falls below
    ``solve_half``.  Ties between seeds keep the earliest one in
    enumeration order.
    """
    began = time.perf_counter()
    ev = ProfitEvaluator(inst)
    best_scan = None
    best_seed: tuple[int, ...] = (0,) * inst.num_seminars
    seeds = 0
    for seed in enumerate_seed_selections(inst, max_support):
        scan = _scan(ev, seed.counts)
        if best_scan is None or scan.best_value > best_scan.best_value:
            best_scan = scan
            best_seed = seed.counts
        seeds += 1
    assert best_scan is not None  # the empty seed is always enumerated
    elapsed_ms = (time.perf_counter() - began) * 1000.0
    return _materialise(inst, ev, best_seed, best_scan, "full", elapsed_ms, seeds)


def solve_exact(inst: Instance, budget: int | None = None) -> SolveReport:
    """Exact enumeration solver wrapped in the common report format."""
    from .oracle import DEFAULT_SELECTION_BUDGET, exact_solve

    began = time.perf_counter()
    result = exact_solve(inst, budget if budget is not None else DEFAULT_SELECTION_BUDGET)
    elapsed_ms = (time.perf_counter() - began) * 1000.0
    return SolveReport(
        algorithm="exact",
        profit=result.profit,
        assignment=result.assignment,
        seed_selection=selection_of_assignment(inst, result.assignment),
        trace=None,
        wall_time_ms=elapsed_ms,
        seeds_evaluated=result.selections_enumerated,
        fixed_size_instance=is_fixed_size_instance(inst),
    )
