"""Maximum coverage and its reduction to seminar assignment.

A coverage instance (pick at most k sets to cover the most elements)
turns into a seminar instance with one all-or-nothing seminar per set,
one student per universe element with 0/1 profits, and enough
zero-profit dummy students that exactly k seminars can fill.  The
reduction preserves optimal values in both directions, which makes it
a handy structured instance generator and cross-problem consistency
check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ContractViolationError, DegenerateInstanceError
from .instance import Assignment, Instance, Seminar


@dataclass(frozen=True)
class CoverageInstance:
    universe_size: int
    sets: tuple[frozenset[int], ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(frozenset(int(e) for e in s) for s in self.sets))


@dataclass(frozen=True)
class ReductionMap:
    """Index bookkeeping for translating solutions back to coverage."""

    element_to_student: tuple[int, ...]
    set_to_seminar: tuple[int, ...]
    dummy_student_range: tuple[int, int]


def validate_coverage(mc: CoverageInstance) -> list[str]:
    violations: list[str] = []
    if mc.universe_size < 0:
        violations.append(f"universe_size is negative: {mc.universe_size}")
    covered: set[int] = set()
    for j, s in enumerate(mc.sets):
        for e in s:
            if not 0 <= e < mc.universe_size:
                violations.append(f"set {j}: element {e} outside universe")
        covered |= s
    for e in range(mc.universe_size):
        if e not in covered:
            violations.append(f"element {e} not covered by any set")
    if mc.k < 0:
        violations.append(f"k is negative: {mc.k}")
    return violations


def mc_coverage(mc: CoverageInstance, chosen: Iterable[int]) -> int:
    """Number of elements covered by the chosen set indices."""
    covered: set[int] = set()
    for j in chosen:
        if not 0 <= j < len(mc.sets):
            raise ContractViolationError(f"set index {j} out of range")
        covered |= mc.sets[j]
    return len(covered)


def mc_to_sap(mc: CoverageInstance) -> tuple[Instance, ReductionMap]:
    """Build the seminar instance for a coverage instance.

    One seminar per set accepting {0, n} students where n is the
    universe size; one student per element with profit 1 exactly for
    the sets containing it; n*(k-1) zero-profit dummy students so that
    up to k seminars can be filled.
    """
    violations = validate_coverage(mc)
    if violations:
        raise ContractViolationError("; ".join(violations))
    if mc.k < 1:
        raise ContractViolationError(f"k must be at least 1, got {mc.k}")
    n = mc.universe_size
    if n == 0:
        raise DegenerateInstanceError("coverage instance has an empty universe")
    num_students = mc.k * n
    seminars = tuple(
        Seminar(id=f"set-{j}", allowed_sizes=(0, n)) for j in range(len(mc.sets))
    )
    one = Fraction(1)
    zero = Fraction(0)
    rows = [
        tuple(one if e in s else zero for s in mc.sets) for e in range(n)
    ]
    rows.extend([tuple(zero for _ in mc.sets)] * (num_students - n))
    inst = Instance(num_students=num_students, seminars=seminars, profits=tuple(rows))
    rmap = ReductionMap(
        element_to_student=tuple(range(n)),
        set_to_seminar=tuple(range(len(mc.sets))),
        dummy_student_range=(n, num_students),
    )
    return inst, rmap


def sap_solution_to_mc(rmap: ReductionMap, assignment: Assignment) -> tuple[int, ...]:
    """Set indices whose seminar received at least one student."""
    seminar_to_set = {sem: j for j, sem in enumerate(rmap.set_to_seminar)}
    chosen: set[int] = set()
    for _, seminar in assignment.pairs:
        chosen.add(seminar_to_set[seminar])
    return tuple(sorted(chosen))


def mc_optimum_brute_force(mc: CoverageInstance) -> tuple[int, tuple[int, ...]]:
    """Exhaustive coverage optimum over all subsets of at most k sets.

    Returns (coverage, chosen indices); among optima the first subset
    in (size, lexicographic) order wins.
    """
    best = 0
    best_sets: tuple[int, ...] = ()
    for size in range(min(mc.k, len(mc.sets)) + 1):
        for combo in itertools.combinations(range(len(mc.sets)), size):
            value = mc_coverage(mc, combo)
            if value > best:
                best = value
                best_sets = combo
    return best, best_sets


# --- canonical JSON form -------------------------------------------------

_COVERAGE_KEYS = {"universe_size", "sets", "k"}


def coverage_from_json(data: object) -> CoverageInstance:
    if not isinstance(data, dict):
        raise ValueError("coverage instance must be a JSON object")
    unknown = set(data) - _COVERAGE_KEYS
    if unknown:
        raise ValueError(f"unknown coverage fields: {sorted(unknown)}")
    if _COVERAGE_KEYS - set(data):
        raise ValueError(f"missing coverage fields: {sorted(_COVERAGE_KEYS - set(data))}")
    sets = data["sets"]
    if not isinstance(sets, list) or any(not isinstance(s, list) for s in sets):
        raise ValueError("sets must be a list of lists of element indices")
    return CoverageInstance(
        universe_size=int(data["universe_size"]),
        sets=tuple(frozenset(int(e) for e in s) for s in sets),
        k=int(data["k"]),
    )


def coverage_to_json(mc: CoverageInstance) -> dict:
    return {
        "universe_size": mc.universe_size,
        "sets": [sorted(s) for s in mc.sets],
        "k": mc.k,
    }
