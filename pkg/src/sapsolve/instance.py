"""Data model for the seminar assignment problem.

An instance has ``num_students`` anonymous students (indices 0..n-1),
an ordered list of labelled seminars, and an exact nonnegative rational
profit for every (student, seminar) pair.  Each seminar carries the set
of headcounts it accepts; 0 must always be accepted so a seminar can be
left empty.

All types are immutable after construction and every function here is
pure, so values can be shared freely across threads.  Construction does
not enforce the semantic invariants; :func:`validate_instance` reports
them all at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import ContractViolationError
from .rationals import format_fraction, parse_rational


@dataclass(frozen=True)
class Seminar:
    """A seminar label plus the headcounts it accepts."""

    id: str
    allowed_sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "allowed_sizes", tuple(int(k) for k in self.allowed_sizes))


@dataclass(frozen=True)
class Instance:
    num_students: int
    seminars: tuple[Seminar, ...]
    profits: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "seminars", tuple(self.seminars))
        object.__setattr__(
            self,
            "profits",
            tuple(tuple(Fraction(p) for p in row) for row in self.profits),
        )

    @property
    def num_seminars(self) -> int:
        return len(self.seminars)

    def profit(self, student: int, seminar: int) -> Fraction:
        return self.profits[student][seminar]


@dataclass(frozen=True)
class SeminarSelection:
    """Per-seminar headcount vector; the greedy's state."""

    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    def __len__(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class Assignment:
    """Partial map from student index to seminar index.

    Stored as (student, seminar) pairs sorted by student; a student may
    appear at most once.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted((int(i), int(b)) for i, b in self.pairs))
        students = [i for i, _ in pairs]
        if len(set(students)) != len(students):
            raise ContractViolationError("a student is assigned to more than one seminar")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_dict(cls, mapping: Mapping[int, int]) -> "Assignment":
        return cls(tuple(mapping.items()))

    def to_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def seminar_of(self, student: int) -> int | None:
        for i, b in self.pairs:
            if i == student:
                return b
        return None

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)


EMPTY_ASSIGNMENT = Assignment(())


def empty_selection(inst: Instance) -> SeminarSelection:
    return SeminarSelection((0,) * inst.num_seminars)


def validate_instance(inst: Instance) -> list[str]:
    """Return every invariant violation; an empty list means the instance is valid."""
    violations: list[str] = []
    n = inst.num_students
    m = inst.num_seminars
    if n < 0:
        violations.append(f"num_students is negative: {n}")
    seen_ids: set[str] = set()
    for b, sem in enumerate(inst.seminars):
        sizes = sem.allowed_sizes
        if sem.id in seen_ids:
            violations.append(f"duplicate seminar id {sem.id!r}")
        seen_ids.add(sem.id)
        if list(sizes) != sorted(set(sizes)):
            violations.append(f"seminar {sem.id!r}: allowed_sizes not strictly increasing: {list(sizes)}")
        if 0 not in sizes:
            violations.append(f"seminar {sem.id!r}: 0 missing from allowed_sizes")
        for k in sizes:
            if k < 0:
                violations.append(f"seminar {sem.id!r}: negative allowed size {k}")
            elif k > n:
                violations.append(f"seminar {sem.id!r}: allowed size {k} exceeds num_students {n}")
    if len(inst.profits) != n:
        violations.append(f"profit matrix has {len(inst.profits)} rows, expected {n}")
    for i, row in enumerate(inst.profits):
        if len(row) != m:
            violations.append(f"profit row {i} has {len(row)} entries, expected {m}")
        for b, p in enumerate(row):
            if p < 0:
                violations.append(f"negative profit {p} for student {i}, seminar {b}")
    return violations


def selection_cost(selection: SeminarSelection) -> int:
    return sum(selection.counts)


def _check_selection_length(inst: Instance, selection: SeminarSelection) -> None:
    if len(selection.counts) != inst.num_seminars:
        raise ContractViolationError(
            f"selection has {len(selection.counts)} counts, instance has "
            f"{inst.num_seminars} seminars"
        )


def is_feasible_selection(inst: Instance, selection: SeminarSelection) -> bool:
    """True iff every count is an allowed size and the total fits the student body."""
    _check_selection_length(inst, selection)
    for sem, count in zip(inst.seminars, selection.counts):
        if count not in sem.allowed_sizes:
            return False
    return selection_cost(selection) <= inst.num_students


def _check_assignment_range(inst: Instance, assignment: Assignment) -> None:
    for i, b in assignment.pairs:
        if not 0 <= i < inst.num_students:
            raise ContractViolationError(f"student index {i} out of range")
        if not 0 <= b < inst.num_seminars:
            raise ContractViolationError(f"seminar index {b} out of range")


def assignment_profit(inst: Instance, assignment: Assignment) -> Fraction:
    _check_assignment_range(inst, assignment)
    total = Fraction(0)
    for i, b in assignment.pairs:
        total += inst.profits[i][b]
    return total


def selection_of_assignment(inst: Instance, assignment: Assignment) -> SeminarSelection:
    """Headcount vector realised by an assignment."""
    _check_assignment_range(inst, assignment)
    counts = [0] * inst.num_seminars
    for _, b in assignment.pairs:
        counts[b] += 1
    return SeminarSelection(tuple(counts))


def is_feasible_assignment(inst: Instance, assignment: Assignment) -> bool:
    counts = selection_of_assignment(inst, assignment).counts
    return all(c in sem.allowed_sizes for sem, c in zip(inst.seminars, counts))


def is_fixed_size_instance(inst: Instance) -> bool:
    """True when every seminar accepts at most one nonzero headcount."""
    return all(len(sem.allowed_sizes) <= 2 for sem in inst.seminars)


# --- canonical JSON form -------------------------------------------------

_INSTANCE_KEYS = {"num_students", "seminars", "profits"}
_SEMINAR_KEYS = {"id", "allowed_sizes"}


def _require_int(value: object, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


def instance_from_json(data: object) -> Instance:
    """Parse the canonical instance format.  Unknown fields are rejected.

    Raises ValueError on structural problems; semantic problems are left
    to :func:`validate_instance`.
    """
    if not isinstance(data, Mapping):
        raise ValueError("instance must be a JSON object")
    unknown = set(data) - _INSTANCE_KEYS
    if unknown:
        raise ValueError(f"unknown instance fields: {sorted(unknown)}")
    missing = _INSTANCE_KEYS - set(data)
    if missing:
        raise ValueError(f"missing instance fields: {sorted(missing)}")
    num_students = _require_int(data["num_students"], "num_students")
    raw_seminars = data["seminars"]
    if not isinstance(raw_seminars, list):
        raise ValueError("seminars must be a list")
    seminars = []
    for pos, raw in enumerate(raw_seminars):
        if not isinstance(raw, Mapping):
            raise ValueError(f"seminar {pos} must be an object")
        unknown = set(raw) - _SEMINAR_KEYS
        if unknown:
            raise ValueError(f"seminar {pos}: unknown fields {sorted(unknown)}")
        if _SEMINAR_KEYS - set(raw):
            raise ValueError(f"seminar {pos}: missing fields")
        if not isinstance(raw["id"], str):
            raise ValueError(f"seminar {pos}: id must be a string")
        sizes = raw["allowed_sizes"]
        if not isinstance(sizes, list):
            raise ValueError(f"seminar {pos}: allowed_sizes must be a list")
        seminars.append(
            Seminar(raw["id"], tuple(_require_int(k, f"seminar {pos} allowed size") for k in sizes))
        )
    raw_profits = data["profits"]
    if not isinstance(raw_profits, list) or any(not isinstance(r, list) for r in raw_profits):
        raise ValueError("profits must be a list of rows")
    profits = tuple(
        tuple(parse_rational(entry) for entry in row) for row in raw_profits
    )
    return Instance(num_students=num_students, seminars=tuple(seminars), profits=profits)


def instance_to_json(inst: Instance) -> dict:
    return {
        "num_students": inst.num_students,
        "seminars": [
            {"id": sem.id, "allowed_sizes": list(sem.allowed_sizes)} for sem in inst.seminars
        ],
        "profits": [[format_fraction(p) for p in row] for row in inst.profits],
    }
