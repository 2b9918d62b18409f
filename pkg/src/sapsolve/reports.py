"""Solve report shared by the greedy, full-search and exact solvers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .instance import Assignment, Instance, SeminarSelection
from .rationals import format_fraction

if TYPE_CHECKING:  # pragma: no cover
    from .greedy import GreedyTrace


@dataclass(frozen=True)
class SolveReport:
    algorithm: str
    profit: Fraction
    assignment: Assignment
    seed_selection: SeminarSelection
    trace: "GreedyTrace | None"
    wall_time_ms: float
    seeds_evaluated: int
    fixed_size_instance: bool

    def to_json(self, inst: Instance, include_trace: bool = True) -> dict:
        report = {
            "algorithm": self.algorithm,
            "profit": format_fraction(self.profit),
            "assignment": {
                str(student): inst.seminars[seminar].id
                for student, seminar in self.assignment.pairs
            },
            "seed": list(self.seed_selection.counts),
            "seeds_evaluated": self.seeds_evaluated,
            "wall_time_ms": self.wall_time_ms,
            "fixed_size_instance": self.fixed_size_instance,
        }
        if include_trace and self.trace is not None:
            report["trace"] = self.trace.to_json()
        return report
