"""Seminar assignment solver: exact matching kernel, density greedy,
partial-enumeration search, exact oracle and a coverage reduction,
served over HTTP with a thin CLI client."""

__version__ = "0.1.0"

from .errors import (
    ContractViolationError,
    DegenerateInstanceError,
    InfeasibleCountsError,
    InfeasibleSelectionError,
    OracleBudgetError,
)
from .instance import (
    Assignment,
    Instance,
    Seminar,
    SeminarSelection,
    assignment_profit,
    empty_selection,
    instance_from_json,
    instance_to_json,
    is_feasible_assignment,
    is_feasible_selection,
    is_fixed_size_instance,
    selection_cost,
    selection_of_assignment,
    validate_instance,
)
from .matching import (
    MatchingResult,
    ProfitEvaluator,
    SlotSet,
    partial_matching_value,
    profit_of_counts,
    selection_profit,
    single_seminar_best,
)
from .greedy import GreedyStep, GreedyTrace, greedy_from, increments, oplus
from .reports import SolveReport
from .solver import (
    FULL_GUARANTEE_FLOOR,
    HALF_GUARANTEE_FLOOR,
    enumerate_seed_selections,
    solve_exact,
    solve_full,
    solve_half,
)
from .oracle import OracleResult, exact_assignment_enumeration, exact_solve
from .reduction import (
    CoverageInstance,
    ReductionMap,
    mc_coverage,
    mc_optimum_brute_force,
    mc_to_sap,
    sap_solution_to_mc,
)
from .generate import ExplicitSizes, FixedSizes, GenParams, IntervalSizes, generate_instance
from .bench import BenchReport, BenchRow, run_bench
from .checks import CheckSuiteResult, run_checks

__all__ = [
    "Assignment",
    "BenchReport",
    "BenchRow",
    "CheckSuiteResult",
    "ContractViolationError",
    "CoverageInstance",
    "DegenerateInstanceError",
    "ExplicitSizes",
    "FixedSizes",
    "FULL_GUARANTEE_FLOOR",
    "GenParams",
    "GreedyStep",
    "GreedyTrace",
    "HALF_GUARANTEE_FLOOR",
    "Instance",
    "InfeasibleCountsError",
    "InfeasibleSelectionError",
    "IntervalSizes",
    "MatchingResult",
    "OracleBudgetError",
    "OracleResult",
    "ProfitEvaluator",
    "ReductionMap",
    "Seminar",
    "SeminarSelection",
    "SlotSet",
    "SolveReport",
    "assignment_profit",
    "empty_selection",
    "enumerate_seed_selections",
    "exact_assignment_enumeration",
    "exact_solve",
    "generate_instance",
    "greedy_from",
    "increments",
    "instance_from_json",
    "instance_to_json",
    "is_feasible_assignment",
    "is_feasible_selection",
    "is_fixed_size_instance",
    "mc_coverage",
    "mc_optimum_brute_force",
    "mc_to_sap",
    "oplus",
    "partial_matching_value",
    "profit_of_counts",
    "run_bench",
    "run_checks",
    "sap_solution_to_mc",
    "selection_cost",
    "selection_of_assignment",
    "selection_profit",
    "single_seminar_best",
    "solve_exact",
    "solve_full",
    "solve_half",
    "validate_instance",
]
