"""Optimal profit of a fixed seminar headcount vector.

Placing exactly ``counts[b]`` students in each seminar ``b`` to maximise
total profit is a transportation problem: students are unit supplies,
seminars are sinks with capacity ``counts[b]``, and the profit matrix
gives the edge weights.  Slots of one seminar are interchangeable, so
the kernel works on per-seminar counts instead of expanding one vertex
per slot.

Two evaluation paths compute the same exact value:

* ``_ssp_max_profit`` runs successive shortest paths with Johnson
  potentials over plain integers (profits scaled by their common
  denominator once per instance).  It is always exact, whatever the
  magnitudes, and is the only path that produces assignments.
* ``scipy.optimize.linear_sum_assignment`` on the slot-expanded matrix
  is much faster for plain values.  float64 arithmetic on integers is
  exact as long as every intermediate stays below 2**53, so this path
  is enabled only when the scaled weights are small enough to guarantee
  that; otherwise the integer path is used.

Reported assignments are canonical: among all optimal assignments the
lexicographically smallest one (student 0's seminar first, unassigned
ordering last) is returned.  This is obtained in a single solve by
adding per-pair preference weights below the profit resolution, encoded
base ``num_seminars + 1`` so earlier students dominate later ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from heapq import heappop, heappush

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import ContractViolationError, InfeasibleCountsError, InfeasibleSelectionError
from .instance import Assignment, Instance, SeminarSelection, is_feasible_selection

# float64 holds integers exactly up to 2**53; keep a wide safety margin
# for the sums and differences formed inside the assignment solver.
_FLOAT_EXACT_LIMIT = 2**50


@dataclass(frozen=True)
class SlotSet:
    """Explicit subset of seminar slot vertices, as (seminar, slot) pairs."""

    slots: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(
            self, "slots", frozenset((int(b), int(s)) for b, s in self.slots)
        )

    def union(self, other: "SlotSet") -> "SlotSet":
        return SlotSet(self.slots | other.slots)

    def intersection(self, other: "SlotSet") -> "SlotSet":
        return SlotSet(self.slots & other.slots)


@dataclass(frozen=True)
class MatchingResult:
    value: Fraction
    assignment: Assignment


def _scaled_weights(inst: Instance) -> tuple[list[list[int]], int]:
    """Profit matrix as integers together with the common denominator."""
    denom = 1
    for row in inst.profits:
        for p in row:
            denom = denom * p.denominator // math.gcd(denom, p.denominator)
    scaled = [[int(p * denom) for p in row] for row in inst.profits]
    return scaled, denom


def _ssp_max_profit(
    weights: list[list[int]], caps: list[int], units: int
) -> tuple[int, list[int]]:
    """Place ``units`` students maximising total weight.

    Each student is used at most once, seminar ``b`` takes at most
    ``caps[b]`` students.  Requires ``units <= min(len(weights), sum(caps))``;
    with nonnegative weights the returned flow is a maximum-weight
    placement of exactly ``units`` students.  Returns the total weight
    and the per-student seminar (-1 for unplaced).
    """
    n = len(weights)
    m = len(caps)
    assign = [-1] * n
    if units == 0 or n == 0 or m == 0:
        return 0, assign
    if units > n or units > sum(caps):
        raise ContractViolationError("requested more placements than supply or capacity")

    # Work on negated weights (a min-cost flow); potentials keep every
    # residual reduced cost nonnegative so Dijkstra applies throughout.
    pot_student = [0] * n
    pot_sem = [min(-weights[i][b] for i in range(n)) for b in range(m)]
    pot_tau = min(pot_sem)
    load = [0] * m
    tau = n + m
    inf = float("inf")

    for _ in range(units):
        dist: list[float] = [inf] * (n + m + 1)
        par_student = [-2] * n  # -1 means reached from the source
        par_sem = [-1] * m  # student through which the seminar was reached
        par_tau = -1
        heap: list[tuple[float, int]] = []
        for i in range(n):
            if assign[i] == -1:
                d = -pot_student[i]
                dist[i] = d
                par_student[i] = -1
                heappush(heap, (d, i))
        while heap:
            d, node = heappop(heap)
            if d > dist[node]:
                continue
            if node == tau:
                break
            if node < n:
                i = node
                pot_i = pot_student[i]
                row = weights[i]
                skip = assign[i]
                for b in range(m):
                    if b == skip:
                        continue
                    nd = d - row[b] + pot_i - pot_sem[b]
                    if nd < dist[n + b]:
                        dist[n + b] = nd
                        par_sem[b] = i
                        heappush(heap, (nd, n + b))
            else:
                b = node - n
                pot_b = pot_sem[b]
                if load[b] < caps[b]:
                    nd = d + pot_b - pot_tau
                    if nd < dist[tau]:
                        dist[tau] = nd
                        par_tau = b
                        heappush(heap, (nd, tau))
                for i in range(n):
                    if assign[i] == b:
                        nd = d + weights[i][b] + pot_b - pot_student[i]
                        if nd < dist[i]:
                            dist[i] = nd
                            par_student[i] = b
                            heappush(heap, (nd, i))
        dt = dist[tau]
        if dt == inf:
            raise ContractViolationError("no augmenting path; capacities exhausted")
        for i in range(n):
            di = dist[i]
            pot_student[i] += di if di < dt else dt
        for b in range(m):
            db = dist[n + b]
            pot_sem[b] += db if db < dt else dt
        pot_tau += dt

        b = par_tau
        load[b] += 1
        while True:
            j = par_sem[b]
            came_from = par_student[j]
            assign[j] = b
            if came_from == -1:
                break
            b = came_from

    value = sum(weights[i][assign[i]] for i in range(n) if assign[i] != -1)
    return value, assign


def _canonical_solve(
    scaled: list[list[int]], counts: tuple[int, ...], n: int, m: int
) -> tuple[int, list[int]]:
    """Exact-count solve returning the lexicographically smallest optimum.

    Preference weights are kept strictly below one unit of scaled profit:
    student i placed in seminar b earns an extra (m - b) * (m+1)**(n-1-i)
    on top of profit * (m+1)**n, so maximising the composite maximises
    profit first and then prefers low students in low seminars.
    """
    total = sum(counts)
    if total == 0 or n == 0:
        return 0, [-1] * n
    base = m + 1
    quantum = base**n
    digit = [base ** (n - 1 - i) for i in range(n)]
    composite = [
        [scaled[i][b] * quantum + (m - b) * digit[i] for b in range(m)] for i in range(n)
    ]
    _, assign = _ssp_max_profit(composite, list(counts), total)
    value = sum(scaled[i][assign[i]] for i in range(n) if assign[i] != -1)
    return value, assign


class ProfitEvaluator:
    """Per-instance caches for repeated count-vector profit queries.

    Holds the integer-scaled weight matrix, per-column top-k prefix sums
    (used for greedy bounds and single-seminar optima) and a memo of
    already evaluated count vectors.  Values are scaled integers; divide
    by :attr:`denominator` for the true rational profit.
    """

    def __init__(self, inst: Instance):
        self.instance = inst
        self.scaled, self.denominator = _scaled_weights(inst)
        n = inst.num_students
        m = inst.num_seminars
        self._cache: dict[tuple[int, ...], int] = {}
        # greedy step decisions are pure functions of the state; sharing
        # them across seed runs lets converging trajectories reuse work
        self.step_cache: dict[tuple[int, ...], tuple[int, int, int, int] | None] = {}
        max_weight = max((w for row in self.scaled for w in row), default=0)
        self._use_float = max_weight <= _FLOAT_EXACT_LIMIT // (n + 2) if n else True
        if self._use_float and n and m:
            self._float_matrix = np.array(self.scaled, dtype=np.float64)
        else:
            self._float_matrix = None
        self._column_prefix: list[list[int]] = []
        for b in range(m):
            column = sorted((self.scaled[i][b] for i in range(n)), reverse=True)
            prefix = [0] * (n + 1)
            for j, w in enumerate(column):
                prefix[j + 1] = prefix[j] + w
            self._column_prefix.append(prefix)

    def top_column_sum(self, seminar: int, k: int) -> int:
        """Scaled sum of the k largest profits in one seminar's column."""
        return self._column_prefix[seminar][k]

    def value_scaled(self, counts: tuple[int, ...]) -> int:
        cached = self._cache.get(counts)
        if cached is not None:
            return cached
        total = sum(counts)
        if total == 0:
            value = 0
        elif self._float_matrix is not None:
            cols = np.repeat(np.arange(len(counts)), counts)
            expanded = self._float_matrix[:, cols]
            rows, chosen = linear_sum_assignment(expanded, maximize=True)
            value = int(round(expanded[rows, chosen].sum()))
        else:
            value, _ = _ssp_max_profit(self.scaled, list(counts), total)
        self._cache[counts] = value
        return value

    def value(self, counts: tuple[int, ...]) -> Fraction:
        return Fraction(self.value_scaled(counts), self.denominator)


def _check_counts(inst: Instance, counts: tuple[int, ...]) -> tuple[int, ...]:
    counts = tuple(int(c) for c in counts)
    if len(counts) != inst.num_seminars:
        raise ContractViolationError(
            f"{len(counts)} counts for {inst.num_seminars} seminars"
        )
    if any(c < 0 for c in counts):
        raise ContractViolationError(f"negative count in {counts}")
    if sum(counts) > inst.num_students:
        raise InfeasibleCountsError(
            f"counts sum to {sum(counts)} but only {inst.num_students} students exist"
        )
    return counts


def profit_of_counts(inst: Instance, counts: tuple[int, ...]) -> MatchingResult:
    """Best profit over assignments placing exactly counts[b] students in b.

    The counts need not be allowed sizes; feasibility against the
    allowed-size sets is the caller's concern (see selection_profit).
    """
    counts = _check_counts(inst, counts)
    scaled, denom = _scaled_weights(inst)
    value, assign = _canonical_solve(scaled, counts, inst.num_students, inst.num_seminars)
    pairs = tuple((i, b) for i, b in enumerate(assign) if b != -1)
    return MatchingResult(Fraction(value, denom), Assignment(pairs))


def selection_profit(inst: Instance, selection: SeminarSelection) -> MatchingResult:
    """Profit of a feasible seminar selection, with an optimal assignment."""
    if not is_feasible_selection(inst, selection):
        raise InfeasibleSelectionError(f"selection {selection.counts} is not feasible")
    return profit_of_counts(inst, selection.counts)


def partial_matching_value(inst: Instance, slot_set: SlotSet) -> Fraction:
    """Maximum matching weight between a set of seminar slots and the students.

    Only the per-seminar slot multiplicities matter.  The slot set may
    hold more slots than students; the surplus simply stays unmatched.
    """
    counts = [0] * inst.num_seminars
    for b, s in slot_set.slots:
        if not 0 <= b < inst.num_seminars:
            raise ContractViolationError(f"seminar index {b} out of range")
        if not 0 <= s < inst.num_students:
            raise ContractViolationError(f"slot index {s} out of range")
        counts[b] += 1
    scaled, denom = _scaled_weights(inst)
    units = min(inst.num_students, sum(counts))
    value, _ = _ssp_max_profit(scaled, counts, units)
    return Fraction(value, denom)


def single_seminar_best(inst: Instance, seminar: int) -> tuple[int, Fraction]:
    """Best standalone headcount for one seminar and its profit.

    Picks the allowed size k maximising the sum of the k largest column
    profits; ties go to the smaller k.
    """
    if not 0 <= seminar < inst.num_seminars:
        raise ContractViolationError(f"seminar index {seminar} out of range")
    scaled, denom = _scaled_weights(inst)
    column = sorted((row[seminar] for row in scaled), reverse=True)
    prefix = [0]
    for w in column:
        prefix.append(prefix[-1] + w)
    best_k = 0
    best_value = 0
    for k in inst.seminars[seminar].allowed_sizes:
        if k > inst.num_students:
            continue
        if prefix[k] > best_value:
            best_value = prefix[k]
            best_k = k
    return best_k, Fraction(best_value, denom)
