"""Exact rational linear feasibility.

A small two-phase style simplex (only phase one is needed) over
:class:`fractions.Fraction` with Bland's pivoting rule, so results are exact
and reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

GE, LE, EQ = ">=", "<=", "="
_ZERO = Fraction(0)


@dataclass
class LinearFeasibilityProblem:
    """Variables plus affine constraints ``sum(coef * var) <sense> rhs``.

    Variables are nonnegative unless declared with ``free=True``.
    """

    variables: dict[str, bool] = field(default_factory=dict)
    constraints: list[tuple[dict[str, Fraction], str, Fraction]] = field(
        default_factory=list
    )

    def add_variable(self, name: str, free: bool = False) -> str:
        if name in self.variables:
            raise ValueError(f"variable {name!r} declared twice")
        self.variables[name] = free
        return name

    def add_constraint(self, coeffs: Mapping[str, object], sense: str, rhs=0) -> None:
        if sense not in (GE, LE, EQ):
            raise ValueError(f"unknown constraint sense {sense!r}")
        row = {}
        for name, c in coeffs.items():
            if name not in self.variables:
                raise ValueError(f"constraint references undeclared variable {name!r}")
            c = Fraction(c)
            if c:
                row[name] = row.get(name, _ZERO) + c
        self.constraints.append((row, sense, Fraction(rhs)))

    def is_satisfied_by(self, assignment: Mapping[str, Fraction]) -> bool:
        for name, free in self.variables.items():
            if not free and assignment[name] < 0:
                return False
        for row, sense, rhs in self.constraints:
            lhs = sum((c * assignment[v] for v, c in row.items()), _ZERO)
            if sense == GE and not lhs >= rhs:
                return False
            if sense == LE and not lhs <= rhs:
                return False
            if sense == EQ and lhs != rhs:
                return False
        return True


@dataclass(frozen=True)
class FeasibilityWitness:
    feasible: bool
    assignment: dict[str, Fraction] | None = None

    def __bool__(self) -> bool:
        return self.feasible


def solve_feasibility(problem: LinearFeasibilityProblem) -> FeasibilityWitness:
    """Find an exact rational point satisfying ``problem`` or report none exists."""
    # Standard form: columns are nonnegative; a free variable is x+ - x-.
    columns: list[tuple[str, int]] = []
    col_of: dict[str, list[tuple[int, int]]] = {}
    for name, free in problem.variables.items():
        col_of[name] = [(len(columns), 1)]
        columns.append((name, 1))
        if free:
            col_of[name].append((len(columns), -1))
            columns.append((name, -1))
    n_struct = len(columns)
    n_slack = sum(1 for _, sense, _ in problem.constraints if sense != EQ)
    m = len(problem.constraints)
    n_art = m
    width = n_struct + n_slack + n_art

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    slack = n_struct
    for r, (coeffs, sense, b) in enumerate(problem.constraints):
        row = [_ZERO] * width
        for name, c in coeffs.items():
            for col, sign in col_of[name]:
                row[col] += sign * c
        if sense == GE:
            row[slack] = Fraction(-1)
            slack += 1
        elif sense == LE:
            row[slack] = Fraction(1)
            slack += 1
        if b < 0:
            row = [-v for v in row]
            b = -b
        row[n_struct + n_slack + r] = Fraction(1)
        rows.append(row)
        rhs.append(b)

    basis = [n_struct + n_slack + r for r in range(m)]
    # Phase-one objective: minimize the sum of artificials.  Reduced costs of
    # the non-artificial columns are minus the column sums.
    cost = [_ZERO] * width
    for j in range(n_struct + n_slack):
        cost[j] = -sum((rows[r][j] for r in range(m)), _ZERO)

    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        leave = None
        best = None
        for r in range(m):
            a = rows[r][entering]
            if a > 0:
                ratio = rhs[r] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:
            # Phase-one objective is bounded below by zero, so this cannot occur.
            raise ArithmeticError("unbounded phase-one problem")
        _pivot(rows, rhs, cost, leave, entering)
        basis[leave] = entering

    infeasibility = sum(
        (rhs[r] for r in range(m) if basis[r] >= n_struct + n_slack), _ZERO
    )
    if infeasibility != 0:
        return FeasibilityWitness(False)

    col_value = [_ZERO] * width
    for r, j in enumerate(basis):
        col_value[j] = rhs[r]
    assignment = {name: _ZERO for name in problem.variables}
    for col, (name, sign) in enumerate(columns):
        assignment[name] += sign * col_value[col]
    if not problem.is_satisfied_by(assignment):
        raise ArithmeticError("simplex returned a point violating the constraints")
    return FeasibilityWitness(True, assignment)


def _pivot(rows, rhs, cost, r, j):
    pivot_row = rows[r]
    p = pivot_row[j]
    if p != 1:
        pivot_row[:] = [v / p for v in pivot_row]
        rhs[r] = rhs[r] / p
    nz = [c for c, v in enumerate(pivot_row) if v]
    for i, row in enumerate(rows):
        if i == r:
            continue
        f = row[j]
        if f:
            for c in nz:
                row[c] -= f * pivot_row[c]
            rhs[i] -= f * rhs[r]
    f = cost[j]
    if f:
        for c in nz:
            cost[c] -= f * pivot_row[c]
