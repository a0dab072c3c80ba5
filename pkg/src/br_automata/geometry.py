"""Convex geometry of best-response divisions.

A local profile ``D`` over ``k`` strategies is identified with the point of
the strategy simplex whose ``j``-th coordinate is the fraction of ``D`` equal
to ``j``.  An update rule is called realizable when the point sets of any
two of its preimages have disjoint convex hulls.  A game-induced rule is
always realizable; the converse holds for ``k <= 3`` only.  The hull test and
the construction of a witness game are both exact rational LPs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import PayoffMatrix, Profile, UpdateRule, induced_rule
from .errors import DegenerateError, DimensionError, InfeasibleError, PatternError, SingularError
from .lp import EQ, GE, LinearFeasibilityProblem, solve_feasibility

SimplexPoint = tuple[Fraction, ...]


def point_of(D: Sequence[int], k: int) -> SimplexPoint:
    d = len(D)
    counts = [0] * k
    for s in D:
        if not 1 <= s <= k:
            raise DimensionError(f"strategy {s} outside 1..{k}")
        counts[s - 1] += 1
    return tuple(Fraction(c, d) for c in counts)


@dataclass(frozen=True)
class RulePartition:
    """Profiles grouped by the strategy a rule sends them to.

    ``cells[i-1]`` holds the profiles mapped to strategy ``i``; cells may be
    empty.
    """

    k: int
    d: int
    cells: tuple[frozenset[Profile], ...]

    def nonempty(self) -> list[tuple[int, frozenset[Profile]]]:
        return [(i, c) for i, c in enumerate(self.cells, start=1) if c]


def partition_of(F: UpdateRule) -> RulePartition:
    return RulePartition(F.k, F.d, tuple(F.preimage(i) for i in range(1, F.k + 1)))


@dataclass(frozen=True)
class HullIntersection:
    """Result of :func:`hulls_intersect`; truthy when the hulls meet.

    ``lam`` and ``mu`` are the convex coefficients over the (sorted) profiles
    of ``X`` and ``Y`` that produce ``point``.
    """

    intersects: bool
    point: SimplexPoint | None = None
    lam: dict[Profile, Fraction] | None = None
    mu: dict[Profile, Fraction] | None = None

    def __bool__(self) -> bool:
        return self.intersects


def hull_problem(X: Iterable[Profile], Y: Iterable[Profile], k: int):
    """The LP whose feasible points are pairs of coinciding convex combinations."""
    X, Y = sorted(set(X)), sorted(set(Y))
    if not X or not Y:
        raise ValueError("hull intersection needs two nonempty profile sets")
    prob = LinearFeasibilityProblem()
    lam = [prob.add_variable(f"lam{i}") for i in range(len(X))]
    mu = [prob.add_variable(f"mu{i}") for i in range(len(Y))]
    prob.add_constraint({v: 1 for v in lam}, EQ, 1)
    prob.add_constraint({v: 1 for v in mu}, EQ, 1)
    px = [point_of(D, k) for D in X]
    py = [point_of(D, k) for D in Y]
    # Coordinates sum to one on both sides, so the last one is implied.
    for c in range(k - 1):
        row = {}
        for v, p in zip(lam, px):
            if p[c]:
                row[v] = p[c]
        for v, p in zip(mu, py):
            if p[c]:
                row[v] = -p[c]
        if row:
            prob.add_constraint(row, EQ, 0)
    return prob, X, Y, lam, mu


def hulls_intersect(X: Iterable[Profile], Y: Iterable[Profile], k: int) -> HullIntersection:
    prob, X, Y, lam, mu = hull_problem(X, Y, k)
    if set(X) & set(Y):
        raise ValueError("profile sets must be disjoint")
    w = solve_feasibility(prob)
    if not w:
        return HullIntersection(False)
    a = w.assignment
    lam_v = {D: a[v] for D, v in zip(X, lam)}
    mu_v = {D: a[v] for D, v in zip(Y, mu)}
    point = [Fraction(0)] * k
    for D, t in lam_v.items():
        for c, x in enumerate(point_of(D, k)):
            point[c] += t * x
    return HullIntersection(True, tuple(point), lam_v, mu_v)


def is_realizable(P: RulePartition) -> bool:
    """Whether all pairs of nonempty cells have disjoint hulls.

    This is necessary for the partition to come from a game.  It is also
    sufficient for up to three strategies, but not from four on: some
    pairwise-separated partitions admit no single payoff matrix (see
    :func:`induced_by_game`).
    """
    cells = [c for _, c in P.nonempty()]
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            if hulls_intersect(cells[i], cells[j], P.k):
                return False
    return True


def synthesize_matrix(F: UpdateRule) -> PayoffMatrix:
    """A payoff matrix whose induced rule is ``F``.

    Every best response wins by a payoff margin of at least one against the
    averaged profile.  Raises :class:`InfeasibleError` when no game works.
    """
    k, d = F.k, F.d
    prob = LinearFeasibilityProblem()
    var = [[prob.add_variable(f"m{i}_{j}", free=True) for j in range(k)] for i in range(k)]
    for D, i in F.items():
        counts = [0] * k
        for s in D:
            counts[s - 1] += 1
        for j in range(1, k + 1):
            if j == i:
                continue
            row = {}
            for u, c in enumerate(counts):
                if c:
                    row[var[i - 1][u]] = c
                    row[var[j - 1][u]] = -c
            # sum_u c_u (M[i,u] - M[j,u]) >= d  <=>  margin >= 1 at P(D)
            prob.add_constraint(row, GE, d)
    w = solve_feasibility(prob)
    if not w:
        raise InfeasibleError(f"rule {F} is not induced by any {k}-strategy game")
    M = PayoffMatrix.of([[w.assignment[var[i][j]] for j in range(k)] for i in range(k)])
    if induced_rule(M, d) != F:
        raise ArithmeticError("synthesized matrix does not reproduce the rule")
    return M


def induced_by_game(F: UpdateRule) -> bool:
    """Whether some tie-free payoff matrix induces ``F`` (exact LP)."""
    try:
        synthesize_matrix(F)
    except InfeasibleError:
        return False
    return True


# --- exact dense linear algebra -------------------------------------------------

def _solve(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve ``A X = B`` exactly by Gauss-Jordan elimination."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimensionError("matrix must be square")
    m = len(B[0])
    aug = [[Fraction(v) for v in A[i]] + [Fraction(v) for v in B[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:n + m] for row in aug]


def inverse(A: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(A)
    return _solve(A, [[int(i == j) for j in range(n)] for i in range(n)])


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list[Fraction]]:
    return [
        [sum((Fraction(A[i][t]) * B[t][j] for t in range(len(B))), Fraction(0))
         for j in range(len(B[0]))]
        for i in range(len(A))
    ]


def _check_ray_targets(A: Sequence[Sequence]) -> None:
    k = len(A)
    for j in range(k):
        off = {Fraction(A[i][j]) for i in range(k) if i != j}
        if len(off) > 1:
            raise PatternError(f"column {j + 1} has unequal off-diagonal entries")
        if off and not Fraction(A[j][j]) < off.pop():
            raise PatternError(f"diagonal entry of column {j + 1} is not the smallest")


def matrix_from_rays(U: Sequence[Sequence], A: Sequence[Sequence] | None = None) -> PayoffMatrix:
    """The payoff matrix ``M`` with ``M U = A``.

    Column ``i`` of ``U`` is the direction of the ray along which strategy
    ``i`` is the unique worst reply; the default ``A`` is ``-I``.
    """
    k = len(U)
    if A is None:
        A = [[-int(i == j) for j in range(k)] for i in range(k)]
    if len(A) != k or any(len(r) != k for r in A):
        raise DimensionError("ray and target matrices must both be k x k")
    _check_ray_targets(A)
    return PayoffMatrix.of(matmul(A, inverse(U)))


def nash_point(M: PayoffMatrix) -> SimplexPoint:
    """The point of the extended strategy space where all payoffs are equal."""
    y = [row[0] for row in _solve(M.entries, [[1] for _ in range(M.k)])]
    total = sum(y, Fraction(0))
    if total == 0:
        raise DegenerateError("all-ones vector is orthogonal to M^-1 l")
    return tuple(v / total for v in y)
