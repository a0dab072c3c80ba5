"""Games, update rules, regular graphs and the synchronous update law.

Strategies are the integers ``1..k``.  A local profile (the multiset of
strategies a vertex sees) is a sorted tuple of length ``d``.  All arithmetic
on payoffs uses :class:`fractions.Fraction`, so ties can be detected exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from .errors import DimensionError, TieError

Profile = tuple[int, ...]


@lru_cache(maxsize=None)
def canonical_profiles(k: int, d: int) -> tuple[Profile, ...]:
    """All size-``d`` multisets over ``1..k``, ascending lexicographic.

    This ordering fixes the layout of :attr:`UpdateRule.outputs` and every
    serialized rule.
    """
    if k < 1 or d < 1:
        raise DimensionError(f"need k >= 1 and d >= 1, got k={k}, d={d}")
    return tuple(combinations_with_replacement(range(1, k + 1), d))


@lru_cache(maxsize=None)
def profile_index(k: int, d: int) -> dict[Profile, int]:
    return {p: i for i, p in enumerate(canonical_profiles(k, d))}


def num_profiles(k: int, d: int) -> int:
    return comb(k + d - 1, d)


def make_profile(strategies: Iterable[int]) -> Profile:
    return tuple(sorted(strategies))


@dataclass(frozen=True)
class PayoffMatrix:
    """A ``k x k`` game; ``entries[i-1][j-1]`` is the payoff of i against j."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise DimensionError("payoff matrix must be square and non-empty")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> "PayoffMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def k(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i - 1][j - 1]

    def permuted(self, sigma: Sequence[int]) -> "PayoffMatrix":
        """Relabel strategy ``i`` as ``sigma[i-1]`` in rows and columns."""
        k = self.k
        out = [[Fraction(0)] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                out[sigma[i] - 1][sigma[j] - 1] = self.entries[i][j]
        return PayoffMatrix.of(out)


def _check_profile(profile: Sequence[int], k: int) -> None:
    for s in profile:
        if not 1 <= s <= k:
            raise DimensionError(f"strategy {s} outside 1..{k}")


def total_payoff(M: PayoffMatrix, s: int, D: Sequence[int]) -> Fraction:
    """Sum of the payoffs ``M[s, u]`` over the members ``u`` of ``D``."""
    _check_profile(D, M.k)
    _check_profile((s,), M.k)
    row = M.entries[s - 1]
    return sum((row[u - 1] for u in D), Fraction(0))


def best_response(M: PayoffMatrix, D: Sequence[int]) -> int:
    """The unique strategy maximizing total payoff against ``D``.

    Raises :class:`TieError` if the maximum is attained more than once.
    """
    _check_profile(D, M.k)
    payoffs = [total_payoff(M, a, D) for a in range(1, M.k + 1)]
    best = max(payoffs)
    winners = [a for a, p in enumerate(payoffs, start=1) if p == best]
    if len(winners) > 1:
        raise TieError(make_profile(D), winners)
    return winners[0]


@dataclass(frozen=True)
class UpdateRule:
    """A map from size-``d`` profiles over ``1..k`` to a strategy.

    ``outputs[i]`` is the image of ``canonical_profiles(k, d)[i]``.
    """

    k: int
    d: int
    outputs: tuple[int, ...]

    def __post_init__(self):
        outputs = tuple(int(v) for v in self.outputs)
        object.__setattr__(self, "outputs", outputs)
        if len(outputs) != num_profiles(self.k, self.d):
            raise DimensionError(
                f"rule for k={self.k}, d={self.d} needs "
                f"{num_profiles(self.k, self.d)} outputs, got {len(outputs)}"
            )
        _check_profile(outputs, self.k)

    @property
    def profiles(self) -> tuple[Profile, ...]:
        return canonical_profiles(self.k, self.d)

    def __call__(self, D: Iterable[int]) -> int:
        D = make_profile(D)
        try:
            return self.outputs[profile_index(self.k, self.d)[D]]
        except KeyError:
            raise DimensionError(f"{D} is not a profile for k={self.k}, d={self.d}")

    def items(self):
        return zip(self.profiles, self.outputs)

    def preimage(self, s: int) -> frozenset[Profile]:
        return frozenset(p for p, out in self.items() if out == s)

    def relabeled(self, sigma: Sequence[int]) -> "UpdateRule":
        """The rule obtained by renaming strategy ``i`` to ``sigma[i-1]``.

        ``sigma`` acts on profile entries and outputs alike, so the result
        maps ``sigma(D)`` to ``sigma(F(D))``.
        """
        index = profile_index(self.k, self.d)
        out = [0] * len(self.outputs)
        for D, s in self.items():
            out[index[make_profile(sigma[x - 1] for x in D)]] = sigma[s - 1]
        return UpdateRule(self.k, self.d, tuple(out))

    @classmethod
    def constant(cls, k: int, d: int, s: int) -> "UpdateRule":
        return cls(k, d, (s,) * num_profiles(k, d))

    def __str__(self) -> str:
        return " ".join(map(str, self.outputs))


def induced_rule(M: PayoffMatrix, d: int) -> UpdateRule:
    """The update rule in which every vertex plays its best response."""
    return UpdateRule(
        M.k, d, tuple(best_response(M, D) for D in canonical_profiles(M.k, d))
    )


@dataclass(frozen=True)
class RegularGraph:
    """A ``d``-regular multigraph given by neighbour slots.

    ``neighbors[v]`` lists (sorted) the ``d`` vertices whose states vertex
    ``v`` sees.  A self-loop occupies one of its vertex's slots.
    """

    n: int
    d: int
    neighbors: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        nbrs = tuple(tuple(sorted(int(u) for u in row)) for row in self.neighbors)
        object.__setattr__(self, "neighbors", nbrs)
        if len(nbrs) != self.n:
            raise DimensionError(f"expected {self.n} adjacency rows, got {len(nbrs)}")
        for v, row in enumerate(nbrs):
            if len(row) != self.d:
                raise DimensionError(f"vertex {v} has {len(row)} slots, expected {self.d}")
            for u in row:
                if not 0 <= u < self.n:
                    raise DimensionError(f"vertex {v} lists unknown neighbour {u}")
        for v, row in enumerate(nbrs):
            for u in set(row):
                if u != v and row.count(u) != nbrs[u].count(v):
                    raise DimensionError(f"adjacency between {v} and {u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], d: int | None = None):
        """Build from an edge multiset; ``[v, v]`` is a self-loop (one slot)."""
        rows: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DimensionError(f"edge {(u, v)} outside 0..{n - 1}")
            rows[u].append(v)
            if u != v:
                rows[v].append(u)
        if d is None:
            d = len(rows[0]) if rows else 0
        return cls(n, d, tuple(tuple(sorted(r)) for r in rows))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v, row in enumerate(self.neighbors):
            for u in row:
                if u == v:
                    out.append((v, v))
                elif v < u:
                    out.append((v, u))
        return sorted(out)

    @classmethod
    def circle(cls, n: int) -> "RegularGraph":
        """The circle ``C_n``: vertex ``i`` sees ``i-1`` and ``i+1`` mod ``n``."""
        if n < 1:
            raise DimensionError("circle needs at least one vertex")
        return cls(n, 2, tuple(((i - 1) % n, (i + 1) % n) for i in range(n)))

    @classmethod
    def circle_with_self(cls, n: int) -> "RegularGraph":
        """``C_n`` with every vertex also linked to itself (degree 3)."""
        if n < 1:
            raise DimensionError("circle needs at least one vertex")
        return cls(n, 3, tuple(((i - 1) % n, i, (i + 1) % n) for i in range(n)))


Configuration = tuple[int, ...]


def step(G: RegularGraph, c: Sequence[int], F: UpdateRule) -> Configuration:
    """Apply ``F`` simultaneously at every vertex of ``G``."""
    if G.d != F.d:
        raise DimensionError(f"graph degree {G.d} differs from rule degree {F.d}")
    if len(c) != G.n:
        raise DimensionError(f"configuration has {len(c)} states for {G.n} vertices")
    _check_profile(c, F.k)
    lookup = dict(zip(F.profiles, F.outputs))
    return tuple(
        lookup[tuple(sorted(c[u] for u in row))] for row in G.neighbors
    )
