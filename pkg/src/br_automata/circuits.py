"""Alternating cycles in two-coloured multigraphs.

For degree-two profiles a pair of disjoint profile sets ``X, Y`` is drawn as
a graph on strategies: each ``{a, b}`` in ``X`` is a dark edge, each one in
``Y`` a light edge, and ``{a, a}`` is a self-loop.  The point sets of ``X``
and ``Y`` have intersecting hulls exactly when this graph carries a closed
walk whose edge colours alternate, including across the closing step.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterable, Sequence

from .core import Profile, canonical_profiles, make_profile

DARK, LIGHT = "dark", "light"
Edge = tuple[int, int]


@dataclass(frozen=True)
class BicoloredMultigraph:
    vertices: frozenset[int]
    dark_edges: tuple[Edge, ...]
    light_edges: tuple[Edge, ...]

    def edges(self) -> list[tuple[Edge, str]]:
        return [(e, DARK) for e in self.dark_edges] + [(e, LIGHT) for e in self.light_edges]

    def swapped(self) -> "BicoloredMultigraph":
        return BicoloredMultigraph(self.vertices, self.light_edges, self.dark_edges)

    def relabeled(self, mapping) -> "BicoloredMultigraph":
        def f(e):
            return tuple(sorted((mapping[e[0]], mapping[e[1]])))

        return BicoloredMultigraph(
            frozenset(mapping[v] for v in self.vertices),
            tuple(sorted(f(e) for e in self.dark_edges)),
            tuple(sorted(f(e) for e in self.light_edges)),
        )

    def as_pair(self) -> tuple[frozenset[Profile], frozenset[Profile]]:
        return frozenset(self.dark_edges), frozenset(self.light_edges)


def make_graph(dark: Iterable[Sequence[int]], light: Iterable[Sequence[int]]) -> BicoloredMultigraph:
    dark = tuple(sorted(make_profile(e) for e in dark))
    light = tuple(sorted(make_profile(e) for e in light))
    verts = frozenset(v for e in dark + light for v in e)
    return BicoloredMultigraph(verts, dark, light)


def build_pair_graph(X: Iterable[Sequence[int]], Y: Iterable[Sequence[int]]) -> BicoloredMultigraph:
    X = {make_profile(D) for D in X}
    Y = {make_profile(D) for D in Y}
    if any(len(D) != 2 for D in X | Y):
        raise ValueError("pair graphs are defined for degree-2 profiles only")
    if X & Y:
        raise ValueError(f"profile sets overlap in {sorted(X & Y)}")
    return make_graph(X, Y)


@dataclass(frozen=True)
class AlternatingCycle:
    """Truthy when a closed alternating walk was found.

    ``walk`` is a list of ``((u, v), colour)`` steps traversing ``u -> v``.
    """

    found: bool
    walk: tuple[tuple[Edge, str], ...] = ()

    def __bool__(self) -> bool:
        return self.found


def has_alternating_cycle(G: BicoloredMultigraph) -> AlternatingCycle:
    """Search for a closed walk whose consecutive edges differ in colour.

    States are oriented edge instances; a state ``u -> v`` of one colour can
    be followed by any instance leaving ``v`` in the other colour.  A closed
    alternating walk is a directed cycle of this transition graph.
    """
    states: list[tuple[int, int, str]] = []
    for (a, b), colour in G.edges():
        states.append((a, b, colour))
        if a != b:
            states.append((b, a, colour))
    leaving: dict[tuple[int, str], list[int]] = {}
    for s, (u, _, colour) in enumerate(states):
        leaving.setdefault((u, colour), []).append(s)

    def successors(s):
        _, v, colour = states[s]
        return leaving.get((v, LIGHT if colour == DARK else DARK), [])

    WHITE, GREY, BLACK = 0, 1, 2
    mark = [WHITE] * len(states)
    for root in range(len(states)):
        if mark[root] != WHITE:
            continue
        path = [root]
        stack = [iter(successors(root))]
        mark[root] = GREY
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                mark[path.pop()] = BLACK
                stack.pop()
            elif mark[nxt] == GREY:
                cycle = path[path.index(nxt):]
                walk = tuple(((states[s][0], states[s][1]), states[s][2]) for s in cycle)
                return AlternatingCycle(True, walk)
            elif mark[nxt] == WHITE:
                mark[nxt] = GREY
                path.append(nxt)
                stack.append(iter(successors(nxt)))
    return AlternatingCycle(False)


def is_unacceptable_pair(X: Iterable[Sequence[int]], Y: Iterable[Sequence[int]], k: int) -> bool:
    G = build_pair_graph(X, Y)
    if any(not 1 <= v <= k for v in G.vertices):
        raise ValueError(f"pair uses strategies outside 1..{k}")
    return bool(has_alternating_cycle(G))


@dataclass(frozen=True)
class FundamentalPairShape:
    """An even cycle ``C_k`` or a dumbbell ``Dum(a, b)_k``.

    A dumbbell joins the cycles ``C_{a+1}`` and ``C_{b+1}`` by a path, with
    ``k`` vertices in total; ``C_1`` is a single self-loop.
    """

    kind: str
    k: int
    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.kind == "cycle":
            if self.k < 4 or self.k % 2:
                raise ValueError(f"even cycle needs even k > 2, got {self.k}")
        elif self.kind == "dumbbell":
            a, b, k = self.a, self.b, self.k
            if k < 2 or a < 0 or b < 0 or a % 2 or b % 2 or a + b >= k:
                raise ValueError(f"invalid dumbbell Dum({a},{b})_{k}")
        else:
            raise ValueError(f"unknown shape kind {self.kind!r}")

    @classmethod
    def cycle(cls, k: int) -> "FundamentalPairShape":
        return cls("cycle", k)

    @classmethod
    def dumbbell(cls, a: int, b: int, k: int) -> "FundamentalPairShape":
        return cls("dumbbell", k, a, b)

    def __str__(self) -> str:
        if self.kind == "cycle":
            return f"C{self.k}"
        return f"Dum({self.a},{self.b})_{self.k}"


def _alternate(first: str, n: int) -> list[str]:
    other = LIGHT if first == DARK else DARK
    return [first if i % 2 == 0 else other for i in range(n)]


def good_colouring(shape: FundamentalPairShape) -> BicoloredMultigraph:
    k = shape.k
    dark, light = [], []

    def paint(edges, colours):
        for e, c in zip(edges, colours):
            (dark if c == DARK else light).append(e)

    if shape.kind == "cycle":
        ring = [(i, i % k + 1) for i in range(1, k + 1)]
        paint(ring, _alternate(DARK, k))
        return make_graph(dark, light)

    a, b = shape.a, shape.b
    # cycle one on 1..a+1 meets the path at a+1; cycle two on k-b..k meets it at k-b
    left = list(range(1, a + 2))
    right = list(range(k - b, k + 1))
    left_edges = _ring_from(left, left[-1])
    path_edges = [(v, v + 1) for v in range(a + 1, k - b)]
    right_edges = _ring_from(right, right[0])
    paint(left_edges, _alternate(DARK, len(left_edges)))
    paint(path_edges, _alternate(LIGHT, len(path_edges)))
    last = (path_edges and _alternate(LIGHT, len(path_edges))[-1]) or DARK
    paint(right_edges, _alternate(LIGHT if last == DARK else DARK, len(right_edges)))
    return make_graph(dark, light)


def _ring_from(vertices: list[int], start: int) -> list[Edge]:
    """Edges of the cycle on ``vertices`` listed as a walk from ``start``."""
    if len(vertices) == 1:
        return [(start, start)]
    i = vertices.index(start)
    order = vertices[i:] + vertices[:i]
    return [(order[j], order[(j + 1) % len(order)]) for j in range(len(order))]


def fundamental_shapes(k: int) -> list[FundamentalPairShape]:
    shapes = []
    if k > 2 and k % 2 == 0:
        shapes.append(FundamentalPairShape.cycle(k))
    for a in range(0, k, 2):
        for b in range(0, a + 1, 2):
            if a + b < k:
                shapes.append(FundamentalPairShape.dumbbell(a, b, k))
    return shapes


def canonical_pair(X: Iterable[Profile], Y: Iterable[Profile], k: int):
    """Orbit minimum of an unordered profile-set pair under relabeling.

    Returns ``(X, Y)`` as sorted tuples, minimized over all permutations of
    ``1..k`` and the exchange of ``X`` with ``Y``.
    """
    X, Y = list(X), list(Y)
    best = None
    for perm in permutations(range(1, k + 1)):
        def f(D):
            return make_profile(perm[s - 1] for s in D)

        px = tuple(sorted(f(D) for D in X))
        py = tuple(sorted(f(D) for D in Y))
        for cand in ((px, py), (py, px)):
            if best is None or cand < best:
                best = cand
    return best


def is_fundamental(X, Y, k: int, unacceptable: Callable | None = None) -> bool:
    """Unacceptable, and every pair obtained by deleting one profile is not.

    Deleting a single profile suffices because unacceptability is monotone
    under enlarging either set.
    """
    test = unacceptable or (lambda A, B: is_unacceptable_pair(A, B, k))
    X, Y = set(X), set(Y)
    if not X or not Y or not test(X, Y):
        return False
    for D in X:
        if len(X) > 1 and test(X - {D}, Y):
            return False
    for D in Y:
        if len(Y) > 1 and test(X, Y - {D}):
            return False
    return True


@dataclass(frozen=True)
class FundamentalPair:
    k: int
    shape: FundamentalPairShape
    X: tuple[Profile, ...]
    Y: tuple[Profile, ...]


def enumerate_fundamental_pairs(k: int) -> list[FundamentalPair]:
    """One canonical labeled pair per fundamental shape on ``k`` strategies."""
    if k < 2:
        raise ValueError("fundamental pairs need at least two strategies")
    out = []
    for shape in fundamental_shapes(k):
        X, Y = good_colouring(shape).as_pair()
        if not is_fundamental(X, Y, k):
            raise AssertionError(f"{shape} colouring is not fundamentally unacceptable")
        cx, cy = canonical_pair(X, Y, k)
        out.append(FundamentalPair(k, shape, cx, cy))
    return out


def minimal_unacceptable_pairs(k: int, unacceptable: Callable) -> set:
    """Brute force: canonical minimal unacceptable pairs using all ``k`` strategies.

    ``unacceptable(X, Y)`` is the oracle; answers are memoized per orbit so
    the oracle runs once per equivalence class.
    """
    profiles = canonical_profiles(k, 2)
    memo: dict = {}

    def test(A, B):
        if not A or not B:
            return False
        key = canonical_pair(A, B, k)
        if key not in memo:
            memo[key] = bool(unacceptable(set(key[0]), set(key[1])))
        return memo[key]

    found = set()
    n = len(profiles)
    for labels in _ternary(n):
        X = {profiles[i] for i in range(n) if labels[i] == 1}
        Y = {profiles[i] for i in range(n) if labels[i] == 2}
        if not X or not Y:
            continue
        used = {s for D in X | Y for s in D}
        if len(used) != k:
            continue
        if canonical_pair(X, Y, k) in found:
            continue
        if is_fundamental(X, Y, k, unacceptable=test):
            found.add(canonical_pair(X, Y, k))
    return found


def _ternary(n: int):
    labels = [0] * n
    while True:
        yield labels
        i = 0
        while i < n and labels[i] == 2:
            labels[i] = 0
            i += 1
        if i == n:
            return
        labels[i] += 1
