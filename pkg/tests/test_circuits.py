import random
from itertools import chain, combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from br_automata import (
    build_pair_graph,
    enumerate_fundamental_pairs,
    good_colouring,
    has_alternating_cycle,
    hulls_intersect,
    is_unacceptable_pair,
)
from br_automata.circuits import (
    DARK,
    LIGHT,
    FundamentalPairShape,
    canonical_pair,
    make_graph,
    minimal_unacceptable_pairs,
)
from br_automata.core import canonical_profiles


def test_build_pair_graph():
    G = build_pair_graph([(1, 1), (2, 2)], [(1, 2)])
    assert G.dark_edges == ((1, 1), (2, 2)) and G.light_edges == ((1, 2),)
    assert G.vertices == {1, 2}
    G = build_pair_graph([(1, 2)], [])
    assert G.vertices == {1, 2} and G.dark_edges == ((1, 2),) and not G.light_edges
    G = build_pair_graph([(1, 2), (2, 3)], [(2, 2), (1, 3)])
    assert G.vertices == {1, 2, 3}
    assert G.dark_edges == ((1, 2), (2, 3)) and G.light_edges == ((1, 3), (2, 2))
    with pytest.raises(ValueError):
        build_pair_graph([(1, 2)], [(2, 1)])
    with pytest.raises(ValueError):
        build_pair_graph([(1, 2, 2)], [(1, 1, 1)])


def _check_walk(G, walk):
    available = {DARK: set(G.dark_edges), LIGHT: set(G.light_edges)}
    assert walk
    for ((u, v), colour) in walk:
        assert tuple(sorted((u, v))) in available[colour]
    for (a, b) in zip(walk, walk[1:] + walk[:1]):
        (_, v), c1 = a
        (u, _), c2 = b
        assert v == u and c1 != c2


def test_alternating_cycle_examples():
    G = build_pair_graph([(1, 1), (2, 2)], [(1, 2)])
    found = has_alternating_cycle(G)
    assert found
    _check_walk(G, list(found.walk))
    assert not has_alternating_cycle(build_pair_graph([(1, 2)], []))
    square = good_colouring(FundamentalPairShape.cycle(4))
    assert has_alternating_cycle(square)


def test_unacceptable_examples():
    assert is_unacceptable_pair([(2, 2), (1, 3)], [(3, 3), (1, 2)], 3)
    assert not is_unacceptable_pair([(1, 1)], [(2, 2)], 2)
    assert not is_unacceptable_pair([(1, 2)], [(1, 3)], 3)
    assert not hulls_intersect([(1, 2)], [(1, 3)], 3)


def _all_pairs(k):
    profiles = canonical_profiles(k, 2)
    for labels in product(range(3), repeat=len(profiles)):
        X = [D for D, l in zip(profiles, labels) if l == 1]
        Y = [D for D, l in zip(profiles, labels) if l == 2]
        if X and Y:
            yield X, Y


def test_circuit_matches_hull_exhaustive_k3():
    for X, Y in _all_pairs(3):
        assert is_unacceptable_pair(X, Y, 3) == bool(hulls_intersect(X, Y, 3)), (X, Y)


def test_circuit_matches_hull_random_k5():
    rng = random.Random(5)
    profiles = canonical_profiles(5, 2)
    for _ in range(300):
        labels = [rng.choice((0, 0, 1, 2)) for _ in profiles]
        X = [D for D, l in zip(profiles, labels) if l == 1]
        Y = [D for D, l in zip(profiles, labels) if l == 2]
        if X and Y:
            assert is_unacceptable_pair(X, Y, 5) == bool(hulls_intersect(X, Y, 5))


pair_codes = st.lists(st.sampled_from([0, 1, 2]), min_size=10, max_size=10)


@settings(max_examples=300, deadline=None)
@given(pair_codes)
def test_colour_swap_symmetry_and_witness(labels):
    profiles = canonical_profiles(4, 2)
    X = [D for D, l in zip(profiles, labels) if l == 1]
    Y = [D for D, l in zip(profiles, labels) if l == 2]
    G = build_pair_graph(X, Y)
    found = has_alternating_cycle(G)
    assert bool(has_alternating_cycle(G.swapped())) == bool(found)
    if found:
        _check_walk(G, list(found.walk))


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 9), st.randoms())
def test_trees_have_no_alternating_cycle(n, rnd):
    dark, light = [], []
    for v in range(2, n + 1):
        edge = (rnd.randrange(1, v), v)
        (dark if rnd.random() < 0.5 else light).append(edge)
    assert not has_alternating_cycle(make_graph(dark, light))


# --- good colourings --------------------------------------------------------------

def _simple_cycles(edges):
    """Edge-index sets forming a simple cycle (a loop is a cycle on its own)."""
    cycles = []
    for r in range(1, len(edges) + 1):
        for sub in combinations(range(len(edges)), r):
            degree = {}
            for i in sub:
                a, b = edges[i]
                degree[a] = degree.get(a, 0) + 1
                degree[b] = degree.get(b, 0) + 1
            if any(v != 2 for v in degree.values()):
                continue
            # connected
            verts = set(degree)
            seen, todo = set(), [next(iter(verts))]
            while todo:
                v = todo.pop()
                if v in seen:
                    continue
                seen.add(v)
                for i in sub:
                    a, b = edges[i]
                    if v in (a, b):
                        todo.extend((a, b))
            if seen == verts:
                cycles.append(set(sub))
    return cycles


def _is_good(edges, colours):
    cycles = _simple_cycles(edges)
    verts = {v for e in edges for v in e}
    for v in verts:
        inc = [i for i, e in enumerate(edges) if v in e]
        if len(inc) == 2 and not any(edges[i][0] == edges[i][1] for i in inc):
            if colours[inc[0]] == colours[inc[1]]:
                return False
            continue
        for i, j in combinations(inc, 2):
            together = any(i in c and j in c for c in cycles)
            if (colours[i] != colours[j]) == together:
                return False
    return True


SHAPES = [
    FundamentalPairShape.dumbbell(0, 0, 2),
    FundamentalPairShape.dumbbell(0, 0, 3),
    FundamentalPairShape.dumbbell(2, 0, 3),
    FundamentalPairShape.cycle(4),
    FundamentalPairShape.dumbbell(0, 0, 4),
    FundamentalPairShape.dumbbell(2, 0, 4),
    FundamentalPairShape.dumbbell(2, 2, 5),
    FundamentalPairShape.dumbbell(4, 0, 5),
    FundamentalPairShape.dumbbell(2, 0, 6),
    FundamentalPairShape.cycle(6),
]


@pytest.mark.parametrize("shape", SHAPES, ids=str)
def test_good_colouring_unique_up_to_swap(shape):
    G = good_colouring(shape)
    edges = [e for e, _ in G.edges()]
    mine = [c for _, c in G.edges()]
    assert _is_good(edges, mine)
    good = [cs for cs in product((DARK, LIGHT), repeat=len(edges)) if _is_good(edges, cs)]
    swap = [LIGHT if c == DARK else DARK for c in mine]
    assert sorted(good) == sorted([tuple(mine), tuple(swap)])
    assert len(G.vertices) == shape.k
    assert has_alternating_cycle(G)


def test_good_colouring_examples():
    G = good_colouring(FundamentalPairShape.dumbbell(0, 0, 2))
    assert {G.as_pair(), G.swapped().as_pair()} >= {
        (frozenset({(1, 1), (2, 2)}), frozenset({(1, 2)}))
    }
    G = good_colouring(FundamentalPairShape.dumbbell(0, 0, 3))
    assert canonical_pair(*G.as_pair(), 3) == canonical_pair(
        [(2, 2), (1, 3)], [(3, 3), (1, 2)], 3
    )
    G = good_colouring(FundamentalPairShape.cycle(4))
    assert len(G.dark_edges) == len(G.light_edges) == 2


@pytest.mark.parametrize("args", [("cycle", 5), ("cycle", 2), ("dumbbell", 3, 1, 0),
                                  ("dumbbell", 4, 2, 2), ("dumbbell", 1, 0, 0)])
def test_invalid_shapes(args):
    with pytest.raises(ValueError):
        FundamentalPairShape(*args)


def _powerset(s):
    s = list(s)
    return chain.from_iterable(combinations(s, r) for r in range(len(s) + 1))


@pytest.mark.parametrize("k,expected", [(2, 1), (3, 2), (4, 3), (5, 4), (6, 5)])
def test_catalog_sizes_and_fundamentality(k, expected):
    pairs = enumerate_fundamental_pairs(k)
    assert len(pairs) == expected
    assert len({(p.X, p.Y) for p in pairs}) == expected
    for p in pairs:
        assert is_unacceptable_pair(p.X, p.Y, k)
        for X2 in _powerset(p.X):
            for Y2 in _powerset(p.Y):
                if (len(X2), len(Y2)) == (len(p.X), len(p.Y)) or not X2 or not Y2:
                    continue
                assert not is_unacceptable_pair(X2, Y2, k)


def test_catalog_matches_reference_pairs():
    got = {(p.X, p.Y) for p in enumerate_fundamental_pairs(3)}
    reference = {
        canonical_pair([(2, 2), (1, 3)], [(3, 3), (1, 2)], 3),
        canonical_pair([(1, 2), (2, 3)], [(2, 2), (1, 3)], 3),
    }
    assert got == reference


@pytest.mark.parametrize("k", [2, 3])
def test_catalog_complete_against_geometric_brute_force(k):
    brute = minimal_unacceptable_pairs(k, lambda X, Y: bool(hulls_intersect(X, Y, k)))
    assert brute == {(p.X, p.Y) for p in enumerate_fundamental_pairs(k)}
