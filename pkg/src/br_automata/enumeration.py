"""Census of realizable update rules up to relabeling of strategies.

Rules for ``(k, d)`` are indexed by ``0 .. k**P - 1`` (``P`` profiles) with
the first profile as the most significant base-``k`` digit, so index order
is the lexicographic order of output tuples.  Realizability depends only on
the pairs of preimages, so the census precomputes a verdict for every
disjoint pair of profile sets (a ternary code) and then classifies rules in
vectorized blocks.  Blocks are independent; their results merge by summing
counts per canonical rule.
"""

from __future__ import annotations

import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

import numpy as np

from .circuits import is_unacceptable_pair
from .core import UpdateRule, canonical_profiles, make_profile, num_profiles, profile_index
from .errors import CensusTooLarge, InfeasibleError
from .geometry import (
    hulls_intersect,
    induced_by_game,
    is_realizable,
    partition_of,
    synthesize_matrix,
)

log = logging.getLogger(__name__)

MAX_RULES = 1 << 21
BLOCK = 1 << 16


def violating_pair(F: UpdateRule) -> tuple[int, int] | None:
    """The first pair of states whose preimages are an unacceptable pair."""
    cells = {i: F.preimage(i) for i in range(1, F.k + 1)}
    for i in range(1, F.k + 1):
        for j in range(i + 1, F.k + 1):
            if not cells[i] or not cells[j]:
                continue
            if F.d == 2:
                bad = is_unacceptable_pair(cells[i], cells[j], F.k)
            else:
                bad = bool(hulls_intersect(cells[i], cells[j], F.k))
            if bad:
                return (i, j)
    return None


def classify_rule(F: UpdateRule) -> bool:
    """Whether the preimages of ``F`` are pairwise acceptable.

    For ``k <= 3`` this is the same as being induced by a game; use
    :func:`~br_automata.geometry.induced_by_game` for the exact question.
    Degree two uses the alternating-cycle test on each pair of preimages;
    other degrees check pairwise hull intersection directly.
    """
    if F.d == 2:
        return violating_pair(F) is None
    return is_realizable(partition_of(F))


def canonical_form(F: UpdateRule) -> UpdateRule:
    """Least relabeling of ``F`` in the lexicographic order of outputs."""
    return min(
        (F.relabeled(sigma) for sigma in permutations(range(1, F.k + 1))),
        key=lambda R: R.outputs,
    )


def rule_from_index(k: int, d: int, index: int) -> UpdateRule:
    P = num_profiles(k, d)
    digits = []
    for _ in range(P):
        index, r = divmod(index, k)
        digits.append(r + 1)
    return UpdateRule(k, d, tuple(reversed(digits)))


def rule_index(F: UpdateRule) -> int:
    idx = 0
    for s in F.outputs:
        idx = idx * F.k + (s - 1)
    return idx


# --- pair verdict table ----------------------------------------------------------

def _pair_oracle(k: int, d: int):
    if d == 2:
        return lambda X, Y: is_unacceptable_pair(X, Y, k)
    return lambda X, Y: bool(hulls_intersect(X, Y, k))


@lru_cache(maxsize=None)
def _profile_perms(k: int, d: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation of strategies, where each profile index moves."""
    profiles = canonical_profiles(k, d)
    index = profile_index(k, d)
    return tuple(
        tuple(index[make_profile(sigma[s - 1] for s in D)] for D in profiles)
        for sigma in permutations(range(1, k + 1))
    )


def pair_table(k: int, d: int) -> np.ndarray:
    """Boolean verdict per ternary code of a disjoint profile-set pair.

    Code ``sum(3**p for p in X) + 2 * sum(3**p for p in Y)`` is True when the
    hulls of ``X`` and ``Y`` meet.  The oracle runs once per orbit under
    strategy relabeling and exchange of the two sets, and is skipped
    whenever a pair with one profile fewer is already unacceptable.
    """
    P = num_profiles(k, d)
    profiles = canonical_profiles(k, d)
    oracle = _pair_oracle(k, d)
    perms = _profile_perms(k, d)
    pow3 = [3 ** p for p in range(P)]
    size = 3 ** P
    table = np.zeros(size, dtype=bool)
    done = np.zeros(size, dtype=bool)

    codes = np.arange(size, dtype=np.int64)
    digits = np.stack([(codes // pow3[p]) % 3 for p in range(P)], axis=1)
    n_labeled = (digits != 0).sum(axis=1)
    oracle_calls = 0
    for code in np.argsort(n_labeled, kind="stable").tolist():
        if done[code]:
            continue
        lab = digits[code]
        xs = [p for p in range(P) if lab[p] == 1]
        ys = [p for p in range(P) if lab[p] == 2]
        if not xs or not ys:
            verdict = False
        elif any(table[code - pow3[p] * lab[p]] for p in xs + ys):
            verdict = True
        else:
            verdict = oracle({profiles[p] for p in xs}, {profiles[p] for p in ys})
            oracle_calls += 1
        for perm in perms:
            cx = sum(pow3[perm[p]] for p in xs)
            cy = sum(pow3[perm[p]] for p in ys)
            for c in (cx + 2 * cy, cy + 2 * cx):
                table[c] = verdict
                done[c] = True
    log.debug("pair table (%d, %d): %d oracle calls", k, d, oracle_calls)
    return table


# --- block processing ------------------------------------------------------------

def _decode(k: int, P: int, lo: int, hi: int) -> np.ndarray:
    idx = np.arange(lo, hi, dtype=np.int64)
    out = np.empty((hi - lo, P), dtype=np.int8)
    for p in range(P - 1, -1, -1):
        out[:, p] = idx % k
        idx //= k
    return out  # zero-based strategies


def _realizable_mask(rules: np.ndarray, k: int, table: np.ndarray) -> np.ndarray:
    P = rules.shape[1]
    pow3 = 3 ** np.arange(P, dtype=np.int64)
    tern = [((rules == s) * pow3).sum(axis=1) for s in range(k)]
    ok = np.ones(rules.shape[0], dtype=bool)
    for i in range(k):
        for j in range(i + 1, k):
            ok &= ~table[tern[i] + 2 * tern[j]]
    return ok


def _canonical_indices(rules: np.ndarray, k: int, d: int) -> np.ndarray:
    P = rules.shape[1]
    weights = k ** np.arange(P - 1, -1, -1, dtype=np.int64)
    best = None
    for sigma, moves in zip(permutations(range(k)), _profile_perms(k, d)):
        inv = np.argsort(np.asarray(moves))
        relabeled = np.asarray(sigma, dtype=np.int8)[rules][:, inv]
        idx = relabeled.astype(np.int64) @ weights
        best = idx if best is None else np.minimum(best, idx)
    return best


def census_block(k: int, d: int, lo: int, hi: int, table: np.ndarray) -> Counter:
    """Realizable rules with index in ``[lo, hi)``, counted per canonical index."""
    rules = _decode(k, num_profiles(k, d), lo, hi)
    rules = rules[_realizable_mask(rules, k, table)]
    if not len(rules):
        return Counter()
    canon, counts = np.unique(_canonical_indices(rules, k, d), return_counts=True)
    return Counter(dict(zip(canon.tolist(), counts.tolist())))


_worker_table = None


def _init_worker(table):
    global _worker_table
    _worker_table = table


def _run_block(args):
    k, d, lo, hi = args
    return census_block(k, d, lo, hi, _worker_table)


@dataclass
class RuleCensus:
    k: int
    d: int
    non_identical: int
    classes: int
    representatives: list[UpdateRule]
    orbit_sizes: list[int] = field(default_factory=list)
    witnesses: list | None = None


def census(k: int, d: int, jobs: int | None = None, witness: bool = False,
           block: int = BLOCK, max_rules: int = MAX_RULES, exact: bool = False) -> RuleCensus:
    """Count realizable rules and their classes under strategy relabeling.

    By default a rule counts when its preimages are pairwise acceptable.
    With ``exact`` each class is additionally required to have a witness
    payoff matrix; this only changes the counts from four strategies on.
    With ``witness`` each representative gets a synthesized matrix, or
    ``None`` when no game induces it.
    """
    total = k ** num_profiles(k, d)
    if total > max_rules:
        raise CensusTooLarge(f"{total} rules for k={k}, d={d} exceeds bound {max_rules}")
    if jobs is None:
        jobs = int(os.environ.get("BR_AUTOMATA_JOBS", "1"))
    table = pair_table(k, d)
    ranges = [(k, d, lo, min(lo + block, total)) for lo in range(0, total, block)]
    merged: Counter = Counter()
    if jobs > 1:
        with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(table,)) as ex:
            for part in ex.map(_run_block, ranges):
                merged.update(part)
    else:
        for _, _, lo, hi in ranges:
            merged.update(census_block(k, d, lo, hi, table))
    canon = sorted(merged)
    if exact:
        canon = [i for i in canon if induced_by_game(rule_from_index(k, d, i))]
    reps = [rule_from_index(k, d, i) for i in canon]
    result = RuleCensus(
        k, d,
        non_identical=sum(merged[i] for i in canon),
        classes=len(canon),
        representatives=reps,
        orbit_sizes=[merged[i] for i in canon],
    )
    if witness:
        result.witnesses = [_witness_or_none(F) for F in reps]
    return result


def _witness_or_none(F: UpdateRule):
    try:
        return synthesize_matrix(F)
    except InfeasibleError:
        # pairwise acceptable but not induced by any game (k >= 4 only)
        return None


def all_realizable_rules(k: int, d: int) -> list[UpdateRule]:
    """Every realizable rule, in index order, by the table filter."""
    table = pair_table(k, d)
    total = k ** num_profiles(k, d)
    rules = _decode(k, num_profiles(k, d), 0, total)
    keep = np.nonzero(_realizable_mask(rules, k, table))[0]
    return [UpdateRule(k, d, tuple(int(s) + 1 for s in rules[i])) for i in keep]


def division_classes(k: int, d: int) -> int:
    """Number of unlabeled realizable partitions of the profile points.

    Two rules fall in the same class when their preimage partitions agree
    after forgetting labels and applying a symmetry of the simplex.
    """
    perms = _profile_perms(k, d)
    seen = set()
    for F in census(k, d).representatives:
        cells = [
            [p for p, s in enumerate(F.outputs) if s == i] for i in range(1, k + 1)
        ]
        cells = [c for c in cells if c]
        seen.add(min(
            tuple(sorted(tuple(sorted(m[p] for p in c)) for c in cells))
            for m in perms
        ))
    return len(seen)
