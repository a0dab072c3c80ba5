"""Running regular automata: trajectories, orbit detection, elementary CA numbers."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .core import Configuration, RegularGraph, UpdateRule, step
from .errors import DimensionError


@dataclass(frozen=True)
class Trajectory:
    """Configurations from ``t = 0`` with the first detected orbit.

    When ``period > 0``, ``configs[transient + period] == configs[transient]``
    and no configuration repeats before index ``transient + period``.  A
    ``period`` of 0 means no repeat was seen within the step budget.
    """

    configs: tuple[Configuration, ...]
    transient: int
    period: int


def run(G: RegularGraph, F: UpdateRule, c0: Sequence[int], max_steps: int,
        stop_at_cycle: bool = True) -> Trajectory:
    """Iterate ``step`` from ``c0`` for at most ``max_steps`` updates.

    With ``stop_at_cycle`` the run ends at the first repeated configuration;
    otherwise all ``max_steps`` updates are recorded (for plotting) and the
    first orbit is still reported.
    """
    c = tuple(c0)
    if len(c) != G.n:
        raise DimensionError(f"initial configuration has {len(c)} states for {G.n} vertices")
    configs = [c]
    seen = {c: 0}
    transient = period = 0
    for t in range(1, max_steps + 1):
        c = step(G, c, F)
        configs.append(c)
        if not period:
            if c in seen:
                transient, period = seen[c], t - seen[c]
                if stop_at_cycle:
                    break
            else:
                seen[c] = t
    return Trajectory(tuple(configs), transient, period)


def random_config(n: int, k: int, seed: int) -> Configuration:
    """I.i.d. uniform states in ``1..k`` from a seeded generator."""
    if n < 1 or k < 1:
        raise DimensionError("random_config needs n >= 1 and k >= 1")
    rng = random.Random(seed)
    return tuple(rng.randrange(1, k + 1) for _ in range(n))


# strategy -> bit under each of the two binary relabelings
RELABELINGS = ({1: 0, 2: 1}, {1: 1, 2: 0})


def wolfram_number(F: UpdateRule, mode: str, relabeling: dict[int, int]) -> int:
    """Elementary CA number of a two-state circle rule under one relabeling.

    ``mode`` is ``"circle"`` (a vertex sees its two neighbours, ``d = 2``) or
    ``"circle_with_self"`` (it also sees itself, ``d = 3``).
    """
    if F.k != 2:
        raise DimensionError("elementary CA numbers need a two-strategy rule")
    expected = {"circle": 2, "circle_with_self": 3}
    if mode not in expected:
        raise ValueError(f"unknown mode {mode!r}")
    if F.d != expected[mode]:
        raise DimensionError(f"mode {mode} needs d={expected[mode]}, rule has d={F.d}")
    back = {bit: s for s, bit in relabeling.items()}
    number = 0
    for code in range(8):
        l, c, r = (code >> 2) & 1, (code >> 1) & 1, code & 1
        seen = (back[l], back[r]) if mode == "circle" else (back[l], back[c], back[r])
        number |= relabeling[F(seen)] << code
    return number


def wolfram_numbers(F: UpdateRule, mode: str = "circle") -> frozenset[int]:
    return frozenset(wolfram_number(F, mode, rl) for rl in RELABELINGS)


def elementary_step(number: int, cells: Sequence[int]) -> tuple[int, ...]:
    """One update of elementary CA ``number`` on a periodic row of bits."""
    n = len(cells)
    return tuple(
        (number >> (4 * cells[i - 1] + 2 * cells[i] + cells[(i + 1) % n])) & 1
        for i in range(n)
    )
