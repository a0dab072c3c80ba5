"""JSON and text formats for rules, matrices, graphs, witnesses and censuses.

Rationals are written as ``"p/q"`` strings (``"p"`` when integral).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .circuits import FundamentalPair
from .core import PayoffMatrix, RegularGraph, UpdateRule
from .errors import DimensionError
from .geometry import HullIntersection


def frac_str(q: Fraction) -> str:
    return str(Fraction(q))


def rule_to_json(F: UpdateRule) -> dict:
    return {"k": F.k, "d": F.d, "outputs": list(F.outputs)}


def rule_from_json(obj: dict) -> UpdateRule:
    try:
        return UpdateRule(int(obj["k"]), int(obj["d"]), tuple(obj["outputs"]))
    except KeyError as e:
        raise DimensionError(f"rule object lacks field {e}")


def rule_to_text(F: UpdateRule) -> str:
    return str(F)


def rule_from_text(text: str, k: int, d: int) -> UpdateRule:
    return UpdateRule(k, d, tuple(int(t) for t in text.split()))


def matrix_to_json(M: PayoffMatrix) -> list[list[str]]:
    return [[frac_str(v) for v in row] for row in M.entries]


def matrix_from_json(obj) -> PayoffMatrix:
    return PayoffMatrix.of([[Fraction(v) for v in row] for row in obj])


def graph_to_json(G: RegularGraph) -> dict:
    return {"n": G.n, "d": G.d, "edges": [list(e) for e in G.edges()]}


def graph_from_json(obj: dict) -> RegularGraph:
    G = RegularGraph.from_edges(int(obj["n"]), obj["edges"], int(obj["d"]))
    return G


def witness_to_json(w: HullIntersection) -> dict:
    if not w:
        return {"feasible": False}
    return {
        "feasible": True,
        "point": [frac_str(v) for v in w.point],
        "lambda": [frac_str(w.lam[D]) for D in sorted(w.lam)],
        "mu": [frac_str(w.mu[D]) for D in sorted(w.mu)],
    }


def census_to_json(c) -> dict:
    out = {
        "k": c.k,
        "d": c.d,
        "non_identical": c.non_identical,
        "classes": c.classes,
        "representatives": [rule_to_text(F) for F in c.representatives],
    }
    if c.witnesses is not None:
        out["witnesses"] = [None if M is None else matrix_to_json(M) for M in c.witnesses]
    return out


def catalog_to_json(pairs: list[FundamentalPair]) -> list[dict]:
    return [
        {
            "k": p.k,
            "shape": str(p.shape),
            "X": [list(D) for D in p.X],
            "Y": [list(D) for D in p.Y],
        }
        for p in pairs
    ]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def load(path) -> object:
    return json.loads(Path(path).read_text())
