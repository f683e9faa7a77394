"""Strategic network formation: pairwise stability, Cournot collaboration games, formation processes.

Game specs and formation configs are plain dicts in the CLI's JSON config format.
Exact quantities come back as fractions.Fraction.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Optional

from . import _netform
from ._netform import Graph, NetformError, eg_check

__version__ = _netform.__version__

__all__ = [
    "Graph",
    "NetformError",
    "eg_check",
    "realize",
    "payoffs",
    "cournot_outcome",
    "is_pairwise_stable",
    "enumerate_stable",
    "is_pareto_optimal",
    "check_nonneg_condition",
    "check_complete_graph_conditions",
    "simulate",
    "run_ensemble",
]


def _dump(obj: Any) -> str:
    return obj if isinstance(obj, str) else json.dumps(obj)


def _frac(value: Any) -> Any:
    if isinstance(value, list):
        return [_frac(v) for v in value]
    return Fraction(value)


def _condition(row: dict) -> dict:
    row = dict(row)
    row["margin"] = Fraction(row["margin"])
    row["details"] = {k: Fraction(v) for k, v in row["details"].items()}
    return row


def realize(degrees: Iterable[int]) -> Graph:
    """Havel–Hakimi realization; raises NetformError when the sequence is not graphical."""
    return _netform.realize(list(degrees))


def payoffs(spec: dict, graph: Graph) -> list[Fraction]:
    return _frac(json.loads(_netform.payoffs(_dump(spec), graph)))


def cournot_outcome(spec: dict, graph: Graph) -> dict:
    out = json.loads(_netform.cournot_outcome(_dump(spec), graph))
    return {k: (v if k == "negative_quantity" else _frac(v)) for k, v in out.items()}


def is_pairwise_stable(spec: dict, graph: Graph) -> dict:
    report = json.loads(_netform.is_pairwise_stable(_dump(spec), graph))
    if report["witness"] is not None:
        w = report["witness"]
        w["link"] = tuple(w["link"])
        w["payoff_deltas"] = _frac(w["payoff_deltas"])
    return report


def enumerate_stable(spec: dict, threads: int = 1) -> dict:
    census = json.loads(_netform.enumerate_stable(_dump(spec), threads))
    for entry in census["stable"]:
        entry["payoffs"] = _frac(entry["payoffs"])
    return census


def is_pareto_optimal(spec: dict, graph: Graph) -> tuple[bool, Optional[Graph]]:
    return _netform.is_pareto_optimal(_dump(spec), graph)


def check_nonneg_condition(spec: dict, at: Optional[Graph] = None) -> list[dict]:
    return [_condition(r) for r in json.loads(_netform.check_nonneg_condition(_dump(spec), at))]


def check_complete_graph_conditions(spec: dict) -> list[dict]:
    return [_condition(r) for r in json.loads(_netform.check_complete_graph_conditions(_dump(spec)))]


def simulate(config: dict) -> dict:
    graph, steps, outcome, trace = _netform.simulate(_dump(config))
    return {"graph": graph, "steps": steps, "outcome": outcome, "trace": [tuple(p) for p in trace]}


def run_ensemble(config: dict, runs: int, threads: int = 1) -> dict:
    return json.loads(_netform.run_ensemble(_dump(config), runs, threads))
