"""JSON files for instances and plans.

Instance file::

    {"graph": {"n": 3, "edges": [[0, 1], [1, 2]]},
     "lists": [[0, 1, 2], [0, 1, 2, 3], [0, 1, 2]],
     "alpha": [0, 1, 0], "beta": [1, 0, 1]}

Plan file::

    {"forward": [{"v": 0, "to": 2}], "backward": []}

Vertices and colors are 0-based integers.  Anything malformed raises
``FormatError`` naming the offending field.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .coloring_model import Instance, Plan
from .errors import RecolorError
from .graph_core import Graph


class FormatError(RecolorError):
    """An instance or plan file could not be parsed."""


def _int(x: Any, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{where}: expected an integer, got {x!r}")
    return x


def _array(x: Any, where: str) -> list:
    if not isinstance(x, list):
        raise FormatError(f"{where}: expected an array, got {type(x).__name__}")
    return x


def _object(x: Any, where: str, keys: tuple[str, ...]) -> dict:
    if not isinstance(x, dict):
        raise FormatError(f"{where}: expected an object, got {type(x).__name__}")
    missing = [k for k in keys if k not in x]
    if missing:
        raise FormatError(f"{where}: missing field(s) {', '.join(missing)}")
    extra = sorted(set(x) - set(keys))
    if extra:
        raise FormatError(f"{where}: unknown field(s) {', '.join(extra)}")
    return x


def _loads(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{what}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def instance_from_obj(obj: Any, degree_plus_two: bool = True) -> Instance:
    obj = _object(obj, "instance", ("graph", "lists", "alpha", "beta"))
    graph = _object(obj["graph"], "graph", ("n", "edges"))
    n = _int(graph["n"], "graph.n")
    edges = []
    for i, e in enumerate(_array(graph["edges"], "graph.edges")):
        e = _array(e, f"graph.edges[{i}]")
        if len(e) != 2:
            raise FormatError(f"graph.edges[{i}]: expected 2 endpoints, got {len(e)}")
        edges.append((_int(e[0], f"graph.edges[{i}][0]"), _int(e[1], f"graph.edges[{i}][1]")))
    try:
        g = Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(f"graph: {exc}") from None
    lists = []
    for v, lst in enumerate(_array(obj["lists"], "lists")):
        lst = [_int(c, f"lists[{v}][{j}]") for j, c in enumerate(_array(lst, f"lists[{v}]"))]
        if len(set(lst)) != len(lst):
            raise FormatError(f"lists[{v}]: repeated color")
        lists.append(lst)
    cols = {}
    for name in ("alpha", "beta"):
        cols[name] = [_int(c, f"{name}[{v}]") for v, c in enumerate(_array(obj[name], name))]
    try:
        return Instance(g, lists, cols["alpha"], cols["beta"], degree_plus_two)
    except ValueError as exc:
        raise FormatError(f"instance: {exc}") from None


def instance_to_obj(inst: Instance) -> dict:
    return {
        "graph": {"n": inst.n, "edges": [list(e) for e in inst.graph.sorted_edges()]},
        "lists": [sorted(lst) for lst in inst.lists],
        "alpha": list(inst.alpha),
        "beta": list(inst.beta),
    }


def plan_from_obj(obj: Any) -> Plan:
    obj = _object(obj, "plan", ("forward", "backward"))
    sides = []
    for name in ("forward", "backward"):
        steps = []
        for i, s in enumerate(_array(obj[name], name)):
            s = _object(s, f"{name}[{i}]", ("v", "to"))
            steps.append((_int(s["v"], f"{name}[{i}].v"), _int(s["to"], f"{name}[{i}].to")))
        sides.append(tuple(steps))
    return Plan(*sides)


def plan_to_obj(plan: Plan) -> dict:
    return {
        "forward": [{"v": v, "to": c} for v, c in plan.forward],
        "backward": [{"v": v, "to": c} for v, c in plan.backward],
    }


def dumps_instance(inst: Instance) -> str:
    return json.dumps(instance_to_obj(inst), indent=1) + "\n"


def loads_instance(text: str, degree_plus_two: bool = True) -> Instance:
    return instance_from_obj(_loads(text, "instance"), degree_plus_two)


def dumps_plan(plan: Plan) -> str:
    return json.dumps(plan_to_obj(plan), indent=1) + "\n"


def loads_plan(text: str) -> Plan:
    return plan_from_obj(_loads(text, "plan"))


def read_instance(path: str | Path, degree_plus_two: bool = True) -> Instance:
    return loads_instance(Path(path).read_text(encoding="utf-8"), degree_plus_two)


def write_instance(inst: Instance, path: str | Path) -> None:
    Path(path).write_text(dumps_instance(inst), encoding="utf-8")


def read_plan(path: str | Path) -> Plan:
    return loads_plan(Path(path).read_text(encoding="utf-8"))


def write_plan(plan: Plan, path: str | Path) -> None:
    Path(path).write_text(dumps_plan(plan), encoding="utf-8")
