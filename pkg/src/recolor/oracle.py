"""Exhaustive search over the reconfiguration graph of list colorings.

Every answer here is exact.  When the search would touch more colorings
than the state budget allows it raises ``BudgetExceeded`` instead of
guessing.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from .coloring_model import Coloring, Instance, Lists, Plan, Step, has_degree_plus_two
from .errors import BudgetExceeded, Unreachable
from .graph_core import Graph

DEFAULT_BUDGET = 5_000_000


def state_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("RECOLOR_STATE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def neighbors(g: Graph, lists: Sequence[Sequence[int]], state: Coloring) -> Iterator[tuple[Step, Coloring]]:
    """Colorings one recoloring away from ``state``, in (vertex, color) order."""
    adj = g.adj
    for v in range(g.n):
        blocked = {state[u] for u in adj[v]}
        cur = state[v]
        for c in lists[v]:
            if c != cur and c not in blocked:
                yield (v, c), state[:v] + (c,) + state[v + 1:]


def _sorted_lists(lists: Lists) -> list[list[int]]:
    return [sorted(x) for x in lists]


def _search(inst: Instance, budget: int) -> list[Step] | None:
    """Shortest path by bidirectional BFS, expanding the smaller frontier."""
    src, dst = inst.alpha, inst.beta
    if src == dst:
        return []
    g = inst.graph
    lists = _sorted_lists(inst.lists)
    # parent maps: state -> (previous state, step that led here)
    par_f: dict[Coloring, tuple[Coloring, Step] | None] = {src: None}
    par_b: dict[Coloring, tuple[Coloring, Step] | None] = {dst: None}
    front_f, front_b = [src], [dst]
    while front_f and front_b:
        forward = len(front_f) <= len(front_b)
        front, mine, other = (front_f, par_f, par_b) if forward else (front_b, par_b, par_f)
        nxt = []
        meet = None
        for s in front:
            for step, t in neighbors(g, lists, s):
                if t in mine:
                    continue
                mine[t] = (s, step)
                if len(par_f) + len(par_b) > budget:
                    raise BudgetExceeded(budget)
                if t in other:
                    meet = t
                    break
                nxt.append(t)
            if meet is not None:
                break
        if meet is not None:
            return _join(par_f, par_b, meet)
        if forward:
            front_f = nxt
        else:
            front_b = nxt
    return None


def _join(par_f, par_b, meet) -> list[Step]:
    head = []
    s = meet
    while par_f[s] is not None:
        prev, step = par_f[s]
        head.append(step)
        s = prev
    head.reverse()
    tail = []
    s = meet
    while par_b[s] is not None:
        prev, (v, _) = par_b[s]
        # walking back toward beta recolors v to the color it had in prev
        tail.append((v, prev[v]))
        s = prev
    return head + tail


def bfs_distance(inst: Instance, budget: int | None = None) -> int | None:
    """Exact distance from alpha to beta; ``None`` when beta is unreachable."""
    path = _search(inst, state_budget(budget))
    return None if path is None else len(path)


def oracle_plan(inst: Instance, budget: int | None = None) -> Plan:
    path = _search(inst, state_budget(budget))
    if path is None:
        raise Unreachable("beta is not reachable from alpha")
    return Plan(tuple(path), ())


# -- whole reconfiguration graph ---------------------------------------------


def all_colorings(g: Graph, lists: Lists, budget: int | None = None) -> list[Coloring]:
    """Every proper list coloring, in lexicographic order."""
    budget = state_budget(budget)
    lists_s = _sorted_lists(lists)
    n = g.n
    out: list[Coloring] = []
    cur = [0] * n

    def rec(v: int) -> None:
        if v == n:
            out.append(tuple(cur))
            if len(out) > budget:
                raise BudgetExceeded(budget)
            return
        earlier = [cur[u] for u in g.adj[v] if u < v]
        for c in lists_s[v]:
            if c not in earlier:
                cur[v] = c
                rec(v + 1)

    rec(0)
    return out


@dataclass(frozen=True)
class ReconfGraphStats:
    vertex_count: int
    connected: bool
    diameter: int | None
    witness: tuple[Coloring, Coloring] | None


def _state_graph(g: Graph, lists: Lists, states: list[Coloring]) -> csr_matrix:
    index = {s: i for i, s in enumerate(states)}
    lists_s = _sorted_lists(lists)
    rows, cols = [], []
    for i, s in enumerate(states):
        for _, t in neighbors(g, lists_s, s):
            rows.append(i)
            cols.append(index[t])
    data = np.ones(len(rows), dtype=np.int8)
    return csr_matrix((data, (rows, cols)), shape=(len(states), len(states)))


def diameter(
    g: Graph,
    lists: Lists,
    budget: int | None = None,
    require_degree_plus_two: bool = True,
    chunk: int = 512,
) -> ReconfGraphStats:
    """Exact diameter of the reconfiguration graph, one BFS per coloring."""
    if require_degree_plus_two and not has_degree_plus_two(g, lists):
        raise ValueError("lists do not satisfy |L(v)| >= d(v) + 2")
    states = all_colorings(g, lists, budget)
    if not states:
        return ReconfGraphStats(0, False, None, None)
    adj = _state_graph(g, lists, states)
    ncomp, _ = connected_components(adj, directed=False)
    if ncomp != 1:
        return ReconfGraphStats(len(states), False, None, None)
    best, pair = -1, (0, 0)
    for lo in range(0, len(states), chunk):
        idx = np.arange(lo, min(lo + chunk, len(states)))
        dist = shortest_path(adj, method="D", unweighted=True, directed=False, indices=idx)
        far = dist.argmax(axis=1)
        ecc = dist[np.arange(len(idx)), far]
        k = int(ecc.argmax())
        if ecc[k] > best:
            best, pair = int(ecc[k]), (int(idx[k]), int(far[k]))
    return ReconfGraphStats(len(states), True, best, (states[pair[0]], states[pair[1]]))


def connectivity(g: Graph, lists: Lists, budget: int | None = None) -> tuple[int, bool]:
    """(number of proper colorings, whether they form one connected class)."""
    states = all_colorings(g, lists, budget)
    if not states:
        return 0, False
    ncomp, _ = connected_components(_state_graph(g, lists, states), directed=False)
    return len(states), ncomp == 1
