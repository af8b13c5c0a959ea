"""List assignments, colorings and the conflict structures between two
colorings of the same graph.

A coloring is a tuple of non-negative ints indexed by vertex.  A list
assignment is a tuple of frozensets.  A step ``(v, c)`` recolors ``v`` to
``c``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ReplayError
from .graph_core import Edge, Graph

Coloring = tuple[int, ...]
Lists = tuple[frozenset[int], ...]
Step = tuple[int, int]


def make_lists(lists: Iterable[Iterable[int]]) -> Lists:
    out = tuple(frozenset(x) for x in lists)
    for v, lst in enumerate(out):
        if any((not isinstance(c, int)) or c < 0 for c in lst):
            raise ValueError(f"list of vertex {v} has a color that is not a non-negative integer")
    return out


def has_degree_plus_two(g: Graph, lists: Lists) -> bool:
    return all(len(lists[v]) >= g.degree(v) + 2 for v in range(g.n))


def is_proper(g: Graph, lists: Lists, coloring: Sequence[int]) -> bool:
    if len(coloring) != g.n or len(lists) != g.n:
        return False
    if any(coloring[v] not in lists[v] for v in range(g.n)):
        return False
    return all(coloring[u] != coloring[v] for u, v in g.edges)


@dataclass(frozen=True)
class Instance:
    """A graph, its lists and two proper list colorings."""

    graph: Graph
    lists: Lists
    alpha: Coloring
    beta: Coloring
    degree_plus_two: bool = field(default=True, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lists", make_lists(self.lists))
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        g = self.graph
        if len(self.lists) != g.n:
            raise ValueError(f"expected {g.n} lists, got {len(self.lists)}")
        for name, col in (("alpha", self.alpha), ("beta", self.beta)):
            if len(col) != g.n:
                raise ValueError(f"{name} has {len(col)} entries for {g.n} vertices")
            if not is_proper(g, self.lists, col):
                raise ValueError(f"{name} is not a proper list coloring")
        if self.degree_plus_two and not has_degree_plus_two(g, self.lists):
            bad = next(v for v in range(g.n) if len(self.lists[v]) < g.degree(v) + 2)
            raise ValueError(
                f"vertex {bad} has {len(self.lists[bad])} colors but degree {g.degree(bad)}"
            )

    @property
    def n(self) -> int:
        return self.graph.n

    def swapped(self) -> Instance:
        return Instance(self.graph, self.lists, self.beta, self.alpha, self.degree_plus_two)


# -- conflict structures -----------------------------------------------------


def color_shift(g: Graph, alpha: Sequence[int], beta: Sequence[int]) -> frozenset[Edge]:
    """Arcs ``(u, v)`` with ``uv`` an edge and ``beta[u] == alpha[v]``."""
    arcs = set()
    for u, v in g.edges:
        if beta[u] == alpha[v]:
            arcs.add((u, v))
        if beta[v] == alpha[u]:
            arcs.add((v, u))
    return frozenset(arcs)


def in_out_degrees(g: Graph, arcs: Iterable[Edge]) -> tuple[list[int], list[int]]:
    indeg = [0] * g.n
    outdeg = [0] * g.n
    for u, v in arcs:
        outdeg[u] += 1
        indeg[v] += 1
    return indeg, outdeg


@dataclass(frozen=True)
class ColorGraph:
    color: int
    vertices: frozenset[int]
    edges: frozenset[Edge]

    def adjacency(self) -> dict[int, set[int]]:
        out: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            out[u].add(v)
            out[v].add(u)
        return out

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen: set[int] = set()
        comps = []
        for s in sorted(self.vertices):
            if s in seen:
                continue
            stack, comp = [s], {s}
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(sorted(comp))
        return comps


def color_graph(g: Graph, alpha: Sequence[int], beta: Sequence[int], c: int) -> ColorGraph:
    verts = frozenset(v for v in range(g.n) if alpha[v] == c or beta[v] == c)
    edges = set()
    for u, v in g.edges:
        if (alpha[u] == c and beta[v] == c) or (beta[u] == c and alpha[v] == c):
            edges.add((u, v))
    return ColorGraph(c, verts, frozenset(edges))


def colors_used(alpha: Sequence[int], beta: Sequence[int]) -> list[int]:
    return sorted(set(alpha) | set(beta))


def free_colors(g: Graph, lists: Lists, alpha: Sequence[int], beta: Sequence[int], v: int) -> frozenset[int]:
    blocked = {alpha[u] for u in g.adj[v]} | {beta[u] for u in g.adj[v]}
    return lists[v] - blocked


# -- steps, plans, replay ----------------------------------------------------


def apply_step(coloring: Sequence[int], step: Step) -> Coloring:
    v, c = step
    out = list(coloring)
    out[v] = c
    return tuple(out)


def replay(g: Graph, lists: Lists, start: Sequence[int], steps: Sequence[Step]) -> list[Coloring]:
    """All colorings visited by applying ``steps`` to ``start``.

    Raises ``ReplayError`` at the first step that leaves the vertex list or
    creates a monochromatic edge.
    """
    current = tuple(start)
    out = [current]
    for i, (v, c) in enumerate(steps):
        if not 0 <= v < g.n:
            raise ReplayError(f"step {i}: vertex {v} out of range", i, None, steps[: i + 1])
        if c not in lists[v]:
            raise ReplayError(f"step {i}: color {c} not in list of vertex {v}", i, None, steps[: i + 1])
        for u in g.adj[v]:
            if current[u] == c:
                raise ReplayError(
                    f"step {i}: recoloring {v} to {c} clashes with neighbor {u}",
                    i,
                    (min(u, v), max(u, v)),
                    steps[: i + 1],
                )
        current = apply_step(current, (v, c))
        out.append(current)
    return out


@dataclass(frozen=True)
class Plan:
    """Steps from alpha (``forward``) and from beta (``backward``) that meet
    at a common coloring."""

    forward: tuple[Step, ...] = ()
    backward: tuple[Step, ...] = ()

    def __len__(self) -> int:
        return len(self.forward) + len(self.backward)

    def swapped(self) -> Plan:
        return Plan(self.backward, self.forward)


def check_plan(plan: Plan, inst: Instance) -> Coloring:
    """Replay both sides and return the meeting coloring."""
    fwd = replay(inst.graph, inst.lists, inst.alpha, plan.forward)[-1]
    try:
        bwd = replay(inst.graph, inst.lists, inst.beta, plan.backward)[-1]
    except ReplayError as exc:
        raise ReplayError(
            f"backward side: {exc}", len(plan.forward) + exc.index, exc.edge, exc.prefix
        ) from exc
    if fwd != bwd:
        diff = [v for v in range(inst.n) if fwd[v] != bwd[v]]
        raise ReplayError(f"sides do not meet; they differ on {diff}", len(plan), None, ())
    return fwd


def stitch(plan: Plan, inst: Instance) -> list[Step]:
    """Flatten a plan into one walk from alpha to beta.

    The backward side is reversed, each step restoring the color its vertex
    had before that backward step.
    """
    check_plan(plan, inst)
    states = replay(inst.graph, inst.lists, inst.beta, plan.backward)
    undo = [(v, states[i][v]) for i, (v, _) in enumerate(plan.backward)]
    return list(plan.forward) + undo[::-1]
