"""Shared machinery for the reduction-based planners.

A planner repeatedly picks a reduction on the current instance: a few
recoloring steps on the alpha side and/or the beta side after which both
colorings agree on a set of vertices.  Those vertices are deleted, their
final colors are struck from the neighbors' lists, and the planner recurses
on what is left.  Every level is recorded so the length budget can be
audited afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .coloring_model import Coloring, Instance, Plan, Step, check_plan, replay
from .errors import InternalInvariantError, ReplayError
from .graph_core import Edge, is_matching, matching_number, max_matching, restrict

ALPHA, BETA = 0, 1


@dataclass(frozen=True)
class Reduction:
    """One reduction on a (local) instance.

    ``certificate`` is a matching on removed vertices; when it is smaller
    than ``matching_decrease`` the audit extends it by augmenting paths.
    """

    kind: str
    forward: tuple[Step, ...]
    backward: tuple[Step, ...]
    removed: frozenset[int]
    matching_decrease: int
    certificate: frozenset[Edge] = frozenset()
    facts: dict = field(default_factory=dict, compare=False)

    @property
    def steps_used(self) -> int:
        return len(self.forward) + len(self.backward)

    @property
    def vertices_removed(self) -> int:
        return len(self.removed)


class Workspace:
    """Current alpha-side and beta-side colorings of one instance, with
    every recoloring checked as it is made."""

    def __init__(self, inst: Instance):
        self.inst = inst
        self.g = inst.graph
        self.lists = inst.lists
        self.cur = [list(inst.alpha), list(inst.beta)]
        self.steps: tuple[list[Step], list[Step]] = ([], [])

    def color(self, side: int, v: int) -> int:
        return self.cur[side][v]

    def nbr_colors(self, side: int, v: int) -> set[int]:
        col = self.cur[side]
        return {col[u] for u in self.g.adj[v]}

    def free(self, v: int) -> set[int]:
        return set(self.lists[v]) - self.nbr_colors(ALPHA, v) - self.nbr_colors(BETA, v)

    def smallest(self, v: int, exclude: Iterable[int], what: str = "") -> int:
        options = set(self.lists[v]) - set(exclude)
        if not options:
            raise InternalInvariantError(f"no color left for vertex {v} {what}".strip())
        return min(options)

    def recolor(self, side: int, v: int, c: int) -> None:
        col = self.cur[side]
        if col[v] == c:
            return
        if c not in self.lists[v]:
            raise InternalInvariantError(f"color {c} not in list of {v}")
        for u in self.g.adj[v]:
            if col[u] == c:
                raise InternalInvariantError(f"recoloring {v} to {c} clashes with {u}")
        col[v] = c
        self.steps[side].append((v, c))

    def agree(self, v: int) -> bool:
        return self.cur[ALPHA][v] == self.cur[BETA][v]

    def reduction(self, kind: str, removed: Iterable[int], decrease: int,
                  certificate: Iterable[Edge] = (), **facts) -> Reduction:
        removed = frozenset(removed)
        bad = [v for v in removed if not self.agree(v)]
        if bad:
            raise InternalInvariantError(f"{kind}: removed vertices {sorted(bad)} do not agree")
        return Reduction(kind, tuple(self.steps[ALPHA]), tuple(self.steps[BETA]),
                         removed, decrease, frozenset(certificate), facts)


@dataclass(frozen=True)
class Level:
    """A reduction expressed in the original vertex numbering."""

    kind: str
    vertices: frozenset[int]
    removed: frozenset[int]
    steps_used: int
    matching_decrease: int
    certificate: frozenset[Edge]
    mu_before: int
    mu_after: int
    facts: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class PlanResult:
    instance: Instance
    plan: Plan
    levels: tuple[Level, ...]

    def __len__(self) -> int:
        return len(self.plan)


def residual(inst: Instance, removed: Iterable[int], gamma: Coloring,
             zeta: Coloring) -> tuple[Instance, list[int]]:
    """Delete ``removed`` and strike their (agreed) colors from neighbor lists.

    Returns the smaller instance and, for each new vertex, its old index.
    """
    removed = set(removed)
    g = inst.graph
    sub, index = restrict(g, removed)
    kept = sorted(index, key=index.get)
    lists = []
    for v in kept:
        banned = {gamma[u] for u in g.adj[v] if u in removed}
        lists.append(inst.lists[v] - banned)
    return Instance(
        sub,
        lists,
        tuple(gamma[v] for v in kept),
        tuple(zeta[v] for v in kept),
        inst.degree_plus_two,
    ), kept


def run_planner(inst: Instance, choose: Callable[[Instance], Reduction]) -> PlanResult:
    """Apply reductions until nothing is left and assemble the plan.

    Agreeing vertices are always peeled off first at zero cost; ``choose``
    only ever sees instances where alpha and beta differ everywhere.
    """
    forward: list[Step] = []
    backward: list[Step] = []
    levels: list[Level] = []
    cur = inst
    ids = list(range(inst.n))
    mu = matching_number(inst.graph)
    while cur.n:
        agreeing = [v for v in range(cur.n) if cur.alpha[v] == cur.beta[v]]
        if agreeing:
            red = Reduction("agree", (), (), frozenset(agreeing), 0)
        else:
            red = choose(cur)
        if not red.removed:
            raise InternalInvariantError(f"{red.kind} removed no vertex")
        try:
            gamma = replay(cur.graph, cur.lists, cur.alpha, red.forward)[-1]
            zeta = replay(cur.graph, cur.lists, cur.beta, red.backward)[-1]
        except ReplayError as exc:
            raise InternalInvariantError(f"{red.kind} emitted an invalid step: {exc}") from exc
        nxt, kept = residual(cur, red.removed, gamma, zeta)
        mu_next = matching_number(nxt.graph)
        forward.extend((ids[v], c) for v, c in red.forward)
        backward.extend((ids[v], c) for v, c in red.backward)
        levels.append(Level(
            red.kind,
            frozenset(ids),
            frozenset(ids[v] for v in red.removed),
            red.steps_used,
            red.matching_decrease,
            frozenset(tuple(sorted((ids[a], ids[b]))) for a, b in red.certificate),
            mu,
            mu_next,
            red.facts,
        ))
        ids = [ids[v] for v in kept]
        cur, mu = nxt, mu_next
    plan = Plan(tuple(forward), tuple(backward))
    check_plan(plan, inst)
    return PlanResult(inst, plan, tuple(levels))


# -- ledger audit ------------------------------------------------------------


class LedgerError(InternalInvariantError):
    pass


def audit(result: PlanResult) -> frozenset[Edge]:
    """Check the length accounting of every level.

    Each level must satisfy ``steps <= removed + matching_decrease`` and
    its claimed decrease must not exceed the real drop in matching number.
    The per-level certificates are then composed bottom-up into a single
    matching of the original graph of size at least the total claimed
    decrease, which is returned.
    """
    g = result.instance.graph
    total = 0
    for i, lv in enumerate(result.levels):
        if lv.steps_used > len(lv.removed) + lv.matching_decrease:
            raise LedgerError(f"level {i} ({lv.kind}): {lv.steps_used} steps > "
                              f"{len(lv.removed)} removed + {lv.matching_decrease}")
        if lv.mu_before - lv.mu_after < lv.matching_decrease:
            raise LedgerError(f"level {i} ({lv.kind}): claimed matching drop {lv.matching_decrease} "
                              f"but matching number went {lv.mu_before} -> {lv.mu_after}")
        if not is_matching(g, lv.certificate):
            raise LedgerError(f"level {i} ({lv.kind}): certificate is not a matching of the graph")
        if any(u not in lv.removed or v not in lv.removed for u, v in lv.certificate):
            raise LedgerError(f"level {i} ({lv.kind}): certificate leaves the removed set")
        if len(lv.certificate) > lv.matching_decrease:
            raise LedgerError(f"level {i} ({lv.kind}): certificate larger than claimed drop")
        total += lv.matching_decrease
    matching: frozenset[Edge] = frozenset()
    for lv in reversed(result.levels):
        want = len(matching) + lv.matching_decrease
        # certificate edges live on removed vertices, disjoint from deeper levels
        matching = matching | lv.certificate
        if len(matching) < want:
            sub, index = restrict(g, set(range(g.n)) - lv.vertices)
            back = {new: old for old, new in index.items()}
            local = {(index[u], index[v]) for u, v in matching}
            grown = max_matching(sub, local)
            if len(grown) < want:
                raise LedgerError(f"{lv.kind}: cannot extend the composed matching to size {want}")
            matching = frozenset(tuple(sorted((back[u], back[v]))) for u, v in grown)
    if not is_matching(g, matching) or len(matching) < total:
        raise LedgerError("composed certificates do not form a large enough matching")
    if len(result.plan) > g.n + matching_number(g):
        raise LedgerError("plan exceeds n + mu")
    return matching
