"""Recoloring plans of length at most n + mu for graphs of maximum degree 3.

Reductions, tried in order on an instance where alpha and beta differ on
every vertex:

* isolated: a vertex alone in its color graph is recolored once;
* cycle-triple: when the color-shift digraph is a union of directed
  cycles, three consecutive cycle vertices are fixed in three steps and
  two of them removed;
* component-cover: otherwise the largest color-graph component (at least
  three vertices) is made to agree using a minimum vertex cover of it.
"""

from __future__ import annotations

from .coloring_model import Instance, Plan, color_graph, color_shift, colors_used, in_out_degrees
from .errors import InternalInvariantError, PlannerInapplicable
from .graph_core import degree1_free_cover, max_matching, restrict
from .planning import ALPHA, BETA, PlanResult, Reduction, Workspace, run_planner


def reduce_isolated(inst: Instance) -> Reduction | None:
    """One step for a vertex alone in its color graph.

    Alpha-side steps (``v`` takes its beta color) are looked for first, over
    colors then vertices ascending; beta-side steps only if none exists.
    """
    g, alpha, beta = inst.graph, inst.alpha, inst.beta
    cols = (alpha, beta)
    colors = colors_used(alpha, beta)
    for step_side in (ALPHA, BETA):
        held = 1 - step_side
        for c in colors:
            for v in range(g.n):
                if alpha[v] == beta[v] or cols[held][v] != c:
                    continue
                if all(cols[step_side][u] != c for u in g.adj[v]):
                    ws = Workspace(inst)
                    ws.recolor(step_side, v, c)
                    return ws.reduction("isolated", {v}, 0)
    return None


def _all_unit_cycles(inst: Instance) -> bool:
    arcs = color_shift(inst.graph, inst.alpha, inst.beta)
    indeg, outdeg = in_out_degrees(inst.graph, arcs)
    return all(i == 1 for i in indeg) and all(o == 1 for o in outdeg)


def reduce_cycle_triple(inst: Instance) -> Reduction:
    g, alpha, beta = inst.graph, inst.alpha, inst.beta
    if not _all_unit_cycles(inst):
        raise InternalInvariantError("color-shift digraph is not a union of directed cycles")
    succ = {}
    for u, v in color_shift(g, alpha, beta):
        succ[u] = v
    u = 0
    v = succ[u]
    w = succ[v]
    ws = Workspace(inst)
    ws.recolor(ALPHA, w, ws.smallest(w, ws.nbr_colors(ALPHA, w) | {beta[v]}, "(cycle triple)"))
    ws.recolor(ALPHA, v, beta[v])
    ws.recolor(ALPHA, u, beta[u])
    return ws.reduction("cycle-triple", {u, v}, 1, {tuple(sorted((u, v)))})


def largest_component(inst: Instance) -> tuple[int, list[int]]:
    """(color, component) of maximum size over all color graphs.

    Ties go to the smaller color, then the smaller first vertex.
    """
    best: tuple[int, int, int] | None = None
    found = None
    for c in colors_used(inst.alpha, inst.beta):
        for comp in color_graph(inst.graph, inst.alpha, inst.beta, c).components():
            key = (-len(comp), c, comp[0])
            if best is None or key < best:
                best, found = key, (c, comp)
    if found is None:
        raise InternalInvariantError("no color graph has a vertex")
    return found


def component_cover(inst: Instance, c: int, comp: list[int]) -> tuple[frozenset[int], frozenset]:
    """Degree-1-free minimum cover of the color graph component and a
    maximum matching of it, both in instance indices."""
    g = inst.graph
    cg = color_graph(g, inst.alpha, inst.beta, c)
    comp_set = set(comp)
    sub_full, index = restrict(g, set(range(g.n)) - comp_set)
    back = {new: old for old, new in index.items()}
    # keep only the conflict edges of the color graph
    sub = type(sub_full)(sub_full.n, frozenset(
        (index[a], index[b]) for a, b in cg.edges if a in comp_set and b in comp_set))
    sides = ({index[v] for v in comp if inst.alpha[v] == c},
             {index[v] for v in comp if inst.beta[v] == c})
    cover = degree1_free_cover(sub, sides)
    matching = max_matching(sub)
    if len(matching) != len(cover):
        raise InternalInvariantError("König matching smaller than the cover")
    return (frozenset(back[v] for v in cover),
            frozenset(tuple(sorted((back[a], back[b]))) for a, b in matching))


def agree_on_component(inst: Instance, comp: list[int], cover: frozenset[int],
                       c: int | None = None, certificate: frozenset = frozenset()) -> Reduction:
    g = inst.graph
    if c is None:
        c = next(col for col in (inst.alpha[comp[0]], inst.beta[comp[0]])
                 if all(inst.alpha[v] == col or inst.beta[v] == col for v in comp))
    ws = Workspace(inst)
    c_count = sum(col == c for side in ws.cur for col in side)
    pushes = []
    for w in sorted(cover):
        if ws.agree(w):
            if ws.color(ALPHA, w) == c:
                raise InternalInvariantError(f"cover vertex {w} agrees on the component color")
            continue
        sides_c = [s for s in (ALPHA, BETA) if ws.color(s, w) == c]
        if len(sides_c) != 1:
            raise InternalInvariantError(f"cover vertex {w} lost the component color")
        t = sides_c[0]
        o = 1 - t
        free = ws.free(w)
        if c in free:
            raise InternalInvariantError(f"component color is free at cover vertex {w}")
        if free:
            star = min(free)
            ws.recolor(ALPHA, w, star)
            ws.recolor(BETA, w, star)
            continue
        target = ws.color(o, w)
        # out-neighbours of w on the side holding c
        holders = [u for u in g.adj[w] if ws.color(t, u) == target]
        incoming = [u for u in g.adj[w] if ws.color(o, u) == c]
        if len(holders) != 1 or not incoming:
            raise InternalInvariantError(
                f"cover vertex {w} has no free color but {len(holders)} out-arcs, "
                f"{len(incoming)} in-arcs")
        u = holders[0]
        pushes.append((w, u))
        ws.recolor(t, u, ws.smallest(u, ws.nbr_colors(t, u) | {ws.color(t, u)}, "(cover push)"))
        ws.recolor(t, w, target)
    for w in cover:
        if c in (ws.color(ALPHA, w), ws.color(BETA, w)) or not ws.agree(w):
            raise InternalInvariantError(f"cover vertex {w} not settled off the component color")
    if sum(col == c for side in ws.cur for col in side) > c_count:
        raise InternalInvariantError("a new vertex took the component color")
    for v in comp:
        if v in cover:
            continue
        for side in (ALPHA, BETA):
            ws.recolor(side, v, c)
    red = ws.reduction("component-cover", comp, len(cover), certificate, cover=sorted(cover), color=c, pushes=pushes)
    if red.steps_used > len(cover) + len(comp):
        raise InternalInvariantError("component cover used more than |W| + |V0| steps")
    return red


def choose_reduction(inst: Instance) -> Reduction:
    red = reduce_isolated(inst)
    if red is not None:
        return red
    if _all_unit_cycles(inst):
        return reduce_cycle_triple(inst)
    c, comp = largest_component(inst)
    if len(comp) < 3:
        raise InternalInvariantError("no reduction applies: largest color-graph component has < 3 vertices")
    cover, matching = component_cover(inst, c, comp)
    return agree_on_component(inst, comp, cover, c, matching)


def plan_subcubic_result(inst: Instance) -> PlanResult:
    if inst.graph.max_degree() > 3:
        raise PlannerInapplicable(f"maximum degree {inst.graph.max_degree()} exceeds 3")
    if not inst.degree_plus_two:
        raise PlannerInapplicable("lists must satisfy |L(v)| >= d(v) + 2")
    return run_planner(inst, choose_reduction)


def plan_subcubic(inst: Instance) -> Plan:
    return plan_subcubic_result(inst).plan
