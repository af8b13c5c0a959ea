"""Recoloring plans of length at most n + mu for complete multipartite graphs.

Each level works on an instance where alpha and beta differ everywhere.
The first reduction that applies is used:

1. ``no-conflict``: a vertex that can take its other color directly.
2. If the largest part I1 holds at least half the vertices:
   ``large-offside`` (a conflict avoiding I1), ``large-singleton`` (a color
   used once inside I1), or else ``large-finish`` which recolors everything.
3. Otherwise, with parts I1, I2, I3, ... in decreasing size:
   ``cousin-multiplicity``, ``AB-intersection``, ``double-pair``,
   ``I3-minority`` and finally ``I3-sweep``.

Each reduction's applicability test assumes the earlier ones failed, and
the structural facts that licence the later ones are asserted as we go.
"""

from __future__ import annotations

from collections import Counter, defaultdict

from .coloring_model import Instance, Plan, colors_used
from .errors import InternalInvariantError, PlannerInapplicable
from .graph_core import MultipartiteStructure, detect_multipartite
from .planning import ALPHA, BETA, PlanResult, Reduction, Workspace, run_planner


def _holders(col, c) -> list[int]:
    return [v for v, x in enumerate(col) if x == c]


def _unique_vertices(col) -> set[int]:
    counts = Counter(col)
    return {v for v, x in enumerate(col) if counts[x] == 1}


def _pairing(left, right) -> set[tuple[int, int]]:
    left, right = sorted(left), sorted(right)
    return {tuple(sorted(p)) for p in zip(left, right)}


def reduce_no_conflict(inst: Instance) -> Reduction | None:
    g = inst.graph
    cols = (inst.alpha, inst.beta)
    # alpha-side steps first, like the isolated-vertex reduction
    for target in (BETA, ALPHA):
        side = 1 - target
        for v in range(g.n):
            if cols[ALPHA][v] == cols[BETA][v]:
                continue
            c = cols[target][v]
            if all(cols[side][u] != c for u in g.adj[v]):
                ws = Workspace(inst)
                ws.recolor(side, v, c)
                return ws.reduction("no-conflict", {v}, 0)
    return None


# -- one dominant part ---------------------------------------------------------


def branch_large_set(inst: Instance, parts: MultipartiteStructure) -> Reduction:
    g = inst.graph
    cols = (inst.alpha, inst.beta)
    i1 = set(parts.parts[0])
    rest = set(range(g.n)) - i1
    if 2 * len(i1) < g.n:
        raise InternalInvariantError("largest part is not dominant")
    part_of = parts.part_of()

    # a conflict over c between two vertices outside I1
    for c in colors_used(*cols):
        a, b = _holders(cols[ALPHA], c), _holders(cols[BETA], c)
        if not a or not b or (set(a) | set(b)) & i1:
            continue
        if part_of[a[0]] == part_of[b[0]]:
            continue
        side, away, onto = (ALPHA, a, b) if len(a) <= len(b) else (BETA, b, a)
        ws = Workspace(inst)
        for u in away:
            ws.recolor(side, u, ws.smallest(u, ws.nbr_colors(side, u) | {c}, "(large offside)"))
        for u in onto:
            ws.recolor(side, u, c)
        return ws.reduction("large-offside", onto, len(onto))

    for side in (ALPHA, BETA):
        if {cols[side][v] for v in rest} != {cols[1 - side][v] for v in i1}:
            raise InternalInvariantError("colors outside I1 do not mirror the colors on I1")

    # a color used exactly once inside I1
    for side in (ALPHA, BETA):
        other = 1 - side
        counts = Counter(cols[side][v] for v in i1)
        for c in sorted(counts):
            if counts[c] != 1:
                continue
            w = next(v for v in sorted(i1) if cols[side][v] == c)
            targets = _holders(cols[other], c)
            if not targets or set(targets) & i1:
                raise InternalInvariantError(f"color {c} has no holder outside I1 on the other side")
            ws = Workspace(inst)
            ws.recolor(side, w, ws.smallest(w, ws.nbr_colors(side, w) | {c}, "(large singleton)"))
            for x in targets:
                ws.recolor(side, x, c)
            return ws.reduction("large-singleton", targets, len(targets))

    return _finish_large(inst, parts)


def _finish_large(inst: Instance, parts: MultipartiteStructure) -> Reduction:
    g = inst.graph
    beta = inst.beta
    i1 = list(parts.parts[0])
    rest = [v for p in parts.parts[1:] for v in p]
    beta_i1 = {beta[v] for v in i1}
    ws = Workspace(inst)
    for part in parts.parts[1:]:
        for u in part:
            ws.recolor(ALPHA, u, ws.smallest(u, ws.nbr_colors(ALPHA, u) | beta_i1, "(large finish)"))
    for w in i1:
        ws.recolor(ALPHA, w, beta[w])
    for u in rest:
        ws.recolor(ALPHA, u, beta[u])
    return ws.reduction("large-finish", range(g.n), len(rest), _pairing(rest, i1))


# -- balanced parts -----------------------------------------------------------


def reduce_cousin_multiplicity(inst: Instance) -> Reduction | None:
    cols = (inst.alpha, inst.beta)
    for side in (ALPHA, BETA):
        other = 1 - side
        for w in sorted(_unique_vertices(cols[side])):
            c = cols[side][w]
            group = _holders(cols[other], c)
            if len(group) < 2:
                continue
            ws = Workspace(inst)
            ws.recolor(side, w, ws.smallest(w, ws.nbr_colors(side, w) | {c}, "(cousin multiplicity)"))
            for x in group:
                ws.recolor(side, x, c)
            return ws.reduction("cousin-multiplicity", group, 1)
    return None


def _cousin(col, c) -> int:
    found = _holders(col, c)
    if len(found) != 1:
        raise InternalInvariantError(f"color {c} is held by {len(found)} vertices, expected one")
    return found[0]


def reduce_AB_intersection(inst: Instance) -> Reduction | None:
    g = inst.graph
    alpha, beta = inst.alpha, inst.beta
    both = _unique_vertices(alpha) & _unique_vertices(beta)
    for v in sorted(both):
        u = _cousin(beta, alpha[v])
        w = _cousin(alpha, beta[v])
        if not (g.has_edge(u, v) and g.has_edge(v, w)):
            raise InternalInvariantError(f"cousins of {v} are not adjacent to it")
        ws = Workspace(inst)
        ws.recolor(ALPHA, w, ws.smallest(w, ws.nbr_colors(ALPHA, w) | {alpha[w]}, "(A and B)"))
        ws.recolor(ALPHA, v, beta[v])
        ws.recolor(ALPHA, u, beta[u])
        return ws.reduction("AB-intersection", {u, v}, 1, {tuple(sorted((u, v)))})
    return None


def reduce_double_pair(inst: Instance) -> Reduction | None:
    g = inst.graph
    cols = (inst.alpha, inst.beta)
    for side in (ALPHA, BETA):
        other = 1 - side
        uniq_other = _unique_vertices(cols[other])
        by_color = defaultdict(list)
        for v, c in enumerate(cols[side]):
            by_color[c].append(v)
        for a in sorted(by_color):
            pair = by_color[a]
            if len(pair) != 2 or not set(pair) <= uniq_other:
                continue
            v1, v2 = pair
            t1 = _cousin(cols[side], cols[other][v1])
            t2 = _cousin(cols[side], cols[other][v2])
            group = _holders(cols[other], a)
            if len(group) < 2:
                raise InternalInvariantError(f"color {a} appears once on one side only")
            ws = Workspace(inst)
            ws.recolor(side, t1, ws.smallest(
                t1, ws.nbr_colors(side, t1) | {ws.color(side, t1), cols[other][v2]}, "(double pair)"))
            ws.recolor(side, t2, ws.smallest(
                t2, ws.nbr_colors(side, t2) | {ws.color(side, t2), cols[other][v1]}, "(double pair)"))
            ws.recolor(side, v1, cols[other][v1])
            ws.recolor(side, v2, cols[other][v2])
            for x in group:
                ws.recolor(side, x, a)
            cert = {tuple(sorted(p)) for p in zip((v1, v2), group)}
            if not all(g.has_edge(x, y) for x, y in cert):
                raise InternalInvariantError("double pair and its color class share a part")
            return ws.reduction("double-pair", {v1, v2, *group}, 2, cert)
    return None


def reduce_I3_majority(inst: Instance, parts: MultipartiteStructure) -> Reduction | None:
    g = inst.graph
    cols = (inst.alpha, inst.beta)
    i3 = parts.parts[2]
    for side in (ALPHA, BETA):
        other = 1 - side
        for a in sorted({cols[side][v] for v in i3}):
            mine = _holders(cols[side], a)
            theirs = _holders(cols[other], a)
            if len(mine) > len(theirs):
                continue
            ws = Workspace(inst)
            free = {}
            for v in mine:
                options = ws.free(v)
                if not options:
                    raise InternalInvariantError(f"I3 vertex {v} has no free color")
                free[v] = min(options)
            for v in mine:
                ws.recolor(side, v, free[v])
            for y in theirs:
                ws.recolor(side, y, a)
            for v in mine:
                ws.recolor(other, v, free[v])
            cert = _pairing(mine, theirs)
            if not all(g.has_edge(x, y) for x, y in cert):
                raise InternalInvariantError("I3 color class shares a part with its conflicts")
            red = ws.reduction("I3-minority", set(mine) | set(theirs), len(mine), cert)
            if red.steps_used != 2 * len(mine) + len(theirs):
                raise InternalInvariantError("I3 minority step count off")
            return red
    return None


def sweep_facts(inst: Instance, parts: MultipartiteStructure) -> dict:
    """The structural facts that hold once no earlier reduction applies."""
    g = inst.graph
    alpha, beta = inst.alpha, inst.beta
    n = g.n
    a_set, b_set = _unique_vertices(alpha), _unique_vertices(beta)
    cousins = {}
    for w in a_set:
        cousins[w] = _holders(beta, alpha[w])
    for u in b_set:
        cousins[u] = _holders(alpha, beta[u])
    bijective = all(len(x) == 1 and x[0] in (b_set if w in a_set else a_set)
                    for w, x in cousins.items())
    i3 = parts.parts[2]
    ws = Workspace(inst)
    i3_counts_a = Counter(alpha[v] for v in i3)
    i3_counts_b = Counter(beta[v] for v in i3)
    return {
        "n": n,
        "colors_alpha": len(set(alpha)),
        "colors_beta": len(set(beta)),
        "colors_bound_ok": 3 * len(set(alpha)) <= 2 * n and set(alpha) == set(beta),
        "A_B_disjoint": not (a_set & b_set),
        "cousins_bijective": bijective,
        "free_on_I3": all(ws.free(v) for v in i3),
        "strict_majority": all(
            len(_holders(alpha, a)) > len(_holders(beta, a)) for a in i3_counts_a
        ) and all(len(_holders(beta, b)) > len(_holders(alpha, b)) for b in i3_counts_b),
        "I3_colors_thrice": all(k >= 3 for k in i3_counts_a.values())
        and all(k >= 3 for k in i3_counts_b.values()),
    }


def finish_I3_sweep(inst: Instance, parts: MultipartiteStructure) -> Reduction:
    facts = sweep_facts(inst, parts)
    broken = [k for k, ok in facts.items() if ok is False]
    if broken:
        raise InternalInvariantError(f"sweep reached with failed facts: {broken}")
    g = inst.graph
    cols = (inst.alpha, inst.beta)
    i3 = list(parts.parts[2])

    def around(side):
        other = 1 - side
        target_colors = {cols[other][v] for v in i3}
        own_colors = {cols[side][v] for v in i3}
        u = [x for x in range(g.n) if cols[side][x] in target_colors]
        w = [x for x in range(g.n) if cols[other][x] in own_colors]
        return u, w

    side = ALPHA
    u_set, w_set = around(ALPHA)
    if len(u_set) > len(w_set):
        side = BETA
        u_set, w_set = around(BETA)
    other = 1 - side
    if len(w_set) >= len(i3) or set(w_set) & set(i3) or set(u_set) & set(i3):
        raise InternalInvariantError("sweep sets overlap I3 or W is not smaller than I3")
    target_colors = {cols[other][v] for v in i3}
    ws = Workspace(inst)
    for u in u_set:
        ws.recolor(side, u, ws.smallest(u, ws.nbr_colors(side, u) | target_colors, "(I3 sweep)"))
    for v in i3:
        ws.recolor(side, v, cols[other][v])
    for w in w_set:
        ws.recolor(side, w, cols[other][w])
    facts.update(U=len(u_set), W=len(w_set), I3=len(i3), swapped=side == BETA)
    return ws.reduction("I3-sweep", set(i3) | set(w_set), len(w_set), _pairing(w_set, i3), **facts)


def choose_reduction(inst: Instance) -> Reduction:
    parts = detect_multipartite(inst.graph)
    if parts is None:
        raise InternalInvariantError("residual graph is no longer complete multipartite")
    red = reduce_no_conflict(inst)
    if red is not None:
        return red
    if len(parts.parts) < 2:
        raise InternalInvariantError("edgeless residual with conflicts")
    if 2 * len(parts.parts[0]) >= inst.n:
        return branch_large_set(inst, parts)
    for step in (reduce_cousin_multiplicity, reduce_AB_intersection, reduce_double_pair):
        red = step(inst)
        if red is not None:
            return red
    red = reduce_I3_majority(inst, parts)
    if red is not None:
        return red
    return finish_I3_sweep(inst, parts)


def plan_multipartite_result(inst: Instance, parts: MultipartiteStructure | None = None) -> PlanResult:
    detected = detect_multipartite(inst.graph)
    if detected is None:
        raise PlannerInapplicable("graph is not complete multipartite")
    if parts is not None and sorted(map(sorted, parts.parts)) != sorted(map(sorted, detected.parts)):
        raise PlannerInapplicable("given parts do not match the graph")
    if not inst.degree_plus_two:
        raise PlannerInapplicable("lists must satisfy |L(v)| >= d(v) + 2")
    return run_planner(inst, choose_reduction)


def plan_multipartite(inst: Instance, parts: MultipartiteStructure | None = None) -> Plan:
    return plan_multipartite_result(inst, parts).plan
