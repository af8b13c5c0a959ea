"""Randomized invariants, driven by hypothesis."""

import itertools

from hypothesis import HealthCheck, given, settings, strategies as st

from conftest import brute_matching_number, brute_min_cover_size
from recolor.coloring_model import (
    Instance, color_graph, color_shift, colors_used, free_colors, make_lists, replay, stitch,
)
from recolor.graph_core import (
    Graph, bipartition, components, degree1_free_cover, detect_multipartite, is_matching,
    is_vertex_cover, koenig_min_cover, matching_number, max_matching, mu_multipartite,
    realize_multipartite,
)
from recolor.oracle import bfs_distance
from recolor.planner_multipartite import plan_multipartite_result
from recolor.planner_subcubic import plan_subcubic_result
from recolor.planning import audit
from recolor.serialize import dumps_instance, loads_instance

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def graphs(draw, max_n=8, max_degree=None):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if max_degree is not None:
        deg = [0] * n
        kept = []
        for u, v in chosen:
            if deg[u] < max_degree and deg[v] < max_degree:
                kept.append((u, v))
                deg[u] += 1
                deg[v] += 1
        chosen = kept
    return Graph.from_edges(n, chosen)


@st.composite
def colorings(draw, g, lists):
    order = draw(st.permutations(range(g.n)))
    col = [None] * g.n
    for v in order:
        options = sorted(lists[v] - {col[u] for u in g.adj[v]})
        col[v] = draw(st.sampled_from(options))
    return tuple(col)


@st.composite
def instances(draw, g, palette_extra=2):
    palette = g.max_degree() + 2 + draw(st.integers(0, palette_extra))
    lists = []
    for v in range(g.n):
        size = draw(st.integers(g.degree(v) + 2, palette))
        lists.append(draw(st.sets(st.integers(0, palette - 1), min_size=size, max_size=size)))
    lists = make_lists(lists)
    return Instance(g, lists, draw(colorings(g, lists)), draw(colorings(g, lists)))


@st.composite
def bipartite_graphs(draw):
    a = draw(st.integers(1, 5))
    b = draw(st.integers(1, 5))
    pairs = [(u, a + v) for u in range(a) for v in range(b)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True))
    return Graph.from_edges(a + b, chosen), (set(range(a)), set(range(a, a + b)))


@SETTINGS
@given(graphs())
def test_matching_is_maximum(g):
    m = max_matching(g)
    assert is_matching(g, m)
    assert len(m) == brute_matching_number(g)


@SETTINGS
@given(bipartite_graphs())
def test_koenig_equality(gs):
    g, sides = gs
    cover = koenig_min_cover(g, sides)
    assert is_vertex_cover(g, cover)
    assert len(cover) == matching_number(g)


@SETTINGS
@given(bipartite_graphs())
def test_degree1_free_cover_is_minimum(gs):
    g, _ = gs
    for comp in components(g):
        if len(comp) < 3:
            continue
        keep = set(comp)
        index = {v: i for i, v in enumerate(comp)}
        sub = Graph.from_edges(len(comp), [(index[u], index[v]) for u, v in g.edges if u in keep])
        cover = degree1_free_cover(sub, bipartition(sub))
        assert len(cover) == brute_min_cover_size(sub)
        assert all(sub.degree(v) != 1 for v in cover)


@SETTINGS
@given(st.lists(st.integers(1, 4), min_size=1, max_size=4))
def test_multipartite_roundtrip(sizes):
    g, st_ = realize_multipartite(sizes)
    found = detect_multipartite(g)
    assert found == st_
    assert mu_multipartite(found) == matching_number(g)


@SETTINGS
@given(st.data())
def test_conflict_structures(data):
    g = data.draw(graphs(max_n=7))
    inst = data.draw(instances(g))
    arcs = color_shift(g, inst.alpha, inst.beta)
    assert all(g.has_edge(u, v) and inst.beta[u] == inst.alpha[v] for u, v in arcs)
    total = sum(len(color_graph(g, inst.alpha, inst.beta, c).edges)
                for c in colors_used(inst.alpha, inst.beta))
    assert total == len(arcs)
    for v in range(g.n):
        free = free_colors(g, inst.lists, inst.alpha, inst.beta, v)
        blocked = {inst.alpha[u] for u in g.adj[v]} | {inst.beta[u] for u in g.adj[v]}
        assert free == {c for c in inst.lists[v] if c not in blocked}


@SETTINGS
@given(st.data())
def test_subcubic_plans(data):
    g = data.draw(graphs(max_n=6, max_degree=3))
    inst = data.draw(instances(g))
    res = plan_subcubic_result(inst)
    audit(res)
    walk = stitch(res.plan, inst)
    assert replay(g, inst.lists, inst.alpha, walk)[-1] == inst.beta
    assert bfs_distance(inst) <= len(walk) <= g.n + matching_number(g)


@SETTINGS
@given(st.data())
def test_multipartite_plans(data):
    sizes = data.draw(st.lists(st.integers(1, 3), min_size=1, max_size=3))
    g, _ = realize_multipartite(sizes)
    inst = data.draw(instances(g))
    res = plan_multipartite_result(inst)
    audit(res)
    walk = stitch(res.plan, inst)
    assert replay(g, inst.lists, inst.alpha, walk)[-1] == inst.beta
    assert bfs_distance(inst) <= len(walk) <= g.n + matching_number(g)


@SETTINGS
@given(st.data())
def test_instance_json_roundtrip(data):
    g = data.draw(graphs(max_n=6))
    inst = data.draw(instances(g))
    assert loads_instance(dumps_instance(inst)) == inst


@SETTINGS
@given(st.data())
def test_distance_symmetric(data):
    g = data.draw(graphs(max_n=5, max_degree=3))
    inst = data.draw(instances(g, palette_extra=0))
    assert bfs_distance(inst) == bfs_distance(inst.swapped())
