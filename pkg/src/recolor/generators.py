"""Seeded random instances for testing and sweeps."""

from __future__ import annotations

import random

from .coloring_model import Coloring, Instance, Lists, make_lists
from .graph_core import Graph, realize_multipartite


def gen_subcubic(n: int, seed: int, keep: float = 1.0) -> Graph:
    """Random graph of maximum degree 3.

    Three stubs per vertex are shuffled and paired; pairs forming a loop or
    a repeated edge are rejected.  Each surviving edge is then kept with
    probability ``keep``.
    """
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(3)]
    rng.shuffle(stubs)
    edges = set()
    for i in range(0, len(stubs) - 1, 2):
        u, v = stubs[i], stubs[i + 1]
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        if e in edges:
            continue
        if keep >= 1.0 or rng.random() < keep:
            edges.add(e)
    g = Graph(n, frozenset(edges))
    assert g.max_degree() <= 3
    return g


def gen_multipartite(parts: list[int], seed: int | None = None) -> Graph:
    """Complete multipartite graph with the given part sizes.

    Without a seed the parts are consecutive index blocks; with one the
    vertex labels are shuffled.
    """
    if not parts:
        raise ValueError("need at least one part")
    g, _ = realize_multipartite(parts)
    if seed is None:
        return g
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return Graph(g.n, frozenset((perm[u], perm[v]) for u, v in g.edges))


def gen_lists(g: Graph, extra: int, seed: int, palette: int | None = None) -> Lists:
    """Lists with exactly d(v) + 2 + extra colors drawn from ``range(palette)``."""
    if extra < 0:
        raise ValueError("extra must be non-negative")
    rng = random.Random(seed)
    need = g.max_degree() + 2 + extra
    palette = max(palette or need + 1, need)
    colors = list(range(palette))
    return make_lists(rng.sample(colors, g.degree(v) + 2 + extra) for v in range(g.n))


def gen_coloring(g: Graph, lists: Lists, seed: int, randomize: bool = False) -> Coloring:
    """Greedy proper list coloring in a seeded random vertex order.

    Each vertex takes the smallest color its colored neighbours leave free
    (or a random one when ``randomize``).  Needs |L(v)| > d(v).
    """
    rng = random.Random(seed)
    order = list(range(g.n))
    rng.shuffle(order)
    col: list[int | None] = [None] * g.n
    for v in order:
        taken = {col[u] for u in g.adj[v]}
        options = sorted(set(lists[v]) - taken)
        if not options:
            raise ValueError(f"vertex {v} has no color left; lists too short")
        col[v] = rng.choice(options) if randomize else options[0]
    return tuple(col)  # type: ignore[arg-type]


def gen_instance(g: Graph, seed: int, extra: int = 0, palette: int | None = None) -> Instance:
    """Lists plus two independently drawn random colorings."""
    rng = random.Random(seed)
    lists = gen_lists(g, extra, rng.randrange(2**32), palette)
    alpha = gen_coloring(g, lists, rng.randrange(2**32), randomize=True)
    beta = gen_coloring(g, lists, rng.randrange(2**32), randomize=True)
    return Instance(g, lists, alpha, beta)


def part_profiles(max_n: int, min_n: int = 1) -> list[list[int]]:
    """All integer partitions with total in ``min_n..max_n`` (parts descending)."""
    out = []

    def rec(left: int, cap: int, acc: list[int]) -> None:
        if left == 0:
            out.append(list(acc))
            return
        for p in range(min(left, cap), 0, -1):
            acc.append(p)
            rec(left - p, p, acc)
            acc.pop()

    for n in range(min_n, max_n + 1):
        rec(n, n, [])
    return out


def gen_clustered_coloring(parts: list[list[int]], palette: int, seed: int) -> Coloring:
    """Proper coloring of a complete multipartite graph that reuses colors
    heavily inside each part.

    Every part gets its own disjoint block of at most half its size (rounded
    up) colors from ``range(palette)``; vertices pick from their block.
    """
    if palette < len(parts):
        raise ValueError("palette smaller than the number of parts")
    rng = random.Random(seed)
    colors = list(range(palette))
    rng.shuffle(colors)
    col = {}
    pos = 0
    for i, part in enumerate(parts):
        left = palette - pos - (len(parts) - i - 1)
        size = rng.randint(1, max(1, min(left, (len(part) + 1) // 2)))
        block = colors[pos:pos + size]
        pos += size
        for v in part:
            col[v] = rng.choice(block)
    return tuple(col[v] for v in range(len(col)))


def gen_clustered_instance(sizes: list[int], seed: int) -> Instance:
    """Multipartite instance with clustered colorings and uniform lists of
    size max degree + 2.  These reach the deeper multipartite reductions far
    more often than greedy colorings do."""
    rng = random.Random(seed)
    g, st = realize_multipartite(sizes)
    k = g.max_degree() + 2
    lists = make_lists([range(k)] * g.n)
    palette = rng.randint(len(st.parts), k)
    alpha = gen_clustered_coloring(st.parts, palette, rng.randrange(2**32))
    beta = gen_clustered_coloring(st.parts, palette, rng.randrange(2**32))
    return Instance(g, lists, alpha, beta)
