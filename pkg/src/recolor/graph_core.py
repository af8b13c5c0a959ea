"""Simple undirected graphs, maximum matchings and vertex covers.

Vertices are the integers ``0..n-1``.  Edges are stored as sorted pairs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import InternalInvariantError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        normed = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            normed.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        pairs = [tuple(e) for e in edges]
        seen = set()
        for u, v in pairs:
            key = _norm(u, v)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(pairs))

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def adj_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(x) for x in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(_component(self, 0)) == self.n


def _component(g: Graph, start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen: set[int] = set()
    out = []
    for v in range(g.n):
        if v not in seen:
            comp = _component(g, v)
            seen |= comp
            out.append(sorted(comp))
    return out


def bipartition(g: Graph) -> tuple[set[int], set[int]] | None:
    """Two-coloring of ``g`` (the side holding each component's smallest
    vertex comes first), or ``None`` if ``g`` has an odd cycle."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    left = {v for v in range(g.n) if side[v] == 0}
    return left, set(range(g.n)) - left


# -- matchings ---------------------------------------------------------------


def is_matching(g: Graph, matching: Iterable[Edge]) -> bool:
    used: set[int] = set()
    for u, v in matching:
        if not g.has_edge(u, v) or u in used or v in used:
            return False
        used.update((u, v))
    return True


def max_matching(g: Graph, initial: Iterable[Edge] = ()) -> frozenset[Edge]:
    """Maximum cardinality matching by Edmonds' blossom contraction.

    ``initial`` seeds the search with an existing matching of ``g``; the
    result then contains every vertex that ``initial`` covers, since
    augmenting paths never uncover a vertex.
    """
    n = g.n
    adj = g.adj
    match = [-1] * n
    for u, v in initial:
        if not g.has_edge(u, v) or match[u] != -1 or match[v] != -1:
            raise ValueError(f"initial edges are not a matching of the graph at {(u, v)}")
        match[u], match[v] = v, u

    def find_path(root: int) -> int:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return _augment(to, parent)
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    def _augment(v: int, parent: list[int]) -> int:
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v] = pv
            match[pv] = v
            v = nxt
        return 1

    for root in range(n):
        if match[root] == -1:
            find_path(root)
    return frozenset(_norm(u, match[u]) for u in range(n) if match[u] > u)


def matching_number(g: Graph) -> int:
    return len(max_matching(g))


# -- vertex covers -----------------------------------------------------------


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    s = set(cover)
    return all(u in s or v in s for u, v in g.edges)


def _koenig_oriented(g: Graph, left: set[int], right: set[int]) -> frozenset[int]:
    matching = max_matching(g)
    mate = {}
    for u, v in matching:
        mate[u], mate[v] = v, u
    # alternating reachability from unmatched left vertices
    reach = {v for v in left if v not in mate}
    queue = deque(sorted(reach))
    while queue:
        v = queue.popleft()
        if v in left:
            nxt = [u for u in g.adj[v] if mate.get(v) != u]
        else:
            nxt = [mate[v]] if v in mate else []
        for u in nxt:
            if u not in reach:
                reach.add(u)
                queue.append(u)
    return frozenset((left - reach) | (right & reach))


def koenig_min_cover(g: Graph, sides: tuple[Iterable[int], Iterable[int]]) -> frozenset[int]:
    """Minimum vertex cover of a bipartite graph via König's construction.

    Both orientations of the bipartition are tried and the lexicographically
    smaller sorted cover is returned, so the answer does not depend on the
    order the sides are passed in.
    """
    left, right = set(sides[0]), set(sides[1])
    if left & right:
        raise ValueError("bipartition sides overlap")
    for u, v in g.edges:
        if not ((u in left and v in right) or (u in right and v in left)):
            raise ValueError(f"edge {(u, v)} does not cross the bipartition")
    a = _koenig_oriented(g, left, right)
    b = _koenig_oriented(g, right, left)
    best = min(a, b, key=lambda s: (len(s), sorted(s)))
    if len(best) != matching_number(g) or not is_vertex_cover(g, best):
        raise InternalInvariantError("König cover does not match the matching number")
    return best


def degree1_free_cover(g: Graph, sides: tuple[Iterable[int], Iterable[int]] | None = None) -> frozenset[int]:
    """Minimum vertex cover of a connected bipartite graph on at least three
    vertices that avoids every vertex of degree 1.

    Starts from a König cover and swaps each degree-1 member for its only
    neighbor.
    """
    if g.n < 3:
        raise ValueError("need at least three vertices")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if sides is None:
        sides = bipartition(g)
        if sides is None:
            raise ValueError("graph is not bipartite")
    base = koenig_min_cover(g, sides)
    cover = set()
    for v in sorted(base):
        cover.add(g.adj[v][0] if g.degree(v) == 1 else v)
    if len(cover) != len(base) or not is_vertex_cover(g, cover):
        raise InternalInvariantError("degree-1 exchange broke the minimum cover")
    if any(g.degree(v) == 1 for v in cover):
        raise InternalInvariantError("degree-1 vertex survived the exchange")
    return frozenset(cover)


# -- complete multipartite structure -----------------------------------------


@dataclass(frozen=True)
class MultipartiteStructure:
    parts: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.parts)

    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]

    def part_of(self) -> dict[int, int]:
        return {v: i for i, part in enumerate(self.parts) for v in part}


def order_parts(parts: Iterable[Iterable[int]]) -> MultipartiteStructure:
    """Sort parts by decreasing size, ties by smallest vertex."""
    cleaned = [tuple(sorted(p)) for p in parts if p]
    cleaned.sort(key=lambda p: (-len(p), p[0]))
    return MultipartiteStructure(tuple(cleaned))


def detect_multipartite(g: Graph) -> MultipartiteStructure | None:
    """Parts of ``g`` if it is complete multipartite, else ``None``.

    ``g`` is complete multipartite exactly when non-adjacency is an
    equivalence relation; each class is a part.
    """
    assigned = [-1] * g.n
    parts: list[list[int]] = []
    for v in range(g.n):
        if assigned[v] != -1:
            continue
        part = [u for u in range(g.n) if u == v or not g.has_edge(u, v)]
        for u in part:
            if assigned[u] != -1:
                return None
            assigned[u] = len(parts)
        parts.append(part)
    part_of = assigned
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (part_of[u] != part_of[v]) != g.has_edge(u, v):
                return None
    return order_parts(parts)


def realize_multipartite(sizes: Iterable[int]) -> tuple[Graph, MultipartiteStructure]:
    """Complete multipartite graph with consecutive vertex blocks as parts."""
    parts = []
    start = 0
    for s in sizes:
        parts.append(list(range(start, start + s)))
        start += s
    edges = set()
    for i, p in enumerate(parts):
        for q in parts[i + 1:]:
            edges.update((u, v) for u in p for v in q)
    return Graph(start, frozenset(edges)), order_parts(parts)


def mu_multipartite(parts: MultipartiteStructure) -> int:
    if not parts.parts:
        return 0
    n = parts.n
    return min(n // 2, n - len(parts.parts[0]))


def restrict(g: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the kept vertices and the old-to-new index map."""
    gone = set(removed)
    kept = [v for v in range(g.n) if v not in gone]
    index = {old: new for new, old in enumerate(kept)}
    edges = frozenset(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return Graph(len(kept), edges), index
