"""Shared instances and brute-force references for the test suite."""

from __future__ import annotations

import itertools
import sys

import pytest

from recolor.coloring_model import Instance, make_lists
from recolor.graph_core import Graph, realize_multipartite

# orange, violet, strawberry, green
ORANGE, VIOLET, STRAWBERRY, GREEN = 0, 1, 2, 3


def paw_instance() -> Instance:
    """Triangle 1-2-3 with a pendant vertex 0 on vertex 1."""
    g = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    lists = make_lists([range(5)] * 4)
    alpha = (ORANGE, VIOLET, STRAWBERRY, GREEN)
    beta = (VIOLET, ORANGE, GREEN, VIOLET)
    return Instance(g, lists, alpha, beta)


def edge_swap_instance() -> Instance:
    g = Graph.from_edges(2, [(0, 1)])
    return Instance(g, make_lists([{1, 2, 3}] * 2), (1, 2), (2, 1))


def sweep_instance() -> Instance:
    """K_{4,4,3} where every reduction before the I3 sweep is blocked."""
    g, _ = realize_multipartite([4, 4, 3])
    lists = make_lists([range(10)] * g.n)
    alpha = (1, 1, 3, 3, 2, 2, 2, 2, 0, 0, 0)
    beta = (2, 2, 2, 2, 0, 0, 3, 3, 1, 1, 1)
    return Instance(g, lists, alpha, beta)


def double_pair_instance() -> Instance:
    """K_{2,2,2} with parts {0,2}, {1,3}, {4,5}; found by random search."""
    g, _ = realize_multipartite([2, 2, 2])
    perm = [0, 2, 1, 3, 4, 5]
    g = Graph(6, frozenset((perm[u], perm[v]) for u, v in g.edges))
    lists = make_lists([
        [0, 1, 2, 4, 5, 7], [0, 1, 4, 5, 6, 7], [0, 1, 2, 4, 5, 7],
        [0, 1, 4, 5, 6, 7], [0, 1, 3, 4, 5, 7], [0, 1, 3, 4, 5, 7],
    ])
    return Instance(g, lists, (1, 7, 4, 7, 0, 0), (0, 1, 0, 4, 7, 7))


def brute_matching_number(g: Graph) -> int:
    edges = g.sorted_edges()
    best = 0
    for k in range(1, g.n // 2 + 1):
        found = False
        for combo in itertools.combinations(edges, k):
            ends = [x for e in combo for x in e]
            if len(set(ends)) == len(ends):
                found = True
                break
        if not found:
            break
        best = k
    return best


def brute_min_cover_size(g: Graph) -> int:
    for k in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            s = set(combo)
            if all(u in s or v in s for u, v in g.edges):
                return k
    return g.n


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def paw():
    return paw_instance()


@pytest.fixture
def edge_swap():
    return edge_swap_instance()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
