"""Shared test helpers: independent oracles and instance builders."""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import strategies as st

from periwiener.graphs import Graph, build_graph


def floyd_warshall(g: Graph) -> list[list[float]]:
    """Independent all-pairs shortest paths (no BFS involved)."""
    inf = float("inf")
    n = g.n
    dist = [[inf] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
    for u, v in g.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def brute_isomorphic(a: Graph, b: Graph) -> bool:
    """Permutation search; fine for n <= 8."""
    if a.n != b.n or a.m != b.m:
        return False
    eb = set(b.edges())
    for perm in itertools.permutations(range(a.n)):
        if all(((perm[u], perm[v]) in eb or (perm[v], perm[u]) in eb) for u, v in a.edges()):
            return True
    return False


def fig2_tree() -> Graph:
    """Root 0 with children 1, 2, 3; vertex 4 hangs off 3."""
    return build_graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])


def random_connected(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree plus extra edges; connected by construction."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    for j in range(1, n):
        for i in range(j):
            if rng.random() < extra:
                edges.append((i, j))
    return build_graph(n, edges)


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 10):
    """Hypothesis strategy: spanning tree plus an arbitrary extra edge set."""
    n = draw(st.integers(min_n, max_n))
    edges = []
    for v in range(1, n):
        edges.append((draw(st.integers(0, v - 1)), v))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n))
    return build_graph(n, edges + extra)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
