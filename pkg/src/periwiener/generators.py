"""Deterministic constructors for the named graph families plus seeded
random trees and connected graphs.

Vertex numbering per family is fixed so golden tests stay stable:
paths and cycles number along the walk; stars put the center at 0;
double stars use centers 0 and 1, then the m leaves of 0, then the n
leaves of 1; caterpillars number the spine 0..s-1 and then append each
spine vertex's leaves in order; hypercubes index vertices so that
adjacency means "differs in exactly one bit".
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidCodeError, InvalidParameterError, TooLargeError
from .graphs import Graph, build_graph, cartesian_product, is_connected

MAX_HYPERCUBE_DIM = 16
_SAMPLER_ATTEMPTS = 1000


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(i, j) for j in range(1, n) for i in range(j)])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"path graph needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycle graph needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise InvalidParameterError(f"complete bipartite needs m, n >= 1, got ({m}, {n})")
    return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(n: int) -> Graph:
    """K_{1,n}: center 0 with n leaves."""
    return complete_bipartite(1, n)


def double_star(m: int, n: int) -> Graph:
    """Adjacent centers 0 and 1 carrying m and n pendant leaves."""
    if m < 1 or n < 1:
        raise InvalidParameterError(f"double star needs m, n >= 1, got ({m}, {n})")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(m)]
    edges += [(1, 2 + m + j) for j in range(n)]
    return build_graph(2 + m + n, edges)


def hypercube(n: int) -> Graph:
    """Q_n as the n-fold cartesian product of K_2."""
    if n < 1:
        raise InvalidParameterError(f"hypercube needs n >= 1, got {n}")
    if n > MAX_HYPERCUBE_DIM:
        raise TooLargeError(f"hypercube dimension capped at {MAX_HYPERCUBE_DIM}, got {n}")
    g = complete(2)
    for _ in range(n - 1):
        g = cartesian_product(g, complete(2))
    return g


@dataclass(frozen=True, slots=True)
class CaterpillarCode:
    """Per-spine-vertex leaf counts (c_1, ..., c_s); ends nonzero when s >= 2."""

    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) < 1:
            raise InvalidCodeError("code needs at least one spine vertex")
        if any(c < 0 for c in counts):
            raise InvalidCodeError(f"leaf counts must be >= 0, got {counts}")
        if len(counts) >= 2 and (counts[0] < 1 or counts[-1] < 1):
            raise InvalidCodeError(f"end counts must be >= 1, got {counts}")

    @property
    def spine_length(self) -> int:
        return len(self.counts)


def _as_code(code: CaterpillarCode | Sequence[int]) -> CaterpillarCode:
    return code if isinstance(code, CaterpillarCode) else CaterpillarCode(tuple(code))


def caterpillar(code: CaterpillarCode | Sequence[int]) -> Graph:
    """Tree with spine 0..s-1 and c_i leaves hung on spine vertex i."""
    code = _as_code(code)
    s = code.spine_length
    total = s + sum(code.counts)
    if total < 2:
        raise InvalidCodeError("caterpillar needs at least 2 vertices")
    edges = [(i, i + 1) for i in range(s - 1)]
    nxt = s
    for i, c in enumerate(code.counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return build_graph(total, edges)


def lobster(code: CaterpillarCode | Sequence[int], c: int) -> Graph:
    """Caterpillar with code (c_1, 0, c_3, ..., c_s) plus a K_{1,c} whose
    center is joined to spine vertex u_2.

    Requires s >= 3 so the added star leaves are peripheral.
    """
    code = _as_code(code)
    if code.spine_length < 3:
        raise InvalidCodeError(f"lobster needs spine length >= 3, got {code.spine_length}")
    if code.counts[1] != 0:
        raise InvalidCodeError(f"lobster needs c_2 = 0, got {code.counts[1]}")
    if c < 1:
        raise InvalidParameterError(f"lobster needs c >= 1, got {c}")
    base = caterpillar(code)
    center = base.n
    edges = list(base.edges())
    edges.append((1, center))
    edges += [(center, center + 1 + i) for i in range(c)]
    return build_graph(base.n + 1 + c, edges)


def rooted_depth2_tree(children_counts: Sequence[int]) -> Graph:
    """Root 0 with one child per entry; entry i carries that many leaf children.

    With at least two nonzero entries this is the generic diameter-4 tree
    rooted at its central vertex.
    """
    counts = [int(c) for c in children_counts]
    if len(counts) < 1 or any(c < 0 for c in counts):
        raise InvalidParameterError(f"bad children counts {children_counts}")
    edges = []
    nxt = 1 + len(counts)
    for i, c in enumerate(counts):
        edges.append((0, 1 + i))
        for _ in range(c):
            edges.append((1 + i, nxt))
            nxt += 1
    return build_graph(nxt, edges)


def _pruefer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        v = heapq.heappop(leaves)
        edges.append((v, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via Pruefer-sequence decoding."""
    if n < 2:
        raise InvalidParameterError(f"random tree needs n >= 2, got {n}")
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return build_graph(n, _pruefer_decode(seq, n))


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) conditioned on connectivity by bounded rejection sampling."""
    if n < 2:
        raise InvalidParameterError(f"random graph needs n >= 2, got {n}")
    if not 0 < p <= 1:
        raise InvalidParameterError(f"edge probability must be in (0, 1], got {p}")
    rng = random.Random(seed)
    for _ in range(_SAMPLER_ATTEMPTS):
        edges = [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p]
        g = build_graph(n, edges)
        if is_connected(g):
            return g
    raise InvalidParameterError(
        f"no connected sample in {_SAMPLER_ATTEMPTS} attempts (n={n}, p={p})"
    )
