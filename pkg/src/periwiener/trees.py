"""Tree-specific machinery: cut-counting formulas for the four indices and
the closed forms for stars, double stars, diameter-4 trees, caterpillars,
lobsters, and tree complements.

The closed_form_* functions evaluate the registered formulas verbatim, typos
and all; the *_pww companions give the desk-corrected exact values.  The
audit is what compares both against the brute-force indices.

Side convention for path cuts: x lies on the u side of the u-v path iff
d(x,v) = d(x,u) + d(u,v).  Endpoints count for their own side; vertices
strictly interior to the path belong to neither side.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InvalidCodeError, InvalidParameterError, NotATreeError
from .generators import CaterpillarCode, _as_code
from .graphs import DistanceMatrix, Graph, complement, distance_matrix, is_connected
from .indices import peripheral_hyper_wiener


@dataclass(frozen=True, slots=True)
class TreeView:
    """A tree with its metric, a rooted traversal order, and vertex flags."""

    graph: Graph
    dm: DistanceMatrix
    order: tuple[int, ...]
    parent: tuple[int, ...]
    periphery: frozenset[int]
    pendants: frozenset[int]


def as_tree(g: Graph, dm: DistanceMatrix | None = None) -> TreeView:
    """Check acyclicity + connectivity and set up the rooted view."""
    if dm is None:
        dm = distance_matrix(g)  # raises NotConnectedError when disconnected
    if g.m != g.n - 1:
        raise NotATreeError(f"m = {g.m} but a tree on {g.n} vertices has {g.n - 1} edges")
    # BFS from 0 gives a parent array and a preorder usable for subtree sums.
    parent = [-1] * g.n
    order = [0]
    seen = bytearray(g.n)
    seen[0] = 1
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = 1
                parent[v] = u
                order.append(v)
    return TreeView(
        graph=g,
        dm=dm,
        order=tuple(order),
        parent=tuple(parent),
        periphery=dm.periphery,
        pendants=frozenset(v for v in range(g.n) if g.degree(v) == 1),
    )


def _subtree_counts(t: TreeView, marked: frozenset[int] | None) -> list[int]:
    """Per-vertex count of marked vertices in the subtree below it
    (all vertices when marked is None)."""
    if marked is None:
        size = [1] * t.graph.n
    else:
        size = [1 if v in marked else 0 for v in range(t.graph.n)]
    for v in reversed(t.order[1:]):
        size[t.parent[v]] += size[v]
    return size


def wiener_by_edge_cuts(t: TreeView) -> int:
    """W(T) as the sum over edges of the two side sizes multiplied."""
    n = t.graph.n
    size = _subtree_counts(t, None)
    return sum(size[v] * (n - size[v]) for v in t.order[1:])


def peripheral_wiener_by_edge_cuts(t: TreeView) -> int:
    """PW(T) as the sum over edges of the two peripheral side counts."""
    k = len(t.periphery)
    size = _subtree_counts(t, t.periphery)
    return sum(size[v] * (k - size[v]) for v in t.order[1:])


def _path_cut_sum(t: TreeView, candidates: tuple[int, ...]) -> int:
    """Sum over unordered vertex pairs of (u-side count) * (v-side count),
    counting only `candidates` as side members."""
    dist = t.dm.dist
    n = t.graph.n
    total = 0
    for u in range(n):
        du = dist[u]
        for v in range(u + 1, n):
            dv = dist[v]
            duv = du[v]
            u_side = 0
            v_side = 0
            for x in candidates:
                if dv[x] == du[x] + duv:
                    u_side += 1
                elif du[x] == dv[x] + duv:
                    v_side += 1
            total += u_side * v_side
    return total


def hyper_wiener_by_path_cuts(t: TreeView) -> int:
    """WW(T) as the sum over vertex pairs of the two side sizes multiplied."""
    return _path_cut_sum(t, tuple(range(t.graph.n)))


def peripheral_hyper_wiener_by_path_cuts(t: TreeView) -> int:
    """PWW(T) with sides counting peripheral vertices only."""
    return _path_cut_sum(t, tuple(sorted(t.periphery)))


# --- closed forms (evaluated verbatim as registered) -----------------------


def closed_form_star(n: int) -> int:
    """Registered diameter-2 (star K_{1,n}) closed form: 3*C(n,2)."""
    if n < 2:
        raise InvalidParameterError(f"star closed form needs n >= 2 leaves, got {n}")
    return 3 * comb(n, 2)


def closed_form_double_star(m: int, n: int) -> int:
    """Registered double-star closed form, verbatim: 6mn + 3m + 3n."""
    if m < 1 or n < 1:
        raise InvalidParameterError(f"double star needs m, n >= 1, got ({m}, {n})")
    return 6 * m * n + 3 * m + 3 * n


def double_star_pww(m: int, n: int) -> int:
    """Exact PWW of the double star S_{m,n}: 6mn + 3*C(m,2) + 3*C(n,2)."""
    if m < 1 or n < 1:
        raise InvalidParameterError(f"double star needs m, n >= 1, got ({m}, {n})")
    return 6 * m * n + 3 * comb(m, 2) + 3 * comb(n, 2)


def closed_form_diam4(children_counts: list[int]) -> int:
    """Registered diameter-4 closed form: 10*sum_{i<j} c_i c_j + 3*sum C(c_i,2)."""
    counts = [int(c) for c in children_counts]
    if sum(1 for c in counts if c >= 1) < 2:
        raise InvalidParameterError(
            f"diameter-4 tree needs at least two nonempty child sets, got {counts}"
        )
    cross = sum(
        counts[i] * counts[j]
        for i in range(len(counts))
        for j in range(i + 1, len(counts))
    )
    return 10 * cross + 3 * sum(comb(c, 2) for c in counts)


def closed_form_caterpillar(code: CaterpillarCode | tuple[int, ...]) -> int:
    """Registered caterpillar closed form:
    3*C(c_1,2) + 3*C(c_s,2) + (c_1*c_s/2)(s+1)(s+2)."""
    code = _as_code(code)
    s = code.spine_length
    if s < 2:
        raise InvalidCodeError(f"caterpillar closed form needs spine length >= 2, got {s}")
    c1, cs = code.counts[0], code.counts[-1]
    tail = c1 * cs * (s + 1) * (s + 2)
    assert tail % 2 == 0
    return 3 * comb(c1, 2) + 3 * comb(cs, 2) + tail // 2


def closed_form_lobster(code: CaterpillarCode | tuple[int, ...], c: int) -> int:
    """Registered lobster closed form, verbatim:
    3C(c_1,2) + 3C(c_s,2) + 3C(c,2) + 10*c_1*c + c_s(c_1+c)(s+1)(s+2)."""
    code = _as_code(code)
    _check_lobster_params(code, c)
    s = code.spine_length
    c1, cs = code.counts[0], code.counts[-1]
    return (
        3 * comb(c1, 2)
        + 3 * comb(cs, 2)
        + 3 * comb(c, 2)
        + 10 * c1 * c
        + cs * (c1 + c) * (s + 1) * (s + 2)
    )


def lobster_pww(code: CaterpillarCode | tuple[int, ...], c: int) -> int:
    """Exact PWW of the lobster: same as the registered form but with the
    final term halved."""
    code = _as_code(code)
    _check_lobster_params(code, c)
    s = code.spine_length
    c1, cs = code.counts[0], code.counts[-1]
    tail = cs * (c1 + c) * (s + 1) * (s + 2)
    assert tail % 2 == 0
    return 3 * comb(c1, 2) + 3 * comb(cs, 2) + 3 * comb(c, 2) + 10 * c1 * c + tail // 2


def _check_lobster_params(code: CaterpillarCode, c: int) -> None:
    if code.spine_length < 3:
        raise InvalidCodeError(f"lobster needs spine length >= 3, got {code.spine_length}")
    if code.counts[1] != 0:
        raise InvalidCodeError(f"lobster needs c_2 = 0, got {code.counts[1]}")
    if c < 1:
        raise InvalidParameterError(f"lobster needs c >= 1, got {c}")


def tree_pww_bounds(d: int, k: int) -> tuple[int, int]:
    """Registered tree bounds, verbatim:
    k*C(d+2k-3, 2) <= PWW(T) <= 4*C(d+1, 2)*C(k, 2)."""
    if d < 1 or k < 2:
        raise InvalidParameterError(f"bounds need d >= 1 and k >= 2, got ({d}, {k})")
    return k * comb(d + 2 * k - 3, 2), 4 * comb(d + 1, 2) * comb(k, 2)


def complement_tree_pww(t: TreeView) -> int | None:
    """PWW of the tree's complement, or None when the complement is
    disconnected (stars, P_2, P_3)."""
    comp = complement(t.graph)
    if not is_connected(comp) or comp.n < 2:
        return None
    return peripheral_hyper_wiener(distance_matrix(comp))
