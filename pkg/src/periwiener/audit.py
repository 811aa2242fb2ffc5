"""Registry of quantitative claims about the six indices, and the engine
that evaluates every claim against brute-force oracles over exhaustive,
family, and seeded-random instance suites.

Each claim is pre-registered with the status its statement is expected to
earn ("holds", or "discrepancy" for statements whose stated form fails desk
checks).  A run *matches* when every final status equals its registration;
any flip is the failure signal.  Desk-corrected variants of the discrepancy
formulas ride along as shadow claims, outside the registry proper.
"""

from __future__ import annotations

import json
import os
import random
from bisect import insort
from dataclasses import dataclass
from math import comb
from multiprocessing import get_context
from typing import Callable, Iterable, Iterator

from . import corpus, generators, trees
from .errors import InvalidParameterError
from .graphs import Graph, build_graph, cartesian_product, distance_matrix
from .graphio import write_graph6
from .indices import (
    index_vector,
    peripheral_distance_number,
    peripheral_hyper_wiener,
    peripheral_wiener,
)

DEFAULT_SEED = 1729

EXPECT_HOLDS = "holds"
EXPECT_DISCREPANCY = "discrepancy"

STATUS_HOLDS = "holds"
STATUS_VIOLATED = "violated"
STATUS_SKIPPED = "skipped"

TREE_SUITE_MAX_N = 10
RANDOM_TREE_MAX_N = 40
FACTOR_MAX_N = 5
RANDOM_FACTOR_MAX_N = 6
FAMILY_MAX = 6
COMPLETE_MAX = 8
HYPERCUBE_MAX = 6
CATERPILLAR_SPINE_MAX = 6
CATERPILLAR_LEAF_MAX = 4
DIAM4_CHILD_MAX = 4
DIAM4_TUPLE_MAX = 4

_MAX_WITNESSES = 10
_CORPUS_CHUNK_BITS = 15

_NA = object()


@dataclass(frozen=True, slots=True)
class Budget:
    """Suite-size knobs: exhaustive-corpus ceiling, random trial count,
    seed, and worker count (0 = one worker per CPU)."""

    max_n: int = 7
    trials: int = 1000
    seed: int = DEFAULT_SEED
    threads: int = 0

    def __post_init__(self):
        if not 2 <= self.max_n <= 8:
            raise InvalidParameterError(f"max_n must be in 2..8, got {self.max_n}")
        if self.trials < 0:
            raise InvalidParameterError(f"trials must be >= 0, got {self.trials}")

    def worker_count(self) -> int:
        return self.threads if self.threads > 0 else (os.cpu_count() or 1)


@dataclass(frozen=True, slots=True)
class Claim:
    """One registered statement: stable id, readable statement text,
    evaluation suite, and the pre-registered expected status."""

    id: str
    description: str
    anchor: str
    suite: str
    expected: str
    shadow: bool = False


@dataclass(slots=True)
class ClaimResult:
    id: str
    description: str
    anchor: str
    suite: str
    expected: str
    status: str
    instances_tested: int
    violations: int
    witnesses: list[dict]
    note: str = ""

    @property
    def matched(self) -> bool:
        if self.expected == EXPECT_HOLDS:
            return self.status == STATUS_HOLDS
        return self.status == STATUS_VIOLATED


def fig2_tree() -> Graph:
    """The 5-vertex tree with root 0, children 1,2,3 and 3's child 4."""
    return build_graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])


def hypercube_series_value(n: int) -> int:
    """Registered hypercube closed form: sum_{i=1..n} 3^(n-i) * 2^(n+i-2)."""
    return sum(3 ** (n - i) * 2 ** (n + i - 2) for i in range(1, n + 1))


def hypercube_pww(n: int) -> int:
    """Desk-corrected hypercube closed form: n(n+3)4^(n-2)."""
    if n < 2:
        raise InvalidParameterError(f"needs n >= 2, got {n}")
    val = n * (n + 3) * 4 ** (n - 2)
    assert val == int(val)
    return int(val)


# --------------------------------------------------------------------------
# claim registry
# --------------------------------------------------------------------------


def register_claims() -> list[Claim]:
    """The full registry, in fixed order."""
    c = Claim
    return [
        c("P1-1", "Closed form for PWW of complete graphs.",
          "PWW(K_n) = C(n,2)", "family", EXPECT_HOLDS),
        c("P1-2", "Closed form for PWW of stars.",
          "PWW(K_{1,n}) = 3*C(n,2) for n >= 2", "family", EXPECT_HOLDS),
        c("P1-3", "Closed form for PWW of complete bipartite graphs.",
          "PWW(K_{m,n}) = 3*C(n,2) + 3*C(m,2) + m*n for n >= m >= 2", "family", EXPECT_HOLDS),
        c("P1-4", "Lower bound C(k,2) with equality exactly on complete graphs.",
          "PWW(G) >= C(k,2), equality iff G = K_k", "corpus", EXPECT_HOLDS),
        c("HASSE-1", "Peripheral Wiener never exceeds Wiener.",
          "PW(G) <= W(G)", "corpus", EXPECT_HOLDS),
        c("HASSE-2", "Peripheral Wiener never exceeds peripheral hyper-Wiener.",
          "PW(G) <= PWW(G)", "corpus", EXPECT_HOLDS),
        c("HASSE-3", "Peripheral hyper-Wiener never exceeds hyper-Wiener.",
          "PWW(G) <= WW(G)", "corpus", EXPECT_HOLDS),
        c("HASSE-4", "Wiener never exceeds hyper-Wiener.",
          "W(G) <= WW(G)", "corpus", EXPECT_HOLDS),
        c("EQ-COMPLETE", "All four indices coincide exactly on complete graphs.",
          "W = PW = WW = PWW iff G is complete", "corpus", EXPECT_HOLDS),
        c("EQ-P2", "Triple equality chains characterize the single edge.",
          "PWW = WW = TWW iff PW = W = TW iff G = P_2", "corpus", EXPECT_HOLDS),
        c("INCOMP-W-PWW", "W and PWW are incomparable in general.",
          "W(P_3) > PWW(P_3); W(K_{1,4}) < PWW(K_{1,4}); W(P_2) = PWW(P_2)",
          "fixed", EXPECT_HOLDS),
        c("T-BOUNDS", "PWW sandwiched between WW-derived bounds.",
          "WW - (d(d-1)/2)(C(n,2)-C(k,2)) <= PWW <= WW - C(n,2) + C(k,2)",
          "corpus", EXPECT_HOLDS),
        c("C-DIAM2", "At diameter 2 the upper WW-derived bound is exact.",
          "diam = 2 implies PWW = WW - C(n,2) + C(k,2)", "corpus", EXPECT_HOLDS),
        c("T-DIAM2", "Diameter-2 closed form from order, size, periphery.",
          "diam = 2 implies PWW = 2*C(n,2) + C(k,2) - 2m", "corpus", EXPECT_HOLDS),
        c("FIG2-NONCONVERSE", "The diameter-2 formula value can occur without diameter 2.",
          "a diameter-3 tree has PWW = 15 = 2*C(5,2) + C(3,2) - 2*4", "fixed", EXPECT_HOLDS),
        c("T-PW-D3", "PW bounds for diameter >= 3 from order, size, diameter, k.",
          "d*ceil(k/2) - (d-3)(C(n,2)-C(k,2)) - m <= PW <= "
          "(d-1)C(n,2) + (d+1)C(k,2) - (d-2)m - (d-1)ceil(k/2)", "corpus", EXPECT_HOLDS),
        c("T-PWW-D3", "PWW bounds for diameter >= 3 from order, size, diameter, k.",
          "(d(d+1)/2)ceil(k/2) + ((6-d(d-1))/2)(C(n,2)-C(k,2)) - 2m <= PWW <= "
          "((d(d-1)-2)/2)C(n,2) + ((d(d+1)+2)/2)C(k,2) - ((2-d(d-1))/2)m - (d(d-1)/2)ceil(k/2)",
          "corpus", EXPECT_HOLDS),
        c("L-PROD-DIST", "Distances in a cartesian product add coordinatewise.",
          "d((a,x),(b,y) | GxH) = d(a,b|G) + d(x,y|H)", "products", EXPECT_HOLDS),
        c("C-PROD-PERI", "Periphery of a product is the product of peripheries.",
          "Peri(GxH) = Peri(G) x Peri(H)", "products", EXPECT_HOLDS),
        c("T-PW-PROD", "PW of a product from factor PW values and periphery sizes.",
          "PW(G1xG2) = k2^2*PW(G1) + k1^2*PW(G2)", "products", EXPECT_HOLDS),
        c("T-PWW-PROD", "PWW of a product gains a PW cross term.",
          "PWW(G1xG2) = k2^2*PWW(G1) + k1^2*PWW(G2) + 2*PW(G1)*PW(G2)",
          "products", EXPECT_HOLDS),
        c("C-HYPERCUBE", "Registered hypercube closed form (fails from Q_3 on).",
          "PWW(Q_n) = sum_{i=1..n} 3^(n-i) * 2^(n+i-2)", "family", EXPECT_DISCREPANCY),
        c("T-PW-TREE", "Edge-cut formula for the peripheral Wiener of a tree.",
          "PW(T) = sum over edges of a1(e)*a2(e)", "trees", EXPECT_HOLDS),
        c("T-PWW-TREE", "Path-cut formula for the peripheral hyper-Wiener of a tree.",
          "PWW(T) = sum over vertex pairs of a1(pi_uv)*a2(pi_uv)", "trees", EXPECT_HOLDS),
        c("T-TREE-BOUNDS-LO", "Registered tree lower bound (fails already on P_2).",
          "k*C(d+2k-3,2) <= PWW(T)", "trees", EXPECT_DISCREPANCY),
        c("T-TREE-BOUNDS-HI", "Registered tree upper bound (valid, loose by 4x).",
          "PWW(T) <= 4*C(d+1,2)*C(k,2)", "trees", EXPECT_HOLDS),
        c("T-STAR", "Diameter-2 trees are stars with a closed form.",
          "PWW(star on n+1 vertices) = 3*C(n,2)", "family", EXPECT_HOLDS),
        c("T-DSTAR", "Registered double-star closed form (wrong linear terms).",
          "PWW(S_{m,n}) = 6mn + 3m + 3n", "family", EXPECT_DISCREPANCY),
        c("P-DIAM4", "Diameter-4 closed form over grandchild sets.",
          "PWW = 10*sum_{i<j}|C_i||C_j| + 3*sum_i C(|C_i|,2)", "family", EXPECT_HOLDS),
        c("L-DIAM-COMP", "Large diameter forces a small-diameter connected complement.",
          "diam(G) >= 4 implies complement(G) connected with diam <= 2",
          "corpus", EXPECT_HOLDS),
        c("T-COMP-TREE", "Dichotomy for PWW of a tree's connected complement.",
          "PWW(comp(T)) = 6 iff diam(T) = 3; = (n^2+3n-4)/2 iff diam(T) > 3",
          "trees", EXPECT_HOLDS),
        c("T-CATERPILLAR", "Caterpillar closed form from the code ends and spine length.",
          "PWW(C) = 3*C(c_1,2) + 3*C(c_s,2) + (c_1*c_s/2)(s+1)(s+2)",
          "family", EXPECT_HOLDS),
        c("T-LOBSTER", "Registered lobster closed form (final term lacks a half).",
          "PWW(T) = 3C(c_1,2) + 3C(c_s,2) + 3C(c,2) + 10*c_1*c + c_s(c_1+c)(s+1)(s+2)",
          "family", EXPECT_DISCREPANCY),
        c("DEF-PWW-ALT", "Vertex-sum rewriting of PWW (squares a sum; wrong in general).",
          "(1/2) sum_{pairs in Peri} (d + d^2) = (1/4) sum_{v in Peri} (d_P(v) + d_P(v)^2)",
          "corpus6", EXPECT_DISCREPANCY),
        c("OBS-NO-2-5", "Observed value gaps: PWW never hits 2 or 5.",
          "no connected graph attains PWW = 2 or PWW = 5", "corpus", EXPECT_HOLDS),
    ]


def register_shadow_claims() -> list[Claim]:
    """Desk-corrected companions to the discrepancy claims."""
    c = Claim
    return [
        c("S-DSTAR-FIX", "Corrected double-star closed form.",
          "PWW(S_{m,n}) = 6mn + 3*C(m,2) + 3*C(n,2)", "family", EXPECT_HOLDS, shadow=True),
        c("S-LOBSTER-FIX", "Corrected lobster closed form (final term halved).",
          "PWW(T) = 3C(c_1,2) + 3C(c_s,2) + 3C(c,2) + 10*c_1*c + (c_s(c_1+c)/2)(s+1)(s+2)",
          "family", EXPECT_HOLDS, shadow=True),
        c("S-HYPERCUBE-FIX", "Corrected hypercube closed form.",
          "PWW(Q_n) = n(n+3)*4^(n-2)", "family", EXPECT_HOLDS, shadow=True),
        c("S-TREE-UB-TIGHT", "Tree upper bound without the factor 4 (tight on stars).",
          "PWW(T) <= C(d+1,2)*C(k,2)", "trees", EXPECT_HOLDS, shadow=True),
    ]


def claims_by_id() -> dict[str, Claim]:
    out = {}
    for claim in register_claims() + register_shadow_claims():
        out[claim.id] = claim
    return out


# --------------------------------------------------------------------------
# corpus-suite checks: fn(n, masks, profile) -> None | _NA | (observed, expected)
# --------------------------------------------------------------------------


def _chk_hasse1(n, masks, p):
    if p.pw <= p.w:
        return None
    return (f"PW={p.pw}", f"PW <= W={p.w}")


def _chk_hasse2(n, masks, p):
    if p.pw <= p.pww:
        return None
    return (f"PW={p.pw}", f"PW <= PWW={p.pww}")


def _chk_hasse3(n, masks, p):
    if p.pww <= p.ww:
        return None
    return (f"PWW={p.pww}", f"PWW <= WW={p.ww}")


def _chk_hasse4(n, masks, p):
    if p.w <= p.ww:
        return None
    return (f"W={p.w}", f"W <= WW={p.ww}")


def _chk_p1_4(n, masks, p):
    bound = comb(p.k, 2)
    if p.pww < bound:
        return (f"PWW={p.pww}", f"PWW >= C(k,2) = {bound}")
    complete = p.m == comb(n, 2)
    if (p.pww == bound) != complete:
        return (f"PWW={p.pww}, C(k,2)={bound}, complete={complete}",
                "equality exactly on complete graphs")
    return None


def _chk_eq_complete(n, masks, p):
    complete = p.m == comb(n, 2)
    all_equal = p.w == p.pw == p.ww == p.pww
    if complete != all_equal:
        return (f"W={p.w} PW={p.pw} WW={p.ww} PWW={p.pww}, complete={complete}",
                "four-way equality iff complete")
    return None


def _chk_eq_p2(n, masks, p):
    a = p.pww == p.ww == p.tww
    b = p.pw == p.w == p.tw
    is_p2 = n == 2
    if not (a == b == is_p2):
        return (f"PWW=WW=TWW is {a}, PW=W=TW is {b}, n={n}",
                "both equality chains iff the graph is P_2")
    return None


def _chk_t_bounds(n, masks, p):
    d = p.diameter
    gap = comb(n, 2) - comb(p.k, 2)
    lo = p.ww - (d * (d - 1) // 2) * gap
    hi = p.ww - gap
    if lo <= p.pww <= hi:
        return None
    return (f"PWW={p.pww}", f"{lo} <= PWW <= {hi}")


def _chk_c_diam2(n, masks, p):
    if p.diameter != 2:
        return _NA
    want = p.ww - comb(n, 2) + comb(p.k, 2)
    if p.pww == want:
        return None
    return (f"PWW={p.pww}", f"WW - C(n,2) + C(k,2) = {want}")


def _chk_t_diam2(n, masks, p):
    if p.diameter != 2:
        return _NA
    want = 2 * comb(n, 2) + comb(p.k, 2) - 2 * p.m
    if p.pww == want:
        return None
    return (f"PWW={p.pww}", f"2*C(n,2) + C(k,2) - 2m = {want}")


def _chk_pw_d3(n, masks, p):
    d = p.diameter
    if d < 3:
        return _NA
    half_k = (p.k + 1) // 2
    gap = comb(n, 2) - comb(p.k, 2)
    lo = d * half_k - (d - 3) * gap - p.m
    hi = (d - 1) * comb(n, 2) + (d + 1) * comb(p.k, 2) - (d - 2) * p.m - (d - 1) * half_k
    if lo <= p.pw <= hi:
        return None
    return (f"PW={p.pw}", f"{lo} <= PW <= {hi}")


def _chk_pww_d3(n, masks, p):
    d = p.diameter
    if d < 3:
        return _NA
    half_k = (p.k + 1) // 2
    s = d * (d - 1) // 2
    t = d * (d + 1) // 2
    gap = comb(n, 2) - comb(p.k, 2)
    lo = t * half_k + (3 - s) * gap - 2 * p.m
    hi = (s - 1) * comb(n, 2) + (t + 1) * comb(p.k, 2) - (1 - s) * p.m - s * half_k
    if lo <= p.pww <= hi:
        return None
    return (f"PWW={p.pww}", f"{lo} <= PWW <= {hi}")


def _chk_diam_comp(n, masks, p):
    if p.diameter < 4:
        return _NA
    cp = corpus.complement_profile(n, masks)
    if cp is None:
        return ("complement disconnected", "connected complement with diam <= 2")
    if cp.diameter > 2:
        return (f"diam(complement)={cp.diameter}", "diam(complement) <= 2")
    return None


def _chk_obs_no_2_5(n, masks, p):
    if p.pww in (2, 5):
        return (f"PWW={p.pww}", "PWW never 2 or 5")
    return None


_CORPUS_CHECKS: dict[str, Callable] = {
    "P1-4": _chk_p1_4,
    "HASSE-1": _chk_hasse1,
    "HASSE-2": _chk_hasse2,
    "HASSE-3": _chk_hasse3,
    "HASSE-4": _chk_hasse4,
    "EQ-COMPLETE": _chk_eq_complete,
    "EQ-P2": _chk_eq_p2,
    "T-BOUNDS": _chk_t_bounds,
    "C-DIAM2": _chk_c_diam2,
    "T-DIAM2": _chk_t_diam2,
    "T-PW-D3": _chk_pw_d3,
    "T-PWW-D3": _chk_pww_d3,
    "L-DIAM-COMP": _chk_diam_comp,
    "OBS-NO-2-5": _chk_obs_no_2_5,
}


# --------------------------------------------------------------------------
# corpus6-suite checks: fn(graph, dm) -> None | _NA | (observed, expected)
# --------------------------------------------------------------------------


def _chk_def_pww_alt(graph, dm):
    pair_form = peripheral_hyper_wiener(dm)
    vertex_sum = 0
    for v in dm.periphery:
        dp = peripheral_distance_number(dm, v)
        vertex_sum += dp + dp * dp
    # compare 4 * pair form against the raw vertex sum to stay in integers
    if 4 * pair_form == vertex_sum:
        return None
    return (f"pair form = {pair_form}", f"vertex form = {vertex_sum}/4")


_CORPUS6_CHECKS: dict[str, Callable] = {
    "DEF-PWW-ALT": _chk_def_pww_alt,
}


# --------------------------------------------------------------------------
# tree-suite checks: fn(ctx) -> None | _NA | (observed, expected)
# --------------------------------------------------------------------------


@dataclass(slots=True)
class _TreeCtx:
    graph: Graph
    dm: object
    iv: object
    tv: object


def _chk_pw_tree(ctx):
    got = trees.peripheral_wiener_by_edge_cuts(ctx.tv)
    if got == ctx.iv.pw:
        return None
    return (f"edge-cut sum = {got}", f"PW = {ctx.iv.pw}")


def _chk_pww_tree(ctx):
    got = trees.peripheral_hyper_wiener_by_path_cuts(ctx.tv)
    if got == ctx.iv.pww:
        return None
    return (f"path-cut sum = {got}", f"PWW = {ctx.iv.pww}")


def _chk_tree_lo(ctx):
    lo, _ = trees.tree_pww_bounds(ctx.dm.diameter, ctx.iv.k)
    if ctx.iv.pww >= lo:
        return None
    return (f"PWW={ctx.iv.pww}", f"PWW >= k*C(d+2k-3,2) = {lo}")


def _chk_tree_hi(ctx):
    _, hi = trees.tree_pww_bounds(ctx.dm.diameter, ctx.iv.k)
    if ctx.iv.pww <= hi:
        return None
    return (f"PWW={ctx.iv.pww}", f"PWW <= 4*C(d+1,2)*C(k,2) = {hi}")


def _chk_tree_hi_tight(ctx):
    hi = comb(ctx.dm.diameter + 1, 2) * comb(ctx.iv.k, 2)
    if ctx.iv.pww <= hi:
        return None
    return (f"PWW={ctx.iv.pww}", f"PWW <= C(d+1,2)*C(k,2) = {hi}")


def _chk_comp_tree(ctx):
    cpww = trees.complement_tree_pww(ctx.tv)
    if cpww is None:
        return _NA
    n = ctx.graph.n
    d = ctx.dm.diameter
    big = (n * n + 3 * n - 4) // 2
    if d == 3:
        ok = cpww == 6
    elif d > 3:
        ok = cpww == big
    else:
        ok = False  # connected complement with diam(T) <= 2 would break the dichotomy
    # both directions: the observed value must also pick out the right case
    if ok and cpww == 6 and d != 3:
        ok = False
    if ok and cpww == big and d <= 3:
        ok = False
    if ok:
        return None
    return (f"PWW(complement)={cpww}, diam(T)={d}",
            f"6 iff diam=3, (n^2+3n-4)/2={big} iff diam>3")


_TREE_CHECKS: dict[str, Callable] = {
    "T-PW-TREE": _chk_pw_tree,
    "T-PWW-TREE": _chk_pww_tree,
    "T-TREE-BOUNDS-LO": _chk_tree_lo,
    "T-TREE-BOUNDS-HI": _chk_tree_hi,
    "T-COMP-TREE": _chk_comp_tree,
    "S-TREE-UB-TIGHT": _chk_tree_hi_tight,
}


# --------------------------------------------------------------------------
# product-suite checks
# --------------------------------------------------------------------------


@dataclass(slots=True)
class _ProductCtx:
    g: Graph
    h: Graph
    dm_g: object
    dm_h: object
    prod: Graph
    dm_p: object
    k1: int
    k2: int
    pw1: int
    pw2: int
    pww1: int
    pww2: int
    pw_p: int
    pww_p: int


def _chk_prod_dist(ctx):
    nh = ctx.h.n
    dg, dh, dp = ctx.dm_g.dist, ctx.dm_h.dist, ctx.dm_p.dist
    for a in range(ctx.g.n):
        for x in range(nh):
            u = a * nh + x
            row = dp[u]
            for b in range(ctx.g.n):
                dab = dg[a][b]
                for y in range(nh):
                    if row[b * nh + y] != dab + dh[x][y]:
                        return (
                            f"d(({a},{x}),({b},{y})) = {row[b * nh + y]}",
                            f"{dab} + {dh[x][y]}",
                        )
    return None


def _chk_prod_peri(ctx):
    nh = ctx.h.n
    want = {a * nh + x for a in ctx.dm_g.periphery for x in ctx.dm_h.periphery}
    got = set(ctx.dm_p.periphery)
    if got == want:
        return None
    return (f"Peri(product) size {len(got)}", f"Peri(G) x Peri(H) size {len(want)}")


def _chk_pw_prod(ctx):
    want = ctx.k2 ** 2 * ctx.pw1 + ctx.k1 ** 2 * ctx.pw2
    if ctx.pw_p == want:
        return None
    return (f"PW(product)={ctx.pw_p}", f"k2^2*PW1 + k1^2*PW2 = {want}")


def _chk_pww_prod(ctx):
    want = ctx.k2 ** 2 * ctx.pww1 + ctx.k1 ** 2 * ctx.pww2 + 2 * ctx.pw1 * ctx.pw2
    if ctx.pww_p == want:
        return None
    return (f"PWW(product)={ctx.pww_p}", f"k2^2*PWW1 + k1^2*PWW2 + 2*PW1*PW2 = {want}")


_PRODUCT_CHECKS: dict[str, Callable] = {
    "L-PROD-DIST": _chk_prod_dist,
    "C-PROD-PERI": _chk_prod_peri,
    "T-PW-PROD": _chk_pw_prod,
    "T-PWW-PROD": _chk_pww_prod,
}


# --------------------------------------------------------------------------
# family suites: per-claim instance streams plus checks fn(params, graph, profile)
# --------------------------------------------------------------------------


def _fam_complete(budget) -> Iterator[tuple[tuple, Graph]]:
    for nn in range(2, COMPLETE_MAX + 1):
        yield (nn,), generators.complete(nn)


def _fam_star(budget):
    for nn in range(2, COMPLETE_MAX + 1):
        yield (nn,), generators.star(nn)


def _fam_kmn(budget):
    for m in range(2, FAMILY_MAX + 1):
        for nn in range(m, FAMILY_MAX + 1):
            yield (m, nn), generators.complete_bipartite(m, nn)


def _fam_dstar(budget):
    for m in range(1, FAMILY_MAX + 1):
        for nn in range(m, FAMILY_MAX + 1):
            yield (m, nn), generators.double_star(m, nn)


def _fam_diam4(budget):
    from itertools import combinations_with_replacement

    for size in range(2, DIAM4_TUPLE_MAX + 1):
        for counts in combinations_with_replacement(range(DIAM4_CHILD_MAX + 1), size):
            if sum(1 for x in counts if x >= 1) >= 2:
                yield counts, generators.rooted_depth2_tree(counts)


def _fam_caterpillar(budget):
    from itertools import product as iproduct

    for s in range(2, CATERPILLAR_SPINE_MAX + 1):
        for c1 in range(1, CATERPILLAR_LEAF_MAX + 1):
            for cs in range(1, CATERPILLAR_LEAF_MAX + 1):
                for mids in iproduct(range(CATERPILLAR_LEAF_MAX + 1), repeat=s - 2):
                    code = (c1, *mids, cs)
                    yield code, generators.caterpillar(code)


def _fam_lobster(budget):
    from itertools import product as iproduct

    for s in range(3, 6):
        for c1 in range(1, 4):
            for cs in range(1, 4):
                for mids in iproduct(range(3), repeat=s - 3):
                    code = (c1, 0, *mids, cs)
                    for cc in range(1, 4):
                        yield (code, cc), generators.lobster(code, cc)


def _fam_hypercube(budget):
    for nn in range(2, HYPERCUBE_MAX + 1):
        yield (nn,), generators.hypercube(nn)


def _fchk_p1_1(params, g, p):
    want = comb(params[0], 2)
    return None if p.pww == want else (f"PWW={p.pww}", f"C(n,2) = {want}")


def _fchk_p1_2(params, g, p):
    want = 3 * comb(params[0], 2)
    return None if p.pww == want else (f"PWW={p.pww}", f"3*C(n,2) = {want}")


def _fchk_p1_3(params, g, p):
    m, nn = params
    want = 3 * comb(nn, 2) + 3 * comb(m, 2) + m * nn
    return None if p.pww == want else (f"PWW={p.pww}", f"3C(n,2)+3C(m,2)+mn = {want}")


def _fchk_t_star(params, g, p):
    want = trees.closed_form_star(params[0])
    return None if p.pww == want else (f"PWW={p.pww}", f"3*C(n,2) = {want}")


def _fchk_t_dstar(params, g, p):
    want = trees.closed_form_double_star(*params)
    return None if p.pww == want else (f"PWW={p.pww}", f"6mn+3m+3n = {want}")


def _fchk_s_dstar(params, g, p):
    want = trees.double_star_pww(*params)
    return None if p.pww == want else (f"PWW={p.pww}", f"6mn+3C(m,2)+3C(n,2) = {want}")


def _fchk_p_diam4(params, g, p):
    want = trees.closed_form_diam4(list(params))
    return None if p.pww == want else (f"PWW={p.pww}", f"closed form = {want}")


def _fchk_caterpillar(params, g, p):
    want = trees.closed_form_caterpillar(params)
    return None if p.pww == want else (f"PWW={p.pww}", f"closed form = {want}")


def _fchk_lobster(params, g, p):
    code, cc = params
    want = trees.closed_form_lobster(code, cc)
    return None if p.pww == want else (f"PWW={p.pww}", f"registered form = {want}")


def _fchk_s_lobster(params, g, p):
    code, cc = params
    want = trees.lobster_pww(code, cc)
    return None if p.pww == want else (f"PWW={p.pww}", f"corrected form = {want}")


def _fchk_hypercube(params, g, p):
    want = hypercube_series_value(params[0])
    return None if p.pww == want else (f"PWW={p.pww}", f"series value = {want}")


def _fchk_s_hypercube(params, g, p):
    want = hypercube_pww(params[0])
    return None if p.pww == want else (f"PWW={p.pww}", f"n(n+3)4^(n-2) = {want}")


_FAMILY: dict[str, tuple[Callable, Callable]] = {
    "P1-1": (_fam_complete, _fchk_p1_1),
    "P1-2": (_fam_star, _fchk_p1_2),
    "P1-3": (_fam_kmn, _fchk_p1_3),
    "T-STAR": (_fam_star, _fchk_t_star),
    "T-DSTAR": (_fam_dstar, _fchk_t_dstar),
    "S-DSTAR-FIX": (_fam_dstar, _fchk_s_dstar),
    "P-DIAM4": (_fam_diam4, _fchk_p_diam4),
    "T-CATERPILLAR": (_fam_caterpillar, _fchk_caterpillar),
    "T-LOBSTER": (_fam_lobster, _fchk_lobster),
    "S-LOBSTER-FIX": (_fam_lobster, _fchk_s_lobster),
    "C-HYPERCUBE": (_fam_hypercube, _fchk_hypercube),
    "S-HYPERCUBE-FIX": (_fam_hypercube, _fchk_s_hypercube),
}


# --------------------------------------------------------------------------
# fixed-instance checks
# --------------------------------------------------------------------------


def _run_incomp() -> list[tuple[Graph, tuple | None]]:
    out = []
    p3 = generators.path(3)
    iv = index_vector(p3)
    out.append((p3, None if iv.w > iv.pww else (f"W={iv.w}, PWW={iv.pww}", "W > PWW on P_3")))
    s4 = generators.star(4)
    iv = index_vector(s4)
    out.append((s4, None if iv.w < iv.pww else (f"W={iv.w}, PWW={iv.pww}", "W < PWW on K_{1,4}")))
    p2 = generators.path(2)
    iv = index_vector(p2)
    out.append((p2, None if iv.w == iv.pww else (f"W={iv.w}, PWW={iv.pww}", "W = PWW on P_2")))
    return out


def _run_fig2() -> list[tuple[Graph, tuple | None]]:
    g = fig2_tree()
    dm = distance_matrix(g)
    pww = peripheral_hyper_wiener(dm)
    formula = 2 * comb(g.n, 2) + comb(len(dm.periphery), 2) - 2 * g.m
    ok = pww == 15 and dm.diameter == 3 and formula == pww
    bad = (f"PWW={pww}, diam={dm.diameter}, formula value={formula}",
           "PWW = 15 = formula value while diam = 3")
    return [(g, None if ok else bad)]


_FIXED: dict[str, Callable] = {
    "INCOMP-W-PWW": _run_incomp,
    "FIG2-NONCONVERSE": _run_fig2,
}


# --------------------------------------------------------------------------
# evaluation engine
# --------------------------------------------------------------------------


class _Acc:
    """Per-claim accumulator with a capped, sorted witness list."""

    __slots__ = ("tested", "violations", "witnesses", "error")

    def __init__(self):
        self.tested = 0
        self.violations = 0
        self.witnesses: list[tuple] = []  # (n, key, graph6, observed, expected)
        self.error: str | None = None

    def add_witness(self, entry: tuple) -> None:
        if len(self.witnesses) < _MAX_WITNESSES:
            insort(self.witnesses, entry)
        elif entry < self.witnesses[-1]:
            insort(self.witnesses, entry)
            self.witnesses.pop()


def _record(acc: _Acc, result, witness_fn) -> None:
    """Apply one check outcome to an accumulator."""
    if result is _NA:
        return
    acc.tested += 1
    if result is not None:
        acc.violations += 1
        acc.add_witness(witness_fn(result))


def _graph_witness(g: Graph, result: tuple) -> tuple:
    g6 = write_graph6(g)
    return (g.n, corpus.g6_order_key(g.n, corpus.graph_to_mask(g)), g6, result[0], result[1])


def _corpus_chunk(args: tuple) -> dict[str, list]:
    """Worker over one [lo, hi) mask range of the n-vertex corpus."""
    ids, n, lo, hi = args
    checks = [(cid, _CORPUS_CHECKS[cid]) for cid in ids]
    res: dict[str, list] = {cid: [0, 0, [], None] for cid in ids}
    min_m = n - 1
    for mask in range(lo, hi):
        if mask.bit_count() < min_m:
            continue
        masks, edges = corpus.mask_adjacency(n, mask)
        p = corpus.profile_from_masks(n, masks, edges)
        if p is None:
            continue
        for cid, fn in checks:
            acc = res[cid]
            if acc[3] is not None:
                continue
            try:
                r = fn(n, masks, p)
            except Exception as exc:  # predicate bug -> claim skipped with note
                acc[3] = f"{type(exc).__name__}: {exc}"
                continue
            if r is _NA:
                continue
            acc[0] += 1
            if r is not None:
                acc[1] += 1
                wl = acc[2]
                entry = (corpus.g6_order_key(n, mask), mask, r[0], r[1])
                if len(wl) < _MAX_WITNESSES:
                    insort(wl, entry)
                elif entry < wl[-1]:
                    insort(wl, entry)
                    wl.pop()
    return res


def _corpus_jobs(ids: list[str], max_n: int) -> list[tuple]:
    jobs = []
    step = 1 << _CORPUS_CHUNK_BITS
    for n in range(2, max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        if total <= step:
            jobs.append((ids, n, 0, total))
        else:
            jobs.extend((ids, n, lo, min(lo + step, total)) for lo in range(0, total, step))
    return jobs


def _run_corpus_suite(claims: list[Claim], budget: Budget) -> dict[str, _Acc]:
    ids = sorted(c.id for c in claims)
    accs = {cid: _Acc() for cid in ids}
    jobs = _corpus_jobs(ids, budget.max_n)
    workers = min(budget.worker_count(), len(jobs))
    if workers > 1:
        with get_context("fork").Pool(workers) as pool:
            outs = pool.map(_corpus_chunk, jobs, chunksize=1)
    else:
        outs = [_corpus_chunk(job) for job in jobs]
    for job, res in zip(jobs, outs):
        n = job[1]
        for cid, (tested, viols, wl, err) in res.items():
            acc = accs[cid]
            acc.tested += tested
            acc.violations += viols
            if err and acc.error is None:
                acc.error = err
            for key, mask, obs, exp in wl:
                acc.add_witness((n, key, write_graph6(corpus.mask_to_graph(n, mask)), obs, exp))

    if budget.trials > 0:
        rng = random.Random(budget.seed * 1_000_003 + 101)
        checks = [(cid, _CORPUS_CHECKS[cid]) for cid in ids]
        for _ in range(budget.trials * 10):
            g = _random_connected(rng, 8, 24)
            masks = g.adjacency_masks()
            p = corpus.profile_from_masks(g.n, masks, list(g.edges()))
            for cid, fn in checks:
                acc = accs[cid]
                if acc.error is not None:
                    continue
                try:
                    r = fn(g.n, masks, p)
                except Exception as exc:
                    acc.error = f"{type(exc).__name__}: {exc}"
                    continue
                _record(acc, r, lambda res, g=g: _graph_witness(g, res))
    return accs


def _random_connected(rng: random.Random, n_lo: int, n_hi: int) -> Graph:
    for _ in range(5):
        n = rng.randrange(n_lo, n_hi + 1)
        p = rng.uniform(0.3, 0.85)
        try:
            return generators.random_connected_graph(n, p, seed=rng.randrange(1 << 30))
        except InvalidParameterError:
            continue
    raise InvalidParameterError("random connected sampling kept failing")


def _run_corpus6_suite(claims: list[Claim], budget: Budget) -> dict[str, _Acc]:
    accs = {c.id: _Acc() for c in claims}
    checks = [(c.id, _CORPUS6_CHECKS[c.id]) for c in claims]
    for n in range(2, min(6, budget.max_n) + 1):
        for mask, _profile in corpus.iter_connected_profiles(n):
            g = corpus.mask_to_graph(n, mask)
            dm = distance_matrix(g)
            for cid, fn in checks:
                acc = accs[cid]
                if acc.error is not None:
                    continue
                try:
                    r = fn(g, dm)
                except Exception as exc:
                    acc.error = f"{type(exc).__name__}: {exc}"
                    continue
                _record(acc, r,
                        lambda res, n=n, mask=mask: (
                            n, corpus.g6_order_key(n, mask),
                            write_graph6(corpus.mask_to_graph(n, mask)), res[0], res[1]))
    return accs


def _tree_instances(budget: Budget) -> Iterator[Graph]:
    yield from corpus.all_free_trees(2, TREE_SUITE_MAX_N)
    rng = random.Random(budget.seed * 7919 + 5)
    for _ in range(budget.trials):
        n = rng.randrange(2, RANDOM_TREE_MAX_N + 1)
        yield generators.random_tree(n, seed=rng.randrange(1 << 30))


def _run_tree_suite(claims: list[Claim], budget: Budget) -> dict[str, _Acc]:
    accs = {c.id: _Acc() for c in claims}
    checks = [(c.id, _TREE_CHECKS[c.id]) for c in claims]
    for g in _tree_instances(budget):
        dm = distance_matrix(g)
        iv = index_vector(g, dm)
        tv = trees.as_tree(g, dm)
        ctx = _TreeCtx(graph=g, dm=dm, iv=iv, tv=tv)
        for cid, fn in checks:
            acc = accs[cid]
            if acc.error is not None:
                continue
            try:
                r = fn(ctx)
            except Exception as exc:
                acc.error = f"{type(exc).__name__}: {exc}"
                continue
            _record(acc, r, lambda res, g=g: _graph_witness(g, res))
    return accs


def _product_pairs(budget: Budget) -> Iterator[tuple[Graph, Graph]]:
    factors: list[Graph] = []
    for n in range(2, FACTOR_MAX_N + 1):
        factors.extend(corpus.nonisomorphic_connected(n))
    for i in range(len(factors)):
        for j in range(i, len(factors)):
            yield factors[i], factors[j]
    rng = random.Random(budget.seed * 104729 + 11)
    for _ in range(budget.trials):
        g = _random_connected(rng, 2, RANDOM_FACTOR_MAX_N)
        h = _random_connected(rng, 2, RANDOM_FACTOR_MAX_N)
        yield g, h


def _run_product_suite(claims: list[Claim], budget: Budget) -> dict[str, _Acc]:
    accs = {c.id: _Acc() for c in claims}
    checks = [(c.id, _PRODUCT_CHECKS[c.id]) for c in claims]
    for g, h in _product_pairs(budget):
        dm_g = distance_matrix(g)
        dm_h = distance_matrix(h)
        prod = cartesian_product(g, h)
        dm_p = distance_matrix(prod)
        ctx = _ProductCtx(
            g=g, h=h, dm_g=dm_g, dm_h=dm_h, prod=prod, dm_p=dm_p,
            k1=len(dm_g.periphery), k2=len(dm_h.periphery),
            pw1=peripheral_wiener(dm_g), pw2=peripheral_wiener(dm_h),
            pww1=peripheral_hyper_wiener(dm_g), pww2=peripheral_hyper_wiener(dm_h),
            pw_p=peripheral_wiener(dm_p), pww_p=peripheral_hyper_wiener(dm_p),
        )
        for cid, fn in checks:
            acc = accs[cid]
            if acc.error is not None:
                continue
            try:
                r = fn(ctx)
            except Exception as exc:
                acc.error = f"{type(exc).__name__}: {exc}"
                continue
            _record(acc, r, lambda res, prod=prod: _graph_witness(prod, res))
    return accs


def _run_family_suite(claims: list[Claim], budget: Budget) -> dict[str, _Acc]:
    accs = {}
    for claim in claims:
        acc = _Acc()
        accs[claim.id] = acc
        instances_fn, check_fn = _FAMILY[claim.id]
        try:
            for params, g in instances_fn(budget):
                p = corpus.profile_of(g)
                r = check_fn(params, g, p)
                _record(acc, r, lambda res, g=g: _graph_witness(g, res))
        except Exception as exc:
            acc.error = f"{type(exc).__name__}: {exc}"
    return accs


def _run_fixed_suite(claims: list[Claim], budget: Budget) -> dict[str, _Acc]:
    accs = {}
    for claim in claims:
        acc = _Acc()
        accs[claim.id] = acc
        try:
            for g, r in _FIXED[claim.id]():
                _record(acc, r, lambda res, g=g: _graph_witness(g, res))
        except Exception as exc:
            acc.error = f"{type(exc).__name__}: {exc}"
    return accs


_SUITE_RUNNERS = {
    "corpus": _run_corpus_suite,
    "corpus6": _run_corpus6_suite,
    "trees": _run_tree_suite,
    "products": _run_product_suite,
    "family": _run_family_suite,
    "fixed": _run_fixed_suite,
}


def _finalize(claim: Claim, acc: _Acc) -> ClaimResult:
    if acc.error is not None or acc.tested == 0:
        status = STATUS_SKIPPED
        note = acc.error or "no instances in suite"
    elif acc.violations:
        status = STATUS_VIOLATED
        note = ""
    else:
        status = STATUS_HOLDS
        note = ""
    witnesses = [
        {"graph6": g6, "observed": obs, "expected": exp}
        for (_n, _key, g6, obs, exp) in acc.witnesses
    ]
    return ClaimResult(
        id=claim.id,
        description=claim.description,
        anchor=claim.anchor,
        suite=claim.suite,
        expected=claim.expected,
        status=status,
        instances_tested=acc.tested,
        violations=acc.violations,
        witnesses=witnesses,
        note=note,
    )


def run_claims(claims: Iterable[Claim], budget: Budget) -> list[ClaimResult]:
    """Evaluate the given claims, sharing one pass per suite."""
    claims = list(claims)
    by_suite: dict[str, list[Claim]] = {}
    for claim in claims:
        by_suite.setdefault(claim.suite, []).append(claim)
    accs: dict[str, _Acc] = {}
    for suite, members in by_suite.items():
        accs.update(_SUITE_RUNNERS[suite](members, budget))
    by_id = {c.id: c for c in claims}
    return [_finalize(by_id[cid], accs[cid]) for cid in (c.id for c in claims)]


def run_claim(claim: Claim | str, budget: Budget) -> ClaimResult:
    if isinstance(claim, str):
        claim = claims_by_id()[claim]
    return run_claims([claim], budget)[0]


@dataclass(slots=True)
class AuditReport:
    results: list[ClaimResult]
    shadow_results: list[ClaimResult]
    budget: Budget

    def mismatches(self) -> list[ClaimResult]:
        return [r for r in self.results + self.shadow_results if not r.matched]

    def ok(self) -> bool:
        return not self.mismatches()

    def to_dict(self) -> dict:
        def encode(r: ClaimResult) -> dict:
            return {
                "id": r.id,
                "description": r.description,
                "anchor": r.anchor,
                "suite": r.suite,
                "status": r.status,
                "expected_status": r.expected,
                "matched": r.matched,
                "instances_tested": r.instances_tested,
                "violations": r.violations,
                "witnesses": r.witnesses,
                "note": r.note,
            }

        return {
            "schema_version": 1,
            "seed": self.budget.seed,
            "budget": {
                "max_n": self.budget.max_n,
                "trials": self.budget.trials,
            },
            "claims": [encode(r) for r in self.results],
            "shadow_claims": [encode(r) for r in self.shadow_results],
            "summary": {
                "claims": len(self.results),
                "shadow_claims": len(self.shadow_results),
                "matched": sum(1 for r in self.results + self.shadow_results if r.matched),
                "mismatched": len(self.mismatches()),
                "instances_tested": sum(r.instances_tested
                                        for r in self.results + self.shadow_results),
                "violations": sum(r.violations for r in self.results + self.shadow_results),
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def table(self) -> str:
        lines = [f"{'claim':<18} {'status':<9} {'expected':<12} {'ok':<4} "
                 f"{'tested':>9} {'violations':>10}"]
        for r in self.results + self.shadow_results:
            tag = "(shadow) " if r.id.startswith("S-") else ""
            ok = "yes" if r.matched else "FLIP"
            lines.append(f"{r.id:<18} {r.status:<9} {r.expected:<12} {ok:<4} "
                         f"{r.instances_tested:>9} {r.violations:>10} {tag}{r.note}")
        mm = self.mismatches()
        lines.append(
            f"summary: {len(self.results)} claims + {len(self.shadow_results)} shadow, "
            f"{len(mm)} mismatched"
        )
        return "\n".join(lines)


def run_all(budget: Budget | None = None, claim_ids: list[str] | None = None) -> AuditReport:
    """Evaluate the registry (optionally a subset) plus shadow claims."""
    budget = budget or Budget()
    registry = register_claims()
    shadows = register_shadow_claims()
    if claim_ids is not None:
        wanted = set(claim_ids)
        known = {c.id for c in registry + shadows}
        unknown = wanted - known
        if unknown:
            raise InvalidParameterError(f"unknown claim ids: {sorted(unknown)}")
        registry = [c for c in registry if c.id in wanted]
        shadows = [c for c in shadows if c.id in wanted]
    results = run_claims(registry + shadows, budget)
    split = len(registry)
    return AuditReport(results=results[:split], shadow_results=results[split:], budget=budget)
