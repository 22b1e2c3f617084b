"""Brute-force reference solvers for tests.

Nothing here shares code with the solvers or the dynamic structures beyond
the graph containers: optima come from plain subset or partition
enumeration, so agreement is meaningful.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import BudgetExceeded
from .graph import Graph, MultiGraph


@dataclass(frozen=True)
class OracleBudget:
    vc: int = 12
    cvd: int = 12
    chromatic: int = 10
    fvs: int = 10
    strategy: str = "subset-enumeration"


DEFAULT_BUDGET = OracleBudget()


def _check(size: int, limit: int, what: str) -> None:
    if size > limit:
        raise BudgetExceeded(f"{what} oracle refuses {size} vertices (limit {limit})")


def _adj_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _subsets_by_size(items: Sequence[int], max_size: Optional[int] = None):
    top = len(items) if max_size is None else min(max_size, len(items))
    for k in range(top + 1):
        for combo in itertools.combinations(items, k):
            yield combo


def brute_vc(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    _check(g.n, budget.vc, "vertex cover")
    edges = list(g.edges())
    for combo in _subsets_by_size(range(g.n)):
        chosen = set(combo)
        if all(u in chosen or v in chosen for u, v in edges):
            return len(combo)
    raise AssertionError("unreachable")


def is_cluster_mask(adj: list[int], alive: int) -> bool:
    v_mask = alive
    while v_mask:
        low = v_mask & -v_mask
        v = low.bit_length() - 1
        v_mask ^= low
        closed = (adj[v] & alive) | low
        nb = adj[v] & alive
        while nb:
            lw = nb & -nb
            w = lw.bit_length() - 1
            nb ^= lw
            if (adj[w] & alive) | lw != closed:
                return False
    return True


def brute_cvd(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET, max_size: Optional[int] = None
) -> int:
    """Minimum cluster vertex deletion size. ``max_size`` lets a caller that
    knows a small optimum enumerate only small subsets of a larger graph."""
    if max_size is None:
        _check(g.n, budget.cvd, "cluster vertex deletion")
    adj = _adj_masks(g)
    full = (1 << g.n) - 1
    for combo in _subsets_by_size(range(g.n), max_size):
        alive = full
        for v in combo:
            alive &= ~(1 << v)
        if is_cluster_mask(adj, alive):
            return len(combo)
    raise BudgetExceeded(f"optimum larger than {max_size}")


def _multigraph_of(g) -> MultiGraph:
    return g if isinstance(g, MultiGraph) else MultiGraph.from_graph(g)


def _acyclic(vertices: set[int], mult: Counter, removed: set[int]) -> bool:
    parent = {v: v for v in vertices if v not in removed}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for (a, b), k in mult.items():
        if not k or a in removed or b in removed:
            continue
        if a == b or k > 1:
            return False
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def brute_fvs(
    g, allow: Optional[Iterable[int]] = None, budget: OracleBudget = DEFAULT_BUDGET
) -> Optional[int]:
    """Minimum feedback vertex set drawn from ``allow`` (all vertices when
    omitted); ``None`` if no subset of ``allow`` works. ``g`` may be a
    ``Graph`` or a ``MultiGraph``."""
    mg = _multigraph_of(g)
    _check(len(mg.vertices), budget.fvs, "feedback vertex set")
    pool = sorted(mg.vertices if allow is None else set(allow) & mg.vertices)
    for combo in _subsets_by_size(pool):
        if _acyclic(mg.vertices, mg.mult, set(combo)):
            return len(combo)
    return None


def brute_chromatic(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Chromatic number by restricted-growth enumeration of vertex partitions,
    skipping branches that put adjacent vertices in one block."""
    _check(g.n, budget.chromatic, "chromatic number")
    if g.n == 0:
        return 0
    block = [-1] * g.n
    best = g.n

    def grow(v: int, blocks: int) -> None:
        nonlocal best
        if blocks >= best:
            return
        if v == g.n:
            best = blocks
            return
        clash = {block[w] for w in g.adj[v] if w < v}
        for b in range(blocks):
            if b not in clash:
                block[v] = b
                grow(v + 1, blocks)
        block[v] = blocks
        grow(v + 1, blocks + 1)
        block[v] = -1

    grow(0, 0)
    return best


def count_partitions(n: int) -> int:
    """Number of set partitions of ``n`` labelled items, by recursively
    assigning each item to an existing block or a new one."""

    def place(i: int, blocks: int) -> int:
        if i == n:
            return 1
        return blocks * place(i + 1, blocks) + place(i + 1, blocks + 1)

    return place(0, 0)


def brute_chi(
    g: Graph, cluster: Sequence[int], xl: Sequence[int], coloring: dict[int, int]
) -> int:
    """Fewest colours properly colouring ``G[X_l + C_l]`` minus the edges inside
    ``X_l`` when ``X_l`` is pre-coloured by ``coloring`` (vertex -> colour).

    Enumerates every colour assignment of the cluster vertices.
    """
    relabel = {c: i for i, c in enumerate(sorted(set(coloring.values())))}
    coloring = {x: relabel[c] for x, c in coloring.items()}
    used = len(relabel)
    best = None
    for extra in range(len(cluster) + 1):
        palette = used + extra
        for colors in itertools.product(range(palette), repeat=len(cluster)):
            if len(set(colors)) != len(colors):
                continue
            ok = True
            for v, c in zip(cluster, colors):
                for x in xl:
                    if g.has_edge(v, x) and coloring[x] == c:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                best = palette
                break
        if best is not None:
            return best
    raise AssertionError("unreachable")


def brute_min_cut(n: int, source: int, sink: int, arcs: Iterable[tuple[int, int, int]]) -> int:
    """Minimum s-t cut by enumerating every source side."""
    arcs = list(arcs)
    others = [v for v in range(n) if v not in (source, sink)]
    best = None
    for combo in _subsets_by_size(others):
        side = set(combo) | {source}
        cut = sum(c for u, v, c in arcs if u in side and v not in side)
        if best is None or cut < best:
            best = cut
    return best if best is not None else 0


def naive_reduce(mg: MultiGraph, s: Iterable[int], budget: OracleBudget = DEFAULT_BUDGET) -> MultiGraph:
    """Apply the degree-at-most-one deletion and degree-two contraction rules
    to vertices outside ``s`` until neither applies.

    Vertices of degree zero outside ``s`` are dropped as well, so that every
    surviving unprotected vertex has degree at least three.
    """
    protected = set(s)
    h = mg.copy()
    _check(len(h.vertices - protected), 10 * budget.fvs, "reduction")
    changed = True
    while changed:
        changed = False
        for v in sorted(h.vertices):
            if v in protected or v not in h.vertices:
                continue
            deg = h.degree(v)
            if deg <= 1:
                h.remove_vertex(v)
                changed = True
            elif deg == 2 and v not in h.neighbors(v):
                a, b = list(h.neighbors(v).elements())
                h.remove_vertex(v)
                h.add_edge(a, b)
                changed = True
    return h
