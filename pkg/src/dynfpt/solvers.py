"""Static solvers the dynamic structures plug in.

The exact solvers are plain bounded search trees. They only ever see
kernels whose size depends on the parameter, so nothing cleverer is needed.
Internally most of them work on ``int`` bitmasks over ``0..n-1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import Graph, MultiGraph, find_induced_p3, induced_subgraph


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _masks(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        m = 0
        for w in g.adj[v]:
            m |= 1 << w
        out.append(m)
    return out


# -- vertex cover -------------------------------------------------------------

def vc_2approx(g: Graph) -> set[int]:
    """Both endpoints of a greedy maximal matching (edges in lexicographic order)."""
    cover: set[int] = set()
    for u, v in g.edges():
        if u not in cover and v not in cover:
            cover.add(u)
            cover.add(v)
    return cover


def vc_exact(g: Graph, budget: Optional[int] = None) -> Optional[set[int]]:
    """Minimum vertex cover, or ``None`` if it is larger than ``budget``."""
    adj = _masks(g)
    limit = g.n if budget is None else budget
    if limit < 0:
        return None
    found = _vc_search(adj, (1 << g.n) - 1, limit)
    if found is None:
        return None
    return set(_bits(found))


def _vc_search(adj: list[int], alive: int, budget: int) -> Optional[int]:
    forced = 0
    changed = True
    while changed:
        changed = False
        for v in _bits(alive):
            if not alive >> v & 1:
                continue
            nb = adj[v] & alive
            if not nb:
                alive &= ~(1 << v)
                changed = True
            elif nb & (nb - 1) == 0:
                # degree one: its neighbor is at least as good
                forced |= nb
                alive &= ~(nb | (1 << v))
                budget -= 1
                changed = True
                if budget < 0:
                    return None
    if not alive:
        return forced
    best_v, best_deg, edges2 = -1, -1, 0
    for v in _bits(alive):
        d = bin(adj[v] & alive).count("1")
        edges2 += d
        if d > best_deg:
            best_v, best_deg = v, d
    if budget <= 0 or edges2 // 2 > budget * best_deg:
        return None
    best = None
    r = _vc_search(adj, alive & ~(1 << best_v), budget - 1)
    if r is not None:
        best = r | (1 << best_v)
        budget = bin(best).count("1") - 1
    nb = adj[best_v] & alive
    if best_deg <= budget:
        r = _vc_search(adj, alive & ~(nb | (1 << best_v)), budget - best_deg)
        if r is not None:
            best = r | nb
    if best is None:
        return None
    return best | forced


# -- cluster vertex deletion --------------------------------------------------

@dataclass
class WeightedGraph:
    graph: Graph
    weights: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.weights:
            self.weights = [1] * self.graph.n
        if len(self.weights) != self.graph.n:
            raise ValueError("one weight per vertex required")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive integers")


def cvd_3approx(g: Graph) -> set[int]:
    """Delete all three vertices of induced P3s until a cluster graph remains."""
    h = g.copy()
    out: set[int] = set()
    while True:
        p3 = find_induced_p3(h)
        if p3 is None:
            return out
        for v in p3:
            out.add(v)
            for w in list(h.adj[v]):
                h.remove_edge(v, w)


def _find_p3_mask(adj: list[int], alive: int) -> Optional[tuple[int, int, int]]:
    for b in _bits(alive):
        nb = adj[b] & alive
        if nb & (nb - 1) == 0:
            continue
        for a in _bits(nb):
            rest = nb & ~adj[a] & ~(1 << a)
            if rest:
                c = (rest & -rest).bit_length() - 1
                return a, b, c
    return None


def cvd_exact_weighted(
    wg: WeightedGraph,
    budget: Optional[int] = None,
    lexicographic: bool = False,
) -> Optional[set[int]]:
    """Minimum-weight vertex set whose removal leaves a cluster graph.

    Returns ``None`` when the optimum weight exceeds ``budget``. With
    ``lexicographic`` set, ties are broken towards the lexicographically
    smallest sorted vertex list (this explores every optimum, so keep the
    input small).
    """
    g, w = wg.graph, wg.weights
    adj = _masks(g)
    limit = sum(w) if budget is None else budget
    if limit < 0:
        return None
    best_w = limit + 1
    best: list[int] = []  # optimal masks found so far

    def search(alive: int, chosen: int, weight: int) -> None:
        nonlocal best_w, best
        if weight > best_w or (weight == best_w and not lexicographic):
            return
        p3 = _find_p3_mask(adj, alive)
        if p3 is None:
            if weight < best_w:
                best_w, best = weight, [chosen]
            else:
                best.append(chosen)
            return
        for v in p3:
            search(alive & ~(1 << v), chosen | (1 << v), weight + w[v])

    search((1 << g.n) - 1, 0, 0)
    if not best:
        return None
    if lexicographic:
        return set(min((sorted(_bits(m)) for m in best)))
    return set(_bits(best[0]))


def cvd_exact(g: Graph, budget: Optional[int] = None) -> Optional[set[int]]:
    """Unit-weight ``cvd_exact_weighted``."""
    return cvd_exact_weighted(WeightedGraph(g), budget)


# -- disjoint feedback vertex set ---------------------------------------------

def _find_cycle(mg: MultiGraph) -> Optional[list[int]]:
    """Vertices of some cycle (a parallel pair counts), or ``None``."""
    for (a, b), k in sorted(mg.mult.items()):
        if k >= 2 or a == b:
            return [a] if a == b else [a, b]
    parent: dict[int, Optional[int]] = {}
    for start in sorted(mg.vertices):
        if start in parent:
            continue
        parent[start] = None
        stack = [start]
        while stack:
            v = stack.pop()
            for w in sorted(mg.neighbors(v)):
                if w == parent[v] or parent.get(w, -1) == v:
                    continue
                if w in parent:
                    # non-tree edge closes the cycle v .. lca .. w
                    up_v = [v]
                    while parent[up_v[-1]] is not None:
                        up_v.append(parent[up_v[-1]])
                    on_v = set(up_v)
                    up_w = [w]
                    while up_w[-1] not in on_v:
                        up_w.append(parent[up_w[-1]])
                    lca = up_w[-1]
                    return up_v[: up_v.index(lca) + 1] + up_w[-2::-1]
                parent[w] = v
                stack.append(w)
    return None


def _fvs_reduce(mg: MultiGraph, protected: set[int]) -> Optional[set[int]]:
    """Apply safe rules in place; return vertices forced into the solution, or
    ``None`` if a cycle lies entirely inside ``protected``."""
    forced: set[int] = set()
    changed = True
    while changed:
        changed = False
        for v in sorted(mg.vertices):
            if v not in mg.vertices:
                continue
            nb = mg.neighbors(v)
            if v in nb:
                if v in protected:
                    return None
                forced.add(v)
                mg.remove_vertex(v)
                changed = True
                continue
            deg = mg.degree(v)
            if deg <= 1:
                mg.remove_vertex(v)
                changed = True
            elif deg == 2 and v not in protected:
                ends = list(nb.elements())
                a, b = ends
                if a == b and a in protected:
                    forced.add(v)
                    mg.remove_vertex(v)
                    changed = True
                elif a not in protected or b not in protected:
                    # some non-protected neighbor dominates v
                    mg.remove_vertex(v)
                    mg.add_edge(a, b)
                    changed = True
    return forced


def disjoint_fvs(
    mg: MultiGraph, s: Iterable[int], budget: int
) -> Optional[set[int]]:
    """Minimum feedback vertex set of ``mg`` avoiding ``s`` of size at most
    ``budget``; ``None`` if none exists."""
    protected = set(s)
    best: Optional[set[int]] = None

    def search(h: MultiGraph, taken: set[int], limit: int) -> None:
        nonlocal best
        forced = _fvs_reduce(h, protected)
        if forced is None:
            return
        taken = taken | forced
        limit -= len(forced)
        if limit < 0:
            return
        cycle = _find_cycle(h)
        if cycle is None:
            best = taken
            return
        candidates = sorted(v for v in cycle if v not in protected)
        if not candidates or limit == 0:
            return
        for v in candidates:
            rest = limit - 1
            if best is not None:
                rest = min(rest, len(best) - len(taken) - 2)
            if rest < 0:
                return
            sub = h.copy()
            sub.remove_vertex(v)
            search(sub, taken | {v}, rest)

    if budget >= 0:
        search(mg.copy(), set(), budget)
    return best


def is_forest(mg: MultiGraph, removed: Iterable[int] = ()) -> bool:
    gone = set(removed)
    parent = {v: v for v in mg.vertices if v not in gone}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (a, b), k in mg.mult.items():
        if k == 0 or a in gone or b in gone:
            continue
        if a == b or k >= 2:
            return False
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


# -- maximum flow -------------------------------------------------------------

@dataclass
class FlowNet:
    """Directed network on nodes ``0..n-1`` with integer arc capacities."""

    n: int
    source: int
    sink: int
    arcs: list[tuple[int, int, int]] = field(default_factory=list)

    def __post_init__(self):
        if self.source == self.sink:
            raise ValueError("source and sink must differ")

    def add_arc(self, u: int, v: int, cap: int) -> None:
        if cap < 0:
            raise ValueError("capacities must be non-negative")
        self.arcs.append((u, v, cap))


def max_flow(net: FlowNet) -> int:
    """Value of a maximum source-sink flow (shortest augmenting paths)."""
    cap: list[dict[int, int]] = [dict() for _ in range(net.n)]
    for u, v, c in net.arcs:
        cap[u][v] = cap[u].get(v, 0) + c
        cap[v].setdefault(u, 0)
    s, t = net.source, net.sink
    flow = 0
    while True:
        prev = {s: s}
        q = deque([s])
        while q and t not in prev:
            u = q.popleft()
            for v, c in cap[u].items():
                if c > 0 and v not in prev:
                    prev[v] = u
                    q.append(v)
        if t not in prev:
            return flow
        aug = None
        v = t
        while v != s:
            u = prev[v]
            aug = cap[u][v] if aug is None else min(aug, cap[u][v])
            v = u
        v = t
        while v != s:
            u = prev[v]
            cap[u][v] -= aug
            cap[v][u] += aug
            v = u
        flow += aug


# -- chromatic number (static baseline for benchmarking) ----------------------

def chromatic_exact(g: Graph) -> int:
    """Chromatic number by backtracking over colour assignments."""
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    color = [-1] * g.n
    best = g.n

    def assign(i: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if i == len(order):
            best = used
            return
        v = order[i]
        taken = {color[w] for w in g.adj[v] if color[w] >= 0}
        for c in range(used):
            if c not in taken:
                color[v] = c
                assign(i + 1, used)
        color[v] = used
        assign(i + 1, used + 1)
        color[v] = -1

    assign(0, 0)
    return best


def subgraph_solution(g: Graph, vs: Iterable[int], solver) -> set[int]:
    """Run ``solver`` on ``G[vs]`` and translate the answer back to ``g``'s ids."""
    sub, back = induced_subgraph(g, vs)
    return {back[i] for i in solver(sub)}
