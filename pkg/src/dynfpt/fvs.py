"""Fully dynamic feedback vertex set on graphs of bounded degree.

The solution ``x`` is kept minimum. The forest ``G - x`` lives in a
link-cut forest so that the reduced graph used by iterative compression can
be read off with a parameter-bounded number of tree operations instead of
by walking the whole graph.

Terminology used below: for a guess ``r`` of the part of ``x`` that stays
in the solution, ``s = x - r`` is the part that must leave it. A *terminal*
is an edge ``(t, u)`` from ``t`` in ``s`` to a forest vertex ``u``. Cutting
the forest down to the subtrees spanned by terminals and contracting paths,
the vertices that survive (the *core*) are exactly the points where three
terminal paths meet.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Iterable, Optional

from .errors import DegreeBoundExceeded, InvariantError, NotFree, NotInX
from .graph import EdgeOp, Graph, MultiGraph, OpKind
from .lct import LinkCutForest
from .solvers import disjoint_fvs, is_forest

REJECT_FACTOR = 14


class ReducedGraph(MultiGraph):
    """Multigraph over core vertices and ``s``; ``provenance`` records for each
    edge key how the edge arose (``("forest", a, b)``, ``("terminal", t, u)``,
    ``("graph", a, b)`` or ``("path", (t1, u1), (t2, u2))``)."""

    def __init__(self, vertices: Iterable[int] = ()):
        super().__init__(vertices)
        self.provenance: dict[tuple[int, int], list[tuple]] = defaultdict(list)

    def add_traced_edge(self, a: int, b: int, source: tuple) -> None:
        self.add_edge(a, b)
        self.provenance[(a, b) if a <= b else (b, a)].append(source)

    def copy(self) -> "ReducedGraph":
        out = super().copy()
        out.provenance = defaultdict(list, {k: list(v) for k, v in self.provenance.items()})
        return out


class DynamicFeedbackVertexSet:
    def __init__(self, n: int, max_degree: int, debug: bool = False, threshold: bool = True):
        self.g = Graph(n)
        self.d = max_degree
        self.x: set[int] = set()
        self.forest = LinkCutForest(n)
        self.debug = debug
        self.threshold = threshold
        #: how many guesses the size threshold has rejected so far
        self.rejections = 0

    @classmethod
    def from_solution(
        cls, g: Graph, x: Iterable[int], max_degree: int, **kwargs
    ) -> "DynamicFeedbackVertexSet":
        """State for graph ``g`` with feedback vertex set ``x`` (not
        necessarily minimum)."""
        st = cls(g.n, max_degree, **kwargs)
        if any(g.degree(v) > max_degree for v in range(g.n)):
            raise DegreeBoundExceeded(f"graph exceeds degree {max_degree}")
        st.g = g.copy()
        st.x = set(x)
        for a, b in g.edges():
            if a not in st.x and b not in st.x:
                st.forest.evert(a)
                st.forest.link(a, b)
        return st

    # -- moving single vertices ----------------------------------------

    def add_to_x(self, u: int) -> None:
        if u in self.x:
            raise NotFree(f"vertex {u} is already in the solution")
        self.x.add(u)
        for w in sorted(self.g.adj[u]):
            if w not in self.x:
                self.forest.cut(u, w)

    def remove_from_x(self, u: int) -> None:
        if u not in self.x:
            raise NotInX(f"vertex {u} is not in the solution")
        self.x.discard(u)
        for w in sorted(self.g.adj[u]):
            if w not in self.x:
                self.forest.evert(u)
                self.forest.link(u, w)

    # -- reduction ---------------------------------------------------------

    def _terminals(self, s: Iterable[int]) -> list[tuple[int, int]]:
        x, adj = self.x, self.g.adj
        return [(t, u) for t in sorted(s) for u in sorted(adj[t]) if u not in x]

    def _on_path(self, u: int, v: int, w: int) -> bool:
        """Whether ``w`` lies on the forest path from ``u`` to ``v``, where
        ``u`` is the current root of the tree. Detaches ``w`` from its
        parent for the test and always reattaches it."""
        forest = self.forest
        p = forest.parent(w)
        if p is None:
            return w == u
        forest.cut(w, p)
        try:
            return not forest.connected(u, v)
        finally:
            forest.link(w, p)

    def reduce(self, r: Iterable[int], threshold: bool = True) -> Optional[ReducedGraph]:
        """The reduced graph of ``G - r`` with ``s = x - r`` protected, or
        ``None`` when it has at least ``14 |s|`` vertices (only checked when
        ``threshold`` is set)."""
        forest = self.forest
        s = self.x.difference(r)
        terminals = self._terminals(s)
        tree = {u: forest.root(u) for _, u in terminals}
        by_tree: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for t, u in terminals:
            by_tree[tree[u]].append((t, u))

        core: dict[int, set[int]] = defaultdict(set)
        for group_id, group in by_tree.items():
            for (_, a), (_, b), (_, c) in itertools.combinations(group, 3):
                core[group_id].add(forest.meet(a, b, c))
        all_core = set().union(*core.values()) if core else set()
        if threshold and s and len(all_core) + len(s) >= REJECT_FACTOR * len(s):
            return None

        reduced = ReducedGraph(s | all_core)
        # core - core
        for group_id, members in core.items():
            ordered = sorted(members)
            for i, a in enumerate(ordered):
                forest.evert(a)
                for b in ordered[i + 1:]:
                    if not any(self._on_path(a, b, w) for w in ordered if w != a and w != b):
                        reduced.add_traced_edge(a, b, ("forest", a, b))
        # s - core
        for t, u in terminals:
            members = core.get(tree[u], ())
            if not members:
                continue
            forest.evert(u)
            for v in sorted(members):
                if u in members and u != v:
                    continue
                if not any(self._on_path(u, v, w) for w in members if w != u and w != v):
                    reduced.add_traced_edge(t, v, ("terminal", t, u))
        # s - s
        for a, b in itertools.combinations(sorted(s), 2):
            if self.g.has_edge(a, b):
                reduced.add_traced_edge(a, b, ("graph", a, b))
        for i, j in itertools.combinations(range(len(terminals)), 2):
            (t1, u1), (t2, u2) = terminals[i], terminals[j]
            if tree[u1] != tree[u2]:
                continue
            blocked = any(
                tree[terminals[k][1]] == tree[u1]
                for k in range(len(terminals))
                if k != i and k != j
            )
            if not blocked:
                reduced.add_traced_edge(t1, t2, ("path", (t1, u1), (t2, u2)))
        return reduced

    def core_vertices(self, r: Iterable[int]) -> set[int]:
        red = self.reduce(r, threshold=False)
        return red.vertices - self.x.difference(r)

    def solve_disjoint(self, r: Iterable[int], budget: int) -> Optional[set[int]]:
        """Smallest feedback vertex set of ``G - r`` avoiding ``s = x - r`` of
        size at most ``budget``. May answer ``None`` spuriously when no
        maximum-overlap optimum keeps exactly ``r``."""
        r = set(r)
        s = self.x - r
        if not s:
            return set()
        reduced = self.reduce(r, self.threshold)
        if reduced is None:
            self.rejections += 1
            return None
        return disjoint_fvs(reduced, s, budget)

    def compress(self) -> set[int]:
        """A minimum feedback vertex set, given that ``x`` is a feedback
        vertex set at most one above the optimum."""
        best = set(self.x)
        ordered = sorted(self.x)
        for size in range(len(ordered) + 1):
            for r in itertools.combinations(ordered, size):
                budget = len(best) - size - 1
                if budget < 0:
                    continue
                found = self.solve_disjoint(r, budget)
                if found is not None and size + len(found) < len(best):
                    best = set(r) | found
        return best

    def exchange(self, target: set[int]) -> None:
        for v in sorted(target - self.x):
            self.add_to_x(v)
        for v in sorted(self.x - target):
            self.remove_from_x(v)

    def update(self, op: EdgeOp) -> None:
        g = self.g
        g.check_op(op)
        u, v = sorted((op.u, op.v))
        if op.kind is OpKind.INSERT:
            for w in (u, v):
                if g.degree(w) + 1 > self.d:
                    raise DegreeBoundExceeded(f"vertex {w} would exceed degree {self.d}")
            if u not in self.x and v not in self.x:
                self.add_to_x(u)
        elif u not in self.x and v not in self.x:
            self.forest.cut(u, v)
        g.apply(op)
        self.exchange(self.compress())
        if self.debug:
            self.check_invariants()

    def solution(self) -> set[int]:
        return set(self.x)

    def check_invariants(self) -> None:
        g, x = self.g, self.x
        expect = {(a, b) for a, b in g.edges() if a not in x and b not in x}
        if self.forest.edges() != expect:
            raise InvariantError("link-cut forest differs from G - X")
        if not is_forest(MultiGraph.from_graph(g), x):
            raise InvariantError("G - X has a cycle")
        if any(g.degree(v) > self.d for v in range(g.n)):
            raise InvariantError("degree bound violated")
