"""Fully dynamic cluster vertex deletion around a 3-approximate solution.

Besides the graph and the solution ``x`` the structure keeps, for the
cluster graph ``G - x``:

* ``clusters[l]``     members of the cluster labelled ``l``
* ``label_of[u]``     label of the cluster holding free vertex ``u``
* ``touching[x]``     labels of the clusters that solution vertex ``x`` touches
* ``plus[x, l]``      members of cluster ``l`` adjacent to ``x``
* ``minus[x, l]``     members of cluster ``l`` not adjacent to ``x``

Member sets are persistent (``PSet``) so that seeding ``plus``/``minus`` from
a whole cluster costs O(1). Labels come from a counter and are never reused.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import AssumptionViolated, InvariantError, NotFree, NotInX
from .graph import EdgeOp, Graph, induced_subgraph, is_cluster_graph
from .pset import EMPTY, PSet
from .solvers import WeightedGraph, cvd_3approx, cvd_exact_weighted


class CvdKernel(NamedTuple):
    forced: set[int]
    vertices: set[int]


class DynamicClusterDeletion:
    def __init__(self, n: int, debug: bool = False):
        self.g = Graph(n)
        self.x: set[int] = set()
        self.debug = debug
        self.clusters: dict[int, PSet] = {}
        self.label_of: dict[int, int] = {}
        self.touching: dict[int, set[int]] = {}
        self.plus: dict[tuple[int, int], PSet] = {}
        self.minus: dict[tuple[int, int], PSet] = {}
        for v in range(n):
            self.clusters[v] = EMPTY.insert(v)
            self.label_of[v] = v
        self._next_label = n
        #: largest |x| seen during the most recent update
        self.peak = 0

    @classmethod
    def from_solution(cls, g: Graph, x, debug: bool = False) -> "DynamicClusterDeletion":
        """Build the tables for a given graph and cluster vertex deletion ``x``.
        Clusters are labelled ``1, 2, ...`` in order of their smallest vertex."""
        x = set(x)
        if not is_cluster_graph(g, x):
            raise AssumptionViolated("x is not a cluster vertex deletion")
        st = cls(0, debug=debug)
        st.g = g.copy()
        st.x = x
        label = 0
        for v in range(g.n):
            if v in x or v in st.label_of:
                continue
            label += 1
            members = sorted(g.closed_neighborhood([v]) - x)
            st.clusters[label] = PSet.of(members)
            for u in members:
                st.label_of[u] = label
        st._next_label = label + 1
        for xv in x:
            st.touching[xv] = set()
            for u in g.adj[xv]:
                if u not in x:
                    st.touching[xv].add(st.label_of[u])
            for lab in st.touching[xv]:
                members = st.clusters[lab]
                st.plus[xv, lab] = PSet.of(u for u in members if g.has_edge(xv, u))
                st.minus[xv, lab] = PSet.of(u for u in members if not g.has_edge(xv, u))
        st.peak = len(x)
        return st

    def _new_label(self) -> int:
        label = self._next_label
        self._next_label += 1
        return label

    # -- moving single vertices ----------------------------------------

    def add_to_x(self, u: int) -> None:
        if u in self.x:
            raise NotFree(f"vertex {u} is already in the solution")
        g = self.g
        label = self.label_of.pop(u)
        members = self.clusters[label].remove(u)
        self.clusters[label] = members
        for x in self.x:
            key = (x, label)
            if label not in self.touching[x]:
                continue
            if g.has_edge(x, u):
                rest = self.plus[key].remove(u)
                if rest:
                    self.plus[key] = rest
                else:
                    self.touching[x].discard(label)
                    del self.plus[key]
                    del self.minus[key]
            else:
                self.minus[key] = self.minus[key].remove(u)
        self.x.add(u)
        if members:
            self.touching[u] = {label}
            self.plus[u, label] = members.copy()
            self.minus[u, label] = EMPTY
        else:
            del self.clusters[label]
            self.touching[u] = set()
        if len(self.x) > self.peak:
            self.peak = len(self.x)

    def remove_from_x(self, y: int) -> None:
        """Move ``y`` back to the cluster side. ``x - {y}`` must still be a
        cluster vertex deletion: ``y`` touches at most one cluster and is
        adjacent to all of it."""
        if y not in self.x:
            raise NotInX(f"vertex {y} is not in the solution")
        labels = self.touching[y]
        if len(labels) > 1:
            raise AssumptionViolated(f"vertex {y} touches {len(labels)} clusters")
        if labels:
            (label,) = labels
            if self.minus[y, label]:
                raise AssumptionViolated(f"vertex {y} misses part of cluster {label}")
        if self.debug and not is_cluster_graph(self.g, self.x - {y}):
            raise AssumptionViolated(f"removing {y} leaves an induced P3")
        g = self.g
        self.x.discard(y)
        if labels:
            del self.plus[y, label]
            del self.minus[y, label]
            members = self.clusters[label].insert(y)
        else:
            label = self._new_label()
            members = EMPTY.insert(y)
        del self.touching[y]
        self.clusters[label] = members
        self.label_of[y] = label
        for x in self.x:
            key = (x, label)
            adjacent = g.has_edge(x, y)
            if label in self.touching[x]:
                if adjacent:
                    self.plus[key] = self.plus[key].insert(y)
                else:
                    self.minus[key] = self.minus[key].insert(y)
            elif adjacent:
                self.touching[x].add(label)
                self.plus[key] = EMPTY.insert(y)
                self.minus[key] = members.copy().remove(y)

    # -- kernel and compression -----------------------------------------

    def kernel(self) -> CvdKernel:
        """Solution vertices touching more than ``|x| + 1`` clusters, and the
        sampled kernel vertex set for the rest."""
        size = len(self.x)
        cap = size + 1
        forced: set[int] = set()
        vertices: set[int] = set()
        for x in self.x:
            labels = self.touching[x]
            if len(labels) > cap:
                forced.add(x)
                continue
            vertices.add(x)
            for label in labels:
                vertices.update(self.plus[x, label].take(cap))
                vertices.update(self.minus[x, label].take(cap))
        return CvdKernel(forced, vertices)

    def compress(self) -> set[int]:
        """A 3-approximate solution computed on the kernel (the current
        solution is returned when the kernel answer is not small enough)."""
        forced, vertices = self.kernel()
        sub, back = induced_subgraph(self.g, vertices)
        y = {back[i] for i in cvd_3approx(sub)}
        if len(y) > len(self.x) - len(forced):
            return set(self.x)
        return forced | y

    def replace(self, target: set[int]) -> None:
        for v in sorted(target - self.x):
            self.add_to_x(v)
        for v in sorted(self.x - target):
            if self.debug and not is_cluster_graph(self.g, self.x):
                raise InvariantError("solution stopped being a cluster deletion")
            self.remove_from_x(v)

    def update(self, op: EdgeOp) -> None:
        self.g.check_op(op)
        self.peak = len(self.x)
        for w in sorted((op.u, op.v)):
            if w not in self.x:
                self.add_to_x(w)
        self.g.apply(op)
        self.replace(self.compress())
        if self.debug:
            self.check_invariants()

    def query(self) -> set[int]:
        """A minimum cluster vertex deletion; read-only."""
        forced, vertices = self.kernel()
        sub, back = induced_subgraph(self.g, vertices)
        y = cvd_exact_weighted(WeightedGraph(sub), len(self.x) - len(forced))
        if y is None:
            raise InvariantError("kernel has no solution within the current size")
        return forced | {back[i] for i in y}

    def solution(self) -> set[int]:
        return set(self.x)

    # -- consistency -------------------------------------------------------

    def check_invariants(self) -> None:
        """Recompute every table from ``g`` and ``x`` and compare."""
        g, x = self.g, self.x
        if not is_cluster_graph(g, x):
            raise InvariantError("G - X is not a cluster graph")
        seen: set[int] = set()
        for label, members in self.clusters.items():
            ms = set(members)
            if not ms:
                raise InvariantError(f"empty cluster {label} kept")
            if ms & seen or ms & x:
                raise InvariantError(f"cluster {label} overlaps")
            seen |= ms
            first = next(iter(ms))
            component = g.closed_neighborhood([first]) - x
            if component != ms:
                raise InvariantError(f"cluster {label} is not a maximal clique")
            for v in ms:
                if self.label_of[v] != label:
                    raise InvariantError(f"label of {v} is stale")
        if seen | x != set(range(g.n)) or set(self.label_of) != seen:
            raise InvariantError("clusters do not partition V - X")
        if set(self.touching) != x:
            raise InvariantError("touching keys differ from X")
        live = set()
        for xv in x:
            expect = {self.label_of[u] for u in g.adj[xv] if u not in x}
            if self.touching[xv] != expect:
                raise InvariantError(f"touching set of {xv} is wrong")
            for label in expect:
                members = set(self.clusters[label])
                plus, minus = set(self.plus[xv, label]), set(self.minus[xv, label])
                if plus != members & g.adj[xv] or minus != members - g.adj[xv]:
                    raise InvariantError(f"plus/minus of ({xv}, {label}) wrong")
                live.add((xv, label))
        if set(self.plus) != live or set(self.minus) != live:
            raise InvariantError("stale plus/minus entries")
