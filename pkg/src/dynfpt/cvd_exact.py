"""Fully dynamic cluster vertex deletion with an exact solution.

Free vertices (outside the solution ``x``) are grouped into equivalence
classes: same cluster and same neighbourhood inside ``x``. Members of one
class are interchangeable, so compression runs on a small weighted graph
with one node per class instead of one per vertex.

Class keys are sorted tuples of solution vertices. Moving a vertex into or
out of ``x`` rewrites the keys of its own cluster only, because a free
vertex is adjacent to exactly one cluster.
"""

from __future__ import annotations

from typing import NamedTuple, Union

from .errors import AssumptionViolated, InvariantError, NotFree, NotInX
from .graph import EdgeOp, Graph, is_cluster_graph
from .solvers import WeightedGraph, cvd_exact_weighted

Key = tuple[int, ...]


class ClassNode(NamedTuple):
    label: int
    key: Key


class CompressionInstance(NamedTuple):
    weighted: WeightedGraph
    nodes: list[Union[int, ClassNode]]   # G' vertex -> solution vertex or class
    kept: set[int]                       # vertices touching more than |x| clusters


class DynamicClusterDeletionExact:
    def __init__(self, n: int, debug: bool = False):
        self.g = Graph(n)
        self.x: set[int] = set()
        self.debug = debug
        self.clusters: dict[int, set[int]] = {v: {v} for v in range(n)}
        self.classes: dict[int, dict[Key, set[int]]] = {v: {(): {v}} for v in range(n)}
        self.label_of: dict[int, int] = {v: v for v in range(n)}
        self.touching: dict[int, set[int]] = {}
        self._next_label = n

    def _new_label(self) -> int:
        label = self._next_label
        self._next_label += 1
        return label

    def _x_neighbors(self, v: int, x=None) -> Key:
        adj = self.g.adj[v]
        return tuple(sorted(w for w in (self.x if x is None else x) if w in adj))

    def x_side(self, label: int) -> Key:
        """Solution vertices adjacent to the cluster ``label``."""
        return tuple(sorted(x for x in self.x if label in self.touching[x]))

    # -- moving single vertices ----------------------------------------

    def move_to_x(self, v: int) -> None:
        if v in self.x:
            raise NotFree(f"vertex {v} is already in the solution")
        label = self.label_of.pop(v)
        key = self._x_neighbors(v)
        table = self.classes[label]
        cls = table[key]
        cls.discard(v)
        members = self.clusters[label]
        members.discard(v)
        if not members:
            del self.clusters[label]
            del self.classes[label]
            for u in key:
                self.touching[u].discard(label)
        elif not cls:
            del table[key]
            for u in key:
                if not any(u in k for k in table):
                    self.touching[u].discard(label)
        self.x.add(v)
        if members:
            self.touching[v] = {label}
            self.classes[label] = {
                tuple(sorted(k + (v,))): c for k, c in table.items()
            }
        else:
            self.touching[v] = set()

    def remove_from_x(self, v: int) -> None:
        """Move ``v`` out of the solution; ``x - {v}`` must stay a cluster
        vertex deletion."""
        if v not in self.x:
            raise NotInX(f"vertex {v} is not in the solution")
        labels = self.touching[v]
        if len(labels) > 1:
            raise AssumptionViolated(f"vertex {v} touches {len(labels)} clusters")
        if labels:
            (label,) = labels
            if any(v not in k for k in self.classes[label]):
                raise AssumptionViolated(f"vertex {v} misses part of cluster {label}")
        if self.debug and not is_cluster_graph(self.g, self.x - {v}):
            raise AssumptionViolated(f"removing {v} leaves an induced P3")
        self.x.discard(v)
        del self.touching[v]
        key = self._x_neighbors(v)
        if labels:
            table = {
                tuple(w for w in k if w != v): c
                for k, c in self.classes[label].items()
            }
        else:
            label = self._new_label()
            self.clusters[label] = set()
            table = {}
        self.classes[label] = table
        table.setdefault(key, set()).add(v)
        self.clusters[label].add(v)
        self.label_of[v] = label
        for u in key:
            self.touching[u].add(label)

    # -- compression ---------------------------------------------------------

    def compression_instance(self) -> CompressionInstance:
        size = len(self.x)
        candidates = sorted(x for x in self.x if len(self.touching[x]) <= size)
        kept = self.x.difference(candidates)
        labels = sorted({l for x in candidates for l in self.touching[x]})
        nodes: list[Union[int, ClassNode]] = list(candidates)
        weights = [1] * len(candidates)
        for label in labels:
            for key in sorted(self.classes[label]):
                nodes.append(ClassNode(label, key))
                weights.append(len(self.classes[label][key]))
        g = Graph(len(nodes))
        index = {x: i for i, x in enumerate(candidates)}
        for i, x in enumerate(candidates):
            for y in candidates[i + 1:]:
                if self.g.has_edge(x, y):
                    g.add_edge(i, index[y])
        start = len(candidates)
        for j in range(start, len(nodes)):
            node = nodes[j]
            for x in node.key:
                if x in index:
                    g.add_edge(index[x], j)
            for k in range(j + 1, len(nodes)):
                if nodes[k].label == node.label:
                    g.add_edge(j, k)
        return CompressionInstance(WeightedGraph(g, weights), nodes, kept)

    def compress(self) -> set[int]:
        """A minimum cluster vertex deletion for the current graph, assuming
        ``x`` is a cluster vertex deletion of it."""
        inst = self.compression_instance()
        n_candidates = sum(1 for node in inst.nodes if isinstance(node, int))
        chosen = cvd_exact_weighted(inst.weighted, n_candidates, lexicographic=True)
        if chosen is None:
            raise InvariantError("compression instance has no solution")
        target = set(inst.kept)
        for i in chosen:
            node = inst.nodes[i]
            if isinstance(node, ClassNode):
                target |= self.classes[node.label][node.key]
            else:
                target.add(node)
        return target

    def exchange(self, target: set[int]) -> None:
        for v in sorted(target - self.x):
            self.move_to_x(v)
        for v in sorted(self.x - target):
            if self.debug and not is_cluster_graph(self.g, self.x):
                raise InvariantError("solution stopped being a cluster deletion")
            self.remove_from_x(v)

    def update(self, op: EdgeOp) -> None:
        self.g.check_op(op)
        for w in sorted((op.u, op.v)):
            if w not in self.x:
                self.move_to_x(w)
        self.g.apply(op)
        self.exchange(self.compress())
        if self.debug:
            self.check_invariants()

    def solution(self) -> set[int]:
        return set(self.x)

    # -- consistency -------------------------------------------------------

    def canonical(self) -> tuple:
        """Label-free description of the class structure, for comparisons."""
        out = []
        for label, members in self.clusters.items():
            classes = tuple(sorted((k, tuple(sorted(c))) for k, c in self.classes[label].items()))
            out.append((tuple(sorted(members)), classes))
        touching = tuple(
            sorted((x, tuple(sorted(min(self.clusters[l]) for l in self.touching[x]))) for x in self.x)
        )
        return tuple(sorted(self.x)), tuple(sorted(out)), touching

    @classmethod
    def rebuild(cls, g: Graph, x) -> "DynamicClusterDeletionExact":
        """Build the class structure from scratch for ``g`` and solution ``x``."""
        st = cls(0)
        st.g = g.copy()
        st.x = set(x)
        st._next_label = 0
        for v in range(g.n):
            if v in st.x or v in st.label_of:
                continue
            label = st._new_label()
            members = g.closed_neighborhood([v]) - st.x
            st.clusters[label] = set(members)
            table: dict[Key, set[int]] = {}
            for u in members:
                st.label_of[u] = label
                table.setdefault(st._x_neighbors(u), set()).add(u)
            st.classes[label] = table
        for xv in st.x:
            st.touching[xv] = {st.label_of[u] for u in g.adj[xv] if u not in st.x}
        return st

    def check_invariants(self) -> None:
        if not is_cluster_graph(self.g, self.x):
            raise InvariantError("G - X is not a cluster graph")
        fresh = type(self).rebuild(self.g, self.x)
        if fresh.canonical() != self.canonical():
            raise InvariantError("class structure differs from a rebuild")
        for label, table in self.classes.items():
            if any(not c for c in table.values()):
                raise InvariantError(f"empty class kept in cluster {label}")
            if len(table) > 2 ** len(self.x):
                raise InvariantError("too many classes")
