"""Simple undirected graphs over a fixed vertex universe, plus a small
multigraph used by the feedback-vertex-set machinery."""

from __future__ import annotations

import enum
from collections import Counter
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import DuplicateEdge, MissingEdge, OutOfRange, SelfLoop


class OpKind(enum.Enum):
    INSERT = "+"
    DELETE = "-"


class EdgeOp(NamedTuple):
    kind: OpKind
    u: int
    v: int

    @classmethod
    def insert(cls, u: int, v: int) -> "EdgeOp":
        return cls(OpKind.INSERT, u, v)

    @classmethod
    def delete(cls, u: int, v: int) -> "EdgeOp":
        return cls(OpKind.DELETE, u, v)


class Graph:
    """Mutable simple undirected graph on vertices ``0..n-1``.

    Only edges change after construction. Neighbor sets are plain ``set``
    objects; callers needing a reproducible order use ``sorted_neighbors``.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.m = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.n = self.n
        g.adj = [set(a) for a in self.adj]
        g.m = self.m
        return g

    def _check(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise OutOfRange(f"edge ({u}, {v}) outside vertex range 0..{self.n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop on vertex {u}")

    def add_edge(self, u: int, v: int) -> None:
        self._check(u, v)
        if v in self.adj[u]:
            raise DuplicateEdge(f"edge ({u}, {v}) already present")
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.m += 1

    def remove_edge(self, u: int, v: int) -> None:
        self._check(u, v)
        if v not in self.adj[u]:
            raise MissingEdge(f"edge ({u}, {v}) not present")
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.m -= 1

    def apply(self, op: EdgeOp) -> None:
        if op.kind is OpKind.INSERT:
            self.add_edge(op.u, op.v)
        else:
            self.remove_edge(op.u, op.v)

    def check_op(self, op: EdgeOp) -> None:
        """Raise the error ``apply(op)`` would raise, without mutating."""
        self._check(op.u, op.v)
        present = op.v in self.adj[op.u]
        if op.kind is OpKind.INSERT and present:
            raise DuplicateEdge(f"edge ({op.u}, {op.v}) already present")
        if op.kind is OpKind.DELETE and not present:
            raise MissingEdge(f"edge ({op.u}, {op.v}) not present")

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> set[int]:
        return self.adj[v]

    def sorted_neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield u, v

    def closed_neighborhood(self, vs: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for v in vs:
            out.add(v)
            out.update(self.adj[v])
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[S]`` relabelled to ``0..|S|-1`` and the table mapping new ids
    back to ids of ``g`` (new id ``i`` is ``back[i]``; ids keep their order)."""
    back = sorted(set(s))
    for v in back:
        if not 0 <= v < g.n:
            raise OutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(back)}
    sub = Graph(len(back))
    for i, v in enumerate(back):
        nbrs = g.adj[v]
        if len(nbrs) <= len(back):
            js = [index[w] for w in nbrs if w in index]
        else:
            js = [index[w] for w in back if w in nbrs]
        sub.adj[i].update(js)
        sub.m += len(js)
    sub.m //= 2
    return sub, back


def find_induced_p3(g: Graph) -> Optional[tuple[int, int, int]]:
    """First induced path ``a - b - c`` in id order of ``b``, then ``a``, then
    ``c``; ``None`` iff ``g`` is a cluster graph."""
    adj = g.adj
    for b in range(g.n):
        nb = adj[b]
        if len(nb) < 2:
            continue
        order = sorted(nb)
        for a in order:
            na = adj[a]
            if len(nb.difference(na)) == 1:
                continue
            for c in order:
                if c != a and c not in na:
                    return a, b, c
    return None


def is_cluster_graph(g: Graph, removed: Iterable[int] = ()) -> bool:
    """True iff ``g`` minus ``removed`` has no induced P3."""
    gone = set(removed)
    for b in range(g.n):
        if b in gone:
            continue
        nb = g.adj[b] - gone
        for a in nb:
            if not nb <= (g.adj[a] | {a}):
                return False
    return True


class MultiGraph:
    """Undirected multigraph with self-loops and arbitrary integer vertex ids.

    Edge multiplicities live in ``mult`` keyed by ``(a, b)`` with ``a <= b``;
    a self-loop is ``(a, a)`` and counts twice towards the degree of ``a``.
    """

    def __init__(self, vertices: Iterable[int] = ()):
        self.vertices: set[int] = set(vertices)
        self.mult: Counter[tuple[int, int]] = Counter()
        self._nbrs: dict[int, Counter[int]] = {v: Counter() for v in self.vertices}

    @classmethod
    def from_graph(cls, g: Graph, keep: Optional[Iterable[int]] = None) -> "MultiGraph":
        vs = set(range(g.n)) if keep is None else set(keep)
        mg = cls(vs)
        for u, v in g.edges():
            if u in vs and v in vs:
                mg.add_edge(u, v)
        return mg

    def copy(self) -> "MultiGraph":
        mg = MultiGraph.__new__(type(self))
        mg.vertices = set(self.vertices)
        mg.mult = Counter(self.mult)
        mg._nbrs = {v: Counter(c) for v, c in self._nbrs.items()}
        return mg

    def add_vertex(self, v: int) -> None:
        if v not in self.vertices:
            self.vertices.add(v)
            self._nbrs[v] = Counter()

    def add_edge(self, a: int, b: int, k: int = 1) -> None:
        self.add_vertex(a)
        self.add_vertex(b)
        key = (a, b) if a <= b else (b, a)
        self.mult[key] += k
        self._nbrs[a][b] += k
        if a != b:
            self._nbrs[b][a] += k

    def remove_vertex(self, v: int) -> None:
        for w in list(self._nbrs[v]):
            key = (v, w) if v <= w else (w, v)
            del self.mult[key]
            if w != v:
                del self._nbrs[w][v]
        del self._nbrs[v]
        self.vertices.discard(v)

    def neighbors(self, v: int) -> Counter[int]:
        """Neighbor -> multiplicity (a loop appears as ``v`` itself)."""
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        c = self._nbrs[v]
        return sum(c.values()) + c.get(v, 0)

    def edge_count(self) -> int:
        return sum(self.mult.values())

    def edge_multiset(self) -> Counter[tuple[int, int]]:
        return Counter({k: m for k, m in self.mult.items() if m})

    def __repr__(self) -> str:
        return f"{type(self).__name__}(|V|={len(self.vertices)}, |E|={self.edge_count()})"
