"""Fully dynamic chromatic number, parameterized by the cluster vertex
deletion number.

On top of the exact cluster-deletion structure we keep, for every cluster
``l`` and every partition ``p`` of its solution-side neighbourhood ``X_l``,
the fewest colours ``chi[l][p]`` needed to extend ``p`` over the cluster
(edges inside ``X_l`` ignored). Clusters with the same ``X_l`` pool their
values per partition in sorted multisets, from which the chromatic number
is one min-max over proper colourings of ``G[X]``.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from sortedcontainers import SortedList

from .cvd_exact import DynamicClusterDeletionExact, Key
from .errors import CapExceeded, InvariantError, StaleLabel
from .graph import EdgeOp
from .solvers import FlowNet, max_flow

PARTITION_CAP = 12


@dataclass(frozen=True)
class Partition:
    """A set partition as a restricted-growth string over sorted elements:
    ``blocks[i]`` is the block of ``elements[i]`` and every block index first
    appears after all smaller ones."""

    elements: tuple[int, ...]
    blocks: tuple[int, ...]

    @property
    def size(self) -> int:
        return max(self.blocks) + 1 if self.blocks else 0

    def block_of(self, v: int) -> int:
        return self.blocks[self.elements.index(v)]

    def restrict(self, subset: Sequence[int]) -> "Partition":
        keep = set(subset)
        elems, raw = [], []
        for e, b in zip(self.elements, self.blocks):
            if e in keep:
                elems.append(e)
                raw.append(b)
        return Partition(tuple(elems), _canonical(raw))

    def groups(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.size)]
        for e, b in zip(self.elements, self.blocks):
            out[b].append(e)
        return out


def _canonical(raw: Sequence[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(b, len(relabel)) for b in raw)


def enumerate_partitions(s, cap: int = PARTITION_CAP) -> Iterator[Partition]:
    """Every partition of ``s`` once, in lexicographic restricted-growth order."""
    elements = tuple(sorted(s))
    n = len(elements)
    if n > cap:
        raise CapExceeded(f"{n} elements exceed the partition cap {cap}")
    rgs = [0] * n

    def grow(i: int, blocks: int) -> Iterator[Partition]:
        if i == n:
            yield Partition(elements, tuple(rgs))
            return
        for b in range(blocks + 1):
            rgs[i] = b
            yield from grow(i + 1, max(blocks, b + 1))

    if n == 0:
        yield Partition((), ())
        return
    rgs[0] = 0
    yield from grow(1, 1)


def proper_colorings(g, s) -> Iterator[Partition]:
    """Partitions of ``s`` with no edge of ``g`` inside a block."""
    for p in enumerate_partitions(s):
        ok = True
        for group in p.groups():
            for i, a in enumerate(group):
                if any(g.has_edge(a, b) for b in group[i + 1:]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield p


def chi_flow_net(classes: dict[Key, int], p: Partition) -> tuple[FlowNet, int]:
    """Flow network pairing the colours of ``p`` with cluster classes that may
    reuse them. ``classes`` maps a class key (neighbours in ``X_l``) to its
    size. Returns the network and the cluster size."""
    colors = p.size
    live = [(key, size) for key, size in sorted(classes.items()) if size]
    source, sink = 0, 1
    net = FlowNet(2 + colors + len(live), source, sink)
    for i in range(colors):
        net.add_arc(source, 2 + i, 1)
    for j, (key, size) in enumerate(live):
        node = 2 + colors + j
        net.add_arc(node, sink, size)
        forbidden = {p.block_of(x) for x in key}
        for i in range(colors):
            if i not in forbidden:
                net.add_arc(2 + i, node, 1)
    return net, sum(size for _, size in live)


def chi_value(classes: dict[Key, int], p: Partition) -> int:
    """Fewest colours extending ``p`` over a cluster with the given classes:
    ``|p| + |C_l| - r`` with ``r`` the number of cluster vertices able to
    reuse a colour of ``p``."""
    net, members = chi_flow_net(classes, p)
    return p.size + members - max_flow(net)


class DynamicChromaticNumber(DynamicClusterDeletionExact):
    def __init__(self, n: int, debug: bool = False):
        super().__init__(n, debug=debug)
        self.chi: dict[int, dict[tuple[int, ...], int]] = {}
        self.chi_key: dict[int, Key] = {}
        self.lam: dict[Key, dict[tuple[int, ...], SortedList]] = {}
        for label in self.clusters:
            self._deposit(label)
        self.answer = self._evaluate()

    # -- table maintenance ------------------------------------------------

    def compute_chi(self, label: int, p: Partition) -> int:
        if label not in self.clusters:
            raise StaleLabel(label)
        if p.elements != self.x_side(label):
            raise StaleLabel(f"partition is not over X_l of cluster {label}")
        sizes = {key: len(c) for key, c in self.classes[label].items()}
        return chi_value(sizes, p)

    def _withdraw(self, label: int) -> None:
        values = self.chi.pop(label, None)
        if values is None:
            return
        key = self.chi_key.pop(label)
        bucket = self.lam[key]
        for rgs, value in values.items():
            ms = bucket[rgs]
            ms.remove(value)
            if not ms:
                del bucket[rgs]
        if not bucket:
            del self.lam[key]

    def _deposit(self, label: int) -> None:
        key = self.x_side(label)
        sizes = {k: len(c) for k, c in self.classes[label].items()}
        values = {p.blocks: chi_value(sizes, p) for p in enumerate_partitions(key)}
        self.chi[label] = values
        self.chi_key[label] = key
        bucket = self.lam.setdefault(key, {})
        for rgs, value in values.items():
            bucket.setdefault(rgs, SortedList()).add(value)

    def move_to_x(self, v: int) -> None:
        label = self.label_of.get(v)
        if label is not None:
            self._withdraw(label)
        super().move_to_x(v)
        if label in self.clusters:
            self._deposit(label)

    def remove_from_x(self, v: int) -> None:
        old = self.touching.get(v)
        if old is not None and len(old) == 1:
            self._withdraw(next(iter(old)))
        super().remove_from_x(v)
        self._deposit(self.label_of[v])

    def update(self, op: EdgeOp) -> None:
        super().update(op)
        self.answer = self._evaluate()

    # -- answer ---------------------------------------------------------------

    def _evaluate(self) -> int:
        if self.g.n == 0:
            return 0
        best = None
        keys = list(self.lam)
        for p in proper_colorings(self.g, self.x):
            value = p.size
            for key in keys:
                ms = self.lam[key].get(p.restrict(key).blocks)
                if ms and ms[-1] > value:
                    value = ms[-1]
            if best is None or value < best:
                best = value
        return best

    def chromatic_number(self) -> int:
        return self.answer

    def check_invariants(self) -> None:
        super().check_invariants()
        if set(self.chi) != set(self.clusters):
            raise InvariantError("chi table keys differ from live clusters")
        expect: dict[Key, dict[tuple[int, ...], list[int]]] = {}
        for label in self.clusters:
            key = self.x_side(label)
            if self.chi_key[label] != key:
                raise InvariantError(f"stale X_l for cluster {label}")
            for p in enumerate_partitions(key):
                value = self.compute_chi(label, p)
                if self.chi[label].get(p.blocks) != value:
                    raise InvariantError(f"chi({label}, {p.blocks}) is stale")
                expect.setdefault(key, {}).setdefault(p.blocks, []).append(value)
        got = {k: {r: sorted(ms) for r, ms in b.items()} for k, b in self.lam.items()}
        want = {k: {r: sorted(v) for r, v in b.items()} for k, b in expect.items()}
        if got != want:
            raise InvariantError("lambda multisets differ from the chi table")
