"""Persistent ordered integer sets.

Nodes are immutable tuples ``(key, priority, left, right)`` forming a treap
whose priorities are a fixed hash of the key, so the shape of a tree depends
only on its contents. Every update copies the search path and shares the
rest, which makes copying a set a matter of handing out the same root.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .errors import DuplicateElement, MissingElement

_MASK = (1 << 64) - 1

#: Number of tree nodes created since import; read by the sharing tests.
allocations = 0


def _priority(key: int) -> int:
    # splitmix64 finalizer
    z = (key * 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def _node(key, prio, left, right):
    global allocations
    allocations += 1
    return (key, prio, left, right)


def _insert(node, key, prio):
    if node is None:
        return _node(key, prio, None, None)
    k, p, left, right = node
    if key < k:
        sub = _insert(left, key, prio)
        if sub[1] > p:
            # rotate right
            return _node(sub[0], sub[1], sub[2], _node(k, p, sub[3], right))
        return _node(k, p, sub, right)
    if key > k:
        sub = _insert(right, key, prio)
        if sub[1] > p:
            return _node(sub[0], sub[1], _node(k, p, left, sub[2]), sub[3])
        return _node(k, p, left, sub)
    raise DuplicateElement(key)


def _merge(a, b):
    """Join two treaps where every key of ``a`` is below every key of ``b``."""
    if a is None:
        return b
    if b is None:
        return a
    if a[1] > b[1]:
        return _node(a[0], a[1], a[2], _merge(a[3], b))
    return _node(b[0], b[1], _merge(a, b[2]), b[3])


def _remove(node, key):
    if node is None:
        raise MissingElement(key)
    k, p, left, right = node
    if key < k:
        return _node(k, p, _remove(left, key), right)
    if key > k:
        return _node(k, p, left, _remove(right, key))
    return _merge(left, right)


class PSet:
    """Immutable sorted set of ints with O(log n) expected updates.

    >>> s = PSet.of([1, 2])
    >>> t = s.remove(1)
    >>> list(t), list(s)
    ([2], [1, 2])
    """

    __slots__ = ("_root", "_size")

    def __init__(self, _root=None, _size: int = 0):
        self._root = _root
        self._size = _size

    @classmethod
    def of(cls, items=()) -> "PSet":
        s = EMPTY
        for x in items:
            s = s.insert(x)
        return s

    def insert(self, x: int) -> "PSet":
        return PSet(_insert(self._root, x, _priority(x)), self._size + 1)

    def remove(self, x: int) -> "PSet":
        return PSet(_remove(self._root, x), self._size - 1)

    def copy(self) -> "PSet":
        return self

    def __contains__(self, x: int) -> bool:
        node = self._root
        while node is not None:
            k = node[0]
            if x == k:
                return True
            node = node[2] if x < k else node[3]
        return False

    def __len__(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self._size > 0

    def __iter__(self) -> Iterator[int]:
        stack = []
        node = self._root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node[2]
            node = stack.pop()
            yield node[0]
            node = node[3]

    def take(self, k: int) -> list[int]:
        """The ``min(k, len(self))`` smallest elements in increasing order."""
        out: list[int] = []
        if k <= 0:
            return out
        for x in self:
            out.append(x)
            if len(out) == k:
                break
        return out

    def min(self) -> Optional[int]:
        node = self._root
        if node is None:
            return None
        while node[2] is not None:
            node = node[2]
        return node[0]

    def depth(self) -> int:
        def walk(node):
            if node is None:
                return 0
            return 1 + max(walk(node[2]), walk(node[3]))
        return walk(self._root)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PSet):
            return NotImplemented
        return self._size == other._size and list(self) == list(other)

    def __hash__(self):
        return hash(tuple(self))

    def __repr__(self) -> str:
        return f"PSet({list(self)})"


EMPTY = PSet()


def pset_insert(s: PSet, x: int) -> PSet:
    return s.insert(x)


def pset_remove(s: PSet, x: int) -> PSet:
    return s.remove(x)


def pset_copy(s: PSet) -> PSet:
    return s.copy()


def pset_take(s: PSet, k: int) -> list[int]:
    return s.take(k)
