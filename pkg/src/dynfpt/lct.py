"""Link-cut trees (splay-tree representation with lazy path reversal).

Vertices are ``0..n-1``. Each preferred path is a splay tree keyed by depth;
``_par[v]`` is either the splay parent or, for a splay root, the path-parent
pointer. Every public operation, including queries, restructures the
auxiliary trees, so a forest must not be shared between threads.
"""

from __future__ import annotations

from typing import Optional

from .errors import DifferentTrees, NoSuchForestEdge, NotARoot, SameTree

_NIL = -1


class LinkCutForest:
    def __init__(self, n: int):
        self.n = n
        self._left = [_NIL] * n
        self._right = [_NIL] * n
        self._par = [_NIL] * n
        self._rev = [False] * n
        self._edges: set[tuple[int, int]] = set()

    # -- splay machinery -------------------------------------------------

    def _is_splay_root(self, v: int) -> bool:
        p = self._par[v]
        return p == _NIL or (self._left[p] != v and self._right[p] != v)

    def _push(self, v: int) -> None:
        if self._rev[v]:
            self._rev[v] = False
            left, right = self._left, self._right
            a, b = left[v], right[v]
            left[v], right[v] = b, a
            if a != _NIL:
                self._rev[a] = not self._rev[a]
            if b != _NIL:
                self._rev[b] = not self._rev[b]

    def _rotate(self, v: int) -> None:
        left, right, par = self._left, self._right, self._par
        p = par[v]
        g = par[p]
        if not self._is_splay_root(p):
            if left[g] == p:
                left[g] = v
            else:
                right[g] = v
        par[v] = g
        if left[p] == v:
            c = right[v]
            left[p] = c
            right[v] = p
        else:
            c = left[v]
            right[p] = c
            left[v] = p
        if c != _NIL:
            par[c] = p
        par[p] = v

    def _splay(self, v: int) -> None:
        # push pending reversals top-down along the splay path first
        path = [v]
        u = v
        while not self._is_splay_root(u):
            u = self._par[u]
            path.append(u)
        for u in reversed(path):
            self._push(u)
        left, par = self._left, self._par
        while not self._is_splay_root(v):
            p = par[v]
            if not self._is_splay_root(p):
                g = par[p]
                if (left[g] == p) == (left[p] == v):
                    self._rotate(p)
                else:
                    self._rotate(v)
            self._rotate(v)

    def _access(self, v: int) -> int:
        """Make the root-to-``v`` path preferred; return the last node at
        which the walk switched paths (used by ``nca``)."""
        last = _NIL
        u = v
        while u != _NIL:
            self._splay(u)
            self._right[u] = last
            last = u
            u = self._par[u]
        self._splay(v)
        return last

    def _find_root(self, v: int) -> int:
        self._access(v)
        u = v
        self._push(u)
        while self._left[u] != _NIL:
            u = self._left[u]
            self._push(u)
        self._splay(u)
        return u

    # -- public interface ------------------------------------------------

    def root(self, v: int) -> int:
        return self._find_root(v)

    def connected(self, u: int, v: int) -> bool:
        return u == v or self._find_root(u) == self._find_root(v)

    def evert(self, v: int) -> None:
        self._access(v)
        self._rev[v] = not self._rev[v]
        self._push(v)

    def parent(self, v: int) -> Optional[int]:
        self._access(v)
        self._push(v)
        u = self._left[v]
        if u == _NIL:
            return None
        self._push(u)
        while self._right[u] != _NIL:
            u = self._right[u]
            self._push(u)
        self._splay(u)
        return u

    def link(self, r: int, v: int) -> None:
        """Make root ``r`` a child of ``v`` (they must be in different trees)."""
        if self._find_root(r) != r:
            raise NotARoot(f"{r} is not the root of its tree")
        if self._find_root(v) == r:
            raise SameTree(f"{r} and {v} are already connected")
        self._access(r)
        self._par[r] = v
        self._edges.add((r, v) if r < v else (v, r))

    def _cut_from_parent(self, v: int) -> None:
        self._access(v)
        self._push(v)
        c = self._left[v]
        self._left[v] = _NIL
        self._par[c] = _NIL

    def cut(self, u: int, v: int) -> None:
        """Remove forest edge ``{u, v}`` in either orientation; the rooting of
        both halves is preserved."""
        key = (u, v) if u < v else (v, u)
        if key not in self._edges:
            raise NoSuchForestEdge(f"no forest edge ({u}, {v})")
        if self.parent(v) == u:
            self._cut_from_parent(v)
        else:
            self._cut_from_parent(u)
        self._edges.discard(key)

    def nca(self, u: int, v: int) -> int:
        if self._find_root(u) != self._find_root(v):
            raise DifferentTrees(f"{u} and {v} are in different trees")
        self._access(u)
        return self._access(v)

    def meet(self, u: int, v: int, w: int) -> int:
        """Vertex where the paths ``v -> u`` and ``w -> u`` first join."""
        ru = self._find_root(u)
        if self._find_root(v) != ru or self._find_root(w) != ru:
            raise DifferentTrees(f"{u}, {v}, {w} are not in one tree")
        self.evert(u)
        return self.nca(v, w)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edges

    def edges(self) -> set[tuple[int, int]]:
        """Represented edges as ``(min, max)`` pairs."""
        return set(self._edges)
