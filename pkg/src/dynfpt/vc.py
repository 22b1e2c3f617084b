"""Fully dynamic vertex cover.

The structure keeps the graph and a 2-approximate cover ``x``. After each
edge update it recomputes the approximation on a kernel built from ``x``:
vertices of degree above ``|x|`` must be in every small cover and are kept,
and the closed neighbourhood of the rest has size ``O(|x|^2)``.
"""

from __future__ import annotations

from typing import NamedTuple

from .graph import EdgeOp, Graph, OpKind, induced_subgraph
from .solvers import vc_2approx, vc_exact


class VcKernel(NamedTuple):
    forced: set[int]      # high-degree part of the cover, in every small cover
    vertices: set[int]    # closed neighbourhood of the low-degree part


class DynamicVertexCover:
    def __init__(self, n: int):
        self.g = Graph(n)
        self.x: set[int] = set()

    def kernel(self) -> VcKernel:
        g, x = self.g, self.x
        size = len(x)
        forced = {v for v in x if g.degree(v) > size}
        vertices = g.closed_neighborhood(v for v in x if v not in forced)
        vertices -= forced
        return VcKernel(forced, vertices)

    def _solve_kernel(self, solver) -> set[int]:
        forced, vertices = self.kernel()
        sub, back = induced_subgraph(self.g, vertices)
        return forced | {back[i] for i in solver(sub)}

    def update(self, op: EdgeOp) -> None:
        self.g.check_op(op)
        if op.kind is OpKind.INSERT and op.u not in self.x and op.v not in self.x:
            self.x.add(min(op.u, op.v))
        self.g.apply(op)
        self.x = self._solve_kernel(vc_2approx)

    def query(self) -> set[int]:
        """A minimum vertex cover; the maintained approximation is untouched."""
        return self._solve_kernel(vc_exact)

    def solution(self) -> set[int]:
        return set(self.x)


def vc_update(st: DynamicVertexCover, op: EdgeOp) -> None:
    st.update(op)


def vc_query(st: DynamicVertexCover) -> set[int]:
    return st.query()
