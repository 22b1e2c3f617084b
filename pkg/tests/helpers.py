"""Random update streams shared by the test modules."""

from __future__ import annotations

import random
from typing import Optional

from dynfpt.graph import EdgeOp, Graph


def random_stream(
    rng: random.Random,
    n: int,
    length: int,
    p_delete: float = 0.35,
    max_degree: Optional[int] = None,
) -> list[EdgeOp]:
    """A valid mixed stream of ``length`` ops on ``n`` vertices, starting empty."""
    g = Graph(n)
    ops: list[EdgeOp] = []
    if n < 2:
        return ops
    attempts = 0
    while len(ops) < length and attempts < 50 * length:
        attempts += 1
        edges = list(g.edges())
        if edges and rng.random() < p_delete:
            op = EdgeOp.delete(*rng.choice(edges))
        else:
            u, v = rng.sample(range(n), 2)
            if g.has_edge(u, v):
                continue
            if max_degree is not None and max(g.degree(u), g.degree(v)) >= max_degree:
                continue
            op = EdgeOp.insert(u, v)
        g.apply(op)
        ops.append(op)
    return ops


def final_graph(n: int, ops: list[EdgeOp]) -> Graph:
    g = Graph(n)
    for op in ops:
        g.apply(op)
    return g


def write_stream(path, n: int, ops: list[EdgeOp], queries=()) -> None:
    lines = [f"n {n}"]
    for op in ops:
        lines.append(f"{op.kind.value} {op.u} {op.v}")
        lines.extend(f"? {q}" for q in queries)
    path.write_text("\n".join(lines) + "\n")
