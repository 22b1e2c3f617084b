"""Command-line front end: ``replay``, ``bench`` and ``kernelize-cvd``.

Stream files start with ``n <N>`` and continue with ``+ u v``, ``- u v`` or
``? <problem>`` lines; ``#`` comments and blank lines are skipped. Output is
CSV on stdout, diagnostics go to stderr. Exit codes: 0 ok, 1 bad input,
2 internal failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, TextIO, Union

from .chromatic import DynamicChromaticNumber
from .cvd_exact import DynamicClusterDeletionExact
from .cvd_kernel import DynamicClusterDeletion
from .errors import DegreeBoundExceeded, DynFptError, GraphError, InvalidOp, InvariantError, ParseError
from .fvs import DynamicFeedbackVertexSet
from .graph import EdgeOp, Graph, MultiGraph, OpKind, induced_subgraph
from .solvers import chromatic_exact, cvd_exact, disjoint_fvs, vc_exact
from .vc import DynamicVertexCover

PROBLEMS = ("vc", "cvd", "cvd-exact", "chromatic", "fvs")
HEADER = "index,op,u,v,problem,answer,micros"


@dataclass(frozen=True)
class Query:
    problem: str


Item = Union[EdgeOp, Query]


@dataclass
class Stream:
    n: int
    items: list[tuple[int, Item]]   # (line number, op or query)

    def problems(self) -> list[str]:
        seen = {it.problem for _, it in self.items if isinstance(it, Query)}
        return [p for p in PROBLEMS if p in seen]


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, f"expected an integer, got {token!r}") from None


def parse_stream(lines: Iterable[str]) -> Stream:
    n: Optional[int] = None
    items: list[tuple[int, Item]] = []
    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        head = parts[0]
        if n is None:
            if head != "n" or len(parts) != 2:
                raise ParseError(lineno, "stream must start with 'n <N>'")
            n = _int(parts[1], lineno)
            if n < 0:
                raise ParseError(lineno, "vertex count must be non-negative")
            continue
        if head in ("+", "-") and len(parts) == 3:
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            kind = OpKind.INSERT if head == "+" else OpKind.DELETE
            items.append((lineno, EdgeOp(kind, u, v)))
        elif head == "?" and len(parts) == 2:
            if parts[1] not in PROBLEMS:
                raise ParseError(lineno, f"unknown problem {parts[1]!r}")
            items.append((lineno, Query(parts[1])))
        else:
            raise ParseError(lineno, f"cannot parse {text!r}")
    if n is None:
        raise ParseError(1, "missing 'n <N>' header")
    return Stream(n, items)


# -- per-problem runners -------------------------------------------------------

class Dynamic:
    """One maintained structure; ``answer`` returns (size, vertex list)."""

    def __init__(self, problem: str, n: int, max_degree: Optional[int]):
        self.problem = problem
        if problem == "vc":
            self.st = DynamicVertexCover(n)
        elif problem == "cvd":
            self.st = DynamicClusterDeletion(n)
        elif problem == "cvd-exact":
            self.st = DynamicClusterDeletionExact(n)
        elif problem == "chromatic":
            self.st = DynamicChromaticNumber(n)
        else:
            self.st = DynamicFeedbackVertexSet(n, max_degree)

    def update(self, op: EdgeOp) -> None:
        self.st.update(op)

    def answer(self) -> tuple[int, Optional[list[int]]]:
        if self.problem == "chromatic":
            return self.st.chromatic_number(), None
        if self.problem in ("vc", "cvd"):
            sol = self.st.query()
        else:
            sol = self.st.solution()
        return len(sol), sorted(sol)


def _smallest(solve: Callable[[int], Optional[set[int]]]) -> set[int]:
    k = 0
    while True:
        found = solve(k)
        if found is not None:
            return found
        k += 1


class Static:
    """Keeps only the graph and solves from scratch on every query."""

    def __init__(self, problem: str, n: int, max_degree: Optional[int]):
        self.problem = problem
        self.g = Graph(n)
        self.d = max_degree

    def update(self, op: EdgeOp) -> None:
        g = self.g
        g.check_op(op)
        if self.problem == "fvs" and op.kind is OpKind.INSERT:
            for w in (op.u, op.v):
                if g.degree(w) + 1 > self.d:
                    raise DegreeBoundExceeded(f"vertex {w} would exceed degree {self.d}")
        g.apply(op)

    def answer(self) -> tuple[int, Optional[list[int]]]:
        g = self.g
        if self.problem == "chromatic":
            return chromatic_exact(g), None
        if self.problem == "fvs":
            mg = MultiGraph.from_graph(g)
            sol = _smallest(lambda k: disjoint_fvs(mg, (), k))
        else:
            # isolated vertices never matter for either problem
            sub, back = induced_subgraph(g, [v for v in range(g.n) if g.adj[v]])
            solver = vc_exact if self.problem == "vc" else cvd_exact
            sol = {back[i] for i in _smallest(lambda k: solver(sub, k))}
        return len(sol), sorted(sol)


# -- commands ----------------------------------------------------------------------

def _rows(
    stream: Stream, runners: dict, verbose: bool, out: TextIO, cumulative: bool, skip_other: bool = False
) -> None:
    shadow = Graph(stream.n)    # validates ops even when no structure is selected
    header = HEADER + (",cumulative_micros" if cumulative else "") + (",vertices" if verbose else "")
    print(header, file=out)
    total = 0
    for index, (lineno, item) in enumerate(stream.items):
        start = time.perf_counter_ns()
        vertices = None
        if isinstance(item, Query):
            runner = runners.get(item.problem)
            if runner is None and skip_other:
                continue
            if runner is None:
                raise InvalidOp(lineno, f"problem {item.problem!r} not selected")
            answer, vertices = runner.answer()
            fields = [str(index), "?", "", "", item.problem, str(answer)]
        else:
            try:
                shadow.apply(item)
                for runner in runners.values():
                    runner.update(item)
            except GraphError as exc:
                raise InvalidOp(lineno, f"{type(exc).__name__}: {exc}") from exc
            fields = [str(index), item.kind.value, str(item.u), str(item.v), "", ""]
        micros = (time.perf_counter_ns() - start) // 1000
        total += micros
        fields.append(str(micros))
        if cumulative:
            fields.append(str(total))
        if verbose:
            fields.append(" ".join(map(str, vertices)) if vertices is not None else "")
        print(",".join(fields), file=out)


def _selected(args, stream: Stream) -> list[str]:
    if args.problems:
        chosen = [p.strip() for p in args.problems.split(",") if p.strip()]
        bad = [p for p in chosen if p not in PROBLEMS]
        if bad:
            raise ValueError(f"unknown problem(s): {', '.join(bad)}")
        return [p for p in PROBLEMS if p in chosen]
    return stream.problems()


def cmd_replay(args, out: TextIO) -> None:
    with open(args.stream) as fh:
        stream = parse_stream(fh)
    problems = _selected(args, stream)
    if "fvs" in problems and args.max_degree is None:
        raise ValueError("fvs needs --max-degree")
    runners = {p: Dynamic(p, stream.n, args.max_degree) for p in problems}
    _rows(stream, runners, args.verbose, out, cumulative=False)


def cmd_bench(args, out: TextIO) -> None:
    with open(args.stream) as fh:
        stream = parse_stream(fh)
    if args.problem == "fvs" and args.max_degree is None:
        raise ValueError("fvs needs --max-degree")
    cls = Dynamic if args.mode == "dynamic" else Static
    runners = {args.problem: cls(args.problem, stream.n, args.max_degree)}
    _rows(stream, runners, args.verbose, out, cumulative=True, skip_other=True)


def parse_edge_list(lines: Iterable[str]) -> tuple[int, list[tuple[int, int]]]:
    rows = []
    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if text:
            parts = text.split()
            if len(parts) != 2:
                raise ParseError(lineno, f"expected two integers, got {text!r}")
            rows.append((lineno, _int(parts[0], lineno), _int(parts[1], lineno)))
    if not rows:
        raise ParseError(1, "missing 'n m' header")
    _, n, m = rows[0]
    if n < 0 or m < 0:
        raise ParseError(rows[0][0], "counts must be non-negative")
    if len(rows) - 1 != m:
        raise ParseError(rows[-1][0], f"expected {m} edges, found {len(rows) - 1}")
    seen = Graph(n)
    for lineno, u, v in rows[1:]:
        try:
            seen.add_edge(u, v)
        except GraphError as exc:
            raise InvalidOp(lineno, f"{type(exc).__name__}: {exc}") from exc
    return n, [(u, v) for _, u, v in rows[1:]]


def kernelize_cvd(n: int, edges: Iterable[tuple[int, int]]) -> tuple[set[int], set[int], list[tuple[int, int]]]:
    """Stream the edges through the approximate cluster-deletion structure and
    return ``(forced, kernel vertices, kernel edges)``."""
    st = DynamicClusterDeletion(n)
    for u, v in edges:
        st.update(EdgeOp.insert(u, v))
    forced, vertices = st.kernel()
    sub, back = induced_subgraph(st.g, vertices)
    kernel_edges = sorted(tuple(sorted((back[a], back[b]))) for a, b in sub.edges())
    return forced, vertices, kernel_edges


def cmd_kernelize(args, out: TextIO) -> None:
    with open(args.edges) as fh:
        n, edges = parse_edge_list(fh)
    forced, vertices, kernel_edges = kernelize_cvd(n, edges)
    print(" ".join(["forced"] + [str(v) for v in sorted(forced)]), file=out)
    print(f"kernel {len(vertices)} {len(kernel_edges)}", file=out)
    for u, v in kernel_edges:
        print(f"{u} {v}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dynfpt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    rp = sub.add_parser("replay", help="replay an update stream and answer queries")
    rp.add_argument("stream")
    rp.add_argument("--problems", help="comma-separated subset of " + ",".join(PROBLEMS))
    rp.add_argument("--max-degree", type=int)
    rp.add_argument("--verbose", action="store_true", help="add a column with solution vertices")
    rp.set_defaults(func=cmd_replay)

    bp = sub.add_parser("bench", help="time dynamic maintenance against static recomputation")
    bp.add_argument("stream")
    bp.add_argument("--problem", choices=PROBLEMS, required=True)
    bp.add_argument("--mode", choices=("dynamic", "static"), default="dynamic")
    bp.add_argument("--max-degree", type=int)
    bp.add_argument("--verbose", action="store_true")
    bp.set_defaults(func=cmd_bench)

    kp = sub.add_parser("kernelize-cvd", help="kernel for cluster vertex deletion of an edge list")
    kp.add_argument("edges")
    kp.set_defaults(func=cmd_kernelize)
    return parser


def main(argv: Optional[list[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except (ParseError, InvalidOp) as exc:
        print(f"error: {exc}", file=err)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    except (InvariantError, DynFptError, AssertionError) as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=err)
        return 2
    finally:
        out.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
