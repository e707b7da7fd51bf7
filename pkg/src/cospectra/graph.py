"""Simple undirected graphs with exact integer matrices.

Vertices are always ``0..n-1``; edges are unordered pairs with no loops and no
multiplicity.  Matrices are plain lists of lists of Python ints so that every
downstream computation can stay exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]
IntMatrix = list[list[int]]


class CospectraError(Exception):
    """Base class for all library-defined errors."""


class EdgeListParseError(CospectraError, ValueError):
    """Malformed edge-list text; the message names the offending line."""


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """An immutable simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge]
    _adjacency: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, hash=False, default=()
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) is not a normalized pair inside 0..{self.n - 1}")
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "_adjacency", tuple(tuple(sorted(a)) for a in nbrs))

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing edge order and rejecting loops/duplicates."""
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            e = _normalize_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
        return Graph(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges if u != v else False

    def check_vertex(self, v: int, name: str = "vertex") -> None:
        if not isinstance(v, int) or not (0 <= v < self.n):
            raise ValueError(f"{name} {v!r} out of range 0..{self.n - 1}")

    def add_edges(self, new_edges: Iterable[tuple[int, int]]) -> "Graph":
        """Return a copy with the given edges added; duplicates are an error."""
        extra: set[Edge] = set()
        for u, v in new_edges:
            self.check_vertex(u)
            self.check_vertex(v)
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            e = _normalize_edge(u, v)
            if e in self.edges or e in extra:
                raise ValueError(f"duplicate edge ({e[0]}, {e[1]})")
            extra.add(e)
        return Graph(self.n, self.edges | extra)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain-text edge-list format.

    The first non-comment line is ``n m`` (vertex and edge counts); the next
    ``m`` non-comment lines are ``u v`` pairs.  Lines whose first non-blank
    character is ``#`` and blank lines are ignored.  Every malformed input
    raises :class:`EdgeListParseError` naming the 1-based line number.
    """
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListParseError(f"line {lineno}: counts must be nonnegative, got {raw!r}")
            header = (a, b)
            n = a
            continue
        if len(edges) >= header[1]:
            raise EdgeListParseError(
                f"line {lineno}: more than the declared {header[1]} edges"
            )
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeListParseError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        if a == b:
            raise EdgeListParseError(f"line {lineno}: loop at vertex {a}")
        e = _normalize_edge(a, b)
        if e in seen:
            raise EdgeListParseError(f"line {lineno}: duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
        edges.append(e)
    if header is None:
        raise EdgeListParseError("line 1: missing 'n m' header line")
    if len(edges) != header[1]:
        raise EdgeListParseError(
            f"declared {header[1]} edges but found {len(edges)}"
        )
    return Graph(n, frozenset(edges))


def format_edge_list(g: Graph) -> str:
    """Serialize to the same format ``parse_edge_list`` reads (sorted edges)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def adjacency_matrix(g: Graph) -> IntMatrix:
    a = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        a[u][v] = 1
        a[v][u] = 1
    return a


def laplacian_matrix(g: Graph) -> IntMatrix:
    """Laplacian L = D - A as an exact integer matrix."""
    lap = [[0] * g.n for _ in range(g.n)]
    for v in range(g.n):
        lap[v][v] = g.degree(v)
    for u, v in g.edges:
        lap[u][v] = -1
        lap[v][u] = -1
    return lap


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove vertex ``v`` and compact ids: vertices above ``v`` shift down by one.

    The result lives on ``0..n-2``; callers comparing against the parent graph
    must account for the shift themselves.
    """
    g.check_vertex(v)
    remap = [w if w < v else w - 1 for w in range(g.n)]
    edges = [
        (remap[a], remap[b]) for a, b in g.edges if a != v and b != v
    ]
    return Graph.from_edges(g.n - 1, edges)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if not seen[y]:
                seen[y] = True
                count += 1
                queue.append(y)
    return count == g.n


def to_dot(
    g: Graph,
    highlight: Sequence[int] = (),
    blocks: Mapping[str, Sequence[int]] | None = None,
) -> str:
    """Render as Graphviz DOT.

    ``highlight`` vertices are filled; ``blocks`` maps a label (e.g. ``"g1"``)
    to vertex ids, rendered as a labeled cluster.
    """
    for v in highlight:
        g.check_vertex(v, "highlight vertex")
    out = ["graph cospectra {", "  node [shape=circle];"]
    covered: set[int] = set()
    if blocks:
        for label in blocks:
            ids = blocks[label]
            for v in ids:
                g.check_vertex(v, f"block {label!r} vertex")
            out.append(f"  subgraph cluster_{label} {{")
            out.append(f'    label="{label}";')
            for v in ids:
                out.append(f"    {v};")
                covered.add(v)
            out.append("  }")
    for v in range(g.n):
        if v not in covered:
            out.append(f"  {v};")
    for v in highlight:
        out.append(f"  {v} [style=filled, fillcolor=lightblue];")
    for u, v in g.sorted_edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
