"""Immutable simple undirected graphs and small structural queries.

Vertices are dense integers ``0..n-1``.  Adjacency is stored as sorted
neighbor tuples, which is cache-friendly for the sparse graphs handled
here (trees and line graphs of small graphs).  Instances are immutable
and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Base class for graph construction and query errors."""


class VertexOutOfRange(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class Shape(Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    OTHER = "other"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with cached degrees.

    Construct through :func:`from_edge_list`; the dataclass itself does
    not re-validate its invariants.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    m: int

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def edge_degree_pairs(self) -> Iterator[tuple[int, int]]:
        """Yield the degree pair (d_u, d_v) of every edge."""
        for u, v in self.edges():
            yield (self.degrees[u], self.degrees[v])

    def __repr__(self) -> str:  # keep failure output readable
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph on vertices 0..n-1 from an edge list.

    Raises :class:`VertexOutOfRange`, :class:`SelfLoopError` or
    :class:`DuplicateEdgeError` on invalid input.
    """
    if n < 1:
        raise GraphError(f"graph order must be >= 1, got {n}")
    neigh: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside [0,{n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if v in neigh[u]:
            raise DuplicateEdgeError(f"duplicate edge ({u},{v})")
        neigh[u].add(v)
        neigh[v].add(u)
    adj = tuple(tuple(sorted(s)) for s in neigh)
    degrees = tuple(len(a) for a in adj)
    return Graph(n=n, adj=adj, degrees=degrees, m=sum(degrees) // 2)


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (true for n=1)."""
    if g.n == 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                stack.append(v)
    return count == g.n


def pendent_vertices(g: Graph) -> list[int]:
    """Vertices of degree one, ascending."""
    return [v for v in range(g.n) if g.degrees[v] == 1]


def min_degree(g: Graph) -> int:
    return min(g.degrees)


def subdivide_at_degree2(g: Graph, x: int, e: tuple[int, int]) -> Graph:
    """Insert a new vertex on edge ``e``, which must be incident to the
    degree-2 vertex ``x``.

    The edge x-w becomes x-y, y-w where y = n is the new vertex; y has
    degree 2 and all other degrees are unchanged.
    """
    if g.degrees[x] != 2:
        raise GraphError(f"vertex {x} has degree {g.degrees[x]}, need 2")
    a, b = e
    if x == a:
        w = b
    elif x == b:
        w = a
    else:
        raise GraphError(f"edge {e} not incident to vertex {x}")
    if not g.has_edge(x, w):
        raise GraphError(f"{e} is not an edge of the graph")
    y = g.n
    edges = [(u, v) for u, v in g.edges() if (u, v) != (min(x, w), max(x, w))]
    edges.append((x, y))
    edges.append((y, w))
    return from_edge_list(g.n + 1, edges)


def classify_shape(g: Graph) -> Shape:
    """Classify a connected graph as path, cycle, star, or other."""
    if not is_connected(g):
        raise DisconnectedGraphError("shape classification needs a connected graph")
    if g.n <= 2:
        return Shape.PATH
    counts: dict[int, int] = {}
    for d in g.degrees:
        counts[d] = counts.get(d, 0) + 1
    if counts == {2: g.n}:
        return Shape.CYCLE
    if counts.get(1) == 2 and counts.get(2, 0) == g.n - 2:
        return Shape.PATH
    if counts.get(1) == g.n - 1 and counts.get(g.n - 1) == 1:
        return Shape.STAR
    return Shape.OTHER
