"""Simple graphs, signed complete graphs and the structural helpers built on them.

Vertices are dense 0-based integers. A :class:`SignedCompleteGraph` stores only
its negative edges; every other pair of distinct vertices is a positive edge.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import graph6


class GraphError(ValueError):
    """Invalid vertex, edge or structural precondition."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise GraphError(f"negative vertex count {self.vertex_count}")
        normed = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge {e} out of range for {self.vertex_count} vertices")
            normed.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        edges = list(edges)
        if len({_norm_edge(u, v) for u, v in edges}) != len(edges):
            raise GraphError("duplicate edge")
        return cls(vertex_count, frozenset(edges))

    @classmethod
    def from_graph6(cls, data: bytes | str) -> "SimpleGraph":
        n, edges = graph6.decode(data)
        return cls(n, frozenset(edges))

    def to_graph6(self) -> bytes:
        return graph6.encode(self.vertex_count, sorted(self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex ``i`` renamed ``perm[i]``."""
        return SimpleGraph(self.vertex_count,
                           frozenset(_norm_edge(perm[u], perm[v]) for u, v in self.edges))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise GraphError(f"vertex {v} not in [0, {self.vertex_count})")


@dataclass(frozen=True)
class SignedCompleteGraph:
    """``(K_n, H)``: the complete graph on ``n`` vertices whose negative edges form ``H``."""

    n: int
    negative_edges: SimpleGraph

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"order must be positive, got {self.n}")
        if self.negative_edges.vertex_count != self.n:
            raise GraphError(
                f"negative part has {self.negative_edges.vertex_count} vertices, expected {self.n}")

    @classmethod
    def from_negative_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SignedCompleteGraph":
        return cls(n, SimpleGraph.from_edges(n, edges))

    @property
    def k(self) -> int:
        return self.negative_edges.edge_count

    def sign(self, u: int, v: int) -> int:
        if u == v:
            raise GraphError(f"no loop at {u}")
        return -1 if self.negative_edges.has_edge(u, v) else 1


@dataclass(frozen=True)
class CycleList:
    cycles: tuple[tuple[int, ...], ...]

    def lengths(self) -> list[int]:
        return sorted(len(c) for c in self.cycles)


def adjacency_matrix(g: SignedCompleteGraph) -> np.ndarray:
    a = np.ones((g.n, g.n), dtype=np.int64)
    np.fill_diagonal(a, 0)
    for u, v in g.negative_edges.edges:
        a[u, v] = a[v, u] = -1
    return a


def degree(g: SimpleGraph, v: int) -> int:
    g._check_vertex(v)
    return len(g.adjacency[v])


def pendant_vertices(g: SimpleGraph) -> frozenset[int]:
    return frozenset(v for v in range(g.vertex_count) if len(g.adjacency[v]) == 1)


def _bfs(g: SimpleGraph, sources: Iterable[int]) -> dict[int, int]:
    dist = {}
    queue = deque()
    for s in sources:
        g._check_vertex(s)
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: SimpleGraph, u: int, v: int) -> int | None:
    """Shortest-path length, or ``None`` when ``v`` is unreachable from ``u``."""
    g._check_vertex(v)
    return _bfs(g, [u]).get(v)


def diameter(g: SimpleGraph) -> int | None:
    """Largest finite distance; ``None`` for a disconnected graph."""
    best = 0
    for v in range(g.vertex_count):
        dist = _bfs(g, [v])
        if len(dist) < g.vertex_count:
            return None
        best = max(best, max(dist.values()))
    return best


def neighbors_at_distance(g: SimpleGraph, sources: Iterable[int], r: int) -> frozenset[int]:
    """Vertices whose distance to the set ``sources`` is exactly ``r``."""
    return frozenset(v for v, d in _bfs(g, sources).items() if d == r)


def is_connected(g: SimpleGraph) -> bool:
    if g.vertex_count == 0:
        return True
    return len(_bfs(g, [0])) == g.vertex_count


def is_bicyclic(g: SimpleGraph) -> bool:
    return g.edge_count == g.vertex_count + 1 and is_connected(g)


def base(b: SimpleGraph) -> SimpleGraph:
    """Strip pendant vertices until none remain.

    Survivors keep their relative order and are relabelled ``0..m-1``.
    """
    if not is_bicyclic(b):
        raise GraphError("base() requires a connected bicyclic graph")
    deg = [len(nb) for nb in b.adjacency]
    alive = [True] * b.vertex_count
    stack = [v for v in range(b.vertex_count) if deg[v] == 1]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for w in b.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    keep = [v for v in range(b.vertex_count) if alive[v]]
    if len(keep) == b.vertex_count:
        return b
    index = {v: i for i, v in enumerate(keep)}
    return SimpleGraph(len(keep), frozenset(
        (index[u], index[v]) for u, v in b.edges if alive[u] and alive[v]))


def simple_cycles(g: SimpleGraph) -> list[tuple[int, ...]]:
    """All simple cycles, each listed once: starts at its smallest vertex and
    runs in the direction whose second vertex is smaller than its last.

    Exponential in general; meant for bases and graphs on a handful of vertices.
    """
    found = []
    adj = g.adjacency
    for start in range(g.vertex_count):
        path = [start]
        on_path = {start}

        def extend(x: int) -> None:
            for y in adj[x]:
                if y == start and len(path) >= 3 and path[1] < path[-1]:
                    found.append(tuple(path))
                elif y > start and y not in on_path:
                    path.append(y)
                    on_path.add(y)
                    extend(y)
                    path.pop()
                    on_path.discard(y)

        extend(start)
    return found


def induced_cycles(b: SimpleGraph) -> CycleList:
    """Cycles of the base of a bicyclic graph: 3 for a theta base, 2 for a dumbbell.

    Vertex labels refer to ``base(b)``.
    """
    return CycleList(tuple(simple_cycles(base(b))))


def cycle_sign(g: SignedCompleteGraph, cycle: Sequence[int]) -> int:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise GraphError(f"malformed cycle {tuple(cycle)}")
    sign = 1
    for i, u in enumerate(cycle):
        if not 0 <= u < g.n:
            raise GraphError(f"vertex {u} not in K_{g.n}")
        sign *= g.sign(u, cycle[(i + 1) % len(cycle)])
    return sign


def is_balanced(g: SignedCompleteGraph) -> bool:
    # Balanced iff the negative edges are exactly the cut between vertex 0's
    # negative neighbourhood and the rest.
    side = [g.negative_edges.has_edge(0, v) for v in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.negative_edges.has_edge(u, v) != (side[u] != side[v]):
                return False
    return True


def negative_support(g: SignedCompleteGraph) -> SimpleGraph:
    """The negative edges as a graph on their endpoints only, relabelled in order."""
    verts = sorted({x for e in g.negative_edges.edges for x in e})
    index = {v: i for i, v in enumerate(verts)}
    return SimpleGraph(len(verts), frozenset(
        (index[u], index[v]) for u, v in g.negative_edges.edges))
