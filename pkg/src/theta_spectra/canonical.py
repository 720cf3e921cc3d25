"""Canonical labelling of simple graphs by partition refinement and backtracking.

The search individualises vertices of the first non-singleton cell, refines to
an equitable partition, and keeps the leaf whose relabelled graph6 string is
smallest. Automorphisms discovered at equal leaves prune sibling branches in
the same way nauty does: an automorphism fixing the current prefix merges
orbits of the target cell, and a leaf equal to the first leaf sends the search
back to the common ancestor.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import graph6
from .graphs import SimpleGraph


@dataclass(frozen=True)
class CanonicalGraph:
    graph: SimpleGraph
    canonical_edge_list: tuple[tuple[int, int], ...]
    certificate: bytes
    labelling: tuple[int, ...]  # labelling[v] = canonical position of vertex v


def _refine(adj: tuple[frozenset[int], ...], cells: list[list[int]]) -> list[list[int]]:
    n = len(adj)
    cell_of = [0] * n
    while True:
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[cell_of[w]] += 1
                groups.setdefault(tuple(counts), []).append(v)
            if len(groups) > 1:
                changed = True
            out.extend(groups[key] for key in sorted(groups))
        cells = out
        if not changed:
            return cells


def _leaf_cert(g: SimpleGraph, order: list[int]) -> bytes:
    pos = [0] * g.vertex_count
    for i, v in enumerate(order):
        pos[v] = i
    return graph6.encode(g.vertex_count, [(pos[a], pos[b]) for a, b in g.edges])


class _Search:
    def __init__(self, g: SimpleGraph):
        self.g = g
        self.adj = g.adjacency
        self.first: tuple[bytes, list[int], list[int]] | None = None
        self.best: tuple[bytes, list[int], list[int]] | None = None
        self.autos: list[list[int]] = []

    def _orbit_roots(self, prefix: list[int], cell: list[int]) -> dict[int, int]:
        parent = {v: v for v in range(self.g.vertex_count)}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gam in self.autos:
            if all(gam[x] == x for x in prefix):
                for x in range(self.g.vertex_count):
                    a, b = find(x), find(gam[x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return {v: find(v) for v in cell}

    def _record_auto(self, order_a: list[int], order_b: list[int]) -> None:
        gam = [0] * self.g.vertex_count
        for a, b in zip(order_a, order_b):
            gam[a] = b
        if any(gam[x] != x for x in range(len(gam))):
            self.autos.append(gam)

    def run(self, cells: list[list[int]], prefix: list[int]) -> int | None:
        """Returns a depth to unwind to, or ``None`` to continue normally."""
        cells = _refine(self.adj, cells)
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _leaf_cert(self.g, order)
            if self.first is None:
                self.first = self.best = (cert, order, prefix)
                return None
            for ref in (self.first, self.best):
                if cert == ref[0]:
                    self._record_auto(ref[1], order)
                    common = 0
                    for a, b in zip(ref[2], prefix):
                        if a != b:
                            break
                        common += 1
                    return common
            if cert < self.best[0]:
                self.best = (cert, order, prefix)
            return None
        ti = cells.index(target)
        done: list[int] = []
        depth = len(prefix)
        for v in sorted(target):
            roots = self._orbit_roots(prefix, target)
            if any(roots[v] == roots[w] for w in done):
                continue
            child = cells[:ti] + [[v], [w for w in target if w != v]] + cells[ti + 1:]
            back = self.run(child, prefix + [v])
            done.append(v)
            if back is not None and back < depth:
                return back
        return None


def canonical_form(g: SimpleGraph) -> CanonicalGraph:
    n = g.vertex_count
    if n == 0:
        cert = graph6.encode(0, [])
        return CanonicalGraph(g, (), cert, ())
    # start from the degree partition so the search tree is shallow
    degs = [len(a) for a in g.adjacency]
    cells = [[v for v in range(n) if degs[v] == d] for d in sorted(set(degs))]
    search = _Search(g)
    search.run(cells, [])
    cert, order, _ = search.best
    lab = [0] * n
    for i, v in enumerate(order):
        lab[v] = i
    _, edges = graph6.decode(cert)
    return CanonicalGraph(g, tuple(edges), cert, tuple(lab))


def certificate(g: SimpleGraph) -> bytes:
    return canonical_form(g).certificate


def automorphisms(g: SimpleGraph) -> list[tuple[int, ...]]:
    """Every automorphism of ``g`` as a tuple ``gamma[v]``, identity first.

    Plain backtracking with degree and adjacency pruning; meant for the small,
    sparse base graphs of the enumeration.
    """
    n = g.vertex_count
    adj = g.adjacency
    degs = [len(a) for a in adj]
    order: list[int] = []
    seen = set()
    for s in sorted(range(n), key=lambda v: -degs[v]):
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop(0)
            order.append(x)
            for y in sorted(adj[x]):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    found: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> None:
        if i == n:
            found.append(tuple(image))
            return
        x = order[i]
        for y in range(n):
            if used[y] or degs[y] != degs[x]:
                continue
            if all((image[z] in adj[y]) == (z in adj[x]) for z in order[:i]):
                image[x] = y
                used[y] = True
                extend(i + 1)
                used[y] = False
                image[x] = -1

    extend(0)
    found.sort(key=lambda gam: gam != tuple(range(n)))
    return found
