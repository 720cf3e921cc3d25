"""Connected bicyclic graphs up to isomorphism.

Every connected bicyclic graph is its base (a theta graph or a dumbbell) with a
rooted tree hanging from each base vertex. Two such graphs are isomorphic iff
some automorphism of the common base carries one tree assignment onto the
other, so one representative per orbit gives each class exactly once.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator

from .canonical import CanonicalGraph, automorphisms, canonical_form
from .graphs import GraphError, SignedCompleteGraph, SimpleGraph, is_bicyclic


@lru_cache(maxsize=None)
def rooted_trees(m: int) -> tuple[tuple[int, ...], ...]:
    """Canonical level sequences (root at level 1) of all rooted trees on ``m`` vertices.

    Beyer-Hedetniemi successor rule, starting from the path and ending at the star.
    """
    if m < 1:
        raise ValueError("a rooted tree needs at least one vertex")
    if m == 1:
        return ((1,),)
    seq = list(range(1, m + 1))
    out = [tuple(seq)]
    while True:
        p = max(i for i in range(m) if seq[i] != 2 or i == 0)
        if p == 0:
            return tuple(out)
        q = max(i for i in range(p) if seq[i] == seq[p] - 1)
        for i in range(p, m):
            seq[i] = seq[i - (p - q)]
        out.append(tuple(seq))


def _tree_parents(levels: tuple[int, ...]) -> list[int]:
    """Parent index of each non-root position of a level sequence."""
    parents = []
    last_at = {1: 0}
    for i in range(1, len(levels)):
        parents.append(last_at[levels[i] - 1])
        last_at[levels[i]] = i
    return parents


def _cycle(vertices: list[int]) -> list[tuple[int, int]]:
    return [(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))]


def theta_bases(m: int) -> Iterator[tuple[str, SimpleGraph]]:
    from .families import theta_hat

    for a in range(1, m + 1):
        for b in range(max(a, 2), m + 1):
            c = m + 1 - a - b
            if c >= b:
                yield f"theta({a},{b},{c})", theta_hat(a, b, c)


def dumbbell(p: int, q: int, bridge: int) -> SimpleGraph:
    """Cycles of lengths ``p`` and ``q`` joined by a path of ``bridge`` edges (0 = shared vertex)."""
    if p < 3 or q < 3 or bridge < 0:
        raise GraphError(f"bad dumbbell ({p}, {q}, {bridge})")
    first = list(range(p))
    path = [0] + list(range(p, p + bridge))
    start = path[-1]
    second = [start] + list(range(p + bridge, p + bridge + q - 1))
    edges = _cycle(first) + list(zip(path, path[1:])) + _cycle(second)
    return SimpleGraph.from_edges(p + bridge + q - 1, edges)


def dumbbell_bases(m: int) -> Iterator[tuple[str, SimpleGraph]]:
    for p in range(3, m + 1):
        for q in range(p, m + 1):
            bridge = m + 1 - p - q
            if bridge >= 0:
                yield f"dumbbell({p},{q},{bridge})", dumbbell(p, q, bridge)


def bases(m: int) -> list[tuple[str, SimpleGraph]]:
    """Every base (minimum degree 2 bicyclic graph) on ``m`` vertices, one per class."""
    return list(theta_bases(m)) + list(dumbbell_bases(m))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _attach(base: SimpleGraph, trees: list[tuple[int, ...]], v: int) -> SimpleGraph:
    edges = list(base.edges)
    nxt = base.vertex_count
    for root, levels in enumerate(trees):
        ids = [root]
        for parent in _tree_parents(levels):
            edges.append((ids[parent], nxt))
            ids.append(nxt)
            nxt += 1
    assert nxt == v
    return SimpleGraph(v, frozenset(edges))


def iter_bicyclic(v: int) -> Iterator[SimpleGraph]:
    """One graph per isomorphism class of connected bicyclic graphs on ``v`` vertices.

    Order is deterministic (by base, then by tree assignment) but not canonical.
    """
    if v < 4:
        raise ValueError("bicyclic graphs need at least 4 vertices")
    for m in range(4, v + 1):
        for _, b in bases(m):
            auts = automorphisms(b)[1:]
            for sizes in _compositions(v - m, m):
                if any(tuple(sizes[g[i]] for i in range(m)) < sizes for g in auts):
                    continue
                stab = [g for g in auts if all(sizes[g[i]] == sizes[i] for i in range(m))]
                choices = [range(len(rooted_trees(e + 1))) for e in sizes]
                for idx in product(*choices):
                    if any(tuple(idx[g[i]] for i in range(m)) < idx for g in stab):
                        continue
                    yield _attach(b, [rooted_trees(e + 1)[j] for e, j in zip(sizes, idx)], v)


def enumerate_bicyclic(v: int) -> Iterator[CanonicalGraph]:
    """Canonical forms of all connected bicyclic graphs on ``v`` vertices, sorted by certificate.

    Sorting needs every certificate at once, so the whole class is held in memory.
    """
    forms = sorted((canonical_form(g) for g in iter_bicyclic(v)), key=lambda c: c.certificate)
    for a, b in zip(forms, forms[1:]):
        if a.certificate == b.certificate:
            raise AssertionError(f"duplicate class {a.certificate!r}")
    yield from forms


def brute_force_bicyclic_certificates(v: int) -> set[bytes]:
    """Certificates of connected graphs with ``v + 1`` edges, by scanning labelled graphs.

    Only edge sets whose degree sequence is non-increasing in vertex order are
    canonicalised; every class has such a labelling.
    """
    from itertools import combinations

    pairs = [(i, j) for i in range(v) for j in range(i + 1, v)]
    certs = set()
    for edges in combinations(pairs, v + 1):
        deg = [0] * v
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        if any(deg[i] < deg[i + 1] for i in range(v - 1)) or deg[-1] == 0:
            continue
        g = SimpleGraph(v, frozenset(edges))
        if is_bicyclic(g):
            certs.add(canonical_form(g).certificate)
    return certs


def embed(b: SimpleGraph, n: int) -> SignedCompleteGraph:
    """``(K_n, b)`` with ``b`` on vertices ``0..|V(b)|-1``."""
    if n < b.vertex_count:
        raise GraphError(f"cannot embed {b.vertex_count} vertices in K_{n}")
    return SignedCompleteGraph(n, SimpleGraph(n, b.edges))
