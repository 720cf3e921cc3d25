"""Sign swaps at a common vertex and a hill climber built from them.

Swapping the positive edge ``rt`` with the negative edge ``rs`` does not lower
the index when the principal eigenvector satisfies
``x_r >= 0, x_s >= x_t`` or ``x_r <= 0, x_s <= x_t``; it raises it strictly
when one of those inequalities is strict.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

import numpy as np

from .graphs import (GraphError, SignedCompleteGraph, SimpleGraph, adjacency_matrix,
                     is_bicyclic, negative_support)
from .spectra import eig_symmetric, largest_eigenvalue

IMPROVEMENT = 1e-9


class Hypothesis(enum.IntEnum):
    FAILS = 0
    WEAK = 1
    STRICT = 2


@dataclass(frozen=True)
class SwapMove:
    r: int
    s: int  # rs negative before the move
    t: int  # rt positive before the move

    def __post_init__(self) -> None:
        if len({self.r, self.s, self.t}) != 3:
            raise GraphError(f"swap vertices must be distinct: {self}")

    def inverse(self) -> "SwapMove":
        return SwapMove(self.r, self.t, self.s)


def swap_signs(g: SignedCompleteGraph, m: SwapMove) -> SignedCompleteGraph:
    if g.sign(m.r, m.t) != 1:
        raise GraphError(f"edge ({m.r}, {m.t}) is not positive")
    if g.sign(m.r, m.s) != -1:
        raise GraphError(f"edge ({m.r}, {m.s}) is not negative")
    drop = (min(m.r, m.s), max(m.r, m.s))
    edges = (g.negative_edges.edges - {drop}) | {(min(m.r, m.t), max(m.r, m.t))}
    return SignedCompleteGraph(g.n, SimpleGraph(g.n, edges))


def hypothesis_holds(x, m: SwapMove, tol: float = 1e-9) -> Hypothesis:
    """Classify ``m`` against the eigenvector ``x``.

    The two admissible sign patterns are exchanged by ``x -> -x``, so the
    result does not depend on which sign of the eigenvector is passed in.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or max(m.r, m.s, m.t) >= x.shape[0]:
        raise ValueError(f"eigenvector of length {x.shape} too short for {m}")
    xr, d = x[m.r], x[m.s] - x[m.t]
    best = Hypothesis.FAILS
    for sgn in (1.0, -1.0):
        if sgn * xr >= -tol and sgn * d >= -tol:
            strict = sgn * xr > tol or sgn * d > tol
            best = max(best, Hypothesis.STRICT if strict else Hypothesis.WEAK)
    return best


@dataclass(frozen=True)
class SwapCheck:
    graph: SignedCompleteGraph
    before: float
    after: float
    hypothesis: Hypothesis
    verdict: str      # "pass", "fail" or "n/a" when the hypothesis fails
    spectral_gap: float

    @property
    def margin(self) -> float:
        return self.after - self.before


def checked_swap(g: SignedCompleteGraph, m: SwapMove, tol: float = 1e-9,
                 hyp_tol: float = 1e-9) -> SwapCheck:
    res = eig_symmetric(adjacency_matrix(g))
    g2 = swap_signs(g, m)
    after = largest_eigenvalue(adjacency_matrix(g2))
    hyp = hypothesis_holds(res.principal_vector, m, hyp_tol)
    gap = float(res.eigenvalues[0] - res.eigenvalues[1]) if g.n > 1 else float("inf")
    if hyp is Hypothesis.FAILS:
        verdict = "n/a"
    else:
        verdict = "pass" if after >= res.index - tol else "fail"
    return SwapCheck(g2, res.index, after, hyp, verdict, gap)


def _keeps_bicyclic(g: SignedCompleteGraph) -> bool:
    return is_bicyclic(negative_support(g))


def candidate_moves(g: SignedCompleteGraph) -> list[SwapMove]:
    """Every swap whose result still has a connected bicyclic negative part."""
    moves = []
    for a, b in sorted(g.negative_edges.edges):
        for r, s in ((a, b), (b, a)):
            for t in range(g.n):
                if t in (r, s) or g.negative_edges.has_edge(r, t):
                    continue
                m = SwapMove(r, s, t)
                if _keeps_bicyclic(swap_signs(g, m)):
                    moves.append(m)
    return moves


def random_bicyclic(k: int, rng: random.Random) -> SimpleGraph:
    """Random connected bicyclic graph with ``k`` edges on ``k - 1`` vertices:
    a random labelled tree plus two extra edges."""
    v = k - 1
    if v < 4:
        raise ValueError("need k >= 5")
    # Pruefer decoding
    seq = [rng.randrange(v) for _ in range(v - 2)]
    deg = [1] * v
    for x in seq:
        deg[x] += 1
    edges = set()
    for x in seq:
        leaf = min(i for i in range(v) if deg[i] == 1)
        edges.add((min(leaf, x), max(leaf, x)))
        deg[leaf] -= 1
        deg[x] -= 1
    rest = [i for i in range(v) if deg[i] == 1]
    edges.add((rest[0], rest[1]))
    non_edges = [(i, j) for i in range(v) for j in range(i + 1, v) if (i, j) not in edges]
    edges.update(rng.sample(non_edges, 2))
    return SimpleGraph(v, frozenset(edges))


@dataclass
class SearchResult:
    best: SignedCompleteGraph
    index: float
    trace: list[tuple[SwapMove | None, float]] = field(default_factory=list)
    local_optimum: bool = False


def local_search_max(n: int, k: int, seed: int, max_iters: int = 5000) -> SearchResult:
    """First-improvement hill climbing over bicyclic-preserving sign swaps."""
    if k < 6 or n < k:
        raise ValueError(f"need k >= 6 and n >= k, got n={n}, k={k}")
    rng = random.Random(seed)
    b = random_bicyclic(k, rng)
    g = SignedCompleteGraph(n, SimpleGraph(n, b.edges))
    lam = largest_eigenvalue(adjacency_matrix(g))
    result = SearchResult(g, lam, [(None, lam)])
    for _ in range(max_iters):
        moves = candidate_moves(g)
        rng.shuffle(moves)
        for m in moves:
            g2 = swap_signs(g, m)
            lam2 = largest_eigenvalue(adjacency_matrix(g2))
            if lam2 > lam + IMPROVEMENT:
                g, lam = g2, lam2
                result.trace.append((m, lam))
                break
        else:
            result.local_optimum = True
            break
    result.best, result.index = g, lam
    return result
