"""Theta graphs, the two extremal families and their closed-form polynomials.

Vertex layout in ``K_n``:

* ``theta1(n, s, t)``: hubs ``v1=0`` and ``v3=2``, middle vertices ``v2=1``,
  ``u1=3``, ``w1=4``; then ``s`` pendants on ``u1``, ``t`` pendants on ``v3``;
  the remaining ``u = n - k + 1`` vertices carry no negative edge.
* ``theta2(n, k)``: triangles ``v1 v2 u1`` and ``v1 v2 w1`` on ``0, 1, 2, 3``,
  then ``k - 5`` pendants on ``v2``, then the ``u`` free vertices.

Every polynomial takes concrete integers; ``u`` always means ``n - k + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactpoly import IntPoly
from .graphs import SignedCompleteGraph, SimpleGraph
from .quotient import SpecialPartition

V1, V2, V3, U1, W1 = 0, 1, 2, 3, 4


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class ThetaParams:
    n: int
    k: int
    s: int = 0
    t: int = 0

    @property
    def u(self) -> int:
        return self.n - self.k + 1

    @classmethod
    def theta1(cls, n: int, s: int, t: int) -> "ThetaParams":
        if s < 0 or t < 0:
            raise FamilyError(f"pendant counts must be nonnegative, got s={s}, t={t}")
        k = s + t + 6
        if n < k:
            raise FamilyError(f"theta1 needs n >= k = {k}, got n={n}")
        return cls(n, k, s, t)

    @classmethod
    def theta2(cls, n: int, k: int) -> "ThetaParams":
        if k < 5:
            raise FamilyError(f"theta2 needs k >= 5, got {k}")
        if n < k:
            raise FamilyError(f"theta2 needs n >= k, got n={n}, k={k}")
        return cls(n, k)


def theta_hat(a: int, b: int, c: int) -> SimpleGraph:
    """Two hubs (0 and 1) joined by internally disjoint paths of lengths a <= b <= c."""
    if not (1 <= a <= b <= c) or b < 2:
        raise FamilyError(f"need 1 <= a <= b <= c and b >= 2, got ({a}, {b}, {c})")
    edges = []
    nxt = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return SimpleGraph.from_edges(nxt, edges)


def _embed(n: int, edges: list[tuple[int, int]]) -> SignedCompleteGraph:
    return SignedCompleteGraph.from_negative_edges(n, edges)


def theta1_edges(s: int, t: int) -> list[tuple[int, int]]:
    edges = [(V1, U1), (U1, V3), (V1, V2), (V2, V3), (V1, W1), (W1, V3)]
    edges += [(U1, 5 + i) for i in range(s)]
    edges += [(V3, 5 + s + i) for i in range(t)]
    return edges


def theta2_edges(k: int) -> list[tuple[int, int]]:
    # v1=0, v2=1, u1=2, w1=3 here: theta2 has no third hub
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]
    edges += [(1, 4 + i) for i in range(k - 5)]
    return edges


def theta1(n: int, s: int, t: int) -> SignedCompleteGraph:
    ThetaParams.theta1(n, s, t)
    return _embed(n, theta1_edges(s, t))


def theta2(n: int, k: int) -> SignedCompleteGraph:
    ThetaParams.theta2(n, k)
    return _embed(n, theta2_edges(k))


def theta1_partition(n: int, s: int, t: int) -> SpecialPartition:
    """The seven-block partition; needs ``s, t >= 1`` and ``u >= 1`` so no block is empty."""
    prm = ThetaParams.theta1(n, s, t)
    if s < 1 or t < 1:
        raise FamilyError("seven-block partition has an empty block when s or t is 0")
    blocks = (
        (V1,), (U1,), (V3,), (V2, W1),
        tuple(range(5 + s, 5 + s + t)),
        tuple(range(5, 5 + s)),
        tuple(range(prm.k - 1, n)),
    )
    return SpecialPartition(blocks, 7)


def theta2_partition(n: int, k: int) -> SpecialPartition:
    ThetaParams.theta2(n, k)
    if k < 6:
        raise FamilyError("five-block partition has an empty pendant block when k = 5")
    blocks = ((0,), (1,), (2, 3), tuple(range(4, k - 1)), tuple(range(k - 1, n)))
    return SpecialPartition(blocks, 5)


def quotient_theta1_matrix(n: int, s: int, t: int) -> list[list[int]]:
    u = ThetaParams.theta1(n, s, t).u
    return [
        [0, -1, 1, -2, t, s, u],
        [-1, 0, -1, 2, t, -s, u],
        [1, -1, 0, -2, -t, s, u],
        [-1, 1, -1, 1, t, s, u],
        [1, 1, -1, 2, t - 1, s, u],
        [1, -1, 1, 2, t, s - 1, u],
        [1, 1, 1, 2, t, s, u - 1],
    ]


def quotient_theta2_matrix(n: int, k: int) -> list[list[int]]:
    u = ThetaParams.theta2(n, k).u
    return [
        [0, -1, -2, k - 5, u],
        [-1, 0, -2, 5 - k, u],
        [-1, -1, 1, k - 5, u],
        [1, -1, 2, k - 6, u],
        [1, 1, 2, k - 5, u - 1],
    ]


def F_poly(n: int, k: int, s: int) -> IntPoly:
    t = k - 6 - s
    u = ThetaParams.theta1(n, s, t).u
    st = s * t
    return IntPoly((
        -44 * k * u - 56 * st + 112 * st * u - 16 * s * u + 287 * n - 272 * k + 8 * s + 193,
        -80 * k * u - 96 * st - 32 * st * u - 32 * s * u + 570 * n - 512 * k + 32 * s + 199,
        -24 * k * u - 16 * st - 16 * st * u - 16 * s * u + 273 * n - 192 * k + 48 * s - 267,
        16 * k * u + 32 * st - 20 * n + 64 * k + 32 * s - 349,
        4 * k * u + 8 * st - 15 * n + 16 * k + 8 * s - 61,
        21 - 6 * n,
        7 - n,
        1,
    ))


def P_poly(n: int, k: int) -> IntPoly:
    u = ThetaParams.theta2(n, k).u
    return IntPoly((
        -28 * k * u + 127 * n - 120 * k + 97,
        8 * k * u - 36 * n + 48 * k - 91,
        4 * k * u - 6 * n + 8 * k - 22,
        10 - 4 * n,
        5 - n,
        1,
    ))


# -- appendix polynomials, as printed -----------------------------------------
# p-family in (s, t, u); d = s - t - 2 throughout.

def p_poly(s: int, t: int, u: int) -> IntPoly:
    d = s - t - 2
    return IntPoly((
        14 * s * u - 7 * s - 14 * t * u + 7 * t - 12 * u + 6,
        -4 * ((u + 3) * d + 4),
        -2 * ((u + 1) * d + 4),
        4 * d,
        d,
    ))


def p1_poly(s: int, t: int, u: int) -> IntPoly:
    d = s - t - 2
    return IntPoly((-7 * s - 14 * t * u - 12 * u, -16, -8, 4 * d, d))


def p2_poly(s: int, t: int, u: int) -> IntPoly:
    d = s - t - 2
    return IntPoly((14 * s * u + 7 * t + 6, -4 * (u + 3) * d, -2 * (u + 1) * d))


def P1cap_poly(s: int, t: int, u: int) -> IntPoly:
    d = s - t - 2
    return IntPoly((-7 * s - 14 * t * u - 12 * u, -4 * ((u + 3) * d + 4), -2 * ((u + 1) * d + 4)))


def P2cap_poly(s: int, t: int, u: int) -> IntPoly:
    d = s - t - 2
    return IntPoly((14 * s * u + 7 * t + 6, 0, 0, 4 * d, d))


def s_poly(n: int, k: int) -> IntPoly:
    return IntPoly((
        -2 * k * n - 21 * k - 20 * n + 2 * k * k + 12,
        -4 * (-k * k + k * n + 11 * k - 11 * n - 3),
        -2 * (-k * k + k * n + 12 * k - 14 * n + 10),
        4 * (n - 7),
        k - 8,
    ))


def s1_poly(n: int, k: int) -> IntPoly:
    return IntPoly((2 * k * k + 12, 0, 0, 4 * (n - 7), k - 8))


def s2_poly(n: int, k: int) -> IntPoly:
    return IntPoly((
        -2 * k * n - 21 * k - 20 * n,
        -4 * (-k * k + k * n + 11 * k - 11 * n - 3),
        -2 * (-k * k + k * n + 12 * k - 14 * n + 10),
    ))


def Scap_poly(n: int, k: int) -> IntPoly:
    return IntPoly((
        -2 * k * n - 17 * k - 4 * n + 2 * k * k + 9,
        -2 * (-2 * k * k + 2 * k * n + 17 * k - 17 * n - 3),
        -(-k * k + k * n + 8 * k - 10 * n + 11),
        2 * (n + k - 13),
        k - 7,
    ))


def S1cap_poly(n: int, k: int) -> IntPoly:
    return IntPoly((2 * k * k + 9, 0, 0, 2 * (n + k - 13), k - 7))


def S2cap_poly(n: int, k: int) -> IntPoly:
    return IntPoly((
        -2 * k * n - 17 * k - 4 * n,
        -2 * (-2 * k * k + 2 * k * n + 17 * k - 17 * n - 3),
        -(-k * k + k * n + 8 * k - 10 * n + 11),
    ))
