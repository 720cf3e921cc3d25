"""graph6 encoding of simple undirected graphs.

Only the plain graph6 form is handled (no sparse6/digraph6, no ``>>graph6<<``
header). Bits are the upper triangle read column by column, packed six to a
byte with offset 63.
"""
from __future__ import annotations

from typing import Iterable

_OFFSET = 63


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise Graph6Error(f"negative vertex count {n}")
    if n <= 62:
        return bytes([n + _OFFSET])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + _OFFSET for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + _OFFSET for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"vertex count {n} too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - _OFFSET, 1
    if len(data) >= 2 and data[1] == 126:
        digits, start = data[2:8], 2
    else:
        digits, start = data[1:4], 1
    n = 0
    for c in digits:
        n = (n << 6) | (c - _OFFSET)
    return n, start + len(digits)


def encode(n: int, edges: Iterable[tuple[int, int]]) -> bytes:
    """Encode a graph on ``n`` vertices to graph6 bytes (no trailing newline)."""
    adj = set()
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise Graph6Error(f"bad edge ({u}, {v}) for n={n}")
        adj.add((min(u, v), max(u, v)))
    bits = [(i, j) in adj for j in range(1, n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = bytearray()
    for pos in range(0, len(bits), 6):
        val = 0
        for b in bits[pos:pos + 6]:
            val = (val << 1) | b
        body.append(val + _OFFSET)
    return _encode_n(n) + bytes(body)


def decode(data: bytes | str) -> tuple[int, list[tuple[int, int]]]:
    """Decode graph6 into ``(n, edges)`` with edges as sorted ``(i, j)``, ``i < j``."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if any(c < _OFFSET or c > 126 for c in data):
        raise Graph6Error("graph6 contains bytes outside 63..126")
    n, pos = _decode_n(data)
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"graph6 body length {len(body)} does not match n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - _OFFSET
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    # padding bits must be zero for a bit-exact round trip
    for k2 in range(nbits, len(body) * 6):
        if ((body[k2 // 6] - _OFFSET) >> (5 - k2 % 6)) & 1:
            raise Graph6Error("nonzero padding bits")
    return n, sorted(edges)
