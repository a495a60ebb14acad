"""graph6 encoding, short form only (order <= 62).

Byte 0 is ``order + 63``; the upper triangle is then read column by column,
(0,1), (0,2), (1,2), (0,3), ..., packed six bits per byte, big-endian within
the byte, each byte offset by 63.  Unused trailing bits must be zero.
"""

from __future__ import annotations

from .graph import Graph


class Graph6Error(ValueError):
    pass


def _pairs(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def emit_graph6(g: Graph) -> str:
    n = g.order
    if n > 62:
        raise Graph6Error("only orders up to 62 are supported")
    bits = [(g.adj[i] >> j) & 1 for i, j in _pairs(n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def parse_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(ch) for ch in s]
    bad = [c for c in codes if not 63 <= c <= 126]
    if bad:
        raise Graph6Error(f"byte {bad[0]} outside the printable range 63..126")
    n = codes[0] - 63
    if n == 63:
        raise Graph6Error("multi-byte order form (order > 62) is not supported")
    if n == 0:
        raise Graph6Error("graph6 string encodes an empty graph")
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(codes) - 1 != nbytes:
        raise Graph6Error(f"expected {nbytes} adjacency bytes for order {n}, got {len(codes) - 1}")
    bits = []
    for c in codes[1:]:
        v = c - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    for (i, j), b in zip(_pairs(n), bits):
        if b:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))
