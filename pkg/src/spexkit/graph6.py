"""graph6 text encoding (header-less variant).

Upper-triangle adjacency bits in column-major order, packed into 6-bit
groups offset by 63, preceded by the vertex count in the standard 1-, 4-
or 8-byte form.  All CLI graph I/O flows through these two functions.
"""

from __future__ import annotations

from .errors import CapacityError, Graph6Error
from .graphs import MAX_VERTICES, Graph


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))
    return chr(126) * 2 + "".join(
        chr(((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))


def graph6_encode(g: Graph) -> str:
    """Encode a graph as a graph6 string (no ``>>graph6<<`` header)."""
    if g.n > MAX_VERTICES:
        raise CapacityError(f"order {g.n} exceeds {MAX_VERTICES}")
    out = [_encode_order(g.n)]
    group = 0
    nbits = 0
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            group = (group << 1) | ((row >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(group + 63))
                group = 0
                nbits = 0
    if nbits:
        out.append(chr((group << (6 - nbits)) + 63))
    return "".join(out)


def _decode_order(s: str) -> tuple[int, int]:
    """Return (n, index of first edge byte)."""
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    c0 = ord(s[0])
    if not 63 <= c0 <= 126:
        raise Graph6Error(f"character {s[0]!r} outside graph6 range", 0)
    if c0 != 126:
        return c0 - 63, 1
    if len(s) < 2:
        raise Graph6Error("truncated extended order field", 1)
    if ord(s[1]) != 126:
        start, width = 1, 3
    else:
        start, width = 2, 6
    if len(s) < start + width:
        raise Graph6Error("truncated extended order field", len(s))
    n = 0
    for i in range(start, start + width):
        c = ord(s[i])
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {s[i]!r} outside graph6 range", i)
        n = (n << 6) | (c - 63)
    return n, start + width


def graph6_decode(s: str) -> Graph:
    """Decode a graph6 string; raises :class:`Graph6Error` with the byte
    offset of the first malformed position."""
    n, pos = _decode_order(s)
    if n > MAX_VERTICES:
        raise CapacityError(f"order {n} exceeds {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - pos < nbytes:
        raise Graph6Error(f"need {nbytes} edge bytes for n={n}, got {len(s) - pos}",
                          len(s))
    if len(s) - pos > nbytes:
        raise Graph6Error("trailing bytes after edge data", pos + nbytes)
    rows = [0] * n
    bit = 0
    u, v = 0, 1  # column-major upper triangle: column v holds u = 0..v-1
    for i in range(pos, pos + nbytes):
        c = ord(s[i])
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {s[i]!r} outside graph6 range", i)
        group = c - 63
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if (group >> shift) & 1:
                    raise Graph6Error("nonzero padding bits", i)
                continue
            if (group >> shift) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, tuple(rows))
