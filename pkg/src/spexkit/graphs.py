"""Construction and transformation of small dense graphs.

Graphs are stored as one Python-int bitset per vertex (bit v of ``adj[u]``
set iff uv is an edge), which keeps every operation here a handful of
bitwise instructions and makes values hashable and immutable.  Complete
multipartite graphs additionally have a symbolic description,
:class:`PartSizes`, so spectral work on them never needs the adjacency
matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapacityError, DomainError

#: Hard cap on vertex count.  Large enough for every desk experiment the
#: package targets while keeping dense bitset rows cheap to copy.
MAX_VERTICES = 4096


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with bitset rows.

    Invariants (checked on construction): rows fit in ``n`` bits, the
    adjacency relation is symmetric, and there are no loops.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise DomainError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise DomainError(f"adjacency row {u} has bits beyond vertex {self.n - 1}")
            if (row >> u) & 1:
                raise DomainError(f"loop at vertex {u}")
        for u, row in enumerate(self.adj):
            for v in bit_indices(row >> (u + 1)):
                v += u + 1
                if not (self.adj[v] >> u) & 1:
                    raise DomainError(f"asymmetric edge {u}-{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge {u}-{v} outside vertex range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(bit_indices(self.adj[u]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in bit_indices(row >> (u + 1)):
                yield (u, v + u + 1)


@dataclass(frozen=True)
class PartSizes:
    """Symbolic complete multipartite graph: part sizes, largest first.

    Canonicalized nonincreasing so isomorphic descriptions compare equal.
    The empty tuple is allowed and stands for the graph on 0 vertices.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        canon = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p < 1 for p in canon):
            raise DomainError(f"part sizes must be >= 1, got {self.parts}")
        object.__setattr__(self, "parts", canon)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def _as_parts(parts) -> PartSizes:
    return parts if isinstance(parts, PartSizes) else PartSizes(tuple(parts))


def complete_multipartite(parts) -> Graph:
    """Build the complete multipartite graph with the given part sizes.

    Vertices are grouped consecutively by part, largest part first; uv is
    an edge iff u and v lie in different parts.
    """
    parts = _as_parts(parts)
    n = parts.n
    if n > MAX_VERTICES:
        raise CapacityError(f"order {n} exceeds {MAX_VERTICES}")
    full = (1 << n) - 1
    rows = []
    offset = 0
    for size in parts:
        part_mask = ((1 << size) - 1) << offset
        rows.extend([full ^ part_mask] * size)
        offset += size
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << u) for u in range(n)))


def turan_parts(n: int, k: int) -> PartSizes:
    """Part sizes of the balanced complete k-partite graph on n vertices.

    ``n mod k`` parts of size ceil(n/k) and the rest of size floor(n/k);
    for k >= n this collapses to n singleton parts (the complete graph).
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if k >= n:
        return PartSizes((1,) * n)
    q, r = divmod(n, k)
    return PartSizes((q + 1,) * r + (q,) * (k - r))


def gkns_parts(n: int, k: int, s: int) -> PartSizes:
    """Part sizes of the k-partite graph with one independent part of size
    n-s and the remaining s vertices split as equally as possible into k-1
    parts."""
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if not 0 <= s <= n:
        raise DomainError(f"need 0 <= s <= n, got s={s}, n={n}")
    if n - s < 1:
        raise DomainError(f"independent part would be empty (n={n}, s={s})")
    return PartSizes((n - s,) + turan_parts(s, k - 1).parts)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus all edges between the two vertex sets.

    Vertices of h are relabelled upward by ``g.n``.
    """
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"order {n} exceeds {MAX_VERTICES}")
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [row | h_mask for row in g.adj]
    rows += [(row << g.n) | g_mask for row in h.adj]
    return Graph(n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"order {n} exceeds {MAX_VERTICES}")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, tuple(rows))


def join_family(b_parts, a: int, a1: int) -> Graph:
    """Complete multipartite graph joined to (empty graph + clique).

    Returns K_{b_1,...,b_{k-1}} joined to the disjoint union of an
    independent set of size ``a`` and a clique of size ``a1``.  Vertex
    layout: the b-parts first (largest first), then the independent block,
    then the clique.
    """
    b_parts = _as_parts(b_parts)
    if a < 0:
        raise DomainError(f"a must be >= 0, got {a}")
    if a1 < 1:
        raise DomainError(f"a1 must be >= 1, got {a1}")
    return join(complete_multipartite(b_parts),
                disjoint_union(empty_graph(a), complete_graph(a1)))


def switch(g: Graph, u: int, v: int) -> Graph:
    """Rewire u to the neighborhood of v.

    Requires u != v and uv not an edge.  Edges from u to common neighbors
    of u and v are unaffected; the rest of u's edges are dropped and edges
    from u to N(v) added.
    """
    if u == v:
        raise DomainError("switch endpoints must differ")
    if g.has_edge(u, v):
        raise DomainError(f"switch requires non-adjacent endpoints, {u}-{v} is an edge")
    new_nu = g.adj[v]
    rows = list(g.adj)
    for w in bit_indices(rows[u] | new_nu):
        if (new_nu >> w) & 1:
            rows[w] |= 1 << u
        else:
            rows[w] &= ~(1 << u)
    rows[u] = new_nu
    return Graph(g.n, tuple(rows))


def _as_mask(vertices, n: int) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise DomainError(f"vertex {v} outside range 0..{n - 1}")
        mask |= 1 << v
    return mask


def _common_row(g: Graph, mask: int, label: str) -> int:
    rows = {g.adj[v] for v in bit_indices(mask)}
    if len(rows) != 1:
        raise DomainError(f"vertices of {label} do not share one neighborhood")
    return rows.pop()


def switch_sets(g: Graph, s_set, t_set) -> Graph:
    """Rewire every vertex of S to the common neighborhood of T.

    S and T must be disjoint independent sets with no edges between them,
    each with a single shared neighborhood.  The hypotheses are validated
    rather than trusted: without them the spectral monotonicity this
    operation exists for fails.
    """
    s_mask = _as_mask(s_set, g.n)
    t_mask = _as_mask(t_set, g.n)
    if not s_mask or not t_mask:
        raise DomainError("S and T must be nonempty")
    if s_mask & t_mask:
        raise DomainError("S and T must be disjoint")
    ns = _common_row(g, s_mask, "S")
    nt = _common_row(g, t_mask, "T")
    if ns & s_mask:
        raise DomainError("S is not independent")
    if nt & t_mask:
        raise DomainError("T is not independent")
    if ns & t_mask:
        raise DomainError("edges between S and T are not allowed")
    rows = list(g.adj)
    for w in range(g.n):
        if (s_mask >> w) & 1:
            rows[w] = nt
        elif (nt >> w) & 1:
            rows[w] |= s_mask
        else:
            rows[w] &= ~s_mask
    return Graph(g.n, tuple(rows))


def shift_vertex(g: Graph, v: int, target) -> Graph:
    """Make v a clone of the vertices in ``target``.

    All target vertices must share one neighborhood N; v's edges are
    replaced by edges to N (minus v itself), i.e. v joins the target
    class.
    """
    t_mask = _as_mask(target, g.n)
    if not t_mask:
        raise DomainError("target must be nonempty")
    if (t_mask >> v) & 1:
        raise DomainError(f"vertex {v} already lies in the target class")
    nbhd = _common_row(g, t_mask, "target") & ~(1 << v)
    rows = list(g.adj)
    for w in bit_indices(rows[v] | nbhd):
        if (nbhd >> w) & 1:
            rows[w] |= 1 << v
        else:
            rows[w] &= ~(1 << v)
    rows[v] = nbhd
    return Graph(g.n, tuple(rows))
