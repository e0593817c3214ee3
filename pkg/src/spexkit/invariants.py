"""Exact combinatorial invariants: matching number, clique containment,
connected components, and minimum odd-components witnesses.

Everything here is exact; the only approximations in the package live in
the numerical eigenvalue routines.  The brute-force matching checker is an
independent oracle kept for tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityError, DomainError
from .graphs import Graph, bit_indices

#: Subset-scan bound for the odd-components witness search (2^24 subsets).
TUTTE_BERGE_MAX_N = 24

#: Bound for the brute-force matching oracle.
BRUTE_MATCHING_MAX_N = 10


# ---------------------------------------------------------------------------
# Maximum matching (blossom algorithm)
# ---------------------------------------------------------------------------

def _find_augmenting_path(n, adj, match, root, parent, base, used, q):
    """BFS for an augmenting path from ``root``, contracting blossoms.

    Returns the exposed endpoint of an augmenting path, or -1.  ``parent``
    is filled so the caller can walk the path back to the root.
    """
    for i in range(n):
        parent[i] = -1
        base[i] = i
        used[i] = False
    used[root] = True
    q.clear()
    q.append(root)
    head = 0
    while head < len(q):
        v = q[head]
        head += 1
        for to in bit_indices(adj[v]):
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # Odd cycle: contract the blossom at the common base.
                cur = _blossom_base(base, parent, match, v, to)
                blossom = [False] * n
                _mark_path(base, parent, match, blossom, v, cur, to)
                _mark_path(base, parent, match, blossom, to, cur, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to
                used[match[to]] = True
                q.append(match[to])
    return -1


def _blossom_base(base, parent, match, u, v):
    seen = set()
    while True:
        u = base[u]
        seen.add(u)
        if match[u] == -1:
            break
        u = parent[match[u]]
    while True:
        v = base[v]
        if v in seen:
            return v
        v = parent[match[v]]


def _mark_path(base, parent, match, blossom, v, b, child):
    while base[v] != b:
        blossom[base[v]] = True
        blossom[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def _augment_along(match, parent, exposed):
    v = exposed
    while v != -1:
        pv = parent[v]
        ppv = match[pv]
        match[v] = pv
        match[pv] = v
        v = ppv


def _maximum_matching_masks(n: int, adj) -> list[int]:
    """Maximum matching of the bitset graph; returns the mate array."""
    match = [-1] * n
    for u in range(n):  # cheap greedy start
        if match[u] == -1:
            for v in bit_indices(adj[u]):
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    break
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    q: list[int] = []
    for root in range(n):
        if match[root] == -1:
            exposed = _find_augmenting_path(n, adj, match, root, parent, base, used, q)
            if exposed != -1:
                _augment_along(match, parent, exposed)
    return match


def matching_number(g: Graph) -> int:
    """Size of a maximum matching, exact for general graphs."""
    match = _maximum_matching_masks(g.n, g.adj)
    return sum(1 for m in match if m != -1) // 2


def matching_number_bruteforce(g: Graph) -> int:
    """Independent matching oracle: exhaustive recursion over vertex sets.

    Only for tests and cross-checks; capped at n <= 10.
    """
    if g.n > BRUTE_MATCHING_MAX_N:
        raise CapacityError(f"brute-force matching capped at n={BRUTE_MATCHING_MAX_N}")
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(avail: int) -> int:
        u = -1
        for cand in bit_indices(avail):
            if adj[cand] & avail:
                u = cand
                break
        if u == -1:
            return 0
        avail_without_u = avail & ~(1 << u)
        result = best(avail_without_u)  # u stays unmatched
        for v in bit_indices(adj[u] & avail):
            result = max(result, 1 + best(avail_without_u & ~(1 << v)))
        return result

    return best((1 << g.n) - 1)


# ---------------------------------------------------------------------------
# Clique containment
# ---------------------------------------------------------------------------

def _mask_has_clique(adj, cand: int, r: int) -> bool:
    """True iff the induced subgraph on ``cand`` contains a clique of size r."""
    if r <= 0:
        return True
    if cand.bit_count() < r:
        return False
    if r == 1:
        return True
    # Pivot: every r-clique in cand misses N(p) somewhere or contains p.
    pivot = -1
    pivot_deg = -1
    for v in bit_indices(cand):
        d = (adj[v] & cand).bit_count()
        if d > pivot_deg:
            pivot_deg = d
            pivot = v
    for v in bit_indices((cand & ~adj[pivot] & ~(1 << pivot)) | (1 << pivot)):
        if _mask_has_clique(adj, cand & adj[v], r - 1):
            return True
        cand &= ~(1 << v)
        if cand.bit_count() < r:
            return False
    return False


def has_clique(g: Graph, r: int) -> bool:
    """True iff g contains the complete graph on r vertices as a subgraph."""
    if r < 1:
        raise DomainError(f"clique order must be >= 1, got {r}")
    return _mask_has_clique(g.adj, (1 << g.n) - 1, r)


def is_family_free(g: Graph, k: int, s: int) -> bool:
    """True iff g has no clique on k+1 vertices and no matching of s+1 edges."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if s < 0:
        raise DomainError(f"s must be >= 0, got {s}")
    return not has_clique(g, k + 1) and matching_number(g) <= s


# ---------------------------------------------------------------------------
# Components and odd-components witnesses
# ---------------------------------------------------------------------------

def _component_masks(n: int, adj, vertex_mask: int) -> list[int]:
    comps = []
    remaining = vertex_mask
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bit_indices(frontier):
                nxt |= adj[v]
            frontier = nxt & vertex_mask & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Connected components as vertex tuples, ordered by smallest member."""
    masks = _component_masks(g.n, g.adj, (1 << g.n) - 1)
    return tuple(tuple(bit_indices(m)) for m in masks)


@dataclass(frozen=True)
class TutteBergeWitness:
    """A vertex set B whose removal leaves only odd components, plus the
    component sizes and the certified value |B| + sum (a_i - 1)/2."""

    B: tuple[int, ...]
    odd_component_sizes: tuple[int, ...]
    value: int


def tutte_berge_min(g: Graph) -> TutteBergeWitness:
    """Minimize |B| + sum (|C_i|-1)/2 over vertex sets B for which every
    component of G-B is odd.  The minimum equals the matching number; the
    lexicographically smallest minimizing B is returned.

    Scans all 2^n subsets (through the selected kernel backend), so the
    order is capped at 24.
    """
    if g.n > TUTTE_BERGE_MAX_N:
        raise CapacityError(f"subset search capped at n={TUTTE_BERGE_MAX_N}")
    from . import kernels  # deferred: kernels imports this module's helpers

    value, best_mask = kernels.tutte_berge_scan(g.n, g.adj)
    sizes = tuple(c.bit_count()
                  for c in _component_masks(g.n, g.adj, ((1 << g.n) - 1) & ~best_mask))
    return TutteBergeWitness(tuple(bit_indices(best_mask)), sizes, value)
