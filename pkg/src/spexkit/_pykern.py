"""Pure-Python search kernels: the fallback twin of the compiled module.

Both kernel implementations expose the same four functions with byte-for-
byte identical outputs (including node counts); tests enforce the parity.
Shared conventions:

* Edge t of an n-vertex graph is the t-th pair in column-major upper
  triangle order: for v in 1..n-1, for u in 0..v-1.  Bit t of a graph
  mask marks edge t as present (the graph6 bit layout).
* ``search_subtree(n, k, s, prefix_mask, prefix_len, mode)`` explores the
  include/exclude DFS below a fixed decision prefix.  k = 0 disables the
  clique constraint; otherwise cliques on k+1 vertices are forbidden.
  Matchings of s+1 edges are always forbidden.  A partial graph that
  already violates a constraint prunes its include-subtree (both
  constraints are monotone under edge addition).
  mode 0 returns (best_edge_count, masks_attaining_it, nodes_entered),
  best = -1 when the subtree holds no feasible leaf.
  mode 1 returns (-1, edge_maximal_feasible_leaf_masks, nodes_entered);
  a feasible leaf is edge-maximal when adding any absent edge violates a
  constraint.
* ``nodes_entered`` counts DFS nodes at depth >= prefix_len; a prefix
  that is itself infeasible yields (-1, [], 0).
"""

from __future__ import annotations

from .invariants import (
    _augment_along,
    _component_masks,
    _find_augmenting_path,
    _mask_has_clique,
    _maximum_matching_masks,
)


def _edge_order(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


class _Search:
    def __init__(self, n, k, s, mode):
        self.n = n
        self.k = k
        self.s = s
        self.mode = mode
        self.order = _edge_order(n)
        self.num_edges = len(self.order)
        self.adj = [0] * n
        self.match = [-1] * n
        self.nu = 0
        self.cur_edges = 0
        self.gmask = 0
        self.examined = 0
        self.best = -1
        self.masks: list[int] = []
        # scratch for the augmenting-path search
        self._parent = [-1] * n
        self._base = list(range(n))
        self._used = [False] * n
        self._queue: list[int] = []

    def _augment(self, commit: bool) -> bool:
        for root in range(self.n):
            if self.match[root] == -1:
                exposed = _find_augmenting_path(
                    self.n, self.adj, self.match, root,
                    self._parent, self._base, self._used, self._queue)
                if exposed != -1:
                    if commit:
                        _augment_along(self.match, self._parent, exposed)
                    return True
        return False

    def try_include(self, t: int):
        """Add edge t if the graph stays feasible.

        Returns (ok, saved_match): saved_match is the mate array to
        restore on backtrack (None if matching unchanged).
        """
        u, v = self.order[t]
        adj = self.adj
        if self.k > 0 and _mask_has_clique(adj, adj[u] & adj[v], self.k - 1):
            return False, None
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        saved = None
        if self.match[u] == -1 and self.match[v] == -1:
            saved = list(self.match)
            self.match[u] = v
            self.match[v] = u
            self.nu += 1
        else:
            saved = list(self.match)
            if self._augment(commit=True):
                self.nu += 1
            else:
                saved = None
        if self.nu > self.s:
            self.undo_include(t, saved)
            return False, None
        self.cur_edges += 1
        self.gmask |= 1 << t
        return True, saved

    def undo_include(self, t: int, saved):
        u, v = self.order[t]
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)
        if saved is not None:
            self.match[:] = saved
            self.nu -= 1
        if (self.gmask >> t) & 1:
            self.cur_edges -= 1
            self.gmask &= ~(1 << t)

    def leaf_is_maximal(self) -> bool:
        adj = self.adj
        for t in range(self.num_edges):
            if (self.gmask >> t) & 1:
                continue
            u, v = self.order[t]
            if self.k > 0 and _mask_has_clique(adj, adj[u] & adj[v], self.k - 1):
                continue
            if self.nu == self.s:
                if self.match[u] == -1 and self.match[v] == -1:
                    continue
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                found = self._augment(commit=False)
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
                if found:
                    continue
            return False
        return True

    def dfs(self, t: int):
        self.examined += 1
        if t == self.num_edges:
            if self.mode == 0:
                if self.cur_edges > self.best:
                    self.best = self.cur_edges
                    self.masks = [self.gmask]
                elif self.cur_edges == self.best:
                    self.masks.append(self.gmask)
            else:
                if self.leaf_is_maximal():
                    self.masks.append(self.gmask)
            return
        ok, saved = self.try_include(t)
        if ok:
            self.dfs(t + 1)
            self.undo_include(t, saved)
        self.dfs(t + 1)


def search_subtree(n, k, s, prefix_mask, prefix_len, mode):
    st = _Search(n, k, s, mode)
    for t in range(prefix_len):
        if (prefix_mask >> t) & 1:
            ok, _ = st.try_include(t)
            if not ok:
                return -1, [], 0
    st.dfs(prefix_len)
    return st.best, st.masks, st.examined


def matching_number_masks(n, adj_rows) -> int:
    match = _maximum_matching_masks(n, list(adj_rows))
    return sum(1 for m in match if m != -1) // 2


def _mask_lex_less(a: int, b: int) -> bool:
    diff = a ^ b
    if diff == 0:
        return False
    low = diff & -diff
    if a & low:
        return b & ~a != 0
    return a & ~b == 0


def tutte_berge_scan(n, adj_rows):
    """Minimum of |B| + sum (|C_i| - 1)/2 over subsets B leaving only odd
    components, with the lexicographically smallest minimizing B.

    Returns (value, b_mask).
    """
    adj = list(adj_rows)
    full = (1 << n) - 1
    best_value = None
    best_mask = 0
    for b_mask in range(1 << n):
        value = b_mask.bit_count()
        if best_value is not None and value > best_value:
            continue
        ok = True
        for comp in _component_masks(n, adj, full & ~b_mask):
            size = comp.bit_count()
            if size % 2 == 0:
                ok = False
                break
            value += (size - 1) // 2
            if best_value is not None and value > best_value:
                ok = False
                break
        if not ok:
            continue
        if best_value is None or value < best_value or (
                value == best_value and _mask_lex_less(b_mask, best_mask)):
            best_value = value
            best_mask = b_mask
    return best_value, best_mask


def tutte_agreement_scan(n, cap=32):
    """Exhaustive agreement check over all labeled graphs on n vertices.

    For each graph: the minimum odd-components value must equal the
    matching number nu, and every value in [nu, n] must be achieved by
    some odd-components subset.  Returns (graphs_scanned,
    value_mismatch_masks, exact_missing_pairs) with the defect lists
    capped at ``cap`` entries.
    """
    order = _edge_order(n)
    num_edges = len(order)
    full = (1 << n) - 1
    mismatches = []
    missing = []
    adj = [0] * n
    for gmask in range(1 << num_edges):
        for i in range(n):
            adj[i] = 0
        for t, (u, v) in enumerate(order):
            if (gmask >> t) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        nu = matching_number_masks(n, adj)
        achievable = 0
        for b_mask in range(1 << n):
            value = b_mask.bit_count()
            ok = True
            for comp in _component_masks(n, adj, full & ~b_mask):
                size = comp.bit_count()
                if size % 2 == 0:
                    ok = False
                    break
                value += (size - 1) // 2
            if ok:
                achievable |= 1 << value
        min_value = (achievable & -achievable).bit_length() - 1
        if min_value != nu and len(mismatches) < cap:
            mismatches.append(gmask)
        for s in range(nu, n + 1):
            if not (achievable >> s) & 1 and len(missing) < cap:
                missing.append((gmask, s))
    return (1 << num_edges), mismatches, missing
