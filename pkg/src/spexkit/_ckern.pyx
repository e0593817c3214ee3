# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels: the hot twin of ``_pykern``.

Same functions, same outputs, same node counts; see the fallback module
for the full interface contract.  Vertex caps: 32 for the DFS and
matching kernels, 24 for the subset scan.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy, memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

DEF MAXN = 32
DEF MAXE = 64

cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)

cdef inline int ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


# ---------------------------------------------------------------------------
# Clique existence on a candidate bitset
# ---------------------------------------------------------------------------

cdef bint mask_has_clique(uint64_t* adj, uint64_t cand, int r) nogil:
    cdef int pivot = -1, pd = -1, d, v
    cdef uint64_t rest, one = 1
    if r <= 0:
        return True
    if popcount(cand) < r:
        return False
    if r == 1:
        return True
    rest = cand
    while rest:
        v = ctz(rest)
        rest &= rest - 1
        d = popcount(adj[v] & cand)
        if d > pd:
            pd = d
            pivot = v
    rest = (cand & ~adj[pivot] & ~(one << pivot)) | (one << pivot)
    while rest:
        v = ctz(rest)
        rest &= rest - 1
        if mask_has_clique(adj, cand & adj[v], r - 1):
            return True
        cand &= ~(one << v)
        if popcount(cand) < r:
            return False
    return False


# ---------------------------------------------------------------------------
# Maximum matching (blossom algorithm) on bitset adjacency
# ---------------------------------------------------------------------------

cdef struct MatchScratch:
    int parent[MAXN]
    int base[MAXN]
    int q[MAXN + MAXN]
    unsigned char used[MAXN]
    unsigned char blossom[MAXN]
    unsigned char seen[MAXN]


cdef int blossom_base(MatchScratch* ms, int* match, int u, int v) nogil:
    memset(ms.seen, 0, MAXN)
    while True:
        u = ms.base[u]
        ms.seen[u] = 1
        if match[u] == -1:
            break
        u = ms.parent[match[u]]
    while True:
        v = ms.base[v]
        if ms.seen[v]:
            return v
        v = ms.parent[match[v]]


cdef void mark_path(MatchScratch* ms, int* match, int v, int b, int child) nogil:
    while ms.base[v] != b:
        ms.blossom[ms.base[v]] = 1
        ms.blossom[ms.base[match[v]]] = 1
        ms.parent[v] = child
        child = match[v]
        v = ms.parent[match[v]]


cdef int find_augmenting_path(int n, uint64_t* adj, int* match, int root,
                              MatchScratch* ms) nogil:
    cdef int i, v, to, cur, head, tail
    cdef uint64_t nbrs
    for i in range(n):
        ms.parent[i] = -1
        ms.base[i] = i
        ms.used[i] = 0
    ms.used[root] = 1
    ms.q[0] = root
    head = 0
    tail = 1
    while head < tail:
        v = ms.q[head]
        head += 1
        nbrs = adj[v]
        while nbrs:
            to = ctz(nbrs)
            nbrs &= nbrs - 1
            if ms.base[v] == ms.base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and ms.parent[match[to]] != -1):
                cur = blossom_base(ms, match, v, to)
                memset(ms.blossom, 0, MAXN)
                mark_path(ms, match, v, cur, to)
                mark_path(ms, match, to, cur, v)
                for i in range(n):
                    if ms.blossom[ms.base[i]]:
                        ms.base[i] = cur
                        if not ms.used[i]:
                            ms.used[i] = 1
                            ms.q[tail] = i
                            tail += 1
            elif ms.parent[to] == -1:
                ms.parent[to] = v
                if match[to] == -1:
                    return to
                ms.used[match[to]] = 1
                ms.q[tail] = match[to]
                tail += 1
    return -1


cdef void augment_along(int* match, int* parent, int exposed) nogil:
    cdef int v = exposed, pv, ppv
    while v != -1:
        pv = parent[v]
        ppv = match[pv]
        match[v] = pv
        match[pv] = v
        v = ppv


cdef int max_matching(int n, uint64_t* adj, int* match, MatchScratch* ms) nogil:
    cdef int u, v, root, exposed, nu = 0
    cdef uint64_t nbrs
    for u in range(n):
        match[u] = -1
    for u in range(n):
        if match[u] == -1:
            nbrs = adj[u]
            while nbrs:
                v = ctz(nbrs)
                nbrs &= nbrs - 1
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    nu += 1
                    break
    for root in range(n):
        if match[root] == -1:
            exposed = find_augmenting_path(n, adj, match, root, ms)
            if exposed != -1:
                augment_along(match, ms.parent, exposed)
                nu += 1
    return nu


def matching_number_masks(int n, adj_rows):
    if n > MAXN:
        raise ValueError(f"kernel matching capped at n={MAXN}")
    cdef uint64_t adj[MAXN]
    cdef int match[MAXN]
    cdef MatchScratch ms
    cdef int i
    for i in range(n):
        adj[i] = adj_rows[i]
    return max_matching(n, adj, match, &ms)


# ---------------------------------------------------------------------------
# Include/exclude DFS over the edge list
# ---------------------------------------------------------------------------

cdef class _Search:
    cdef int n, k, s, mode, num_edges
    cdef int eu[MAXE]
    cdef int ev[MAXE]
    cdef uint64_t adj[MAXN]
    cdef int match[MAXN]
    cdef int nu, cur_edges
    cdef uint64_t gmask
    cdef unsigned long long examined
    cdef long best
    cdef list masks
    cdef MatchScratch ms
    cdef int saved_match[MAXE + 1][MAXN]
    cdef unsigned char saved_flag[MAXE + 1]

    def __cinit__(self, int n, int k, int s, int mode):
        cdef int t = 0, u, v
        self.n = n
        self.k = k
        self.s = s
        self.mode = mode
        for v in range(1, n):
            for u in range(v):
                self.eu[t] = u
                self.ev[t] = v
                t += 1
        self.num_edges = t
        memset(self.adj, 0, sizeof(uint64_t) * MAXN)
        for u in range(n):
            self.match[u] = -1
        self.nu = 0
        self.cur_edges = 0
        self.gmask = 0
        self.examined = 0
        self.best = -1
        self.masks = []

    cdef bint augment(self, bint commit) nogil:
        cdef int root, exposed
        for root in range(self.n):
            if self.match[root] == -1:
                exposed = find_augmenting_path(self.n, self.adj, self.match,
                                               root, &self.ms)
                if exposed != -1:
                    if commit:
                        augment_along(self.match, self.ms.parent, exposed)
                    return True
        return False

    cdef bint try_include(self, int t) nogil:
        # On success the pre-include mate array sits in saved_match[t]
        # with saved_flag[t] set iff the matching changed.
        cdef int u = self.eu[t], v = self.ev[t]
        cdef uint64_t one = 1
        cdef bint grew
        if self.k > 0 and mask_has_clique(self.adj, self.adj[u] & self.adj[v],
                                          self.k - 1):
            return False
        self.adj[u] |= one << v
        self.adj[v] |= one << u
        memcpy(self.saved_match[t], self.match, sizeof(int) * self.n)
        if self.match[u] == -1 and self.match[v] == -1:
            self.match[u] = v
            self.match[v] = u
            grew = True
        else:
            grew = self.augment(True)
        self.saved_flag[t] = 1 if grew else 0
        if grew:
            self.nu += 1
            if self.nu > self.s:
                self.undo_include(t, False)
                return False
        self.cur_edges += 1
        self.gmask |= one << t
        return True

    cdef void undo_include(self, int t, bint committed) nogil:
        cdef int u = self.eu[t], v = self.ev[t]
        cdef uint64_t one = 1
        self.adj[u] &= ~(one << v)
        self.adj[v] &= ~(one << u)
        if self.saved_flag[t]:
            memcpy(self.match, self.saved_match[t], sizeof(int) * self.n)
            self.nu -= 1
        if committed:
            self.cur_edges -= 1
            self.gmask &= ~(one << t)

    cdef bint leaf_is_maximal(self) nogil:
        cdef int t, u, v
        cdef uint64_t one = 1
        cdef bint found
        for t in range(self.num_edges):
            if (self.gmask >> t) & 1:
                continue
            u = self.eu[t]
            v = self.ev[t]
            if self.k > 0 and mask_has_clique(self.adj,
                                              self.adj[u] & self.adj[v],
                                              self.k - 1):
                continue
            if self.nu == self.s:
                if self.match[u] == -1 and self.match[v] == -1:
                    continue
                self.adj[u] |= one << v
                self.adj[v] |= one << u
                found = self.augment(False)
                self.adj[u] &= ~(one << v)
                self.adj[v] &= ~(one << u)
                if found:
                    continue
            return False
        return True

    cdef void dfs(self, int t):
        self.examined += 1
        if t == self.num_edges:
            if self.mode == 0:
                if <long> self.cur_edges > self.best:
                    self.best = self.cur_edges
                    self.masks = [self.gmask]
                elif <long> self.cur_edges == self.best:
                    self.masks.append(self.gmask)
            else:
                if self.leaf_is_maximal():
                    self.masks.append(self.gmask)
            return
        if self.try_include(t):
            self.dfs(t + 1)
            self.undo_include(t, True)
        self.dfs(t + 1)


def search_subtree(int n, int k, int s, unsigned long long prefix_mask,
                   int prefix_len, int mode):
    if n * (n - 1) // 2 > MAXE:
        raise ValueError(f"kernel search capped at {MAXE} edge slots")
    cdef _Search st = _Search(n, k, s, mode)
    cdef int t
    for t in range(prefix_len):
        if (prefix_mask >> t) & 1:
            if not st.try_include(t):
                return -1, [], 0
    st.dfs(prefix_len)
    return (st.best, st.masks, st.examined)


# ---------------------------------------------------------------------------
# Odd-components subset scans
# ---------------------------------------------------------------------------

cdef int restricted_value(int n, uint64_t* adj, uint64_t rest, int bcount) nogil:
    """Value |B| + sum (|C_i|-1)/2 when all components of the rest are
    odd, else -1."""
    cdef uint64_t remaining = rest, comp, frontier, nxt
    cdef int value = bcount, size, v
    while remaining:
        comp = remaining & (~remaining + 1)
        frontier = comp
        while frontier:
            nxt = 0
            while frontier:
                v = ctz(frontier)
                frontier &= frontier - 1
                nxt |= adj[v]
            frontier = nxt & rest & ~comp
            comp |= frontier
        size = popcount(comp)
        if size & 1 == 0:
            return -1
        value += (size - 1) >> 1
        remaining &= ~comp
    return value


cdef bint mask_lex_less(uint64_t a, uint64_t b) nogil:
    cdef uint64_t diff = a ^ b, low
    if diff == 0:
        return False
    low = diff & (~diff + 1)
    if a & low:
        return (b & ~a) != 0
    return (a & ~b) == 0


def tutte_berge_scan(int n, adj_rows):
    if n > 24:
        raise ValueError("subset scan capped at n=24")
    cdef uint64_t adj[MAXN]
    cdef int i
    for i in range(n):
        adj[i] = adj_rows[i]
    cdef uint64_t full = (<uint64_t> 1 << n) - 1
    cdef uint64_t b_mask, best_mask = 0
    cdef int value, best_value = -1
    cdef unsigned long long top = <unsigned long long> 1 << n
    for b_mask in range(top):
        value = popcount(b_mask)
        if best_value != -1 and value > best_value:
            continue
        value = restricted_value(n, adj, full & ~b_mask, value)
        if value == -1:
            continue
        if best_value == -1 and value >= 0:
            best_value = value
            best_mask = b_mask
        elif value < best_value or (value == best_value and
                                    mask_lex_less(b_mask, best_mask)):
            best_value = value
            best_mask = b_mask
    return best_value, best_mask


def tutte_agreement_scan(int n, int cap=32):
    if n > 7:
        raise ValueError("agreement scan capped at n=7")
    cdef int num_edges = n * (n - 1) // 2
    cdef int eu[MAXE]
    cdef int ev[MAXE]
    cdef int t = 0, u, v, i, nu, value, min_value, s
    for v in range(1, n):
        for u in range(v):
            eu[t] = u
            ev[t] = v
            t += 1
    cdef uint64_t adj[MAXN]
    cdef int match[MAXN]
    cdef MatchScratch ms
    cdef uint64_t full = (<uint64_t> 1 << n) - 1
    cdef uint64_t one = 1
    cdef unsigned long long gmask, b_mask
    cdef unsigned long long num_graphs = <unsigned long long> 1 << num_edges
    cdef unsigned long long num_subsets = <unsigned long long> 1 << n
    cdef unsigned int achievable
    mismatches = []
    missing = []
    for gmask in range(num_graphs):
        for i in range(n):
            adj[i] = 0
        for t in range(num_edges):
            if (gmask >> t) & 1:
                adj[eu[t]] |= one << ev[t]
                adj[ev[t]] |= one << eu[t]
        nu = max_matching(n, adj, match, &ms)
        achievable = 0
        for b_mask in range(num_subsets):
            value = restricted_value(n, adj, full & ~b_mask,
                                     popcount(b_mask))
            if value >= 0:
                achievable |= (<unsigned int> 1) << value
        min_value = ctz(achievable)
        if min_value != nu and len(mismatches) < cap:
            mismatches.append(gmask)
        for s in range(nu, n + 1):
            if not (achievable >> s) & 1 and len(missing) < cap:
                missing.append((gmask, s))
    return num_graphs, mismatches, missing
