"""Exhaustive ground truth at desk scale.

Maximizes edge count or spectral radius over all labeled graphs on n
vertices under clique/matching constraints, by include/exclude DFS over
the edge slots with monotone constraint pruning.  The spectral objective
is evaluated only at edge-maximal feasible graphs: adding an edge never
decreases the spectral radius, so the maximum over those equals the
maximum over all feasible graphs.
"""

from __future__ import annotations

import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import CapacityError, DomainError
from .graph6 import graph6_encode
from .graphs import Graph
from .invariants import has_clique, matching_number
from .spectral import spectral_radius_dense

#: Default scale guards (overridable with a warning) and the hard refusal.
DEFAULT_MAX_N_SPECTRAL = 8
DEFAULT_MAX_N_EDGES = 9
HARD_MAX_N = 10

#: Decision depth that splits the DFS into independent subtrees.  Fixed
#: (not thread-dependent) so reports are identical for any worker count.
PREFIX_DEPTH = 12

#: Two spectral values within this of each other count as the same
#: extremal value (matches the eigensolver tolerances in use).
SPECTRAL_TIE_TOL = 1e-9

WITNESS_CAP = 100


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an exhaustive search.

    ``witnesses`` holds up to 100 graph6 strings in lexicographic order;
    every one is re-verified on emission (feasible and attains
    ``best_value``).  ``examined`` counts DFS nodes below the split
    frontier and is deterministic across worker counts and backends.
    """

    n: int
    k: Optional[int]
    s: int
    objective: str
    best_value: float
    witnesses: tuple[str, ...]
    examined: int
    elapsed: float


def _edge_order(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


def _graph_from_mask(n: int, mask: int) -> Graph:
    order = _edge_order(n)
    return Graph.from_edges(
        n, [order[t] for t in range(len(order)) if (mask >> t) & 1])


def _lambda_of_mask(n: int, mask: int) -> float:
    # LAPACK on the tiny leaf graphs; witnesses are re-verified against
    # the power-iteration route on emission.
    a = np.zeros((n, n))
    for t, (u, v) in enumerate(_edge_order(n)):
        if (mask >> t) & 1:
            a[u, v] = a[v, u] = 1.0
    return float(np.linalg.eigvalsh(a)[-1]) if n else 0.0


def _run_subtree(args):
    n, k, s, prefix_mask, prefix_len, mode = args
    return kernels.search_subtree(n, k, s, prefix_mask, prefix_len, mode)


def _search(n: int, k: int, s: int, mode: int, threads: int):
    num_edges = n * (n - 1) // 2
    prefix_len = PREFIX_DEPTH if num_edges > PREFIX_DEPTH else 0
    tasks = [(n, k, s, pm, prefix_len, mode) for pm in range(1 << prefix_len)]
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_subtree, tasks, chunksize=64))
    else:
        results = [_run_subtree(t) for t in tasks]
    examined = sum(r[2] for r in results)
    return results, examined


def _verify_witness(g: Graph, k: Optional[int], s: int) -> bool:
    if k is not None and has_clique(g, k + 1):
        return False
    return matching_number(g) <= s


def _emit(n, k, s, objective, best_value, masks, examined, t0) -> SearchReport:
    witnesses = sorted(graph6_encode(_graph_from_mask(n, m)) for m in set(masks))
    witnesses = witnesses[:WITNESS_CAP]
    from .graph6 import graph6_decode

    for w in witnesses:
        g = graph6_decode(w)
        if not _verify_witness(g, k, s):
            raise AssertionError(f"witness {w} violates the constraints")
        if objective == "edges":
            attained = g.edge_count == best_value
        else:
            attained = abs(spectral_radius_dense(g).lam - best_value) <= SPECTRAL_TIE_TOL
        if not attained:
            raise AssertionError(f"witness {w} does not attain {best_value}")
    return SearchReport(n=n, k=k, s=s, objective=objective,
                        best_value=best_value, witnesses=tuple(witnesses),
                        examined=examined, elapsed=time.perf_counter() - t0)


def _enumerate(n: int, k: Optional[int], s: int, objective: str,
               threads: int, override_caps: bool) -> SearchReport:
    if objective not in ("edges", "spectral"):
        raise DomainError(f"objective must be 'edges' or 'spectral', got {objective!r}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if s < 0:
        raise DomainError(f"s must be >= 0, got {s}")
    if n > HARD_MAX_N:
        raise CapacityError(f"exhaustive search refused above n={HARD_MAX_N}")
    soft = DEFAULT_MAX_N_EDGES if objective == "edges" else DEFAULT_MAX_N_SPECTRAL
    if n > soft:
        if not override_caps:
            raise CapacityError(
                f"n={n} exceeds the default {objective} cap {soft}; "
                "pass override_caps=True to run anyway")
        warnings.warn(f"running {objective} search at n={n}, above the "
                      f"default cap {soft}", stacklevel=3)
    t0 = time.perf_counter()
    kk = 0 if k is None else k
    if objective == "edges":
        results, examined = _search(n, kk, s, 0, threads)
        best = max(r[0] for r in results)
        masks = [m for r in results if r[0] == best for m in r[1]]
        return _emit(n, k, s, objective, best, masks, examined, t0)
    results, examined = _search(n, kk, s, 1, threads)
    maximal = [m for r in results for m in r[1]]
    values = [(_lambda_of_mask(n, m), m) for m in maximal]
    best = max(v for v, _ in values)
    masks = [m for v, m in values if v >= best - SPECTRAL_TIE_TOL]
    return _emit(n, k, s, objective, best, masks, examined, t0)


def enumerate_extremal(n: int, k: int, s: int, objective: str = "edges",
                       threads: int = 1,
                       override_caps: bool = False) -> SearchReport:
    """Exact extremum over all labeled n-vertex graphs with no clique on
    k+1 vertices and no matching of s+1 edges."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return _enumerate(n, k, s, objective, threads, override_caps)


def enumerate_matching_extremal(n: int, s: int, objective: str = "edges",
                                threads: int = 1,
                                override_caps: bool = False) -> SearchReport:
    """Exact extremum over all labeled n-vertex graphs with no matching
    of s+1 edges (no clique constraint)."""
    return _enumerate(n, None, s, objective, threads, override_caps)
