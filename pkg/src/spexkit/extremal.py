"""Closed-form extremal edge counts and spectral extremal values, the
balancing move on part sizes, and the small-n crossover explorer.

The formulas here are the "theory side" of the package; the enumeration
oracle is the ground truth they are checked against at desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .graphs import PartSizes, _as_parts, gkns_parts, turan_parts
from .spectral import DEFAULT_ROOT_TOL, multipartite_lambda

#: Slack when comparing two root-finder outputs for the crossover test;
#: exact ties count as crossed.
CROSSOVER_SLACK = 1e-12


@dataclass(frozen=True)
class ExtremalValue:
    """An extremal number together with what attains it.

    ``witness`` names the achieving graph(s); ``regime`` records which
    piecewise case (or theorem hypothesis) applied; ``competitor`` holds
    the runner-up family and its value where one is tracked.
    """

    value: float
    witness: tuple[str, ...]
    regime: str
    competitor: Optional[tuple[str, float]] = None


def _pair_product_sum(parts: PartSizes) -> int:
    total = parts.n
    return (total * total - sum(p * p for p in parts)) // 2


def edges_turan(n: int, k: int) -> int:
    """Edge count of the balanced complete k-partite graph on n vertices."""
    return _pair_product_sum(turan_parts(n, k))


def edges_gkns(n: int, k: int, s: int) -> int:
    """Edge count of the k-partite graph with an independent part of size
    n - s and the rest balanced."""
    return _pair_product_sum(gkns_parts(n, k, s))


def ex_alon_frankl(n: int, k: int, s: int) -> ExtremalValue:
    """Maximum edges over n-vertex graphs with no (k+1)-clique and no
    matching of s+1 edges: the larger of the two candidate families.

    Valid for n >= 2s+1; smaller n still evaluates the formula but is
    flagged ``outside-theorem``.
    """
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if s < 0:
        raise DomainError(f"s must be >= 0, got {s}")
    m = 2 * s + 1
    turan_term = edges_turan(m, k)
    gkns_term = edges_gkns(n, k, s)
    regime = "theorem" if n >= m else "outside-theorem"
    turan_name = f"T{k}({m}) + {max(n - m, 0)} isolated"
    gkns_name = f"K{gkns_parts(n, k, s).parts}"
    if turan_term > gkns_term:
        return ExtremalValue(turan_term, (turan_name,), regime)
    if gkns_term > turan_term:
        return ExtremalValue(gkns_term, (gkns_name,), regime)
    return ExtremalValue(turan_term, (turan_name, gkns_name), regime)


def ex_erdos_gallai(n: int, s: int) -> ExtremalValue:
    """Erdos-Gallai maximum edges with no matching of s+1 edges:
    max of |E(K_s v empty_{n-s})| and C(2s+1, 2).

    The second term is the edge count of the complete graph on 2s+1
    vertices; the oracle adjudicates this reading at small n.
    """
    if s < 0:
        raise DomainError(f"s must be >= 0, got {s}")
    if n < 2 * s + 1:
        raise DomainError(f"need n >= 2s+1, got n={n}, s={s}")
    if s == 0:
        return ExtremalValue(0, (f"empty graph on {n} vertices",), "empty")
    join_term = edges_gkns(n, s + 1, s)
    clique_term = math.comb(2 * s + 1, 2)
    join_name = f"K{gkns_parts(n, s + 1, s).parts}"
    clique_name = f"K{2 * s + 1} + {n - 2 * s - 1} isolated"
    if join_term > clique_term:
        return ExtremalValue(join_term, (join_name,), "join")
    if clique_term > join_term:
        return ExtremalValue(clique_term, (clique_name,), "clique")
    return ExtremalValue(join_term, (join_name, clique_name), "tie")


def _split_join_lambda(n: int, s: int, tol: float) -> float:
    # K_s joined to an independent set on n-s vertices, via the secular root.
    return multipartite_lambda(PartSizes((n - s,) + (1,) * s), tol)


def spex_matching(n: int, s: int, tol: float = DEFAULT_ROOT_TOL) -> ExtremalValue:
    """Maximum spectral radius with matching number at most s (piecewise).

    Cases: complete graph for n in {2s, 2s+1}; a (2s+1)-clique plus
    isolated vertices for 2s+2 <= n < 3s+2; both witnesses at n = 3s+2;
    K_s joined to an independent set for n > 3s+2.  Below n = 2s every
    graph qualifies, flagged accordingly.
    """
    if n < 1 or s < 1:
        raise DomainError(f"need n >= 1 and s >= 1, got n={n}, s={s}")
    clique_name = f"K{2 * s + 1} + {n - 2 * s - 1} isolated"
    join_name = f"K({n - s},{','.join('1' * s)})"
    if n < 2 * s:
        return ExtremalValue(float(n - 1), (f"K{n}",), "all-graphs-free")
    if n in (2 * s, 2 * s + 1):
        return ExtremalValue(float(n - 1), (f"K{n}",), "complete")
    if n < 3 * s + 2:
        return ExtremalValue(float(2 * s), (clique_name,), "clique-plus-isolated")
    if n == 3 * s + 2:
        lam_join = _split_join_lambda(n, s, tol)
        if abs(lam_join - 2 * s) > 1e-8:
            raise DomainError(
                f"boundary mismatch at n=3s+2: join radius {lam_join} != {2 * s}")
        return ExtremalValue(float(2 * s), (join_name, clique_name), "boundary")
    return ExtremalValue(_split_join_lambda(n, s, tol), (join_name,), "join")


def spex_turan(n: int, k: int, tol: float = DEFAULT_ROOT_TOL) -> float:
    """Maximum spectral radius over n-vertex graphs with no (k+1)-clique:
    the balanced complete k-partite graph attains it."""
    return multipartite_lambda(turan_parts(n, k), tol)


def spex_main(n: int, k: int, s: int, tol: float = DEFAULT_ROOT_TOL) -> ExtremalValue:
    """Spectral extremal value for the combined clique and matching bound.

    Returns the radius of the k-partite graph with independent part of
    size n - s.  The formula is proven for n >= 4s^2 + 9s; below that the
    result is flagged conjectural and the competing balanced-graph-plus-
    isolated-vertices value is reported alongside.
    """
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if s < 0:
        raise DomainError(f"s must be >= 0, got {s}")
    parts = gkns_parts(n, k, s)
    value = multipartite_lambda(parts, tol)
    witness = (f"K{parts.parts}",)
    if n >= 4 * s * s + 9 * s:
        return ExtremalValue(value, witness, "theorem")
    m = min(n, 2 * s + 1)
    comp_value = multipartite_lambda(turan_parts(m, k), tol)
    comp_name = f"T{k}({m}) + {n - m} isolated"
    return ExtremalValue(value, witness, "conjectural-small-n",
                         competitor=(comp_name, comp_value))


def balance_move(parts, i: int, j: int) -> PartSizes:
    """Move one vertex from part i to part j (canonical indices), allowed
    when the sizes differ by at least 2.  The spectral radius of the
    corresponding complete multipartite graph strictly increases."""
    parts = _as_parts(parts)
    sizes = list(parts.parts)
    if not (0 <= i < len(sizes) and 0 <= j < len(sizes)):
        raise DomainError(f"part indices ({i}, {j}) out of range")
    if sizes[i] - sizes[j] < 2:
        raise DomainError(
            f"balance move needs n_i - n_j >= 2, got {sizes[i]} and {sizes[j]}")
    sizes[i] -= 1
    sizes[j] += 1
    return PartSizes(tuple(sizes))


def crossover_threshold(k: int, s: int, n_max: int,
                        tol: float = DEFAULT_ROOT_TOL) -> Optional[int]:
    """Smallest n in [2s+1, n_max] where the independent-part family's
    radius reaches the balanced graph on 2s+1 vertices, or None.

    The radius is nondecreasing in n (the family only gains vertices and
    edges), so binary search applies.
    """
    if k < 2 or s < 1:
        raise DomainError(f"need k >= 2 and s >= 1, got k={k}, s={s}")
    lo = 2 * s + 1
    if n_max < lo:
        raise DomainError(f"n_max must be at least 2s+1 = {lo}, got {n_max}")
    target = multipartite_lambda(turan_parts(2 * s + 1, k), tol) - CROSSOVER_SLACK

    def crossed(n: int) -> bool:
        return multipartite_lambda(gkns_parts(n, k, s), tol) >= target

    if not crossed(n_max):
        return None
    hi = n_max
    while lo < hi:
        mid = (lo + hi) // 2
        if crossed(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo
