"""Largest-eigenvalue machinery.

Four routes to the spectral radius are kept deliberately separate so they
can cross-check each other: dense power iteration on the adjacency
matrix, the secular equation for complete multipartite graphs, Perron
roots of equitable quotient matrices, and the rational function attached
to the clique-plus-independent-set join family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, NumericalError
from .graphs import Graph, PartSizes, _as_parts, bit_indices

DEFAULT_DENSE_TOL = 1e-10
DEFAULT_ROOT_TOL = 1e-12
POWER_ITERATION_CAP = 10 ** 6

#: Quotient matrices stay tiny; anything bigger signals a misuse.
QUOTIENT_MAX_ORDER = 64


@dataclass(frozen=True)
class SpectralResult:
    """Output of the dense eigenvalue iteration.

    ``lam`` approximates the largest adjacency eigenvalue, ``perron`` is
    the unit iterate it came from, ``residual`` is ||A x - lam x||_inf.
    """

    lam: float
    perron: tuple[float, ...]
    residual: float
    iterations: int


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Dense float64 adjacency matrix of g."""
    if g.n == 0:
        return np.zeros((0, 0))
    nbytes = (g.n + 7) // 8
    packed = np.frombuffer(
        b"".join(row.to_bytes(nbytes, "little") for row in g.adj), dtype=np.uint8)
    bits = np.unpackbits(packed.reshape(g.n, nbytes), axis=1, bitorder="little")
    return bits[:, :g.n].astype(np.float64)


def spectral_radius_dense(g: Graph, tol: float = DEFAULT_DENSE_TOL) -> SpectralResult:
    """Largest adjacency eigenvalue by power iteration.

    The iteration runs on A + I so the +/-lambda oscillation of bipartite
    graphs cannot stall it; the eigenvalue estimate and the reported
    residual refer to A itself.  Convergence means the 2-norm residual
    dropped below tol, which bounds the distance to the nearest true
    eigenvalue by tol.
    """
    if g.n < 1:
        raise DomainError("graph must have at least one vertex")
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    a = adjacency_matrix(g)
    x = np.full(g.n, 1.0 / math.sqrt(g.n))
    res_inf = math.inf
    for it in range(1, POWER_ITERATION_CAP + 1):
        ax = a @ x
        lam = float(x @ ax)
        r = ax - lam * x
        res2 = float(np.linalg.norm(r))
        res_inf = float(np.max(np.abs(r)))
        if res2 <= tol:
            return SpectralResult(lam, tuple(np.abs(x)), res_inf, it)
        y = ax + x  # (A + I) x
        x = y / np.linalg.norm(y)
    raise NumericalError(
        f"power iteration did not reach tol={tol} in {POWER_ITERATION_CAP} steps",
        residual=res_inf)


# ---------------------------------------------------------------------------
# Complete multipartite closed form
# ---------------------------------------------------------------------------

def multipartite_lambda(parts, tol: float = DEFAULT_ROOT_TOL) -> float:
    """Spectral radius of the complete multipartite graph with these parts.

    For k >= 2 parts this is the unique root of
    ``sum_i n_i/(x + n_i) = 1`` in (0, n-1]; the left side is strictly
    decreasing there.  Bisection brackets the root, Newton polishes it.
    A single part (or none) gives an empty graph, radius 0.
    """
    parts = _as_parts(parts)
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    if parts.k <= 1:
        return 0.0
    sizes = parts.parts
    n = parts.n

    def f(x):
        return sum(p / (x + p) for p in sizes) - 1.0

    def fprime(x):
        return -sum(p / (x + p) ** 2 for p in sizes)

    lo, hi = 0.0, float(n - 1)
    f_hi = f(hi)
    if f_hi >= 0.0:
        return hi  # only the complete graph hits the endpoint
    while hi - lo > 1e-6:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(60):
        step = f(x) / fprime(x)
        x_new = x - step
        if not lo <= x_new <= hi:
            x_new = 0.5 * (lo + hi)
        if f(x_new) > 0.0:
            lo = x_new
        else:
            hi = x_new
        converged = abs(x_new - x) <= tol
        x = x_new
        if converged:
            break
    return x


def multipartite_charpoly_eval(parts, x: float) -> float:
    """Characteristic polynomial of a complete multipartite graph at x:
    ``x^(n-k) * (prod_i (x+n_i) - sum_i n_i prod_{j!=i} (x+n_j))``."""
    parts = _as_parts(parts)
    sizes = parts.parts
    n, k = parts.n, parts.k
    prod = 1.0
    for p in sizes:
        prod *= x + p
    total = prod
    for i, p in enumerate(sizes):
        term = float(p)
        for j, q in enumerate(sizes):
            if j != i:
                term *= x + q
        total -= term
    return float(x) ** (n - k) * total


# ---------------------------------------------------------------------------
# Equitable quotient matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuotientMatrix:
    """Vertex partition plus the block-to-block neighbor counts.

    Only constructed through :func:`quotient_matrix`, which verifies the
    partition is equitable (every vertex of block i has the same number
    of neighbors in block j).
    """

    blocks: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[int, ...], ...]


def quotient_matrix(g: Graph, blocks) -> QuotientMatrix:
    """Equitable quotient matrix of g for the given vertex partition."""
    block_tuples = tuple(tuple(b) for b in blocks)
    masks = []
    seen = 0
    for b in block_tuples:
        if not b:
            raise DomainError("empty block in partition")
        mask = 0
        for v in b:
            if not 0 <= v < g.n:
                raise DomainError(f"vertex {v} outside range 0..{g.n - 1}")
            mask |= 1 << v
        if mask & seen:
            raise DomainError("blocks are not disjoint")
        seen |= mask
        masks.append(mask)
    if seen != (1 << g.n) - 1:
        raise DomainError("blocks do not cover every vertex")
    entries = []
    for i, bi in enumerate(block_tuples):
        row = []
        for j, mask_j in enumerate(masks):
            counts = {(g.adj[v] & mask_j).bit_count() for v in bi}
            if len(counts) != 1:
                raise DomainError(
                    f"partition is not equitable: vertices of block {i} have "
                    f"differing neighbor counts into block {j}")
            row.append(counts.pop())
        entries.append(tuple(row))
    return QuotientMatrix(block_tuples, tuple(entries))


def _matrix_rows(q) -> list[list[float]]:
    rows = q.entries if isinstance(q, QuotientMatrix) else q
    out = [[float(x) for x in row] for row in rows]
    k = len(out)
    if any(len(row) != k for row in out):
        raise DomainError("matrix is not square")
    if any(x < 0 for row in out for x in row):
        raise DomainError("matrix entries must be nonnegative")
    return out


def perron_root(q, tol: float = DEFAULT_ROOT_TOL) -> float:
    """Largest eigenvalue of a nonnegative matrix by power iteration.

    Iterates on M + I so a positive vector stays positive, and uses the
    two-sided ratio bounds min_i (Mx)_i/x_i <= lambda <= max_i (Mx)_i/x_i
    as the stopping certificate.  Accepts a QuotientMatrix or raw rows.
    """
    m = _matrix_rows(q)
    k = len(m)
    if k == 0:
        raise DomainError("matrix must have positive order")
    if k > QUOTIENT_MAX_ORDER:
        raise DomainError(f"matrix order capped at {QUOTIENT_MAX_ORDER}")
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    x = [1.0] * k
    width = math.inf
    for _ in range(POWER_ITERATION_CAP):
        y = [sum(m[i][j] * x[j] for j in range(k)) + x[i] for i in range(k)]
        ratios = [y[i] / x[i] for i in range(k)]
        lo, hi = min(ratios) - 1.0, max(ratios) - 1.0
        width = hi - lo
        if width <= tol:
            return 0.5 * (lo + hi)
        scale = max(y)
        x = [v / scale for v in y]
    raise NumericalError(
        f"Perron iteration stalled (interval width {width:.3e}); "
        "the matrix may be reducible", residual=width)


# ---------------------------------------------------------------------------
# Join family K_{b_1..b_{k-1}} v (empty_a + clique_a1)
# ---------------------------------------------------------------------------

def join_family_quotient(b_parts, a: int, a1: int) -> list[list[float]]:
    """Equitable quotient rows for the join family, without materializing
    the graph: one block per b-part, one for the independent block, one
    for the clique."""
    b_parts = _as_parts(b_parts)
    sizes = b_parts.parts
    if not sizes:
        raise DomainError("need at least one joined part")
    if a < 1 or a1 < 1:
        raise DomainError(f"need a >= 1 and a1 >= 1, got a={a}, a1={a1}")
    k1 = len(sizes)
    rows = []
    for i in range(k1):
        row = [float(sizes[j]) if j != i else 0.0 for j in range(k1)]
        rows.append(row + [float(a), float(a1)])
    rows.append([float(b) for b in sizes] + [0.0, 0.0])
    rows.append([float(b) for b in sizes] + [0.0, float(a1 - 1)])
    return rows


def join_family_lambda(b_parts, a: int, a1: int,
                       tol: float = DEFAULT_ROOT_TOL) -> float:
    """Spectral radius of the join family via its equitable quotient."""
    return perron_root(join_family_quotient(b_parts, a, a1), tol)


def f0_eval(lam: float, b_parts, a: int, a1: int) -> float:
    """Rational function whose largest root is the join-family radius:
    ``-lam (lam + 1 - a1) / (lam^2 + lam + a (lam + 1 - a1))
    + sum_i b_i / (b_i + lam)``."""
    b_parts = _as_parts(b_parts)
    den = lam * lam + lam + a * (lam + 1.0 - a1)
    if abs(den) < 1e-12:
        raise DomainError(f"lambda={lam} is a pole of the leading term")
    total = -lam * (lam + 1.0 - a1) / den
    for b in b_parts:
        if abs(b + lam) < 1e-12:
            raise DomainError(f"lambda={lam} is a pole at part size {b}")
        total += b / (b + lam)
    return total


def h_eval(lam: float, a: int, a1: int) -> float:
    """Quadratic factor ``lam^2 + (a+1) lam + a (1 - a1)`` of the
    join-family characteristic polynomial."""
    return lam * lam + (a + 1.0) * lam + a * (1.0 - a1)


def f0_largest_root(b_parts, a: int, a1: int, tol: float = DEFAULT_ROOT_TOL,
                    scan_step: float = 0.05) -> float:
    """Largest root of :func:`f0_eval`, found independently of the
    quotient route.

    Scans [a1, n] on a fixed grid (the root is below n-1, and f0 tends to
    -1 at infinity), keeps the last sign change, and bisects inside it.
    Requires f0(a1) > 0, which holds on the parameter ranges this family
    is used with.
    """
    b_parts = _as_parts(b_parts)
    if f0_eval(float(a1), b_parts, a, a1) <= 0.0:
        raise DomainError("f0(a1) <= 0; largest-root scan needs f0(a1) > 0")
    upper = float(b_parts.n + a + a1)
    steps = max(2, int(math.ceil((upper - a1) / scan_step)))
    last_pos = float(a1)
    last_bracket = None
    prev_x, prev_sign = float(a1), True
    for i in range(1, steps + 1):
        x = a1 + (upper - a1) * i / steps
        sign = f0_eval(x, b_parts, a, a1) > 0.0
        if prev_sign and not sign:
            last_bracket = (prev_x, x)
        prev_x, prev_sign = x, sign
    if last_bracket is None or prev_sign:
        raise NumericalError("no trailing sign change located for f0")
    lo, hi = last_bracket
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f0_eval(mid, b_parts, a, a1) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)
