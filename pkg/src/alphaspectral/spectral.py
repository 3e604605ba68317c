"""The matrix alpha*D + (1-alpha)*A and its certified largest eigenvalue.

All solves go through a full symmetric eigendecomposition (LAPACK's
Householder tridiagonalization with implicit-shift iteration via
numpy.linalg.eigh); sizes are capped at 64 so there is no need for an
iterative path. Disconnected graphs are solved per component and the
returned eigenvector is the Perron vector of a maximizing component
embedded in zeros, which keeps the result deterministic even when the top
eigenvalue is shared by several components: ties within 1e-10 go to the
component with the smaller canonical form.

Contracts: the eigenvector is entrywise nonnegative with unit norm within
1e-12, and the max-norm residual of the eigenpair is at most 1e-10; a solve
that cannot meet them raises instead of returning silently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, components, induced_subgraph

RESIDUAL_TOL = 1e-10
COMPONENT_TIE_TOL = 1e-10
_CLAMP = 1e-12


class ConvergenceError(RuntimeError):
    """The eigensolver failed or its certification contract was not met."""


def check_alpha(alpha: float) -> float:
    a = float(alpha)
    if not 0.0 <= a < 1.0:
        raise ValueError(f"alpha must satisfy 0 <= alpha < 1, got {alpha!r}")
    return a


@dataclass(slots=True)
class SpectralResult:
    """Largest eigenvalue of the alpha matrix with a certified eigenpair.

    min_entry and min_index locate the smallest eigenvector entry (first
    occurrence); iterations counts eigendecompositions performed.
    """

    lambda_alpha: float
    eigvec: np.ndarray
    min_entry: float
    min_index: int
    residual: float
    iterations: int


def alpha_matrix(G: Graph, alpha: float) -> np.ndarray:
    """Dense n x n matrix with alpha*deg on the diagonal, 1-alpha on edges."""
    a = check_alpha(alpha)
    n = G.n
    A = np.zeros((n, n))
    for u in range(n):
        row = G.rows[u]
        A[u, u] = a * row.bit_count()
        while row:
            v = (row & -row).bit_length() - 1
            A[u, v] = 1.0 - a
            row &= row - 1
    return A


def lambda_alpha(G: Graph, alpha: float) -> float:
    """Largest eigenvalue only (no eigenvector bookkeeping)."""
    try:
        return float(np.linalg.eigvalsh(alpha_matrix(G, alpha))[-1])
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigenvalue solve failed: {exc}") from exc


def lambda_alpha_many(graphs, alpha: float) -> np.ndarray:
    """Largest eigenvalues for a batch of same-order graphs."""
    graphs = list(graphs)
    if not graphs:
        return np.empty(0)
    n = graphs[0].n
    if any(G.n != n for G in graphs):
        raise ValueError("batched solve requires graphs of equal order")
    stack = np.zeros((len(graphs), n, n))
    for i, G in enumerate(graphs):
        stack[i] = alpha_matrix(G, alpha)
    try:
        return np.linalg.eigvalsh(stack)[:, -1]
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"batched eigenvalue solve failed: {exc}") from exc


def _solve_nonnegative(G: Graph, a: float) -> tuple[float, np.ndarray]:
    """Top eigenpair with the eigenvector coerced to the nonnegative choice."""
    try:
        w, V = np.linalg.eigh(alpha_matrix(G, a))
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigendecomposition failed: {exc}") from exc
    lam = float(w[-1])
    x = V[:, -1].copy()
    if x[int(np.argmax(np.abs(x)))] < 0:
        x = -x
    x[(x < 0) & (x > -_CLAMP)] = 0.0
    if (x < 0).any():
        raise ConvergenceError("no nonnegative top eigenvector on a connected block")
    return lam, x / np.linalg.norm(x)


def spectral_radius(G: Graph, alpha: float) -> SpectralResult:
    """Largest eigenvalue of the alpha matrix with a nonnegative unit eigenvector.

    For a disconnected graph the vector is supported on one maximizing
    component and zero elsewhere.
    """
    a = check_alpha(alpha)
    comps = components(G)
    if len(comps) == 1:
        lam, x = _solve_nonnegative(G, a)
        solves = 1
    else:
        solved = []
        for verts in comps:
            sub = induced_subgraph(G, verts)
            solved.append((sub, verts, *_solve_nonnegative(sub, a)))
        top = max(item[2] for item in solved)
        ties = [item for item in solved if item[2] >= top - COMPONENT_TIE_TOL]
        if len(ties) > 1:
            from .enumeration import canonical_form

            ties.sort(key=lambda item: (canonical_form(item[0]), item[1][0]))
        sub, verts, lam, x_sub = ties[0]
        x = np.zeros(G.n)
        x[verts] = x_sub
        solves = len(comps)
    A = alpha_matrix(G, a)
    residual = float(np.abs(A @ x - lam * x).max())
    if residual > RESIDUAL_TOL:
        raise ConvergenceError(f"residual {residual:.3e} exceeds {RESIDUAL_TOL:.0e}")
    idx = int(np.argmin(x))
    return SpectralResult(
        lambda_alpha=lam,
        eigvec=x,
        min_entry=float(x[idx]),
        min_index=idx,
        residual=residual,
        iterations=solves,
    )


def blowup_lambda(G: Graph, alpha: float, p: int) -> float:
    """p times the radius of G, which equals the radius of the p-blow-up.

    The blow-up's alpha matrix collapses onto p times G's alpha matrix
    under the vertex-class partition, so the identity is exact; the
    verifier asserts it against an eigensolve of the blown-up graph.
    """
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"blow-up factor must be a positive integer, got {p!r}")
    return p * lambda_alpha(G, alpha)
