"""Katz centrality (matrix form) and the component-scaled variant used in payoffs.

The walk-counting series sum_{k>=1} alpha^k (A^k)^T 1 converges exactly when
alpha is below the reciprocal spectral radius, in which case it equals
(I - alpha A^T)^{-1} 1 - 1.  We compute that closed form with one dense
linear solve.  The scaled variant divides each vertex's score by the total
over its connected component, so scores act like a probability mass per
component; isolates are assigned 1 by convention.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from netgame.graph import ComponentLabeling, Graph, spectral_radius

#: relative margin kept between alpha and the reciprocal spectral radius,
#: so solves near the convergence boundary never go near-singular
EPS_GUARD = 1e-9


class AlphaGuardError(ValueError):
    """alpha is invalid for this graph (series would diverge or be near-singular)."""


@dataclass(frozen=True)
class CentralityReport:
    """Raw and component-scaled Katz scores for one graph at one alpha.

    raw[v-1] is the plain Katz score; scaled[v-1] sums to 1 over every
    non-singleton component and equals 1 exactly for isolates.
    """

    raw: np.ndarray
    scaled: np.ndarray
    components: ComponentLabeling
    alpha: float

    @property
    def n(self) -> int:
        return int(self.raw.shape[0])

    def raw_of(self, i: int) -> float:
        return float(self.raw[i - 1])

    def scaled_of(self, i: int) -> float:
        return float(self.scaled[i - 1])


def alpha_guard(g: Graph, alpha: float) -> bool:
    """True iff alpha * spectral_radius(g) < 1 - EPS_GUARD.

    alpha itself must lie in (0,1); violating that is a caller bug and raises.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0,1), got {alpha}")
    return alpha * spectral_radius(g) < 1.0 - EPS_GUARD


def raw_katz(g: Graph, alpha: float) -> np.ndarray:
    """Katz centrality vector via one linear solve of (I - alpha A^T) y = 1.

    Returns y - 1, i.e. the series total excluding the k=0 term.  A^T is
    spelled out even though A is symmetric here, so the code stays correct
    if a directed graph type is ever added.
    """
    if not alpha_guard(g, alpha):
        raise AlphaGuardError(
            f"alpha={alpha} too large for this graph "
            f"(spectral radius {spectral_radius(g):.6g})")
    a_t = g.adjacency_matrix().T
    m = np.eye(g.n) - alpha * a_t
    y = scipy.linalg.solve(m, np.ones(g.n))
    return y - 1.0


def scaled_component_katz(g: Graph, alpha: float) -> CentralityReport:
    """Raw Katz plus the per-component normalized scores.

    Every non-singleton component has a strictly positive raw total under the
    alpha guard (a connected pair already contributes positive walks), so the
    normalization is always well defined; singletons get scaled = 1.
    """
    raw = raw_katz(g, alpha)
    comps = g.components()
    scaled = np.ones(g.n)
    for cid, size in comps.sizes.items():
        if size == 1:
            continue
        members = np.flatnonzero(comps.labels == cid)
        total = float(raw[members].sum())
        if total <= 0.0:
            raise AssertionError(
                f"non-singleton component {cid} has raw-Katz total {total}; "
                "impossible under the alpha guard")
        scaled[members] = raw[members] / total
    return CentralityReport(raw=raw, scaled=scaled, components=comps, alpha=alpha)
