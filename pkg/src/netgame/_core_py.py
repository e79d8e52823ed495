"""Pure-Python (numpy/LAPACK) engine for the hot dynamics kernels.

Mirrors the compiled extension in netgame._core: same state, same member
ordering (components are kept sorted ascending so repeated solves of the
same component are bitwise reproducible), same accept/scan semantics.  The
compiled engine is preferred at import time by netgame.core; this module is
the fallback and the reference for backend-parity tests.
"""
from __future__ import annotations

import numpy as np
from scipy.linalg import lu_factor, lu_solve

BACKEND_NAME = "pure-python"


class Engine:
    """Incremental payoff evaluator for one game on one mutable graph.

    Holds the adjacency matrix plus cached per-vertex component labels,
    sizes, raw and scaled centrality, degrees and payoffs for the current
    graph.  Vertex arguments are 0-based.  Not thread-safe; each simulation
    owns its engine.
    """

    def __init__(self, adj, alpha, rewards, costs):
        adj = np.ascontiguousarray(adj, dtype=np.uint8)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be square")
        n = adj.shape[0]
        if np.any(adj.diagonal()):
            raise ValueError("adjacency has self-loops")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency is not symmetric")
        rewards = np.ascontiguousarray(rewards, dtype=np.float64)
        costs = np.ascontiguousarray(costs, dtype=np.float64)
        if rewards.shape != (n,) or costs.shape != (n,):
            raise ValueError("rewards and costs must have one entry per vertex")
        self.n = n
        self.alpha = float(alpha)
        self.rewards = rewards.copy()
        self.costs = costs.copy()
        self.adj = adj.copy()
        self.deg = self.adj.sum(axis=1).astype(np.int64)
        self.labels = np.zeros(n, dtype=np.int32)
        self.csize = np.zeros(n, dtype=np.int64)
        self.raw = np.zeros(n)
        self.scaled = np.zeros(n)
        self.payoff = np.zeros(n)
        self._rebuild_all()

    # -- cached-state accessors (copies) -----------------------------------

    def adjacency(self):
        return self.adj.copy()

    def payoffs(self):
        return self.payoff.copy()

    def raw_values(self):
        return self.raw.copy()

    def scaled_values(self):
        return self.scaled.copy()

    def component_labels(self):
        return self.labels.copy()

    def component_sizes(self):
        return self.csize.copy()

    def has_edge(self, i, j):
        return bool(self.adj[i, j])

    def degree_of(self, i):
        return int(self.deg[i])

    def payoff_of(self, i):
        return float(self.payoff[i])

    # -- internals ----------------------------------------------------------

    def _component(self, start):
        """Members of start's component, ascending (flatnonzero order)."""
        adj = self.adj
        mask = np.zeros(self.n, dtype=bool)
        mask[start] = True
        frontier = np.array([start])
        while frontier.size:
            nbrs = (adj[frontier] != 0).any(axis=0)
            new = nbrs & ~mask
            mask |= new
            frontier = np.flatnonzero(new)
        return np.flatnonzero(mask)

    def _solve_members(self, members):
        """Raw Katz scores of one component (induced-submatrix solve)."""
        m = members.size
        if m == 1:
            return np.zeros(1)
        sub = self.adj[np.ix_(members, members)].astype(np.float64)
        mat = np.eye(m) - self.alpha * sub.T
        y = lu_solve(lu_factor(mat, check_finite=False), np.ones(m),
                     check_finite=False)
        return y - 1.0

    def _refresh_component(self, members):
        m = members.size
        vals = self._solve_members(members)
        self.labels[members] = members[0]
        self.csize[members] = m
        self.raw[members] = vals
        if m == 1:
            self.scaled[members] = 1.0
        else:
            self.scaled[members] = vals / vals.sum()
        self.payoff[members] = (self.rewards[members] * (m - 1) * self.scaled[members]
                                - self.costs[members] * self.deg[members])

    def _rebuild_all(self):
        seen = np.zeros(self.n, dtype=bool)
        for s in range(self.n):
            if seen[s]:
                continue
            members = self._component(s)
            self._refresh_component(members)
            seen[members] = True

    def _vertex_payoff_in(self, v, members, vals):
        """Payoff of v given its (sorted) component members and raw scores."""
        m = members.size
        if m == 1:
            scaled = 1.0
        else:
            pos = int(np.searchsorted(members, v))
            scaled = float(vals[pos]) / float(vals.sum())
        return self.rewards[v] * (m - 1) * scaled - self.costs[v] * self.deg[v]

    def _pair_payoffs_current(self, i, j):
        """Payoffs of i and j on the current (possibly toggled) adjacency."""
        members = self._component(i)
        vals = self._solve_members(members)
        pi_i = self._vertex_payoff_in(i, members, vals)
        pos = int(np.searchsorted(members, j))
        if pos < members.size and members[pos] == j:
            pi_j = self._vertex_payoff_in(j, members, vals)
        else:
            members_j = self._component(j)
            vals_j = self._solve_members(members_j)
            pi_j = self._vertex_payoff_in(j, members_j, vals_j)
        return pi_i, pi_j

    # -- the hot kernels ------------------------------------------------------

    def pair_deltas(self, i, j):
        """Marginal payoff deltas of toggling edge (i,j): add if absent,
        delete if present.  The graph is left unchanged."""
        add = self.adj[i, j] == 0
        d = 1 if add else -1
        val = 1 if add else 0
        self.adj[i, j] = self.adj[j, i] = val
        self.deg[i] += d
        self.deg[j] += d
        try:
            pi_i, pi_j = self._pair_payoffs_current(i, j)
        finally:
            self.adj[i, j] = self.adj[j, i] = 0 if add else 1
            self.deg[i] -= d
            self.deg[j] -= d
        return (float(pi_i - self.payoff[i]), float(pi_j - self.payoff[j]))

    def apply_toggle(self, i, j):
        """Commit the edge toggle and refresh the affected component caches."""
        add = self.adj[i, j] == 0
        d = 1 if add else -1
        self.adj[i, j] = self.adj[j, i] = 1 if add else 0
        self.deg[i] += d
        self.deg[j] += d
        members = self._component(i)
        self._refresh_component(members)
        pos = int(np.searchsorted(members, j))
        if pos >= members.size or members[pos] != j:
            self._refresh_component(self._component(j))

    def stability_scan(self):
        """Exhaustive pairwise check in lexicographic pair order.

        Returns (stable, i, j, action, delta_i, delta_j) with action 0 for a
        profitable bilateral add, 1 for a profitable unilateral delete;
        (True, -1, -1, -1, 0.0, 0.0) when no profitable move exists.
        """
        n = self.n
        for i in range(n - 1):
            for j in range(i + 1, n):
                present = self.adj[i, j] != 0
                di, dj = self.pair_deltas(i, j)
                if present:
                    if di > 0.0 or dj > 0.0:
                        return (False, i, j, 1, di, dj)
                else:
                    if di > 0.0 and dj > 0.0:
                        return (False, i, j, 0, di, dj)
        return (True, -1, -1, -1, 0.0, 0.0)
