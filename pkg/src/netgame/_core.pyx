# cython: language_level=3
"""Compiled engine for the hot dynamics kernels.

Same contract as netgame._core_py.Engine: cached per-vertex state for the
current graph, hypothetical toggle evaluation via single-component solves,
exhaustive lexicographic stability scan.  Components are collected in
ascending vertex order so repeated solves of an unchanged component are
bitwise reproducible.  All scratch buffers are preallocated; the only
allocations on the hot path are the small Python objects returned to the
caller.
"""
import numpy as np

from scipy.linalg.cython_lapack cimport dgesv

BACKEND_NAME = "cython"


cdef class Engine:
    """Incremental payoff evaluator for one game on one mutable graph.

    Vertex arguments are 0-based.  Not thread-safe; each simulation owns
    its engine.
    """

    cdef readonly int n
    cdef readonly double alpha
    cdef double[::1] rewards
    cdef double[::1] costs
    cdef unsigned char[:, ::1] adj
    cdef long long[::1] deg
    cdef int[::1] labels
    cdef long long[::1] csize
    cdef double[::1] raw
    cdef double[::1] scaled
    cdef double[::1] payoff
    # scratch (sized n or n*n, reused across calls)
    cdef double[::1] mat
    cdef double[::1] rhs
    cdef int[::1] ipiv
    cdef int[::1] members
    cdef int[::1] members2
    cdef int[::1] queue
    cdef unsigned char[::1] visited
    cdef double[::1] vals
    cdef double[::1] vals2
    # ndarray owners of the state buffers, for cheap copies back to Python
    cdef object _adj_a, _deg_a, _labels_a, _csize_a, _raw_a, _scaled_a, _payoff_a

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
        self._adj_a = adj.copy()
        self._deg_a = adj.sum(axis=1).astype(np.int64)
        self._labels_a = np.zeros(n, dtype=np.int32)
        self._csize_a = np.zeros(n, dtype=np.int64)
        self._raw_a = np.zeros(n)
        self._scaled_a = np.zeros(n)
        self._payoff_a = np.zeros(n)
        self.rewards = rewards.copy()
        self.costs = costs.copy()
        self.adj = self._adj_a
        self.deg = self._deg_a
        self.labels = self._labels_a
        self.csize = self._csize_a
        self.raw = self._raw_a
        self.scaled = self._scaled_a
        self.payoff = self._payoff_a
        self.mat = np.zeros(max(1, n * n))
        self.rhs = np.zeros(max(1, n))
        self.ipiv = np.zeros(max(1, n), dtype=np.int32)
        self.members = np.zeros(max(1, n), dtype=np.int32)
        self.members2 = np.zeros(max(1, n), dtype=np.int32)
        self.queue = np.zeros(max(1, n), dtype=np.int32)
        self.visited = np.zeros(max(1, n), dtype=np.uint8)
        self.vals = np.zeros(max(1, n))
        self.vals2 = np.zeros(max(1, n))
        self._rebuild_all()

    # -- cached-state accessors (copies) -----------------------------------

    def adjacency(self):
        return self._adj_a.copy()

    def payoffs(self):
        return self._payoff_a.copy()

    def raw_values(self):
        return self._raw_a.copy()

    def scaled_values(self):
        return self._scaled_a.copy()

    def component_labels(self):
        return self._labels_a.copy()

    def component_sizes(self):
        return self._csize_a.copy()

    def has_edge(self, int i, int j):
        return bool(self.adj[i, j])

    def degree_of(self, int i):
        return int(self.deg[i])

    def payoff_of(self, int i):
        return float(self.payoff[i])

    # -- internals ----------------------------------------------------------

    cdef int _component(self, int start, int[::1] out):
        """Collect start's component ascending into out; returns its size.

        Uses (and fully clears) the shared visited/queue scratch."""
        cdef int head = 0, tail = 1, m = 0, v, u
        cdef int n = self.n
        self.visited[start] = 1
        self.queue[0] = start
        while head < tail:
            v = self.queue[head]
            head += 1
            for u in range(n):
                if self.adj[v, u] != 0 and self.visited[u] == 0:
                    self.visited[u] = 1
                    self.queue[tail] = u
                    tail += 1
        for v in range(n):
            if self.visited[v] != 0:
                out[m] = v
                m += 1
                self.visited[v] = 0
        return m

    cdef int _find(self, int[::1] members, int m, int v):
        """Binary search for v in ascending members[0:m]; -1 if absent."""
        cdef int lo = 0, hi = m - 1, mid
        while lo <= hi:
            mid = (lo + hi) >> 1
            if members[mid] == v:
                return mid
            if members[mid] < v:
                lo = mid + 1
            else:
                hi = mid - 1
        return -1

    cdef int _solve_members(self, int[::1] members, int m, double[::1] vals) except -1:
        """vals[0:m] = raw Katz scores of one component (dgesv solve)."""
        cdef int a, b, info = 0, one = 1
        cdef double alpha = self.alpha
        if m == 1:
            vals[0] = 0.0
            return 0
        # column-major m*m block: mat[a + b*m] = I[a,b] - alpha * A[b,a]
        for b in range(m):
            for a in range(m):
                self.mat[a + b * m] = -alpha * <double> self.adj[members[b], members[a]]
            self.mat[b + b * m] += 1.0
            self.rhs[b] = 1.0
        dgesv(&m, &one, &self.mat[0], &m, &self.ipiv[0], &self.rhs[0], &m, &info)
        if info != 0:
            raise RuntimeError(f"linear solve failed (dgesv info={info})")
        for a in range(m):
            vals[a] = self.rhs[a] - 1.0
        return 0

    cdef int _refresh_component(self, int[::1] members, int m) except -1:
        cdef int a, v
        cdef int root = members[0]
        cdef double total = 0.0, sc
        self._solve_members(members, m, self.vals)
        for a in range(m):
            total += self.vals[a]
        for a in range(m):
            v = members[a]
            self.labels[v] = root
            self.csize[v] = m
            self.raw[v] = self.vals[a]
            sc = 1.0 if m == 1 else self.vals[a] / total
            self.scaled[v] = sc
            self.payoff[v] = self.rewards[v] * (m - 1) * sc - self.costs[v] * self.deg[v]
        return 0

    cdef int _rebuild_all(self) except -1:
        cdef int s, m
        cdef unsigned char[::1] seen = np.zeros(max(1, self.n), dtype=np.uint8)
        cdef int a
        for s in range(self.n):
            if seen[s] != 0:
                continue
            m = self._component(s, self.members)
            self._refresh_component(self.members, m)
            for a in range(m):
                seen[self.members[a]] = 1
        return 0

    cdef double _vertex_payoff(self, int v, int[::1] members, int m,
                               double[::1] vals):
        """Payoff of v given its (ascending) component members and raw scores."""
        cdef double total = 0.0, sc
        cdef int a, pos
        if m == 1:
            sc = 1.0
        else:
            for a in range(m):
                total += vals[a]
            pos = self._find(members, m, v)
            sc = vals[pos] / total
        return self.rewards[v] * (m - 1) * sc - self.costs[v] * self.deg[v]

    cdef (double, double) _pair_deltas_c(self, int i, int j) except *:
        cdef bint add = self.adj[i, j] == 0
        cdef int d = 1 if add else -1
        cdef unsigned char val = 1 if add else 0
        cdef double pi_i, pi_j
        cdef int m, m2
        self.adj[i, j] = val
        self.adj[j, i] = val
        self.deg[i] += d
        self.deg[j] += d
        try:
            m = self._component(i, self.members)
            self._solve_members(self.members, m, self.vals)
            pi_i = self._vertex_payoff(i, self.members, m, self.vals)
            if self._find(self.members, m, j) >= 0:
                pi_j = self._vertex_payoff(j, self.members, m, self.vals)
            else:
                m2 = self._component(j, self.members2)
                self._solve_members(self.members2, m2, self.vals2)
                pi_j = self._vertex_payoff(j, self.members2, m2, self.vals2)
        finally:
            self.adj[i, j] = 1 - val
            self.adj[j, i] = 1 - val
            self.deg[i] -= d
            self.deg[j] -= d
        return (pi_i - self.payoff[i], pi_j - self.payoff[j])

    # -- the hot kernels ------------------------------------------------------

    def pair_deltas(self, int i, int j):
        """Marginal payoff deltas of toggling edge (i,j): add if absent,
        delete if present.  The graph is left unchanged."""
        cdef double di, dj
        di, dj = self._pair_deltas_c(i, j)
        return (di, dj)

    def apply_toggle(self, int i, int j):
        """Commit the edge toggle and refresh the affected component caches."""
        cdef bint add = self.adj[i, j] == 0
        cdef int d = 1 if add else -1
        cdef unsigned char val = 1 if add else 0
        cdef int m
        self.adj[i, j] = val
        self.adj[j, i] = val
        self.deg[i] += d
        self.deg[j] += d
        m = self._component(i, self.members)
        self._refresh_component(self.members, m)
        if self._find(self.members, m, j) < 0:
            m = self._component(j, self.members)
            self._refresh_component(self.members, m)

    def stability_scan(self):
        """Exhaustive pairwise check in lexicographic pair order.

        Returns (stable, i, j, action, delta_i, delta_j) with action 0 for a
        profitable bilateral add, 1 for a profitable unilateral delete;
        (True, -1, -1, -1, 0.0, 0.0) when no profitable move exists.
        """
        cdef int i, j
        cdef bint present
        cdef double di, dj
        for i in range(self.n - 1):
            for j in range(i + 1, self.n):
                present = self.adj[i, j] != 0
                di, dj = self._pair_deltas_c(i, j)
                if present:
                    if di > 0.0 or dj > 0.0:
                        return (False, i, j, 1, di, dj)
                else:
                    if di > 0.0 and dj > 0.0:
                        return (False, i, j, 0, di, dj)
        return (True, -1, -1, -1, 0.0, 0.0)
