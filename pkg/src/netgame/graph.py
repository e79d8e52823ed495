"""Undirected simple graphs on a fixed vertex set {1..n}.

Vertices are 1-based stable integer ids; the player set never shrinks.
Adjacency is stored densely (uint8), which is the right trade-off here:
every downstream centrality evaluation is a dense linear solve anyway and
n stays in the hundreds-to-thousands range.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class GraphError(ValueError):
    """Base class for graph construction / mutation errors."""


class VertexRangeError(GraphError):
    """Vertex id outside {1..n}."""


class SelfLoopError(GraphError):
    """Edge endpoints coincide."""


class EdgeExistsError(GraphError):
    """add_edge on a pair that is already linked."""


class EdgeAbsentError(GraphError):
    """remove_edge on a pair that is not linked."""


class EdgeListFormatError(GraphError):
    """Malformed edge-list file; message carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class ComponentLabeling:
    """Partition of {1..n} into connected components.

    ``labels[v-1]`` is the component id of vertex v; the id of a component is
    the smallest vertex id it contains, which makes labels canonical under
    any traversal order.  ``sizes`` maps component id to vertex count.
    """

    labels: np.ndarray
    sizes: dict[int, int]

    @property
    def n(self) -> int:
        return int(self.labels.shape[0])

    @property
    def num_components(self) -> int:
        return len(self.sizes)

    def label_of(self, i: int) -> int:
        return int(self.labels[i - 1])

    def size_of(self, i: int) -> int:
        """Size of the component containing vertex i."""
        return self.sizes[self.label_of(i)]

    def members(self, cid: int) -> list[int]:
        return [int(v) + 1 for v in np.flatnonzero(self.labels == cid)]

    def same_component(self, i: int, j: int) -> bool:
        return self.labels[i - 1] == self.labels[j - 1]


class Graph:
    """Mutable undirected simple graph, no self-loops, vertices 1..n."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int):
        n = int(n)
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        self.n = n
        self._adj = np.zeros((n, n), dtype=np.uint8)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        g = cls(n)
        for i, j in edges:
            g.add_edge(i, j)
        return g

    @classmethod
    def from_adjacency(cls, adj: np.ndarray) -> "Graph":
        adj = np.asarray(adj)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise GraphError("adjacency must be a square matrix")
        if np.any(adj.diagonal()):
            raise GraphError("adjacency has self-loops")
        if not np.array_equal(adj, adj.T):
            raise GraphError("adjacency is not symmetric")
        g = cls(adj.shape[0])
        g._adj = (adj != 0).astype(np.uint8)
        return g

    # -- vertex/pair validation ------------------------------------------

    def _check_vertex(self, i: int):
        if not 1 <= i <= self.n:
            raise VertexRangeError(f"vertex {i} out of range 1..{self.n}")

    def _check_pair(self, i: int, j: int):
        self._check_vertex(i)
        self._check_vertex(j)
        if i == j:
            raise SelfLoopError(f"self-loop ({i},{j}) not allowed")

    # -- mutation ---------------------------------------------------------

    def add_edge(self, i: int, j: int):
        self._check_pair(i, j)
        if self._adj[i - 1, j - 1]:
            raise EdgeExistsError(f"edge ({i},{j}) already present")
        self._adj[i - 1, j - 1] = 1
        self._adj[j - 1, i - 1] = 1

    def remove_edge(self, i: int, j: int):
        self._check_pair(i, j)
        if not self._adj[i - 1, j - 1]:
            raise EdgeAbsentError(f"edge ({i},{j}) absent")
        self._adj[i - 1, j - 1] = 0
        self._adj[j - 1, i - 1] = 0

    # -- queries ----------------------------------------------------------

    def has_edge(self, i: int, j: int) -> bool:
        self._check_pair(i, j)
        return bool(self._adj[i - 1, j - 1])

    def degree(self, i: int) -> int:
        self._check_vertex(i)
        return int(self._adj[i - 1].sum())

    def degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1).astype(np.int64)

    def num_edges(self) -> int:
        return int(self._adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, j) with i < j, lexicographically sorted."""
        ii, jj = np.nonzero(np.triu(self._adj, k=1))
        return [(int(a) + 1, int(b) + 1) for a, b in zip(ii, jj)]

    def neighbors(self, i: int) -> list[int]:
        self._check_vertex(i)
        return [int(v) + 1 for v in np.flatnonzero(self._adj[i - 1])]

    def adjacency_matrix(self, dtype=np.float64) -> np.ndarray:
        """Copy of the adjacency matrix."""
        return self._adj.astype(dtype)

    def copy(self) -> "Graph":
        g = Graph(self.n)
        g._adj = self._adj.copy()
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._adj, other._adj)

    def __hash__(self):
        return hash((self.n, self._adj.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.num_edges()})"

    # -- components -------------------------------------------------------

    def components(self) -> ComponentLabeling:
        n = self.n
        adj = self._adj
        labels = np.zeros(n, dtype=np.int32)
        sizes: dict[int, int] = {}
        seen = np.zeros(n, dtype=bool)
        for s in range(n):
            if seen[s]:
                continue
            mask = np.zeros(n, dtype=bool)
            mask[s] = True
            frontier = np.array([s])
            while frontier.size:
                nbrs = (adj[frontier] != 0).any(axis=0)
                new = nbrs & ~mask
                mask |= new
                frontier = np.flatnonzero(new)
            members = np.flatnonzero(mask)
            cid = s + 1  # smallest member, since s scans ascending
            labels[members] = cid
            sizes[cid] = int(members.size)
            seen[mask] = True
        return ComponentLabeling(labels=labels, sizes=sizes)


# -- canonical generators ---------------------------------------------------

def make_complete(n: int) -> Graph:
    """Complete graph K_n, every pair linked."""
    if n < 2:
        raise GraphError(f"complete graph needs n >= 2, got {n}")
    g = Graph(n)
    g._adj = np.ones((n, n), dtype=np.uint8)
    np.fill_diagonal(g._adj, 0)
    return g


def make_star(n: int) -> Graph:
    """Star S_n: vertex 1 is the hub, linked to each of 2..n; n-1 edges."""
    if n < 2:
        raise GraphError(f"star needs n >= 2, got {n}")
    g = Graph(n)
    g._adj[0, 1:] = 1
    g._adj[1:, 0] = 1
    return g


def make_nearly_complete(n: int) -> Graph:
    """K_n minus the single edge (1,2); degree sequence {n-1,..,n-2,n-2}.

    Centrality depends only on the isomorphism class, so fixing the removed
    pair loses no generality.
    """
    if n < 3:
        raise GraphError(f"nearly-complete graph needs n >= 3, got {n}")
    g = make_complete(n)
    g.remove_edge(1, 2)
    return g


# -- spectral radius ----------------------------------------------------------

def spectral_radius(g: Graph) -> float:
    """Largest eigenvalue magnitude of the adjacency matrix.

    Dense symmetric eigensolver; adjacency is symmetric so all eigenvalues
    are real and the radius is max(|lambda_min|, lambda_max).
    """
    w = np.linalg.eigvalsh(g.adjacency_matrix())
    return float(max(abs(w[0]), abs(w[-1])))


# -- edge-list text format ----------------------------------------------------
#
# Optional leading '#' comment lines, then a header `n <vertex count>`,
# then one `i j` pair per line with 1-based ids and i < j.

def write_edge_list(g: Graph, path, header_comments=()):
    lines = [f"# {c}" for c in header_comments]
    lines.append(f"n {g.n}")
    lines.extend(f"{i} {j}" for i, j in g.edges())
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_edge_list(path) -> Graph:
    """Parse the edge-list format; raises EdgeListFormatError with a line number."""
    g = None
    with open(path) as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            if g is None:
                if len(tokens) != 2 or tokens[0] != "n":
                    raise EdgeListFormatError(line_no, f"expected header 'n <count>', got {line!r}")
                try:
                    count = int(tokens[1])
                except ValueError:
                    raise EdgeListFormatError(line_no, f"vertex count {tokens[1]!r} is not an integer") from None
                if count < 1:
                    raise EdgeListFormatError(line_no, f"vertex count must be >= 1, got {count}")
                g = Graph(count)
                continue
            if len(tokens) != 2:
                raise EdgeListFormatError(line_no, f"expected 'i j', got {line!r}")
            try:
                i, j = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise EdgeListFormatError(line_no, f"non-integer endpoint in {line!r}") from None
            if i == j:
                raise EdgeListFormatError(line_no, f"self-loop ({i},{j})")
            if not (1 <= i <= g.n and 1 <= j <= g.n):
                raise EdgeListFormatError(line_no, f"endpoint out of range 1..{g.n} in ({i},{j})")
            if i >= j:
                raise EdgeListFormatError(line_no, f"endpoints must satisfy i < j, got ({i},{j})")
            if g.has_edge(i, j):
                raise EdgeListFormatError(line_no, f"duplicate edge ({i},{j})")
            g.add_edge(i, j)
    if g is None:
        raise EdgeListFormatError(0, "empty file: missing 'n <count>' header")
    return g
