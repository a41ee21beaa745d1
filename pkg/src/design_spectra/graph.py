"""Simple undirected graphs, geodesic distance matrices and metric invariants.

Vertices are the integers ``0..n-1``.  A :class:`Graph` is immutable once
built; every constructor goes through :func:`from_edge_list`, which
symmetrizes and sorts the adjacency lists.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp


class GraphError(ValueError):
    """Base class for structural problems with an input graph."""


class DisconnectedGraphError(GraphError):
    pass


class NotBipartiteError(GraphError):
    pass


class AcyclicGraphError(GraphError):
    pass


class EdgeListParseError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("one label per vertex required")

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, nbrs in enumerate(self.adj):
            a[u, list(nbrs)] = 1
        return a

    def sparse_adjacency(self) -> sp.csr_matrix:
        rows = np.repeat(np.arange(self.n), self.degrees)
        cols = np.fromiter((v for nbrs in self.adj for v in nbrs), dtype=np.int64,
                           count=len(rows))
        data = np.ones(len(rows), dtype=np.float64)
        return sp.csr_matrix((data, (rows, cols)), shape=(self.n, self.n))


def from_edge_list(n: int, edges: Iterable[Sequence[int]],
                   labels: Sequence[str] | None = None) -> Graph:
    """Build a graph on ``n`` vertices; duplicate and reversed edges collapse."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an index outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs),
                 tuple(labels) if labels is not None else None)


def is_connected(g: Graph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == g.n


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs geodesic distances as a dense ``int64`` array.

    Breadth-first search is run from every source at once: row ``s`` of the
    frontier matrix is the BFS layer of source ``s``, and one sparse product
    advances all layers together.  Raises :class:`DisconnectedGraphError`
    if some pair is unreachable.
    """
    n = g.n
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    a = g.sparse_adjacency()
    frontier = np.eye(n, dtype=np.float64)
    level = 0
    while True:
        level += 1
        # symmetric adjacency: (A @ F^T)^T == F @ A
        reached = np.asarray((a @ frontier.T).T) > 0
        reached &= dist < 0
        if not reached.any():
            break
        dist[reached] = level
        frontier = reached.astype(np.float64)
    if (dist < 0).any():
        u, v = map(int, np.argwhere(dist < 0)[0])
        raise DisconnectedGraphError(f"graph is disconnected: no path from {u} to {v}")
    dist.setflags(write=False)
    return dist


def diameter(dm: np.ndarray) -> int:
    return int(dm.max()) if dm.size else 0


@dataclass(frozen=True)
class Bipartition:
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]


def bipartition(g: Graph) -> Bipartition:
    """Two-colour a connected graph by BFS layers, vertex 0 in ``part_a``."""
    color = [-1] * g.n
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if color[v] < 0:
                color[v] = 1 - color[u]
                queue.append(v)
            elif color[v] == color[u]:
                raise NotBipartiteError(f"odd cycle through edge ({u}, {v})")
    if -1 in color:
        raise DisconnectedGraphError("graph is disconnected")
    return Bipartition(tuple(v for v in range(g.n) if color[v] == 0),
                       tuple(v for v in range(g.n) if color[v] == 1))


def girth(g: Graph) -> int:
    """Length of a shortest cycle.

    A BFS from each vertex; the first non-tree edge ``(u, w)`` seen closes a
    cycle of length at most ``dist[u] + dist[w] + 1``, and the minimum over all
    roots is exact.  The search stops once it hits the floor (4 for bipartite
    graphs, else 3).
    """
    try:
        bipartition(g)
        floor = 4
    except GraphError:
        floor = 3
    best = None
    for root in range(g.n):
        if best == floor:
            break
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    if best is None:
        raise AcyclicGraphError("graph has no cycle")
    return best


# -- edge-list text format ---------------------------------------------------

def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``n e`` followed by ``e`` lines ``u v``; ``#`` starts a comment line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: not an integer pair: {raw!r}") from None
    if not rows:
        raise EdgeListParseError("empty edge list: missing 'n e' header")
    (n, e), edges = rows[0], rows[1:]
    if len(edges) != e:
        raise EdgeListParseError(f"header announces {e} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
