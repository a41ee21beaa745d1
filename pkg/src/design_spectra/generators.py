"""Constructors for the design-graph families and their building blocks.

Bipartite families list one side first (indices ``0..m-1``) and the
other side after.  Partition constructions rely on that ordering.
"""

from __future__ import annotations

import itertools

import numpy as np

from .field import Field, field_of_order, incidence_matrix, projective_points
from .graph import Graph, from_edge_list


def bipartite_kneser(n: int) -> Graph:
    """H(n, 1): singletons vs (n-1)-subsets of {1..n}, joined by containment."""
    if n < 3:
        raise ValueError(f"H(n,1) needs n >= 3, got {n}")
    singles = [(i,) for i in range(1, n + 1)]
    big = list(itertools.combinations(range(1, n + 1), n - 1))
    edges = [(i, n + j) for i, (x,) in enumerate(singles)
             for j, s in enumerate(big) if x in s]
    labels = ["{" + ",".join(map(str, s)) + "}" for s in singles + big]
    return from_edge_list(2 * n, edges, labels)


def _as_field(q) -> Field:
    if isinstance(q, Field):
        return q
    if isinstance(q, tuple):
        return Field(*q)
    return field_of_order(q)


def subspace_graph(q, n: int) -> Graph:
    """S(q, n, 1): points vs hyperplanes of GF(q)^n, joined by incidence.

    ``q`` may be the field order, a ``(p, k)`` pair or a :class:`Field`.
    Hyperplanes are given by dual coordinates: point ``u`` lies on
    hyperplane ``h`` iff ``<u, h> = 0``.
    """
    f = _as_field(q)
    if n < 3:
        raise ValueError(f"S(q,n,1) needs n >= 3, got {n}")
    pts = projective_points(f, n)
    m = len(pts)
    inc = incidence_matrix(f, pts, pts)
    rows, cols = np.nonzero(inc)
    edges = zip(rows.tolist(), (cols + m).tolist())
    coords = ["(" + ",".join(map(str, v)) + ")" for v in pts]
    labels = [f"pt{c}" for c in coords] + [f"hp{c}" for c in coords]
    return from_edge_list(2 * m, edges, labels)


def double_cover(g: Graph) -> Graph:
    """Bipartite double cover: vertex ``(v, a)`` has index ``a * n + v``."""
    n = g.n
    edges = []
    for u, v in g.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    labels = None
    if g.labels is not None:
        labels = [f"{lab}/0" for lab in g.labels] + [f"{lab}/1" for lab in g.labels]
    return from_edge_list(2 * n, edges, labels)


def rook_graph(s: int) -> Graph:
    """The s x s rook's graph; cell ``(r, c)`` has index ``r * s + c``."""
    if s < 2:
        raise ValueError(f"rook graph needs s >= 2, got {s}")
    edges = []
    for r, c in itertools.product(range(s), repeat=2):
        v = r * s + c
        edges.extend((v, r * s + c2) for c2 in range(c + 1, s))
        edges.extend((v, r2 * s + c) for r2 in range(r + 1, s))
    return from_edge_list(s * s, edges, [f"({r},{c})" for r, c in itertools.product(range(s), repeat=2)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])
