"""Recognition of design graphs.

A design graph with parameters ``(m, d, c)`` is a connected, d-regular
bipartite graph on ``2m`` vertices. Any two distinct vertices on the same
side have exactly ``c >= 1`` common neighbours, and ``K_{m,m}`` is excluded.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, NotBipartiteError, bipartition, is_connected


@dataclass(frozen=True)
class DesignParams:
    m: int
    d: int
    c: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.m, self.d, self.c)


class NotDesignGraph(ValueError):
    """Raised by :func:`check_design`; ``reason`` is a stable short code."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail


# checked in this order; the first failure is reported
DISCONNECTED = "disconnected"
NOT_BIPARTITE = "not bipartite"
UNEQUAL_PARTS = "unequal parts"
IRREGULAR = "irregular"
COMMON_NEIGHBORS = "non-constant or zero common-neighbour count"
COMPLETE_BIPARTITE = "complete bipartite excluded"


def param_identity(p: DesignParams) -> bool:
    """Double-counting identity ``c(m-1) == d(d-1)``."""
    return p.c * (p.m - 1) == p.d * (p.d - 1)


def check_design(g: Graph) -> DesignParams:
    if not is_connected(g):
        raise NotDesignGraph(DISCONNECTED)
    try:
        bip = bipartition(g)
    except NotBipartiteError as exc:
        raise NotDesignGraph(NOT_BIPARTITE, str(exc)) from None
    m = len(bip.part_a)
    if len(bip.part_b) != m:
        raise NotDesignGraph(UNEQUAL_PARTS, f"{m} vs {len(bip.part_b)}")
    degrees = set(g.degrees)
    if len(degrees) != 1:
        raise NotDesignGraph(IRREGULAR, f"degrees {sorted(degrees)}")
    d = degrees.pop()

    # common neighbours of same-side pairs: B B^T for A-side, B^T B for B-side
    index_b = {v: j for j, v in enumerate(bip.part_b)}
    bi = np.zeros((m, m), dtype=np.int64)
    for i, u in enumerate(bip.part_a):
        bi[i, [index_b[v] for v in g.adj[u]]] = 1
    counts = set()
    for gram in (bi @ bi.T, bi.T @ bi):
        off = gram[~np.eye(m, dtype=bool)]
        counts.update(np.unique(off).tolist())
    if m > 1:
        if len(counts) != 1 or 0 in counts:
            raise NotDesignGraph(COMMON_NEIGHBORS, f"counts {sorted(counts)}")
        c = counts.pop()
    else:
        c = 0
    if d == m:
        raise NotDesignGraph(COMPLETE_BIPARTITE, f"K_{{{m},{m}}}")
    params = DesignParams(m, d, c)
    assert param_identity(params), f"double counting violated by {params}"
    return params
