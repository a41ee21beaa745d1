"""Distance-equitable partitions and their quotient matrices.

A partition is distance-equitable when, for every pair of cells ``(i, j)``,
the sum of distances from a vertex of cell ``i`` to all of cell ``j`` is the
same for every vertex of cell ``i``.  Those constant sums form the quotient
matrix, whose eigenvalues are distance eigenvalues of the whole graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Bipartition, Graph
from .spectra import Value


class PartitionError(ValueError):
    pass


class NotEquitableError(PartitionError):
    pass


@dataclass(frozen=True)
class Partition:
    cells: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, cells: Iterable[Iterable[int]]) -> Partition:
        return cls(tuple(tuple(sorted(c)) for c in cells))

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]

    def validate(self, n: int) -> None:
        seen = np.zeros(n, dtype=np.int64)
        for cell in self.cells:
            if not cell:
                raise PartitionError("empty cell")
            for v in cell:
                if not 0 <= v < n:
                    raise PartitionError(f"vertex {v} outside [0, {n})")
                seen[v] += 1
        if (seen > 1).any():
            raise PartitionError(f"vertex {int(np.argmax(seen > 1))} lies in two cells")
        if (seen == 0).any():
            raise PartitionError(f"vertex {int(np.argmin(seen))} lies in no cell")

    def indicator(self, n: int) -> np.ndarray:
        """``n x k`` 0/1 matrix; column j marks cell j."""
        ind = np.zeros((n, len(self.cells)), dtype=np.int64)
        for j, cell in enumerate(self.cells):
            ind[list(cell), j] = 1
        return ind

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(c) for c in self.cells}


@dataclass(frozen=True)
class QuotientMatrix:
    q: tuple[tuple[int, ...], ...]
    partition: Partition

    @property
    def k(self) -> int:
        return len(self.q)

    def as_list(self) -> list[list[int]]:
        return [list(r) for r in self.q]

    def as_array(self) -> np.ndarray:
        return np.array(self.q, dtype=np.int64)


def _cell_sums(dm: np.ndarray, p: Partition) -> np.ndarray:
    n = dm.shape[0]
    p.validate(n)
    return np.asarray(dm, dtype=np.int64) @ p.indicator(n)


def is_distance_equitable(dm: np.ndarray, p: Partition) -> bool:
    sums = _cell_sums(dm, p)
    return all((sums[list(cell)] == sums[cell[0]]).all() for cell in p.cells)


def quotient_matrix(dm: np.ndarray, p: Partition) -> QuotientMatrix:
    """Cell-to-cell distance sums, checked for every member of every cell."""
    sums = _cell_sums(dm, p)
    rows = []
    for i, cell in enumerate(p.cells):
        rep = cell[0]
        block = sums[list(cell)]
        bad = np.argwhere(block != sums[rep])
        if bad.size:
            r, j = map(int, bad[0])
            v = cell[r]
            raise NotEquitableError(
                f"cells ({i}, {j}): vertex {rep} has distance sum {sums[rep, j]}, "
                f"vertex {v} has {sums[v, j]}")
        rows.append(tuple(int(x) for x in sums[rep]))
    return QuotientMatrix(tuple(rows), p)


def part_partition(bip: Bipartition) -> Partition:
    return Partition.of([bip.part_a, bip.part_b])


def pi2_partition(g: Graph, bip: Bipartition, v: int | None = None) -> Partition:
    """Cells ``{v}``, ``part_a - {v}``, ``N(v)``, ``part_b - N(v)``, in that order.

    ``v`` defaults to the smallest vertex of ``part_a``.
    """
    if v is None:
        v = bip.part_a[0]
    if v not in bip.part_a:
        raise PartitionError(f"base vertex {v} is not in part A")
    nbrs = set(g.adj[v])
    cells = [(v,), [u for u in bip.part_a if u != v], sorted(nbrs),
             [u for u in bip.part_b if u not in nbrs]]
    if any(not c for c in cells):
        raise PartitionError("degenerate pi2 partition: a cell is empty")
    return Partition.of(cells)


def coarsest_equitable_refinement(dm: np.ndarray, seed: Partition) -> Partition:
    """Split cells by their distance-sum vectors to every current cell until stable.

    Any equitable refinement of ``seed`` refines every iterate, so the fixed
    point is the coarsest one.  Cells are kept sorted by smallest vertex.
    """
    n = dm.shape[0]
    seed.validate(n)
    cells = sorted((tuple(sorted(c)) for c in seed.cells), key=lambda c: c[0])
    d = np.asarray(dm, dtype=np.int64)
    while True:
        sums = d @ Partition(tuple(cells)).indicator(n)
        new_cells = []
        for cell in cells:
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                groups.setdefault(tuple(sums[v].tolist()), []).append(v)
            new_cells.extend(tuple(groups[key]) for key in sorted(groups))
        new_cells.sort(key=lambda c: c[0])
        if len(new_cells) == len(cells):
            return Partition(tuple(new_cells))
        cells = new_cells


def cell_sum_check(dm: np.ndarray, p: Partition, eigenpairs, quotient_spectrum: Sequence[Value],
                   tol: float = 1e-8) -> bool:
    """Eigenvectors for eigenvalues outside the quotient spectrum sum to zero on every cell.

    ``eigenpairs`` is ``(values, vectors)`` with ``vectors[:, i]`` belonging
    to ``values[i]``; a :class:`~design_spectra.spectra.Spectrum` also works.
    """
    values, vectors = (eigenpairs.values, eigenpairs.vectors) if hasattr(
        eigenpairs, "vectors") else eigenpairs
    values = np.asarray([float(x) for x in values])
    vectors = np.asarray(vectors, dtype=np.float64)
    n = dm.shape[0]
    qs = np.asarray([float(x) for x in quotient_spectrum])
    ind = p.indicator(n).astype(np.float64)
    sums = ind.T @ vectors
    norms = np.linalg.norm(vectors, axis=0)
    for i, lam in enumerate(values):
        if qs.size and np.min(np.abs(qs - lam)) <= tol:
            continue
        if np.abs(sums[:, i]).max() > tol * norms[i]:
            return False
    return True
