"""Euclidean minimum spanning tree through perturbed edge weights.

A solution assigns every edge ``e`` a key ``x_e`` in ``[0, 1]``; Prim's
algorithm runs on the weights ``w_e * (1 + kappa * x_e)`` and the cost is
the true Euclidean length of the tree it returns. Every key vector decodes
to a spanning tree, and ``x = 0`` reproduces the exact MST.
"""

import heapq
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import pdist, squareform

from .._validation import ConfigurationError
from ..base import SearchSpace
from ._base import ProblemInstance, as_matrix, read_rows, write_rows

__all__ = ["MstInstance", "mst_decode_and_cost", "prim_mst", "random_mst_instance", "load_points", "save_points"]


@dataclass(eq=False)
class MstInstance(ProblemInstance):
    points: np.ndarray
    kappa: float = 1.0

    name = "mst"

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=float)
        if self.points.ndim != 2 or len(self.points) < 2:
            raise ConfigurationError("an MST instance needs at least two points")
        if len(np.unique(self.points, axis=0)) != len(self.points):
            raise ConfigurationError("points must be distinct")
        self.weights = squareform(pdist(self.points))
        n = len(self.points)
        # Edge e <-> pair (rows[e], cols[e]) with rows < cols, in lexicographic order.
        self.rows, self.cols = np.triu_indices(n, k=1)
        self._edge_index = np.zeros((n, n), dtype=int)
        self._edge_index[self.rows, self.cols] = np.arange(len(self.rows))
        self._edge_index[self.cols, self.rows] = np.arange(len(self.rows))

    @property
    def n_points(self):
        return len(self.points)

    @property
    def n_edges(self):
        return len(self.rows)

    @property
    def dimension(self):
        return self.n_edges

    def space(self):
        return SearchSpace.uniform(0.0, 1.0, self.dimension)

    def perturbed_weights(self, x):
        factor = 1.0 + self.kappa * np.asarray(x, dtype=float)[self._edge_index]
        return self.weights * factor

    def tree_length(self, tree):
        return float(sum(self.weights[i, j] for i, j in tree))

    def cost(self, x):
        return mst_decode_and_cost(self, x)[1]


def _dense_prim(weights):
    """O(n^2) Prim on a dense symmetric weight matrix, starting at vertex 0."""
    n = len(weights)
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    best = weights[0].copy()
    parent = np.zeros(n, dtype=int)
    tree = []
    for _ in range(n - 1):
        candidates = np.where(in_tree, np.inf, best)
        v = int(np.argmin(candidates))
        tree.append((int(parent[v]), v))
        in_tree[v] = True
        closer = weights[v] < best
        best = np.where(closer, weights[v], best)
        parent = np.where(closer, v, parent)
    return tree


def mst_decode_and_cost(instance, x):
    """``(tree, length)``: the spanning tree decoded from ``x`` and its true length."""
    tree = _dense_prim(instance.perturbed_weights(x))
    return tree, instance.tree_length(tree)


def prim_mst(instance):
    """Exact MST length by a heap-based Prim over the complete graph."""
    n = instance.n_points
    w = instance.weights
    seen = [False] * n
    heap = [(0.0, 0)]
    total = 0.0
    while heap:
        d, v = heapq.heappop(heap)
        if seen[v]:
            continue
        seen[v] = True
        total += d
        for u in range(n):
            if not seen[u]:
                heapq.heappush(heap, (float(w[v, u]), u))
    return total


def random_mst_instance(n_points=22, seed=0, low=0.0, high=100.0):
    rng = np.random.default_rng(seed)
    return MstInstance(rng.uniform(low, high, size=(n_points, 2)))


def load_points(path):
    """Rows of ``x y [demand]``; returns ``(points, demands or None)``."""
    rows = read_rows(path)
    if not rows:
        raise ConfigurationError(f"{path}: no points")
    widths = {len(r) for r in rows}
    if len(widths) != 1 or widths.pop() not in (2, 3):
        raise ConfigurationError(f"{path}: every line must hold 'x y' or 'x y demand'")
    try:
        data = as_matrix(rows)
    except ValueError as exc:
        raise ConfigurationError(f"{path}: {exc}") from None
    return data[:, :2], (data[:, 2] if data.shape[1] == 3 else None)


def save_points(path, points, demands=None, header="x y [demand] per line"):
    data = np.asarray(points, dtype=float)
    if demands is not None:
        data = np.column_stack([data, demands])
    write_rows(path, data.tolist(), header=header)
