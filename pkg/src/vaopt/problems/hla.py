"""Continuous p-median hub location: place p facilities, serve each client from the nearest."""

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from .._validation import ConfigurationError, check_positive_int
from ..base import SearchSpace
from ._base import ProblemInstance

__all__ = [
    "HlaInstance",
    "hla_objective",
    "random_hla_instance",
    "best_random_placement",
    "warm_start_oracle",
    "weiszfeld_refine",
]


@dataclass(eq=False)
class HlaInstance(ProblemInstance):
    """Clients with demands and the number of facilities to open.

    A solution is ``2 * n_facilities`` coordinates, facility by facility.
    Cost is the demand-weighted Euclidean distance from each client to its
    nearest facility.
    """

    clients: np.ndarray
    demands: np.ndarray
    n_facilities: int

    name = "hla"

    def __post_init__(self):
        self.clients = np.asarray(self.clients, dtype=float)
        self.demands = np.asarray(self.demands, dtype=float)
        if self.clients.ndim != 2 or self.clients.shape[1] != 2:
            raise ConfigurationError("clients must be an (n, 2) array")
        if self.demands.shape != (len(self.clients),):
            raise ConfigurationError("need exactly one demand per client")
        if np.any(self.demands <= 0):
            raise ConfigurationError("demands must be positive")
        self.n_facilities = check_positive_int(self.n_facilities, "n_facilities")
        if self.n_facilities > len(self.clients):
            raise ConfigurationError("more facilities than clients")

    @property
    def dimension(self):
        return 2 * self.n_facilities

    def space(self):
        lo, hi = self.clients.min(axis=0), self.clients.max(axis=0)
        hi = np.where(hi > lo, hi, lo + 1.0)
        return SearchSpace(np.tile(lo, self.n_facilities), np.tile(hi, self.n_facilities))

    def facilities(self, x):
        return np.asarray(x, dtype=float).reshape(self.n_facilities, 2)

    def assign(self, x):
        return np.argmin(cdist(self.clients, self.facilities(x)), axis=1)

    def cost(self, x):
        dist = cdist(self.clients, self.facilities(x)).min(axis=1)
        return float(np.dot(self.demands, dist))


def hla_objective(instance, x):
    return instance(x)


def random_hla_instance(n_clients=40, n_facilities=4, seed=0, low=0.0, high=100.0):
    """Clients uniform in the square, demands uniform in [1, 100]."""
    rng = np.random.default_rng(seed)
    clients = rng.uniform(low, high, size=(n_clients, 2))
    demands = rng.uniform(1.0, 100.0, size=n_clients)
    return HlaInstance(clients, demands, n_facilities)


def best_random_placement(instance, n_samples=50, seed=0):
    """Lowest cost over ``n_samples`` uniform placements in the bounding box."""
    rng = np.random.default_rng(seed)
    space = instance.space()
    return min(instance(space.sample(rng)) for _ in range(n_samples))


def weiszfeld_refine(points, weights, centers, n_iter=200, tol=1e-10):
    """Alternate nearest-center assignment and weighted geometric-median updates."""
    centers = np.array(centers, dtype=float)
    for _ in range(n_iter):
        dist = cdist(points, centers)
        labels = np.argmin(dist, axis=1)
        moved = centers.copy()
        for k in range(len(centers)):
            members = labels == k
            if not members.any():
                continue
            d = np.maximum(dist[members, k], 1e-12)
            w = weights[members] / d
            moved[k] = w @ points[members] / w.sum()
        shift = np.abs(moved - centers).max()
        centers = moved
        if shift < tol:
            break
    return centers


def warm_start_oracle(instance, restarts=10, seed=0):
    """k-means on the clients, refined by Weiszfeld iterations; best of ``restarts``.

    Returns ``(cost, x)``.
    """
    from sklearn.cluster import KMeans

    best_cost, best_x = np.inf, None
    for r in range(restarts):
        km = KMeans(n_clusters=instance.n_facilities, n_init=1, random_state=seed + r)
        km.fit(instance.clients, sample_weight=instance.demands)
        centers = weiszfeld_refine(instance.clients, instance.demands, km.cluster_centers_)
        x = centers.ravel()
        value = instance(x)
        if value < best_cost:
            best_cost, best_x = value, x
    return best_cost, best_x
