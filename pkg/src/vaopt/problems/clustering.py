"""Center-based clustering with the sum of Euclidean distances as cost.

Also provides :class:`VAOClustering`, a scikit-learn style clusterer that
searches the centers with any of the package's optimizers.
"""

import csv
import hashlib
from dataclasses import dataclass
from importlib import resources

import numpy as np
from scipy.spatial.distance import cdist
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .._validation import ConfigurationError, DimensionError, check_positive_int
from ..base import SearchSpace
from ._base import ProblemInstance
from .hla import weiszfeld_refine

__all__ = [
    "ClusterInstance",
    "clustering_objective",
    "kmeans_restarts",
    "load_iris",
    "iris_instance",
    "IRIS_SHA256",
    "VAOClustering",
]

# sha256 of the bundled iris.csv (150 rows, 4 features, no header).
IRIS_SHA256 = "3451adf24b219c2e43376ee1ede99751a83b587744e76c699fedd8f7d6f18ae8"


@dataclass(eq=False)
class ClusterInstance(ProblemInstance):
    samples: np.ndarray
    k: int = 3

    name = "cluster"

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=float)
        if self.samples.ndim == 1:
            self.samples = self.samples[:, None]
        self.k = check_positive_int(self.k, "k")
        if self.k > len(self.samples):
            raise ConfigurationError("k cannot exceed the number of samples")

    @property
    def n_features(self):
        return self.samples.shape[1]

    @property
    def dimension(self):
        return self.k * self.n_features

    def space(self):
        lo, hi = self.samples.min(axis=0), self.samples.max(axis=0)
        hi = np.where(hi > lo, hi, lo + 1.0)
        return SearchSpace(np.tile(lo, self.k), np.tile(hi, self.k))

    def centers(self, x):
        x = np.asarray(x, dtype=float)
        if x.size != self.dimension:
            raise DimensionError(f"expected {self.k}x{self.n_features} = {self.dimension} values, got {x.size}")
        return x.reshape(self.k, self.n_features)

    def cost(self, x):
        return float(cdist(self.samples, self.centers(x)).min(axis=1).sum())

    def __call__(self, x):
        return self.cost(x)


def clustering_objective(instance, x):
    return instance(x)


def kmeans_restarts(instance, restarts=20, seed=0):
    """Multi-restart k-medians style oracle; returns ``(cost, centers)``.

    Each restart runs Lloyd's k-means from a fresh k-means++ seeding and
    then alternates nearest-center assignment with geometric-median
    (Weiszfeld) center updates, which is the coordinate descent for the
    sum-of-distances cost. Starting from centroids rather than sample points
    keeps Weiszfeld away from its fixed points on the data.
    """
    from sklearn.cluster import KMeans

    weights = np.ones(len(instance.samples))
    best_cost, best_centers = np.inf, None
    for r in range(restarts):
        km = KMeans(n_clusters=instance.k, n_init=1, random_state=seed + r).fit(instance.samples)
        centers = weiszfeld_refine(instance.samples, weights, km.cluster_centers_, n_iter=500)
        value = instance(centers.ravel())
        if value < best_cost:
            best_cost, best_centers = value, centers
    return best_cost, best_centers


def _iris_path():
    return resources.files("vaopt.problems") / "data" / "iris.csv"


def load_iris(verify=True):
    """Iris features as a (150, 4) array, read from the bundled CSV."""
    raw = _iris_path().read_bytes()
    if verify and hashlib.sha256(raw).hexdigest() != IRIS_SHA256:
        raise ConfigurationError("bundled iris.csv does not match its checksum")
    return load_features_text(raw.decode("utf-8"))


def load_features_text(text):
    rows = [r for r in csv.reader(text.splitlines()) if r and not r[0].startswith("#")]
    try:
        return np.array([[float(v) for v in r] for r in rows], dtype=float)
    except ValueError as exc:
        raise ConfigurationError(f"non-numeric feature value: {exc}") from None


def load_features(path):
    with open(path, encoding="utf-8") as fh:
        data = load_features_text(fh.read())
    if data.size == 0:
        raise ConfigurationError(f"{path}: no samples")
    return data


def iris_instance(k=3):
    return ClusterInstance(load_iris(), k)


class VAOClustering(ClusterMixin, BaseEstimator):
    """Cluster by searching ``n_clusters`` centers that minimize the sum of distances.

    Parameters
    ----------
    n_clusters : int, default 3
    optimizer : estimator, optional
        Any optimizer of this package; defaults to
        ``VictoriaAmazonicaOptimizer(population_size=30, max_iter=300)``.
    random_state : int or None
        Overrides the optimizer's seed when given.
    """

    def __init__(self, n_clusters=3, optimizer=None, random_state=None):
        self.n_clusters = n_clusters
        self.optimizer = optimizer
        self.random_state = random_state

    def fit(self, X, y=None):
        from sklearn.base import clone

        from ..vao import VictoriaAmazonicaOptimizer

        X = check_array(X)
        instance = ClusterInstance(X, self.n_clusters)
        opt = (
            VictoriaAmazonicaOptimizer(population_size=30, max_iter=300)
            if self.optimizer is None
            else clone(self.optimizer)
        )
        if self.random_state is not None:
            opt.set_params(random_state=self.random_state)
        result = opt.minimize(instance, instance.space())
        self.cluster_centers_ = instance.centers(result.alpha_position)
        self.labels_ = self._nearest(X)
        self.inertia_ = result.alpha_cost
        self.result_ = result
        self.n_features_in_ = X.shape[1]
        return self

    def _nearest(self, X):
        return np.argmin(cdist(X, self.cluster_centers_), axis=1)

    def predict(self, X):
        check_is_fitted(self, "cluster_centers_")
        return self._nearest(check_array(X))

    def score(self, X, y=None):
        check_is_fitted(self, "cluster_centers_")
        X = check_array(X)
        return -float(cdist(X, self.cluster_centers_).min(axis=1).sum())
