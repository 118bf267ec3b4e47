"""From-scratch random forest used as the stacking meta-learner.

Binary classification with axis-aligned Gini splits, bootstrap
resampling, per-tree seed streams (so results never depend on execution
order or thread count), and impurity-decrease feature importances.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import EmptyInputError, FormatError, ShapeError
from .seeding import rng_for


@dataclass(frozen=True)
class ForestParams:
    n_trees: int = 100
    max_depth: int | None = None
    min_samples_split: int = 2
    features_per_split: int | str = "sqrt"  # count, or "sqrt" for ceil(sqrt(d))
    seed: int = 42

    def resolve_features(self, dim: int) -> int:
        if self.features_per_split == "sqrt":
            return math.ceil(math.sqrt(dim))
        k = int(self.features_per_split)
        if not 1 <= k <= dim:
            raise ValueError(f"features_per_split {k} outside [1, {dim}]")
        return k


@dataclass
class TreeNode:
    # Internal node: feature/threshold/left/right set, leaf_probs None.
    # Leaf: leaf_probs = (p_class0, p_class1).
    feature: int | None = None
    threshold: float | None = None
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    leaf_probs: tuple[float, float] | None = None


def _gini(counts0: int, counts1: int) -> float:
    n = counts0 + counts1
    if n == 0:
        return 0.0
    p0 = counts0 / n
    p1 = counts1 / n
    return 1.0 - p0 * p0 - p1 * p1


def best_split(X: np.ndarray, y: np.ndarray, feature_indices) -> tuple[int, float, float] | None:
    """Exhaustive best Gini-decrease split over the given features.

    Thresholds are midpoints between consecutive distinct sorted values.
    Ties break toward the lowest feature index, then lowest threshold
    (guaranteed by scan order and strict improvement). Returns
    (feature, threshold, decrease) or None when no split separates.
    """
    n = len(y)
    parent_gini = _gini(int(np.sum(y == 0)), int(np.sum(y == 1)))
    best: tuple[int, float, float] | None = None
    for f in sorted(feature_indices):
        order = np.argsort(X[:, f], kind="stable")
        xs = X[order, f]
        ys = y[order]
        # Prefix class counts let every candidate threshold be scored in O(1).
        ones_prefix = np.cumsum(ys)
        total_ones = int(ones_prefix[-1])
        for i in range(n - 1):
            if xs[i] == xs[i + 1]:
                continue
            threshold = (float(xs[i]) + float(xs[i + 1])) / 2.0
            n_left = i + 1
            ones_left = int(ones_prefix[i])
            left_gini = _gini(n_left - ones_left, ones_left)
            n_right = n - n_left
            ones_right = total_ones - ones_left
            right_gini = _gini(n_right - ones_right, ones_right)
            decrease = parent_gini - (n_left * left_gini + n_right * right_gini) / n
            if best is None or decrease > best[2]:
                best = (int(f), threshold, decrease)
    return best


def _grow(X, y, depth, params, n_features, rng, importances, n_total):
    n = len(y)
    ones = int(np.sum(y))
    if (
        n < params.min_samples_split
        or ones == 0
        or ones == n
        or (params.max_depth is not None and depth >= params.max_depth)
    ):
        return TreeNode(leaf_probs=((n - ones) / n, ones / n))
    dim = X.shape[1]
    subset = rng.choice(dim, size=min(n_features, dim), replace=False)
    split = best_split(X, y, subset)
    if split is None or split[2] <= 0:
        return TreeNode(leaf_probs=((n - ones) / n, ones / n))
    f, threshold, decrease = split
    importances[f] += (n / n_total) * decrease
    mask = X[:, f] <= threshold
    left = _grow(X[mask], y[mask], depth + 1, params, n_features, rng, importances, n_total)
    right = _grow(X[~mask], y[~mask], depth + 1, params, n_features, rng, importances, n_total)
    return TreeNode(feature=f, threshold=threshold, left=left, right=right)


def _train_tree(X, y, params, tree_index, n_features):
    rng = rng_for(params.seed, "tree", tree_index)
    n = len(y)
    sample = rng.integers(0, n, size=n)  # bootstrap, with replacement
    Xb, yb = X[sample], y[sample]
    importances = np.zeros(X.shape[1])
    root = _grow(Xb, yb, 0, params, n_features, rng, importances, n)
    return root, importances


@dataclass
class Forest:
    trees: list[TreeNode]
    feature_dim: int
    importances: np.ndarray
    params: ForestParams

    def predict_proba(self, x) -> float:
        """Mean over trees of the leaf probability of class 1."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.feature_dim,):
            raise ShapeError(
                f"expected feature vector of dim {self.feature_dim}, got shape {x.shape}"
            )
        total = 0.0
        for root in self.trees:
            node = root
            while node.leaf_probs is None:
                node = node.left if x[node.feature] <= node.threshold else node.right
            total += node.leaf_probs[1]
        return total / len(self.trees)

    def predict(self, x) -> int:
        return 1 if self.predict_proba(x) >= 0.5 else 0

    def to_json(self) -> dict:
        def encode(node):
            if node.leaf_probs is not None:
                return {"leaf_probs": list(node.leaf_probs)}
            return {
                "feature": node.feature,
                "threshold": node.threshold,
                "left": encode(node.left),
                "right": encode(node.right),
            }

        return {
            "format": "mgtd-forest-v1",
            "feature_dim": self.feature_dim,
            "importances": self.importances.tolist(),
            "params": {
                "n_trees": self.params.n_trees,
                "max_depth": self.params.max_depth,
                "min_samples_split": self.params.min_samples_split,
                "features_per_split": self.params.features_per_split,
                "seed": self.params.seed,
            },
            "trees": [encode(t) for t in self.trees],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Forest":
        if data.get("format") != "mgtd-forest-v1":
            raise FormatError(f"not a forest file: {data.get('format')!r}")

        def decode(obj):
            if "leaf_probs" in obj:
                return TreeNode(leaf_probs=tuple(obj["leaf_probs"]))
            return TreeNode(
                feature=obj["feature"],
                threshold=obj["threshold"],
                left=decode(obj["left"]),
                right=decode(obj["right"]),
            )

        return cls(
            trees=[decode(t) for t in data["trees"]],
            feature_dim=data["feature_dim"],
            importances=np.asarray(data["importances"]),
            params=ForestParams(**data["params"]),
        )


def train_forest(X, y, params: ForestParams = ForestParams(), n_jobs: int = 1) -> Forest:
    """Train a forest. Each tree's bootstrap and feature subsets come from
    a stream keyed by (seed, tree index), so n_jobs never changes the model."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    if X.ndim != 2:
        raise ShapeError(f"X must be 2-D, got shape {X.shape}")
    if len(X) != len(y):
        raise ShapeError(f"|X|={len(X)} != |y|={len(y)}")
    if len(X) == 0:
        raise EmptyInputError("cannot train a forest on empty data")
    n_features = params.resolve_features(X.shape[1])

    if n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            results = list(
                pool.map(lambda i: _train_tree(X, y, params, i, n_features),
                         range(params.n_trees))
            )
    else:
        results = [_train_tree(X, y, params, i, n_features) for i in range(params.n_trees)]

    trees = [r[0] for r in results]
    importances = np.mean([r[1] for r in results], axis=0)
    total = importances.sum()
    if total > 0:
        importances = importances / total
    return Forest(trees=trees, feature_dim=X.shape[1], importances=importances, params=params)


def feature_importance(forest: Forest) -> np.ndarray:
    """Normalized mean impurity decrease per feature (all zero when the
    forest made no splits)."""
    return forest.importances.copy()


def save_forest(forest: Forest, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(forest.to_json(), fh)


def load_forest(path) -> Forest:
    with open(path, encoding="utf-8") as fh:
        return Forest.from_json(json.load(fh))
