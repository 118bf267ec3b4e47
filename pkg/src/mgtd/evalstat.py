"""Evaluation statistics: F1 with bootstrap confidence intervals,
pairwise exact McNemar tests with Bonferroni correction, Jensen-Shannon
divergence over score histograms, context-window sweeps, and pre/post
attack degradation tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import ClassError, DomainError, EmptyInputError, KeyMismatchError, ShapeError
from .lmscore import TokenScoreSeries, ratio_score
from .seeding import rng_for


@dataclass(frozen=True)
class Confusion:
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class PairwiseRow:
    module_a: str
    module_b: str
    p_value: float
    f1_a: float
    f1_b: float
    f1_diff: float
    higher: str
    significant: bool


@dataclass(frozen=True)
class DegradationRow:
    stacking: str
    f1_pre: float
    f1_post: float
    degradation: float


def confusion(preds, labels) -> Confusion:
    """Counts with positive class = 1 (machine)."""
    if len(preds) != len(labels) or len(preds) == 0:
        raise ShapeError(f"preds length {len(preds)} vs labels length {len(labels)}")
    tp = fp = fn = tn = 0
    for p, y in zip(preds, labels):
        if p == 1 and y == 1:
            tp += 1
        elif p == 1 and y == 0:
            fp += 1
        elif p == 0 and y == 1:
            fn += 1
        else:
            tn += 1
    return Confusion(tp=tp, fp=fp, fn=fn, tn=tn)


def f1(c: Confusion) -> float:
    denom = 2 * c.tp + c.fp + c.fn
    if denom == 0:
        return 0.0
    return 2 * c.tp / denom


def f1_score(preds, labels) -> float:
    return f1(confusion(preds, labels))


def bootstrap_ci_f1(preds, labels, n_bootstrap: int = 5000, n_subset: int | None = None,
                    alpha: float = 0.1, seed: int = 42) -> tuple[float, float, float]:
    """Percentile bootstrap CI for F1.

    Each replicate resamples n_subset indices with replacement (default:
    the population size). Replicates with no positives score 0 by the
    zero-denominator convention. Returns (lower, upper, point).
    """
    if len(preds) != len(labels) or len(preds) == 0:
        raise ShapeError(f"preds length {len(preds)} vs labels length {len(labels)}")
    n = len(preds)
    if n_subset is None:
        n_subset = n
    preds = np.asarray(preds, dtype=int)
    labels = np.asarray(labels, dtype=int)
    point = f1_score(preds.tolist(), labels.tolist())
    rng = rng_for(seed, "bootstrap")
    stats = np.empty(n_bootstrap)
    for i in range(n_bootstrap):
        idx = rng.integers(0, n, size=n_subset)
        p, y = preds[idx], labels[idx]
        tp = int(np.sum((p == 1) & (y == 1)))
        fp = int(np.sum((p == 1) & (y == 0)))
        fn = int(np.sum((p == 0) & (y == 1)))
        denom = 2 * tp + fp + fn
        stats[i] = 2 * tp / denom if denom else 0.0
    lower = float(np.percentile(stats, 100 * alpha / 2))
    upper = float(np.percentile(stats, 100 * (1 - alpha / 2)))
    return lower, upper, point


def mcnemar(preds_a, preds_b, labels, mode: str = "auto") -> float:
    """Paired McNemar test on discordant counts.

    b = a-correct/b-wrong, c = a-wrong/b-correct. Mode "exact" is the
    two-sided binomial tail; "chi2" the continuity-corrected statistic;
    "auto" picks exact for b+c <= 25.
    """
    if not (len(preds_a) == len(preds_b) == len(labels)):
        raise ShapeError("preds_a, preds_b, labels must have equal lengths")
    b = c = 0
    for pa, pb, y in zip(preds_a, preds_b, labels):
        a_ok, b_ok = pa == y, pb == y
        if a_ok and not b_ok:
            b += 1
        elif b_ok and not a_ok:
            c += 1
    return mcnemar_from_counts(b, c, mode)


def mcnemar_from_counts(b: int, c: int, mode: str = "auto") -> float:
    n = b + c
    if n == 0:
        return 1.0
    if mode == "auto":
        mode = "exact" if n <= 25 else "chi2"
    if mode == "exact":
        k = min(b, c)
        tail = sum(math.comb(n, i) for i in range(k + 1)) / 2.0**n
        return min(1.0, 2.0 * tail)
    if mode == "chi2":
        stat = (abs(b - c) - 1) ** 2 / n
        # Survival function of chi-square with 1 df.
        return math.erfc(math.sqrt(stat / 2.0))
    raise ValueError(f"unknown mcnemar mode {mode!r}")


def bonferroni(alpha: float, m: int) -> float:
    if m < 1:
        raise DomainError(f"number of tests must be >= 1, got {m}")
    return alpha / m


def pairwise_table(predictions: dict[str, list[int]], labels, alpha: float = 0.1,
                   mode: str = "auto") -> list[PairwiseRow]:
    """All C(k,2) pairwise McNemar comparisons, sorted by |F1 diff|
    descending, each flagged against the Bonferroni-corrected threshold."""
    names = list(predictions)
    if len(names) < 2:
        raise ShapeError("need at least 2 prediction sets")
    n = len(labels)
    for name, preds in predictions.items():
        if len(preds) != n:
            raise ShapeError(f"predictions for {name!r} have length {len(preds)}, labels {n}")
    f1s = {name: f1_score(preds, labels) for name, preds in predictions.items()}
    m = len(names) * (len(names) - 1) // 2
    threshold = bonferroni(alpha, m)
    rows = []
    for a, b in combinations(names, 2):
        p = mcnemar(predictions[a], predictions[b], labels, mode=mode)
        diff = f1s[a] - f1s[b]
        rows.append(
            PairwiseRow(
                module_a=a, module_b=b, p_value=p,
                f1_a=f1s[a], f1_b=f1s[b], f1_diff=diff,
                higher=a if f1s[a] >= f1s[b] else b,
                significant=p < threshold,
            )
        )
    rows.sort(key=lambda r: -abs(r.f1_diff))
    return rows


def js_divergence(p, q) -> float:
    """Jensen-Shannon divergence in nats; inputs must be normalized
    histograms over the same bins. Bounded by ln 2."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise DomainError(f"histogram shapes differ: {p.shape} vs {q.shape}")
    for name, h in (("p", p), ("q", q)):
        if abs(h.sum() - 1.0) > 1e-9:
            raise DomainError(f"histogram {name} sums to {h.sum()!r}, not 1")
        if (h < 0).any():
            raise DomainError(f"histogram {name} has negative mass")
    m = (p + q) / 2.0

    def kl(a, b):
        mask = a > 0
        return float(np.sum(a[mask] * np.log(a[mask] / b[mask])))

    return 0.5 * kl(p, m) + 0.5 * kl(q, m)


def score_histogram(scores, bins: int, value_range: tuple[float, float]) -> np.ndarray:
    """Normalized histogram with half-open bins [lo, hi) and out-of-range
    scores clamped into the edge bins."""
    if len(scores) == 0:
        raise EmptyInputError("cannot histogram an empty score list")
    if bins < 2:
        raise ValueError(f"bins must be >= 2, got {bins}")
    lo, hi = value_range
    if not lo < hi:
        raise ValueError(f"invalid range ({lo}, {hi})")
    edges = np.linspace(lo, hi, bins + 1)
    idx = np.digitize(np.asarray(scores, dtype=float), edges[1:-1], right=False)
    counts = np.bincount(idx, minlength=bins).astype(float)
    return counts / counts.sum()


def context_js_sweep(series_set: list[TokenScoreSeries], labels, windows,
                     bins: int = 50, value_range: tuple[float, float] = (0.6, 1.4)
                     ) -> list[tuple[int, float]]:
    """JS divergence between human and machine score histograms at each
    context window size."""
    if not windows:
        raise ValueError("windows must be non-empty")
    if len(series_set) != len(labels):
        raise ShapeError("series/labels length mismatch")
    if 0 not in labels or 1 not in labels:
        raise ClassError("both classes required for a class-separation sweep")
    out = []
    for window in windows:
        scores = [ratio_score(s, window).score for s in series_set]
        human = [s for s, y in zip(scores, labels) if y == 0]
        machine = [s for s, y in zip(scores, labels) if y == 1]
        js = js_divergence(
            score_histogram(human, bins, value_range),
            score_histogram(machine, bins, value_range),
        )
        out.append((window, js))
    return out


def degradation_table(pre: dict[str, float], post: dict[str, float]) -> list[DegradationRow]:
    """Per-stacking F1 drop, sorted by degradation descending."""
    if set(pre) != set(post):
        raise KeyMismatchError(
            f"pre/post key mismatch: {sorted(set(pre) ^ set(post))}"
        )
    rows = [
        DegradationRow(stacking=name, f1_pre=pre[name], f1_post=post[name],
                       degradation=pre[name] - post[name])
        for name in pre
    ]
    rows.sort(key=lambda r: -r.degradation)
    return rows
