"""Channel assembly and the 7 stacking ensembles.

Three detector channels feed a random-forest meta-learner: the five
stylometric text features (TF), the cross-perplexity ratio score (Bino),
and a trainable classifier channel (Clf) contributing its machine
probability and predicted label. Assembled vectors concatenate the
selected channels in a fixed canonical order: TF (5) ++ Clf (2) ++
Bino (1), up to 8 dimensions.

The classifier channel is served either by the in-repo hashed-n-gram
stand-in or by an external probability file keyed by document id (the
external file wins when supplied).
"""

from __future__ import annotations

import json
import math
import zlib
from dataclasses import dataclass

import numpy as np

from .corpus import Corpus, Document
from .errors import (
    AssemblyError,
    ClassError,
    FormatError,
    LookupError_,
    ShapeError,
)
from .forest import Forest, ForestParams, train_forest
from .lmscore import DEFAULT_THRESHOLD, TokenScoreSeries, ratio_score
from .seeding import rng_for
from .textfeat import TextFeatureVector, extract_features


@dataclass(frozen=True)
class Stacking:
    use_tf: bool
    use_clf: bool
    use_bino: bool

    def __post_init__(self):
        if not (self.use_tf or self.use_clf or self.use_bino):
            raise ValueError("a stacking must select at least one channel")

    @property
    def name(self) -> str:
        parts = []
        if self.use_tf:
            parts.append("tf")
        if self.use_clf:
            parts.append("clf")
        if self.use_bino:
            parts.append("bino")
        return "+".join(parts)

    @property
    def dim(self) -> int:
        return 5 * self.use_tf + 2 * self.use_clf + 1 * self.use_bino

    @classmethod
    def parse(cls, spec: str) -> "Stacking":
        parts = {p.strip().lower() for p in spec.split("+" if "+" in spec else ",")}
        unknown = parts - {"tf", "clf", "bino"}
        if unknown:
            raise ValueError(f"unknown channel names: {sorted(unknown)}")
        return cls(use_tf="tf" in parts, use_clf="clf" in parts, use_bino="bino" in parts)


def enumerate_stackings() -> list[Stacking]:
    """All 7 non-empty channel subsets in canonical order."""
    return [
        Stacking(True, False, False),   # tf
        Stacking(False, True, False),   # clf
        Stacking(False, False, True),   # bino
        Stacking(True, True, False),    # tf+clf
        Stacking(True, False, True),    # tf+bino
        Stacking(False, True, True),    # clf+bino
        Stacking(True, True, True),     # tf+clf+bino
    ]


@dataclass
class ChannelOutputs:
    text_features: TextFeatureVector | None = None
    binoculars: float | None = None
    classifier_prob: float | None = None
    classifier_label: int | None = None

    def __post_init__(self):
        if (
            self.text_features is None
            and self.binoculars is None
            and self.classifier_prob is None
        ):
            raise ValueError("at least one channel must be present")


HASH_DIM = 2**18
NGRAM_RANGE = (3, 5)


def _char_ngram_indices(text: str) -> dict[int, float]:
    """Hashed character n-gram counts (n in 3..5) over 2**18 buckets,
    using crc32 so the mapping is stable across processes."""
    counts: dict[int, float] = {}
    data = text.lower()
    for n in range(NGRAM_RANGE[0], NGRAM_RANGE[1] + 1):
        for i in range(len(data) - n + 1):
            bucket = zlib.crc32(data[i : i + n].encode("utf-8")) % HASH_DIM
            counts[bucket] = counts.get(bucket, 0.0) + 1.0
    norm = math.sqrt(sum(v * v for v in counts.values()))
    if norm > 0:
        for k in counts:
            counts[k] /= norm
    return counts


@dataclass
class StandinClassifier:
    """Logistic model over hashed character 3-5-grams; a desk-scale
    surrogate for a fine-tuned transformer channel."""

    weights: np.ndarray
    bias: float
    learning_rate: float
    epochs: int
    seed: int
    name: str = "standin"

    def predict_proba(self, doc: Document) -> float:
        feats = _char_ngram_indices(doc.text)
        z = self.bias + sum(self.weights[i] * v for i, v in feats.items())
        # Clamp the logit so the output stays strictly inside (0,1).
        z = max(-30.0, min(30.0, z))
        return 1.0 / (1.0 + math.exp(-z))

    def to_json(self) -> dict:
        nz = np.nonzero(self.weights)[0]
        return {
            "format": "mgtd-standin-v1",
            "dim": HASH_DIM,
            "bias": self.bias,
            "learning_rate": self.learning_rate,
            "epochs": self.epochs,
            "seed": self.seed,
            "indices": nz.tolist(),
            "values": self.weights[nz].tolist(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "StandinClassifier":
        if data.get("format") != "mgtd-standin-v1":
            raise FormatError(f"not a stand-in classifier file: {data.get('format')!r}")
        weights = np.zeros(data["dim"])
        weights[data["indices"]] = data["values"]
        return cls(
            weights=weights, bias=data["bias"],
            learning_rate=data["learning_rate"], epochs=data["epochs"],
            seed=data["seed"],
        )


def train_standin(corpus: Corpus, learning_rate: float = 0.5, epochs: int = 5,
                  seed: int = 42) -> StandinClassifier:
    """Deterministic epoch-ordered SGD on the logistic loss. The seed
    fixes a single initial shuffle of the training order; epochs then
    replay that order, so retraining is bit-exact."""
    labels = corpus.labels()
    if len(set(labels)) < 2:
        raise ClassError("stand-in classifier needs both classes in training data")
    features = [_char_ngram_indices(doc.text) for doc in corpus]
    order = rng_for(seed, "standin-order").permutation(len(features))
    weights = np.zeros(HASH_DIM)
    bias = 0.0
    for _epoch in range(epochs):
        for idx in order:
            feats = features[idx]
            y = labels[idx]
            z = bias + sum(weights[i] * v for i, v in feats.items())
            z = max(-30.0, min(30.0, z))
            p = 1.0 / (1.0 + math.exp(-z))
            grad = p - y
            for i, v in feats.items():
                weights[i] -= learning_rate * grad * v
            bias -= learning_rate * grad
    return StandinClassifier(weights=weights, bias=bias, learning_rate=learning_rate,
                             epochs=epochs, seed=seed)


class ExternalProbabilities:
    """Classifier probabilities loaded from JSONL {"id", "p_machine"}."""

    def __init__(self, by_id: dict[str, float], name: str = "external"):
        self.by_id = by_id
        self.name = name

    @classmethod
    def load(cls, path) -> "ExternalProbabilities":
        by_id = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise FormatError(f"{path}: malformed JSON at line {lineno}: {exc}")
                if "id" not in record or "p_machine" not in record:
                    raise FormatError(f"{path}: line {lineno}: need 'id' and 'p_machine'")
                by_id[str(record["id"])] = float(record["p_machine"])
        return cls(by_id, name=str(path))

    def predict_proba(self, doc: Document) -> float:
        if doc.id not in self.by_id:
            raise LookupError_(f"no external probability for document {doc.id!r}")
        return self.by_id[doc.id]


@dataclass
class BinocularsBackend:
    """Serves per-document ratio scores from a set of score series."""

    series_by_id: dict[str, TokenScoreSeries]
    window: int = 512
    threshold: float = DEFAULT_THRESHOLD

    @classmethod
    def from_series(cls, series_list: list[TokenScoreSeries], window: int = 512,
                    threshold: float = DEFAULT_THRESHOLD) -> "BinocularsBackend":
        return cls({s.doc_id: s for s in series_list}, window=window, threshold=threshold)

    def score(self, doc_id: str) -> float:
        if doc_id not in self.series_by_id:
            raise LookupError_(f"no score series for document {doc_id!r}")
        return ratio_score(self.series_by_id[doc_id], self.window, self.threshold).score


@dataclass
class ChannelDeps:
    bino_backend: BinocularsBackend | None = None
    clf_source: StandinClassifier | ExternalProbabilities | None = None


def channel_outputs(doc: Document, tf_on: bool = True,
                    bino_backend: BinocularsBackend | None = None,
                    clf_source=None) -> ChannelOutputs:
    """Compute exactly the requested channels for one document."""
    text_features = extract_features(doc.text) if tf_on else None
    binoculars = bino_backend.score(doc.id) if bino_backend is not None else None
    classifier_prob = classifier_label = None
    if clf_source is not None:
        classifier_prob = clf_source.predict_proba(doc)
        classifier_label = 1 if classifier_prob >= 0.5 else 0
    return ChannelOutputs(
        text_features=text_features,
        binoculars=binoculars,
        classifier_prob=classifier_prob,
        classifier_label=classifier_label,
    )


def assemble_vector(ch: ChannelOutputs, s: Stacking) -> np.ndarray:
    """Concatenate the selected channels in canonical order
    [TF x5] ++ [clf_prob, clf_label] ++ [bino]."""
    parts = []
    if s.use_tf:
        if ch.text_features is None:
            raise AssemblyError("stacking requires text features but they were not computed")
        parts.extend(ch.text_features.as_tuple())
    if s.use_clf:
        if ch.classifier_prob is None:
            raise AssemblyError("stacking requires the classifier channel but it was not computed")
        parts.extend([ch.classifier_prob, float(ch.classifier_label)])
    if s.use_bino:
        if ch.binoculars is None:
            raise AssemblyError("stacking requires the ratio-score channel but it was not computed")
        parts.append(ch.binoculars)
    return np.asarray(parts, dtype=float)


@dataclass
class StackModel:
    stacking: Stacking
    forest: Forest
    # Identifiers of the channel dependencies the model was trained with,
    # recorded for report provenance.
    bino_window: int | None = None
    bino_threshold: float | None = None
    clf_name: str | None = None

    def to_json(self) -> dict:
        return {
            "format": "mgtd-stack-v1",
            "stacking": self.stacking.name,
            "bino_window": self.bino_window,
            "bino_threshold": self.bino_threshold,
            "clf_name": self.clf_name,
            "forest": self.forest.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "StackModel":
        if data.get("format") != "mgtd-stack-v1":
            raise FormatError(f"not a stack model file: {data.get('format')!r}")
        return cls(
            stacking=Stacking.parse(data["stacking"]),
            forest=Forest.from_json(data["forest"]),
            bino_window=data.get("bino_window"),
            bino_threshold=data.get("bino_threshold"),
            clf_name=data.get("clf_name"),
        )


def _doc_vector(doc: Document, s: Stacking, deps: ChannelDeps) -> np.ndarray:
    ch = channel_outputs(
        doc,
        tf_on=s.use_tf,
        bino_backend=deps.bino_backend if s.use_bino else None,
        clf_source=deps.clf_source if s.use_clf else None,
    )
    return assemble_vector(ch, s)


def train_stack(train: Corpus, s: Stacking, deps: ChannelDeps,
                params: ForestParams = ForestParams()) -> StackModel:
    """Train the meta-learner forest on assembled channel vectors."""
    if s.use_bino and deps.bino_backend is None:
        raise AssemblyError(f"stacking {s.name!r} needs a ratio-score backend")
    if s.use_clf and deps.clf_source is None:
        raise AssemblyError(f"stacking {s.name!r} needs a classifier source")
    X = np.vstack([_doc_vector(doc, s, deps) for doc in train])
    y = np.asarray(train.labels(), dtype=int)
    forest = train_forest(X, y, params)
    return StackModel(
        stacking=s,
        forest=forest,
        bino_window=deps.bino_backend.window if s.use_bino else None,
        bino_threshold=deps.bino_backend.threshold if s.use_bino else None,
        clf_name=getattr(deps.clf_source, "name", None) if s.use_clf else None,
    )


def predict_stack(model: StackModel, doc: Document, deps: ChannelDeps) -> tuple[float, int]:
    """Forest probability and thresholded label (>= 0.5 -> machine)."""
    x = _doc_vector(doc, model.stacking, deps)
    if x.shape[0] != model.forest.feature_dim:
        raise ShapeError(
            f"assembled vector dim {x.shape[0]} != model dim {model.forest.feature_dim}"
        )
    prob = model.forest.predict_proba(x)
    return prob, 1 if prob >= 0.5 else 0
