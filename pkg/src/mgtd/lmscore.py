"""N-gram language models, per-position score series, and the
cross-perplexity ratio score used to flag machine text.

The ratio score for a document is mean per-token log-perplexity under an
observer model divided by the mean observer/performer cross-entropy,
both in nats over the first W scored positions. Scores below the
decision threshold (default 0.901) classify as machine.

The n-gram pair is a desk-scale backend; series produced by external
causal-LM exporters are interchangeable through the series JSONL format.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .corpus import Corpus
from .errors import EmptyInputError, FormatError
from .textfeat import tokenize

BOS = "<s>"
EOS = "</s>"

DEFAULT_THRESHOLD = 0.901


@dataclass
class NgramModel:
    """Additively smoothed n-gram model over word tokens.

    counts maps a context tuple of (order-1) tokens to a dict of
    next-token counts; context_totals caches the per-context sum.
    """

    order: int
    alpha: float
    vocab: frozenset[str]
    counts: dict[tuple[str, ...], dict[str, int]] = field(default_factory=dict)
    name: str = "ngram"

    def __post_init__(self):
        self.context_totals = {
            ctx: sum(toks.values()) for ctx, toks in self.counts.items()
        }
        self._vocab_size = len(self.vocab)

    @classmethod
    def uniform(cls, vocab, order: int = 1, alpha: float = 1.0, name: str = "uniform"):
        """Untrained model: every conditional distribution is uniform
        over the vocabulary (smoothing mass only)."""
        return cls(order=order, alpha=alpha, vocab=frozenset(vocab), name=name)

    def log_prob(self, token: str, context: tuple[str, ...]) -> float:
        """Smoothed log p(token | context), natural log. Tokens outside
        the vocabulary get the unseen smoothing mass."""
        ctx_counts = self.counts.get(context)
        total = self.context_totals.get(context, 0)
        count = ctx_counts.get(token, 0) if ctx_counts else 0
        return math.log(count + self.alpha) - math.log(
            total + self.alpha * self._vocab_size
        )

    def seen_tokens(self, context: tuple[str, ...]) -> dict[str, int]:
        return self.counts.get(context, {})

    def context_total(self, context: tuple[str, ...]) -> int:
        return self.context_totals.get(context, 0)

    def to_json(self) -> dict:
        return {
            "format": "mgtd-ngram-v1",
            "order": self.order,
            "alpha": self.alpha,
            "name": self.name,
            "vocab": sorted(self.vocab),
            "counts": [
                {"context": list(ctx), "tokens": toks}
                for ctx, toks in sorted(self.counts.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "NgramModel":
        if data.get("format") != "mgtd-ngram-v1":
            raise FormatError(f"not an n-gram model file: {data.get('format')!r}")
        counts = {
            tuple(entry["context"]): dict(entry["tokens"])
            for entry in data["counts"]
        }
        return cls(
            order=data["order"],
            alpha=data["alpha"],
            vocab=frozenset(data["vocab"]),
            counts=counts,
            name=data.get("name", "ngram"),
        )


def save_model(model: NgramModel, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model.to_json(), fh)


def load_model(path) -> NgramModel:
    with open(path, encoding="utf-8") as fh:
        return NgramModel.from_json(json.load(fh))


def _doc_tokens(text: str) -> list[str]:
    return list(tokenize(text).tokens)


def train_ngram(corpus: Corpus, order: int, alpha: float, name: str = "ngram") -> NgramModel:
    """Count n-grams over the corpus with (order-1) begin sentinels and
    one end sentinel per document."""
    if len(corpus) == 0:
        raise EmptyInputError("cannot train an n-gram model on an empty corpus")
    if not 1 <= order <= 5:
        raise ValueError(f"order must be in [1,5], got {order}")
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    counts: dict[tuple[str, ...], dict[str, int]] = {}
    vocab = {BOS, EOS}
    for doc in corpus:
        tokens = _doc_tokens(doc.text)
        vocab.update(tokens)
        padded = [BOS] * (order - 1) + tokens + [EOS]
        for i in range(order - 1, len(padded)):
            ctx = tuple(padded[i - order + 1 : i])
            counts.setdefault(ctx, {})
            counts[ctx][padded[i]] = counts[ctx].get(padded[i], 0) + 1
    return NgramModel(order=order, alpha=alpha, vocab=frozenset(vocab), counts=counts, name=name)


@dataclass
class TokenScoreSeries:
    """Per-position observer cross-entropy (ce) and observer/performer
    cross-entropy (xce), both in nats."""

    doc_id: str
    observer_name: str
    performer_name: str
    ce: list[float]
    xce: list[float]
    quant_bits: int | None = None

    def __post_init__(self):
        if len(self.ce) != len(self.xce):
            raise FormatError(
                f"series {self.doc_id!r}: ce length {len(self.ce)} != xce length {len(self.xce)}"
            )
        if len(self.ce) == 0:
            raise FormatError(f"series {self.doc_id!r}: empty series")
        for value in list(self.ce) + list(self.xce):
            if not math.isfinite(value):
                raise FormatError(f"series {self.doc_id!r}: non-finite entry {value!r}")


@dataclass(frozen=True)
class ScoreResult:
    """Ratio score with the window it was computed over and the label it
    implies (1 = machine iff score < threshold, strictly)."""

    score: float
    window: int
    label: int


def _cross_entropy_term(observer: NgramModel, performer: NgramModel,
                        context: tuple[str, ...]) -> float:
    """-sum over the performer's vocabulary of p_perf(v|ctx) * log p_obs(v|ctx).

    Exploits the smoothed model's structure: every token the observer has
    not seen in this context shares one log-probability, so only the
    observer's seen set needs individual terms.
    """
    obs_total = observer.context_total(context)
    obs_denom = math.log(obs_total + observer.alpha * len(observer.vocab))
    log_unseen = math.log(observer.alpha) - obs_denom

    perf_total = performer.context_total(context)
    perf_denom = perf_total + performer.alpha * len(performer.vocab)

    # sum_{v in Vp} p_perf(v) log p_obs(v)
    #   = log_unseen + sum_{v in seen_obs ∩ Vp} p_perf(v) (log(c_v+a) - log a)
    # because p_perf sums to 1 over Vp and unseen tokens share log_unseen.
    acc = log_unseen
    perf_seen = performer.seen_tokens(context)
    log_alpha = math.log(observer.alpha)
    for token, obs_count in observer.seen_tokens(context).items():
        if token not in performer.vocab:
            continue
        p_perf = (perf_seen.get(token, 0) + performer.alpha) / perf_denom
        acc += p_perf * (math.log(obs_count + observer.alpha) - log_alpha)
    return -acc


def score_series(observer: NgramModel, performer: NgramModel, text: str,
                 doc_id: str = "", quant_bits: int | None = None) -> TokenScoreSeries:
    """Per-position ce and xce for a document under an observer/performer
    model pair. Context construction follows the observer's order."""
    tokens = _doc_tokens(text)
    if not tokens:
        raise EmptyInputError(f"document {doc_id!r} has no tokens to score")
    if observer.order != performer.order:
        raise ValueError(
            f"observer order {observer.order} != performer order {performer.order}"
        )
    order = observer.order
    padded = [BOS] * (order - 1) + tokens
    ce = []
    xce = []
    xce_cache: dict[tuple[str, ...], float] = {}
    for i in range(order - 1, len(padded)):
        ctx = tuple(padded[i - order + 1 : i])
        ce.append(-observer.log_prob(padded[i], ctx))
        if ctx not in xce_cache:
            xce_cache[ctx] = _cross_entropy_term(observer, performer, ctx)
        xce.append(xce_cache[ctx])
    return TokenScoreSeries(
        doc_id=doc_id,
        observer_name=observer.name,
        performer_name=performer.name,
        ce=ce,
        xce=xce,
        quant_bits=quant_bits,
    )


def ratio_score(series: TokenScoreSeries, window: int,
                threshold: float = DEFAULT_THRESHOLD) -> ScoreResult:
    """Mean(ce)/mean(xce) over the first min(window, L) positions;
    label 1 (machine) iff score < threshold."""
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    w = min(window, len(series.ce))
    mean_ce = sum(series.ce[:w]) / w
    mean_xce = sum(series.xce[:w]) / w
    if mean_xce == 0.0:
        raise FormatError(f"series {series.doc_id!r}: degenerate zero cross-entropy")
    score = mean_ce / mean_xce
    return ScoreResult(score=score, window=w, label=1 if score < threshold else 0)


# Kept under the method's informal name as well.
binoculars_score = ratio_score


def sweep_windows(series_set: list[TokenScoreSeries], windows: list[int]) -> dict[int, list[float]]:
    """Scores for every series at each window size. Documents shorter
    than a window use their full length."""
    if not windows:
        raise ValueError("windows must be non-empty")
    table: dict[int, list[float]] = {}
    for window in windows:
        table[window] = [ratio_score(s, window).score for s in series_set]
    return table


def write_series(series_list: list[TokenScoreSeries], path) -> None:
    """Series JSONL; float repr keeps well above 9 significant digits."""
    with open(path, "w", encoding="utf-8") as fh:
        for s in series_list:
            for value in list(s.ce) + list(s.xce):
                if not math.isfinite(value):
                    raise FormatError(f"series {s.doc_id!r}: non-finite entry")
            fh.write(
                json.dumps(
                    {
                        "doc_id": s.doc_id,
                        "observer": s.observer_name,
                        "performer": s.performer_name,
                        "quant_bits": s.quant_bits,
                        "ce": s.ce,
                        "xce": s.xce,
                    }
                )
                + "\n"
            )


def read_series(path) -> list[TokenScoreSeries]:
    """Read and validate series JSONL (equal-length finite ce/xce)."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise FormatError(f"{path}: malformed JSON at line {lineno}: {exc}")
            for key in ("doc_id", "observer", "performer", "ce", "xce"):
                if key not in record:
                    raise FormatError(f"{path}: line {lineno}: missing {key!r}")
            out.append(
                TokenScoreSeries(
                    doc_id=str(record["doc_id"]),
                    observer_name=record["observer"],
                    performer_name=record["performer"],
                    ce=[float(v) for v in record["ce"]],
                    xce=[float(v) for v in record["xce"]],
                    quant_bits=record.get("quant_bits"),
                )
            )
    return out
