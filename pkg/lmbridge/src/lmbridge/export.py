"""Token score series export from a causal language-model pair.

Per document and per scored position i (token x_i predicted from the
preceding tokens):

    ce_i  = -log p_obs(x_i | x_<i)
    xce_i = -sum_v p_perf(v | x_<i) * log p_obs(v | x_<i)

Both in natural log. The cross-entropy sum runs over the full
vocabulary (no top-k truncation, which would bias the score
denominator). Output lines conform to the core toolkit's series JSONL
format; a manifest JSON records model ids, quantization tag, tokenizer
hash, and any skipped documents.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import logging
import warnings
from dataclasses import dataclass

import torch
import torch.nn.functional as F

from .errors import CorpusError, SpecError, TokenizerMismatchError

log = logging.getLogger(__name__)

_QUANT_CHOICES = (None, 4, 8, 16)


@dataclass(frozen=True)
class ModelPairSpec:
    """Observer/performer pair for cross-perplexity scoring.

    quant_bits is metadata recorded verbatim into every emitted series;
    max_positions caps the number of scored token positions per document.
    """

    observer_id: str
    performer_id: str
    quant_bits: int | None = None
    max_positions: int = 512

    def __post_init__(self):
        if not self.observer_id or not self.performer_id:
            raise SpecError("observer_id and performer_id must be non-empty")
        if self.quant_bits not in _QUANT_CHOICES:
            raise SpecError(f"quant_bits must be one of {_QUANT_CHOICES}, "
                            f"got {self.quant_bits!r}")
        if self.max_positions < 1:
            raise SpecError(f"max_positions must be >= 1, got {self.max_positions}")


def load_documents(corpus_file) -> list[dict]:
    """JSONL documents with at least id and text fields."""
    docs = []
    with open(corpus_file, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{corpus_file}: line {lineno}: {exc}")
            if "text" not in record:
                raise CorpusError(f"{corpus_file}: line {lineno}: missing 'text'")
            record.setdefault("id", str(lineno))
            docs.append(record)
    if not docs:
        raise CorpusError(f"{corpus_file}: empty corpus")
    return docs


def tokenizer_hash(tokenizer) -> str:
    """Stable hash of the vocabulary mapping."""
    vocab = tokenizer.get_vocab()
    payload = json.dumps(sorted(vocab.items()), ensure_ascii=False)
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _check_tokenizers(obs_tok, perf_tok):
    h_obs, h_perf = tokenizer_hash(obs_tok), tokenizer_hash(perf_tok)
    if h_obs != h_perf:
        raise TokenizerMismatchError(
            f"observer tokenizer {h_obs[:12]} != performer tokenizer {h_perf[:12]}"
        )
    return h_obs


def _score_document(text, tokenizer, obs_model, perf_model, max_positions):
    ids = tokenizer.encode(text, return_tensors="pt")
    if ids.shape[1] < 2:
        raise ValueError("needs at least 2 tokens to score one position")
    # positions 1..T-1 are predictable; cap the model input so at most
    # max_positions of them are scored
    ids = ids[:, : max_positions + 1]
    with torch.no_grad():
        obs_logits = obs_model(ids).logits[0, :-1]
        log_obs = F.log_softmax(obs_logits.double(), dim=-1)
        if perf_model is obs_model:
            p_perf = log_obs.exp()
        else:
            perf_logits = perf_model(ids).logits[0, :-1]
            p_perf = F.softmax(perf_logits.double(), dim=-1)
        targets = ids[0, 1:]
        ce = -log_obs.gather(1, targets.unsqueeze(1)).squeeze(1)
        xce = -(p_perf * log_obs).sum(dim=-1)
    return ce.tolist(), xce.tolist()


def export_series(corpus_file, pair: ModelPairSpec, out_file,
                  manifest_file=None) -> dict:
    """Score every document and write core-format series JSONL.

    Documents that cannot be scored (too short, or inference runs out
    of memory) are skipped with a warning and recorded in the manifest
    skip list. Returns the manifest dict; writes it to manifest_file
    (default: out_file + '.manifest.json').
    """
    from transformers import AutoModelForCausalLM, AutoTokenizer

    docs = load_documents(corpus_file)
    obs_tok = AutoTokenizer.from_pretrained(pair.observer_id)
    perf_tok = AutoTokenizer.from_pretrained(pair.performer_id)
    tok_hash = _check_tokenizers(obs_tok, perf_tok)

    obs_model = AutoModelForCausalLM.from_pretrained(pair.observer_id).eval()
    if pair.performer_id == pair.observer_id:
        perf_model = obs_model
    else:
        perf_model = AutoModelForCausalLM.from_pretrained(pair.performer_id).eval()

    skipped = []
    n_written = 0
    with open(out_file, "w", encoding="utf-8") as fh:
        for doc in docs:
            try:
                ce, xce = _score_document(doc["text"], obs_tok, obs_model,
                                          perf_model, pair.max_positions)
            except (ValueError, torch.cuda.OutOfMemoryError) as exc:
                log.warning("skipping document %r: %s", doc["id"], exc)
                warnings.warn(f"skipping document {doc['id']!r}: {exc}")
                skipped.append({"id": doc["id"], "reason": str(exc)})
                continue
            except RuntimeError as exc:
                if "out of memory" not in str(exc).lower():
                    raise
                log.warning("skipping document %r: %s", doc["id"], exc)
                warnings.warn(f"skipping document {doc['id']!r}: out of memory")
                skipped.append({"id": doc["id"], "reason": "out of memory"})
                continue
            fh.write(
                json.dumps(
                    {
                        "doc_id": str(doc["id"]),
                        "observer": pair.observer_id,
                        "performer": pair.performer_id,
                        "quant_bits": pair.quant_bits,
                        "ce": ce,
                        "xce": xce,
                    }
                )
                + "\n"
            )
            n_written += 1

    manifest = {
        "pair": dataclasses.asdict(pair),
        "tokenizer_sha256": tok_hash,
        "n_documents": len(docs),
        "n_series": n_written,
        "skipped": skipped,
    }
    if manifest_file is None:
        manifest_file = str(out_file) + ".manifest.json"
    with open(manifest_file, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return manifest
