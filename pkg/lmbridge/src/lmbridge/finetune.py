"""Sequence-classifier fine-tuning that emits probability JSONL.

Defaults follow the reference detection setup: learning rate 2e-5,
batch size 16, 4 epochs, binary head. The emitted file has one
{"id", "p_machine"} object per document, consumable by the core
toolkit's classifier channel; a manifest echoes the hyperparameters.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass

import torch
import torch.nn.functional as F

from .errors import ClassError, SpecError
from .export import load_documents


@dataclass(frozen=True)
class FinetuneConfig:
    model_id: str
    learning_rate: float = 2e-5
    batch_size: int = 16
    epochs: int = 4
    max_length: int = 128
    seed: int = 42

    def __post_init__(self):
        if not self.model_id:
            raise SpecError("model_id must be non-empty")
        if self.learning_rate <= 0 or self.batch_size < 1 or self.epochs < 1:
            raise SpecError("learning_rate, batch_size, epochs must be positive")


def _labeled_documents(corpus_file):
    docs = load_documents(corpus_file)
    for doc in docs:
        if "label" not in doc:
            raise ClassError(f"document {doc['id']!r} has no label")
    labels = {doc["label"] for doc in docs}
    if labels != {0, 1}:
        raise ClassError(f"corpus must contain both classes, found labels {sorted(labels)}")
    return docs


def finetune_classifier(corpus_file, config: FinetuneConfig, out_file,
                        manifest_file=None) -> dict:
    """Fine-tune a binary sequence classifier and write p_machine JSONL.

    Returns the manifest dict (hyperparameter echo plus row count);
    writes it to manifest_file (default: out_file + '.manifest.json').
    """
    from transformers import AutoModelForSequenceClassification, AutoTokenizer

    docs = _labeled_documents(corpus_file)
    torch.manual_seed(config.seed)
    tokenizer = AutoTokenizer.from_pretrained(config.model_id)
    model = AutoModelForSequenceClassification.from_pretrained(
        config.model_id, num_labels=2
    )
    if model.config.pad_token_id is None:
        pad = tokenizer.pad_token_id
        if pad is None:
            raise SpecError(f"{config.model_id}: tokenizer defines no pad token")
        model.config.pad_token_id = pad

    def encode(batch_docs):
        return tokenizer(
            [d["text"] for d in batch_docs],
            padding=True,
            truncation=True,
            max_length=config.max_length,
            return_tensors="pt",
        )

    optimizer = torch.optim.AdamW(model.parameters(), lr=config.learning_rate)
    generator = torch.Generator().manual_seed(config.seed)
    model.train()
    for _ in range(config.epochs):
        order = torch.randperm(len(docs), generator=generator).tolist()
        for start in range(0, len(order), config.batch_size):
            batch = [docs[i] for i in order[start : start + config.batch_size]]
            inputs = encode(batch)
            labels = torch.tensor([int(d["label"]) for d in batch])
            loss = model(**inputs, labels=labels).loss
            optimizer.zero_grad()
            loss.backward()
            optimizer.step()

    model.eval()
    with open(out_file, "w", encoding="utf-8") as fh:
        with torch.no_grad():
            for start in range(0, len(docs), config.batch_size):
                batch = docs[start : start + config.batch_size]
                logits = model(**encode(batch)).logits
                probs = F.softmax(logits.double(), dim=-1)[:, 1]
                for doc, p in zip(batch, probs.tolist()):
                    fh.write(json.dumps({"id": str(doc["id"]), "p_machine": p}) + "\n")

    manifest = {
        "config": dataclasses.asdict(config),
        "n_documents": len(docs),
    }
    if manifest_file is None:
        manifest_file = str(out_file) + ".manifest.json"
    with open(manifest_file, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return manifest
