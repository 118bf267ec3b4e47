"""Dataset model: documents, corpora, JSONL ingestion, deterministic
splits, and the balanced attack-set sampling protocol.

Label convention is fixed throughout the toolkit: 1 = machine-written
(the positive class for F1), 0 = human-written.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    CountError,
    EmptyInputError,
    JoinError,
    LabelError,
    ParseError,
    SchemaError,
)
from .seeding import rng_for

HUMAN = 0
MACHINE = 1


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    label: int
    source: str | None = None

    def __post_init__(self):
        if not self.text.strip():
            raise SchemaError(f"document {self.id!r}: text is empty")
        if self.label not in (HUMAN, MACHINE):
            raise SchemaError(
                f"document {self.id!r}: label must be 0 or 1, got {self.label!r}"
            )


@dataclass(frozen=True)
class Corpus:
    """An ordered, immutable collection of documents with unique ids."""

    documents: tuple[Document, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "documents", tuple(self.documents))
        seen = set()
        for doc in self.documents:
            if doc.id in seen:
                raise SchemaError(f"duplicate document id {doc.id!r}")
            seen.add(doc.id)

    def __len__(self):
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)

    def __getitem__(self, i):
        return self.documents[i]

    def by_id(self, doc_id: str) -> Document:
        for doc in self.documents:
            if doc.id == doc_id:
                return doc
        raise KeyError(doc_id)

    def labels(self) -> list[int]:
        return [d.label for d in self.documents]


@dataclass(frozen=True)
class AttackPair:
    """A machine document together with its paraphrased form."""

    id: str
    original: str
    paraphrased: str
    label: int = MACHINE

    def __post_init__(self):
        if self.label != MACHINE:
            raise LabelError(f"attack pair {self.id!r}: label must be 1")


def load_corpus(path, name: str = "", fmt: str = "jsonl") -> Corpus:
    """Load a corpus from JSONL, one document object per line.

    Required fields: text, label. Optional: id (defaults to the
    1-based line number as a string), source. Unknown fields ignored.
    """
    if fmt != "jsonl":
        raise ValueError(f"unsupported corpus format {fmt!r}")
    docs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path}: malformed JSON at line {lineno}: {exc}")
            if not isinstance(record, dict) or "text" not in record:
                raise SchemaError(f"{path}: line {lineno}: missing 'text' field")
            if "label" not in record:
                raise SchemaError(f"{path}: line {lineno}: missing 'label' field")
            label = record["label"]
            if label not in (HUMAN, MACHINE):
                raise SchemaError(
                    f"{path}: line {lineno}: label must be 0 or 1, got {label!r}"
                )
            docs.append(
                Document(
                    id=str(record.get("id", lineno)),
                    text=record["text"],
                    label=label,
                    source=record.get("source"),
                )
            )
    return Corpus(tuple(docs), name=name or str(path))


def save_corpus(corpus: Corpus, path) -> None:
    """Write a corpus back out as JSONL (text round-trips byte-identically)."""
    with open(path, "w", encoding="utf-8") as fh:
        for doc in corpus:
            record = {"id": doc.id, "text": doc.text, "label": doc.label}
            if doc.source is not None:
                record["source"] = doc.source
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")


def split_corpus(corpus: Corpus, train_fraction: float, seed: int) -> tuple[Corpus, Corpus]:
    """Deterministic shuffled train/test split.

    Train size is floor(train_fraction * N); the two sides partition
    the input exactly.
    """
    if len(corpus) == 0:
        raise EmptyInputError("cannot split an empty corpus")
    if not 0.0 < train_fraction < 1.0:
        raise ValueError(f"train_fraction must be in (0,1), got {train_fraction}")
    n = len(corpus)
    n_train = int(train_fraction * n)
    order = rng_for(seed, "split").permutation(n)
    train_idx = sorted(order[:n_train])
    test_idx = sorted(order[n_train:])
    train = Corpus(tuple(corpus[i] for i in train_idx), name=corpus.name + "/train")
    test = Corpus(tuple(corpus[i] for i in test_idx), name=corpus.name + "/test")
    return train, test


def sample_attack_set(corpus: Corpus, n_machine: int, n_human: int, seed: int) -> Corpus:
    """Sample a balanced evaluation set: n_machine label-1 docs followed
    by n_human label-0 docs, each drawn without replacement."""
    machine = [d for d in corpus if d.label == MACHINE]
    human = [d for d in corpus if d.label == HUMAN]
    if len(machine) < n_machine:
        raise CountError(
            f"requested {n_machine} machine docs but corpus has {len(machine)}"
        )
    if len(human) < n_human:
        raise CountError(f"requested {n_human} human docs but corpus has {len(human)}")
    rng = rng_for(seed, "attack-set")
    machine_pick = [machine[i] for i in sorted(rng.choice(len(machine), size=n_machine, replace=False))]
    human_pick = [human[i] for i in sorted(rng.choice(len(human), size=n_human, replace=False))]
    return Corpus(tuple(machine_pick) + tuple(human_pick), name=corpus.name + "/attack-set")


def load_attack_pairs(path) -> list[AttackPair]:
    """Read attack-pair JSONL: {"id", "original", "paraphrased"} per line."""
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path}: malformed JSON at line {lineno}: {exc}")
            for key in ("id", "original", "paraphrased"):
                if key not in record:
                    raise SchemaError(f"{path}: line {lineno}: missing {key!r} field")
            pairs.append(
                AttackPair(
                    id=str(record["id"]),
                    original=record["original"],
                    paraphrased=record["paraphrased"],
                )
            )
    return pairs


def save_attack_pairs(pairs: list[AttackPair], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for pair in pairs:
            fh.write(
                json.dumps(
                    {"id": pair.id, "original": pair.original, "paraphrased": pair.paraphrased},
                    ensure_ascii=False,
                )
                + "\n"
            )


def pair_attack(originals: Corpus, paraphrased_file) -> list[AttackPair]:
    """Join externally paraphrased records against their machine originals.

    Order follows the paraphrase file. Every record id must name a
    label-1 document in `originals`.
    """
    records = []
    with open(paraphrased_file, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(
                    f"{paraphrased_file}: malformed JSON at line {lineno}: {exc}"
                )
            if "id" not in record or "paraphrased" not in record:
                raise SchemaError(
                    f"{paraphrased_file}: line {lineno}: need 'id' and 'paraphrased'"
                )
            records.append((str(record["id"]), record["paraphrased"]))

    by_id = {doc.id: doc for doc in originals}
    unmatched = [rid for rid, _ in records if rid not in by_id]
    if unmatched:
        raise JoinError(f"paraphrase records with unknown ids: {unmatched}")
    pairs = []
    for rid, paraphrased in records:
        doc = by_id[rid]
        if doc.label != MACHINE:
            raise LabelError(f"paraphrased record {rid!r} pairs a human document")
        pairs.append(AttackPair(id=rid, original=doc.text, paraphrased=paraphrased))
    return pairs
