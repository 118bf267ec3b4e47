"""Deterministic paraphrase-perturbation engine.

A reproducible stand-in for commercial paraphrasers: contraction
expansion, thesaurus-based synonym substitution, filler-phrase removal,
and sentence rotation, applied in that fixed order. Externally
paraphrased datasets can still be joined in via corpus.pair_attack when
fidelity to a real attack matters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .attack_data import CONTRACTIONS, FILLER_PHRASES, SYNONYMS
from .corpus import MACHINE, AttackPair, Corpus
from .errors import LabelError
from .seeding import rng_for
from .textfeat import PUNCTUATION


@dataclass(frozen=True)
class AttackConfig:
    synonym_rate: float = 0.3
    shuffle_sentences: bool = True
    expand_contractions: bool = True
    drop_filler_rate: float = 1.0
    seed: int = 42

    def __post_init__(self):
        for name in ("synonym_rate", "drop_filler_rate"):
            rate = getattr(self, name)
            if not 0.0 <= rate <= 1.0:
                raise ValueError(f"{name} must be in [0,1], got {rate}")

    def is_identity(self) -> bool:
        return (
            self.synonym_rate == 0.0
            and not self.shuffle_sentences
            and not self.expand_contractions
            and self.drop_filler_rate == 0.0
        )


IDENTITY_CONFIG = AttackConfig(
    synonym_rate=0.0, shuffle_sentences=False, expand_contractions=False,
    drop_filler_rate=0.0,
)

_SENTENCE_WITH_TERMINATOR = re.compile(r"[^.!?]*[.!?]+(?:\s+|$)|[^.!?]+$")


def _match_case(replacement: str, original: str) -> str:
    if original.isupper() and len(original) > 1:
        return replacement.upper()
    if original[:1].isupper():
        return replacement[:1].upper() + replacement[1:]
    return replacement


def _split_edges(word: str) -> tuple[str, str, str]:
    """Split a whitespace piece into (leading punct, core, trailing punct)."""
    start, end = 0, len(word)
    while start < end and word[start] in PUNCTUATION:
        start += 1
    while end > start and word[end - 1] in PUNCTUATION:
        end -= 1
    return word[:start], word[start:end], word[end:]


def _expand_contractions(text: str) -> str:
    pieces = text.split(" ")
    out = []
    for piece in pieces:
        lead, core, trail = _split_edges(piece)
        expansion = CONTRACTIONS.get(core.lower())
        if expansion is not None:
            out.append(lead + _match_case(expansion, core) + trail)
        else:
            out.append(piece)
    return " ".join(out)


def _substitute_synonyms(text: str, rate: float, rng) -> str:
    pieces = text.split(" ")
    out = []
    for piece in pieces:
        lead, core, trail = _split_edges(piece)
        synonym = SYNONYMS.get(core.lower())
        # One PRNG draw per eligible token keeps the stream aligned with
        # the token sequence regardless of rate.
        if synonym is not None and rng.random() < rate:
            out.append(lead + _match_case(synonym, core) + trail)
        else:
            out.append(piece)
    return " ".join(out)


def _drop_fillers(text: str, rate: float, rng) -> str:
    for phrase in FILLER_PHRASES:
        pattern = re.compile(
            r"(?:(?<=^)|(?<=[\s(]))" + re.escape(phrase) + r",?\s*",
            re.IGNORECASE,
        )
        while True:
            match = pattern.search(text)
            if match is None:
                break
            if rng.random() < rate:
                text = text[: match.start()] + text[match.end() :]
            else:
                break
    return text


def _rotate_sentences(text: str) -> str:
    sentences = [m.group(0) for m in _SENTENCE_WITH_TERMINATOR.finditer(text) if m.group(0).strip()]
    if len(sentences) < 2:
        return text
    sentences = [s.strip() for s in sentences]
    rotated = sentences[1:] + sentences[:1]
    return " ".join(rotated)


def paraphrase(text: str, config: AttackConfig, doc_position: int = 0) -> str:
    """Apply the perturbation stages in fixed order; deterministic in
    (text, config, doc_position)."""
    if config.is_identity():
        return text
    rng = rng_for(config.seed, "paraphrase", doc_position)
    if config.expand_contractions:
        text = _expand_contractions(text)
    if config.synonym_rate > 0:
        text = _substitute_synonyms(text, config.synonym_rate, rng)
    if config.drop_filler_rate > 0:
        text = _drop_fillers(text, config.drop_filler_rate, rng)
    if config.shuffle_sentences:
        text = _rotate_sentences(text)
    return text


def attack_corpus(corpus: Corpus, config: AttackConfig) -> list[AttackPair]:
    """Paraphrase every (machine-labeled) document. Per-document seeds
    derive from (config.seed, doc id), so subsets attack identically."""
    for doc in corpus:
        if doc.label != MACHINE:
            raise LabelError(f"document {doc.id!r} has label 0; attacks take machine text only")
    pairs = []
    for doc in corpus:
        doc_seed = _doc_position(config, doc.id)
        pairs.append(
            AttackPair(id=doc.id, original=doc.text,
                       paraphrased=paraphrase(doc.text, config, doc_position=doc_seed))
        )
    return pairs


def _doc_position(config: AttackConfig, doc_id: str) -> int:
    # Stable per-document stream index keyed by the id, not list order.
    from .seeding import derive_seed

    return derive_seed(config.seed, "attack-doc", doc_id) % (2**31)
