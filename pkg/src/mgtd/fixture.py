"""Bundled synthetic corpus with designed human/machine separation.

The fixture exists so the full 7-stacking comparison, the context-window
sweep, and the attack experiments run end to end in seconds with no
external data or GPU:

- "machine-styled" documents are built from a small set of 12-token
  templates with one varying slot, giving uniform sentence lengths, low
  lexical diversity, and n-gram statistics a model trained on held-out
  template text predicts well (low observer cross-entropy).
- "human-styled" documents draw varied-length sentences from a large
  word pool with mixed punctuation, giving high sentence-length spread,
  high type-token ratio, and high observer cross-entropy.

Two extra template-text corpora (disjoint samples from the same
generator) train the observer and performer models, mirroring the
closely-related-model-pair setup.

FIXTURE_MANIFEST pins expected values observed on the first run of the
bundled protocol at seed 42; they are regression anchors, not claims
about any external dataset.
"""

from __future__ import annotations

from .attack_data import FILLER_PHRASES
from .corpus import Corpus, Document
from .seeding import rng_for

# One varying slot per template keeps template text predictable while
# leaving enough vocabulary for bigram training. Words are deliberately
# drawn from the attack engine's synonym table so paraphrasing moves
# the text off the trained n-gram support.
_TEMPLATES = [
    "the system will process the {} data and show the final result",
    "this method can improve the {} model and reduce the error rate",
    "the new approach will change the {} process in a significant way",
    "we find that the {} method can increase the overall performance",
    "the model will use the {} information to make a good decision",
    "this result can help the {} system to reach the main goal",
    "the process will continue until the {} value is small enough",
    "we show that the {} approach can give a strong improvement",
    "the method will compare the {} result with the common baseline",
    "this system can learn the {} pattern from the large dataset",
    "the final answer will depend on the {} level of the input",
    "we use the {} technique to measure the effect of the change",
]

_SLOT_WORDS = [
    "quick", "new", "simple", "important", "common", "main",
    "first", "last", "whole", "strong", "clear", "basic",
]

# A handful of templates open with a filler phrase so the filler-removal
# attack stage has something to delete.
_FILLERS = FILLER_PHRASES[:6]

_HUMAN_POOL = """
morning river whispered beneath crooked lanterns while distant thunder
rolled across violet hills an elderly fisherman mended torn nets humming
forgotten ballads children chased copper leaves down cobblestone alleys
where bakeries exhaled cinnamon warmth travelers swapped rumors about
mountain passes snowed shut since autumn her grandmother kept pressed
flowers inside heavy dictionaries noting each bloom's origin stubborn
goats wandered terraced vineyards ignoring shepherd whistles midnight
trains rattled past shuttered stations carrying mail nobody remembered
sending philosophers argued cheerfully over burnt coffee quoting half
remembered proverbs sailors tattooed constellations onto weathered
forearms believing stars guarded sleep museums displayed cracked amphorae
beside velvet ropes curators dusting labels describing vanished empires
gardens overflowed with rosemary foxglove nettles bees staggering drunk
on pollen carpenters planed oak boards until shavings curled like
question marks librarians stamped due dates onto yellowed cards sighing
at dog eared margins storms stripped slate tiles from chapel roofs
organists practicing fugues regardless comets smeared silver across
frozen marshes astronomers scribbling coordinates with numb fingers
orchards sagged under bruised apples cider presses groaning through
harvest evenings clockmakers adjusted brass gears muttering about
pendulums and patience fiddlers coaxed reels from cracked violins boots
stomping sawdust floors lighthouse keepers logged fog horns wrecks and
gull counts in leather journals weavers knotted crimson wool into rugs
depicting floods famines weddings blacksmiths quenched glowing horseshoes
steam hissing like gossip
""".split()


def _template_sentence(rng) -> str:
    template = _TEMPLATES[int(rng.integers(len(_TEMPLATES)))]
    slot = _SLOT_WORDS[int(rng.integers(len(_SLOT_WORDS)))]
    return template.format(slot)


def _noisy_sentence(rng, length: int) -> str:
    words = [_HUMAN_POOL[int(rng.integers(len(_HUMAN_POOL)))] for _ in range(length)]
    if length > 8 and rng.random() < 0.6:
        comma_at = int(rng.integers(2, length - 2))
        words[comma_at] = words[comma_at] + ","
    return " ".join(words)


# Cross-class noise rates. Without them both classes' score histograms
# are fully disjoint at every window and the window sweep is flat at
# ln 2; with them, short-window means overlap while long-window means
# still separate, the direction the sweep is meant to exhibit.
_MACHINE_NOISE_RATE = 0.35   # chance a machine sentence swaps words for pool words
_MACHINE_NOISE_WORDS = (2, 6)
_HUMAN_TEMPLATE_RATE = 0.30  # chance a human sentence is a template sentence


def _machine_doc(rng, doc_tokens: int) -> str:
    sentences = []
    total = 0
    while total < doc_tokens:
        sentence = _template_sentence(rng)
        if rng.random() < _MACHINE_NOISE_RATE:
            words = sentence.split()
            k = int(rng.integers(*_MACHINE_NOISE_WORDS))
            for _ in range(k):
                pos = int(rng.integers(len(words)))
                words[pos] = _HUMAN_POOL[int(rng.integers(len(_HUMAN_POOL)))]
            sentence = " ".join(words)
        if rng.random() < 0.15:
            sentence = _FILLERS[int(rng.integers(len(_FILLERS)))] + " " + sentence
        sentences.append(sentence.capitalize() + ".")
        total += len(sentence.split())
    return " ".join(sentences)


def _human_doc(rng, doc_tokens: int) -> str:
    sentences = []
    total = 0
    while total < doc_tokens:
        if rng.random() < _HUMAN_TEMPLATE_RATE:
            sentence = _template_sentence(rng)
            length = len(sentence.split())
        else:
            length = int(rng.integers(4, 29))
            sentence = _noisy_sentence(rng, length)
        terminator = [".", "!", "?"][int(rng.integers(3))] if rng.random() < 0.4 else "."
        sentences.append(sentence.capitalize() + terminator)
        total += length
    return " ".join(sentences)


def make_fixture(seed: int = 42, n_per_class: int = 60, doc_tokens: int = 600) -> Corpus:
    """The 2*n_per_class evaluation corpus: machine-styled docs first
    (label 1), then human-styled (label 0)."""
    rng = rng_for(seed, "fixture")
    docs = []
    for i in range(n_per_class):
        docs.append(Document(id=f"m{i:03d}", text=_machine_doc(rng, doc_tokens),
                             label=1, source="fixture-machine"))
    for i in range(n_per_class):
        docs.append(Document(id=f"h{i:03d}", text=_human_doc(rng, doc_tokens),
                             label=0, source="fixture-human"))
    return Corpus(tuple(docs), name=f"fixture-{seed}")


def make_backend_corpora(seed: int = 42, n_docs: int = 40, doc_tokens: int = 400
                         ) -> tuple[Corpus, Corpus]:
    """Disjoint template-text samples for training the observer and
    performer n-gram models."""
    rng_obs = rng_for(seed, "fixture-observer")
    rng_perf = rng_for(seed, "fixture-performer")
    obs = Corpus(
        tuple(
            Document(id=f"obs{i:03d}", text=_machine_doc(rng_obs, doc_tokens), label=1)
            for i in range(n_docs)
        ),
        name="fixture-observer-train",
    )
    perf = Corpus(
        tuple(
            Document(id=f"perf{i:03d}", text=_machine_doc(rng_perf, doc_tokens), label=1)
            for i in range(n_docs)
        ),
        name="fixture-performer-train",
    )
    return obs, perf


# Values observed on the first run of the bundled protocol (seed 42,
# default parameters); see tests/test_acceptance.py. Tag: DERIVED.
FIXTURE_MANIFEST = {
    "seed": 42,
    "n_docs": 120,
    "split": [96, 24],
    "windows": [32, 64, 128, 256, 512],
    "expected": {
        # DERIVED: pinned from the first run of run_compare on the
        # bundled fixture (seed 42, bigram backends, alpha 0.1).
        "f1": {
            "tf": 1.0, "clf": 1.0, "bino": 1.0, "tf+clf": 1.0,
            "tf+bino": 1.0, "clf+bino": 1.0, "tf+clf+bino": 1.0,
        },
        "all_channel_f1": 1.0,
        # DERIVED: JS divergence per window, same run, 4 decimals.
        "js_sweep": {32: 0.4554, 64: 0.5140, 128: 0.6448, 256: 0.6744, 512: 0.6931},
        # DERIVED: default AttackConfig degradation of the bino-only stack.
        "bino_degradation": 1.0,
    },
}
