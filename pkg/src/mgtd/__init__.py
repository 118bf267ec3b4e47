"""Machine-generated text detection toolkit.

Channels (stylometric features, cross-perplexity ratio scoring, a
trainable classifier), their 7 random-forest stackings, a paraphrase
attack engine, and the statistical evaluation harness.
"""

from .corpus import AttackPair, Corpus, Document, load_corpus, sample_attack_set, split_corpus
from .ensemble import Stacking, enumerate_stackings
from .evalstat import bonferroni, bootstrap_ci_f1, f1_score, js_divergence, mcnemar
from .lmscore import DEFAULT_THRESHOLD, binoculars_score, ratio_score, train_ngram
from .textfeat import extract_features

__version__ = "0.1.0"

__all__ = [
    "AttackPair", "Corpus", "Document", "load_corpus", "sample_attack_set",
    "split_corpus", "Stacking", "enumerate_stackings", "bonferroni",
    "bootstrap_ci_f1", "f1_score", "js_divergence", "mcnemar",
    "DEFAULT_THRESHOLD", "binoculars_score", "ratio_score", "train_ngram",
    "extract_features", "__version__",
]
