"""Real-model bridge: exports token score series from a causal-LM pair
and classifier probabilities from a fine-tuned binary head, in the core
detection toolkit's file formats."""

from .errors import (
    ClassError,
    CorpusError,
    LmBridgeError,
    SpecError,
    TokenizerMismatchError,
)
from .export import ModelPairSpec, export_series, load_documents, tokenizer_hash
from .finetune import FinetuneConfig, finetune_classifier

__all__ = [
    "ClassError",
    "CorpusError",
    "FinetuneConfig",
    "LmBridgeError",
    "ModelPairSpec",
    "SpecError",
    "TokenizerMismatchError",
    "export_series",
    "finetune_classifier",
    "load_documents",
    "tokenizer_hash",
]
