class LmBridgeError(Exception):
    """Base class for exporter errors."""


class SpecError(LmBridgeError):
    """Invalid model-pair or fine-tune configuration."""


class TokenizerMismatchError(LmBridgeError):
    """Observer and performer tokenizers disagree."""


class ClassError(LmBridgeError):
    """Labeled corpus does not contain both classes."""


class CorpusError(LmBridgeError):
    """Corpus file is malformed or missing required fields."""
