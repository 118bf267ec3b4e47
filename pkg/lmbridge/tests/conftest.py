"""Builds tiny random-weight model pairs locally so tests run offline.

The models are GPT-2-architecture with ~2 layers and a 40-word
vocabulary; weights are random but deterministic (fixed torch seed).
Random weights are fine: every property under test (format conformance,
self-pair entropy identity, metadata pass-through) holds for any causal
LM.
"""

import json

import pytest
import torch

WORDS = [f"tok{i}" for i in range(36)]
SPECIALS = ["<unk>", "<pad>"]


def _build_tokenizer(tmp_dir, vocab_words):
    from tokenizers import Tokenizer, models, pre_tokenizers
    from transformers import PreTrainedTokenizerFast

    vocab = {w: i for i, w in enumerate(SPECIALS + list(vocab_words))}
    tok = Tokenizer(models.WordLevel(vocab, unk_token="<unk>"))
    tok.pre_tokenizer = pre_tokenizers.WhitespaceSplit()
    fast = PreTrainedTokenizerFast(
        tokenizer_object=tok, unk_token="<unk>", pad_token="<pad>"
    )
    fast.save_pretrained(tmp_dir)
    return fast


def _build_causal_lm(tmp_dir, vocab_size, seed):
    from transformers import GPT2Config, GPT2LMHeadModel

    torch.manual_seed(seed)
    config = GPT2Config(
        vocab_size=vocab_size, n_positions=64, n_embd=32, n_layer=2, n_head=2
    )
    model = GPT2LMHeadModel(config)
    model.save_pretrained(tmp_dir)


@pytest.fixture(scope="session")
def model_pair_dirs(tmp_path_factory):
    """Two tiny causal LMs sharing one tokenizer; returns (observer_dir,
    performer_dir) as strings usable as model identifiers."""
    obs_dir = tmp_path_factory.mktemp("observer")
    perf_dir = tmp_path_factory.mktemp("performer")
    for d, seed in ((obs_dir, 1), (perf_dir, 2)):
        _build_tokenizer(str(d), WORDS)
        _build_causal_lm(str(d), len(SPECIALS) + len(WORDS), seed)
    return str(obs_dir), str(perf_dir)


@pytest.fixture(scope="session")
def mismatched_model_dir(tmp_path_factory):
    """A model whose tokenizer vocabulary differs from the pair's."""
    d = tmp_path_factory.mktemp("mismatched")
    other_words = [f"alt{i}" for i in range(36)]
    _build_tokenizer(str(d), other_words)
    _build_causal_lm(str(d), len(SPECIALS) + len(other_words), 3)
    return str(d)


@pytest.fixture(scope="session")
def tiny_encoder_dir(tmp_path_factory):
    """Tiny random-weight masked-LM-style encoder for classification."""
    from transformers import RobertaConfig, RobertaForSequenceClassification

    d = tmp_path_factory.mktemp("encoder")
    _build_tokenizer(str(d), WORDS)
    torch.manual_seed(4)
    config = RobertaConfig(
        vocab_size=len(SPECIALS) + len(WORDS),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=130,
        pad_token_id=1,
    )
    RobertaForSequenceClassification(config).save_pretrained(str(d))
    return str(d)


def make_corpus(path, n_docs=10, tokens_per_doc=30, labeled=False, seed=0):
    import numpy as np

    rng = np.random.default_rng(seed)
    with open(path, "w", encoding="utf-8") as fh:
        for i in range(n_docs):
            words = rng.choice(WORDS, size=tokens_per_doc)
            row = {"id": f"d{i}", "text": " ".join(words)}
            if labeled:
                row["label"] = i % 2
            fh.write(json.dumps(row) + "\n")
    return path


@pytest.fixture
def corpus_factory():
    return make_corpus


@pytest.fixture
def corpus_file(tmp_path):
    return make_corpus(tmp_path / "corpus.jsonl", n_docs=10)


@pytest.fixture
def labeled_corpus_file(tmp_path):
    return make_corpus(tmp_path / "labeled.jsonl", n_docs=20, labeled=True)
