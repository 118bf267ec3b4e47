import json

import numpy as np
import pytest

from mgtd.corpus import Corpus, Document
from mgtd.ensemble import (
    BinocularsBackend,
    ChannelDeps,
    ChannelOutputs,
    ExternalProbabilities,
    Stacking,
    StackModel,
    StandinClassifier,
    assemble_vector,
    channel_outputs,
    enumerate_stackings,
    predict_stack,
    train_stack,
    train_standin,
)
from mgtd.errors import AssemblyError, ClassError, LookupError_
from mgtd.forest import ForestParams
from mgtd.lmscore import NgramModel, score_series
from mgtd.textfeat import extract_features


def separable_corpus(n=10, prefix=""):
    docs = []
    for i in range(n):
        docs.append(Document(id=f"{prefix}a{i}", text="aaaa aaab aaba " * 8 + str(i), label=1))
        docs.append(Document(id=f"{prefix}z{i}", text="zzzz zzzy zzyz " * 8 + str(i), label=0))
    return Corpus(tuple(docs))


class TestEnumerateStackings:
    def test_exactly_seven(self):
        assert len(enumerate_stackings()) == 7

    def test_pairwise_distinct(self):
        stackings = enumerate_stackings()
        assert len({s.name for s in stackings}) == 7

    def test_every_entry_nonempty(self):
        for s in enumerate_stackings():
            assert s.use_tf or s.use_clf or s.use_bino

    def test_empty_stacking_rejected(self):
        with pytest.raises(ValueError):
            Stacking(False, False, False)

    def test_parse(self):
        s = Stacking.parse("tf,clf,bino")
        assert s.name == "tf+clf+bino"
        assert Stacking.parse("bino").dim == 1


class TestStandinClassifier:
    def test_separable_fixture_heldout_accuracy(self):
        train = separable_corpus(10, "train")
        test = separable_corpus(5, "test")
        clf = train_standin(train, seed=42)
        correct = sum(
            1 for d in test if (clf.predict_proba(d) >= 0.5) == (d.label == 1)
        )
        assert correct == len(test)

    def test_deterministic_weights(self):
        corpus = separable_corpus(4)
        c1 = train_standin(corpus, seed=7)
        c2 = train_standin(corpus, seed=7)
        assert np.array_equal(c1.weights, c2.weights)
        assert c1.bias == c2.bias

    def test_single_class_error(self):
        docs = tuple(Document(id=str(i), text=f"text {i}", label=1) for i in range(4))
        with pytest.raises(ClassError):
            train_standin(Corpus(docs))

    def test_output_strictly_in_open_interval(self):
        corpus = separable_corpus(6)
        clf = train_standin(corpus, epochs=20, seed=1)
        for d in corpus:
            p = clf.predict_proba(d)
            assert 0.0 < p < 1.0

    def test_serialization_roundtrip(self, tmp_path):
        clf = train_standin(separable_corpus(3), seed=5)
        path = tmp_path / "clf.json"
        path.write_text(json.dumps(clf.to_json()))
        loaded = StandinClassifier.from_json(json.loads(path.read_text()))
        doc = Document(id="q", text="aaaa aaab probe", label=1)
        assert loaded.predict_proba(doc) == clf.predict_proba(doc)


def make_backend(corpus, window=16):
    uni = NgramModel.uniform({"aaaa", "aaab", "aaba", "zzzz", "zzzy", "zzyz"}, order=1)
    series = [score_series(uni, uni, d.text, doc_id=d.id) for d in corpus]
    return BinocularsBackend.from_series(series, window=window)


class TestChannelOutputs:
    def test_all_channels_eight_values(self):
        corpus = separable_corpus(3)
        clf = train_standin(corpus, seed=1)
        backend = make_backend(corpus)
        doc = corpus[0]
        ch = channel_outputs(doc, tf_on=True, bino_backend=backend, clf_source=clf)
        vec = assemble_vector(ch, Stacking(True, True, True))
        assert vec.shape == (8,)

    def test_tf_only(self):
        doc = Document(id="1", text="Some text here.", label=0)
        ch = channel_outputs(doc, tf_on=True)
        assert ch.binoculars is None and ch.classifier_prob is None
        assert ch.text_features == extract_features(doc.text)

    def test_missing_series_lookup_error(self):
        corpus = separable_corpus(2)
        backend = make_backend(corpus)
        stranger = Document(id="nope", text="unseen doc", label=0)
        with pytest.raises(LookupError_, match="nope"):
            channel_outputs(stranger, tf_on=False, bino_backend=backend)

    def test_missing_external_probability(self):
        probs = ExternalProbabilities({"a": 0.9})
        doc = Document(id="b", text="text", label=0)
        with pytest.raises(LookupError_, match="b"):
            channel_outputs(doc, tf_on=False, clf_source=probs)

    def test_label_prob_consistency(self):
        probs = ExternalProbabilities({"a": 0.5, "b": 0.49})
        ch = channel_outputs(Document(id="a", text="t", label=0), clf_source=probs)
        assert ch.classifier_label == 1
        ch = channel_outputs(Document(id="b", text="t", label=0), clf_source=probs)
        assert ch.classifier_label == 0

    def test_at_least_one_channel(self):
        with pytest.raises(ValueError):
            ChannelOutputs()


class TestAssembleVector:
    def test_dimensions(self):
        feats = extract_features("The cat sat.")
        ch = ChannelOutputs(text_features=feats, binoculars=0.8,
                            classifier_prob=0.9, classifier_label=1)
        assert assemble_vector(ch, Stacking(True, True, True)).shape == (8,)
        assert assemble_vector(ch, Stacking(False, False, True)).shape == (1,)
        assert assemble_vector(ch, Stacking(True, True, False)).shape == (7,)

    def test_canonical_order(self):
        feats = extract_features("The cat sat.")
        ch = ChannelOutputs(text_features=feats, binoculars=0.77,
                            classifier_prob=0.9, classifier_label=1)
        vec = assemble_vector(ch, Stacking(True, True, True))
        assert tuple(vec[:5]) == feats.as_tuple()
        assert vec[5] == 0.9 and vec[6] == 1.0 and vec[7] == 0.77

    def test_channel_independence(self):
        feats = extract_features("Words and more words.")
        ch = ChannelOutputs(text_features=feats, binoculars=1.1)
        with_bino = assemble_vector(ch, Stacking(True, False, True))
        without = assemble_vector(ch, Stacking(True, False, False))
        assert np.array_equal(with_bino[:5], without)

    def test_missing_channel_assembly_error(self):
        ch = ChannelOutputs(text_features=extract_features("x y"))
        with pytest.raises(AssemblyError):
            assemble_vector(ch, Stacking(True, False, True))


class TestStackTraining:
    def test_tf_stack_separates_fixture(self):
        # stylometrically disjoint classes: short uniform sentences vs
        # long varied ones
        docs = []
        for i in range(12):
            docs.append(Document(id=f"m{i}", text="Word word word. " * 10, label=1))
            docs.append(Document(
                id=f"h{i}",
                text=f"Actually quite a very long and rambling sentence number {i}, "
                     "with plenty of variety! Short one. And then another extended "
                     "meandering thought follows here with even more words trailing.",
                label=0,
            ))
        corpus = Corpus(tuple(docs))
        deps = ChannelDeps()
        model = train_stack(corpus, Stacking(True, False, False), deps,
                            ForestParams(n_trees=20, seed=42))
        preds = [predict_stack(model, d, deps)[1] for d in corpus]
        from mgtd.evalstat import f1_score

        assert f1_score(preds, corpus.labels()) >= 0.9

    def test_training_deterministic(self):
        corpus = separable_corpus(6)
        clf = train_standin(corpus, seed=2)
        backend = make_backend(corpus)
        deps = ChannelDeps(bino_backend=backend, clf_source=clf)
        params = ForestParams(n_trees=10, seed=5)
        m1 = train_stack(corpus, Stacking(True, True, True), deps, params)
        m2 = train_stack(corpus, Stacking(True, True, True), deps, params)
        for d in corpus:
            assert predict_stack(m1, d, deps) == predict_stack(m2, d, deps)

    def test_missing_backend_assembly_error(self):
        corpus = separable_corpus(2)
        with pytest.raises(AssemblyError):
            train_stack(corpus, Stacking(False, False, True), ChannelDeps(),
                        ForestParams(n_trees=1))

    def test_predict_threshold_boundary(self):
        corpus = separable_corpus(6)
        deps = ChannelDeps()
        model = train_stack(corpus, Stacking(True, False, False), deps,
                            ForestParams(n_trees=4, seed=1))
        for d in corpus:
            prob, label = predict_stack(model, d, deps)
            assert label == (1 if prob >= 0.5 else 0)

    def test_stack_model_roundtrip(self, tmp_path):
        corpus = separable_corpus(4)
        deps = ChannelDeps()
        model = train_stack(corpus, Stacking(True, False, False), deps,
                            ForestParams(n_trees=3, seed=1))
        data = json.dumps(model.to_json())
        loaded = StackModel.from_json(json.loads(data))
        for d in corpus:
            assert predict_stack(loaded, d, deps) == predict_stack(model, d, deps)


class TestExternalProbabilities:
    def test_load_and_precedence_format(self, tmp_path):
        path = tmp_path / "probs.jsonl"
        path.write_text('{"id": "a", "p_machine": 0.75}\n')
        probs = ExternalProbabilities.load(path)
        assert probs.predict_proba(Document(id="a", text="t", label=1)) == 0.75
