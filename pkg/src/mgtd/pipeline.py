"""End-to-end experiment orchestration shared by the CLI and the tests.

Everything here is a thin deterministic composition of the library
modules: score all documents, train the 7 stackings, evaluate pre and
post attack, and collect the statistics into a plain-dict report ready
for serialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .attack import AttackConfig, attack_corpus
from .corpus import Corpus, Document
from .ensemble import (
    BinocularsBackend,
    ChannelDeps,
    StackModel,
    enumerate_stackings,
    predict_stack,
    train_stack,
    train_standin,
)
from .evalstat import (
    bootstrap_ci_f1,
    context_js_sweep,
    degradation_table,
    f1_score,
    pairwise_table,
)
from .forest import ForestParams
from .lmscore import DEFAULT_THRESHOLD, NgramModel, score_series


@dataclass(frozen=True)
class EvalParams:
    window: int = 512
    threshold: float = DEFAULT_THRESHOLD
    n_bootstrap: int = 5000
    n_subset: int | None = None
    alpha: float = 0.1
    windows: tuple[int, ...] = (32, 64, 128, 256, 512)
    bins: int = 50
    hist_range: tuple[float, float] = (0.6, 1.4)
    seed: int = 42
    forest: ForestParams = field(default_factory=ForestParams)


def compute_series(observer: NgramModel, performer: NgramModel, corpus: Corpus):
    return [score_series(observer, performer, doc.text, doc_id=doc.id) for doc in corpus]


def build_deps(observer: NgramModel, performer: NgramModel, corpus: Corpus,
               clf_source, params: EvalParams) -> ChannelDeps:
    series = compute_series(observer, performer, corpus)
    backend = BinocularsBackend.from_series(series, window=params.window,
                                            threshold=params.threshold)
    return ChannelDeps(bino_backend=backend, clf_source=clf_source)


def train_all_stacks(train: Corpus, deps: ChannelDeps, params: EvalParams
                     ) -> dict[str, StackModel]:
    models = {}
    for s in enumerate_stackings():
        models[s.name] = train_stack(train, s, deps, params.forest)
    return models


def predict_all_stacks(models: dict[str, StackModel], corpus: Corpus,
                       deps: ChannelDeps) -> dict[str, list[int]]:
    preds = {}
    for name, model in models.items():
        preds[name] = [predict_stack(model, doc, deps)[1] for doc in corpus]
    return preds


def run_compare(train: Corpus, test: Corpus, observer: NgramModel,
                performer: NgramModel, params: EvalParams,
                clf_source=None) -> dict:
    """Train all 7 stackings and report F1, bootstrap CIs, and the 21
    pairwise McNemar comparisons on the test corpus."""
    if clf_source is None:
        clf_source = train_standin(train, seed=params.seed)
    train_deps = build_deps(observer, performer, train, clf_source, params)
    test_deps = build_deps(observer, performer, test, clf_source, params)
    models = train_all_stacks(train, train_deps, params)
    preds = predict_all_stacks(models, test, test_deps)
    labels = test.labels()

    f1_table = [{"stacking": name, "f1": f1_score(p, labels)} for name, p in preds.items()]
    ci_table = []
    for name, p in preds.items():
        lower, upper, point = bootstrap_ci_f1(
            p, labels, n_bootstrap=params.n_bootstrap,
            n_subset=params.n_subset, alpha=params.alpha, seed=params.seed,
        )
        ci_table.append({"stacking": name, "lower": lower, "upper": upper, "point": point})
    pairwise = [
        {
            "module_a": r.module_a, "module_b": r.module_b, "p_value": r.p_value,
            "f1_a": r.f1_a, "f1_b": r.f1_b, "f1_diff": r.f1_diff,
            "higher": r.higher, "significant": r.significant,
        }
        for r in pairwise_table(preds, labels, alpha=params.alpha)
    ]
    return {
        "f1_table": f1_table,
        "ci_table": ci_table,
        "pairwise": pairwise,
        "predictions": preds,
        "models": models,
        "clf_source": clf_source,
    }


def apply_attack(corpus: Corpus, config: AttackConfig) -> Corpus:
    """Replace every machine document's text with its paraphrase; human
    documents pass through unchanged."""
    machine = Corpus(tuple(d for d in corpus if d.label == 1), name=corpus.name)
    pairs = {p.id: p.paraphrased for p in attack_corpus(machine, config)}
    docs = []
    for doc in corpus:
        if doc.label == 1:
            docs.append(Document(id=doc.id, text=pairs[doc.id], label=1, source=doc.source))
        else:
            docs.append(doc)
    return Corpus(tuple(docs), name=corpus.name + "/attacked")


def run_attack_eval(models: dict[str, StackModel], test: Corpus,
                    observer: NgramModel, performer: NgramModel,
                    clf_source, attack_config: AttackConfig,
                    params: EvalParams) -> dict:
    """Evaluate trained stackings pre and post attack and report the
    degradation table."""
    labels = test.labels()
    pre_deps = build_deps(observer, performer, test, clf_source, params)
    pre_preds = predict_all_stacks(models, test, pre_deps)
    pre_f1 = {name: f1_score(p, labels) for name, p in pre_preds.items()}

    attacked = apply_attack(test, attack_config)
    post_deps = build_deps(observer, performer, attacked, clf_source, params)
    post_preds = predict_all_stacks(models, attacked, post_deps)
    post_f1 = {name: f1_score(p, labels) for name, p in post_preds.items()}

    rows = degradation_table(pre_f1, post_f1)
    return {
        "degradation": [
            {"stacking": r.stacking, "f1_pre": r.f1_pre, "f1_post": r.f1_post,
             "degradation": r.degradation}
            for r in rows
        ],
        "pre_predictions": pre_preds,
        "post_predictions": post_preds,
    }


def run_js_sweep(test: Corpus, observer: NgramModel, performer: NgramModel,
                 params: EvalParams) -> list[dict]:
    series = compute_series(observer, performer, test)
    sweep = context_js_sweep(series, test.labels(), list(params.windows),
                             bins=params.bins, value_range=params.hist_range)
    return [{"window": w, "js": js} for w, js in sweep]
