"""Command-line entry point for reproducible detection experiments.

One binary with subcommands: features, lm-train, export-series, score,
stack-train, evaluate, compare, attack, sweep, report. All randomized
steps derive their streams from the single run seed (--seed, or the
MGTD_SEED environment variable), so reruns with identical inputs produce
byte-identical artifacts. Exit codes: 0 ok, 1 runtime error, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import fixture as fixture_mod
from .attack import AttackConfig, attack_corpus
from .corpus import Corpus, load_corpus, save_attack_pairs, split_corpus
from .ensemble import ExternalProbabilities, StandinClassifier, train_standin
from .errors import MgtdError
from .evalstat import bootstrap_ci_f1, f1_score
from .forest import ForestParams
from .lmscore import (
    DEFAULT_THRESHOLD,
    load_model,
    ratio_score,
    read_series,
    save_model,
    train_ngram,
    write_series,
)
from .pipeline import (
    EvalParams,
    build_deps,
    compute_series,
    predict_all_stacks,
    run_compare,
    run_js_sweep,
)
from .report import (
    write_degradation_csv,
    write_js_csv,
    write_report_json,
    write_report_markdown,
)
from .textfeat import extract_features, write_feature_csv


def _default_seed() -> int:
    return int(os.environ.get("MGTD_SEED", "42"))


def _int_list(spec: str) -> list[int]:
    return [int(x) for x in spec.split(",") if x.strip()]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mgtd", description=__doc__)
    parser.add_argument("--config", help="optional TOML file of defaults (flags win)")
    sub = parser.add_subparsers(dest="command", required=True)
    # Kept so _apply_config_file can look up per-command defaults; the top
    # parser doesn't know subcommand argument defaults.
    parser.subparsers_by_command = {}

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", required=True)
        parser.subparsers_by_command[name] = p
        return p

    p = add("features", "extract the five stylometric features to CSV")
    p.add_argument("--corpus", required=True)

    p = add("lm-train", "train an n-gram model from a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--alpha", type=float, default=0.1)
    p.add_argument("--name", default="ngram")

    p = add("export-series", "compute per-token score series for a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--observer", required=True)
    p.add_argument("--performer", required=True)

    p = add("score", "ratio scores and labels from a series file")
    p.add_argument("--series", required=True)
    p.add_argument("--window", type=int, default=512)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)

    p = add("stack-train", "train one stacking's meta-learner")
    p.add_argument("--corpus", required=True)
    p.add_argument("--series", required=True)
    p.add_argument("--stacking", required=True, help="channels, e.g. tf,clf,bino")
    p.add_argument("--probs", help="external classifier probability JSONL")
    p.add_argument("--standin-out", help="where to save the trained stand-in classifier")
    p.add_argument("--window", type=int, default=512)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--n-trees", type=int, default=100)

    p = add("evaluate", "evaluate a stack model (or run the fixture degradation protocol)")
    p.add_argument("--model")
    p.add_argument("--corpus")
    p.add_argument("--series")
    p.add_argument("--probs")
    p.add_argument("--standin")
    p.add_argument("--fixture", action="store_true")
    p.add_argument("--attack-pairs")
    p.add_argument("--n-bootstrap", type=int, default=5000)
    p.add_argument("--n-subset", type=int, default=None)
    p.add_argument("--alpha", type=float, default=0.1)
    p.add_argument("--window", type=int, default=512)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)

    p = add("compare", "train and compare all 7 stackings")
    p.add_argument("--fixture", action="store_true",
                   help="use the bundled synthetic fixture end to end")
    p.add_argument("--corpus")
    p.add_argument("--observer")
    p.add_argument("--performer")
    p.add_argument("--probs")
    p.add_argument("--train-fraction", type=float, default=0.8)
    p.add_argument("--n-bootstrap", type=int, default=5000)
    p.add_argument("--n-subset", type=int, default=None)
    p.add_argument("--alpha", type=float, default=0.1)
    p.add_argument("--window", type=int, default=512)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--n-trees", type=int, default=100)

    p = add("attack", "paraphrase machine documents into attack pairs")
    p.add_argument("--fixture", action="store_true")
    p.add_argument("--corpus")
    p.add_argument("--synonym-rate", type=float, default=0.3)
    p.add_argument("--drop-filler-rate", type=float, default=1.0)
    p.add_argument("--no-shuffle-sentences", action="store_true")
    p.add_argument("--no-expand-contractions", action="store_true")
    p.add_argument("--identity", action="store_true",
                   help="identity attack: output equals input")

    p = add("sweep", "JS divergence between class score histograms per context window")
    p.add_argument("--fixture", action="store_true")
    p.add_argument("--series")
    p.add_argument("--corpus", help="corpus supplying the labels for --series")
    p.add_argument("--windows", default="32,64,128,256,512")
    p.add_argument("--bins", type=int, default=50)
    p.add_argument("--range", default="0.6,1.4")

    p = add("report", "render a JSON report as Markdown")
    p.add_argument("--in", dest="report_in", required=True)

    return parser


def _apply_config_file(parser, args):
    if not args.config:
        return args
    with open(args.config, "rb") as fh:
        table = tomllib.load(fh)
    defaults = dict(table.get("defaults", {}))
    defaults.update(table.get(args.command, {}))
    subparser = parser.subparsers_by_command[args.command]
    for key, value in defaults.items():
        dest = key.replace("-", "_")
        # Flags win: only fill values the command line left at the default.
        if getattr(args, dest, None) in (None, subparser.get_default(dest)):
            setattr(args, dest, value)
    return args


def _config_dict(args) -> dict:
    # Paths of outputs don't influence results and would break the
    # byte-reproducibility of reports written to different locations.
    skip = {"command", "config", "out", "standin_out"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _fixture_setup(seed: int, params: EvalParams):
    """Bundled protocol: fixture corpus, 0.8 split, observer/performer
    bigram models trained on held-out template text."""
    corpus = fixture_mod.make_fixture(seed=seed)
    train, test = split_corpus(corpus, 0.8, seed)
    obs_corpus, perf_corpus = fixture_mod.make_backend_corpora(seed=seed)
    observer = train_ngram(obs_corpus, order=2, alpha=0.1, name="fixture-observer")
    performer = train_ngram(perf_corpus, order=2, alpha=0.1, name="fixture-performer")
    return corpus, train, test, observer, performer


def _attack_config_from_args(args) -> AttackConfig:
    if args.identity:
        return AttackConfig(synonym_rate=0.0, shuffle_sentences=False,
                            expand_contractions=False, drop_filler_rate=0.0,
                            seed=args.seed)
    return AttackConfig(
        synonym_rate=args.synonym_rate,
        shuffle_sentences=not args.no_shuffle_sentences,
        expand_contractions=not args.no_expand_contractions,
        drop_filler_rate=args.drop_filler_rate,
        seed=args.seed,
    )


def cmd_features(args):
    corpus = load_corpus(args.corpus)
    write_feature_csv(
        args.out, ((d.id, extract_features(d.text), d.label) for d in corpus)
    )
    print(f"features: wrote {len(corpus)} rows to {args.out}")


def cmd_lm_train(args):
    corpus = load_corpus(args.corpus)
    model = train_ngram(corpus, order=args.order, alpha=args.alpha, name=args.name)
    save_model(model, args.out)
    print(f"lm-train: order-{args.order} model over {len(model.vocab)} tokens to {args.out}")


def cmd_export_series(args):
    corpus = load_corpus(args.corpus)
    observer = load_model(args.observer)
    performer = load_model(args.performer)
    series = compute_series(observer, performer, corpus)
    write_series(series, args.out)
    print(f"export-series: wrote {len(series)} series to {args.out}")


def cmd_score(args):
    series = read_series(args.series)
    with open(args.out, "w", encoding="utf-8") as fh:
        for s in series:
            result = ratio_score(s, args.window, args.threshold)
            fh.write(json.dumps({"doc_id": s.doc_id, "score": result.score,
                                 "label": result.label}) + "\n")
    print(f"score: wrote {len(series)} predictions to {args.out}")


def cmd_stack_train(args):
    from .ensemble import BinocularsBackend, ChannelDeps, Stacking, train_stack

    corpus = load_corpus(args.corpus)
    stacking = Stacking.parse(args.stacking)
    series = read_series(args.series)
    backend = BinocularsBackend.from_series(series, window=args.window,
                                            threshold=args.threshold)
    clf_source = None
    if stacking.use_clf:
        if args.probs:
            clf_source = ExternalProbabilities.load(args.probs)
        else:
            clf_source = train_standin(corpus, seed=args.seed)
            if args.standin_out:
                with open(args.standin_out, "w", encoding="utf-8") as fh:
                    json.dump(clf_source.to_json(), fh)
    deps = ChannelDeps(bino_backend=backend, clf_source=clf_source)
    params = ForestParams(n_trees=args.n_trees, seed=args.seed)
    model = train_stack(corpus, stacking, deps, params)
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(model.to_json(), fh)
    print(f"stack-train: trained {stacking.name} on {len(corpus)} docs to {args.out}")


def cmd_evaluate(args):
    params = EvalParams(window=args.window, threshold=args.threshold,
                        n_bootstrap=args.n_bootstrap, n_subset=args.n_subset,
                        alpha=args.alpha, seed=args.seed,
                        forest=ForestParams(seed=args.seed))
    config = _config_dict(args)

    if args.fixture:
        # Full 7-stacking degradation protocol on the bundled fixture.
        full, train, test, observer, performer = _fixture_setup(args.seed, params)
        clf_source = train_standin(train, seed=args.seed)
        compare_out = run_compare(train, test, observer, performer, params,
                                  clf_source=clf_source)
        report = {"f1_table": compare_out["f1_table"], "ci_table": compare_out["ci_table"]}
        if args.attack_pairs:
            from .corpus import pair_attack

            # The attack file may cover all fixture machine docs; join
            # against the full set, substitute into the test split.
            machine_full = Corpus(tuple(d for d in full if d.label == 1), name="machine")
            pairs = pair_attack(machine_full, args.attack_pairs)
            by_id = {p.id: p.paraphrased for p in pairs}
            from .corpus import Document

            attacked = Corpus(
                tuple(
                    Document(id=d.id, text=by_id.get(d.id, d.text), label=d.label,
                             source=d.source)
                    for d in test
                ),
                name="attacked",
            )
            labels = test.labels()
            post_deps = build_deps(observer, performer, attacked, clf_source, params)
            post_preds = predict_all_stacks(compare_out["models"], attacked, post_deps)
            pre_f1 = {row["stacking"]: row["f1"] for row in compare_out["f1_table"]}
            post_f1 = {name: f1_score(p, labels) for name, p in post_preds.items()}
            from .evalstat import degradation_table

            report["degradation"] = [
                {"stacking": r.stacking, "f1_pre": r.f1_pre, "f1_post": r.f1_post,
                 "degradation": r.degradation}
                for r in degradation_table(pre_f1, post_f1)
            ]
        write_report_json(report, config, args.out)
        print(f"evaluate: fixture report with {len(report['f1_table'])} stackings to {args.out}")
        return

    if not (args.model and args.corpus and args.series):
        raise MgtdError("evaluate needs --model, --corpus and --series (or --fixture)")
    from .ensemble import BinocularsBackend, ChannelDeps, StackModel, predict_stack

    with open(args.model, encoding="utf-8") as fh:
        model = StackModel.from_json(json.load(fh))
    corpus = load_corpus(args.corpus)
    series = read_series(args.series)
    backend = BinocularsBackend.from_series(series, window=args.window,
                                            threshold=args.threshold)
    clf_source = None
    if model.stacking.use_clf:
        if args.probs:
            clf_source = ExternalProbabilities.load(args.probs)
        elif args.standin:
            with open(args.standin, encoding="utf-8") as fh:
                clf_source = StandinClassifier.from_json(json.load(fh))
        else:
            raise MgtdError("model uses the classifier channel: pass --probs or --standin")
    deps = ChannelDeps(bino_backend=backend, clf_source=clf_source)
    preds = [predict_stack(model, doc, deps)[1] for doc in corpus]
    labels = corpus.labels()
    lower, upper, point = bootstrap_ci_f1(preds, labels, n_bootstrap=args.n_bootstrap,
                                          n_subset=args.n_subset, alpha=args.alpha,
                                          seed=args.seed)
    report = {
        "f1_table": [{"stacking": model.stacking.name, "f1": point}],
        "ci_table": [{"stacking": model.stacking.name, "lower": lower,
                      "upper": upper, "point": point}],
    }
    write_report_json(report, config, args.out)
    print(f"evaluate: {model.stacking.name} F1={point:.4f} CI=({lower:.4f},{upper:.4f})")


def cmd_compare(args):
    params = EvalParams(window=args.window, threshold=args.threshold,
                        n_bootstrap=args.n_bootstrap, n_subset=args.n_subset,
                        alpha=args.alpha, seed=args.seed,
                        forest=ForestParams(n_trees=args.n_trees, seed=args.seed))
    config = _config_dict(args)
    if args.fixture:
        _, train, test, observer, performer = _fixture_setup(args.seed, params)
        clf_source = None
    else:
        if not (args.corpus and args.observer and args.performer):
            raise MgtdError("compare needs --corpus, --observer, --performer (or --fixture)")
        corpus = load_corpus(args.corpus)
        train, test = split_corpus(corpus, args.train_fraction, args.seed)
        observer = load_model(args.observer)
        performer = load_model(args.performer)
        clf_source = ExternalProbabilities.load(args.probs) if args.probs else None
    out = run_compare(train, test, observer, performer, params, clf_source=clf_source)
    report = {"f1_table": out["f1_table"], "ci_table": out["ci_table"],
              "pairwise": out["pairwise"]}
    write_report_json(report, config, args.out)
    best = max(out["f1_table"], key=lambda r: r["f1"])
    print(
        f"compare: {len(out['f1_table'])} stackings, {len(out['pairwise'])} pairwise rows; "
        f"best {best['stacking']} F1={best['f1']:.4f} -> {args.out}"
    )


def cmd_attack(args):
    if args.fixture:
        corpus = fixture_mod.make_fixture(seed=args.seed)
        corpus = Corpus(tuple(d for d in corpus if d.label == 1), name="fixture-machine")
    elif args.corpus:
        corpus = load_corpus(args.corpus)
    else:
        raise MgtdError("attack needs --corpus or --fixture")
    config = _attack_config_from_args(args)
    pairs = attack_corpus(corpus, config)
    save_attack_pairs(pairs, args.out)
    changed = sum(1 for p in pairs if p.paraphrased != p.original)
    print(f"attack: wrote {len(pairs)} pairs ({changed} changed) to {args.out}")


def cmd_sweep(args):
    windows = _int_list(args.windows)
    lo, hi = (float(x) for x in args.range.split(","))
    params = EvalParams(windows=tuple(windows), bins=args.bins, hist_range=(lo, hi),
                        seed=args.seed)
    if args.fixture:
        _, _, _, observer, performer = _fixture_setup(args.seed, params)
        test = fixture_mod.make_fixture(seed=args.seed)
        sweep = run_js_sweep(test, observer, performer, params)
    else:
        if not (args.series and args.corpus):
            raise MgtdError("sweep needs --series and --corpus (or --fixture)")
        series = read_series(args.series)
        corpus = load_corpus(args.corpus)
        labels_by_id = {d.id: d.label for d in corpus}
        from .evalstat import context_js_sweep

        labels = [labels_by_id[s.doc_id] for s in series]
        sweep = [
            {"window": w, "js": js}
            for w, js in context_js_sweep(series, labels, windows, bins=args.bins,
                                          value_range=(lo, hi))
        ]
    config = _config_dict(args)
    if args.out.endswith(".csv"):
        write_js_csv(sweep, args.out)
    else:
        write_report_json({"js_sweep": sweep}, config, args.out)
    print("sweep: " + ", ".join(f"JS({row['window']})={row['js']:.4f}" for row in sweep))


def cmd_report(args):
    with open(args.report_in, encoding="utf-8") as fh:
        payload = json.load(fh)
    config = payload.get("config", {})
    write_report_markdown(payload, config, args.out)
    if "js_sweep" in payload:
        write_js_csv(payload["js_sweep"], args.out + ".js.csv")
    if "degradation" in payload:
        write_degradation_csv(payload["degradation"], args.out + ".degradation.csv")
    print(f"report: rendered {args.report_in} -> {args.out}")


_COMMANDS = {
    "features": cmd_features,
    "lm-train": cmd_lm_train,
    "export-series": cmd_export_series,
    "score": cmd_score,
    "stack-train": cmd_stack_train,
    "evaluate": cmd_evaluate,
    "compare": cmd_compare,
    "attack": cmd_attack,
    "sweep": cmd_sweep,
    "report": cmd_report,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args = _apply_config_file(parser, args)
    if getattr(args, "seed", None) is None:
        args.seed = _default_seed()
    try:
        _COMMANDS[args.command](args)
    except MgtdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
