"""
Comparing the seven channel stackings
=====================================

Runs the full comparison protocol on the bundled fixture: train every
stacking of the three channels (text features, stand-in classifier,
score ratio) on the train split, evaluate F1 with bootstrap confidence
intervals on the test split, and test all 21 pairs with exact McNemar
at a Bonferroni-corrected level.
"""

from mgtd.corpus import split_corpus
from mgtd.evalstat import bonferroni
from mgtd.fixture import make_backend_corpora, make_fixture
from mgtd.lmscore import train_ngram
from mgtd.pipeline import EvalParams, run_compare

corpus = make_fixture(seed=42)
train, test = split_corpus(corpus, 0.8, seed=42)

obs_corpus, perf_corpus = make_backend_corpora(seed=42)
observer = train_ngram(obs_corpus, order=2, alpha=0.1, name="observer")
performer = train_ngram(perf_corpus, order=2, alpha=0.1, name="performer")

params = EvalParams(seed=42, n_bootstrap=1000)
result = run_compare(train, test, observer, performer, params)

print("F1 by stacking (90% bootstrap CI)")
for row in sorted(result["ci_table"], key=lambda r: r["stacking"]):
    print(f"  {row['stacking']:<14} {row['point']:.4f}  "
          f"[{row['lower']:.4f}, {row['upper']:.4f}]")

threshold = bonferroni(params.alpha, 21)
print(f"\npairwise McNemar, corrected threshold {threshold:.4f}")
significant = [r for r in result["pairwise"] if r["significant"]]
if not significant:
    print("  no significant pairwise differences on this fixture")
for row in significant:
    print(f"  {row['module_a']} vs {row['module_b']}: p={row['p_value']:.4f}, "
          f"higher={row['higher']}")
