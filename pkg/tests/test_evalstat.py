import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mgtd.errors import ClassError, DomainError, EmptyInputError, KeyMismatchError, ShapeError
from mgtd.evalstat import (
    bonferroni,
    bootstrap_ci_f1,
    confusion,
    context_js_sweep,
    degradation_table,
    f1,
    f1_score,
    js_divergence,
    mcnemar,
    mcnemar_from_counts,
    pairwise_table,
    score_histogram,
)
from mgtd.lmscore import NgramModel, score_series
from mgtd.seeding import rng_for


class TestConfusionAndF1:
    def test_hand_counted_confusion(self):
        preds = [1, 1, 0, 0, 1]
        labels = [1, 0, 1, 0, 1]
        c = confusion(preds, labels)
        assert (c.tp, c.fp, c.fn, c.tn) == (2, 1, 1, 1)

    def test_f1_hand_value(self):
        # tp=90, fp=12, fn=10: F1 = 180/202
        c = confusion(
            [1] * 90 + [1] * 12 + [0] * 10 + [0] * 8,
            [1] * 90 + [0] * 12 + [1] * 10 + [0] * 8,
        )
        assert f1(c) == pytest.approx(180 / 202)

    def test_perfect_predictions(self):
        assert f1_score([1, 0, 1], [1, 0, 1]) == 1.0

    def test_no_positives_zero_convention(self):
        assert f1_score([0, 0], [0, 0]) == 0.0

    def test_length_mismatch(self):
        with pytest.raises(ShapeError):
            confusion([1], [1, 0])
        with pytest.raises(ShapeError):
            confusion([], [])

    @given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1)), min_size=1, max_size=60))
    def test_f1_in_unit_interval(self, pairs):
        preds = [p for p, _ in pairs]
        labels = [y for _, y in pairs]
        assert 0.0 <= f1_score(preds, labels) <= 1.0


class TestBootstrap:
    def test_deterministic(self):
        preds = [1, 0, 1, 1, 0, 1, 0, 0, 1, 1]
        labels = [1, 0, 0, 1, 0, 1, 1, 0, 1, 1]
        a = bootstrap_ci_f1(preds, labels, n_bootstrap=500, seed=7)
        b = bootstrap_ci_f1(preds, labels, n_bootstrap=500, seed=7)
        assert a == b

    def test_matches_independent_reimplementation(self):
        # replay the same derived RNG stream through a from-scratch
        # percentile bootstrap and demand identical endpoints
        preds = np.array([1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 1])
        labels = np.array([1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1])
        n_boot, seed, alpha = 300, 11, 0.1
        got = bootstrap_ci_f1(preds.tolist(), labels.tolist(),
                              n_bootstrap=n_boot, alpha=alpha, seed=seed)
        rng = rng_for(seed, "bootstrap")
        stats = []
        for _ in range(n_boot):
            idx = rng.integers(0, len(preds), size=len(preds))
            p, y = preds[idx], labels[idx]
            tp = np.sum((p == 1) & (y == 1))
            fp = np.sum((p == 1) & (y == 0))
            fn = np.sum((p == 0) & (y == 1))
            denom = 2 * tp + fp + fn
            stats.append(2 * tp / denom if denom else 0.0)
        assert got[0] == float(np.percentile(stats, 5))
        assert got[1] == float(np.percentile(stats, 95))

    def test_interval_contains_point_for_stable_preds(self):
        preds = [1, 1, 1, 0, 0, 0] * 10
        labels = [1, 1, 1, 0, 0, 0] * 10
        lo, hi, point = bootstrap_ci_f1(preds, labels, n_bootstrap=200, seed=3)
        assert lo <= point <= hi

    def test_subset_size_changes_width(self):
        rng = np.random.default_rng(0)
        labels = rng.integers(0, 2, size=200).tolist()
        preds = [y if rng.random() < 0.8 else 1 - y for y in labels]
        lo_s, hi_s, _ = bootstrap_ci_f1(preds, labels, n_bootstrap=400, n_subset=20, seed=1)
        lo_f, hi_f, _ = bootstrap_ci_f1(preds, labels, n_bootstrap=400, seed=1)
        assert (hi_s - lo_s) > (hi_f - lo_f)

    def test_empty_rejected(self):
        with pytest.raises(ShapeError):
            bootstrap_ci_f1([], [])


def exact_mcnemar_oracle(b, c):
    """Two-sided exact binomial tail in exact rational arithmetic."""
    n = b + c
    if n == 0:
        return Fraction(1)
    k = min(b, c)
    tail = sum(Fraction(math.comb(n, i)) for i in range(k + 1)) / Fraction(2) ** n
    return min(Fraction(1), 2 * tail)


class TestMcNemar:
    def test_exact_hand_values(self):
        assert mcnemar_from_counts(6, 0, mode="exact") == pytest.approx(0.03125)
        assert mcnemar_from_counts(5, 1, mode="exact") == pytest.approx(0.21875)
        assert mcnemar_from_counts(0, 0) == 1.0

    def test_exact_matches_rational_oracle_for_all_small_counts(self):
        for b in range(0, 21):
            for c in range(0, 21 - b):
                got = mcnemar_from_counts(b, c, mode="exact")
                want = float(exact_mcnemar_oracle(b, c))
                assert got == pytest.approx(want, abs=1e-15), (b, c)

    def test_symmetry(self):
        for b, c in [(3, 7), (0, 9), (12, 2)]:
            assert mcnemar_from_counts(b, c) == mcnemar_from_counts(c, b)

    def test_chi2_continuity_correction(self):
        # b=30, c=10: stat = (20-1)^2/40 = 9.025
        want = math.erfc(math.sqrt(9.025 / 2))
        assert mcnemar_from_counts(30, 10, mode="chi2") == pytest.approx(want)

    def test_auto_mode_switch(self):
        assert mcnemar_from_counts(13, 12) == mcnemar_from_counts(13, 12, mode="exact")
        assert mcnemar_from_counts(13, 13) == mcnemar_from_counts(13, 13, mode="chi2")

    def test_from_predictions(self):
        labels = [1, 1, 1, 1, 0, 0]
        preds_a = [1, 1, 1, 1, 0, 0]  # all correct
        preds_b = [0, 0, 1, 1, 0, 0]  # two wrong
        # b=2 (a right, b wrong), c=0
        assert mcnemar(preds_a, preds_b, labels) == pytest.approx(
            float(exact_mcnemar_oracle(2, 0))
        )

    def test_equal_predictions_p_one(self):
        preds = [1, 0, 1]
        assert mcnemar(preds, preds, [1, 1, 0]) == 1.0

    def test_shape_error(self):
        with pytest.raises(ShapeError):
            mcnemar([1], [1, 0], [1, 0])

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            mcnemar_from_counts(1, 1, mode="bogus")


class TestBonferroni:
    def test_paper_constant(self):
        assert bonferroni(0.1, 21) == pytest.approx(0.1 / 21)
        assert bonferroni(0.1, 21) == pytest.approx(0.0048, abs=5e-5)

    def test_single_test_identity(self):
        assert bonferroni(0.05, 1) == 0.05

    def test_invalid_count(self):
        with pytest.raises(DomainError):
            bonferroni(0.05, 0)


class TestPairwiseTable:
    def make_predictions(self, k, n=30, seed=0):
        rng = np.random.default_rng(seed)
        labels = rng.integers(0, 2, size=n).tolist()
        preds = {
            f"mod{i}": [y if rng.random() < 0.6 + 0.05 * i else 1 - y for y in labels]
            for i in range(k)
        }
        return preds, labels

    @pytest.mark.parametrize("k", [2, 3, 5, 7])
    def test_row_count_is_k_choose_2(self, k):
        preds, labels = self.make_predictions(k)
        rows = pairwise_table(preds, labels)
        assert len(rows) == k * (k - 1) // 2

    def test_sorted_by_abs_f1_diff_descending(self):
        preds, labels = self.make_predictions(5)
        rows = pairwise_table(preds, labels)
        diffs = [abs(r.f1_diff) for r in rows]
        assert diffs == sorted(diffs, reverse=True)

    def test_higher_field(self):
        preds, labels = self.make_predictions(3)
        for r in pairwise_table(preds, labels):
            expected = r.module_a if r.f1_a >= r.f1_b else r.module_b
            assert r.higher == expected

    def test_significance_uses_corrected_threshold(self):
        preds, labels = self.make_predictions(7, n=120, seed=4)
        alpha = 0.1
        threshold = bonferroni(alpha, 21)
        for r in pairwise_table(preds, labels, alpha=alpha):
            assert r.significant == (r.p_value < threshold)

    def test_needs_two_models(self):
        with pytest.raises(ShapeError):
            pairwise_table({"only": [1, 0]}, [1, 0])


class TestJsDivergence:
    def test_frozen_oracle_value(self):
        # mpmath 50-digit oracle for JS([.5,.5],[.9,.1]) in nats
        want = 0.10174922507919668856
        assert js_divergence([0.5, 0.5], [0.9, 0.1]) == pytest.approx(want, abs=1e-15)

    def test_identical_distributions_zero(self):
        assert js_divergence([0.3, 0.7], [0.3, 0.7]) == 0.0

    def test_disjoint_support_ln2(self):
        assert js_divergence([1.0, 0.0], [0.0, 1.0]) == pytest.approx(math.log(2))

    @settings(max_examples=200)
    @given(st.lists(st.floats(1e-6, 1.0), min_size=2, max_size=10),
           st.lists(st.floats(1e-6, 1.0), min_size=2, max_size=10))
    def test_bounds_and_symmetry(self, raw_p, raw_q):
        size = min(len(raw_p), len(raw_q))
        p = np.array(raw_p[:size]) / np.sum(raw_p[:size])
        q = np.array(raw_q[:size]) / np.sum(raw_q[:size])
        js = js_divergence(p, q)
        assert -1e-12 <= js <= math.log(2) + 1e-12
        assert js == pytest.approx(js_divergence(q, p), abs=1e-12)

    def test_unnormalized_rejected(self):
        with pytest.raises(DomainError):
            js_divergence([0.5, 0.4], [0.5, 0.5])

    def test_shape_mismatch_rejected(self):
        with pytest.raises(DomainError):
            js_divergence([1.0], [0.5, 0.5])


class TestScoreHistogram:
    def test_two_bin_split(self):
        h = score_histogram([0.25, 0.75], bins=2, value_range=(0.0, 1.0))
        assert list(h) == [0.5, 0.5]

    def test_out_of_range_clamped_to_edge_bins(self):
        h = score_histogram([-5.0, 5.0], bins=4, value_range=(0.0, 1.0))
        assert h[0] == 0.5 and h[-1] == 0.5

    def test_normalized(self):
        rng = np.random.default_rng(2)
        h = score_histogram(rng.uniform(0.6, 1.4, 100), bins=50, value_range=(0.6, 1.4))
        assert h.sum() == pytest.approx(1.0)

    def test_empty_rejected(self):
        with pytest.raises(EmptyInputError):
            score_histogram([], bins=2, value_range=(0.0, 1.0))


class TestContextJsSweep:
    def make_series(self):
        model = NgramModel.uniform({"a", "b", "c"}, order=1)
        texts = ["a b c " * 40, "c b a " * 40, "a a b " * 40, "b c c " * 40]
        return [score_series(model, model, t, doc_id=str(i)) for i, t in enumerate(texts)]

    def test_requires_both_classes(self):
        series = self.make_series()
        with pytest.raises(ClassError):
            context_js_sweep(series, [1, 1, 1, 1], windows=[8])

    def test_returns_one_entry_per_window(self):
        series = self.make_series()
        out = context_js_sweep(series, [1, 1, 0, 0], windows=[8, 16, 32])
        assert [w for w, _ in out] == [8, 16, 32]
        for _, js in out:
            assert 0.0 <= js <= math.log(2) + 1e-12


class TestDegradationTable:
    def test_paper_anchored_arithmetic(self):
        pre = {"bino": 0.7497, "full": 0.8061}
        post = {"bino": 0.5533, "full": 0.6716}
        rows = degradation_table(pre, post)
        by_name = {r.stacking: r for r in rows}
        assert by_name["bino"].degradation == pytest.approx(0.1964)
        assert by_name["full"].degradation == pytest.approx(0.1345)
        # sorted by degradation descending
        assert rows[0].stacking == "bino"

    def test_key_mismatch(self):
        with pytest.raises(KeyMismatchError):
            degradation_table({"a": 1.0}, {"b": 1.0})
