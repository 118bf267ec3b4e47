import math

from hypothesis import given, settings
from hypothesis import strategies as st

from mgtd.textfeat import (
    STOPWORDS,
    TokenList,
    avg_word_length,
    extract_features,
    lexical_diversity,
    punctuation_frequency,
    sentence_length_stddev,
    split_sentences,
    stopword_ratio,
    tokenize,
    write_feature_csv,
)


class TestTokenize:
    def test_basic(self):
        t = tokenize("The cat sat.")
        assert t.tokens == ("the", "cat", "sat")
        assert t.punct_count == 1

    def test_empty(self):
        t = tokenize("")
        assert t.tokens == ()
        assert t.punct_count == 0

    def test_two_marks(self):
        t = tokenize("Hi, there!")
        assert t.tokens == ("hi", "there")
        assert t.punct_count == 2

    def test_pure_punctuation_piece_dropped(self):
        t = tokenize("a --- b")
        assert t.tokens == ("a", "b")
        assert t.punct_count == 3

    def test_interior_apostrophe_kept(self):
        assert tokenize("don't stop").tokens == ("don't", "stop")

    def test_curly_quotes_stripped(self):
        t = tokenize("“quoted”")
        assert t.tokens == ("quoted",)
        assert t.punct_count == 2


class TestSplitSentences:
    def test_three(self):
        assert split_sentences("A b. C d! E") == ["A b", "C d", "E"]

    def test_no_terminator(self):
        assert split_sentences("no terminator") == ["no terminator"]

    def test_empty(self):
        assert split_sentences("") == []

    def test_ellipsis_is_one_boundary(self):
        assert split_sentences("Wait... what? ok.") == ["Wait", "what", "ok"]


class TestMetrics:
    def test_awl(self):
        assert avg_word_length(TokenList(("the", "cat", "sat"), 0)) == 3.0
        assert avg_word_length(TokenList((), 0)) == 0.0
        assert avg_word_length(TokenList(("a", "abc"), 0)) == 2.0

    def test_lexdiv(self):
        assert lexical_diversity(TokenList(("a", "a", "a"), 0)) == 1 / 3
        assert lexical_diversity(TokenList(("a", "b", "c"), 0)) == 1.0
        assert lexical_diversity(TokenList((), 0)) == 0.0

    def test_punct_freq(self):
        assert punctuation_frequency(tokenize("Hi, there!")) == 1.0
        assert punctuation_frequency(tokenize("no punct here")) == 0.0
        assert punctuation_frequency(tokenize("!!!")) == 0.0

    def test_sentence_stddev(self):
        assert sentence_length_stddev("just one sentence") == 0.0
        # sentences of 3 and 5 tokens: population std of {3,5} = 1.0
        assert sentence_length_stddev("a b c. d e f g h.") == 1.0
        assert sentence_length_stddev("a b c d. e f g h. i j k l.") == 0.0

    def test_stopword_ratio(self):
        assert stopword_ratio(TokenList(("the", "cat", "sat"), 0)) == 1 / 3
        assert stopword_ratio(TokenList(("the", "a", "of"), 0)) == 1.0
        assert stopword_ratio(TokenList((), 0)) == 0.0

    def test_stopword_list_size(self):
        assert len(STOPWORDS) == 179


class TestExtractFeatures:
    def test_composition(self):
        f = extract_features("The cat sat.")
        assert f.as_tuple() == (3.0, 1.0, 1 / 3, 0.0, 1 / 3)

    def test_empty(self):
        assert extract_features("").as_tuple() == (0.0, 0.0, 0.0, 0.0, 0.0)

    def test_purity(self):
        text = "Some repeated text, with punctuation! And more."
        assert extract_features(text) == extract_features(text)

    def test_case_invariance(self):
        f1 = extract_features("The Cat and the DOG.")
        f2 = extract_features("the cat and the dog.")
        assert f1.lexical_diversity == f2.lexical_diversity
        assert f1.stopword_ratio == f2.stopword_ratio

    def test_duplication_invariance(self):
        text = "The quick fox jumped over a lazy dog"
        doubled = text + ". " + text
        f1, f2 = extract_features(text), extract_features(doubled)
        # Ratios over the doubled token multiset are unchanged. The
        # type-token ratio is deliberately NOT asserted here: doubling
        # the text halves it by definition.
        assert abs(f1.avg_word_length - f2.avg_word_length) < 1e-12
        assert abs(f1.stopword_ratio - f2.stopword_ratio) < 1e-12

    @given(st.text(max_size=400))
    @settings(max_examples=200, deadline=None)
    def test_range_invariants_fuzz(self, text):
        f = extract_features(text)
        for v in f.as_tuple():
            assert math.isfinite(v)
        assert 0.0 <= f.lexical_diversity <= 1.0
        assert 0.0 <= f.stopword_ratio <= 1.0
        assert f.punctuation_frequency >= 0.0
        assert f.sentence_length_stddev >= 0.0
        assert f.avg_word_length >= 0.0


def test_feature_csv(tmp_path):
    path = tmp_path / "f.csv"
    rows = [("d1", extract_features("The cat sat."), 1)]
    write_feature_csv(path, rows)
    lines = path.read_text().splitlines()
    assert lines[0] == "id,awl,lexdiv,punct,slstd,stopratio,label"
    assert lines[1] == "d1,3,1,0.333333333,0,0.333333333,1"
