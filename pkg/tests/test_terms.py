import math
import random
from collections import Counter

import numpy as np
import pytest

from snaplens.corpus import tokenize
from snaplens.errors import EmptyCorpus, MissingScore
from snaplens.sentiment import DocumentScore
from snaplens.terms import (TermEntry, bigram_collocations, lda_fit,
                            load_stopwords, tfidf, wordcloud_terms)

from conftest import make_doc

NO_STOP = frozenset()


def score_for(doc, weight=1.0):
    return DocumentScore(doc.id, 0.0, 0.0, weight, doc.published_at)


class TestTfidf:
    def test_term_in_all_docs_scores_zero(self):
        docs = [make_doc(doc_id="d1", text="alpha beta"),
                make_doc(doc_id="d2", text="alpha gamma")]
        scores = tfidf(docs, stopwords=NO_STOP)
        assert scores[("d1", "alpha")] == 0.0
        assert scores[("d2", "alpha")] == 0.0

    def test_hand_formula(self):
        docs = [make_doc(doc_id="d1", text="snap snap news"),
                make_doc(doc_id="d2", text="other words here")]
        scores = tfidf(docs, stopwords=NO_STOP)
        assert scores[("d1", "snap")] == pytest.approx(2 * math.log(2), abs=1e-4)

    def test_stopwords_removed(self):
        docs = [make_doc(doc_id="d1", text="the program"),
                make_doc(doc_id="d2", text="some words")]
        scores = tfidf(docs)
        assert ("d1", "the") not in scores
        assert ("d1", "program") in scores

    def test_nonnegative_and_zero_iff_df_equals_n(self):
        rng = random.Random(8)
        vocab = [f"w{j}" for j in range(10)]
        docs = [make_doc(doc_id=f"d{i}",
                         text=" ".join(rng.choice(vocab) for _ in range(12)))
                for i in range(6)]
        scores = tfidf(docs, stopwords=NO_STOP)
        df = Counter()
        for doc in docs:
            df.update({t.norm for t in tokenize(doc.text)})
        for (doc_id, term), value in scores.items():
            assert value >= 0.0
            assert (value == 0.0) == (df[term] == len(docs))

    def test_empty_corpus_rejected(self):
        with pytest.raises(ValueError):
            tfidf([])


class TestBigramCollocations:
    def test_exclusive_pair_ranked_first(self):
        docs = [
            make_doc(doc_id="d1", text="food stamps help people and people thrive"),
            make_doc(doc_id="d2", text="food stamps feed people while people work"),
            make_doc(doc_id="d3", text="food stamps matter to people and people listen"),
        ]
        ranked = bigram_collocations(docs, min_count=3, top_n=10)
        assert ranked[0][0] == "food stamps"

    def test_min_count_threshold(self):
        docs = [make_doc(doc_id="d1", text="rare pair appears once only")]
        assert bigram_collocations(docs, min_count=2) == []

    def test_repeated_token_pmi_zero(self):
        docs = [make_doc(doc_id="d1", text="a a a")]
        ranked = bigram_collocations(docs, min_count=1)
        assert ranked == [("a a", pytest.approx(0.0))]

    def test_corpus_duplication_invariant(self):
        docs = [
            make_doc(doc_id="d1", text="food stamps help hungry families eat food"),
            make_doc(doc_id="d2", text="food stamps reach hungry families fast"),
        ]
        once = bigram_collocations(docs, min_count=1, top_n=50)
        doubled_docs = docs + [make_doc(doc_id=d.id + "x", text=d.text) for d in docs]
        doubled = bigram_collocations(doubled_docs, min_count=1, top_n=50)
        assert [term for term, _ in once] == [term for term, _ in doubled]
        for (_, p1), (_, p2) in zip(once, doubled):
            assert p1 == pytest.approx(p2, abs=1e-12)

    def test_matches_brute_force_pmi(self):
        rng = random.Random(12)
        vocab = ["snap", "food", "stamps", "cuts", "law", "vote"]
        docs = [make_doc(doc_id=f"d{i}",
                         text=" ".join(rng.choice(vocab) for _ in range(20)))
                for i in range(5)]
        ranked = dict(bigram_collocations(docs, min_count=1, top_n=1000))
        unigrams = Counter()
        bigrams = Counter()
        for doc in docs:
            norms = [t.norm for t in tokenize(doc.text)]
            unigrams.update(norms)
            bigrams.update(zip(norms, norms[1:]))
        for (a, b), count in bigrams.items():
            expected = math.log(
                (count / sum(bigrams.values()))
                / ((unigrams[a] / sum(unigrams.values()))
                   * (unigrams[b] / sum(unigrams.values()))))
            assert ranked[f"{a} {b}"] == pytest.approx(expected, abs=1e-12)

    def test_tie_break_by_count_then_lexicographic(self):
        # "x y" (count 2) and "p q" (count 1) have identical PMI here:
        # u_x*u_y = 2 * u_p*u_q makes the ratios cancel exactly.
        docs = [make_doc(doc_id="d1", text="x y x y p q m q")]
        ranked = bigram_collocations(docs, min_count=1, top_n=10)
        assert ranked[0][1] == pytest.approx(ranked[1][1], abs=1e-12)
        # PMI ties: count-2 "x y" first, then count-1 pairs lexicographically.
        assert [t for t, _ in ranked[:5]] == ["x y", "m q", "p q", "q m", "y p"]


class TestLda:
    def test_k1_collapses_to_unigram_distribution(self):
        docs = [make_doc(doc_id="d1", text="apple apple pear"),
                make_doc(doc_id="d2", text="pear plum plum plum")]
        model = lda_fit(docs, n_topics=1, iterations=10, beta_dirichlet=0.01,
                        seed=1, stopwords=NO_STOP)
        counts = Counter()
        for doc in docs:
            counts.update(t.norm for t in tokenize(doc.text))
        total = sum(counts.values())
        v = len(counts)
        for i, term in enumerate(model.vocab):
            expected = (counts[term] + 0.01) / (total + v * 0.01)
            assert model.phi[0, i] == pytest.approx(expected, abs=1e-12)

    def test_rows_normalized(self):
        rng = random.Random(3)
        vocab = [f"w{j}" for j in range(15)]
        docs = [make_doc(doc_id=f"d{i}",
                         text=" ".join(rng.choice(vocab) for _ in range(18)))
                for i in range(10)]
        model = lda_fit(docs, n_topics=4, iterations=30, seed=5, stopwords=NO_STOP)
        assert np.allclose(model.phi.sum(axis=1), 1.0, atol=1e-9)
        assert np.allclose(model.theta.sum(axis=1), 1.0, atol=1e-9)

    def test_seeded_reproducibility(self):
        docs = [make_doc(doc_id=f"d{i}", text="alpha beta gamma delta") for i in range(5)]
        a = lda_fit(docs, n_topics=3, iterations=25, seed=42, stopwords=NO_STOP)
        b = lda_fit(docs, n_topics=3, iterations=25, seed=42, stopwords=NO_STOP)
        assert np.array_equal(a.phi, b.phi)
        assert np.array_equal(a.theta, b.theta)

    def test_disjoint_topic_recovery(self):
        rng = random.Random(7)
        topic_a = [f"alpha{j}" for j in range(10)]
        topic_b = [f"beta{j}" for j in range(10)]
        docs = [
            make_doc(doc_id=f"d{i}",
                     text=" ".join(rng.choice(topic_a if i % 2 == 0 else topic_b)
                                   for _ in range(20)))
            for i in range(60)
        ]
        model = lda_fit(docs, n_topics=2, iterations=150, alpha_dirichlet=0.5,
                        beta_dirichlet=0.01, seed=11, stopwords=NO_STOP)
        for k in range(2):
            prefixes = {w[:4] for w in model.top_words(k, 5)}
            assert len(prefixes) == 1

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpus):
            lda_fit([make_doc(text="the of and")], n_topics=2, iterations=5)


class TestWordcloudTerms:
    def test_unit_weight_equals_raw_tfidf(self):
        docs = [make_doc(doc_id="d1", text="snap helps families eat well"),
                make_doc(doc_id="d2", text="cuts hurt families in need")]
        scores = [score_for(d) for d in docs]
        entries = wordcloud_terms(docs, scores, day_bucket=False, stopwords=NO_STOP)
        raw = tfidf(docs, stopwords=NO_STOP)
        by_term = {}
        for (doc_id, term), value in raw.items():
            by_term[term] = by_term.get(term, 0.0) + value
        got = {e.term: e.score for e in entries if e.origin == "tfidf"}
        assert got == pytest.approx(by_term)

    def test_doubling_weight_doubles_scores(self):
        docs = [make_doc(doc_id="d1", text="snap helps families eat well"),
                make_doc(doc_id="d2", text="cuts hurt families in need")]
        base = wordcloud_terms(docs, [score_for(d, 1.0) for d in docs],
                               day_bucket=False, stopwords=NO_STOP)
        doubled = wordcloud_terms(docs, [score_for(d, 2.0) for d in docs],
                                  day_bucket=False, stopwords=NO_STOP)
        base_map = {(e.term, e.origin): e.score for e in base}
        doubled_map = {(e.term, e.origin): e.score for e in doubled}
        assert set(base_map) == set(doubled_map)
        for key, value in base_map.items():
            assert doubled_map[key] == pytest.approx(2 * value)
        assert [(e.term, e.origin) for e in base] == [(e.term, e.origin) for e in doubled]

    def test_day_buckets_distinct(self):
        docs = [make_doc(doc_id="d1", text="snap news today", days=0),
                make_doc(doc_id="d2", text="snap news tomorrow", days=1)]
        entries = wordcloud_terms(docs, [score_for(d) for d in docs],
                                  day_bucket=True, stopwords=NO_STOP)
        days = {e.day for e in entries if e.term == "snap"}
        assert len(days) == 2

    def test_missing_score(self):
        docs = [make_doc(doc_id="d1", text="snap news")]
        with pytest.raises(MissingScore):
            wordcloud_terms(docs, [], day_bucket=False)

    def test_sorted_descending(self):
        docs = [make_doc(doc_id="d1", text="snap snap snap benefit news"),
                make_doc(doc_id="d2", text="quiet other words")]
        entries = wordcloud_terms(docs, [score_for(d) for d in docs],
                                  day_bucket=False, stopwords=NO_STOP)
        values = [e.score for e in entries]
        assert values == sorted(values, reverse=True)


def test_term_entry_invariants():
    with pytest.raises(ValueError):
        TermEntry(term="", score=1.0, day=None, origin="tfidf")
    with pytest.raises(ValueError):
        TermEntry(term="x", score=-0.1, day=None, origin="tfidf")
    with pytest.raises(ValueError):
        TermEntry(term="x", score=0.1, day=None, origin="magic")


def test_default_stopword_list_loads():
    stop = load_stopwords()
    assert "the" in stop and "and" in stop
    assert "snap" not in stop
