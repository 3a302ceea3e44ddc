import math
import random
from datetime import date

import pytest

from snaplens.errors import (DegenerateInput, DuplicateTerm, EmptyDocument,
                             InvalidRange, InvalidTier, MalformedLine,
                             OutOfRangeScore)
from snaplens.sentiment import (DocumentScore, RuleConfig,
                                ValenceLexicon, compound_score,
                                corpus_timeseries, document_weight,
                                load_lexicon, score_document, score_sentences,
                                sentence_weight, tool_agreement, weighted_mean,
                                word_sum_score)

from conftest import BASE_TS, agreement_corpus, make_doc, toks


class TestLoadLexicon:
    def test_two_entries(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("good\t3\nbad\t-3\n", encoding="utf-8")
        lex = load_lexicon(path)
        assert lex.entries == {"good": 3, "bad": -3}

    def test_out_of_range(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("awesome\t7\n", encoding="utf-8")
        with pytest.raises(OutOfRangeScore):
            load_lexicon(path)

    def test_duplicate_term(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("good\t3\ngood\t2\n", encoding="utf-8")
        with pytest.raises(DuplicateTerm):
            load_lexicon(path)

    def test_comments_and_blanks_skipped(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("# header\n\ngood\t3\n", encoding="utf-8")
        assert load_lexicon(path).entries == {"good": 3}

    def test_malformed_line(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("good 3\n", encoding="utf-8")
        with pytest.raises(MalformedLine):
            load_lexicon(path)

    def test_non_integer_score(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("good\t2.5\n", encoding="utf-8")
        with pytest.raises(MalformedLine):
            load_lexicon(path)


class TestWordSum:
    def test_sum(self, fixture_lexicon):
        assert word_sum_score(toks("good good bad"), fixture_lexicon) == 3.0

    def test_no_hits(self, fixture_lexicon):
        assert word_sum_score(toks("the a"), fixture_lexicon) == 0.0

    def test_negation_mode(self, fixture_lexicon):
        got = word_sum_score(toks("not good"), fixture_lexicon, negation_mode=True)
        assert got == pytest.approx(3 * -0.74)

    def test_negation_window_respected(self, fixture_lexicon):
        # Cue 4 tokens back is outside the default window of 3.
        far = word_sum_score(toks("not the the the good"), fixture_lexicon,
                             negation_mode=True)
        assert far == 3.0

    def test_antisymmetry(self, fixture_lexicon):
        rng = random.Random(3)
        vocab = list(fixture_lexicon.entries) + ["the", "of", "zzz"]
        flipped = fixture_lexicon.negated()
        for _ in range(300):
            tokens = toks(" ".join(rng.choice(vocab) for _ in range(rng.randint(0, 12))))
            assert word_sum_score(tokens, flipped) == -word_sum_score(tokens, fixture_lexicon)


class TestCompound:
    def test_no_hits_zero(self, fixture_lexicon):
        assert compound_score(toks("nothing matches here"), fixture_lexicon) == 0.0

    def test_normalization_formula(self, fixture_lexicon):
        # single hit of +3, no rules triggered
        assert compound_score(toks("good"), fixture_lexicon) == pytest.approx(
            3 / math.sqrt(24), abs=1e-4)

    def test_always_inside_unit_interval(self, fixture_lexicon):
        rng = random.Random(4)
        vocab = (list(fixture_lexicon.entries) + ["the", "very", "not", "but"]
                 + ["GOOD", "BAD!!", "awful!!!"])
        for _ in range(500):
            tokens = toks(" ".join(rng.choice(vocab) for _ in range(rng.randint(0, 15))))
            value = compound_score(tokens, fixture_lexicon)
            assert -1.0 < value < 1.0

    def test_approaches_one_for_huge_sums(self, fixture_lexicon):
        value = compound_score(toks(" ".join(["good"] * 300)), fixture_lexicon)
        assert 0.99 < value < 1.0

    def test_booster_amplifies(self, fixture_lexicon):
        plain = compound_score(toks("good"), fixture_lexicon)
        boosted = compound_score(toks("very good"), fixture_lexicon)
        assert boosted > plain

    def test_dampener_attenuates(self, fixture_lexicon):
        plain = compound_score(toks("good"), fixture_lexicon)
        damped = compound_score(toks("slightly good"), fixture_lexicon)
        assert 0 < damped < plain

    def test_negation_flips_sign(self, fixture_lexicon):
        assert compound_score(toks("not good"), fixture_lexicon) < 0

    def test_caps_emphasis_needs_mixed_case(self, fixture_lexicon):
        mixed = compound_score(toks("GOOD news"), fixture_lexicon)
        plain = compound_score(toks("good news"), fixture_lexicon)
        assert mixed > plain
        # All-caps sentence: no differential emphasis.
        screaming = compound_score(toks("GOOD NEWS"), fixture_lexicon)
        assert screaming == pytest.approx(plain)

    def test_exclaims_emphasize(self, fixture_lexicon):
        assert compound_score(toks("good!!"), fixture_lexicon) > \
            compound_score(toks("good"), fixture_lexicon)
        assert compound_score(toks("bad!!"), fixture_lexicon) < \
            compound_score(toks("bad"), fixture_lexicon)

    def test_but_reweights(self, fixture_lexicon):
        # "good but bad": the clause after "but" dominates.
        assert compound_score(toks("good but bad"), fixture_lexicon) < 0
        assert compound_score(toks("bad but good"), fixture_lexicon) > 0

    def test_monotone_in_appended_positive_token(self, fixture_lexicon):
        rng = random.Random(9)
        vocab = list(fixture_lexicon.entries) + ["the", "policy"]
        for _ in range(200):
            tokens = toks(" ".join(rng.choice(vocab) for _ in range(rng.randint(0, 8))))
            extended = tokens + toks("good")
            assert compound_score(extended, fixture_lexicon) >= \
                compound_score(tokens, fixture_lexicon)


class TestSentenceWeight:
    def test_key_term_hit(self):
        assert sentence_weight(toks("SNAP benefits cut"), kappa=2.0) == 2.0

    def test_no_hit(self):
        assert sentence_weight(toks("the weather is nice"), kappa=2.0) == 1.0

    def test_ebt_token(self):
        assert sentence_weight(toks("my ebt card"), kappa=2.0) == 2.0

    def test_multiword_needs_adjacency(self):
        assert sentence_weight(toks("food for the stamps"), kappa=2.0) == 1.0
        assert sentence_weight(toks("food stamps expanded"), kappa=2.0) == 2.0

    def test_kappa_below_one_rejected(self):
        with pytest.raises(ValueError):
            sentence_weight(toks("snap"), kappa=0.5)


class TestDocumentWeight:
    def test_neutral_point(self):
        assert document_weight(1, 12.0) == pytest.approx(1.0)

    def test_lower_clamp(self):
        assert document_weight(3, 6.0) == pytest.approx(2.0)

    def test_upper_clamp(self):
        assert document_weight(5, 30.0) == pytest.approx(24.0)

    def test_invalid_tier(self):
        for tier in (0, 6, 2.5):
            with pytest.raises(InvalidTier):
                document_weight(tier, 10.0)

    def test_monotone(self):
        grades = [-2.0, 0.0, 5.0, 12.0, 20.0, 40.0]
        for tier in range(1, 5):
            for grade in grades:
                assert document_weight(tier, grade) <= document_weight(tier + 1, grade)
        for tier in range(1, 6):
            for lo, hi in zip(grades, grades[1:]):
                assert document_weight(tier, lo) <= document_weight(tier, hi)


class TestScoreDocument:
    def test_weighted_mean_cancellation(self):
        assert weighted_mean([0.5, -0.5], [1, 1]) == pytest.approx(0.0)

    def test_weighted_mean_arithmetic(self):
        assert weighted_mean([0.6, 0.0], [2, 1]) == pytest.approx(0.4)

    def test_single_sentence_identity(self, fixture_lexicon):
        doc = make_doc(text="Good news.")
        score = score_document(doc, fixture_lexicon)
        (sent,) = score_sentences(doc, fixture_lexicon)
        assert score.compound_avg == pytest.approx(sent.compound)
        assert score.word_sum_avg == pytest.approx(sent.word_sum)

    def test_key_sentence_weighting_applied(self, fixture_lexicon):
        # The SNAP sentence carries kappa=2, the other weight 1.
        doc = make_doc(text="Good SNAP benefit news. Bad weather today.")
        score = score_document(doc, fixture_lexicon)
        sents = score_sentences(doc, fixture_lexicon)
        assert [s.weight for s in sents] == [2.0, 1.0]
        expected = (2 * sents[0].word_sum + 1 * sents[1].word_sum) / 3
        assert score.word_sum_avg == pytest.approx(expected)

    def test_uniform_weights_reduce_to_plain_mean(self, fixture_lexicon):
        doc = make_doc(text="Good news today. Bad news tomorrow.")
        score = score_document(doc, fixture_lexicon, kappa=1.0)
        sents = score_sentences(doc, fixture_lexicon, kappa=1.0)
        assert score.compound_avg == pytest.approx(
            sum(s.compound for s in sents) / len(sents))

    def test_doc_weight_attached(self, fixture_lexicon):
        from snaplens.corpus import reading_grade
        doc = make_doc(text="Good news for the program.", tier=3)
        score = score_document(doc, fixture_lexicon)
        assert score.doc_weight == pytest.approx(
            document_weight(3, reading_grade(doc)))


class TestCorpusTimeseries:
    def test_empty(self):
        assert corpus_timeseries([], date(2017, 6, 1), date(2017, 6, 30)) == []

    def test_single_doc_identity(self):
        score = DocumentScore("d1", 1.0, 0.2, 1.0, BASE_TS)
        (point,) = corpus_timeseries([score], date(2017, 6, 1), date(2017, 6, 1))
        assert point.avg_compound == pytest.approx(0.2)
        assert point.n_docs == 1

    def test_weighted_mean_same_day(self):
        scores = [DocumentScore("d1", 0.0, 0.4, 1.0, BASE_TS),
                  DocumentScore("d2", 0.0, 0.0, 3.0, BASE_TS)]
        (point,) = corpus_timeseries(scores, date(2017, 6, 1), date(2017, 6, 1))
        assert point.avg_compound == pytest.approx(0.1)

    def test_invalid_range(self):
        with pytest.raises(InvalidRange):
            corpus_timeseries([], date(2017, 6, 2), date(2017, 6, 1))

    def test_out_of_range_docs_excluded(self):
        scores = [DocumentScore("d1", 1.0, 0.5, 1.0, BASE_TS)]
        assert corpus_timeseries(scores, date(2017, 7, 1), date(2017, 7, 31)) == []

    def test_weighted_totals_conserved(self, fixture_lexicon):
        docs = agreement_corpus(seed=2, n_docs=30)
        scores = [score_document(d, fixture_lexicon) for d in docs]
        days = [s.day for s in scores]
        points = corpus_timeseries(scores, min(days), max(days))
        assert sum(p.n_docs for p in points) == len(scores)
        # Total weighted compound equals the sum over per-day weighted sums.
        per_day = {}
        for s in scores:
            per_day.setdefault(s.day, []).append(s)
        total = sum(s.compound_avg * s.doc_weight for s in scores)
        from_points = sum(
            p.avg_compound * sum(s.doc_weight for s in per_day[p.day]) for p in points)
        assert from_points == pytest.approx(total, rel=1e-12)


class TestToolAgreement:
    def test_perfect_linear_relation(self):
        scores = [DocumentScore(f"d{i}", float(i - 2), (i - 2) / 10.0, 1.0, BASE_TS)
                  for i in range(5)]
        r, sign = tool_agreement(scores)
        assert r == pytest.approx(1.0)
        assert sign == 1.0

    def test_anticorrelated(self):
        scores = [DocumentScore("d1", 1.0, -0.1, 1.0, BASE_TS),
                  DocumentScore("d2", -1.0, 0.1, 1.0, BASE_TS)]
        r, sign = tool_agreement(scores)
        assert r == pytest.approx(-1.0)
        assert sign == 0.0

    def test_zeros_agree_with_anything(self):
        scores = [DocumentScore("d1", 0.0, -0.5, 1.0, BASE_TS),
                  DocumentScore("d2", 2.0, 0.1, 1.0, BASE_TS),
                  DocumentScore("d3", -1.0, 0.0, 1.0, BASE_TS)]
        _, sign = tool_agreement(scores)
        assert sign == 1.0

    def test_degenerate_variance(self):
        scores = [DocumentScore("d1", 1.0, 0.5, 1.0, BASE_TS),
                  DocumentScore("d2", 1.0, 0.7, 1.0, BASE_TS)]
        with pytest.raises(DegenerateInput):
            tool_agreement(scores)

    def test_matches_textbook_pearson(self, fixture_lexicon):
        docs = agreement_corpus(seed=1, n_docs=20)
        scores = [score_document(d, fixture_lexicon) for d in docs]
        r, _ = tool_agreement(scores)
        xs = [s.word_sum_avg for s in scores]
        ys = [s.compound_avg for s in scores]
        n = len(xs)
        mean_x = sum(xs) / n
        mean_y = sum(ys) / n
        cov = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
        var_x = sum((x - mean_x) ** 2 for x in xs)
        var_y = sum((y - mean_y) ** 2 for y in ys)
        assert r == pytest.approx(cov / math.sqrt(var_x * var_y), abs=1e-9)


class TestRuleConfig:
    def test_invariants(self):
        with pytest.raises(ValueError):
            RuleConfig(alpha=0)
        with pytest.raises(ValueError):
            RuleConfig(but_weight_before=1.5, but_weight_after=0.5)
        with pytest.raises(ValueError):
            RuleConfig(negation_window=0)

    def test_lexicon_invariants(self):
        with pytest.raises(OutOfRangeScore):
            ValenceLexicon({"big": 6})
        with pytest.raises(ValueError):
            ValenceLexicon({"Upper": 2})


def test_score_document_requires_sentences(fixture_lexicon):
    doc = make_doc(text="placeholder")
    object.__setattr__(doc, "text", "...")
    with pytest.raises(EmptyDocument):
        score_document(doc, fixture_lexicon)
