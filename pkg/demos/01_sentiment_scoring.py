"""Walk through the two sentence-level sentiment scorers and the
aggregation from sentences to documents to a daily time series.

Run from the repo root:  python3 demos/01_sentiment_scoring.py
"""

from pathlib import Path

from snaplens import (corpus_timeseries, filter_relevant, load_documents,
                      load_lexicon, score_document, tool_agreement)
from snaplens.corpus import split_sentences
from snaplens.sentiment import score_sentences

DATA = Path(__file__).parent / "data"

# ---------------------------------------------------------------------------
# Load the corpus and keep the documents that actually talk about SNAP.

docs = load_documents(DATA / "docs.jsonl")
relevant = filter_relevant(docs)
print(f"loaded {len(docs)} documents, {len(relevant)} relevant after filtering")

lexicon = load_lexicon(DATA / "lexicon.tsv")
print(f"lexicon: {len(lexicon)} terms\n")

# ---------------------------------------------------------------------------
# Sentence-level detail for one article: the word-sum score is a plain
# signed sum of lexicon valences; the compound score applies the
# booster/negation/caps/exclamation rules and squashes into (-1, 1).
# Sentences naming SNAP terms carry double weight in the aggregate.

doc = next(d for d in relevant if d.id == "a02")
print(f"document {doc.id} ({doc.source}):")
for sentence, score in zip(split_sentences(doc), score_sentences(doc, lexicon)):
    print(f"  [{score.index}] word_sum={score.word_sum:+.1f} "
          f"compound={score.compound:+.3f} weight={score.weight:.0f}  {sentence.raw}")

doc_score = score_document(doc, lexicon)
print(f"  -> word_sum_avg={doc_score.word_sum_avg:+.3f} "
      f"compound_avg={doc_score.compound_avg:+.3f} "
      f"doc_weight={doc_score.doc_weight:.2f}\n")

# ---------------------------------------------------------------------------
# Score everything and aggregate per UTC day, weighting each document by
# its traffic tier and reading level.

scores = [score_document(d, lexicon) for d in relevant]
days = [s.day for s in scores]
print("daily weighted sentiment:")
for point in corpus_timeseries(scores, min(days), max(days)):
    bar = "#" * max(int(abs(point.avg_compound) * 40), 1)
    side = "+" if point.avg_compound >= 0 else "-"
    print(f"  {point.day} n={point.n_docs:2d} compound={point.avg_compound:+.3f} "
          f"word_sum={point.avg_word_sum:+.2f}  {side}{bar}")

# ---------------------------------------------------------------------------
# How closely do the two scorers agree at the document level?

pearson_r, sign_agreement = tool_agreement(scores)
print(f"\nscorer agreement: pearson r = {pearson_r:.3f}, "
      f"sign agreement = {sign_agreement:.0%}")
