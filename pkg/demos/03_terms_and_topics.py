"""Term extraction for word clouds: TF-IDF, bigram collocations ranked
by pointwise mutual information, LDA topics, and the document-weighted
term list with per-day buckets.

Run from the repo root:  python3 demos/03_terms_and_topics.py
"""

from pathlib import Path

from snaplens import (bigram_collocations, filter_relevant, lda_fit,
                      load_documents, load_lexicon, score_document, tfidf,
                      wordcloud_terms)

DATA = Path(__file__).parent / "data"

docs = filter_relevant(load_documents(DATA / "docs.jsonl"))
lexicon = load_lexicon(DATA / "lexicon.tsv")
scores = [score_document(d, lexicon) for d in docs]

# ---------------------------------------------------------------------------
# TF-IDF highlights words that individuate a document within the corpus.

tf_scores = tfidf(docs)
print("top TF-IDF terms per document (first 5 docs):")
for doc in docs[:5]:
    row = sorted(((term, value) for (d, term), value in tf_scores.items()
                  if d == doc.id), key=lambda kv: -kv[1])[:4]
    listing = ", ".join(f"{t} ({v:.2f})" for t, v in row)
    print(f"  {doc.id}: {listing}")

# ---------------------------------------------------------------------------
# Collocations: adjacent pairs that co-occur far more than chance.

print("\nbigram collocations (PMI, count >= 2):")
for term, pmi in bigram_collocations(docs, min_count=2, top_n=8):
    print(f"  {term:22s} pmi={pmi:.2f}")

# ---------------------------------------------------------------------------
# A small LDA run. The sampler is seeded, so reruns reproduce exactly.

model = lda_fit(docs, n_topics=4, iterations=300, seed=13)
print("\nLDA topics (top 6 words each):")
for k in range(model.n_topics):
    print(f"  topic {k}: {' '.join(model.top_words(k, 6))}")

# ---------------------------------------------------------------------------
# The word-cloud list: per-document scores weighted by each document's
# influence weight, bucketed by publication day.

entries = wordcloud_terms(docs, scores, day_bucket=True, min_count=2)
print("\nword-cloud entries (top 12 by weighted score):")
for entry in entries[:12]:
    print(f"  {entry.day} {entry.origin:6s} {entry.term:18s} {entry.score:8.2f}")
