"""Weighted term extraction for word clouds: TF-IDF, bigram
collocations ranked by pointwise mutual information, LDA topics via
collapsed Gibbs sampling, and the per-date weighted term list.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from datetime import date
from importlib import resources
from typing import Iterable, Optional, Sequence

import numpy as np

from .corpus import Document, tokenize
from .errors import EmptyCorpus, MissingScore
from .sentiment import DocumentScore

TERM_ORIGINS = ("tfidf", "bigram", "entity")

_stopwords_cache: Optional[frozenset] = None


def load_stopwords(path=None) -> frozenset:
    """Stopword set, one term per line, '#' comments allowed.

    With no path, returns the English list shipped with the package.
    """
    global _stopwords_cache
    if path is None:
        if _stopwords_cache is None:
            text = resources.files("snaplens").joinpath("data/stopwords.txt").read_text("utf-8")
            _stopwords_cache = _parse_stopwords(text)
        return _stopwords_cache
    with open(path, encoding="utf-8") as fh:
        return _parse_stopwords(fh.read())


def _parse_stopwords(text: str) -> frozenset:
    words = set()
    for line in text.splitlines():
        word = line.strip().lower()
        if word and not word.startswith("#"):
            words.add(word)
    return frozenset(words)


@dataclass(frozen=True)
class TermEntry:
    term: str
    score: float
    day: Optional[date]
    origin: str

    def __post_init__(self):
        if not self.term:
            raise ValueError("term must be nonempty")
        if self.score < 0:
            raise ValueError("score must be >= 0")
        if self.origin not in TERM_ORIGINS:
            raise ValueError(f"origin must be one of {TERM_ORIGINS}")


@dataclass(frozen=True)
class TopicModel:
    n_topics: int
    phi: np.ndarray    # n_topics x V topic-word probabilities
    theta: np.ndarray  # D x n_topics document-topic probabilities
    vocab: tuple[str, ...]
    doc_ids: tuple[str, ...]
    alpha_dirichlet: float
    beta_dirichlet: float
    seed: int

    def top_words(self, topic: int, n: int = 10) -> list[str]:
        order = np.argsort(-self.phi[topic])
        return [self.vocab[i] for i in order[:n]]


def _doc_norms(doc: Document) -> list[str]:
    return [tok.norm for tok in tokenize(doc.text)]


def tfidf(corpus: Sequence[Document],
          stopwords: Optional[Iterable[str]] = None) -> dict[tuple[str, str], float]:
    """(doc_id, term) -> tf * ln(N / df), stopwords removed.

    tf is the raw in-document count; terms present in every document
    get score 0.
    """
    if not corpus:
        raise ValueError("corpus must be nonempty")
    stop = frozenset(stopwords) if stopwords is not None else load_stopwords()
    doc_counts: dict[str, Counter] = {}
    df: Counter = Counter()
    for doc in corpus:
        counts = Counter(t for t in _doc_norms(doc) if t not in stop)
        doc_counts[doc.id] = counts
        df.update(counts.keys())
    n_docs = len(corpus)
    scores: dict[tuple[str, str], float] = {}
    for doc in corpus:
        for term, tf in doc_counts[doc.id].items():
            scores[(doc.id, term)] = tf * math.log(n_docs / df[term])
    return scores


def bigram_collocations(corpus: Sequence[Document], min_count: int = 3,
                        top_n: int = 50) -> list[tuple[str, float]]:
    """Adjacent token pairs ranked by PMI = ln(p(ab) / (p(a) p(b))).

    Pairs below ``min_count`` are excluded; ties break by count
    descending, then lexicographically.
    """
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    unigrams: Counter = Counter()
    bigrams: Counter = Counter()
    for doc in corpus:
        norms = _doc_norms(doc)
        unigrams.update(norms)
        bigrams.update(zip(norms, norms[1:]))
    total_uni = sum(unigrams.values())
    total_bi = sum(bigrams.values())
    if total_bi == 0:
        return []

    ranked = []
    for (a, b), count in bigrams.items():
        if count < min_count:
            continue
        p_ab = count / total_bi
        p_a = unigrams[a] / total_uni
        p_b = unigrams[b] / total_uni
        pmi = math.log(p_ab / (p_a * p_b))
        ranked.append((f"{a} {b}", pmi, count))
    ranked.sort(key=lambda row: (-row[1], -row[2], row[0]))
    return [(term, pmi) for term, pmi, _ in ranked[:top_n]]


def lda_fit(corpus: Sequence[Document], n_topics: int = 10,
            iterations: int = 500, alpha_dirichlet: Optional[float] = None,
            beta_dirichlet: float = 0.01, seed: int = 13,
            stopwords: Optional[Iterable[str]] = None) -> TopicModel:
    """Collapsed Gibbs sampler for LDA, deterministic for a fixed seed.

    phi_kw = (n_kw + beta) / (n_k + V beta),
    theta_dk = (n_dk + alpha) / (n_d + K alpha); alpha defaults to 50/K.
    """
    if n_topics < 1:
        raise ValueError("n_topics must be >= 1")
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    alpha = 50.0 / n_topics if alpha_dirichlet is None else alpha_dirichlet
    beta = beta_dirichlet
    stop = frozenset(stopwords) if stopwords is not None else load_stopwords()

    doc_ids = []
    doc_tokens: list[list[int]] = []
    term_ids: dict[str, int] = {}
    for doc in corpus:
        ids = []
        for term in _doc_norms(doc):
            if term in stop:
                continue
            if term not in term_ids:
                term_ids[term] = len(term_ids)
            ids.append(term_ids[term])
        if ids:
            doc_ids.append(doc.id)
            doc_tokens.append(ids)
    if not doc_tokens:
        raise EmptyCorpus("no non-stopword tokens to model")

    vocab = tuple(sorted(term_ids, key=term_ids.get))
    n_words = len(vocab)
    n_docs = len(doc_tokens)
    k = n_topics
    rng = random.Random(seed)

    # Count tables as plain lists: the sampler's inner loop dominates
    # runtime and scalar indexing is faster than tiny array ops.
    n_kw = [[0] * n_words for _ in range(k)]
    n_k = [0] * k
    n_dk = [[0] * k for _ in range(n_docs)]
    assignments: list[list[int]] = []
    for d, ids in enumerate(doc_tokens):
        doc_assign = []
        for w in ids:
            topic = rng.randrange(k)
            doc_assign.append(topic)
            n_kw[topic][w] += 1
            n_k[topic] += 1
            n_dk[d][topic] += 1
        assignments.append(doc_assign)

    v_beta = n_words * beta
    for _ in range(iterations):
        for d, ids in enumerate(doc_tokens):
            doc_assign = assignments[d]
            dk = n_dk[d]
            for i, w in enumerate(ids):
                topic = doc_assign[i]
                n_kw[topic][w] -= 1
                n_k[topic] -= 1
                dk[topic] -= 1

                total = 0.0
                cumulative = []
                for t in range(k):
                    total += (n_kw[t][w] + beta) / (n_k[t] + v_beta) * (dk[t] + alpha)
                    cumulative.append(total)
                u = rng.random() * total
                new_topic = 0
                while cumulative[new_topic] < u:
                    new_topic += 1

                doc_assign[i] = new_topic
                n_kw[new_topic][w] += 1
                n_k[new_topic] += 1
                dk[new_topic] += 1

    kw = np.array(n_kw, dtype=float)
    phi = (kw + beta) / (kw.sum(axis=1, keepdims=True) + n_words * beta)
    dk_arr = np.array(n_dk, dtype=float)
    theta = (dk_arr + alpha) / (dk_arr.sum(axis=1, keepdims=True) + k * alpha)
    return TopicModel(n_topics=k, phi=phi, theta=theta, vocab=vocab,
                      doc_ids=tuple(doc_ids), alpha_dirichlet=alpha,
                      beta_dirichlet=beta, seed=seed)


def wordcloud_terms(corpus: Sequence[Document],
                    doc_scores: Sequence[DocumentScore],
                    day_bucket: bool = True,
                    stopwords: Optional[Iterable[str]] = None,
                    min_count: int = 3, top_n: int = 50) -> list[TermEntry]:
    """Document-weighted TF-IDF and collocation scores, summed per term
    (and per UTC day when ``day_bucket`` is on), sorted descending.

    Bigrams with non-positive association are omitted so every entry
    carries a nonnegative score.  The ``entity`` origin is reserved for
    externally supplied named entities; none are produced here.
    """
    if not corpus:
        return []
    weight_by_id = {s.doc_id: s for s in doc_scores}
    for doc in corpus:
        if doc.id not in weight_by_id:
            raise MissingScore(doc.id)

    tf_scores = tfidf(corpus, stopwords)
    pmi_by_bigram = dict(bigram_collocations(corpus, min_count=min_count, top_n=top_n))

    acc: dict[tuple[str, str, Optional[date]], float] = {}
    for doc in corpus:
        score = weight_by_id[doc.id]
        weight = score.doc_weight
        day = score.day if day_bucket else None
        norms = _doc_norms(doc)
        for term in set(norms):
            key = (doc.id, term)
            if key in tf_scores:
                acc_key = (term, "tfidf", day)
                acc[acc_key] = acc.get(acc_key, 0.0) + tf_scores[key] * weight
        pair_counts = Counter(zip(norms, norms[1:]))
        for (a, b), count in pair_counts.items():
            bigram = f"{a} {b}"
            pmi = pmi_by_bigram.get(bigram)
            if pmi is None or pmi <= 0:
                continue
            acc_key = (bigram, "bigram", day)
            acc[acc_key] = acc.get(acc_key, 0.0) + count * pmi * weight

    entries = [TermEntry(term=term, score=score, day=day, origin=origin)
               for (term, origin, day), score in acc.items()]
    entries.sort(key=lambda e: (-e.score, e.term, e.origin, str(e.day)))
    return entries
