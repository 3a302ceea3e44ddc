"""Supervised sentiment classification of short texts with multinomial
Naive Bayes over bag-of-normalized-tokens, Laplace smoothing.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .corpus import Document, tokenize
from .errors import EmptyVocabulary, InsufficientClasses, TooFewExamples


@dataclass(frozen=True)
class NBModel:
    classes: tuple[str, ...]
    log_priors: Mapping[str, float]
    log_likelihoods: Mapping[str, Mapping[str, float]]  # class -> term -> log p
    vocab: frozenset
    smoothing: float = 1.0


def _doc_terms(doc: Document) -> list[str]:
    return [tok.norm for tok in tokenize(doc.text)]


def train(labeled: Sequence[Document], smoothing: float = 1.0) -> NBModel:
    """Fit the model on labeled documents.

    Requires at least two classes with one document each and a nonempty
    vocabulary.
    """
    if smoothing <= 0:
        raise ValueError("smoothing must be positive")
    by_class: dict[str, list[Document]] = {}
    for doc in labeled:
        if doc.label is None:
            raise ValueError(f"document {doc.id!r} has no label")
        by_class.setdefault(doc.label, []).append(doc)
    if len(by_class) < 2:
        raise InsufficientClasses(f"need >= 2 classes, got {sorted(by_class)}")

    classes = tuple(sorted(by_class))
    n_docs = len(labeled)
    vocab: set[str] = set()
    term_counts: dict[str, Counter] = {}
    for cls in classes:
        counts: Counter = Counter()
        for doc in by_class[cls]:
            counts.update(_doc_terms(doc))
        term_counts[cls] = counts
        vocab.update(counts)
    if not vocab:
        raise EmptyVocabulary("training corpus has no tokens")

    log_priors = {cls: math.log(len(by_class[cls]) / n_docs) for cls in classes}
    log_likelihoods = {}
    v = len(vocab)
    for cls in classes:
        counts = term_counts[cls]
        denom = sum(counts.values()) + smoothing * v
        log_likelihoods[cls] = {
            term: math.log((counts[term] + smoothing) / denom) for term in vocab
        }
    return NBModel(classes=classes, log_priors=dict(log_priors),
                   log_likelihoods=log_likelihoods, vocab=frozenset(vocab),
                   smoothing=smoothing)


def predict(model: NBModel, doc: Document) -> tuple[str, dict[str, float]]:
    """(argmax label, posterior distribution over classes).

    Out-of-vocabulary tokens are ignored; an all-OOV document falls back
    to the prior argmax.  Ties go to the first class in sorted order.
    """
    log_posts = dict(model.log_priors)
    for term in _doc_terms(doc):
        if term not in model.vocab:
            continue
        for cls in model.classes:
            log_posts[cls] += model.log_likelihoods[cls][term]
    # Normalize in probability space (log-sum-exp for stability).
    peak = max(log_posts.values())
    raw = {cls: math.exp(lp - peak) for cls, lp in log_posts.items()}
    total = sum(raw.values())
    posterior = {cls: p / total for cls, p in raw.items()}
    best = max(model.classes, key=lambda cls: (posterior[cls], ))
    return best, posterior


def cross_validate(labeled: Sequence[Document], k: int,
                   smoothing: float = 1.0) -> float:
    """Mean stratified k-fold accuracy."""
    if k < 2:
        raise ValueError("k must be >= 2")
    by_class: dict[str, list[int]] = {}
    for i, doc in enumerate(labeled):
        if doc.label is None:
            raise ValueError(f"document {doc.id!r} has no label")
        by_class.setdefault(doc.label, []).append(i)
    smallest = min((len(ix) for ix in by_class.values()), default=0)
    if smallest < k:
        raise TooFewExamples(f"every class needs >= k={k} examples, smallest has {smallest}")

    folds: list[list[int]] = [[] for _ in range(k)]
    for cls in sorted(by_class):
        for j, idx in enumerate(by_class[cls]):
            folds[j % k].append(idx)

    accuracies = []
    for f in range(k):
        test_ix = set(folds[f])
        train_docs = [labeled[i] for i in range(len(labeled)) if i not in test_ix]
        model = train(train_docs, smoothing=smoothing)
        correct = sum(1 for i in folds[f]
                      if predict(model, labeled[i])[0] == labeled[i].label)
        accuracies.append(correct / len(folds[f]))
    return sum(accuracies) / k


def save_model(model: NBModel, path) -> None:
    payload = {
        "classes": list(model.classes),
        "log_priors": dict(model.log_priors),
        "log_likelihoods": {cls: dict(terms) for cls, terms in model.log_likelihoods.items()},
        "vocab": sorted(model.vocab),
        "smoothing": model.smoothing,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)


def load_model(path) -> NBModel:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    return NBModel(
        classes=tuple(payload["classes"]),
        log_priors=payload["log_priors"],
        log_likelihoods=payload["log_likelihoods"],
        vocab=frozenset(payload["vocab"]),
        smoothing=payload["smoothing"],
    )
