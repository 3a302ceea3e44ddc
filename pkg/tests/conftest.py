import random
from datetime import datetime, timedelta, timezone

import pytest

from snaplens import Document, ValenceLexicon
from snaplens.corpus import tokenize

BASE_TS = datetime(2017, 6, 1, 12, 0, tzinfo=timezone.utc)

POS_WORDS = {"good": 3, "great": 4, "helpful": 2, "hope": 2, "support": 1, "benefit": 2}
NEG_WORDS = {"bad": -3, "awful": -4, "cuts": -1, "hunger": -3, "crisis": -2, "fraud": -3}
FILLER_WORDS = ["the", "policy", "report", "states", "program", "change", "week", "data"]


def make_doc(doc_id="d1", text="Food stamps help.", kind="article", source="outlet",
             days=0, tier=1, geotag=None, label=None):
    return Document(
        id=doc_id, kind=kind, text=text, source=source,
        published_at=BASE_TS + timedelta(days=days),
        traffic_tier=tier, geotag=geotag, label=label,
    )


def toks(text):
    return tokenize(text)


@pytest.fixture
def fixture_lexicon():
    return ValenceLexicon({**POS_WORDS, **NEG_WORDS}, name="fixture")


def agreement_corpus(seed=0, n_docs=50):
    """Documents whose wording is polarity-consistent, so the two
    scorers should agree on sign and correlate strongly."""
    rng = random.Random(seed)
    docs = []
    for i in range(n_docs):
        polarity = rng.choice([1, -1])
        pool = list(POS_WORDS if polarity > 0 else NEG_WORDS)
        sentences = []
        for _ in range(rng.randint(1, 3)):
            words = [
                rng.choice(pool) if rng.random() < 0.45 else rng.choice(FILLER_WORDS)
                for _ in range(rng.randint(5, 9))
            ]
            sentences.append(" ".join(words).capitalize() + ".")
        docs.append(make_doc(doc_id=f"d{i}", text=" ".join(sentences),
                             source=f"outlet{i % 5}", days=i % 10, tier=1 + i % 5))
    return docs
