"""Two sentence-level sentiment scorers plus the aggregation chain from
sentences to documents to a corpus time series.

The word-sum scorer adds signed lexicon valences and ignores syntax by
default (negation is an opt-in flag).  The compound scorer applies
valence-shifting rules (boosters, negation, ALL-CAPS emphasis,
exclamation marks, "but" re-weighting) and squashes the raw sum into
(-1, 1) with s / sqrt(s^2 + alpha).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import date, datetime
from typing import Mapping, Optional, Sequence

import numpy as np

from .corpus import DEFAULT_KEY_TERMS, Document, Token, reading_grade, split_sentences
from .errors import (DegenerateInput, DuplicateTerm, EmptyDocument, InvalidRange,
                     InvalidTier, MalformedLine, OutOfRangeScore)

DEFAULT_BOOSTER_TERMS = frozenset({
    "absolutely", "amazingly", "completely", "considerably", "decidedly",
    "deeply", "enormously", "entirely", "especially", "exceptionally",
    "extremely", "fully", "greatly", "highly", "hugely", "incredibly",
    "intensely", "majorly", "really", "remarkably", "so", "substantially",
    "thoroughly", "totally", "tremendously", "unbelievably", "utterly", "very",
})

DEFAULT_DAMPENER_TERMS = frozenset({
    "almost", "barely", "hardly", "kinda", "less", "little", "marginally",
    "occasionally", "partly", "scarcely", "slightly", "somewhat", "sorta",
})

DEFAULT_NEGATION_CUES = frozenset({
    "not", "no", "never", "none", "nobody", "nothing", "neither", "nor",
    "cannot", "can't", "cant", "don't", "dont", "doesn't", "doesnt",
    "didn't", "didnt", "isn't", "isnt", "aren't", "arent", "wasn't", "wasnt",
    "weren't", "werent", "won't", "wont", "wouldn't", "wouldnt",
    "shouldn't", "shouldnt", "couldn't", "couldnt", "ain't", "aint",
    "without", "lacks", "lacking",
})


@dataclass(frozen=True)
class ValenceLexicon:
    """Term -> integer valence in [-5, 5]; terms lowercase and unique."""

    entries: Mapping[str, int]
    name: str = "lexicon"

    def __post_init__(self):
        for term, score in self.entries.items():
            if term != term.lower():
                raise ValueError(f"lexicon term {term!r} is not lowercase")
            if not -5 <= score <= 5:
                raise OutOfRangeScore(term, score)

    def __len__(self):
        return len(self.entries)

    def negated(self) -> "ValenceLexicon":
        """Mirror lexicon with every valence sign flipped."""
        return ValenceLexicon({t: -s for t, s in self.entries.items()},
                              name=f"{self.name}-negated")


@dataclass(frozen=True)
class RuleConfig:
    """Constants and word lists for the rule-based compound scorer.

    Defaults follow the published reference values of the usual
    rule-based tool; everything is overridable via the config file.
    """

    alpha: float = 15.0
    booster_delta: float = 0.293
    negation_scalar: float = -0.74
    negation_window: int = 3
    caps_delta: float = 0.733
    exclaim_delta: float = 0.292
    but_weight_before: float = 0.5
    but_weight_after: float = 1.5
    booster_terms: frozenset = DEFAULT_BOOSTER_TERMS
    dampener_terms: frozenset = DEFAULT_DAMPENER_TERMS
    negation_cues: frozenset = DEFAULT_NEGATION_CUES

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if not 0 < self.but_weight_before < self.but_weight_after:
            raise ValueError("need 0 < but_weight_before < but_weight_after")
        if self.negation_window < 1:
            raise ValueError("negation_window must be >= 1")


DEFAULT_RULES = RuleConfig()


@dataclass(frozen=True)
class SentenceScore:
    doc_id: str
    index: int
    word_sum: float
    compound: float
    weight: float


@dataclass(frozen=True)
class DocumentScore:
    doc_id: str
    word_sum_avg: float
    compound_avg: float
    doc_weight: float
    published_at: datetime

    @property
    def day(self) -> date:
        return self.published_at.date()


@dataclass(frozen=True)
class TimePoint:
    day: date
    avg_word_sum: float
    avg_compound: float
    n_docs: int


def load_lexicon(path, name: Optional[str] = None) -> ValenceLexicon:
    """Load a TSV valence lexicon: one ``term<TAB>score`` per line.

    Lines starting with ``#`` are comments.  Scores must be integers in
    [-5, 5]; duplicate terms are rejected.
    """
    entries: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split("\t")
            if len(parts) != 2:
                raise MalformedLine(line_no, "expected 'term<TAB>score'")
            term, raw_score = parts[0].strip().lower(), parts[1].strip()
            try:
                score = int(raw_score)
            except ValueError as exc:
                raise MalformedLine(line_no, f"score {raw_score!r} is not an integer") from exc
            if abs(score) > 5:
                raise OutOfRangeScore(term, score)
            if term in entries:
                raise DuplicateTerm(term)
            entries[term] = score
    return ValenceLexicon(entries, name=name or str(path))


def _negated(tokens: Sequence[Token], i: int, cfg: RuleConfig) -> bool:
    window = tokens[max(0, i - cfg.negation_window):i]
    return any(tok.norm in cfg.negation_cues for tok in window)


def word_sum_score(tokens: Sequence[Token], lex: ValenceLexicon,
                   negation_mode: bool = False,
                   cfg: RuleConfig = DEFAULT_RULES) -> float:
    """Sum of lexicon valences over the tokens (0 when nothing matches).

    With ``negation_mode`` on, a lexicon hit within the negation window
    after a negation cue is multiplied by the negation scalar; off by
    default, matching the plain word-sum method.
    """
    total = 0.0
    for i, tok in enumerate(tokens):
        valence = lex.entries.get(tok.norm)
        if valence is None:
            continue
        if negation_mode and _negated(tokens, i, cfg):
            total += valence * cfg.negation_scalar
        else:
            total += valence
    return total


def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


def compound_score(tokens: Sequence[Token], lex: ValenceLexicon,
                   cfg: RuleConfig = DEFAULT_RULES) -> float:
    """Rule-adjusted valence sum normalized into (-1, 1).

    Per lexicon hit, in order: booster/dampener shifts from the
    preceding window, negation scaling, ALL-CAPS emphasis (only when
    the sentence mixes cases), trailing-exclamation emphasis.  If a
    "but" token is present, valences before it are down-weighted and
    valences after it up-weighted.  The raw sum s is squashed to
    s / sqrt(s^2 + alpha).
    """
    n_caps = sum(1 for tok in tokens if tok.all_caps)
    mixed_case = 0 < n_caps < len(tokens)
    but_index = next((i for i, tok in enumerate(tokens) if tok.norm == "but"), None)

    raw_sum = 0.0
    for i, tok in enumerate(tokens):
        base = lex.entries.get(tok.norm)
        if base is None:
            continue
        valence = float(base)
        window = tokens[max(0, i - cfg.negation_window):i]
        direction = _sign(valence)
        for prev in window:
            if prev.norm in cfg.booster_terms:
                valence += direction * cfg.booster_delta
            elif prev.norm in cfg.dampener_terms:
                valence -= direction * cfg.booster_delta
        if any(prev.norm in cfg.negation_cues for prev in window):
            valence *= cfg.negation_scalar
        if mixed_case and tok.all_caps:
            valence += _sign(valence) * cfg.caps_delta
        if tok.trailing_exclaims:
            valence += _sign(valence) * cfg.exclaim_delta * min(tok.trailing_exclaims, 3)
        if but_index is not None:
            if i < but_index:
                valence *= cfg.but_weight_before
            elif i > but_index:
                valence *= cfg.but_weight_after
        raw_sum += valence
    return raw_sum / math.sqrt(raw_sum * raw_sum + cfg.alpha)


def sentence_weight(tokens: Sequence[Token],
                    key_terms: Sequence[str] = DEFAULT_KEY_TERMS,
                    kappa: float = 2.0) -> float:
    """kappa when any key term occurs in the tokens, else 1.

    Multi-word terms must match consecutive normalized tokens.
    """
    if kappa < 1.0:
        raise ValueError("kappa must be >= 1")
    norms = [tok.norm for tok in tokens]
    token_set = set(norms)
    for term in key_terms:
        words = term.lower().split()
        if len(words) == 1:
            if words[0] in token_set:
                return kappa
        else:
            n = len(words)
            for i in range(len(norms) - n + 1):
                if norms[i:i + n] == words:
                    return kappa
    return 1.0


def document_weight(traffic_tier: int, grade: float) -> float:
    """Influence weight 2^(tier-1) x clamp(grade / 12, 0.5, 1.5)."""
    if isinstance(traffic_tier, bool) or not isinstance(traffic_tier, int) \
            or not 1 <= traffic_tier <= 5:
        raise InvalidTier(f"traffic tier must be an integer in 1..5, got {traffic_tier!r}")
    readability = min(max(grade / 12.0, 0.5), 1.5)
    return float(2 ** (traffic_tier - 1)) * readability


def score_sentences(doc: Document, lex: ValenceLexicon,
                    cfg: RuleConfig = DEFAULT_RULES,
                    key_terms: Sequence[str] = DEFAULT_KEY_TERMS,
                    kappa: float = 2.0,
                    negation_mode: bool = False) -> list[SentenceScore]:
    """Per-sentence word-sum and compound scores with key-term weights."""
    scores = []
    for sent in split_sentences(doc):
        scores.append(SentenceScore(
            doc_id=doc.id,
            index=sent.index,
            word_sum=word_sum_score(sent.tokens, lex, negation_mode, cfg),
            compound=compound_score(sent.tokens, lex, cfg),
            weight=sentence_weight(sent.tokens, key_terms, kappa),
        ))
    return scores


def weighted_mean(values: Sequence[float], weights: Sequence[float]) -> float:
    total = sum(weights)
    if total <= 0:
        raise ValueError("weights must sum to a positive value")
    return sum(v * w for v, w in zip(values, weights)) / total


def score_document(doc: Document, lex: ValenceLexicon,
                   cfg: RuleConfig = DEFAULT_RULES,
                   key_terms: Sequence[str] = DEFAULT_KEY_TERMS,
                   kappa: float = 2.0,
                   negation_mode: bool = False) -> DocumentScore:
    """Weighted mean of sentence scores plus the document weight."""
    sentence_scores = score_sentences(doc, lex, cfg, key_terms, kappa, negation_mode)
    if not sentence_scores:
        raise EmptyDocument(f"document {doc.id!r} yields no sentences")
    weights = [s.weight for s in sentence_scores]
    return DocumentScore(
        doc_id=doc.id,
        word_sum_avg=weighted_mean([s.word_sum for s in sentence_scores], weights),
        compound_avg=weighted_mean([s.compound for s in sentence_scores], weights),
        doc_weight=document_weight(doc.traffic_tier, reading_grade(doc)),
        published_at=doc.published_at,
    )


def corpus_timeseries(scores: Sequence[DocumentScore],
                      from_day: date, to_day: date) -> list[TimePoint]:
    """Per-UTC-day doc_weight-weighted sentiment means over [from, to].

    Days with no documents are omitted.
    """
    if from_day > to_day:
        raise InvalidRange(f"from {from_day} is after to {to_day}")
    by_day: dict[date, list[DocumentScore]] = {}
    for score in scores:
        day = score.day
        if from_day <= day <= to_day:
            by_day.setdefault(day, []).append(score)
    points = []
    for day in sorted(by_day):
        bucket = by_day[day]
        weights = [s.doc_weight for s in bucket]
        points.append(TimePoint(
            day=day,
            avg_word_sum=weighted_mean([s.word_sum_avg for s in bucket], weights),
            avg_compound=weighted_mean([s.compound_avg for s in bucket], weights),
            n_docs=len(bucket),
        ))
    return points


def tool_agreement(scores: Sequence[DocumentScore]) -> tuple[float, float]:
    """(pearson_r, sign_agreement) between the two scorers' document scores.

    Zeros count as agreeing with either sign.  Raises
    :class:`DegenerateInput` with fewer than 2 documents or when either
    metric has zero variance.
    """
    if len(scores) < 2:
        raise DegenerateInput("need at least 2 document scores")
    word = np.array([s.word_sum_avg for s in scores], dtype=float)
    comp = np.array([s.compound_avg for s in scores], dtype=float)
    if np.ptp(word) == 0 or np.ptp(comp) == 0:
        raise DegenerateInput("zero variance in at least one metric")
    pearson_r = float(np.corrcoef(word, comp)[0, 1])
    agree = [
        w == 0 or c == 0 or _sign(w) == _sign(c)
        for w, c in zip(word.tolist(), comp.tolist())
    ]
    return pearson_r, sum(agree) / len(agree)
