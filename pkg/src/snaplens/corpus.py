"""Document corpus: data model, JSONL ingestion, relevance filtering,
sentence/word tokenization and readability grading.

Documents are immutable once loaded; every function here is pure, so a
corpus can be processed in parallel without shared state.
"""

from __future__ import annotations

import json
import re
import string
import warnings
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import DuplicateId, EmptyDocument, MalformedRecord

DOC_KINDS = ("article", "tweet")
DOC_LABELS = ("positive", "negative", "neutral")

# Search terms used to pull SNAP coverage out of a mixed corpus.
DEFAULT_KEY_TERMS = ("snap", "food stamp", "food stamps", "ebt")

# "snap" alone is ambiguous ("snap out of it"); require one of these
# co-occurring tokens before treating it as a program mention.
SNAP_CONTEXT_TERMS = frozenset(
    {"food", "stamp", "stamps", "benefit", "benefits", "ebt", "hunger", "usda"}
)

_JSONL_FIELDS = {
    "id", "kind", "text", "source", "url", "published_at",
    "lat", "lon", "traffic_tier", "label",
}

_STRIP_CHARS = string.punctuation + "“”‘’«»…–—"

# Trailing-period abbreviations that never terminate a sentence.
ABBREVIATIONS = frozenset(
    {"Dr.", "Mr.", "Mrs.", "Ms.", "St.", "U.S.", "Sen.", "Rep.", "vs.", "etc."}
)

_DELIMITER_RUN = re.compile(r"[.!?]+")
_TRAILING_EXCLAIMS = re.compile(r"!+$")
_VOWEL_GROUP = re.compile(r"[aeiouy]+")


class Geotag(NamedTuple):
    lat: float
    lon: float


@dataclass(frozen=True)
class Token:
    surface: str
    norm: str
    all_caps: bool = False
    trailing_exclaims: int = 0


@dataclass(frozen=True)
class Sentence:
    doc_id: str
    index: int
    tokens: tuple[Token, ...]
    raw: str


@dataclass(frozen=True)
class Document:
    id: str
    kind: str
    text: str
    source: str
    published_at: datetime
    traffic_tier: int
    url: Optional[str] = None
    geotag: Optional[Geotag] = None
    label: Optional[str] = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("id must be nonempty")
        if self.kind not in DOC_KINDS:
            raise ValueError(f"kind must be one of {DOC_KINDS}, got {self.kind!r}")
        if not self.text.strip():
            raise ValueError("text must be nonempty after trimming")
        if not isinstance(self.traffic_tier, int) or not 1 <= self.traffic_tier <= 5:
            raise ValueError(f"traffic_tier must be an integer in 1..5, got {self.traffic_tier!r}")
        if self.geotag is not None:
            lat, lon = self.geotag
            if not -90.0 <= lat <= 90.0:
                raise ValueError(f"lat {lat} outside [-90, 90]")
            if not -180.0 <= lon <= 180.0:
                raise ValueError(f"lon {lon} outside [-180, 180]")
        if self.label is not None and self.label not in DOC_LABELS:
            raise ValueError(f"label must be one of {DOC_LABELS}, got {self.label!r}")


def parse_timestamp(value) -> datetime:
    if not isinstance(value, str):
        raise ValueError(f"published_at must be an ISO-8601 string, got {value!r}")
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    ts = datetime.fromisoformat(text)
    if ts.tzinfo is None:
        # Zone-less timestamps are tolerated and read as UTC.
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def document_from_record(record: dict) -> Document:
    """Build a Document from one decoded JSONL record."""
    unknown = set(record) - _JSONL_FIELDS
    if unknown:
        warnings.warn(f"ignoring unknown document fields: {sorted(unknown)}")

    geotag = None
    if record.get("lat") is not None or record.get("lon") is not None:
        if record.get("lat") is None or record.get("lon") is None:
            raise ValueError("geotag requires both lat and lon")
        geotag = Geotag(float(record["lat"]), float(record["lon"]))

    missing = [k for k in ("id", "kind", "text", "source", "published_at", "traffic_tier")
               if k not in record]
    if missing:
        raise ValueError(f"missing required fields: {missing}")

    tier = record["traffic_tier"]
    if isinstance(tier, bool) or not isinstance(tier, int):
        raise ValueError(f"traffic_tier must be an integer, got {tier!r}")

    return Document(
        id=str(record["id"]),
        kind=record["kind"],
        text=record["text"],
        source=record["source"],
        published_at=parse_timestamp(record["published_at"]),
        traffic_tier=tier,
        url=record.get("url"),
        geotag=geotag,
        label=record.get("label"),
    )


def document_to_record(doc: Document) -> dict:
    """Inverse of :func:`document_from_record` (round-trips exactly)."""
    record = {
        "id": doc.id,
        "kind": doc.kind,
        "text": doc.text,
        "source": doc.source,
        "published_at": doc.published_at.isoformat(),
        "traffic_tier": doc.traffic_tier,
    }
    if doc.url is not None:
        record["url"] = doc.url
    if doc.geotag is not None:
        record["lat"] = doc.geotag.lat
        record["lon"] = doc.geotag.lon
    if doc.label is not None:
        record["label"] = doc.label
    return record


def load_documents(path, format: str = "jsonl") -> list[Document]:
    """Load a document corpus from a JSON Lines file.

    One document per line, order preserved.  Raises
    :class:`MalformedRecord` on invalid JSON or an invariant violation,
    :class:`DuplicateId` when an id repeats.
    """
    if format != "jsonl":
        raise ValueError(f"unsupported corpus format: {format!r}")
    docs: list[Document] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedRecord(line_no, f"invalid JSON ({exc.msg})") from exc
            if not isinstance(record, dict):
                raise MalformedRecord(line_no, "record is not a JSON object")
            try:
                doc = document_from_record(record)
            except (ValueError, TypeError) as exc:
                raise MalformedRecord(line_no, str(exc)) from exc
            if doc.id in seen:
                raise DuplicateId(doc.id)
            seen.add(doc.id)
            docs.append(doc)
    return docs


def save_documents(docs: Iterable[Document], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for doc in docs:
            fh.write(json.dumps(document_to_record(doc), ensure_ascii=False) + "\n")


def tokenize(sentence_text: str) -> list[Token]:
    """Whitespace-split tokens with normalized forms and emphasis metadata.

    ``norm`` strips leading/trailing punctuation and lowercases;
    ``all_caps`` is true for tokens with >= 2 letters, all uppercase;
    ``trailing_exclaims`` counts trailing '!' characters, capped at 3.
    Tokens that normalize to the empty string are dropped.
    """
    tokens = []
    for surface in sentence_text.split():
        norm = surface.strip(_STRIP_CHARS).lower()
        if not norm:
            continue
        letters = [c for c in surface if c.isalpha()]
        all_caps = len(letters) >= 2 and all(c.isupper() for c in letters)
        exclaims = _TRAILING_EXCLAIMS.search(surface)
        trailing = min(len(exclaims.group()), 3) if exclaims else 0
        tokens.append(Token(surface=surface, norm=norm, all_caps=all_caps,
                            trailing_exclaims=trailing))
    return tokens


_ABBREVIATIONS_LOWER = frozenset(a.lower() for a in ABBREVIATIONS)


def _is_sentence_boundary(text: str, start: int, end: int,
                          case_sensitive: bool = True) -> bool:
    """Decide whether the delimiter run text[start:end] terminates a sentence."""
    if end < len(text):
        # Needs whitespace then an uppercase letter (or end of text).
        if not text[end].isspace():
            return False
        rest = text[end:].lstrip()
        if not rest:
            return False
        if case_sensitive:
            if not rest[0].isupper():
                return False
        elif not rest[0].isalpha():
            return False
    if text[start:end] == ".":
        word_start = start
        while word_start > 0 and not text[word_start - 1].isspace():
            word_start -= 1
        word = re.sub(r"^[^\w]+", "", text[word_start:end])
        if case_sensitive:
            if word in ABBREVIATIONS:
                return False
        elif word.lower() in _ABBREVIATIONS_LOWER:
            return False
    return True


def _split_segments(text: str, case_sensitive: bool = True) -> list[str]:
    segments: list[str] = []
    cursor = 0
    for match in _DELIMITER_RUN.finditer(text):
        if _is_sentence_boundary(text, match.start(), match.end(), case_sensitive):
            segment = text[cursor:match.end()].strip()
            if segment:
                segments.append(segment)
            cursor = match.end()
    tail = text[cursor:].strip()
    if tail:
        segments.append(tail)
    return segments


def split_sentences(doc: Document) -> list[Sentence]:
    """Split a document into sentences on ., ! and ? boundaries.

    A delimiter terminates a sentence only when followed by whitespace
    and an uppercase letter, or the end of the text; the fixed
    abbreviation list (Dr., U.S., ...) never terminates.  Fragments with
    no word tokens are merged into their neighbors so no characters are
    lost.
    """
    text = doc.text.strip()
    if not text:
        raise EmptyDocument(f"document {doc.id!r} has no text")

    segments = _split_segments(text)
    sentences: list[Sentence] = []
    pending = ""  # token-less fragments awaiting a host sentence
    for segment in segments:
        raw = (pending + " " + segment).strip() if pending else segment
        tokens = tokenize(raw)
        if not tokens:
            pending = raw
            continue
        pending = ""
        sentences.append(Sentence(doc_id=doc.id, index=len(sentences),
                                  tokens=tuple(tokens), raw=raw))
    if pending and sentences:
        last = sentences[-1]
        merged = last.raw + " " + pending
        sentences[-1] = Sentence(doc_id=doc.id, index=last.index,
                                 tokens=tuple(tokenize(merged)) or last.tokens,
                                 raw=merged)
    return sentences


def _contains_phrase(norms: Sequence[str], phrase_words: Sequence[str]) -> bool:
    n = len(phrase_words)
    if n == 0 or n > len(norms):
        return False
    for i in range(len(norms) - n + 1):
        if list(norms[i:i + n]) == list(phrase_words):
            return True
    return False


def matches_key_terms(norms: Sequence[str], key_terms: Sequence[str]) -> bool:
    """Whole-token key-term matching with the "snap" disambiguation rule."""
    token_set = set(norms)
    for term in key_terms:
        words = term.split()
        if len(words) > 1:
            if _contains_phrase(norms, words):
                return True
        elif term == "snap":
            if "snap" in token_set and token_set & SNAP_CONTEXT_TERMS:
                return True
        elif term in token_set:
            return True
    return False


def filter_relevant(docs: Sequence[Document],
                    key_terms: Sequence[str] = DEFAULT_KEY_TERMS) -> list[Document]:
    """Keep documents that mention any key term as whole tokens.

    Multi-word terms must appear as consecutive tokens.  The single
    token "snap" counts only when a context term co-occurs.
    """
    if not key_terms:
        raise ValueError("key_terms must be nonempty")
    key_terms = [t.lower() for t in key_terms]
    kept = []
    for doc in docs:
        norms = [t.norm for t in tokenize(doc.text)]
        if matches_key_terms(norms, key_terms):
            kept.append(doc)
    return kept


def count_syllables(word: str) -> int:
    """Vowel-group heuristic: runs of vowels count once, a trailing
    silent 'e' is dropped, and every word has at least one syllable."""
    w = word.lower()
    if w.endswith("e"):
        w = w[:-1]
    return max(len(_VOWEL_GROUP.findall(w)), 1)


def reading_grade(doc: Document) -> float:
    """Flesch-Kincaid grade level of the document text.

    Sentence boundaries are detected case-insensitively here so the
    grade does not change when the input is re-cased.
    """
    text = doc.text.strip()
    if not text:
        raise EmptyDocument(f"document {doc.id!r} has no text")
    segments = [seg for seg in _split_segments(text, case_sensitive=False)
                if tokenize(seg)]
    words = [tok for seg in segments for tok in tokenize(seg)]
    if not segments or not words:
        raise EmptyDocument(f"document {doc.id!r} has no scorable words")
    syllables = sum(count_syllables(tok.norm) for tok in words)
    return (0.39 * len(words) / len(segments)
            + 11.8 * syllables / len(words)
            - 15.59)
