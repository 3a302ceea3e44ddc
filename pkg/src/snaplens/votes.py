"""Legislative tracking: bill ingestion, phrase filtering with vote
pruning, and per-legislator vote lookup.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import requests

from .errors import BillsFetchError, MalformedFile, UnknownLegislator

CHAMBERS = ("house", "senate")
VOTE_VALUES = ("yea", "nay", "other")

# Phrases that mark a bill as food-insecurity related.
DEFAULT_BILL_PHRASES = (
    "food stamps", "snap", "food bank", "food desert",
    "hunger", "food insecurity", "georgia peach card",
)

ENV_BILLS_URL = "SNAPLENS_BILLS_URL"
ENV_BILLS_API_KEY = "SNAPLENS_BILLS_API_KEY"


@dataclass(frozen=True)
class VoteRecord:
    legislator_id: str
    name: str
    chamber: str
    in_office: bool
    vote: str

    def __post_init__(self):
        if self.chamber not in CHAMBERS:
            raise ValueError(f"chamber must be one of {CHAMBERS}, got {self.chamber!r}")
        if self.vote not in VOTE_VALUES:
            raise ValueError(f"vote must be one of {VOTE_VALUES}, got {self.vote!r}")


@dataclass(frozen=True)
class Bill:
    id: str
    title: str
    description: str
    session: str
    votes: tuple[VoteRecord, ...]
    matched_phrases: tuple[str, ...] = ()


@dataclass(frozen=True)
class LegislatorVote:
    bill_id: str
    title: str
    session: str
    vote: str


def _vote_from_record(record: dict) -> VoteRecord:
    try:
        return VoteRecord(
            legislator_id=str(record["legislator_id"]),
            name=record["name"],
            chamber=record["chamber"],
            in_office=bool(record["in_office"]),
            vote=record["vote"],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedFile(f"bad vote record: {exc}") from exc


def bill_from_record(record: dict) -> Bill:
    if not isinstance(record, dict):
        raise MalformedFile(f"bill entry is not an object: {record!r}")
    missing = [k for k in ("id", "title", "description", "session", "votes") if k not in record]
    if missing:
        raise MalformedFile(f"bill missing fields: {missing}")
    if not isinstance(record["votes"], list):
        raise MalformedFile(f"bill {record['id']!r}: votes must be an array")
    return Bill(
        id=str(record["id"]),
        title=record["title"],
        description=record["description"],
        session=str(record["session"]),
        votes=tuple(_vote_from_record(v) for v in record["votes"]),
        matched_phrases=tuple(record.get("matched_phrases", ())),
    )


def load_bills(path) -> list[Bill]:
    """Parse a bills JSON file (``{"bills": [...]}``), pre-filter state."""
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedFile(f"invalid JSON: {exc}") from exc
    return parse_bills_payload(payload)


def parse_bills_payload(payload) -> list[Bill]:
    if not isinstance(payload, dict) or not isinstance(payload.get("bills"), list):
        raise MalformedFile("expected a JSON object with a 'bills' array")
    return [bill_from_record(rec) for rec in payload["bills"]]


def bill_to_record(bill: Bill) -> dict:
    return {
        "id": bill.id,
        "title": bill.title,
        "description": bill.description,
        "session": bill.session,
        "matched_phrases": list(bill.matched_phrases),
        "votes": [
            {
                "legislator_id": v.legislator_id,
                "name": v.name,
                "chamber": v.chamber,
                "in_office": v.in_office,
                "vote": v.vote,
            }
            for v in bill.votes
        ],
    }


def save_bills(bills: Sequence[Bill], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"bills": [bill_to_record(b) for b in bills]}, fh, indent=2)
        fh.write("\n")


def filter_bills(bills: Sequence[Bill],
                 phrases: Sequence[str] = DEFAULT_BILL_PHRASES) -> list[Bill]:
    """Keep phrase-matching bills with at least one in-office vote.

    Matching is a case-insensitive substring test over title and
    description; matched phrases are annotated on the bill.  Bills with
    no votes are removed, out-of-office vote records are pruned, and
    bills left voteless by the pruning are removed too.
    """
    if not phrases:
        raise ValueError("phrases must be nonempty")
    kept = []
    for bill in bills:
        haystack = f"{bill.title} {bill.description}".lower()
        matched = tuple(p for p in phrases if p.lower() in haystack)
        if not matched:
            continue
        if not bill.votes:
            continue
        votes = tuple(v for v in bill.votes if v.in_office)
        if not votes:
            continue
        kept.append(replace(bill, matched_phrases=matched, votes=votes))
    return kept


def legislator_record(bills: Sequence[Bill],
                      legislator_id: str) -> list[LegislatorVote]:
    """All votes by a legislator across filtered bills, sorted by
    (session, bill id).  Raises :class:`UnknownLegislator` when the id
    appears nowhere."""
    rows = []
    for bill in bills:
        for vote in bill.votes:
            if vote.legislator_id == legislator_id:
                rows.append(LegislatorVote(bill_id=bill.id, title=bill.title,
                                           session=bill.session, vote=vote.vote))
    if not rows:
        raise UnknownLegislator(legislator_id)
    rows.sort(key=lambda row: (row.session, row.bill_id))
    return rows


def fetch_bills(out_path, base_url: Optional[str] = None,
                api_key: Optional[str] = None, timeout: float = 30.0) -> list[Bill]:
    """Fetch a vote-record payload and write the normalized bills file.

    The base URL and API key come from the arguments or the
    ``SNAPLENS_BILLS_URL`` / ``SNAPLENS_BILLS_API_KEY`` environment
    variables.  Only ever writes ``out_path``; raises
    :class:`BillsFetchError` when offline or misconfigured.
    """
    base_url = base_url or os.environ.get(ENV_BILLS_URL)
    api_key = api_key or os.environ.get(ENV_BILLS_API_KEY)
    if not base_url:
        raise BillsFetchError(
            f"no bills endpoint configured; set {ENV_BILLS_URL} or pass base_url")
    headers = {"X-API-KEY": api_key} if api_key else {}
    try:
        response = requests.get(base_url, headers=headers, timeout=timeout)
        response.raise_for_status()
        payload = response.json()
    except (requests.RequestException, ValueError) as exc:
        raise BillsFetchError(f"could not fetch bills from {base_url}: {exc}") from exc
    bills = parse_bills_payload(payload)
    save_bills(bills, out_path)
    return bills
