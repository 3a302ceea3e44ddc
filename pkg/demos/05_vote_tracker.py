"""Legislative tracker: filter a bill file down to food-insecurity
measures with live votes, then look up a legislator's record.

Run from the repo root:  python3 demos/05_vote_tracker.py
"""

from pathlib import Path

from snaplens import filter_bills, legislator_record, load_bills

DATA = Path(__file__).parent / "data"

bills = load_bills(DATA / "bills.json")
print(f"loaded {len(bills)} bills")

filtered = filter_bills(bills)
print(f"{len(filtered)} remain after phrase matching and vote pruning:\n")
for bill in filtered:
    print(f"  {bill.id} ({bill.session}) {bill.title}")
    print(f"    matched: {', '.join(bill.matched_phrases)}")
    for vote in bill.votes:
        print(f"    {vote.vote:5s} {vote.name} ({vote.chamber})")

# Dropped along the way: no phrase match, no votes at all, or every
# voter out of office.
kept = {b.id for b in filtered}
print("\ndropped:", ", ".join(b.id for b in bills if b.id not in kept))

print("\nvoting record for L001:")
for row in legislator_record(filtered, "L001"):
    print(f"  {row.session} {row.bill_id:15s} {row.vote:5s} {row.title}")
