"""The whole pipeline in one call: build an immutable snapshot from the
corpus, lexicon and bills files, save it, and query the read-only API
in-process.

Run from the repo root:  python3 demos/06_snapshot_and_api.py
To serve over HTTP instead:
    snaplens all --input demos/data/docs.jsonl --lexicon demos/data/lexicon.tsv \
        --bills demos/data/bills.json --out demos/out/snapshot.json
    snaplens serve --snapshot demos/out/snapshot.json --port 8000
"""

from pathlib import Path

from fastapi.testclient import TestClient

from snaplens import build_snapshot, create_app, save_snapshot
from snaplens.pipeline import DEFAULT_CONFIG

DATA = Path(__file__).parent / "data"
OUT = Path(__file__).parent / "out"

snapshot = build_snapshot(DEFAULT_CONFIG, DATA / "docs.jsonl",
                          DATA / "lexicon.tsv", bills_path=DATA / "bills.json")
print(f"snapshot: {snapshot.meta['n_docs']} documents "
      f"({snapshot.meta['by_kind']}), {len(snapshot.bills)} bills, "
      f"{len(snapshot.terms)} term entries")

OUT.mkdir(exist_ok=True)
save_snapshot(snapshot, OUT / "snapshot.json")
print(f"saved {OUT / 'snapshot.json'}")

# Query the API in-process; over HTTP the same routes serve the explorer UI.
client = TestClient(create_app(snapshot))

print("\nGET /api/meta")
print(" ", client.get("/api/meta").json())

print("\nGET /api/timeseries?kind=article")
for row in client.get("/api/timeseries", params={"kind": "article"}).json():
    print(f"  {row['day']} compound={row['avg_compound']:+.3f} n={row['n_docs']}")

print("\nGET /api/terms?limit=5")
for row in client.get("/api/terms", params={"limit": 5}).json():
    print(f"  {row['term']:18s} {row['score']:.2f} ({row['origin']}, {row['day']})")

print("\nGET /api/map  (significant cells only)")
features = client.get("/api/map").json()["features"]
for feature in features:
    props = feature["properties"]
    if props["cls"] not in ("empty", "ns"):
        print(f"  q={props['q']} r={props['r']} {props['cls']} z={props['z']:.2f}")
print(f"  ({len(features)} cells total)")

print("\nGET /api/legislators")
for row in client.get("/api/legislators").json():
    print(f"  {row['id']} {row['name']} ({row['chamber']}, {row['n_votes']} votes)")

print("\nGET /api/legislators/L001/votes")
for row in client.get("/api/legislators/L001/votes").json():
    print(f"  {row['session']} {row['bill_id']:15s} {row['vote']:5s} {row['title']}")
