"""Hexagon-grid hot/cold-spot analysis of geotagged sentiment.

Builds a pointy-top hex grid over the continental U.S., joins geotagged
document scores into cells, computes the local Gi* z-score per cell and
classifies 90/95/99% hot and cold spots.

Run from the repo root:  python3 demos/02_hotspot_map.py
"""

import json
from pathlib import Path

from snaplens import (classify_hotspots, filter_relevant, gi_star,
                      grid_to_geojson, load_documents, load_lexicon,
                      make_hex_grid, score_document, spatial_join)

DATA = Path(__file__).parent / "data"
OUT = Path(__file__).parent / "out"

US_BBOX = (-125.0, 24.0, -66.0, 50.0)

docs = filter_relevant(load_documents(DATA / "docs.jsonl"))
lexicon = load_lexicon(DATA / "lexicon.tsv")
scores = {d.id: score_document(d, lexicon) for d in docs}

geotagged = [(d.geotag, scores[d.id].compound_avg) for d in docs if d.geotag]
weights = [scores[d.id].doc_weight for d in docs if d.geotag]
print(f"{len(geotagged)} geotagged documents of {len(docs)}")

# A 3-degree cell keeps the demo grid readable; production runs use 1.0.
grid = make_hex_grid(US_BBOX, 3.0)
spatial_join(grid, geotagged, weights)
print(f"grid: {len(grid.cells)} cells, {len(grid.data_cells())} with data, "
      f"{grid.skipped_points} points outside the extent")

gi_star(grid)
classify_hotspots(grid)

# ---------------------------------------------------------------------------
# Crude console rendering: one character per cell, rows = r descending
# (north at the top), hot spots '+', cold spots '-', data without
# significance 'o', empty cells '.'.

GLYPH = {"hot99": "+", "hot95": "+", "hot90": "+",
         "cold99": "-", "cold95": "-", "cold90": "-", "ns": "o", "empty": "."}

rows = {}
for (q, r), cell in grid.cells.items():
    rows.setdefault(r, {})[q] = GLYPH[cell.cls]
print("\nmap (rows are grid rows, north up):")
for r in sorted(rows, reverse=True):
    qs = rows[r]
    offset = " " * (max(rows) - r)
    print("  " + offset + " ".join(qs[q] for q in sorted(qs)))

print("\ncells with data:")
for cell in grid.data_cells():
    lon, lat = cell.center
    print(f"  q={cell.q:+3d} r={cell.r:+3d} center=({lat:5.1f}N {-lon:5.1f}W) "
          f"value={cell.value:+.3f} n={cell.count} z={cell.z:+.2f} -> {cell.cls}")

OUT.mkdir(exist_ok=True)
geojson_path = OUT / "hotspots.geojson"
geojson_path.write_text(json.dumps(grid_to_geojson(grid)), encoding="utf-8")
print(f"\nwrote {geojson_path}")
