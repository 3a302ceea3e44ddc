import json

import pytest

from snaplens.cli import main
from snaplens.pipeline import load_snapshot, score_from_record

from test_service import write_fixture_files


@pytest.fixture
def files(tmp_path):
    return write_fixture_files(tmp_path), tmp_path


def test_score_writes_parseable_jsonl(files):
    (corpus, lexicon, _, config), tmp = files
    out = tmp / "scores.jsonl"
    code = main(["score", "--input", str(corpus), "--lexicon", str(lexicon),
                 "--config", str(config), "--out", str(out)])
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 10
    scores = [score_from_record(json.loads(line)) for line in lines]
    assert all(-1 <= s.compound_avg <= 1 for s in scores)


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2
    assert "usage" in capsys.readouterr().err.lower()


def test_missing_required_arg_exits_2(files):
    with pytest.raises(SystemExit) as err:
        main(["score", "--input", "x.jsonl"])
    assert err.value.code == 2


def test_hotspots_too_few_cells_exits_1(tmp_path, capsys):
    docs = [{
        "id": "a1", "kind": "article", "source": "ledger", "traffic_tier": 1,
        "published_at": "2017-06-01T10:00:00Z", "lat": 2.0, "lon": 2.0,
        "text": "Food stamps help families."}]
    (corpus, lexicon, _, config), _ = (write_fixture_files(tmp_path, docs=docs), None)
    out = tmp_path / "grid.geojson"
    code = main(["hotspots", "--input", str(corpus), "--lexicon", str(lexicon),
                 "--config", str(config), "--out", str(out)])
    assert code == 1
    assert "TooFewCells" in capsys.readouterr().err


def test_hotspots_writes_geojson(files):
    (corpus, lexicon, _, config), tmp = files
    out = tmp / "grid.geojson"
    code = main(["hotspots", "--input", str(corpus), "--lexicon", str(lexicon),
                 "--config", str(config), "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["type"] == "FeatureCollection"
    assert any(f["properties"]["count"] > 0 for f in payload["features"])


def test_ingest_filters_and_round_trips(files):
    (corpus, _, _, config), tmp = files
    out = tmp / "filtered.jsonl"
    code = main(["ingest", "--input", str(corpus), "--config", str(config),
                 "--out", str(out)])
    assert code == 0
    assert len(out.read_text().strip().splitlines()) == 10


def test_timeseries_from_scores(files):
    (corpus, lexicon, _, config), tmp = files
    scores_path = tmp / "scores.jsonl"
    main(["score", "--input", str(corpus), "--lexicon", str(lexicon),
          "--config", str(config), "--out", str(scores_path)])
    out = tmp / "timeseries.json"
    code = main(["timeseries", "--scores", str(scores_path), "--out", str(out)])
    assert code == 0
    points = json.loads(out.read_text())
    assert [p["day"] for p in points] == sorted({p["day"] for p in points})
    assert sum(p["n_docs"] for p in points) == 10


def test_terms_writes_entries(files):
    (corpus, lexicon, _, config), tmp = files
    out = tmp / "terms.json"
    code = main(["terms", "--input", str(corpus), "--lexicon", str(lexicon),
                 "--config", str(config), "--out", str(out)])
    assert code == 0
    entries = json.loads(out.read_text())
    assert entries and all(e["score"] >= 0 for e in entries)


def test_votes_filtering_and_record(files):
    (_, _, bills, config), tmp = files
    out = tmp / "filtered_bills.json"
    code = main(["votes", "--bills", str(bills), "--config", str(config),
                 "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert [b["id"] for b in payload["bills"]] == ["GB1", "GB3"]

    record_out = tmp / "l1.json"
    code = main(["votes", "--bills", str(bills), "--legislator", "L1",
                 "--out", str(record_out)])
    assert code == 0
    rows = json.loads(record_out.read_text())
    assert [r["bill_id"] for r in rows] == ["GB3", "GB1"]


def test_votes_unknown_legislator_exits_1(files, capsys):
    (_, _, bills, _), tmp = files
    code = main(["votes", "--bills", str(bills), "--legislator", "NOBODY",
                 "--out", str(tmp / "x.json")])
    assert code == 1
    assert "UnknownLegislator" in capsys.readouterr().err


def test_all_builds_loadable_snapshot(files):
    (corpus, lexicon, bills, config), tmp = files
    out = tmp / "snapshot.json"
    code = main(["all", "--input", str(corpus), "--lexicon", str(lexicon),
                 "--bills", str(bills), "--config", str(config),
                 "--built-at", "2017-07-01T00:00:00Z", "--out", str(out)])
    assert code == 0
    snapshot = load_snapshot(out)
    assert snapshot.meta["n_docs"] == 10
    assert len(snapshot.bills) == 2

    again = tmp / "snapshot2.json"
    main(["all", "--input", str(corpus), "--lexicon", str(lexicon),
          "--bills", str(bills), "--config", str(config),
          "--built-at", "2017-07-01T00:00:00Z", "--out", str(again)])
    assert out.read_bytes() == again.read_bytes()


def test_missing_input_file_exits_1(tmp_path, capsys):
    code = main(["ingest", "--input", str(tmp_path / "none.jsonl"),
                 "--out", str(tmp_path / "out.jsonl")])
    assert code == 1
    assert "error" in capsys.readouterr().err
