"""Command-line surface: every command end to end."""

import json
import subprocess
import sys

import pytest

from jumblekit import corpus
from jumblekit.cli import main
from jumblekit.tokens import tokenize, word_texts


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_corpus(tmp_path, name):
    path = tmp_path / f"{name}.txt"
    path.write_text(corpus.corpus_text(name), encoding="utf-8")
    return str(path)


# ---------------------------------------------------------------------------
# distance


def test_distance_levenshtein(capsys):
    code, out, _ = run(capsys, "distance", "Sunday", "Monday", "--metric", "levenshtein")
    assert code == 0 and out == "2\n"


def test_distance_osa(capsys):
    code, out, _ = run(capsys, "distance", "lost", "lots", "--metric", "osa")
    assert code == 0 and out == "1\n"


def test_distance_hamming_identity(capsys):
    code, out, _ = run(capsys, "distance", "abc", "abc", "--metric", "hamming")
    assert code == 0 and out == "0\n"


def test_distance_hamming_length_mismatch_exits_2(capsys):
    code, out, err = run(capsys, "distance", "abc", "ab", "--metric", "hamming")
    assert code == 2 and out == "" and "equal lengths" in err


# ---------------------------------------------------------------------------
# perturb / jumble


def test_jumble_deterministic(tmp_path, capsys):
    source = write_corpus(tmp_path, "wordlist100")
    code, first, _ = run(capsys, "jumble", source, "--seed", "7")
    assert code == 0
    code, second, _ = run(capsys, "jumble", source, "--seed", "7")
    assert code == 0
    assert first == second
    code, other, _ = run(capsys, "perturb", source, "--generator", "jumble", "--seed", "7")
    assert other == first


def test_perturb_edit1_verifies(tmp_path, capsys):
    source = write_corpus(tmp_path, "passage")
    out_file = tmp_path / "perturbed.txt"
    trace_file = tmp_path / "trace.json"
    code, _, _ = run(
        capsys,
        "perturb",
        source,
        "--generator",
        "edit1",
        "--mode",
        "fix-first-last",
        "--seed",
        "1",
        "--out",
        str(out_file),
        "--trace",
        str(trace_file),
    )
    assert code == 0
    code, report_out, _ = run(
        capsys,
        "verify",
        source,
        str(out_file),
        "--checks",
        "endpoints,distance",
        "--metric",
        "osa",
    )
    assert code == 0
    report = json.loads(report_out)
    assert report["all_passed"] is True
    traces = json.loads(trace_file.read_text(encoding="utf-8"))
    assert traces["spec"]["seed"] == 1
    assert len(traces["traces"]) == 67


def test_perturb_qwerty_with_asymmetric_layout_exits_2(tmp_path, capsys):
    layout = tmp_path / "bad.kbd"
    layout.write_text("a: b\nb:\n", encoding="utf-8")
    source = write_corpus(tmp_path, "passage")
    code, out, err = run(
        capsys,
        "perturb",
        source,
        "--generator",
        "edit1",
        "--mode",
        "qwerty",
        "--layout",
        str(layout),
    )
    assert code == 2 and out == ""
    assert "'a' -> 'b'" in err


# ---------------------------------------------------------------------------
# strip


def test_strip_with_bundled_lexicon(tmp_path, capsys):
    source = write_corpus(tmp_path, "passage")
    code, out, _ = run(capsys, "strip", source, "--lexicon", "passage")
    assert code == 0
    want = corpus.corpus_text("passage_stripped")
    assert out.casefold() == want.casefold()


def test_strip_output_contains_no_lexicon_words(tmp_path, capsys):
    source = write_corpus(tmp_path, "cambridge_original")
    code, out, _ = run(capsys, "strip", source, "--lexicon", "default")
    assert code == 0
    lexicon = corpus.lexicon("default")
    assert all(w not in lexicon for w in word_texts(tokenize(out)))


def test_strip_unknown_lexicon_exits_2(tmp_path, capsys):
    source = write_corpus(tmp_path, "passage")
    code, _, err = run(capsys, "strip", source, "--lexicon", "missing-lexicon")
    assert code == 2 and "missing-lexicon" in err


# ---------------------------------------------------------------------------
# verify / stats


def test_verify_flags_published_anomalies(tmp_path, capsys):
    original = write_corpus(tmp_path, "wordlist100")
    candidate = write_corpus(tmp_path, "wordlist100_edit1_unconstrained")
    code, out, _ = run(
        capsys, "verify", original, candidate, "--checks", "distance"
    )
    assert code == 0
    report = json.loads(out)
    assert report["all_passed"] is False
    assert report["violation_count"] > 0
    assert report["word_count"] == 100


def test_verify_identity_all_pass(tmp_path, capsys):
    source = write_corpus(tmp_path, "passage")
    code, out, _ = run(capsys, "verify", source, source, "--full")
    report = json.loads(out)
    assert code == 0 and report["all_passed"] is True
    assert len(report["verdicts"]) == 67


def test_verify_unknown_check_exits_2(tmp_path, capsys):
    source = write_corpus(tmp_path, "passage")
    code, _, err = run(capsys, "verify", source, source, "--checks", "bogus")
    assert code == 2 and "bogus" in err


def test_stats_on_circulated_pair(tmp_path, capsys):
    original = write_corpus(tmp_path, "cambridge_original")
    candidate = write_corpus(tmp_path, "cambridge_jumbled")
    code, out, _ = run(capsys, "stats", original, candidate)
    assert code == 0
    report = json.loads(out)
    assert report["word_count"] == 69
    assert 0.40 <= report["unchanged_fraction"] <= 0.55
    assert report["unchanged_in_45_50_band"] is True


def test_stats_identity(tmp_path, capsys):
    source = write_corpus(tmp_path, "passage")
    code, out, _ = run(capsys, "stats", source, source)
    report = json.loads(out)
    assert report["unchanged_fraction"] == 1.0


def test_stats_histogram_csv(tmp_path, capsys):
    original = write_corpus(tmp_path, "wordlist100")
    candidate = write_corpus(tmp_path, "wordlist100_edit1_fix_first")
    csv_path = tmp_path / "histogram.csv"
    code, out, _ = run(capsys, "stats", original, candidate, "--csv", str(csv_path))
    assert code == 0
    report = json.loads(out)
    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "distance,count"
    counts = {int(d): int(n) for d, n in (line.split(",") for line in lines[1:])}
    assert counts == {int(k): v for k, v in report["distance_histogram"].items()}
    assert sum(counts.values()) == 100


def test_stats_word_count_mismatch_exits_2(tmp_path, capsys):
    original = write_corpus(tmp_path, "passage")
    candidate = write_corpus(tmp_path, "passage_edit1")
    code, _, err = run(capsys, "stats", original, candidate)
    assert code == 2 and "word counts differ" in err


# ---------------------------------------------------------------------------
# trial make / ingest


def make_results(bundle, reader, conditions=None, base=4000):
    conditions = conditions or [c["name"] for c in bundle["conditions"][:2]]
    records = [
        {
            "bundle_id": bundle["bundle_id"],
            "reader_id": reader,
            "condition": cond,
            "text_index": 0,
            "elapsed_ms": base + 1000 * i,
            "recorded_at": "2026-01-01T00:00:00Z",
        }
        for i, cond in enumerate(conditions)
    ]
    return {
        "schema_version": 1,
        "bundle_id": bundle["bundle_id"],
        "reader_id": reader,
        "records": records,
    }


def test_trial_make_preset_and_ingest_round_trip(tmp_path, capsys):
    bundle_path = tmp_path / "bundle.json"
    code, _, err = run(
        capsys, "trial", "make", "--preset", "cambridge", "--out", str(bundle_path)
    )
    assert code == 0
    bundle = json.loads(bundle_path.read_text(encoding="utf-8"))
    assert len(bundle["conditions"]) >= 4

    r1 = tmp_path / "r1.json"
    r2 = tmp_path / "r2.json"
    r1.write_text(json.dumps(make_results(bundle, "r1", base=4000)), encoding="utf-8")
    r2.write_text(json.dumps(make_results(bundle, "r2", base=6000)), encoding="utf-8")
    csv_path = tmp_path / "summary.csv"
    code, out, _ = run(
        capsys,
        "trial",
        "ingest",
        str(r1),
        str(r2),
        "--bundle",
        str(bundle_path),
        "--csv",
        str(csv_path),
    )
    assert code == 0
    report = json.loads(out)
    assert report["record_count"] == 4
    by_name = {s["condition"]: s for s in report["summaries"]}
    first_condition = bundle["conditions"][0]["name"]
    assert by_name[first_condition]["reader_count"] == 2
    assert by_name[first_condition]["mean_ms"] == 5000  # (4000 + 6000) / 2
    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "condition,reader_count,mean_ms"
    assert len(lines) == 3


def test_trial_make_deterministic(tmp_path, capsys):
    code, first, _ = run(capsys, "trial", "make", "--preset", "cambridge", "--seed", "5")
    assert code == 0
    code, second, _ = run(capsys, "trial", "make", "--preset", "cambridge", "--seed", "5")
    assert first == second


def test_trial_make_unknown_preset_exits_2(capsys):
    code, _, err = run(capsys, "trial", "make", "--preset", "nope")
    assert code == 2 and "nope" in err


def test_trial_make_custom_config(tmp_path, capsys):
    config = {
        "bundle_id": "custom-1",
        "presentation": "shuffled-per-reader",
        "conditions": [
            {"name": "only", "source": "corpus:wordlist100", "generator": "jumble"}
        ],
    }
    config_path = tmp_path / "config.json"
    config_path.write_text(json.dumps(config), encoding="utf-8")
    code, out, _ = run(capsys, "trial", "make", "--config", str(config_path))
    assert code == 0
    bundle = json.loads(out)
    assert bundle["bundle_id"] == "custom-1"
    assert bundle["presentation"] == "shuffled-per-reader"


def test_trial_ingest_rejects_duplicates(tmp_path, capsys):
    bundle_path = tmp_path / "bundle.json"
    run(capsys, "trial", "make", "--preset", "cambridge", "--out", str(bundle_path))
    bundle = json.loads(bundle_path.read_text(encoding="utf-8"))
    doc = make_results(bundle, "r1")
    doc["records"].append(doc["records"][0])
    results = tmp_path / "dup.json"
    results.write_text(json.dumps(doc), encoding="utf-8")
    code, _, err = run(capsys, "trial", "ingest", str(results))
    assert code == 2 and "duplicate" in err


def test_trial_ingest_rejects_unknown_bundle_id(tmp_path, capsys):
    bundle_path = tmp_path / "bundle.json"
    run(capsys, "trial", "make", "--preset", "cambridge", "--out", str(bundle_path))
    bundle = json.loads(bundle_path.read_text(encoding="utf-8"))
    doc = make_results(bundle, "r1")
    doc["bundle_id"] = "bundle-imposter"
    for rec in doc["records"]:
        rec["bundle_id"] = "bundle-imposter"
    results = tmp_path / "other.json"
    results.write_text(json.dumps(doc), encoding="utf-8")
    code, _, err = run(capsys, "trial", "ingest", str(results), "--bundle", str(bundle_path))
    assert code == 2 and "bundle-imposter" in err


def test_trial_ingest_rejects_malformed_records(tmp_path, capsys):
    results = tmp_path / "bad.json"
    results.write_text(json.dumps({"schema_version": 1}), encoding="utf-8")
    code, _, err = run(capsys, "trial", "ingest", str(results))
    assert code == 2


# ---------------------------------------------------------------------------
# console entry point


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "jumblekit.cli", "distance", "monkey", "monkeys"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1\n"
