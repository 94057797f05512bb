import json
import subprocess
import sys

import pytest

from conftest import DATA, GOLDEN

COLON_CSV = str(DATA / "colon20.csv")
AUTHORED_CSV = str(DATA / "authored120.csv")


def run_cli(*argv, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "pubgames", *argv],
        input=stdin, capture_output=True, text=True, timeout=120,
    )


def write_corpus(path, rows):
    lines = ["title,authors,year,venue,doi,url"] + rows
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


# --- ingest ------------------------------------------------------------------

def test_ingest_valid_corpus():
    proc = run_cli("ingest", "--corpus", AUTHORED_CSV)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "120 papers loaded"


def test_ingest_missing_title_names_row_and_column(tmp_path):
    corpus = write_corpus(tmp_path / "bad.csv", ["ok,A,2020,V,,", ",A,2021,V,,"])
    proc = run_cli("ingest", "--corpus", corpus)
    assert proc.returncode == 1
    assert "row 1" in proc.stderr and "title" in proc.stderr


def test_ingest_duplicate_author_diagnostic(tmp_path):
    corpus = write_corpus(tmp_path / "dup.csv", ["T,A|A,2020,V,,"])
    proc = run_cli("ingest", "--corpus", corpus)
    assert proc.returncode == 1
    assert "authors" in proc.stderr


def test_ingest_strict_reports_all(tmp_path):
    corpus = write_corpus(
        tmp_path / "multi.csv",
        [",A,2020,V,,", "ok,A,2020,V,,", "T,A,xx,V,,"],
    )
    default = run_cli("ingest", "--corpus", corpus)
    strict = run_cli("ingest", "--corpus", corpus, "--strict")
    assert default.returncode == strict.returncode == 1
    assert default.stderr.count("error:") == 1
    assert strict.stderr.count("error:") == 2


def test_ingest_unreadable_file():
    proc = run_cli("ingest", "--corpus", "/nonexistent/corpus.csv")
    assert proc.returncode == 1
    assert "cannot read" in proc.stderr


# --- stats -------------------------------------------------------------------

def test_stats_prints_json():
    proc = run_cli("stats", "--corpus", COLON_CSV)
    assert proc.returncode == 0
    body = json.loads(proc.stdout)
    assert body["colon_eligible"] == 20
    assert body["colon_pool"] == "4845"  # C(20,4)


# --- generate ----------------------------------------------------------------

def test_generate_count_three_and_rerun_identical(tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    for out in (out1, out2):
        proc = run_cli("generate", "--corpus", AUTHORED_CSV, "--game", "authored",
                       "--seed", "batch", "--count", "3", "--out", str(out))
        assert proc.returncode == 0, proc.stderr
    files1 = sorted(p.name for p in out1.iterdir())
    files2 = sorted(p.name for p in out2.iterdir())
    assert len(files1) == 3 and files1 == files2
    for name in files1:
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def test_generate_literal_seed_matches_golden_file(tmp_path):
    proc = run_cli("generate", "--corpus", COLON_CSV, "--game", "colon",
                   "--seed", "ca5af6cb9ecc13d4", "--out", str(tmp_path))
    assert proc.returncode == 0, proc.stderr
    written = tmp_path / "colon-ca5af6cb9ecc13d4.json"
    assert written.read_bytes() == (GOLDEN / "colon-test-1.full.json").read_bytes()


def test_generate_literal_seed_with_count_errors(tmp_path):
    proc = run_cli("generate", "--corpus", COLON_CSV, "--game", "colon",
                   "--seed", "ca5af6cb9ecc13d4", "--count", "2", "--out", str(tmp_path))
    assert proc.returncode == 1
    assert "tag seed" in proc.stderr


def test_generate_corpus_too_small(tmp_path):
    corpus = write_corpus(tmp_path / "tiny.csv", [
        "A: B,X,2020,V,,", "C: D,X,2020,V,,", "E: F,X,2020,V,,",
    ])
    proc = run_cli("generate", "--corpus", corpus, "--game", "colon",
                   "--seed", "t", "--out", str(tmp_path / "out"))
    assert proc.returncode == 1
    assert "colon-eligible" in proc.stderr


def test_generate_full_json_has_solution(tmp_path):
    run_cli("generate", "--corpus", AUTHORED_CSV, "--game", "authored",
            "--seed", "full", "--out", str(tmp_path))
    payload = json.loads(next(tmp_path.glob("authored-*.json")).read_text())
    assert set(payload) == {"game", "seed", "groups", "grid_order"}


# --- play --------------------------------------------------------------------

def golden_scripts():
    return json.loads((GOLDEN / "share-scripts.json").read_text(encoding="utf-8"))


def script_stdin(entry):
    # play speaks 1-based indices
    return "\n".join(
        " ".join(str(v + 1) for v in guess) for guess in entry["guesses"]
    ) + "\n"


@pytest.mark.parametrize("name", [
    "colon-all-correct", "authored-two-misses", "colon-rejected-and-miss",
])
def test_play_transcript_ends_with_golden_card(name):
    from pubgames.rng import derive_seed, seed_to_hex

    entry = next(s for s in golden_scripts() if s["name"] == name)
    corpus = COLON_CSV if entry["game"] == "colon" else AUTHORED_CSV
    seed = seed_to_hex(derive_seed(entry["seed_tag"]))
    proc = run_cli("play", "--corpus", corpus, "--game", entry["game"],
                   "--seed", seed, stdin=script_stdin(entry))
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.rstrip("\n").endswith(entry["card"])


def test_play_invalid_input_reprompts_without_mistake():
    stdin = "nonsense\n0 0\n1 1\n1 2\n2 1\n3 3\n4 4\n"
    proc = run_cli("play", "--corpus", COLON_CSV, "--game", "colon",
                   "--seed", "ca5af6cb9ecc13d4", stdin=stdin)
    assert proc.returncode == 0, proc.stderr
    # "nonsense" and "0 0" never reach the game; "1 1" is a real miss
    assert proc.stdout.rstrip("\n").endswith("Mistakes: 1")


def test_play_quit_exits_2():
    proc = run_cli("play", "--corpus", COLON_CSV, "--game", "colon",
                   "--seed", "ca5af6cb9ecc13d4", stdin="q\n")
    assert proc.returncode == 2


def test_play_eof_exits_2():
    proc = run_cli("play", "--corpus", COLON_CSV, "--game", "colon",
                   "--seed", "ca5af6cb9ecc13d4", stdin="")
    assert proc.returncode == 2


# --- parser ------------------------------------------------------------------

def test_unknown_flag_is_an_error():
    proc = run_cli("stats", "--corpus", COLON_CSV, "--frobnicate")
    assert proc.returncode == 2


def test_missing_subcommand_is_an_error():
    proc = run_cli()
    assert proc.returncode == 2
