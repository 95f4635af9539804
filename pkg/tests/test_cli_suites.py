import json

import pytest

from crossed_coherence import corpus
from crossed_coherence.cli import main
from crossed_coherence.errors import CrossedError
from crossed_coherence.serialize import dump
from crossed_coherence.simplicial import boundary_subcomplex
from crossed_coherence.suites import normalize_id, parse_filter, run_suite


@pytest.mark.parametrize("text,want", [("Δ[1]×Δ[1]", "D1xD1"), ("∂Δ[2]", "dD2"), (" Δ[3] ", "D3"),
                                       ("torus", "torus"), ("π(1)", "D1")])
def test_notation_aliases(text, want):
    assert normalize_id(text) == want


def test_filter_errors():
    with pytest.raises(CrossedError):
        parse_filter("")
    with pytest.raises(CrossedError):
        parse_filter(" , ")
    with pytest.raises(CrossedError):
        parse_filter("sphere")
    assert parse_filter("Δ[1]×Δ[1],D2") == frozenset({"D1xD1", "D2"})


def test_unknown_suite():
    with pytest.raises(CrossedError):
        run_suite("everything")


def test_ez_on_square_passes_and_is_deterministic():
    a = run_suite("ez", "Δ[1]×Δ[1]", 3, 0)
    b = run_suite("ez", "Δ[1]×Δ[1]", 3, 0)
    assert a.exit_code() == 0 and a.records
    assert a.render() == b.render()
    assert a.render("machine") == b.render("machine")


def test_parallel_report_matches_serial():
    a = run_suite("ez", "dD2", 2, 0, jobs=1)
    b = run_suite("ez", "dD2", 2, 0, jobs=2)
    assert a.render("machine") == b.render("machine")


def test_machine_format_is_json_lines():
    rep = run_suite("coherence", "D0", 3, 0)
    lines = rep.render("machine").splitlines()
    rows = [json.loads(x) for x in lines]
    assert rows[-1]["summary"]["fail"] == 0
    assert {"suite", "item", "instance", "identity", "status", "detail"} <= set(rows[0])


def test_budget_exhaustion_is_a_skip():
    rep = run_suite("coherence", "D1xD1", 3, 0, budget=10)
    assert rep.skips and not rep.failures
    assert rep.exit_code() == 3
    assert all("budget" in r.detail for r in rep.skips)


def test_cli_verify_and_build(capsys):
    assert main(["verify", "--suite", "ez", "--corpus", "D1xD1", "--format", "machine"]) == 0
    capsys.readouterr()
    assert main(["build", "pi", "Δ[2]"]) == 0
    out = capsys.readouterr().out
    assert sum(1 for line in out.splitlines() if line.startswith("  ")) == 7
    assert main(["build", "nerve", "D1", "--dim-cap", "2"]) == 0
    out = capsys.readouterr().out
    assert sum(1 for line in out.splitlines() if line.startswith("  ")) == 6


def test_cli_exit_codes(capsys):
    assert main(["verify", "--corpus", ""]) == 2
    assert main(["build", "pi", "sphere"]) == 2
    assert main(["build", "nerve", "D2"]) == 3
    assert main(["witness", "--budget", "5"]) == 3
    with pytest.raises(SystemExit) as e:
        main(["verify", "--suite", "nope"])
    assert e.value.code == 2


def test_corpus_directory_from_environment(tmp_path, monkeypatch, capsys):
    K = boundary_subcomplex(2)
    text = dump(K).replace("name dD2", "name triangle_loop")
    (tmp_path / "loop.txt").write_text(text)
    monkeypatch.setenv("CROSSED_COHERENCE_CORPUS", str(tmp_path))
    try:
        assert main(["pi", "triangle_loop"]) == 0
        assert "FreeGroup" in capsys.readouterr().out
    finally:
        corpus.unregister("triangle_loop")


def test_corpus_directory_parse_error(tmp_path, capsys):
    (tmp_path / "bad.txt").write_text("not a file\n")
    assert main(["--corpus-dir", str(tmp_path), "pi", "D1"]) == 2
    assert "line 1" in capsys.readouterr().err
