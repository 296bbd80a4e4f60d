from __future__ import annotations

from pathlib import Path

import pytest

from dhg import constructions as C
from dhg.cli import EXIT_FAIL, EXIT_INFEASIBLE, EXIT_OK, EXIT_PARSE, EXIT_USAGE, WORKERS_ENV, build_parser, main
from dhg.iso import canonical_form
from dhg.textio import read_graph, write_graph


def run(capsys, *argv: str) -> tuple[int, dict[str, str], str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    pairs = dict(line.split("=", 1) for line in out.splitlines() if "=" in line and not line.startswith("dhg "))
    return code, pairs, out


def test_check_free(tmp_path, capsys):
    f = tmp_path / "g5.dhg"
    write_graph(f, C.build_h2_oriented(5), "oriented")
    code, pairs, _ = run(capsys, "check", str(f), "--pattern", "h2")
    assert code == EXIT_OK and pairs["result"] == "free" and pairs["edges"] == "10"


def test_check_contains_with_map(tmp_path, capsys):
    f = tmp_path / "w.dhg"
    f.write_text("dhg n=4 mode=standard\n0 1 > 2\n0 3 > 2\n")
    code, pairs, _ = run(capsys, "check", str(f), "--pattern", "I1")
    assert code == EXIT_FAIL and pairs["result"] == "contains"
    assert len(pairs["map"].split(",")) == 4


def test_parse_error_reports_line(tmp_path, capsys):
    f = tmp_path / "bad.dhg"
    f.write_text("dhg n=4 mode=standard\n0 1 > 2\n0 1 2\n")
    assert main(["check", str(f), "--pattern", "h1"]) == EXIT_PARSE
    assert "line 3" in capsys.readouterr().err


def test_missing_file_is_usage_error(tmp_path, capsys):
    assert main(["canon", str(tmp_path / "nope.dhg")]) == EXIT_USAGE


def test_unknown_pattern_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["check", "x", "--pattern", "zz"])
    assert exc.value.code == EXIT_USAGE


def test_search_output(capsys):
    code, pairs, _ = run(capsys, "search", "--pattern", "h2", "--mode", "oriented", "--n", "5")
    assert code == EXIT_OK
    assert pairs["max_edges"] == "10" and pairs["expected"] == "10" and pairs["status"] == "complete"


def test_search_count_and_witnesses(tmp_path, capsys):
    out_dir = tmp_path / "w"
    code, pairs, _ = run(
        capsys, "search", "--pattern", "i1", "--n", "4", "--mode", "oriented",
        "--objective", "enumerate_classes", "--out-dir", str(out_dir),
    )
    assert code == EXIT_OK and pairs["labeled_count"] == "9"
    files = sorted(out_dir.glob("witness_*.dhg"))
    assert len(files) == int(pairs["class_count"])
    assert all(len(read_graph(f)[0]) == 4 for f in files)


def test_search_infeasible(capsys):
    code, pairs, _ = run(capsys, "search", "--pattern", "h1", "--mode", "oriented", "--n", "9")
    assert code == EXIT_INFEASIBLE and pairs["status"] == "infeasible"


def test_search_timeout(capsys):
    code, pairs, _ = run(
        capsys, "search", "--pattern", "h2", "--n", "5", "--objective", "count_labeled_extremal", "--timeout", "1e-9"
    )
    assert code == EXIT_INFEASIBLE and pairs["status"] == "timeout"


def test_workers_env(monkeypatch):
    monkeypatch.setenv(WORKERS_ENV, "3")
    args = build_parser().parse_args(["search", "--pattern", "i0", "--n", "4"])
    assert args.workers == 3
    monkeypatch.setenv(WORKERS_ENV, "junk")
    assert build_parser().parse_args(["search", "--pattern", "i0", "--n", "4"]).workers == 1


def test_canon_is_label_invariant(tmp_path, capsys):
    a, b = tmp_path / "a.dhg", tmp_path / "b.dhg"
    a.write_text("dhg n=4 mode=oriented\n0 1 > 2\n1 2 > 3\n")
    b.write_text("dhg n=4 mode=oriented\n2 3 > 0\n0 3 > 1\n")
    _, pa, _ = run(capsys, "canon", str(a))
    _, pb, _ = run(capsys, "canon", str(b))
    assert pa["canon"] == pb["canon"] and len(pa["canon"]) == 64


def test_construct_round_trip(tmp_path, capsys):
    f = tmp_path / "h1.dhg"
    code, pairs, _ = run(capsys, "construct", "--pattern", "h1", "--mode", "oriented", "--n", "8", "--out", str(f))
    assert code == EXIT_OK
    g, mode = read_graph(f)
    assert mode == "oriented" and g == C.build_h1_oriented(8) and pairs["edges"] == str(len(g))
    code, pairs, _ = run(capsys, "check", str(f), "--pattern", "h1")
    assert pairs["result"] == "free"


def test_construct_all_variants(tmp_path, capsys):
    out_dir = tmp_path / "cls"
    code, pairs, _ = run(capsys, "construct", "--pattern", "i0", "--mode", "oriented", "--n", "10",
                         "--all-variants", "--out", str(out_dir))
    assert code == EXIT_OK
    manifest = (out_dir / "manifest.txt").read_text().splitlines()
    assert len(manifest) == int(pairs["classes"]) == 18
    digests = {dict(kv.split("=") for kv in line.split())["canon"] for line in manifest}
    assert len(digests) == 18
    first = read_graph(out_dir / "class_00.dhg")[0]
    assert canonical_form(first).hexdigest() in digests


def test_construct_all_variants_rejects_other_patterns(tmp_path):
    assert main(["construct", "--pattern", "h1", "--n", "8", "--all-variants", "--out", str(tmp_path)]) == EXIT_USAGE


def test_gate(tmp_path, capsys):
    f = tmp_path / "i0.dhg"
    write_graph(f, C.build_i0_oriented(9), "oriented")
    code, pairs, _ = run(capsys, "gate", str(f))
    assert code == EXIT_OK and int(pairs["components"]) >= 1
    assert all(pairs[k] == "True" for k in pairs if k.endswith(".checked"))


def test_verify_h2_is_deterministic(capsys):
    code, _, first = run(capsys, "verify", "--scope", "h2")
    assert code == EXIT_OK
    _, _, second = run(capsys, "verify", "--scope", "h2")
    strip = lambda text: [line.rsplit(" time=", 1)[0] for line in text.splitlines()]
    assert strip(first) == strip(second)
    lines = first.splitlines()
    assert lines[-1].startswith("summary=") and "fail=0" in lines[-1]
    assert all(line.startswith("claim=h2.") for line in lines[:-1])


def test_table_output(tmp_path, capsys):
    f = tmp_path / "g.dhg"
    write_graph(f, C.build_h2_oriented(5), "oriented")
    main(["check", str(f), "--pattern", "h2", "--table"])
    out = capsys.readouterr().out
    assert "=" not in out and "free" in out
