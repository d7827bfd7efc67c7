"""The batch front-end: subcommands, reports, exports, determinism."""

import json

import pytest

from bubblelattice.cli import build_check_report, main
from bubblelattice.exports import element_table_csv, sigma_table_csv
from bubblelattice.bubble import build_bubble_lattice

TABLE_21_CSV_ROWS = {
    ("-", ""),
    ("x1", ""),
    ("x2", ""),
    ("y1", ""),
    ("x1.x2", ""),
    ("x1.y1", ""),
    ("x2.y1", ""),
    ("y1.x1", "(x1,y1)"),
    ("y1.x2", "(x2,y1)"),
    ("x1.x2.y1", ""),
    ("x1.y1.x2", "(x2,y1)"),
    ("y1.x1.x2", "(x1,y1) (x2,y1)"),
}


def run(argv, tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("BUBBLELATTICE_OUTDIR", str(tmp_path))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGenerate:
    def test_table_21(self, tmp_path, monkeypatch, capsys):
        code, _, _ = run(["generate", "2", "1", "--csv"], tmp_path, monkeypatch, capsys)
        assert code == 0
        lines = (tmp_path / "bubble_2_1.csv").read_text().splitlines()
        assert lines[0] == "word,inversions"
        rows = {tuple(line.split(",", 1)) for line in lines[1:]}
        assert {(w, inv.strip('"')) for w, inv in rows} == TABLE_21_CSV_ROWS

    def test_single_node_family(self, tmp_path, monkeypatch, capsys):
        code, _, _ = run(["generate", "0", "0"], tmp_path, monkeypatch, capsys)
        assert code == 0
        lines = (tmp_path / "bubble_0_0.csv").read_text().splitlines()
        assert lines == ["word,inversions", "-,"]

    def test_dot_export(self, tmp_path, monkeypatch, capsys):
        code, _, _ = run(["generate", "2", "2", "--dot"], tmp_path, monkeypatch, capsys)
        assert code == 0
        dot = (tmp_path / "bubble_2_2.dot").read_text()
        assert dot.count("[label=") == 33
        assert dot.count("->") == 66
        assert (tmp_path / "shuffle_2_2.dot").exists()

    def test_flag_style_arguments(self, tmp_path, monkeypatch, capsys):
        code, _, _ = run(
            ["generate", "--m", "1", "--n", "1", "--csv"], tmp_path, monkeypatch, capsys
        )
        assert code == 0
        assert (tmp_path / "bubble_1_1.csv").exists()

    def test_cap_refusal(self, tmp_path, monkeypatch, capsys):
        code, _, err = run(
            ["generate", "4", "4", "--cap", "100"], tmp_path, monkeypatch, capsys
        )
        assert code == 2 and "refused" in err

    def test_covers_json(self, tmp_path, monkeypatch, capsys):
        code, _, _ = run(["generate", "1", "1", "--json"], tmp_path, monkeypatch, capsys)
        assert code == 0
        data = json.loads((tmp_path / "bubble_1_1_covers.json").read_text())
        assert data["n"] == 5 and len(data["covers"]) == 5


class TestCheck:
    def test_trivial_family_passes(self, tmp_path, monkeypatch, capsys):
        code, out, _ = run(["check", "1", "0"], tmp_path, monkeypatch, capsys)
        assert code == 0
        report = json.loads(out)
        assert report["schema"] == 1
        assert report["violations"] == []
        assert any(c["status"] == "skip" for c in report["checks"])  # hochschild

    def test_full_run_21(self, tmp_path, monkeypatch, capsys):
        code, out, _ = run(
            ["check", "2", "1", "--suite", "all", "--json"], tmp_path, monkeypatch, capsys
        )
        assert code == 0
        report = json.loads(out)
        ids = {c["id"] for c in report["checks"]}
        assert {
            "lattice.unique_joins",
            "lattice.extremal_counts",
            "labeling.cu_conditions",
            "galois.graphs_coincide",
            "hochschild.iso",
            "duality.anti_isomorphism",
            "crown.witness",
        } <= ids
        assert (tmp_path / "check_2_1.json").exists()

    def test_suite_subset(self, tmp_path, monkeypatch, capsys):
        code, out, _ = run(
            ["check", "2", "1", "--suite", "galois"], tmp_path, monkeypatch, capsys
        )
        assert code == 0
        report = json.loads(out)
        assert report["suites"] == ["galois"]
        assert [c["id"] for c in report["checks"]] == ["galois.graphs_coincide"]

    def test_unknown_suite(self, tmp_path, monkeypatch, capsys):
        with pytest.raises(SystemExit):
            run(["check", "1", "1", "--suite", "nope"], tmp_path, monkeypatch, capsys)

    def test_exit_code_tracks_violations(self, tmp_path, monkeypatch, capsys):
        code, out, _ = run(["check", "1", "1"], tmp_path, monkeypatch, capsys)
        report = json.loads(out)
        assert (code == 0) == (report["violations"] == [])

    def test_report_byte_stable(self):
        a = json.dumps(build_check_report(1, 1, ["order", "crown"]), sort_keys=True)
        b = json.dumps(build_check_report(1, 1, ["order", "crown"]), sort_keys=True)
        assert a == b

    def test_parallel_matches_sequential(self):
        seq = build_check_report(1, 1, ["order", "lattice", "duality"])
        par = build_check_report(1, 1, ["order", "lattice", "duality"], parallel=True)
        assert seq == par

    def test_timings_flag_adds_key(self):
        without = build_check_report(1, 0, ["crown"])
        with_timings = build_check_report(1, 0, ["crown"], timings=True)
        assert "timings" not in without and "timings" in with_timings


class TestHochschildCommand:
    def test_small(self, tmp_path, monkeypatch, capsys):
        code, out, _ = run(["hochschild", "3", "--csv"], tmp_path, monkeypatch, capsys)
        assert code == 0
        report = json.loads(out)
        assert report["violations"] == []
        table = (tmp_path / "triwords_3.csv").read_text()
        assert table == sigma_table_csv(3)
        assert "x1.y1.x2,\"(1,1,0)\"" in table

    def test_trivial(self, tmp_path, monkeypatch, capsys):
        code, out, _ = run(["hochschild", "1"], tmp_path, monkeypatch, capsys)
        assert code == 0

    def test_larger(self, tmp_path, monkeypatch, capsys):
        code, _, _ = run(["hochschild", "7"], tmp_path, monkeypatch, capsys)
        assert code == 0


class TestLabelCommand:
    def test_writes_report_and_dot(self, tmp_path, monkeypatch, capsys):
        code, out, _ = run(
            ["label", "2", "1", "--json", "--dot"], tmp_path, monkeypatch, capsys
        )
        assert code == 0
        report = json.loads((tmp_path / "cu_report_2_1.json").read_text())
        assert all(not v for v in report["violations"].values())
        dot = (tmp_path / "bubble_2_1_labeled.dot").read_text()
        assert 'label="(x2,y1)"' in dot


class TestGaloisCommand:
    def test_summary_and_exports(self, tmp_path, monkeypatch, capsys):
        code, out, _ = run(
            ["galois", "2", "1", "--dot", "--json"], tmp_path, monkeypatch, capsys
        )
        assert code == 0
        summary = json.loads(out)
        assert summary["k"] == 5 and summary["orthogonal_pairs"] == summary["elements"] == 12
        assert (tmp_path / "galois_2_1.dot").exists()
        assert (tmp_path / "galois_2_1.json").exists()


class TestOutdir:
    def test_env_var_respected(self, tmp_path, monkeypatch, capsys):
        target = tmp_path / "nested"
        monkeypatch.setenv("BUBBLELATTICE_OUTDIR", str(target))
        code = main(["generate", "1", "0", "--csv"])
        capsys.readouterr()
        assert code == 0 and (target / "bubble_1_0.csv").exists()

    def test_flag_overrides_env(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("BUBBLELATTICE_OUTDIR", str(tmp_path / "ignored"))
        explicit = tmp_path / "explicit"
        code = main(["generate", "1", "0", "--csv", "--outdir", str(explicit)])
        capsys.readouterr()
        assert code == 0 and (explicit / "bubble_1_0.csv").exists()


class TestCsvHelpers:
    def test_element_table_deterministic(self):
        family = build_bubble_lattice(1, 1)
        assert element_table_csv(family) == element_table_csv(family)
