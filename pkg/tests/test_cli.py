"""End-to-end tests for the command line front end.

Exit codes are the contract: 0 UECSM, 1 NotUECSM, 2 NotApplicable,
3 malformed input, 4 numerical failure; search exits 0 on a completed scan
and fixtures exits nonzero only on a verdict mismatch.
"""

import io
import json

import pytest

from uecsm.cli import (
    EXIT_BAD_INPUT,
    EXIT_NOT_APPLICABLE,
    EXIT_NOT_UECSM,
    EXIT_NUMERICAL,
    EXIT_UECSM,
    main,
)
from uecsm.documents import (
    MatrixDocument,
    parse_report_document,
    serialize_matrix_document,
)
from uecsm.fixtures import find_fixture


def write_doc(tmp_path, label, name="matrix.json"):
    doc = MatrixDocument.from_matrix(find_fixture(label).matrix(), label=label)
    path = tmp_path / name
    path.write_text(serialize_matrix_document(doc))
    return path


class TestClassify:
    def test_uecsm_exit_and_report(self, tmp_path, capsys):
        path = write_doc(tmp_path, "closed-form-s")
        assert main(["classify", str(path)]) == EXIT_UECSM
        out = capsys.readouterr().out
        assert "final: UECSM" in out
        assert "spectrum: 0, 1, 6" in out
        assert "certificate residuals" in out
        assert "S =" in out

    def test_not_uecsm_exit(self, tmp_path, capsys):
        path = write_doc(tmp_path, "necessary-tests-fail")
        assert main(["classify", str(path)]) == EXIT_NOT_UECSM
        assert "final: NotUECSM" in capsys.readouterr().out

    def test_not_applicable_exit(self, tmp_path, capsys):
        path = write_doc(tmp_path, "table3-row1")
        assert main(["classify", str(path)]) == EXIT_NOT_APPLICABLE
        assert "not applicable:" in capsys.readouterr().out

    def test_malformed_document(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["classify", str(path)]) == EXIT_BAD_INPUT
        assert "error:" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["classify", "/no/such/file.json"]) == EXIT_BAD_INPUT

    def test_bad_tolerance_combination(self, tmp_path, capsys):
        path = write_doc(tmp_path, "closed-form-s")
        code = main(["classify", str(path), "--zero-tol", "1e-3"])
        assert code == EXIT_BAD_INPUT

    def test_numerical_failure_exit(self, tmp_path, capsys):
        # An absurdly small zero tolerance turns ordinary rounding into a
        # reported numerical failure.
        path = write_doc(tmp_path, "closed-form-s")
        code = main(["classify", str(path), "--zero-tol", "1e-300"])
        assert code == EXIT_NUMERICAL
        assert "numerical failure" in capsys.readouterr().err

    def test_json_report_file(self, tmp_path, capsys):
        path = write_doc(tmp_path, "strong-angle-counterexample")
        out_path = tmp_path / "report.json"
        assert main(["classify", str(path), "--json", str(out_path)]) \
            == EXIT_NOT_UECSM
        doc = parse_report_document(out_path.read_text())
        assert doc.final == "NotUECSM"
        assert doc.label == "strong-angle-counterexample"

    def test_json_to_stdout_is_pure(self, tmp_path, capsys):
        path = write_doc(tmp_path, "closed-form-s")
        assert main(["classify", str(path), "--json", "-"]) == EXIT_UECSM
        out = capsys.readouterr().out
        doc = parse_report_document(out)     # no human text mixed in
        assert doc.final == "UECSM"
        assert doc.certificate is not None

    def test_oracle_flag(self, tmp_path, capsys):
        path = write_doc(tmp_path, "closed-form-s")
        code = main(["classify", str(path), "--oracle", "--restarts", "8"])
        assert code == EXIT_UECSM
        assert "oracle: UECSM" in capsys.readouterr().out

    def test_stdin_input(self, tmp_path, capsys, monkeypatch):
        doc = MatrixDocument.from_matrix(find_fixture("family-s5").matrix())
        monkeypatch.setattr("sys.stdin", io.StringIO(serialize_matrix_document(doc)))
        assert main(["classify", "-"]) == EXIT_UECSM

    def test_seed_changes_nothing_observable(self, tmp_path, capsys):
        path = write_doc(tmp_path, "closed-form-s")
        for seed in ("0", "42"):
            assert main(["classify", str(path), "--seed", seed]) == EXIT_UECSM


class TestSearch:
    def test_planted_hit_round_trips_through_classify(self, tmp_path, capsys):
        out_dir = tmp_path / "hits"
        summary = tmp_path / "summary.json"
        code = main(["search", "--count", "3",
                     "--inject", "strong-angle-counterexample",
                     "--out-dir", str(out_dir), "--json", str(summary)])
        assert code == 0
        data = json.loads(summary.read_text())
        assert data["hit_indices"] == [0]
        hit_path = out_dir / "hit-000000.json"
        assert hit_path.exists()
        capsys.readouterr()
        # Every reported hit must re-verify as a strong-angle failure.
        assert main(["classify", str(hit_path)]) == EXIT_NOT_UECSM
        out = capsys.readouterr().out
        assert "StrongAngle     Fail" in out
        assert "Angle           Pass" in out

    def test_injected_member_is_not_a_hit(self, tmp_path, capsys):
        doc_path = write_doc(tmp_path, "closed-form-s")
        code = main(["search", "--count", "2", "--inject", str(doc_path),
                     "--out-dir", str(tmp_path / "hits")])
        assert code == 0
        out = capsys.readouterr().out
        assert "hits: 0" in out
        assert not (tmp_path / "hits").exists()

    def test_small_scan_summary(self, tmp_path, capsys):
        summary = tmp_path / "s.json"
        code = main(["search", "--count", "50", "--seed", "3",
                     "--out-dir", str(tmp_path / "hits"),
                     "--json", str(summary)])
        assert code == 0
        data = json.loads(summary.read_text())
        total = (data["not_applicable"] + data["breakdown"] + data["uecsm"]
                 + data["not_uecsm"])
        assert total == 50

    def test_unknown_inject_label(self, tmp_path, capsys):
        code = main(["search", "--count", "1", "--inject", "/missing.json",
                     "--out-dir", str(tmp_path)])
        assert code == EXIT_BAD_INPUT


class TestFixtures:
    def test_single_group_all_ok(self, capsys):
        assert main(["fixtures", "--only", "table1"]) == 0
        out = capsys.readouterr().out
        assert "all ok" in out
        assert out.count("[table1]") == 4

    def test_family_verdict_pattern(self, capsys):
        assert main(["fixtures", "--only", "section1-family"]) == 0
        out = capsys.readouterr().out
        for s, verdict in [(2, "NotUECSM"), (3, "NotUECSM"), (4, "NotUECSM"),
                           (5, "UECSM"), (6, "NotUECSM")]:
            assert f"family-s{s}: classify {verdict} ok" in out

    def test_nilpotent_group_with_oracle(self, capsys):
        assert main(["fixtures", "--only", "table2", "--restarts", "8"]) == 0
        out = capsys.readouterr().out
        assert "nilpotent yes ok" in out
        assert "nilpotent no ok" in out
        assert "oracle UECSM ok" in out
        assert "oracle NotUECSM ok" in out

    def test_unknown_group_rejected(self):
        with pytest.raises(SystemExit):
            main(["fixtures", "--only", "no-such-group"])


class TestParser:
    def test_subcommand_required(self):
        with pytest.raises(SystemExit):
            main([])

    def test_search_count_required(self):
        with pytest.raises(SystemExit):
            main(["search"])
