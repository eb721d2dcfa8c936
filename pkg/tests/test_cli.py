"""Tests for the command-line front end and its exit codes."""
import json

import pytest

from src.cli import (
    EXIT_ADMISSIBILITY, EXIT_OK, EXIT_TABLE_MISMATCH, EXIT_USAGE, parse_prime_range, parse_primes, run
)
from src.errors import ParseError
from src.tools.catalog_tools import Table1Tool


def _output(capsys):
    return json.loads(capsys.readouterr().out)


class TestArguments:
    """Test argument parsing helpers and usage errors."""

    def test_parse_primes(self):
        assert parse_primes("5,7,11") == [5, 7, 11]

    def test_composite_prime(self):
        with pytest.raises(ParseError, match="Not prime"):
            parse_primes("5,9")

    def test_malformed_primes(self):
        with pytest.raises(ParseError):
            parse_primes("5,x")

    def test_prime_range(self):
        assert parse_prime_range("5..13") == [5, 7, 11, 13]

    def test_malformed_prime_range(self):
        with pytest.raises(ParseError):
            parse_prime_range("5-13")

    def test_no_command(self):
        assert run([]) == EXIT_USAGE

    def test_unknown_command(self):
        assert run(["plot"]) == EXIT_USAGE

    def test_missing_source(self, capsys):
        assert run(["analyze"]) == EXIT_USAGE
        assert "--catalog" in capsys.readouterr().err

    def test_two_sources(self, tmp_path):
        assert run(["analyze", "--catalog", "2", "--file", str(tmp_path / "a.json")]) == EXIT_USAGE

    def test_composite_in_prime_list(self):
        assert run(["count", "--catalog", "2", "--primes", "4"]) == EXIT_USAGE

    def test_both_prime_options(self):
        assert run(["count", "--catalog", "2", "--primes", "5", "--prime-range", "5..7"]) == EXIT_USAGE

    def test_point_strata_choices(self):
        assert run(["hodge", "--catalog", "2", "--point-strata", "5"]) == EXIT_USAGE


class TestCatalogCommand:
    """Test `octic catalog`."""

    def test_list(self, capsys):
        assert run(["catalog", "list", "--json"]) == EXIT_OK
        rows = _output(capsys)
        assert len(rows) == 22
        assert rows[0]["key"] == "2"

    def test_export(self, capsys):
        assert run(["catalog", "export", "85"]) == EXIT_OK
        document = _output(capsys)
        assert document["name"] == "85"
        assert len(document["planes"]) == 8

    def test_export_needs_key(self):
        assert run(["catalog", "export"]) == EXIT_USAGE


class TestAnalysisCommands:
    """Test the commands that run the pipeline."""

    def test_analyze(self, capsys):
        assert run(["analyze", "--catalog", "2"]) == EXIT_OK
        report = _output(capsys)
        assert report["name"] == "2"
        assert report["invariants"]["h11"] == "70"
        assert report["counters"]["p5_2"] == "4"

    def test_analyze_file(self, tmp_path, capsys, six_fold_document):
        path = tmp_path / "six.json"
        path.write_text(json.dumps(six_fold_document))
        assert run(["analyze", "--file", str(path)]) == EXIT_ADMISSIBILITY
        assert "point lies on 6 planes" in capsys.readouterr().err

    def test_inadmissible_arrangement(self, tmp_path, capsys, pencil_document):
        path = tmp_path / "pencil.json"
        path.write_text(json.dumps(pencil_document))
        assert run(["analyze", "--file", str(path)]) == EXIT_ADMISSIBILITY
        assert "line lies on 4 planes" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert run(["analyze", "--file", str(tmp_path / "missing.json")]) == EXIT_USAGE

    def test_unknown_catalog_key(self):
        assert run(["analyze", "--catalog", "99"]) == EXIT_USAGE

    def test_hodge(self, capsys):
        assert run(["hodge", "--catalog", "2", "--json"]) == EXIT_OK
        summary = _output(capsys)
        assert summary["h12"] == "0"
        assert summary["dim_ieq"] == summary["dim_jf"]

    def test_count(self, capsys):
        assert run(["count", "--catalog", "2", "--primes", "5", "--json"]) == EXIT_OK
        (record,) = _output(capsys)
        assert record["p"] == "5"
        assert record["a_p"] == "-2"
        assert record["total"] == "2228"

    def test_count_bad_prime(self, capsys):
        assert run(["count", "--catalog", "2", "--scale", "5", "--primes", "5"]) == EXIT_USAGE
        assert "bad prime" in capsys.readouterr().err.lower()

    def test_prime_range_skips_bad_primes(self, capsys):
        assert run(["count", "--catalog", "2", "--scale", "5", "--prime-range", "5..7"]) == EXIT_OK
        records = _output(capsys)
        assert [record["p"] for record in records] == ["7"]

    def test_modular(self, capsys):
        assert run(["modular", "--catalog", "2", "--primes", "5,7,11"]) == EXIT_OK
        result = _output(capsys)
        assert result["matched_label"] == "8k4A"


class TestTable1Command:
    """Test `octic table1` exit codes with the per-row work stubbed out."""

    @staticmethod
    def _stub(match: bool):
        def row(self, key):
            return {"key": key, "row": 1, "expected": [1], "computed": [1 if match else 2],
                    "match": match, "error": None}
        return row

    def test_all_rows_match(self, monkeypatch, capsys):
        monkeypatch.setattr(Table1Tool, "_row", self._stub(True))
        assert run(["table1"]) == EXIT_OK
        assert _output(capsys)["mismatches"] == []

    def test_mismatch(self, monkeypatch, capsys):
        monkeypatch.setattr(Table1Tool, "_row", self._stub(False))
        assert run(["table1"]) == EXIT_TABLE_MISMATCH
        output = _output(capsys)
        assert len(output["mismatches"]) == 22
        assert output["rows"][0]["computed"] == ["2"]
