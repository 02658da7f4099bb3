"""Tests for the command-line interface."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from twep.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def runner():
    return CliRunner()


class TestVerifyCommand:
    def test_six_pair_passes(self, runner):
        result = runner.invoke(main, ["verify", "six-pair"])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["errors_checked"] == 19
        assert report["k_min"] == 2
        assert report["pass"] is True

    def test_nine_pair_passes(self, runner):
        result = runner.invoke(main, ["verify", "nine-pair"])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["errors_checked"] == 352
        assert report["k_min"] == 1

    def test_unknown_protocol_exits_two(self, runner):
        result = runner.invoke(main, ["verify", "no-such"])
        assert result.exit_code == 2
        assert "six-pair" in result.stderr

    def test_workers_flag_payload_identical(self, runner):
        base = runner.invoke(main, ["verify", "qutrit-four"])
        threaded = runner.invoke(main, ["verify", "qutrit-four", "--workers", "3"])
        assert base.output == threaded.output

    def test_workers_env_default(self, runner):
        result = runner.invoke(
            main, ["verify", "qutrit-four"], env={"TWEP_WORKERS": "2"}
        )
        assert result.exit_code == 0

    def test_parametric_family_via_m(self, runner):
        result = runner.invoke(main, ["verify", "hamming", "--m", "4"])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["errors_checked"] == 46

    def test_hamming_requires_m(self, runner):
        result = runner.invoke(main, ["verify", "hamming"])
        assert result.exit_code == 2

    def test_m_rejected_elsewhere(self, runner):
        result = runner.invoke(main, ["verify", "six-pair", "--m", "3"])
        assert result.exit_code == 2


class TestSimulateCommand:
    def test_golden_transcript_bisection(self, runner):
        result = runner.invoke(
            main, ["simulate", "hamming-m3", "--error", "IIYIIII"]
        )
        assert result.exit_code == 0
        assert result.output == (FIXTURES / "hamming_m3_y3.jsonl").read_text()

    def test_golden_transcript_parity_checks(self, runner):
        result = runner.invoke(
            main, ["simulate", "hamming-m3", "--error", "IIIIXII"]
        )
        assert result.exit_code == 0
        assert result.output == (FIXTURES / "hamming_m3_x5.jsonl").read_text()

    def test_identity_run(self, runner):
        result = runner.invoke(main, ["simulate", "six-pair", "--error", "IIIIII"])
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        final = json.loads(lines[-1])
        assert final["k_out"] == 2
        assert final["correction"] == "IIIIII"

    def test_parse_error_exits_two(self, runner):
        result = runner.invoke(main, ["simulate", "six-pair", "--error", "IIQIII"])
        assert result.exit_code == 2

    def test_weight_violation_exits_two(self, runner):
        result = runner.invoke(main, ["simulate", "six-pair", "--error", "XXIIII"])
        assert result.exit_code == 2
        assert "weight" in result.stderr

    def test_length_violation_exits_two(self, runner):
        result = runner.invoke(main, ["simulate", "six-pair", "--error", "XII"])
        assert result.exit_code == 2

    def test_two_party_view(self, runner):
        from twep.pauli import parse as parse_pauli

        result = runner.invoke(
            main, ["simulate", "hamming-m3", "--error", "IIYIIII", "--two-party"]
        )
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        for line in lines[:-1]:
            record = json.loads(line)
            assert record["alice"] == 0
            op = parse_pauli(record["op"], 2)
            offset = sum(xe * ze for xe, ze in zip(op.x, op.z)) % 2
            assert record["bob"] == (offset + record["outcome"]) % 2

    def test_determinism(self, runner):
        first = runner.invoke(main, ["simulate", "nine-pair", "--error", "XIIIIIZII"])
        second = runner.invoke(main, ["simulate", "nine-pair", "--error", "XIIIIIZII"])
        assert first.output == second.output


class TestGreedyCommand:
    def test_six_one_passes(self, runner):
        result = runner.invoke(main, ["greedy", "--n", "6", "--t", "1"])
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["pass"] is True
        assert payload["max_steps"] <= payload["step_bound"] == 7
        assert payload["balance_ok"] is True

    def test_size_limit_exits_two(self, runner):
        result = runner.invoke(main, ["greedy", "--n", "30", "--t", "1"])
        assert result.exit_code == 2


class TestBoundsCommand:
    def test_threshold_rows(self, runner):
        result = runner.invoke(
            main, ["bounds", "--n", "9..10", "--t", "2", "--format", "csv"]
        )
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "n,t,hamming_k,singleton_k,gv_k,thm2_k"
        assert lines[1].split(",")[:3] == ["9", "2", "-1"]
        assert lines[2].split(",")[:3] == ["10", "2", "1"]

    def test_json_default(self, runner):
        result = runner.invoke(main, ["bounds", "--n", "6", "--t", "1"])
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload[0]["hamming_k"] == 1

    def test_malformed_range_exits_two(self, runner):
        result = runner.invoke(main, ["bounds", "--n", "5...9", "--t", "1"])
        assert result.exit_code == 2

    def test_output_file(self, runner, tmp_path):
        target = tmp_path / "bounds.csv"
        result = runner.invoke(
            main,
            ["bounds", "--n", "5..6", "--t", "1", "--format", "csv", "--output", str(target)],
        )
        assert result.exit_code == 0
        assert target.read_text().startswith("n,t,")


class TestRatesCommand:
    def test_endpoint_row(self, runner):
        result = runner.invoke(main, ["rates", "--points", "51", "--format", "csv"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert len(lines) == 52
        assert lines[1] == "0.0,1.0,1.0"

    def test_json_fields(self, runner):
        result = runner.invoke(main, ["rates", "--points", "11"])
        payload = json.loads(result.output)
        assert set(payload[0]) == {"x", "rate_2epp", "rate_gv", "h"}

    def test_determinism(self, runner):
        a = runner.invoke(main, ["rates", "--points", "101", "--format", "csv"])
        b = runner.invoke(main, ["rates", "--points", "101", "--format", "csv"])
        assert a.output == b.output


class TestMiCommand:
    def test_first_ten(self, runner):
        result = runner.invoke(main, ["mi", "--count", "10"])
        assert result.exit_code == 0
        assert json.loads(result.output) == [1, 2, 4, 7, 12, 21, 37, 67, 124, 234]

    def test_csv_form(self, runner):
        result = runner.invoke(main, ["mi", "--count", "3", "--format", "csv"])
        assert result.output.splitlines() == ["i,mi", "0,1", "1,2", "2,4"]

    def test_bad_count_exits_two(self, runner):
        result = runner.invoke(main, ["mi", "--count", "0"])
        assert result.exit_code == 2
