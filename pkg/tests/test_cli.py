"""CLI contract tests: flags, formats, tokenization, exit codes."""

import io
import json
import subprocess
import sys

import pytest

from lcscount.cli import main


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestPlainOutput:
    def test_distinct_of_empty_input(self, capsys):
        status, out, _ = run_cli(capsys, "--text", "", "--text", "abc", "--mode", "distinct")
        assert status == 0
        assert out == "distinct: 1\n"

    def test_full_algorithm_distinct(self, capsys):
        status, out, _ = run_cli(
            capsys, "--mode", "distinct", "--algorithm", "full",
            "--text", "ABCBDAB", "--text", "BDCABA",
        )
        assert status == 0
        assert out == "distinct: 3\n"

    def test_all_modes_in_canonical_order(self, capsys):
        status, out, _ = run_cli(capsys, "--text", "ab", "--text", "ba")
        assert status == 0
        assert out == "length: 1\ndistinct: 2\nembeddings: 2\n"

    def test_mode_subset_comma_separated(self, capsys):
        status, out, _ = run_cli(
            capsys, "--text", "ab", "--text", "ba", "--mode", "length,embeddings"
        )
        assert status == 0
        assert out == "length: 1\nembeddings: 2\n"

    def test_algorithms_emit_identical_output(self, capsys):
        args = ("--text", "abracadabra", "--text", "alakazam", "--mode", "all")
        _, linear_out, _ = run_cli(capsys, *args, "--algorithm", "linear")
        _, full_out, _ = run_cli(capsys, *args, "--algorithm", "full")
        assert linear_out == full_out


class TestJsonOutput:
    def test_byte_exact_example(self, capsys):
        status, out, _ = run_cli(
            capsys, "--mode", "all", "--format", "json", "--text", "ab", "--text", "ba"
        )
        assert status == 0
        assert out == (
            '{"m": 2, "n": 2, "lcs_length": 1, "distinct_lcs_count": "2", '
            '"embedding_count": "2", "algorithm": "linear", "tokenization": "bytes"}\n'
        )

    def test_counts_are_decimal_strings(self, capsys):
        status, out, _ = run_cli(
            capsys, "--format", "json", "--text", "a" * 40, "--text", "a" * 80
        )
        assert status == 0
        payload = json.loads(out)
        assert isinstance(payload["lcs_length"], int)
        assert isinstance(payload["distinct_lcs_count"], str)
        assert isinstance(payload["embedding_count"], str)
        # 40 symbols in 80 slots: far beyond 2**64, must survive as a string
        assert int(payload["embedding_count"]) > 2**64

    def test_unrequested_counts_absent(self, capsys):
        _, out, _ = run_cli(
            capsys, "--format", "json", "--mode", "length", "--text", "ab", "--text", "ba"
        )
        payload = json.loads(out)
        assert "distinct_lcs_count" not in payload
        assert "embedding_count" not in payload
        assert payload["lcs_length"] == 1

    def test_round_trips(self, capsys):
        _, out, _ = run_cli(capsys, "--format", "json", "--text", "ab", "--text", "ba")
        assert json.loads(out) == json.loads(json.dumps(json.loads(out)))


class TestInputSources:
    def test_files(self, capsys, tmp_path):
        file_a = tmp_path / "a.txt"
        file_b = tmp_path / "b.txt"
        file_a.write_bytes(b"ABCBDAB")
        file_b.write_bytes(b"BDCABA")
        status, out, _ = run_cli(
            capsys, "--file", str(file_a), "--file", str(file_b), "--mode", "distinct"
        )
        assert status == 0
        assert out == "distinct: 3\n"

    def test_stdin_dash(self, capsys, monkeypatch):
        monkeypatch.setattr(
            sys, "stdin", io.TextIOWrapper(io.BytesIO(b"BDCABA"), encoding="utf-8")
        )
        status, out, _ = run_cli(
            capsys, "--text", "ABCBDAB", "--file", "-", "--mode", "length"
        )
        assert status == 0
        assert out == "length: 4\n"

    def test_text_file_order_defines_a_and_b(self, capsys, tmp_path):
        file_b = tmp_path / "b.txt"
        file_b.write_bytes(b"ba")
        _, out, _ = run_cli(
            capsys, "--text", "ab", "--file", str(file_b), "--format", "json"
        )
        payload = json.loads(out)
        assert (payload["m"], payload["n"]) == (2, 2)


class TestTokenization:
    def test_lines_compare_whole_lines(self, capsys, tmp_path):
        # Same three lines, first two swapped: two of three lines still
        # appear in order, and byte-level similarity is irrelevant.
        file_a = tmp_path / "a.txt"
        file_b = tmp_path / "b.txt"
        file_a.write_bytes(b"alpha\nbeta\ngamma\n")
        file_b.write_bytes(b"beta\nalpha\ngamma\n")
        status, out, _ = run_cli(
            capsys, "--file", str(file_a), "--file", str(file_b),
            "--tokenization", "lines", "--format", "json",
        )
        assert status == 0
        payload = json.loads(out)
        assert (payload["m"], payload["n"]) == (3, 3)
        assert payload["lcs_length"] == 2
        assert payload["distinct_lcs_count"] == "2"  # alpha,gamma and beta,gamma

    def test_lines_ignores_single_trailing_newline(self, capsys):
        _, out, _ = run_cli(
            capsys, "--text", "x\ny\n", "--text", "x\ny", "--tokenization", "lines",
            "--format", "json",
        )
        payload = json.loads(out)
        assert (payload["m"], payload["n"]) == (2, 2)
        assert payload["lcs_length"] == 2

    def test_codepoints_versus_bytes_lengths(self, capsys):
        _, out, _ = run_cli(
            capsys, "--text", "héllo", "--text", "hello", "--format", "json",
            "--tokenization", "codepoints",
        )
        assert json.loads(out)["m"] == 5
        _, out, _ = run_cli(
            capsys, "--text", "héllo", "--text", "hello", "--format", "json",
        )
        assert json.loads(out)["m"] == 6  # é is two bytes in UTF-8

    def test_codepoints_rejects_invalid_utf8(self, capsys, tmp_path):
        bad = tmp_path / "bad.bin"
        bad.write_bytes(b"\xff\xfe\xfa")
        status, _, err = run_cli(
            capsys, "--file", str(bad), "--text", "x", "--tokenization", "codepoints"
        )
        assert status == 1
        assert "UTF-8" in err


class TestExitCodes:
    def test_unknown_flag(self, capsys):
        status, _, err = run_cli(capsys, "--text", "a", "--text", "b", "--frobnicate")
        assert status == 1 and err

    def test_unknown_mode(self, capsys):
        status, _, _ = run_cli(capsys, "--text", "a", "--text", "b", "--mode", "longest")
        assert status == 1

    def test_empty_mode(self, capsys):
        status, _, err = run_cli(capsys, "--text", "a", "--text", "b", "--mode", "")
        assert status == 1
        assert "mode" in err

    def test_missing_second_input(self, capsys):
        status, _, _ = run_cli(capsys, "--text", "a")
        assert status == 1

    def test_three_inputs(self, capsys):
        status, _, _ = run_cli(capsys, "--text", "a", "--text", "b", "--text", "c")
        assert status == 1

    def test_both_inputs_from_stdin(self, capsys):
        status, _, err = run_cli(capsys, "--file", "-", "--file", "-")
        assert status == 1
        assert "standard input" in err

    def test_unreadable_file(self, capsys, tmp_path):
        status, _, err = run_cli(
            capsys, "--file", str(tmp_path / "missing.txt"), "--text", "x"
        )
        assert status == 2 and err

    def test_oracle_guard_violation(self, capsys):
        status, _, err = run_cli(capsys, "oracle", "--text", "x" * 19, "--text", "y")
        assert status == 3
        assert "guard" in err.lower() or "limit" in err.lower()


class TestOracleSubcommand:
    def test_counts_match_main_command(self, capsys):
        args = ("--text", "ABCBDAB", "--text", "BDCABA", "--mode", "all")
        _, main_out, _ = run_cli(capsys, *args)
        status, oracle_out, _ = run_cli(capsys, "oracle", *args)
        assert status == 0
        assert oracle_out == main_out

    def test_json_reports_oracle_algorithm(self, capsys):
        _, out, _ = run_cli(
            capsys, "oracle", "--text", "ab", "--text", "ba", "--format", "json"
        )
        assert json.loads(out)["algorithm"] == "oracle"

    def test_accepts_but_ignores_algorithm_flag(self, capsys):
        args = ("--text", "aab", "--text", "ab", "--mode", "embeddings")
        _, main_out, _ = run_cli(capsys, *args, "--algorithm", "full")
        status, oracle_out, _ = run_cli(capsys, "oracle", *args, "--algorithm", "full")
        assert status == 0
        assert oracle_out == main_out == "embeddings: 2\n"


class TestBench:
    def test_reports_times_and_cells(self, capsys):
        status, out, _ = run_cli(capsys, "bench", "--len", "64", "--alphabet", "4", "--seed", "9")
        assert status == 0
        lines = out.splitlines()
        assert lines[0] == "len=64 alphabet=4 seed=9"
        assert len(lines) == 5
        assert sum("algorithm=full" in line for line in lines) == 2
        assert sum("algorithm=linear" in line for line in lines) == 2
        for line in lines[1:]:
            assert "seconds=" in line and "count_cells=" in line
        # full table holds (n+1)^2 count cells, the rolling column just n+1
        assert "count_cells=4225" in out
        assert "count_cells=65" in out

    def test_rejects_bad_sizes(self, capsys):
        assert run_cli(capsys, "bench", "--len", "-3")[0] == 1
        assert run_cli(capsys, "bench", "--alphabet", "0")[0] == 1


def test_module_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "lcscount", "--text", "ab", "--text", "ba", "--mode", "distinct"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout == "distinct: 2\n"
