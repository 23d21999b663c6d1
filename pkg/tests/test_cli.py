"""Command-line behaviour: output, envelopes, exit codes, round trips."""

import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from boolrsk import cli


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestExitCodes:
    def test_success(self):
        code, out, _ = run_cli("rsk", "1 2 3")
        assert code == 0
        assert "1 2 3" in out

    def test_domain_error_is_one(self):
        code, _, err = run_cli("canonical", "3 2 1")
        assert code == 1
        assert "pattern 321 at positions (1, 2, 3)" in err

    def test_parse_error_is_two(self):
        code, _, err = run_cli("rsk", "2 2 1")
        assert code == 2
        assert "duplicate" in err

    def test_bad_token_is_two(self):
        code, _, err = run_cli("rsk", "1 x 3")
        assert code == 2
        assert "not an integer" in err

    def test_degree_guard_is_one(self):
        code, _, err = run_cli("words", "1 2 3 4 5 6 7 8 9 10")
        assert code == 1
        assert "limit" in err

    def test_crowded_realize_is_one(self):
        code, _, err = run_cli("uncrowded", "realize", "1 2", "--degree", "9")
        assert code == 1
        assert "crowded" in err

    def test_rho_identity_is_one(self):
        code, _, err = run_cli("rho", "1 2 3")
        assert code == 1
        assert "identity" in err


class TestPlainOutput:
    def test_comma_separated_input(self):
        code, out, _ = run_cli("rsk", "3,1,4,2")
        assert code == 0
        assert "w = 3142" in out

    def test_canonical_display_convention(self):
        _, out, _ = run_cli("canonical", "3 1 4 6 2 7 10 5 8 9")
        assert "canonical word = [21·98·567·34]" in out
        assert "second row of P = {3, 4, 6, 10}" in out

    def test_count_table(self):
        _, out, _ = run_cli("count", "1..10")
        lines = out.strip().splitlines()
        assert lines[0] == "n total two-row n-in-row2"
        assert lines[1] == "1 1 0 0"
        assert lines[10] == "10 197 196 89"

    def test_ulam_moves(self):
        _, out, _ = run_cli("ulam", "5 1 6 4 2 7 3 8")
        assert "1) move pos=6 after=3 -> 51642378" in out
        assert "4) move pos=2 after=3 -> 12345678" in out

    def test_bij_file_input(self, tmp_path):
        path = tmp_path / "tableau.txt"
        path.write_text("1 2 3 6 7 9 12 14 16 17\n4 5 8 10 11 13 15 18\n")
        code, out, _ = run_cli("bij", "g", str(path))
        assert code == 0
        assert "x = 10010101111101110" in out

    def test_words_listing(self):
        _, out, _ = run_cli("words", "3 1 4 5 6 9 2 7 8")
        assert "reduced words: 99" in out
        assert "[21873456]" in out
        assert "[87213456]" in out


class TestJsonEnvelopes:
    COMMANDS = [
        ("rsk", "3 1 4 6 2 7 10 5 8 9"),
        ("canonical", "3 1 4 6 2 7 10 5 8 9"),
        ("run", "5 1 6 4 2 7 3 8"),
        ("rho", "5 1 6 4 2 7 3 8"),
        ("ulam", "5 1 6 4 2 7 3 8"),
        ("heap", "3 1 4 5 6 9 2 7 8"),
        ("words", "5 1 3 4 2"),
        ("count", "1..6"),
    ]

    @pytest.mark.parametrize("command,value", COMMANDS)
    def test_roundtrip_on_echoed_input(self, command, value):
        code, out, _ = run_cli(command, value, "--json")
        assert code == 0
        envelope = json.loads(out)
        assert envelope["command"] == command
        assert envelope["format"] == "json"
        code2, out2, _ = run_cli(command, envelope["input"], "--json")
        assert code2 == 0
        assert json.loads(out2) == envelope

    def test_roundtrip_uncrowded_set(self):
        code, out, _ = run_cli("uncrowded", "set", "4 6 7 8", "--json")
        assert code == 0
        envelope = json.loads(out)
        code2, out2, _ = run_cli("uncrowded", "set", envelope["input"], "--json")
        assert json.loads(out2) == envelope
        assert envelope["result"]["uncrowded"] is False
        assert envelope["result"]["witness"] == [4, 2, 4]

    def test_roundtrip_bij_g(self):
        tableau = "1 2 3 6 7 9 12 14 16 17 / 4 5 8 10 11 13 15 18"
        code, out, _ = run_cli("bij", "g", tableau, "--json")
        assert code == 0
        envelope = json.loads(out)
        code2, out2, _ = run_cli("bij", "g", envelope["input"], "--json")
        assert json.loads(out2) == envelope
        assert envelope["result"]["word"] == "10010101111101110"

    def test_roundtrip_bij_f(self):
        code, out, _ = run_cli("bij", "f", "10010101111101110", "--json")
        envelope = json.loads(out)
        code2, out2, _ = run_cli("bij", "f", envelope["input"], "--json")
        assert json.loads(out2) == envelope

    def test_roundtrip_uncrowded_tableau(self):
        code, out, _ = run_cli("uncrowded", "tableau", "1 2 / 3 4", "--json")
        assert code == 0
        envelope = json.loads(out)
        _, out2, _ = run_cli("uncrowded", "tableau", envelope["input"], "--json")
        assert json.loads(out2) == envelope

    def test_roundtrip_uncrowded_realize(self):
        code, out, _ = run_cli("uncrowded", "realize", "1 3 5", "--degree", "7", "--json")
        assert code == 0
        envelope = json.loads(out)
        _, out2, _ = run_cli(
            "uncrowded", "realize", envelope["input"], "--degree", "7", "--json"
        )
        assert json.loads(out2) == envelope

    def test_roundtrip_canonical_from_word(self):
        code, out, _ = run_cli("canonical", "--from-word", "2 5 9 1 3 6 8 4 7", "--json")
        assert code == 0
        envelope = json.loads(out)
        _, out2, _ = run_cli("canonical", "--from-word", envelope["input"], "--json")
        assert json.loads(out2) == envelope

    def test_degree_flag_keeps_trailing_fixed_points(self):
        code, out, _ = run_cli("canonical", "--from-word", "1", "--degree", "5", "--json")
        assert code == 0
        envelope = json.loads(out)
        assert envelope["degree"] == 5

    def test_canonical_of_identity(self):
        code, out, _ = run_cli("canonical", "1 2 3")
        assert code == 0
        assert "canonical word = []" in out

    def test_canonical_from_word_payload(self):
        code, out, _ = run_cli(
            "canonical", "--from-word", "4 7 1 10 2 6 8", "--json"
        )
        assert code == 0
        envelope = json.loads(out)
        assert envelope["degree"] == 11
        assert envelope["result"]["dec"] == [[4], [7, 6], [8], [10]]
        assert envelope["result"]["inc"] == [[1, 2]]

    def test_stable_key_order(self):
        _, first, _ = run_cli("rsk", "3 1 4 2", "--json")
        _, second, _ = run_cli("rsk", "3 1 4 2", "--json")
        assert first == second
        keys = list(json.loads(first).keys())
        assert keys == ["command", "input", "format", "result"]


class TestSelftestCommand:
    def test_single_fast_criterion(self):
        code, out, _ = run_cli("selftest", "2")
        assert code == 0
        assert out.startswith("PASS 2.")
