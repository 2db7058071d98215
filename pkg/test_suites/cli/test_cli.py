"""Command-line interface tests (CLI-001 through CLI-033)."""

import json

import pytest

from ncfree import OPERATIONS, freeconv, hopf, ncpart, onedim, representation, series
from ncfree.cli import COMMANDS, EXIT_INVALID, EXIT_OK, EXIT_USAGE, main

WORKED_SERIES = '{"s":1,"maxdeg":3,"coeffs":[{"word":[1],"value":"1"},{"word":[1,1],"value":"2"},' \
                '{"word":[1,1,1],"value":"3"}]}'


def run(capsys, *argv):
    """Run ncf and return (exit code, parsed stdout or raw text, stderr)."""
    code = main(list(argv))
    captured = capsys.readouterr()
    try:
        out = json.loads(captured.out)
    except ValueError:
        out = captured.out
    return code, out, captured.err


@pytest.mark.usefixtures("isolated_config")
class TestNcCommands:
    """Tests for the nc command group."""

    def test_cli_001_kreweras(self, capsys):
        """CLI-001: The worked Kreweras example."""
        code, out, _ = run(capsys, "nc", "kreweras", "--partition", "[[1,2],[3,4]]")
        assert code == EXIT_OK
        assert out == [[1], [2, 4], [3]]

    def test_cli_002_enumerate(self, capsys):
        """CLI-002: NC(3) in enumeration order."""
        code, out, _ = run(capsys, "nc", "enumerate", "--n", "3")
        assert code == EXIT_OK
        assert out == [[[1], [2], [3]], [[1], [2, 3]], [[1, 2], [3]], [[1, 2, 3]], [[1, 3], [2]]]

    def test_cli_003_enumerate_over_cap(self, capsys):
        """CLI-003: n above the cap exits with status 3."""
        code, _, err = run(capsys, "nc", "enumerate", "--n", "13")
        assert code == EXIT_INVALID
        assert err.startswith("Error:")

    def test_cli_004_cap_flag_lowers_limit(self, capsys):
        """CLI-004: --nc-cap overrides the configured cap."""
        code, _, _ = run(capsys, "--nc-cap", "3", "nc", "enumerate", "--n", "4")
        assert code == EXIT_INVALID

    def test_cli_005_check_crossing(self, capsys):
        """CLI-005: check reports crossing partitions as false."""
        code, out, _ = run(capsys, "nc", "check", "--partition", "[[1,3],[2,4]]")
        assert code == EXIT_OK
        assert out is False

    def test_cli_006_bad_json(self, capsys):
        """CLI-006: Unparsable input exits with status 3."""
        code, _, err = run(capsys, "nc", "kreweras", "--partition", "[[1,2")
        assert code == EXIT_INVALID
        assert "Invalid JSON" in err

    def test_cli_007_crossing_input_rejected(self, capsys):
        """CLI-007: Kreweras of a crossing partition is invalid input."""
        code, _, _ = run(capsys, "nc", "kreweras", "--partition", "[[1,3],[2,4]]")
        assert code == EXIT_INVALID

    def test_cli_008_interval(self, capsys):
        """CLI-008: Cuts given as a comma list."""
        code, out, _ = run(capsys, "nc", "interval", "--n", "5", "--cuts", "2,5")
        assert code == EXIT_OK
        assert out == [[1, 2], [3, 4, 5]]


@pytest.mark.usefixtures("isolated_config")
class TestAlgebraCommands:
    """Tests for the series, conv, hopf, repr and onedim groups."""

    def test_cli_010_zeta(self, capsys):
        """CLI-010: zeta lists every word with value 1."""
        code, out, _ = run(capsys, "series", "zeta", "--s", "1", "--maxdeg", "3")
        assert code == EXIT_OK
        assert out == {
            "s": 1,
            "maxdeg": 3,
            "coeffs": [{"word": [1], "value": "1"}, {"word": [1, 1], "value": "1"},
                       {"word": [1, 1, 1], "value": "1"}],
        }

    def test_cli_011_zeta_uses_config_defaults(self, capsys):
        """CLI-011: Without --s/--maxdeg the configured defaults apply."""
        code, out, _ = run(capsys, "series", "zeta")
        assert code == EXIT_OK
        assert (out["s"], out["maxdeg"]) == (2, 4)

    def test_cli_012_box_with_unit(self, capsys):
        """CLI-012: The unit is neutral for boxed convolution."""
        unit = '{"s":1,"maxdeg":3,"coeffs":[{"word":[1],"value":"1"}]}'
        code, out, _ = run(capsys, "conv", "box", "--f", unit, "--g", WORKED_SERIES)
        assert code == EXIT_OK
        assert out == json.loads(WORKED_SERIES)

    def test_cli_013_inverse_not_invertible(self, capsys):
        """CLI-013: A zero first-order coefficient exits with status 3."""
        f = '{"s":1,"maxdeg":2,"coeffs":[{"word":[1,1],"value":"1"}]}'
        code, _, err = run(capsys, "conv", "inv", "--f", f)
        assert code == EXIT_INVALID
        assert "not invertible" in err

    def test_cli_014_counit(self, capsys):
        """CLI-014: epsilon(X_1) = 1, epsilon(X_12) = 0."""
        assert run(capsys, "hopf", "counit", "--word", "1")[1] == "1"
        assert run(capsys, "hopf", "counit", "--word", "1,2")[1] == "0"

    def test_cli_015_bracket(self, capsys):
        """CLI-015: [e_12, e_11] = e_121."""
        code, out, _ = run(capsys, "hopf", "bracket", "--word", "1,2", "--other", "1,1", "--s", "2", "--maxdeg", "3")
        assert code == EXIT_OK
        assert out == [{"word": [1, 2, 1], "value": "1"}]

    def test_cli_016_coproduct_count(self, capsys):
        """CLI-016: Delta X_1234 has 14 terms."""
        code, out, _ = run(capsys, "hopf", "coproduct", "--word", "[1,2,3,4]", "--s", "4", "--maxdeg", "4")
        assert code == EXIT_OK
        assert out["count"] == 14
        assert out["arity"] == 2

    def test_cli_017_repr_build_and_certify(self, capsys, tmp_path):
        """CLI-017: A representation written with -o certifies as unipotent."""
        target = tmp_path / "rep.json"
        code, out, _ = run(capsys, "repr", "build", "--f", WORKED_SERIES, "-o", str(target))
        assert code == EXIT_OK
        assert out == ""
        written = json.loads(target.read_text())
        assert written["basis"] == ["1", "Xbar[1,1]", "Xbar[1,1]^2", "Xbar[1,1,1]"]
        assert written["rows"][0] == ["1", "2", "4", "3"]

        code, out, _ = run(capsys, "repr", "certify", "--matrix", str(target))
        assert code == EXIT_OK
        assert out == {"dim": 4, "unipotent": True, "triangular": True, "nilpotency_index": 3}

    def test_cli_018_repr_build_domain_error(self, capsys):
        """CLI-018: A non-unipotent series is rejected by repr build."""
        f = '{"s":1,"maxdeg":2,"coeffs":[{"word":[1],"value":"2"}]}'
        assert run(capsys, "repr", "build", "--f", f)[0] == EXIT_INVALID

    def test_cli_019_finverse(self, capsys):
        """CLI-019: The inverse of z + z^2 to degree 2."""
        code, out, _ = run(capsys, "onedim", "finverse", "--f", '["0","1","1"]')
        assert code == EXIT_OK
        assert out == ["0", "1", "-1"]

    def test_cli_020_ftrafo_from_series_object(self, capsys):
        """CLI-020: One-variable commands also accept series objects."""
        zeta = '{"s":1,"maxdeg":4,"coeffs":[' + ",".join(
            '{"word":%s,"value":"1"}' % json.dumps([1] * k) for k in range(1, 5)) + "]}"
        code, out, _ = run(capsys, "onedim", "ftrafo", "--f", zeta)
        assert code == EXIT_OK
        assert out == ["1", "-1", "1", "-1"]

    def test_cli_021_symm(self, capsys):
        """CLI-021: symm prints h_1..h_3 with their displays."""
        code, out, _ = run(capsys, "onedim", "symm", "--maxdeg", "4")
        assert code == EXIT_OK
        assert [entry["n"] for entry in out] == [1, 2, 3]
        assert out[0]["display"] == "Xbar1"
        assert out[2]["display"] == "5*Xbar1^3 - 5*Xbar1*Xbar2 + Xbar3"

    def test_cli_032_cap_reaches_grouped_cumulants(self, capsys):
        """CLI-032: free-product sums over NC(2n), so --nc-cap 3 rejects a degree-2 input."""
        f = '{"s":1,"maxdeg":2,"coeffs":[{"word":[1],"value":"1"},{"word":[1,1],"value":"2"}]}'
        code, _, err = run(capsys, "--nc-cap", "3", "conv", "free-product", "--f", f, "--g", f)
        assert code == EXIT_INVALID
        assert "cap 3" in err
        code, _, _ = run(capsys, "--nc-cap", "4", "conv", "free-product", "--f", f, "--g", f)
        assert code == EXIT_OK

    @pytest.mark.longrun
    def test_cli_033_raised_cap_reaches_convolution(self, capsys):
        """CLI-033: --nc-cap 13 lets moeb solve degree 13 instead of stopping at NC(12)."""
        code, out, _ = run(capsys, "--nc-cap", "13", "series", "moeb", "--s", "1", "--maxdeg", "13")
        assert code == EXIT_OK
        values = {tuple(c["word"]): c["value"] for c in out["coeffs"]}
        assert values[(1,) * 13] == "208012"


@pytest.mark.usefixtures("isolated_config")
class TestUsage:
    """Tests for usage errors, verify and config."""

    def test_cli_022_no_command_prints_help(self, capsys):
        """CLI-022: Bare ncf prints help and succeeds."""
        code, out, _ = run(capsys)
        assert code == EXIT_OK
        assert "Commands:" in out

    def test_cli_023_unknown_command(self, capsys):
        """CLI-023: An unknown command is a usage error."""
        assert run(capsys, "frobnicate")[0] == EXIT_USAGE

    def test_cli_024_missing_action(self, capsys):
        """CLI-024: A group without an action is a usage error."""
        code, _, err = run(capsys, "nc")
        assert code == EXIT_USAGE
        assert "needs an action" in err

    def test_cli_025_bad_jobs(self, capsys):
        """CLI-025: --jobs must be positive."""
        assert run(capsys, "--jobs", "0", "series", "zeta")[0] == EXIT_USAGE

    def test_cli_026_verify_suite(self, capsys):
        """CLI-026: verify runs a named suite and prints a table."""
        code, out, _ = run(capsys, "verify", "ncpart", "symm")
        assert code == EXIT_OK
        assert "0 failed" in out

    def test_cli_027_verify_unknown_suite(self, capsys):
        """CLI-027: An unknown suite name is a usage error."""
        code, _, err = run(capsys, "verify", "nosuch")
        assert code == EXIT_USAGE
        assert "nosuch" in err

    def test_cli_028_config_show(self, capsys):
        """CLI-028: config show prints the effective values."""
        code, out, _ = run(capsys, "config", "show")
        assert code == EXIT_OK
        assert "default_s = 2" in out
        assert "degree_bound = (default)" in out

    def test_cli_029_config_init(self, capsys, isolated_config):
        """CLI-029: init refuses to overwrite without --force."""
        assert run(capsys, "config", "init")[0] == EXIT_OK
        assert (isolated_config / ".ncfree.toml").exists()
        assert run(capsys, "config", "init")[0] == EXIT_INVALID
        assert run(capsys, "config", "init", "--force")[0] == EXIT_OK


class TestDispatch:
    """Tests for the command table."""

    def test_cli_030_every_operation_dispatched_once(self):
        """CLI-030: Each public operation has exactly one subcommand."""
        dispatched = [op for command in COMMANDS.values() for op in command.operations]
        assert sorted(dispatched) == sorted(OPERATIONS)
        assert len(set(dispatched)) == len(dispatched)

    def test_cli_031_operations_exist(self):
        """CLI-031: Every listed operation is a callable of the library."""
        modules = (ncpart, series, freeconv, hopf, representation, onedim)
        for name in OPERATIONS:
            assert any(callable(getattr(m, name, None)) for m in modules), name
