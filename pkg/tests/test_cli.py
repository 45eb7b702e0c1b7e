"""
Tests for the sl12 command-line interface.
"""

import json

from cli.sl12_cli import build_parser, run


def test_parser_defaults():
    """Seed and output are shared by every subcommand."""
    args = build_parser().parse_args(["spectra", "--sites", "3"])
    assert args.kind_a == "fermionic" and args.kind_b == "distinguished"
    assert args.seed == 20240917
    assert args.out is None


def test_verify_writes_report(tmp_path, capsys):
    """A passing suite exits 0 and writes a JSON report."""
    out = tmp_path / "reports" / "qybe.json"
    assert run(["verify", "--suite", "qybe", "--out", str(out)]) == 0
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["pass"] is True
    assert payload["params"]["command"] == "verify"
    assert "qybe:two-param" in capsys.readouterr().out


def test_hamiltonian_to_stdout(capsys):
    """The classical two-site Hamiltonian is printed as JSON."""
    assert run(["hamiltonian", "--kind", "classical", "--sites", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "classical"
    assert payload["matrix"]["rows"] == 9


def test_hamiltonian_matrix_market(tmp_path):
    """Numeric export at an explicit point."""
    out = tmp_path / "h.mtx"
    code = run(
        ["hamiltonian", "--kind", "fermionic", "--params", "q=2,s=1", "--format", "mtx",
         "--out", str(out)]
    )
    assert code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("%%MatrixMarket")
    assert "5 5 2.5" in lines


def test_usage_errors_exit_2():
    """Unknown suites, bad parameters and overlong chains are usage errors."""
    assert run(["verify", "--suite", "bogus"]) == 2
    assert run(["hamiltonian", "--kind", "classical", "--params", "x=1"]) == 2
    assert run(["spectra", "--sites", "9"]) == 2
    assert run(["casimir", "--family", "cl", "--index", "1"]) == 2
    assert run([]) == 2
