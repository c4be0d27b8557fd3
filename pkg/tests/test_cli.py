import json
import subprocess
import sys

import pytest

from pmvsqrt.cli import run_command


def run(argv, capsys):
    code = run_command(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sqrt_chain4(capsys):
    code, out, _ = run(["sqrt", "chain4"], capsys)
    assert code == 1
    assert out.strip() == "no square root; Sq1 violated at x=1 by candidate r(1)=2"


def test_classify_mixed(capsys):
    code, out, _ = run(["classify", "mixed-product"], capsys)
    assert code == 0
    assert out.strip() == "Mixed; v=(1,0); Boolean part 2 elements; strict part Γ(ℚ,1)"


def test_suite_ns1_cocycle(capsys):
    code, out, _ = run(["suite", "NS1", "cocycle", "--seed", "0"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "sampled-pass, 512 points"


def test_suite_json_failure_has_counterexample(capsys):
    code, out, _ = run(["suite", "EQ85", "cocycle", "--json", "--budget", "64"], capsys)
    assert code == 1
    data = json.loads(out)
    assert data["status"] == "fail" and data["counterexample"]["args"]


def test_sqrt_with_element(capsys):
    code, out, _ = run(["sqrt", "ratchain", "--element", "1/2"], capsys)
    assert code == 0
    assert "r(1/2) = 3/4" in out


def test_check_axioms_json(capsys):
    code, out, _ = run(["check-axioms", "boolean2", "--json"], capsys)
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_ideals(capsys):
    code, out, _ = run(["ideals", "boolean2"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "4 ideals of Γ(ℤ^2,(1,1))"


def test_counterexample(capsys):
    code, out, _ = run(["counterexample", "--property", "Sq1-solvability", "--max-size", "5"], capsys)
    assert code == 1
    assert out.splitlines()[0] == "counterexample: Γ(ℤ,2), 3 elements"
    code, out, _ = run(["counterexample", "--property", "axioms", "--max-size", "4"], capsys)
    assert code == 0


def test_print_round_trip(capsys):
    code, out, _ = run(["print", "cocycle"], capsys)
    assert code == 0
    code2, out2, _ = run(["print", out.strip()], capsys)
    assert out2 == out


@pytest.mark.parametrize("argv", [
    ["sqrt", '{"kind":"mv_chain","n":-1}'],
    ["sqrt", "no-such-file.spec"],
    ["bogus"],
    ["suite", "P99", "ratchain"],
    ["counterexample", "--property", "nonsense"],
    ["ideals", "ratchain"],
])
def test_usage_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert "error" in err


def test_parse_error_position(capsys):
    code, _, err = run(["check-axioms", '{"kind":"mv_chain","n":-1}'], capsys)
    assert "line 1, column 24: n must be ≥ 0" in err


@pytest.mark.parametrize("name, code", [
    ("chain4", 1), ("boolean2", 0), ("ratchain", 0), ("cocycle", 0), ("lexpair", 0),
    ("mixed-product", 0), ("prop862", 0),
])
def test_sqrt_exit_codes_on_corpus(name, code, capsys):
    assert run(["sqrt", name, "--budget", "128"], capsys)[0] == code


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "pmvsqrt.cli", "print", "chain4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == '{"kind": "mv_chain", "n": 4}'
