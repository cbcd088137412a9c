from __future__ import annotations

import json

import pytest

from chiangfloer.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main, render_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_report_d(capsys):
    code, rep = run_json(capsys, "report", "--sum", "D")
    assert code == EXIT_OK
    assert set(rep) == {"command", "inputs", "results", "checks"}
    assert rep["results"]["m0"] == "Zero"
    assert rep["results"]["floer"]["full"] == [2, 2]
    assert all(c["pass"] for c in rep["checks"])


def test_report_v2_u4(capsys):
    code, rep = run_json(capsys, "report", "--sum", "V2+U4")
    floer = rep["results"]["floer"]
    assert floer["full"] == "Obstructed"
    assert floer["central"] == [0, 0]
    assert floer["monodromy"] == [4, 4]
    assert code == EXIT_OK


def test_report_v1(capsys):
    code, rep = run_json(capsys, "report", "--rep", "V1")
    assert rep["results"]["m0"] == "Identity"
    assert rep["results"]["floer"]["full"] == [0, 0]


def test_report_flags_the_literal_obstruction_clause(capsys):
    # V1+D is obstructed although k2+k3+k4 = 0
    code, rep = run_json(capsys, "report", "--sum", "V1+D")
    verdicts = {c["name"]: c["pass"] for c in rep["checks"]}
    assert verdicts["obstructed iff k2+k3+k4>0"] is False
    assert code == EXIT_FAIL


def test_text_and_json_verdicts_agree(capsys):
    _, rep = run_json(capsys, "report", "--sum", "V1+D")
    _, text, _ = run(capsys, "report", "--sum", "V1+D")
    for c in rep["checks"]:
        assert f"{'PASS' if c['pass'] else 'FAIL'}  {c['name']}" in text
    assert render_text(rep) == text.rstrip("\n")


def test_output_is_deterministic(capsys):
    first = run(capsys, "verify", "--only", "classify", "--seed", "3", "--json")
    second = run(capsys, "verify", "--only", "classify", "--seed", "3", "--json")
    assert first == second


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--json", "classify", "--sum", "V1*2+D")
    assert code == EXIT_OK
    assert json.loads(out)["results"]["multiplicities"]["V1"] == 2


def test_classify_and_m0(capsys):
    _, rep = run_json(capsys, "classify", "--sum", "regular")
    assert rep["results"]["decomposition"] == "V4+U4*2"
    _, rep = run_json(capsys, "m0", "--sum", "V1")
    assert rep["results"] == {"class": "Identity", "matrix": ["1"]}


def test_floer_command(capsys):
    code, rep = run_json(capsys, "floer", "--rep", "D", "--emit-matrices", "--paper-basis")
    res = rep["results"]
    assert (res["obstructed"], res["hf"]) == (False, [2, 2])
    assert len(res["D0"]) == 16 and all(len(r) == 16 for r in res["D0"])
    _, rep = run_json(capsys, "floer", "--rep", "V2", "--subcomplex", "full")
    assert rep["results"]["obstructed"] is True and rep["results"]["hf"] is None
    _, rep = run_json(capsys, "floer", "--rep", "V2+D", "--subcomplex", "central")
    assert rep["results"]["hf"] == [2, 2]


def test_floer_pair(capsys):
    code, rep = run_json(capsys, "floer", "--rep", "D", "--pair", "U4", "--subcomplex", "central")
    assert code == EXIT_OK and rep["inputs"]["pair"] == "U4"


def test_morse_command(capsys):
    _, rep = run_json(capsys, "morse", "--rep", "V1", "--pair", "conjugation")
    assert rep["results"]["h"] == [6, 6, 6, 6]
    _, rep = run_json(capsys, "morse", "--rep", "regular", "--coefficients", "monodromy")
    assert rep["results"]["h"] == [6, 6, 6, 6]


def test_matrices_check(capsys):
    code, rep = run_json(capsys, "matrices", "--check")
    assert code == EXIT_OK and len(rep["checks"]) == 2


def test_transport_table(capsys):
    code, rep = run_json(capsys, "transport-table", "--check")
    assert code == EXIT_OK
    assert rep["results"]["~gamma'3"] == "a^2 b"
    assert (rep["results"]["F23.gamma0"], rep["results"]["F23.gamma1"]) == ("a", "a^3 b")
    assert (rep["results"]["w-1.gamma0"], rep["results"]["w-1.gamma1"]) == ("a^5", "e")


def test_transport_table_opposite_convention_fails(capsys):
    code, out, _ = run(capsys, "transport-table", "--check", "--convention", "inverse")
    assert code == EXIT_FAIL and "FAIL  transport" in out


def test_verify_only_filters(capsys):
    code, rep = run_json(capsys, "verify", "--only", "matrices,char2")
    assert code == EXIT_OK
    assert set(rep["results"]) == {"matrices", "char2"}


@pytest.mark.parametrize("argv", [
    ["classify", "--rep", "does-not-exist.json"],
    ["classify", "--rep", '{"a": ["01", "10"], "b": ["10", "01"]}'],
    ["verify", "--only", "nonsense"],
    ["floer", "--rep", "D", "--pair", "V1", "--subcomplex", "monodromy"],
    ["matrices", "--rep", "V1", "--check"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_INPUT and err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["floer", "--rep", "D", "--subcomplex", "bogus"])
    assert exc.value.code == 2


def test_rep_file(tmp_path, capsys):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"dim": 2, "a": ["01", "11"], "b": ["01", "10"]}))
    _, rep = run_json(capsys, "classify", "--rep", str(path))
    assert rep["results"]["decomposition"] == "D"
