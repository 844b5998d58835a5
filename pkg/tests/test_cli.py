import json

import pytest

from delcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out) if out else None, err


def test_vt_enum(capsys):
    code, out, _ = run(capsys, "vt-enum", "--n", "4", "--a", "0")
    assert code == 0
    assert out.split() == ["0000", "0110", "1001", "1111"]


def test_vt_enum_to_file(capsys, tmp_path):
    path = tmp_path / "codebook.txt"
    code, obj, _ = run_json(capsys, "vt-enum", "--n", "4", "--a", "0",
                            "--out", str(path))
    assert code == 0 and obj["size"] == 4
    assert path.read_text().split() == ["0000", "0110", "1001", "1111"]


def test_encode_rep(capsys):
    code, out, _ = run(capsys, "encode", "--code", "rep", "--n", "9",
                       "--t", "1", "--info", "101")
    assert code == 0 and out.strip() == "111000111"


def test_encode_far_json(capsys):
    code, obj, _ = run_json(capsys, "encode", "--code", "far", "--n", "12",
                            "--P", "3", "--info", "0,0,1,1")
    assert code == 0
    assert obj["codeword"] == "011011100100"
    assert obj["config"]["indices"] == [0, 0, 1, 1]


def test_decode_vt(capsys):
    code, obj, _ = run_json(capsys, "decode", "--code", "vt", "--n", "4",
                            "--a", "0", "--word", "010")
    assert code == 0 and obj["estimate"] == "0110"
    assert obj["diagnostics"] == {"ambiguous": False}


def test_decode_far(capsys):
    code, obj, _ = run_json(capsys, "decode", "--code", "far", "--n", "12",
                            "--P", "3", "--word", "01101110010e")
    assert code == 0 and obj["estimate"] == "011011100100"


def test_corrupt_with_pattern(capsys):
    pattern = json.dumps({"n": 4, "errors": [{"pos": 2, "kind": "D"},
                                             {"pos": 4, "kind": "E"}]})
    code, out, _ = run(capsys, "corrupt", "--word", "0110",
                       "--pattern", pattern)
    assert code == 0 and out.strip() == "01e"


def test_corrupt_with_family_is_seeded(capsys):
    code1, out1, _ = run(capsys, "corrupt", "--word", "011011100100",
                         "--family", "pfar:9", "--seed", "5")
    code2, out2, _ = run(capsys, "corrupt", "--word", "011011100100",
                         "--family", "pfar:9", "--seed", "5")
    assert code1 == code2 == 0 and out1 == out2


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--n", "4", "--t", "2")
    assert code == 0 and out.strip() == "67"
    code, out, _ = run(capsys, "count", "--n", "12", "--t", "2", "--far", "9")
    assert code == 0 and out.strip() == "91"
    code, out, _ = run(capsys, "count", "--n", "9", "--burst", "1")
    assert code == 0 and out.strip() == "100"


def test_bounds(capsys):
    code, obj, _ = run_json(capsys, "bounds", "--name", "delta", "--P", "5")
    assert code == 0 and obj["report"]["value"] == 0.375
    code, _, err = run(capsys, "bounds", "--name", "far_upper", "--n", "12",
                       "--P", "3")
    assert code == 1 and "delta" in err


def test_fraction(capsys):
    code, obj, _ = run_json(capsys, "fraction", "--n", "10000", "--t", "2",
                            "--omega", "100")
    assert code == 0
    assert obj["fraction"] >= obj["bound"] >= 0.58


def test_verify_pass_and_fail_exit_codes(capsys):
    code, obj, _ = run_json(capsys, "verify", "--mode", "combinatorial",
                            "--code", "vt", "--n", "4", "--a", "0",
                            "--family", "atmost:1@D")
    assert code == 0 and obj["result"] == "pass"
    code, obj, _ = run_json(capsys, "verify", "--mode", "combinatorial",
                            "--code", "vt", "--n", "4", "--a", "0",
                            "--family", "atmost:1@F")
    assert code == 2 and obj["result"] == "fail"
    assert "counterexample" in obj


def test_verify_roundtrip_far(capsys):
    code, obj, _ = run_json(capsys, "verify", "--mode", "roundtrip",
                            "--code", "far", "--n", "12", "--P", "3",
                            "--family", "pfar:9")
    assert code == 0 and obj["cases"] == 1456


def test_verify_budget_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("DELCODE_BUDGET", "10")
    code, _, err = run(capsys, "verify", "--mode", "roundtrip",
                       "--code", "vt", "--n", "4", "--a", "0",
                       "--family", "atmost:1")
    assert code == 3 and "budget" in err


def test_simulate_worker_independence(capsys):
    base = ("simulate", "--code", "far", "--n", "12", "--P", "3",
            "--family", "pfar:9", "--trials", "200", "--seed", "9")
    code1, out1, _ = run(capsys, *base, "--workers", "1", "--format", "json")
    code4, out4, _ = run(capsys, *base, "--workers", "4", "--format", "json")
    assert code1 == code4 == 0
    assert out1 == out4


def test_usage_errors(capsys):
    code, _, err = run(capsys, "decode", "--code", "vt", "--word", "010")
    assert code == 1 and "--n" in err
    code, _, err = run(capsys, "corrupt", "--word", "0110")
    assert code == 1
    code, _, err = run(capsys, "bounds", "--name", "nope")
    assert code == 1


def test_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == 1
