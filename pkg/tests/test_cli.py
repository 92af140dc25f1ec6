import json

import pytest

from drglocal.cli import EXIT_CODES, make_parser, run


def _json(capsys, argv):
    code = run(argv + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def test_spectrum_of_array(capsys):
    code, rec = _json(capsys, ["spectrum", "{27,16,1;1,16,27}"])
    assert code == 0
    assert [(r["eigenvalue"], r["multiplicity"]) for r in rec["spectrum"]] == [("27", "1"), ("3", "21"), ("-1", "27"), ("-9", "7")]


def test_feasible_negative_verdict_exits_zero(capsys):
    code, rec = _json(capsys, ["feasible", "{21,12,1;1,4,21}"])
    assert code == 0 and rec["verdict"] == "infeasible"
    f3 = next(f for f in rec["filters"] if f["code"] == "F3")
    assert f3["status"] == "fail"


def test_error_exit_codes(tmp_path, capsys):
    assert run(["feasible", "{21,12"]) == 3
    assert run(["construct", "NoSuchFamily"]) == 4
    assert run(["construct", "Paley", "15"]) == 4
    assert run(["spectrum", str(tmp_path / "missing.txt")]) == 5
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 7\n")
    assert run(["local-check", str(bad)]) == 5
    assert run(["bogus"]) == 2
    assert run([]) == 2


def test_construct_then_local_check_and_iso(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run(["construct", "Chang(1)", "--out", str(a)]) == 0
    assert run(["construct", "Triangular", "8", "--out", str(b)]) == 0
    capsys.readouterr()
    code, rec = _json(capsys, ["iso", str(a), str(b)])
    assert code == 0 and rec["isomorphic"] is False
    code, rec = _json(capsys, ["iso", str(a), str(a)])
    assert rec["isomorphic"] is True
    # Chang graphs have local theta1 > 1; their complements pass
    assert run(["local-check", str(a)]) == 1
    c = tmp_path / "c.txt"
    assert run(["construct", "Paley(13)", "--out", str(c)]) == 0
    capsys.readouterr()
    code, rec = _json(capsys, ["local-check", str(c), "--t", "1"])
    assert code == 0 and rec["all_pass"]


def test_spectrum_of_graph_file(tmp_path, capsys):
    f = tmp_path / "p.txt"
    run(["construct", "Petersen", "--out", str(f)])
    capsys.readouterr()
    code, rec = _json(capsys, ["spectrum", str(f)])
    assert [(r["eigenvalue"], r["multiplicity"]) for r in rec["spectrum"]] == [("3", "1"), ("1", "5"), ("-2", "4")]


def test_scan_json_round_trip(capsys):
    code, rec = _json(capsys, ["scan", "diam3"])
    assert code == 0 and rec["schema"] == 1
    assert json.loads(json.dumps(rec)) == rec
    top = [a["item"] for a in rec["arrays"] if a["status"] == "surviving"]
    assert top == ["{16,10,1;1,5,16}"]


def test_verify_exit_status(capsys):
    assert run(["verify", "thm-1-2"]) == 0
    assert run(["verify", "thm-1-1"]) == 1


def test_text_output_deterministic(capsys):
    run(["scan", "diam2"])
    first = capsys.readouterr().out
    run(["scan", "diam2"])
    assert capsys.readouterr().out == first


def test_help_documents_exit_codes(capsys):
    with pytest.raises(SystemExit):
        make_parser().parse_args(["--help"])
    out = capsys.readouterr().out
    for code, _ in EXIT_CODES:
        assert f"{code:>2}  " in out
