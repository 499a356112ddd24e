import json

import pytest

from ellcode.cli import main

FIELD16 = "p=2,m=4,mod=1,1,0,0,1"
CURVE16 = "1,8,0,0,9"
FIELD25 = "p=5,m=2,mod=2,4,1"
CURVE25 = "0,0,0,0,1"


def _construct16(path):
    return main(["construct", "--field", FIELD16, "--curve", CURVE16,
                 "--k", "4", "--construction", "1", "--pairs-x", "5,1,2,7",
                 "--out", str(path)])


def test_construct_example_iv1(tmp_path, capsys):
    out = tmp_path / "c16.json"
    assert _construct16(out) == 0
    printed = capsys.readouterr().out
    assert "[8,4,5]" in printed and "hull=0" in printed
    doc = json.loads(out.read_text())
    assert doc["n"] == 8 and doc["hull_dim"] == 0


def test_construct_example_v1(tmp_path, capsys):
    out = tmp_path / "c25.json"
    code = main(["construct", "--field", FIELD25, "--curve", CURVE25,
                 "--k", "8", "--construction", "2", "--out", str(out)])
    assert code == 0
    assert "[16,8,9]" in capsys.readouterr().out


def test_construct_missing_k_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--field", FIELD16, "--curve", CURVE16,
              "--construction", "1"])
    assert exc.value.code == 2


def test_construct_bad_k_exit_2(tmp_path, capsys):
    code = main(["construct", "--field", FIELD16, "--curve", CURVE16,
                 "--k", "3", "--construction", "1",
                 "--out", str(tmp_path / "x.json")])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_construct_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert _construct16(a) == 0
    assert _construct16(b) == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_round_trip(tmp_path, capsys):
    out = tmp_path / "c.json"
    _construct16(out)
    assert main(["verify", str(out)]) == 0


def test_verify_detects_tampered_matrix(tmp_path, capsys):
    out = tmp_path / "c.json"
    _construct16(out)
    doc = json.loads(out.read_text())
    row = list(doc["generator_matrix"][2])
    row[6] = (row[6] + 1) % 16
    doc["generator_matrix"][2] = row
    out.write_text(json.dumps(doc))
    assert main(["verify", str(out)]) == 1
    assert "verification failed" in capsys.readouterr().err


def test_verify_zeroed_scaling_is_schema_error(tmp_path, capsys):
    out = tmp_path / "c.json"
    _construct16(out)
    doc = json.loads(out.read_text())
    doc["scaling_v"][3] = 0
    out.write_text(json.dumps(doc))
    assert main(["verify", str(out)]) == 2
    assert "schema error" in capsys.readouterr().err


def test_verify_missing_file(capsys):
    assert main(["verify", "/nonexistent/cert.json"]) == 2


def test_transform_selfdual(tmp_path, capsys):
    cert = tmp_path / "c.json"
    _construct16(cert)
    out = tmp_path / "sd.json"
    assert main(["transform", str(cert), "--selfdual", "--out", str(out)]) == 0
    printed = capsys.readouterr().out
    assert "hull=4" in printed
    doc = json.loads(out.read_text())
    assert doc["u"] == [4, 4, 3, 3, 2, 2, 5, 5]


def test_transform_selfdual_odd_char_rejected(tmp_path, capsys):
    cert = tmp_path / "c25.json"
    main(["construct", "--field", FIELD25, "--curve", CURVE25,
          "--k", "4", "--construction", "2", "--out", str(cert)])
    assert main(["transform", str(cert), "--selfdual"]) == 2
    assert "odd characteristic" in capsys.readouterr().err


def test_transform_lcd(tmp_path, capsys):
    cert = tmp_path / "c.json"
    _construct16(cert)
    assert main(["transform", str(cert), "--lcd"]) == 0
    assert "hull=0" in capsys.readouterr().out


def test_eaqecc_row(tmp_path, capsys):
    cert = tmp_path / "c.json"
    _construct16(cert)
    out = tmp_path / "table.csv"
    assert main(["eaqecc", str(cert), "--out", str(out)]) == 0
    assert "[[8,4,5;4]]_16 mds=true" in capsys.readouterr().out
    assert out.read_text().startswith("q,n,k,d,hull")


def test_search_bounds(tmp_path, capsys):
    out = tmp_path / "bounds.csv"
    assert main(["search", "--table", "bounds", "--q", "16,32,64,256",
                 "--out", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith("q,")
    bound_by_q = {int(l.split(",")[0]): int(l.split(",")[2]) for l in lines[1:]}
    assert bound_by_q == {16: 8, 32: 20, 64: 36, 256: 140}


def test_search_bounds_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["search", "--table", "bounds", "--q", "25,49", "--out", str(a)])
    main(["search", "--table", "bounds", "--q", "25,49", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_search_census(tmp_path):
    out = tmp_path / "census.json"
    assert main(["search", "--table", "census", "--q", "4",
                 "--format", "json", "--out", str(out)]) == 0
    rows = json.loads(out.read_text())
    assert {r["order"] for r in rows} == set(range(1, 10))


def test_search_lemma_max(capsys):
    assert main(["search", "--table", "lemma-max", "--group", "1x6",
                 "--n", "4"]) == 0
    assert "2 counterexample(s)" in capsys.readouterr().out


def test_search_usage_errors(capsys):
    assert main(["search", "--table", "bounds"]) == 2
    assert main(["search", "--table", "lemma-max", "--group", "1x6"]) == 2
