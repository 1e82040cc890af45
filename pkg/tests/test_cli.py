import csv
import io
import json

import pytest

from cyclopair.cli import run
from cyclopair.verify import GOLDEN_37, projectively_equal


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_pair_json_golden():
    code, text = call("pair", "-p", "37", "-r", "32", "--format", "json")
    assert code == 0
    rec = json.loads(text)
    assert rec["kernel_dim"] == 1
    entries = {int(k): v for k, v in rec["entries"].items()}
    assert projectively_equal(entries, GOLDEN_37, 37)


@pytest.mark.parametrize("argv", [
    ["pair", "-p", "10", "-r", "4"],
    ["pair", "-p", "37", "-r", "30"],  # 37 does not divide B_30
    ["pair", "-p", "37"],
    ["bogus"],
    ["scan", "--threads", "0"],
    ["degenerate", "-p", "37", "-r", "18"],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_pair_mod_p2():
    code, text = call("pair", "-p", "37", "-r", "32", "--precision", "2", "--format", "json")
    assert code == 0 and json.loads(text)["order"] == 37
    code, text = call("pair", "-p", "37", "-r", "32", "--precision", "2", "--convention", "naive", "--format", "json")
    assert code == 0 and json.loads(text)["order"] == 37


def _csv_rows(text):
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["p", "r", "i", "e"]
    return {(int(p), int(r), int(i)): int(e) for p, r, i, e in rows[1:]}


def _json_rows(text):
    out = {}
    for line in text.splitlines():
        rec = json.loads(line)
        assert rec["kernel_dim"] == 1 and rec["x_p_minus_r_zero"]
        for i, e in rec["entries"].items():
            out[(rec["p"], rec["r"], int(i))] = e
    return out


def test_scan_formats_agree():
    c1, as_csv = call("scan", "--limit", "160", "--format", "csv")
    c2, as_json = call("scan", "--limit", "160", "--format", "json", "--threads", "3")
    assert c1 == c2 == 0
    a, b = _csv_rows(as_csv), _json_rows(as_json)
    assert a == b
    assert {(p, r) for p, r, _ in a} == {(37, 32), (59, 44), (67, 58), (101, 68), (103, 24),
                                          (131, 22), (149, 130), (157, 62), (157, 110)}


def test_scan_warm_cache_identical(tmp_path):
    cache = str(tmp_path / "b.jsonl")
    cold = call("scan", "--limit", "120", "--format", "csv", "--cache", cache)
    warm = call("scan", "--limit", "120", "--format", "csv", "--cache", cache)
    assert cold == warm and cold[0] == 0
    with open(cache) as fh:
        assert json.loads(fh.readline()) == {"format": "bernoulli-cache", "version": 1}


def test_scan_env_cache(tmp_path, monkeypatch):
    path = tmp_path / "env.jsonl"
    monkeypatch.setenv("CYCLOPAIR_CACHE", str(path))
    assert call("scan", "--limit", "60")[0] == 0
    assert path.exists()


def test_corrupted_cache_exit_2(tmp_path, capsys):
    cache = tmp_path / "b.jsonl"
    assert call("scan", "--limit", "60", "--cache", str(cache))[0] == 0
    lines = cache.read_text().splitlines()
    lines[3] = lines[3][:-5]
    cache.write_text("\n".join(lines) + "\n")
    code, text = call("scan", "--limit", "60", "--cache", str(cache))
    assert code == 2 and text == ""
    assert "b.jsonl:4: malformed" in capsys.readouterr().err


def test_ihara_check():
    code, text = call("ihara-check", "--format", "json")
    assert code == 0
    rep = json.loads(text)
    assert rep["ratio"] == 50 and rep["pairing_consistent"] is True


def test_galois_text_and_json():
    code, text = call("galois", "-p", "37", "-r", "32")
    assert code == 0
    assert "- 11[x_3,x_29]" in text and "- 1[x_31,x_37]" in text
    assert "# greenberg: holds" in text
    code, text = call("galois", "-p", "691", "-r", "12", "--format", "json")
    assert code == 0 and json.loads(text)["greenberg"] == "conditional"
    code, text = call("galois", "-p", "691", "-r", "12", "--format", "json", "--attest")
    assert json.loads(text)["greenberg"] == "holds"


def test_degenerate():
    code, text = call("degenerate", "-p", "89209", "--format", "json")
    assert code == 0 and json.loads(text)["degenerate"] is True
    code, text = call("degenerate", "-p", "37")
    assert code == 0 and "absent" in text


def test_bernoulli(tmp_path):
    code, text = call("bernoulli", "-p", "691", "-k", "12")
    assert code == 0 and text.strip() == "B_12 = 0 mod 691^1"
    code, text = call("bernoulli", "-p", "37", "-k", "32", "--precision", "2", "--format", "json")
    assert json.loads(text)["values"]["32"] % 37 == 0
    cache = tmp_path / "c.jsonl"
    code, text = call("bernoulli", "-p", "37", "--format", "csv", "--cache", str(cache))
    assert code == 0 and len(text.splitlines()) == 1 + 17
    assert len(cache.read_text().splitlines()) == 1 + 17
