import io
import json
import shutil
import subprocess

import pytest

from braidsig.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sig(capsys):
    code, out, _ = run(capsys, "sig", "1 1 1")
    assert code == 0
    assert out.strip() == "sigma=-2 nullity=0 components=1 b1=2"


def test_sig_json_negative_first_letter(capsys):
    code, out, _ = run(capsys, "sig", "-1 -2 -1", "--json")
    assert code == 0
    assert json.loads(out) == {"betti": 1, "components": 2, "nullity": 0, "sigma": 1, "word": "B3: -1 -2 -1"}


def test_nf_and_classify(capsys):
    code, out, _ = run(capsys, "nf", "1 2 1 1 2 1 -1 -1", "--json")
    assert code == 0 and json.loads(out)["factors"] == ["ba", "ab"]
    code, out, _ = run(capsys, "classify", "1 2 1 1 2 1 2 2 2 2", "--json")
    data = json.loads(out)
    assert (data["family"], data["n"], data["q"], data["conjugate_to_positive"]) == (5, 1, 4, True)


def test_invariants_and_two_bridge(capsys):
    code, out, _ = run(capsys, "invariants", "1 2 1 1 2 1", "--json")
    data = json.loads(out)
    assert (data["name"], data["sigma"], data["crossing_number"]) == ("T(3,3)", -4, 6)
    code, out, _ = run(capsys, "two-bridge", "C(2,3,2)@pq2r", "--json")
    data = json.loads(out)
    assert data["closed_form"] == [7, -1] and data["sigma"] == -1 and data["fraction"] == [16, 7]


def test_smooth(capsys):
    code, out, _ = run(capsys, "smooth", "B2: 1 1 1", "0", "--json")
    data = json.loads(out)
    assert code == 0 and data["result"] == "B2: 1 1" and data["delta_sigma"] == 1
    code, _, err = run(capsys, "smooth", "B2: 1 1 1")
    assert code == 3 and "position" in err


def test_input_errors(capsys):
    code, _, err = run(capsys, "sig", "1 0 2")
    assert code == 3 and "'0'" in err and "position 1" in err
    code, _, err = run(capsys, "two-bridge", "C(1,x)")
    assert code == 3 and "'x'" in err


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "verify", "nonsense")[0] == 2
    assert run(capsys, "verify", "main", "--shards", "2", "--shard-index", "5")[0] == 2


def test_batch_stdin(capsys, monkeypatch):
    code, out, err = run(capsys, "sig", "-", stdin="1 1 1\n\nB2: 1 1\n1 0\n", monkeypatch=monkeypatch)
    assert code == 3
    assert out.splitlines() == ["sigma=-2 nullity=0 components=1 b1=2", "sigma=-1 nullity=0 components=2 b1=1"]
    assert "line 4" in err


def test_verify_main(capsys):
    code, out, _ = run(capsys, "verify", "main", "--max-crossings", "12", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["violations"] == []
    assert "(iv) DeltaCubed" in rep["details"]["found"]


def test_verify_sharded_equals_unsharded(capsys):
    _, full, _ = run(capsys, "verify", "inequality", "--max-crossings", "6", "--strands", "4", "--json")
    _, merged, _ = run(capsys, "verify", "inequality", "--max-crossings", "6", "--strands", "4", "--json",
                       "--shards", "4")
    assert full == merged


def test_json_is_byte_identical(capsys):
    args = ("verify", "smoothing", "--max-crossings", "5", "--seed", "3", "--json")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_geography_csv(capsys):
    code, out, _ = run(capsys, "geography", "--max-crossings", "10", "--csv")
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert rows[0] == ["c", "d", "realizable", "witness"]
    body = {(int(r[0]), int(r[1])): r[2] for r in rows[1:]}
    assert len(body) == sum(2 * c - 1 for c in range(1, 11))
    exceptions = {(1, 0), (2, 0), (3, 0), (3, 1), (3, -1), (5, 0)}
    assert all((v == "false") == (k in exceptions) for k, v in body.items())


@pytest.mark.parametrize("claim", ["t2c", "positivity", "two-bridge", "candidates", "geography"])
def test_other_claims_pass(capsys, claim):
    assert run(capsys, "verify", claim)[0] == 0


@pytest.mark.skipif(shutil.which("braidsig") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["braidsig", "sig", "1 1 1"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("sigma=-2")
