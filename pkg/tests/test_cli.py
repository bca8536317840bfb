import json
import subprocess
import sys

import pytest

from tropalg.cli import main
from tropalg.semiring import fixtures_dir


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_speck(capsys):
    code, out, _ = run(capsys, "speck", "--ring", "Z", "--bound", "10")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 5
    assert data["ring"] == "Z" and data["bound"] == 10


def test_fgid_table(capsys):
    code, out, _ = run(capsys, "fgid-table", "--ring", "Z/6", "--max", "6")
    data = json.loads(out)
    assert code == 0
    assert len(data["elements"]) == 4
    i = data["elements"].index("<2>")
    j = data["elements"].index("<3>")
    assert data["sum"][i][j] == "<1>"
    assert data["product"][i][j] == "<0>"


@pytest.mark.parametrize("check", ["retraction-cong", "retraction-ideal"])
@pytest.mark.parametrize("semiring", ["boolean", "chain4", "diamond"])
def test_verify_retraction(capsys, check, semiring):
    code, out, _ = run(capsys, "verify", check, "--semiring", semiring)
    assert code == 0 and json.loads(out)["pass"]


def test_verify_correspondence(capsys):
    code, out, _ = run(capsys, "verify", "correspondence", "--ring", "Z", "--trials", "20")
    assert code == 0
    assert json.loads(out)["details"]["trials"] == 20
    code, out, _ = run(capsys, "verify", "correspondence", "--ring", "Z", "--rank", "2",
                       "--trials", "10")
    assert code == 0


def test_same_seed_same_bytes(capsys):
    argv = ["verify", "correspondence", "--ring", "F5[x]", "--trials", "15", "--seed", "7"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_verify_stalks(capsys):
    code, out, _ = run(capsys, "verify", "stalks", "--site", "sierpinski")
    data = json.loads(out)
    assert code == 0
    assert data["details"]["stalks"]["b"]["phi_stalk"] == 3


def test_trop_pass_and_fail(capsys):
    code, out, _ = run(capsys, "trop", "--gluing", str(fixtures_dir() / "gluing" / "p1_f2.json"))
    assert code == 0
    assert json.loads(out)["scheme"]["glued_points"] == 7
    code, out, _ = run(capsys, "trop", "--gluing",
                       str(fixtures_dir() / "gluing" / "bad_cocycle_f2.json"))
    data = json.loads(out)
    assert code == 1 and not data["pass"]
    assert data["witnesses"][0]["triple"] == [0, 1, 2]


def test_compare_sheaves(capsys):
    code, out, _ = run(capsys, "compare-sheaves", "--ring", "Z", "--opens", "generic,X,6")
    assert code == 0 and json.loads(out)["details"]["kernel_nontrivial"]


def test_radical(capsys):
    code, out, _ = run(capsys, "radical", "--ring", "Z", "--ideal", "72")
    data = json.loads(out)
    assert code == 0 and data["details"]["ring_radical"] == "<6>"


def test_primary(capsys):
    code, out, _ = run(capsys, "primary", "--n", "12")
    data = json.loads(out)
    assert code == 0
    assert data["details"]["ring"] == {"primary": False, "prime": False, "radical": False}
    code, _, _ = run(capsys, "primary", "--upto", "60")
    assert code == 0


def test_localize(capsys):
    code, out, _ = run(capsys, "localize", "--ring", "Z", "--prime", "3", "--trials", "10")
    assert code == 0 and json.loads(out)["details"]["local_ring"] == "Z_<3>"


@pytest.mark.parametrize("argv", [
    ["speck", "--ring", "W", "--bound", "3"],
    ["radical", "--ring", "Z", "--ideal", ","],
    ["localize", "--ring", "Z", "--prime", "4"],
    ["verify", "retraction-cong", "--semiring", "nope"],
    ["primary", "--n", "0"],
])
def test_bad_input_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert "error" in json.loads(err)


def test_summary_on_stderr(capsys):
    code, out, err = run(capsys, "--summary", "speck", "--ring", "Z", "--bound", "5")
    assert err.strip() == "speck: pass"
    json.loads(out)


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "tropalg.cli", "speck", "--ring", "F2[x]",
                          "--bound", "2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["count"] == 4
