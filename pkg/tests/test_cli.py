import json
import subprocess
import sys

import pytest

from conftest import FIXTURES
from dbrings.cli import main
from dbrings.maps import CyclicMap, read_map
from dbrings.verifier import verify
from oracles import cyclic_windows


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_seq(capsys):
    code, out, _ = run(capsys, "seq", "--k", "2", "--n", "1")
    assert (code, out) == (0, "01\n")
    code, out, _ = run(capsys, "seq", "--k", "2", "--n", "3")
    seq = out.strip()
    assert len(seq) == 8
    assert len({(seq + seq)[i : i + 3] for i in range(8)}) == 8
    code, out, _ = run(capsys, "seq", "--k", "3", "--n", "2")
    assert len(out.strip()) == 9


@pytest.mark.parametrize("argv, shape", [(["--m", "3", "--n", "3", "--k", "2"], (3, 168)), (["--m", "2", "--n", "2", "--k", "2", "--trim", "1"], (2, 5))])
def test_ring(capsys, argv, shape):
    code, out, err = run(capsys, "ring", *argv, "--verify")
    assert code == 0
    cmap = CyclicMap.from_dbmap(out)
    assert cmap.shape == shape
    assert "sub-perfect" in err or "de Bruijn ring" in err


def test_ring_bad_alphabet(capsys):
    code, _, err = run(capsys, "ring", "--m", "2", "--n", "2", "--k", "1")
    assert code == 2
    assert "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["ring", "--m", "2"])
    assert info.value.code == 2
    capsys.readouterr()


@pytest.mark.parametrize(
    "argv, shape",
    [
        (["--m", "3", "--n", "2", "--k1", "2", "--k2", "2"], (84, 38)),
        (["--m", "3", "--n", "2", "--k1", "2", "--k2", "2", "--no-trim"], (84, 20)),
        (["--m", "3", "--n", "3", "--k1", "2", "--k2", "2"], (501, 501)),
    ],
)
def test_map(capsys, tmp_path, argv, shape):
    out_file = tmp_path / "m.dbmap"
    code, _, _ = run(capsys, "map", *argv, "-o", str(out_file), "--sidecar", str(tmp_path / "m.json"))
    assert code == 0
    cmap = read_map(out_file)
    assert cmap.shape == shape
    side = json.loads((tmp_path / "m.json").read_text())
    assert (side["M"], side["N"]) == shape


def test_map_infeasible(capsys):
    code, _, err = run(capsys, "map", "--m", "5", "--n", "2", "--k1", "2", "--k2", "3")
    assert code == 2
    assert "m''" in err


def test_ring_verify_roundtrip(capsys, tmp_path):
    path = tmp_path / "r.dbmap"
    assert run(capsys, "ring", "--m", "3", "--n", "2", "--k", "2", "-o", str(path))[0] == 0
    code, out, _ = run(capsys, "verify", str(path), "--json")
    assert code == 0
    rep = json.loads(out)
    assert (rep["M"], rep["N"], rep["m"], rep["n"], rep["k"]) == (3, 20, 3, 2, 2)
    assert rep["is_de_bruijn_ring"] and rep["distinct_windows"] == 60


def test_verify_fixture_and_all_zero(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", str(FIXTURES / "map_84_38_3_2_k4.dbmap"))
    assert code == 0
    assert "3192 distinct" in out
    zero = tmp_path / "z.dbmap"
    zero.write_text("DBMAP M=2 N=2 m=2 n=2 k=2\n00\n00\n")
    code, out, _ = run(capsys, "verify", str(zero), "--json")
    assert code == 1
    assert json.loads(out)["distinct_windows"] == 1


def test_verify_budget(capsys, monkeypatch):
    code, _, err = run(capsys, "verify", str(FIXTURES / "ring_3_2_k2.dbmap"), "--budget", "5")
    assert code == 3
    monkeypatch.setenv("DBMAP_BUDGET", "5")
    assert run(capsys, "verify", str(FIXTURES / "ring_3_2_k2.dbmap"))[0] == 3
    assert run(capsys, "ring", "--m", "3", "--n", "3", "--k", "2")[0] == 3


def test_verify_missing_file(capsys, tmp_path):
    assert run(capsys, "verify", str(tmp_path / "nope.dbmap"))[0] == 2


@pytest.fixture
def map10(capsys, tmp_path):
    m, s = tmp_path / "m.dbmap", tmp_path / "m.json"
    assert run(capsys, "map", "--m", "2", "--n", "2", "--k1", "2", "--k2", "2", "-o", str(m), "--sidecar", str(s))[0] == 0
    return m, s


def test_decode_origin(capsys, tmp_path, map10):
    m, s = map10
    cmap = read_map(m)
    w = tmp_path / "w.txt"
    w.write_text("\n".join("".join(str(x) for x in row) for row in cmap.window(0, 0)) + "\n")
    code, out, _ = run(capsys, "decode", "--sidecar", str(s), "--map", str(m), "--window", str(w))
    assert (code, out) == (0, "0 0\n")


def test_decode_window_as_dbmap(capsys, tmp_path, map10):
    m, s = map10
    cmap = read_map(m)
    w = tmp_path / "w.dbmap"
    w.write_text(CyclicMap([list(r) for r in cmap.window(7, 3)], k=4, m=2, n=2).to_dbmap())
    code, out, _ = run(capsys, "decode", "--sidecar", str(s), "--window", str(w))
    assert (code, out) == (0, "7 3\n")


def test_decode_all(capsys, map10):
    m, s = map10
    code, out, _ = run(capsys, "decode", "--sidecar", str(s), "--map", str(m), "--all")
    assert code == 0
    assert out.splitlines() == [f"{r} {c}" for r in range(10) for c in range(10)]


def test_decode_all_windows_match_positions(capsys, map10):
    m, s = map10
    rows = read_map(m).cells.tolist()
    code, out, _ = run(capsys, "decode", "--sidecar", str(s), "--all")
    positions = [tuple(int(x) for x in line.split()) for line in out.splitlines()]
    assert positions == [pos for pos, _ in cyclic_windows(rows, 2, 2)]


def test_decode_uncovered(capsys, tmp_path, map10):
    _, s = map10
    w = tmp_path / "w.txt"
    w.write_text("00\n00\n")
    code, _, err = run(capsys, "decode", "--sidecar", str(s), "--window", str(w))
    assert code == 1
    assert "NotInMap" in err


def test_decode_mismatched_map(capsys, tmp_path, map10):
    _, s = map10
    other = tmp_path / "o.dbmap"
    other.write_text("DBMAP M=2 N=2 m=2 n=2 k=4\n01\n23\n")
    assert run(capsys, "decode", "--sidecar", str(s), "--map", str(other), "--all")[0] == 1


def test_decode_bad_window(capsys, tmp_path, map10):
    _, s = map10
    w = tmp_path / "w.txt"
    w.write_text("000\n")
    assert run(capsys, "decode", "--sidecar", str(s), "--window", str(w))[0] == 2


def test_stats_csv(capsys):
    code, out, _ = run(capsys, "stats", "--table1", "--m", "2", "--n", "3", "--k", "2", "--csv")
    assert code == 0
    assert out.splitlines() == ["m,n,k,numerator,denominator", "2,3,2,56,64"]
    code, out, _ = run(capsys, "stats", "--table2", "--k", "2", "--n", "3", "--csv")
    assert out.splitlines()[1] == "2,3,501,512,95.749282836914063"


def test_stats_check_printed(capsys):
    code, _, err = run(capsys, "stats", "--table1", "--table2", "--float64", "--check-printed")
    assert code == 0
    assert err.count("DIFF") == 1
    assert "(5,6,4)" in err


def test_stats_needs_a_table(capsys):
    assert run(capsys, "stats")[0] == 2
    assert run(capsys, "stats", "--table1", "--m", "7-2")[0] == 2


def test_deterministic(capsys):
    a = run(capsys, "map", "--m", "3", "--n", "2", "--k1", "2", "--k2", "2")[1]
    b = run(capsys, "map", "--m", "3", "--n", "2", "--k1", "2", "--k2", "2")[1]
    assert a == b
    assert verify(CyclicMap.from_dbmap(a)).distinct_windows == 3192


def test_module_entry_point(capsys):
    expected = run(capsys, "seq", "--k", "2", "--n", "2")[1]
    proc = subprocess.run(
        [sys.executable, "-m", "dbrings", "seq", "--k", "2", "--n", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == expected
