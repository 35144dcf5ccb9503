import csv
import io
import json

import numpy as np
import pytest
from conftest import RPS, grps

from gamedecomp.cli import load_game, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return p


@pytest.fixture
def rps_file(tmp_path):
    return write(tmp_path, "rps.json", {"kind": "symmetric", "A": RPS.tolist(), "labels": ["R", "P", "S"]})


@pytest.fixture
def mp_file(tmp_path):
    e = [[1, -1], [-1, 1]]
    return write(tmp_path, "mp.json", {"kind": "bimatrix", "A": e, "B": (-np.array(e)).tolist()})


def test_classify_rps(rps_file):
    code, out, _ = run("classify", rps_file)
    rep = json.loads(out)
    assert code == 0
    assert rep["is_zero_sum"] is True and rep["is_potential"] is False and rep["is_null_stable"] is True


def test_classify_bimatrix_and_nplayer(tmp_path, mp_file):
    code, out, _ = run("classify", mp_file)
    assert code == 0 and json.loads(out)["is_zero_sum"] is True
    e = np.ones((2, 2, 2))
    f = write(tmp_path, "np.json", {"kind": "nplayer", "payoffs": [e.tolist()] * 3})
    code, out, _ = run("classify", f)
    rep = json.loads(out)
    assert code == 0 and rep["is_potential"] and not rep["is_exact_zero_sum"]


def test_classify_multiple_files_keeps_order(rps_file, mp_file):
    code, out, _ = run("classify", mp_file, rps_file)
    reps = json.loads(out)
    assert code == 0 and [r["file"] for r in reps] == [str(mp_file), str(rps_file)]


def test_dims_example():
    code, out, _ = run("dims", "--l", 3)
    rep = json.loads(out)
    assert code == 0
    assert (rep["anti_potential"], rep["anti_zero_sum"], rep["kernel"]) == (1, 3, 5)
    rep = json.loads(run("dims", "--lr", 2, "--lc", 3)[1])
    assert rep["anti_potential"] == 2
    rep = json.loads(run("dims", "--n", 3, "--l", 2)[1])
    assert rep["anti_potential"] == 5 and rep["anti_zero_sum"] == 1


def test_zeeman_gen4_example(tmp_path):
    target = tmp_path / "z4.json"
    code, out, _ = run("zeeman", "gen4", "--alpha", -2.5, "--beta", -2.5, "--gamma", 2, "--eta", 1.9, "--out", target)
    rep = json.loads(out)["report"]
    assert code == 0 and rep["ess_strategy"] == 2 and rep["interior_type"] == "sink"
    game, _ = load_game(str(target))
    assert game.l == 4


def test_zeeman_gen3():
    code, out, _ = run("zeeman", "gen3", "--alpha", 1, "--beta", -2, "--eta", 1.9, "--theta", 0.4)
    doc = json.loads(out)
    assert code == 0 and doc["report"]["interior_type"] == "sink"
    assert np.allclose(np.array(doc["game"]["A"]).sum(axis=1), 0)
    assert run("zeeman", "gen4", "--alpha", 1, "--beta", 1, "--eta", 0)[0] == 1


def test_basis():
    code, out, _ = run("basis", "N", "--l", 3, "--i", 2, "--j", 3)
    assert code == 0 and json.loads(out) == RPS.tolist()
    assert json.loads(run("basis", "Ek", "--lr", 2, "--lc", 3, "--i", 1, "--j", 2)[1]) == [[0, -1, 1], [0, 1, -1]]
    assert json.loads(run("basis", "Eg", "--l", 2, "--j", 2)[1]) == [[0, 1], [0, 1]]
    code, _, err = run("basis", "K", "--l", 3, "--i", 2, "--j", 2)
    assert code == 1 and err.count("\n") == 1


def test_decompose_round_trip(tmp_path, rps_file, mp_file):
    a = np.random.default_rng(5).normal(size=(4, 4))
    f = write(tmp_path, "a.json", {"kind": "symmetric", "A": a.tolist()})
    code, out, _ = run("decompose", f)
    rep = json.loads(out)
    total = sum(np.array(c) for c in rep["components"].values())
    assert code == 0 and np.max(np.abs(total - a)) < 1e-10
    assert rep["reconstruction_residual"] < 1e-12
    rep = json.loads(run("decompose", mp_file)[1])
    assert np.allclose(rep["components"]["anti_potential"]["A"], [[1, -1], [-1, 1]])
    assert set(rep["orthogonality"]) and rep["norms"]["kernel"] < 1e-12


def test_decompose_nplayer(tmp_path):
    rng = np.random.default_rng(6)
    ts = rng.normal(size=(3, 2, 2, 2))
    f = write(tmp_path, "t.json", {"kind": "nplayer", "payoffs": ts.tolist()})
    code, out, _ = run("decompose", f)
    rep = json.loads(out)
    total = np.array(rep["components"]["potential"]) + np.array(rep["components"]["anti_potential"])
    assert code == 0 and np.max(np.abs(total - ts)) < 1e-10


def test_decompose_is_deterministic(rps_file):
    a, b = run("decompose", rps_file), run("decompose", rps_file)
    assert a == b
    assert run("decompose", "--pretty", rps_file)[1].startswith(f"# {rps_file} (symmetric)")


def test_simulate(tmp_path, rps_file, mp_file):
    code, out, _ = run("simulate", rps_file, "--x0", "0.5,0.3,0.2", "--t-end", 0.05, "--step", 0.01, "--track-H")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["t", "x1", "x2", "x3", "H"] and len(rows) == 7
    target = tmp_path / "traj.csv"
    code, out, _ = run("simulate", mp_file, "--x0", "0.7,0.3", "--y0", "0.4,0.6", "--t-end", 0.02, "--out", target)
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[0] == "t,x1,x2,y1,y2"


def test_simulate_errors(tmp_path, rps_file, mp_file):
    code, _, err = run("simulate", rps_file, "--x0", "0.5,0.5,0.5", "--t-end", 1)
    assert code == 1 and "--x0" in err
    code, _, err = run("simulate", rps_file, "--x0", "0.5,0.5", "--t-end", 1)
    assert code == 1 and "--x0" in err
    code, _, err = run("simulate", mp_file, "--x0", "0.5,0.5", "--t-end", 1)
    assert code == 1 and "--y0" in err
    big = write(tmp_path, "big.json", {"kind": "symmetric", "A": (1000 * grps(1, 2)).tolist()})
    code, _, err = run("simulate", big, "--x0", "0.1,0.1,0.8", "--t-end", 1, "--step", 0.5)
    assert code == 2 and err.startswith("gamedecomp: error:")


def test_field(rps_file, mp_file):
    code, out, _ = run("field", rps_file, "--x", "0.5,0.3,0.2")
    rep = json.loads(out)
    assert code == 0 and np.allclose(rep["field"], rep["conservative_part"])
    code, out, _ = run("field", mp_file, "--x", "0.5,0.5", "--y", "0.5,0.5")
    assert code == 0 and np.allclose(json.loads(out)["field_x"], 0)


def test_digraph(tmp_path, rps_file):
    code, out, _ = run("digraph", rps_file)
    assert code == 0 and '"R" -> "S";' in out
    target = tmp_path / "g.dot"
    assert run("digraph", rps_file, "--out", target)[0] == 0
    assert target.read_text() == out
    f = write(tmp_path, "eye.json", {"kind": "symmetric", "A": np.eye(3).tolist()})
    code, _, err = run("digraph", f)
    assert code == 1 and err


@pytest.mark.parametrize(
    "doc,needle",
    [
        ("{not json", "malformed JSON"),
        ({"kind": "symmetric"}, "'A'"),
        ({"kind": "weird", "A": [[1]]}, "'kind'"),
        ({"kind": "symmetric", "A": [[1, 2, 3]]}, "'A'"),
        ({"kind": "symmetric", "A": [[1, "x"], [0, 1]]}, "'A'"),
        ({"kind": "bimatrix", "A": [[1, 2]], "B": [[1]]}, "'B'"),
        ({"kind": "nplayer", "A": [[1]]}, "'payoffs'"),
        ({"kind": "symmetric", "A": [[1, 0], [0, 1]], "labels": [1, 2]}, "'labels'"),
    ],
)
def test_bad_files(tmp_path, doc, needle):
    f = write(tmp_path, "bad.json", doc)
    code, out, err = run("classify", f)
    assert code == 1 and out == ""
    assert needle in err and str(f) in err and err.count("\n") == 1


def test_usage_errors(tmp_path):
    assert run("frobnicate")[0] == 1
    assert run()[0] == 1
    assert run("classify", tmp_path / "missing.json")[0] == 1
    assert run("dims")[0] == 1
    assert run("dims", "--l", 1)[0] == 1


def test_console_entry_point_is_main():
    from importlib.metadata import entry_points

    eps = [e for e in entry_points(group="console_scripts") if e.name == "gamedecomp"]
    assert eps and eps[0].value == "gamedecomp.cli:main"
