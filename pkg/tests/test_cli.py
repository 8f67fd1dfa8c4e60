from __future__ import annotations

import json

import pytest

from pachner.cli import main
from pachner.io import config_to_dict, trajectory_to_dict
from pachner.delaunay import Configuration
from pachner.scenes import hexagon_loop, through_sphere_once


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def test_delaunay(tmp_path, capsys):
    cfg = write(tmp_path, "c.json", {"dim": 2, "points": [[0, 0], [4, 0], [0, 4], ["1/2", "1/3"]]})
    code, out, _ = run(capsys, "delaunay", cfg)
    assert code == 0
    data = json.loads(out)
    assert data["verified"] is True and len(data["simplices"]) == 3


def test_delaunay_degenerate_and_bad(tmp_path, capsys):
    sq = write(tmp_path, "sq.json", {"points": [[0, 0], [1, 0], [1, 1], [0, 1]]})
    code, _, err = run(capsys, "delaunay", sq)
    assert code == 2 and "labels=[1, 2, 3, 4]" in err
    bad = write(tmp_path, "bad.json", {"dim": 3, "points": [[0, 0], [1, 0], [0, 1]]})
    assert run(capsys, "delaunay", bad)[0] == 4
    assert run(capsys, "delaunay", str(tmp_path / "missing.json"))[0] == 4


def test_trace(tmp_path, capsys):
    tr = write(tmp_path, "t.json", trajectory_to_dict(hexagon_loop()))
    code, out, _ = run(capsys, "trace", tr, "--check", "--events")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines[0].split()) == 6
    assert sum(1 for x in lines if x.startswith("# ")) == 6
    assert "psi=0" in lines and "ab=0" in lines


def test_trace_open_path(tmp_path, capsys):
    tr = write(tmp_path, "t.json", trajectory_to_dict(through_sphere_once()))
    code, out, _ = run(capsys, "trace", tr, "--check")
    assert code == 0
    assert out.splitlines()[0] == "a[1,2,3|4,5]"
    assert "psi=0" not in out


def test_output_flag(tmp_path, capsys):
    dest = tmp_path / "out.txt"
    code, out, _ = run(capsys, "-o", str(dest), "gale", "diagrams", "--order", "7")
    assert code == 0 and out == ""
    data = json.loads(dest.read_text())
    assert data["count"] == data["formula"] == 5


def test_gale(tmp_path, capsys):
    pent = write(tmp_path, "p.json", config_to_dict(Configuration(((0, 2), (1, 0), (3, 1), (2, 4), (-1, 3)))))
    code, out, _ = run(capsys, "gale", "transform", pent)
    assert code == 0
    data = json.loads(out)
    assert len(data["B"]) == 2 and len(data["B"][0]) == 5
    code, out, _ = run(capsys, "gale", "relation", "--order", "5")
    assert code == 0
    # a_{45,23} a_{15,34} a_{12,45} a_{23,15} a_{34,12} with min(P) < min(Q)
    assert out.strip() == "a[2,3|4,5]^-1 a[1,5|3,4] a[1,2|4,5] a[1,5|2,3]^-1 a[1,2|3,4]^-1"
    code, out, _ = run(capsys, "gale", "relation", "--order", "6", "--index", "1", "--labels", "6,5,4,3,2,1")
    assert code == 0 and out.count("a[") == 6


def test_group(tmp_path, capsys):
    code, out, _ = run(capsys, "group", "abrank", "-n", "6", "-k", "5", "--oriented")
    assert code == 0 and out.strip() == "generators=120 relators=1440 rank=90"
    w = "a[3,5|1,6,4] a[4,6|2,5,3]^-1 a[4,6|1,3,5] a[3,5|2,4,6]^-1"
    code, out, _ = run(capsys, "group", "check-word", "-n", "6", "-k", "5", "--oriented", w)
    assert code == 0 and out.strip() == "nontrivial (rank 90->91)"
    f = tmp_path / "w.txt"
    f.write_text(w)
    assert run(capsys, "group", "check-word", "-n", "6", "-k", "5", "--oriented", "@" + str(f))[1] == out
    code, out, _ = run(capsys, "group", "presentation", "-n", "5", "-k", "4", "--far", "--involutive")
    assert code == 0
    assert "# generators 15" in out and "# gon relators 120" in out and "# involutive relators" in out
    assert run(capsys, "group", "abrank", "-n", "4", "-k", "6")[0] == 4
    assert run(capsys, "group", "check-word", "-n", "6", "-k", "5", "a[1,2|3")[0] == 4


def test_flipgraph(tmp_path, capsys):
    code, out, _ = run(capsys, "flipgraph", "--polygon", "6", "--verify")
    assert code == 0
    data = json.loads(out)
    assert len(data["vertices"]) == 14 and data["verified"] is True
    code, out, _ = run(capsys, "flipgraph", "--polygon", "5", "--dot")
    assert code == 0 and out.startswith("graph flips {")
    inner = write(tmp_path, "i.json", {"points": [[0, 0], [4, 0], [0, 4], [1, 1]]})
    assert run(capsys, "flipgraph", inner)[0] == 4
    assert run(capsys, "flipgraph")[0] == 4


def test_argparse_errors(capsys):
    with pytest.raises(SystemExit):
        main(["nonsense"])
