import io
import os

import pytest

from radiotree.cli import main
from radiotree.compositions import make_kdoublestar
from radiotree.labeling import parse_labeling, verify_radio
from radiotree.tree_core import format_tree, parse_tree, path_tree, star_tree


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.fixture
def files(write):
    return {
        "p3": write("p3.txt", format_tree(path_tree(3))),
        "p4": write("p4.txt", format_tree(path_tree(4))),
        "p5": write("p5.txt", format_tree(path_tree(5))),
        "k13": write("k13.txt", format_tree(star_tree(3))),
        "k14": write("k14.txt", format_tree(star_tree(4))),
        "big": write("big.txt", format_tree(path_tree(30))),
        "bad": write("bad.txt", "4\n0 1\n1 2\n2 0\n"),
    }


def test_analyze_p4(files):
    code, out = run("analyze", files["p4"])
    assert code == 0
    assert "bound:     5" in out
    assert "centers:   {1, 2}" in out


def test_analyze_star(files):
    code, out = run("analyze", files["k14"])
    assert "centers:   {0}" in out and "epsilon:   1" in out


def test_analyze_record(files):
    code, out = run("analyze", files["p4"], "--format", "record")
    assert out == "cmd=analyze p=4 d=3 centers=1,2 epsilon=0 L(T)=2 w(T)=4 liu_bound=5 bound=5\n"


def test_analyze_dot(files):
    code, out = run("analyze", files["p3"], "--format", "dot")
    assert code == 0 and out.startswith("graph T {")


def test_analyze_bad_input(files, capsys):
    assert run("analyze", files["bad"])[0] == 2
    assert "cycle" in capsys.readouterr().err
    assert run("analyze", files["bad"] + ".missing")[0] == 2


def test_label_p4(files, tmp_path):
    code, out = run("label", files["p4"])
    assert code == 0
    assert "# optimal span 5" in out
    assert parse_labeling(out, 4).span == 5
    dest = str(tmp_path / "lab.txt")
    code, out = run("label", files["p4"], "--out", dest)
    assert out == "optimal span 5\n"
    assert run("verify", files["p4"], dest) == (0, "PASS span 5\n")


def test_label_bound_not_attained(files):
    code, out = run("label", files["p5"])
    assert code == 1
    assert "not attained" in out


def test_label_budget(files):
    code, _ = run("label", files["big"], "--budget", "5")
    assert code == 3


def test_label_output_always_verifies(write, tmp_path):
    from radiotree.corpus import random_trees
    for i, t in enumerate(random_trees(40, 4, 12, seed=2)):
        tf = write(f"t{i}.txt", format_tree(t))
        lf = str(tmp_path / f"l{i}.txt")
        code, _ = run("label", tf, "--out", lf)
        if code == 0:
            assert run("verify", tf, lf)[0] == 0


def test_verify(files, write):
    good = write("good.txt", "0 2\n1 0\n2 3\n")
    bad = write("bad_lab.txt", "0 0\n1 1\n2 2\n")
    long = write("long.txt", "0 0\n1 2\n2 3\n3 5\n")
    assert run("verify", files["p3"], good) == (0, "PASS span 3\n")
    code, out = run("verify", files["p3"], bad)
    assert code == 1 and out.startswith("FAIL pair (0,1)")
    assert run("verify", files["p3"], long)[0] == 2


def test_exact(files, tmp_path):
    code, out = run("exact", files["p4"])
    assert code == 0 and out.startswith("rn:    5")
    assert run("exact", files["k13"])[1].startswith("rn:    4")
    dest = str(tmp_path / "w.txt")
    run("exact", files["k13"], "--out", dest)
    lab = parse_labeling(open(dest).read(), 4)
    assert lab.span == 4 and verify_radio(star_tree(3), lab)


def test_exact_limits(files):
    assert run("exact", files["big"])[0] == 2
    assert run("exact", files["p5"], "--budget", "3")[0] == 3
    assert run("exact", files["p4"], "--cap", "0")[0] == 2


def test_compose_wk(files, tmp_path):
    code, out = run("compose", "wk", files["p3"], files["p3"])
    assert code == 0
    assert parse_tree(out) == star_tree(4)
    assert "# prov 0 hub" in out


def test_compose_dk_sidecar(files, tmp_path):
    dest = str(tmp_path / "dk.txt")
    code, _ = run("compose", "dk", files["p3"], "--k", "1", "--out", dest)
    assert code == 0
    t = parse_tree(open(dest).read())
    assert t.p == 8
    prov = open(dest + ".prov").read().splitlines()
    assert prov[:2] == ["0 hub", "1 hub"]
    assert len(prov) == 8


def test_compose_refuses_two_center_base(files):
    assert run("compose", "sk", files["p4"], "--k", "2")[0] == 2


def test_compose_round_trip_order(files, tmp_path):
    cases = [("wk", [files["p3"]] * 3, None, 7), ("sk", [files["k13"]], 2, 9),
             ("dk", [files["p3"]], 2, 14)]
    for fam, bases, k, p in cases:
        dest = str(tmp_path / f"{fam}.txt")
        extra = ["--k", str(k)] if k else []
        assert run("compose", fam, *bases, *extra, "--out", dest)[0] == 0
        assert f"p:         {p}\n" in run("analyze", dest)[1]


def test_theorem_check_agree(files):
    code, out = run("theorem-check", "wk", files["p3"], files["p3"])
    assert code == 0
    assert "predicted:           5" in out
    assert "agree:               true" in out


def test_theorem_check_sk_k3(files):
    code, out = run("theorem-check", "sk", files["p3"], "--k", "3", "--format", "record")
    assert code == 0
    assert "predicted=16 bound=16 search=FOUND search_span=16 exact=16" in out


def test_theorem_check_negative_findings(files):
    code, out = run("theorem-check", "sk", files["p3"], "--k", "2")
    assert code == 1 and "agree:               false" in out
    code, out = run("theorem-check", "wk", files["p5"], files["p5"])
    assert code == 1 and "do not apply" in out


def test_export_dot(files, write):
    lab = write("lab.txt", "0 2\n1 0\n2 3\n")
    code, out = run("export-dot", files["p3"], "--labels", lab)
    assert code == 0 and '0 [label="0:2"]' in out


def test_corpus(tmp_path):
    dest = str(tmp_path / "c")
    assert run("corpus", "--count", "5", "--seed", "3", "--out", dest)[0] == 0
    names = sorted(os.listdir(dest))
    assert len(names) == 5
    again = str(tmp_path / "d")
    run("corpus", "--count", "5", "--seed", "3", "--out", again)
    for n in names:
        assert open(os.path.join(dest, n)).read() == open(os.path.join(again, n)).read()


def test_outputs_are_byte_identical(files):
    for argv in (("analyze", files["p4"]), ("label", files["k14"]), ("exact", files["p4"]),
                 ("theorem-check", "dk", files["p3"], "--k", "2")):
        assert run(*argv) == run(*argv)


def test_nonpositive_budget(files):
    assert run("label", files["p4"], "--budget", "0")[0] == 2


def test_double_star_file(write):
    f = write("ds.txt", format_tree(make_kdoublestar(2)))
    code, out = run("analyze", f)
    assert "d:         3" in out
