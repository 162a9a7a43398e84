import io
import json
import subprocess
import sys

import pytest

from cubecyl.cli import fmt_int, main
from cubecyl.cylinders import cylinder
from cubecyl.errors import NotMedian
from cubecyl.generators import gen_grid, gen_staircase, gen_tree
from cubecyl.io import (ComplexFileError, canonicalize, dumps_complex, load_complex,
                        loads_complex, save_complex, to_dot)


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_round_trip_is_byte_identical(tmp_path):
    for C in (gen_grid(2, 2), gen_tree(12, 3), gen_staircase(3)):
        p = tmp_path / "c.json"
        save_complex(C, p)
        text = p.read_text()
        D = load_complex(p)
        assert D.edges == C.edges and D.n == C.n and D.name == C.name
        assert [list(a) for a in D.automorphisms] == [list(a) for a in C.automorphisms]
        assert dumps_complex(D) == text
        assert canonicalize(text) == text


def test_canonical_form_sorts_edges():
    messy = '{"edges": [[2, 1], [0, 1]], "vertices": 3}'
    text = canonicalize(messy)
    assert json.loads(text) == {"vertices": 3, "edges": [[0, 1], [1, 2]]}
    assert canonicalize(text) == text


@pytest.mark.parametrize("text,msg", [
    ("{", "invalid JSON"),
    ("[]", "object"),
    ('{"vertices": 0, "edges": []}', "positive"),
    ('{"vertices": 2, "edges": [[0]]}', "2-element"),
    ('{"vertices": 2, "edges": [[0, 1]], "automorphisms": [[0]]}', "automorphisms"),
    ('{"vertices": 2, "edges": [[0, 1]], "colour": 1}', "unknown"),
    ('{"vertices": 2, "edges": [[0, 1]], "name": 3}', "name"),
])
def test_parse_errors(text, msg):
    with pytest.raises(ComplexFileError, match=msg):
        loads_complex(text)


def test_invalid_complex_from_text():
    with pytest.raises(NotMedian):
        loads_complex('{"vertices": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[0,4]]}')


def test_gen_then_validate(tmp_path):
    p = tmp_path / "t.json"
    assert run("gen", "tree", 5, "--seed", 1, "--out", p)[0] == 0
    code, out, err = run("validate", p)
    assert code == 0 and err == ""
    assert out.strip() == "ok vertices=5 edges=4 hyperplanes=4"


def test_gen_to_stdout_matches_file(tmp_path):
    p = tmp_path / "s.json"
    run("gen", "staircase", 3, "--out", p)
    assert run("gen", "staircase", 3)[1] == p.read_text()
    code, _, err = run("gen", "grid", 3)
    assert code == 2 and err.startswith("error: BadArguments:")
    code, _, err = run("gen", "hypercube", 40)
    assert code == 2 and err.startswith("error: ValueError:")


def test_stability_command_on_tree(tmp_path):
    p, rep = tmp_path / "t.json", tmp_path / "rep.json"
    save_complex(gen_tree(30, 1), p)
    code, out, _ = run("stability", p, "--mode", "all", "--out", rep)
    assert code == 0
    assert "max_empirical_k=0" in out and "failures=0" in out
    d = json.loads(rep.read_text())
    assert d["triples_checked"] == 27000 and d["max_empirical_k"] == 0


def test_stability_command_reports_failures(tmp_path):
    p = tmp_path / "g.json"
    save_complex(gen_grid(2, 2), p)
    code, out, _ = run("stability", p, "--R", 0)
    assert code == 1 and "failures=0" not in out


def test_sampled_report_is_stable(tmp_path):
    p = tmp_path / "s.json"
    save_complex(gen_staircase(6), p)
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("stability", p, "--mode", "sample", "--count", 10000, "--seed", 7, "--out", a)[0] == 0
    assert run("stability", p, "--mode", "sample", "--count", 10000, "--seed", 7,
               "--workers", 3, "--out", b)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    d = json.loads(a.read_text())
    assert d["seed"] == 7 and d["count"] == 10000 and d["failures"] == []


def test_info_prints_grid_size(tmp_path):
    p = tmp_path / "g.json"
    save_complex(gen_grid(2, 2), p)
    code, out, _ = run("info", p)
    rows = dict(line.split(": ", 1) for line in out.splitlines())
    assert code == 0
    assert rows["grid_D"] == "2" and rows["dim_d"] == "2" and rows["R"] == "20"
    assert rows["L"] == "6" and rows["K_bound"] == "2^81"


def test_cylinder_command(tmp_path):
    p = tmp_path / "s.json"
    S = gen_staircase(4)
    save_complex(S, p)
    x, y = S.index((0, 0)), S.index((1, 0))
    code, out, _ = run("cylinder", p, x, y, "--D", 0)
    rows = dict(line.split(": ", 1) if ": " in line else (line.rstrip(":"), "")
                for line in out.splitlines())
    assert code == 0
    assert rows["D"] == "0"
    assert rows["interval"] == f"{x} {y}"
    assert rows["cylinder"].split() == [str(v) for v in cylinder(S, x, y, 0).members()]


@pytest.mark.parametrize("argv,kind", [
    (["validate", "/nonexistent/file.json"], "FileNotFound"),
    (["info", "BAD"], "ParseError"),
    (["validate", "C5"], "NotMedian"),
    (["cylinder", "OK", 0, 99], "BadVertex"),
])
def test_error_lines(tmp_path, argv, kind):
    (tmp_path / "BAD").write_text("{not json")
    (tmp_path / "C5").write_text('{"vertices": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[0,4]]}')
    save_complex(gen_grid(1, 1), tmp_path / "OK")
    argv = [str(tmp_path / a) if a in ("BAD", "C5", "OK") else a for a in argv]
    code, out, err = run(*argv)
    assert code == 2 and out == ""
    assert err.count("\n") == 1 and err.startswith(f"error: {kind}: ")


def test_not_median_line_names_the_triple(tmp_path):
    p = tmp_path / "c5.json"
    p.write_text('{"vertices": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[0,4]]}')
    _, _, err = run("validate", p)
    assert "triple=" in err and "medians=" in err


def test_bad_arguments_exit_2():
    assert run("stability")[0] == 2
    assert run("nope")[0] == 2


def test_dot_export(tmp_path):
    G = gen_grid(2, 2)
    p = tmp_path / "g.json"
    save_complex(G, p)
    code, out, _ = run("export-dot", p, "--highlight", 0, 8)
    assert code == 0
    assert out.startswith('graph "grid(2,2)" {') and out.rstrip().endswith("}")
    assert out.count(" -- ") == len(G.edges)
    assert out.count("shape=box") == 2
    assert out.count("peripheries=2") == G.n
    colours = {line.split('color="')[1][:7] for line in out.splitlines() if " -- " in line}
    assert len(colours) == G.num_hyperplanes
    assert to_dot(G) == to_dot(G)
    plain = tmp_path / "g.dot"
    assert run("export-dot", p, "--out", plain)[0] == 0
    assert "filled" not in plain.read_text()


def test_fmt_int():
    assert fmt_int(None) == "not expanded"
    assert fmt_int(12345) == "12345"
    assert fmt_int(10 ** 3000).startswith("<integer with about")


def test_console_entry_point(tmp_path):
    p = tmp_path / "t.json"
    save_complex(gen_tree(4, 0), p)
    res = subprocess.run([sys.executable, "-m", "cubecyl.cli", "validate", str(p)],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("ok vertices=4")
