import json
import subprocess
import sys

import pytest

from balanced_slp.cli import generated_21_corpus, main
from balanced_slp.coloring import is_21_coloring
from balanced_slp.generate import octahedron, random_balanced_sphere, stacked_sphere, tetrahedron
from balanced_slp.io import format_coloring, format_facets

from conftest import subdivided_family


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() and code == 0 else None), err


def test_validate(files, capsys):
    path = files("o.txt", format_facets(octahedron()[0]))
    code, out, _ = run(capsys, "validate", path)
    assert code == 0 and out["sphere"] and out["f"] == [6, 12, 8] and out["balanced"]


def test_validate_non_sphere(files, capsys):
    code, out, _ = run(capsys, "validate", files("d.txt", "1 2 3\n"))
    assert code == 0 and not out["sphere"] and out["reason"]


def test_validate_parse_error(files, capsys):
    code, _, err = run(capsys, "validate", files("bad.txt", "1 2 3\n1 2\n"))
    assert code == 1 and "line 2" in err


def test_missing_file(capsys):
    assert run(capsys, "validate", "/nonexistent/file")[0] == 1


def test_slp_octahedron(files, capsys):
    code, out, _ = run(capsys, "slp", files("o.txt", format_facets(octahedron()[0])))
    assert code == 0 and out["verdict"] == "holds" and out["mode"] == "colored"


def test_slp_refuses_p3(files, capsys):
    code, _, err = run(capsys, "slp", files("o.txt", format_facets(octahedron()[0])), "--p", "3")
    assert code == 1 and "w^3 = 0" in err


def test_slp_rejects_composite(files, capsys):
    assert run(capsys, "slp", files("o.txt", format_facets(octahedron()[0])), "--p", "91")[0] == 1


def test_slp_unbalanced(files, capsys):
    code, _, err = run(capsys, "slp", files("s.txt", format_facets(stacked_sphere(1))))
    assert code == 1 and "balanced" in err


def test_slp_subdivided_tetrahedron(files, capsys):
    c, pi = subdivided_family(4)
    path = files("e.txt", format_facets(c))
    col = files("e.coloring", format_coloring(pi))
    code, out, _ = run(capsys, "slp", path, "--mode", "21", "--coloring", col)
    assert code == 0 and out["verdict"] == "no-witness-found"
    assert out["certificate"] == {"W": [1, 2, 3, 4], "edges": 6, "bound": 1}


def test_slp_tetrahedron_semi_proper(files, capsys):
    path = files("t.txt", format_facets(tetrahedron()))
    col = files("t.coloring", "1 b\n2 b\n3 b\n4 r\n")
    code, out, _ = run(capsys, "slp", path, "--mode", "21", "--coloring", col)
    assert code == 0 and out["verdict"] == "holds" and out["mode"] == "semi-proper"


def test_laman(files, capsys):
    c, pi = subdivided_family(4)
    path = files("e.txt", format_facets(c))
    col = files("e.coloring", format_coloring(pi))
    code, out, _ = run(capsys, "laman", path, "--coloring", col)
    assert code == 0 and not out["sparse"] and len(out["violation"]) == 4
    assert out["brute_force_agrees"]


def test_laman_octahedron_derived(files, capsys):
    c, _ = octahedron()
    path = files("o.txt", format_facets(c))
    col = files("o.coloring", "1 b\n2 b\n3 b\n4 b\n5 r\n6 r\n")
    code, out, _ = run(capsys, "laman", path, "--coloring", col)
    assert code == 0 and out["sparse"]


def test_laman_rejects_non_21(files, capsys):
    path = files("t.txt", format_facets(tetrahedron()))
    col = files("t.coloring", "1 b\n2 b\n3 b\n4 r\n")
    assert run(capsys, "laman", path, "--coloring", col)[0] == 1


def test_laman_graph(files, capsys):
    g = files("g.txt", "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
    code, out, _ = run(capsys, "laman", "--graph", g)
    assert code == 0 and not out["sparse"]
    assert run(capsys, "laman")[0] == 1


def test_reduce(files, capsys):
    code, out, _ = run(capsys, "reduce", files("o.txt", format_facets(octahedron()[0])))
    assert code == 0 and out["steps"] == []
    c, _ = random_balanced_sphere(20, 3)
    code, out, _ = run(capsys, "reduce", files("r.txt", format_facets(c)))
    assert code == 0 and out["steps"]
    splits = sum(s["kind"] == "split" for s in out["steps"])
    assert len(out["terminals"]) == splits + 1
    code, _, _ = run(capsys, "reduce", files("s.txt", format_facets(stacked_sphere(2))))
    assert code == 1


def test_check_thm2_file(files, capsys):
    c, pi = subdivided_family(5)
    path = files("e.txt", format_facets(c))
    col = files("e.coloring", format_coloring(pi))
    code, out, _ = run(capsys, "check-thm2", path, "--coloring", col)
    assert code == 0 and out["all_consistent"]
    assert out["results"][0]["slp_verdict"] == "no-witness-found"


def test_check_thm2_gen(capsys):
    code, out, _ = run(capsys, "check-thm2", "--gen", "6", "--max-vertices", "12")
    assert code == 0 and out["all_consistent"] and len(out["results"]) == 6
    assert all(r["laman_brute_force_agrees"] for r in out["results"])


def test_corpus_exact_size():
    items = list(generated_21_corpus(9, 14, 2))
    assert len(items) == 9
    assert all(len(c.vertices) <= 14 and is_21_coloring(c, pi) for _, c, pi in items)


def test_generate(tmp_path, capsys):
    prefix = str(tmp_path / "g")
    assert main(["generate", "random_balanced", "--n", "12", "--seed", "1", "--out", prefix]) == 0
    capsys.readouterr()
    code, out, _ = run(capsys, "validate", prefix + ".txt")
    assert out["sphere"] and out["balanced"]
    code, out, _ = run(capsys, "slp", prefix + ".txt", "--coloring", prefix + ".coloring")
    assert out["verdict"] == "holds"


def test_out_flag(files, tmp_path, capsys):
    target = tmp_path / "report.json"
    path = files("o.txt", format_facets(octahedron()[0]))
    assert main(["validate", path, "--out", str(target)]) == 0
    assert json.loads(target.read_text())["sphere"]


def test_byte_identical_output(files):
    path = files("r.txt", format_facets(random_balanced_sphere(14, 9)[0]))
    cmd = [sys.executable, "-m", "balanced_slp", "slp", path, "--seed", "42", "--trials", "3"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b"holds" in a
