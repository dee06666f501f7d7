import io
import json
import shutil
import subprocess

import pytest

from semimaps import catalog, read_map
from semimaps.cli import main
from semimaps.verify import TORUS_TYPES, KLEIN_TYPES


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("path,expected", [
    ("catalog/T5.map", "[3^1,4^1,6^1,4^1]"),
    ("catalog/K10.map", "[4^4]"),
    ("T2", "[3^2,4^1,3^1,4^1]"),
])
def test_classify_catalog(path, expected):
    assert run("classify", path) == (0, expected + "\n")


def test_classify_file(tmp_path):
    p = tmp_path / "tetra.map"
    p.write_text("f 1 2 3\nf 1 2 4\nf 1 3 4\nf 2 3 4\n")
    assert run("classify", str(p)) == (0, "[3^3]\n")


def test_classify_mixed(tmp_path):
    p = tmp_path / "pyr.map"
    p.write_text("f 1 2 3 4\nf 0 1 2\nf 0 2 3\nf 0 3 4\nf 0 4 1\n")
    code, out = run("classify", str(p))
    assert code == 0 and out.startswith("not semi-equivelar: ")


def test_invalid_map_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.map"
    p.write_text("f 0 1 2\nf 0 1 3\n")
    code, out = run("classify", str(p))
    assert code == 2 and out == ""
    assert "every edge lies in exactly two faces" in capsys.readouterr().err


def test_missing_file_exit_2(capsys):
    assert run("classify", "/nonexistent/x.map")[0] == 2
    assert "no such file" in capsys.readouterr().err


def test_orbits_transitive():
    code, out = run("orbits", "catalog/T1.map")
    assert code == 0
    assert "vertex-orbits: 1 (transitive)" in out.splitlines()


def test_orbits_not_transitive():
    code, out = run("orbits", "catalog/K1.map")
    line = next(l for l in out.splitlines() if l.startswith("vertex-orbits"))
    assert int(line.split()[1]) >= 2 and "not transitive" in line


def test_orbits_t6_bound():
    code, out = run("orbits", "catalog/T6.map")
    line = next(l for l in out.splitlines() if l.startswith("vertex-orbits"))
    assert int(line.split()[1]) <= 3


@pytest.mark.parametrize("surface,expected", [("torus", TORUS_TYPES), ("klein-bottle", KLEIN_TYPES)])
def test_enumerate(surface, expected):
    code, out = run("enumerate", "--surface", surface)
    assert code == 0 and set(out.split()) == set(expected) and len(out.split()) == len(expected)


def test_enumerate_bad_surface():
    assert run("enumerate", "--surface", "sphere")[0] == 2


def test_generate_round_trip(tmp_path):
    p = tmp_path / "m.map"
    code, _ = run("generate", "--tiling", "[3^6]", "--basis", "3", "0", "0", "3", "--out", str(p))
    assert code == 0
    assert run("classify", str(p)) == (0, "[3^6]\n")
    text = p.read_text()
    assert text.startswith("# tiling [3^6]\n# basis 3 0 0 3\n")


def test_generate_errors(tmp_path, capsys):
    out = str(tmp_path / "x.map")
    assert run("generate", "--tiling", "[5^4]", "--basis", "3", "0", "0", "3", "--out", out)[0] == 2
    assert run("generate", "--tiling", "[3^6]", "--basis", "2", "0", "0", "2", "--out", out)[0] == 2
    assert "invariant" in capsys.readouterr().err
    assert run("generate", "--tiling", "[3^6]", "--basis", "1", "2", "2", "4", "--out", out)[0] == 2


def test_dual(tmp_path):
    p = tmp_path / "d.map"
    assert run("dual", "K8", str(p))[0] == 0
    assert run("classify", str(p)) == (0, "[6^3]\n")
    assert read_map(p).f0 == catalog.get("K8").map.f2


def test_aux_graph():
    code, out = run("aux-graph", "--map", "T7", "--selector", "quad_diagonals+shared_edges(8)")
    assert code == 0
    assert "components: C8 C8 C8 C24" in out
    assert "separating vertices:" in out


def test_aux_graph_bad_selector():
    assert run("aux-graph", "--map", "T1", "--selector", "long_diagonals")[0] == 2
    assert run("aux-graph", "--map", "T1", "--selector", "long_diagonals(12)")[0] == 2


def test_deterministic():
    assert run("orbits", "T3") == run("orbits", "T3")
    assert run("aux-graph", "--map", "K6", "--selector", "long_diagonals(6)") == \
        run("aux-graph", "--map", "K6", "--selector", "long_diagonals(6)")


def test_verify_paper_json():
    code, out = run("verify-paper", "--json")
    data = json.loads(out)
    ids = [c["id"] for c in data["claims"]]
    assert ids == [str(i) for i in range(1, 10)]
    assert code == data["exit_code"] == (0 if all(c["status"] == "pass" for c in data["claims"]) else 1)


@pytest.mark.skipif(shutil.which("semimaps") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["semimaps", "classify", "catalog/T5.map"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "[3^1,4^1,6^1,4^1]\n"
