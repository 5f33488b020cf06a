import io
import json
import subprocess
import sys

import pytest

from digitalnets import f2
from digitalnets.cli import main
from digitalnets.characterize import decompose_0m3
from digitalnets.nets import net_points, parse_points
from digitalnets.verify import is_net_geometric


def run(argv, stdin_text=None, monkeypatch=None):
    out = io.StringIO()
    if stdin_text is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def faure_files(tmp_path):
    paths = {}
    for name, mat in (("J", f2.anti_diagonal(2)), ("I", f2.identity(2)), ("P", f2.pascal(2))):
        path = tmp_path / f"{name}.txt"
        path.write_text(f2.format_matrix(mat))
        paths[name] = str(path)
    return paths


def test_check_net_json(faure_files):
    code, out = run(["check-net", "--t", "0", faure_files["J"], faure_files["I"],
                     faure_files["P"], "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True and doc["kind"] == "net"
    assert set(doc) == {"kind", "m", "s", "t", "strength", "passed", "witness", "checked_depths"}


def test_check_net_failure_witness():
    code, out = run(["check-net", "@I:2", "@I:2", "--json"])
    assert code == 1
    assert json.loads(out)["witness"] == {"composition": [1, 1]}


def test_check_net_geometric():
    code, out = run(["check-net", "@J:2", "@J:2", "--geometric", "--json"])
    assert code == 1
    assert json.loads(out)["witness"] == {"shape": [1, 1], "offsets": [0, 1]}
    code, _ = run(["check-net", "@J:4", "@I:4", "@P:4", "--geometric"])
    assert code == 0


def test_decompose_not_lu(faure_files):
    code, out = run(["decompose", faure_files["J"], faure_files["J"], faure_files["I"]])
    assert code == 1
    assert "NotLU" in out and "minor 1" in out
    code, out = run(["decompose", "@J:2", "@J:2", "@I:2", "--json"])
    doc = json.loads(out)
    assert (doc["reason"], doc["minor"], doc["passed"]) == ("NotLU", 1, False)


def test_decompose_canonical_prints_four_identities():
    code, out = run(["decompose", "@J:3", "@I:3", "@P:3"])
    assert code == 0
    assert f2.parse_matrices(out) == [f2.identity(3)] * 4


def test_decompose_pair():
    code, out = run(["decompose", "@J:3", "@I:3"])
    assert code == 0
    assert len(f2.parse_matrices(out)) == 3


def test_enumerate_m2_has_48_blocks():
    code, out = run(["enumerate", "--m", "2"])
    assert code == 0
    blocks = [b for b in out.split("\n\n") if b.strip()]
    assert len(blocks) == 48
    assert all(len(f2.parse_matrices(b)) == 3 for b in blocks)


@pytest.mark.parametrize("seed", [0, 1, 7, 12345])
def test_sample_roundtrips_through_decompose(seed, monkeypatch):
    code, sampled = run(["sample", "--m", "8", "--seed", str(seed)])
    assert code == 0
    code, factors = run(["decompose", "-"], stdin_text=sampled, monkeypatch=monkeypatch)
    assert code == 0
    triple = f2.parse_matrices(sampled)
    assert f2.parse_matrices(factors) == list(decompose_0m3(*triple).factors())


def test_deterministic_output():
    for argv in (["sample", "--m", "10", "--seed", "3"],
                 ["gen-matrix", "random-gl", "--m", "9", "--seed", "4"],
                 ["points", "@J:4", "@I:4", "@P:4", "--format", "dec"]):
        assert run(argv) == run(argv)


@pytest.mark.parametrize("fmt", ["frac", "dec", "bin"])
def test_points_io_fidelity(fmt, tmp_path):
    gens = ["@J:4", "@I:4", "@I:4"]
    code, out = run(["points", *gens, "--format", fmt])
    assert code == 0
    pts = parse_points(out)
    in_memory = net_points([f2.anti_diagonal(4), f2.identity(4), f2.identity(4)])
    assert pts == in_memory
    for t in range(5):
        assert bool(is_net_geometric(pts, t)) == bool(is_net_geometric(in_memory, t))


def test_points_frac_text():
    code, out = run(["points", "@J:2", "@I:2", "@P:2"])
    assert out.splitlines() == ["0/4 0/4 0/4", "1/4 2/4 2/4", "2/4 1/4 3/4", "3/4 3/4 1/4"]


def test_check_seq():
    code, out = run(["check-seq", "--t", "0", "--depth", "16", "@I:16", "@P:16"])
    assert code == 0 and "certified to depth 16" in out
    code, out = run(["check-seq", "@I:4", "@I:4", "--json"])
    doc = json.loads(out)
    assert code == 1
    assert doc["witness"] == {"composition": [0, 1, 1], "depth": 2}
    assert len(doc["checked_depths"]) == 4


@pytest.mark.parametrize("kind,expected", [
    ("identity", f2.identity(5)), ("pascal", f2.pascal(5)), ("antidiag", f2.anti_diagonal(5)),
])
def test_gen_matrix(kind, expected):
    code, out = run(["gen-matrix", kind, "--m", "5"])
    assert code == 0 and f2.parse_matrix(out) == expected


def test_gen_matrix_random_kinds():
    _, out = run(["gen-matrix", "random-lower", "--m", "6", "--seed", "1"])
    assert f2.is_lower_triangular_nonsingular(f2.parse_matrix(out))
    _, out = run(["gen-matrix", "random-upper", "--m", "6", "--seed", "1"])
    assert f2.is_upper_triangular_nonsingular(f2.parse_matrix(out))


def test_discrepancy(tmp_path):
    code, out = run(["discrepancy", "@I:1"])
    assert code == 0 and out.strip() == "0.0833333333333"
    pfile = tmp_path / "pts.txt"
    pfile.write_text("0/2\n1/2\n")
    code, out2 = run(["discrepancy", "--points", str(pfile)])
    assert out2 == out


@pytest.mark.parametrize("argv", [
    ["check-net", "@I:2", "@I:3"],
    ["check-net", "@X:2"],
    ["check-net", "/nonexistent/file.txt"],
    ["enumerate", "--m", "5"],
    ["gen-matrix", "identity", "--m", "65"],
    ["decompose", "@I:2"],
    ["check-net", "--t", "9", "@I:2"],
    ["frobnicate"],
])
def test_usage_errors(argv):
    code, _ = run(argv)
    assert code == 2


def test_malformed_matrix_file(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n1x\n01\n")
    assert run(["check-net", str(bad)])[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "digitalnets", "check-net", "@J:3", "@I:3", "@P:3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "PASS" in proc.stdout
