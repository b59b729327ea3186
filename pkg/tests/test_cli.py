import json
import os
import shutil

import pytest

from tricode import serialize
from tricode.cli import main, run_manifest

MANIFEST = os.path.join(os.path.dirname(__file__), "..", "manifests", "t3.manifest.json")


@pytest.fixture()
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_complex_build_validate_roundtrip(workdir):
    assert main(["complex", "build", "--preset", "t3", "--out", "t3.json"]) == 0
    assert main(["complex", "validate", "t3.json"]) == 0
    data = serialize.read("t3.json")
    assert data["dims"] == 3
    K = serialize.complex_from_json(data)
    assert K.counts == [1, 7, 12, 6]
    assert "axb" in K.cycles


def test_complex_presets(workdir):
    for preset, counts in (
        ("sigma:2", [1, 9, 6]),
        ("sigma-rot:2", [2, 12, 8]),
        ("product:1,1", [1, 7, 12, 6]),
        ("circle:4", [4, 4]),
    ):
        assert main(["complex", "build", "--preset", preset, "--out", "k.json"]) == 0
        assert serialize.complex_from_json(serialize.read("k.json")).counts == counts


def test_complex_subdivide(workdir):
    main(["complex", "build", "--preset", "sigma:1", "--out", "s.json"])
    assert main(["complex", "subdivide", "s.json", "--out", "sd.json"]) == 0
    assert serialize.complex_from_json(serialize.read("sd.json")).counts == [6, 18, 12]


def test_mapping_torus_preset(workdir):
    serialize.write("twist.json", {"base_preset": "sigma-rot:2", "layers": 1,
                                   "kind": "rotation", "handles": 1})
    assert main(["complex", "build", "--preset", "mapping-torus",
                 "--twist", "twist.json", "--out", "mt.json"]) == 0
    assert main(["homology", "betti", "mt.json", "--out", "b.json"]) == 0
    assert serialize.read("b.json")["betti"] == [1, 3, 3, 1]


def test_validate_catches_corruption(workdir):
    main(["complex", "build", "--preset", "t3", "--out", "t3.json"])
    data = serialize.read("t3.json")
    for entry in data["simplices"]:
        if entry["dim"] == 2:
            entry["faces"][0] = 99
            break
    serialize.write("bad.json", data)
    assert main(["complex", "validate", "bad.json"]) == 1


def test_homology_and_cup_cli(workdir, capsys):
    main(["complex", "build", "--preset", "product:2,1", "--out", "p.json"])
    assert main(["homology", "betti", "p.json", "--dim", "1"]) == 0
    assert "b_1 = 5" in capsys.readouterr().out
    assert main(["cup", "form", "p.json", "--out", "form.json"]) == 0
    form = serialize.read("form.json")
    assert len(form["unit_triples"]) == 2
    assert main(["homology", "basis", "p.json", "--dim", "1", "--out", "basis.json"]) == 0
    assert len(serialize.read("basis.json")["cycles"]) == 5


def test_cup_triple_cli(workdir, capsys):
    main(["complex", "build", "--preset", "t3", "--out", "t3.json"])
    assert main(["cup", "triple", "t3.json", "--cocycles", "0,1,2"]) == 0
    assert "integral = 1" in capsys.readouterr().out


def test_snf_cli(workdir, capsys):
    serialize.write("m.json", serialize.matrix_to_json([[2, 4], [6, 8]]))
    assert main(["snf", "m.json"]) == 0
    assert "2 4" in capsys.readouterr().out


def test_code_and_gate_cli(workdir, capsys):
    main(["complex", "build", "--preset", "t3", "--out", "t3.json"])
    assert main(["code", "build", "t3.json", "--type", "toric:3", "--out", "c.json"]) == 0
    assert main(["code", "build", "t3.json", "--type", "color", "--out", "cc.json"]) == 0
    assert serialize.read("cc.json")["n"] == 144
    assert main(["code", "distance", "c.json", "--sector", "z"]) == 0
    assert "d_z=1" in capsys.readouterr().out
    assert main(["gate", "ccz", "t3.json", "--out", "ccz.json"]) == 0
    assert main(["gate", "check", "ccz.json", "c.json"]) == 0
    assert main(["gate", "action", "ccz.json", "c.json", "--out", "act.json"]) == 0
    assert serialize.read("act.json")["k"] == 9
    assert main(["gate", "t", "cc.json", "--out", "t.json"]) == 0
    assert len(serialize.read("t.json")["gates"]) == 144
    assert main(["gate", "simulate", "ccz.json", "c.json", "--plus", "all",
                 "--out", "state.json"]) == 0
    assert len(serialize.read("state.json")["phases"]) == 512


def test_gate_cz_cli(workdir):
    main(["complex", "build", "--preset", "product:2,1", "--out", "p.json"])
    K = serialize.complex_from_json(serialize.read("p.json"))
    dim, cells = K.cycles["a1xc"]
    serialize.write("memb.json", serialize.cochain_to_json(dim, __import__("tricode.gf2", fromlist=["vec_from_support"]).vec_from_support(cells)))
    assert main(["gate", "cz", "p.json", "--membrane", "memb.json",
                 "--copies", "1,2", "--out", "cz.json"]) == 0
    main(["code", "build", "p.json", "--type", "toric:3", "--out", "c.json"])
    assert main(["gate", "action", "cz.json", "c.json", "--out", "act.json"]) == 0
    gates = serialize.read("act.json")["gates"]
    assert len(gates) == 2


def test_mcg_cli(workdir, capsys):
    serialize.write("n.json", serialize.matrix_to_json([[4, 8], [0, 4]]))
    assert main(["mcg", "thurston", "--n", "n.json", "--word", "A B"]) == 0
    out = capsys.readouterr().out
    assert "93.2548" in out and "91.2439" in out and "pA=yes" in out
    assert main(["mcg", "twist", "--genus", "2", "--curve", "a:1", "--out", "tw.json"]) == 0
    assert serialize.read("tw.json")["entries"][0] == [1, 0, 1, 0]
    serialize.write("m.json", serialize.matrix_to_json(
        [[1, 0, 0, 0], [0, 1, 0, 1], [0, 0, 1, 0], [0, 0, 0, 1]]))
    assert main(["mcg", "torus-homology", "--matrix", "m.json", "--coeff", "z"]) == 0
    assert "Z^4" in capsys.readouterr().out
    assert main(["mcg", "thickened", "--genus", "2", "--sequence", "b:2 b:1 f:1"]) == 0
    out = capsys.readouterr().out
    assert "a1xc -> a1xc + b2xc" in out


def test_hypergraph_and_sullivan_cli(workdir, capsys):
    serialize.write("mu.json", {"m": 5, "coeffs": {"1,2,3": 1, "1,4,5": 1}})
    assert main(["sullivan", "synth", "mu.json", "--out", "tau.json"]) == 0
    assert serialize.read("tau.json")["fixes_kernel"] is True
    assert main(["sullivan", "roundtrip", "mu.json"]) == 0
    assert main(["hypergraph", "build", "mu.json", "--lift", "--out", "h.json"]) == 0
    assert len(serialize.read("h.json")["hyperedges"]) == 12
    assert main(["hypergraph", "degrees", "h.json"]) == 0
    assert "max degree" in capsys.readouterr().out
    assert main(["hypergraph", "build", "mu.json", "--export", "dot", "--out", "h.dot"]) == 0
    assert open("h.dot").read().startswith("graph hypergraph")


def test_report_cli(workdir, capsys):
    main(["complex", "build", "--preset", "t3", "--out", "t3.json"])
    main(["code", "build", "t3.json", "--type", "toric:3", "--out", "c.json"])
    assert main(["report", "c.json"]) == 0
    assert "n=21 k=9 d_z=1(exact)" in capsys.readouterr().out


def test_manifest_end_to_end(workdir):
    rc, lines = run_manifest(MANIFEST)
    assert rc == 0
    assert sum(1 for l in lines if l.startswith("PASS")) == 11


def test_manifest_detects_perturbed_expectation(workdir, tmp_path):
    manifest = serialize.read(MANIFEST)
    for exp in manifest["expect"]:
        if exp["path"] == "betti":
            exp["value"] = [1, 4, 3, 1]
    serialize.write("bad.manifest.json", manifest)
    rc, lines = run_manifest("bad.manifest.json")
    assert rc == 1
    assert any(l.startswith("FAIL") and "betti" in l for l in lines)


def test_empty_manifest_warns(workdir):
    serialize.write("empty.json", {})
    rc, lines = run_manifest("empty.json")
    assert rc == 0
    assert any("warning" in l for l in lines)


def test_manifest_outputs_deterministic(workdir):
    rc1, _ = run_manifest(MANIFEST)
    first = {f: open(f, "rb").read() for f in os.listdir(".") if f.endswith(".json")}
    rc2, _ = run_manifest(MANIFEST)
    second = {f: open(f, "rb").read() for f in os.listdir(".") if f.endswith(".json")}
    assert rc1 == rc2 == 0
    assert first == second


def test_circuit_json_roundtrip(workdir):
    from tricode.gates import DiagonalCircuit

    circ = DiagonalCircuit(5, [("CCZ", (0, 1, 2)), ("T", (4,))])
    back = serialize.circuit_from_json(json.loads(serialize.dumps(serialize.circuit_to_json(circ))))
    assert back.n == circ.n and back.gates == circ.gates
