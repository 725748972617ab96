import json

import pytest

from depthstab.cli import main


def write(tmp_path, name, n, edges):
    p = tmp_path / name
    p.write_text(json.dumps({"n": n, "edges": edges}))
    return str(p)


@pytest.fixture
def files(tmp_path):
    return {
        "tri": write(tmp_path, "tri.json", 3, [[1, 2], [2, 3], [1, 3]]),
        "edge": write(tmp_path, "edge.json", 2, [[1, 2]]),
        "p3": write(tmp_path, "p3.json", 3, [[1, 2], [2, 3]]),
    }


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_balanced_triangle(files, capsys):
    code, out, err = run(capsys, "check-balanced", files["tri"])
    assert code == 0
    assert json.loads(out)["verdict"] == "UNBALANCED"
    assert "odd cycle 1 - 2 - 3" in err


def test_depth_single_edge(files, capsys):
    code, out, _ = run(capsys, "depth", files["edge"], "--t", "2")
    assert code == 0 and out.strip() == "0"


def test_depth_from_ideal_file(tmp_path, capsys):
    p = tmp_path / "i.json"
    p.write_text("[[1,1,0],[0,1,1]]")
    code, out, _ = run(capsys, "depth", "--ideal", str(p))
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "betti", "--ideal", str(p))
    assert json.loads(out)["depth"] == 1


def test_simple_commands(files, capsys):
    code, out, _ = run(capsys, "covers", files["p3"])
    assert json.loads(out) == [[2], [1, 3]]
    code, out, _ = run(capsys, "cover-ideal", "--text", files["p3"])
    assert out.strip() == "(x2, x1*x3)"
    code, out, _ = run(capsys, "depth-function", files["p3"], "--t-max", "3")
    assert json.loads(out) == {"1": 1, "2": 1, "3": 1}
    code, out, _ = run(capsys, "dstab", files["p3"])
    assert out.strip() == "1"
    code, out, _ = run(capsys, "polytope", "integrality", files["tri"], "--upper", "1,2,3")
    assert json.loads(out) == {"integral": False, "witness": ["1/2", "1/2", "1/2"]}
    code, out, _ = run(capsys, "polytope", "vertices", files["edge"], "--upper", "1")
    assert sorted(json.loads(out)) == [["0", "0"], ["0", "1"], ["1", "0"]]
    code, out, _ = run(capsys, "polytope", "feasibility", files["p3"], "--t-max", "4")
    assert json.loads(out)["monotone"]


def test_gen_is_deterministic(tmp_path, capsys):
    a = run(capsys, "gen", "--family", "bipartite", "--left", "2", "--right", "2", "--density", "1", "--seed", "7")[1]
    b = run(capsys, "gen", "--family", "bipartite", "--left", "2", "--right", "2", "--density", "1", "--seed", "7")[1]
    assert a == b and len(json.loads(a)["edges"]) == 4


def test_error_exit_codes(tmp_path, files, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "edges": [[1, 3]]}')
    assert run(capsys, "covers", str(bad))[0] == 2
    assert run(capsys, "covers", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "gen", "--family", "odd_cycle", "--n", "4")[0] == 2
    big = write(tmp_path, "big.json", 13, [[i, i + 1] for i in range(1, 13)])
    assert run(capsys, "check-balanced", big)[0] == 2
    assert run(capsys, "dstab", files["tri"])[0] == 2


def test_verify_exit_codes(files, capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", files["p3"], files["tri"], "--suite", "all")
    doc = json.loads(out)
    assert code == 0 and doc["violations"] == []
    assert [i["name"] for i in doc["inputs"]] == ["p3", "tri"]
    assert all(len(i["sha256"]) == 64 for i in doc["inputs"])
    assert "jobs" not in doc["config"] and "cache_dir" not in doc["config"]

    # a failing asserted verdict turns into exit 1
    import depthstab.stability as stability

    monkeypatch.setattr(stability, "check_ntf", lambda h, s: (False, None))
    code, _, err = run(capsys, "verify", files["p3"], "--suite", "ntf")
    assert code == 1 and "VIOLATION p3: ntf_holds" in err


def test_verify_manifest_mismatch(tmp_path, capsys):
    from depthstab.corpus import write_corpus

    d = tmp_path / "corpus"
    write_corpus(d)
    manifest = json.loads((d / "manifest.json").read_text())
    manifest["instances"] = [e for e in manifest["instances"] if e["name"] in ("path_n3", "odd_cycle_n3")]
    (d / "manifest.json").write_text(json.dumps(manifest))
    code, out, _ = run(capsys, "verify", "--corpus", str(d), "--suite", "ntf", "--format", "csv")
    assert code == 0 and out.startswith("instance,n,m,")
    manifest["instances"][0]["expected"]["ntf_holds"] = False
    (d / "manifest.json").write_text(json.dumps(manifest))
    assert run(capsys, "verify", "--corpus", str(d), "--suite", "ntf")[0] == 1


def test_cache_dir_env_gives_identical_output(tmp_path, files, capsys, monkeypatch):
    monkeypatch.setenv("DEPTHSTAB_CACHE_DIR", str(tmp_path / "cache"))
    first = run(capsys, "depth-function", files["p3"], "--t-max", "3")[1]
    assert any((tmp_path / "cache").rglob("*.json"))
    second = run(capsys, "depth-function", files["p3"], "--t-max", "3")[1]
    assert first == second


def test_verify_parallel_deterministic(files, tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["verify", files["p3"], files["edge"], files["tri"], "--out", str(a)]) == 0
    assert main(["verify", files["p3"], files["edge"], files["tri"], "--jobs", "2", "--out", str(b)]) == 0
    for name in ("report.json", "report.csv"):
        assert (a / name).read_bytes() == (b / name).read_bytes()
