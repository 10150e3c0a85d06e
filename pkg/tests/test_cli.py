import json

import pytest

from ramseykern.bundle import bundle_from_dict, bundle_to_dict, load_bundle
from ramseykern.cli import main
from ramseykern.dimacs import format_dimacs, parse_dimacs, read_dimacs
from ramseykern.generators import cycle, paley
from ramseykern.graph import complete


def _sidecar(stdout):
    line = stdout.splitlines()[0]
    assert line.startswith("c json ")
    return json.loads(line[len("c json "):])


@pytest.fixture
def c5_file(tmp_path):
    p = tmp_path / "c5.dimacs"
    p.write_text(format_dimacs(cycle(5)))
    return p


def test_solve(c5_file, capsys):
    assert main(["solve", "--graph", str(c5_file), "--k", "3"]) == 0
    assert capsys.readouterr().out == "no\n"
    main(["solve", "--graph", str(c5_file), "--k", "2", "--mode", "indep"])
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "yes independent-set"
    u, v = map(int, out[1].split())
    assert not cycle(5).has_edge(u - 1, v - 1)


def test_ramsey_commands(tmp_path, c5_file, capsys):
    main(["ramsey", "--compute", "3", "--cap", "7"])
    assert capsys.readouterr().out == "6\n"
    p17 = tmp_path / "p17.dimacs"
    p17.write_text(format_dimacs(paley(17)))
    assert main(["ramsey", "--witness", str(p17), "--k", "4"]) == 0
    assert "R(4) > 17" in capsys.readouterr().out
    assert main(["ramsey", "--witness", str(c5_file), "--k", "2"]) == 1
    capsys.readouterr()
    main(["ramsey", "--gap", "4"])
    assert json.loads(capsys.readouterr().out) == {"t": 4, "ell": 3, "T": 10}
    assert main(["ramsey", "--gap", "12"]) == 2
    assert "table-insufficient" in capsys.readouterr().err
    main(["ramsey", "--table"])
    assert json.loads(capsys.readouterr().out)["4"] == {"value": 18, "provenance": "external"}


def test_gen_compose_pipeline(tmp_path, capsys):
    main(["gen", "--n", "5", "--k", "3", "--target", "no", "--seed", "1", "--out", str(tmp_path / "b.json")])
    data = json.loads((tmp_path / "b.json").read_text())
    data["instances"] *= 4
    (tmp_path / "b4.json").write_text(json.dumps(data))
    assert main(["compose", "--bundle", str(tmp_path / "b4.json"), "--strategy", "turan",
                 "--out", str(tmp_path / "c")]) == 0
    side = json.loads((tmp_path / "c.json").read_text())
    assert side["k_prime"] == 9 and side["ell"] == 2 and side["assignment"] == [0, 1, 2, 3]
    assert side["block_ranges"][0] == [1, 16]
    g = read_dimacs(tmp_path / "c.dimacs")
    assert g.n == 64
    capsys.readouterr()
    main(["solve", "--graph", str(tmp_path / "c.dimacs"), "--k", "9"])
    assert capsys.readouterr().out == "no\n"


def test_host_and_embed(tmp_path, capsys):
    main(["gen", "--n", "5", "--k", "3", "--target", "yes", "--seed", "2", "--out", str(tmp_path / "b.json")])
    main(["host", "--t", "4", "--strategy", "witness", "--out", str(tmp_path / "h")])
    side = json.loads((tmp_path / "h.json").read_text())
    assert side["ell"] == 3 and side["strategy"] == "witness"
    assert main(["embed", "--bundle", str(tmp_path / "b.json"), "--host", str(tmp_path / "h.dimacs"),
                 "--ell", "3", "--cover", str(tmp_path / "h.json")]) == 0
    out = capsys.readouterr().out
    assert _sidecar(out)["k_prime"] == 13
    assert parse_dimacs(out).n == 16 * read_dimacs(tmp_path / "h.dimacs").n


def test_embed_rejects_bad_host(tmp_path, capsys):
    main(["gen", "--n", "5", "--k", "3", "--target", "no", "--seed", "2", "--out", str(tmp_path / "b.json")])
    (tmp_path / "k3.dimacs").write_text(format_dimacs(complete(3)))
    with pytest.raises(SystemExit, match="invalid host"):
        main(["embed", "--bundle", str(tmp_path / "b.json"), "--host", str(tmp_path / "k3.dimacs"), "--ell", "2"])


def test_reduce(c5_file, capsys):
    main(["reduce", "--from", "ramsey", "--graph", str(c5_file), "--k", "3"])
    out = capsys.readouterr().out
    side = _sidecar(out)
    assert side["k"] == 4 and side["witnesses"] == {"clique": [6, 7, 8], "indep": [8, 9, 10]}
    assert parse_dimacs(out).n == 10
    main(["reduce", "--from", "clique", "--graph", str(c5_file), "--k", "2"])
    out = capsys.readouterr().out
    assert _sidecar(out) == {"k": 8, "witnesses": None}


def test_verify_and_report(tmp_path, capsys):
    rep = tmp_path / "r.json"
    assert main(["verify", "--t", "2", "--k", "3", "--strategy", "turan", "--trials", "6",
                 "--seed", "1", "--report", str(rep)]) == 0
    assert "6/6" in capsys.readouterr().out
    assert json.loads(rep.read_text())["failed"] == 0
    main(["report", "--blowup", "--t", "1,4", "--k", "3", "--strategies", "turan"])
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "t,k,strategy,ell,k_prime,k_prime_over_k,vertices,note"
    assert lines[2].startswith("4,3,turan,2,9,")


def test_bundle_graph_forms(tmp_path):
    (tmp_path / "g.dimacs").write_text(format_dimacs(cycle(5)))
    data = {"k": 3, "instances": [
        {"graph": "g.dimacs", "clique_witness": [1, 2], "indep_witness": [1, 3]},
        {"graph": {"n": 5, "edges": [[1, 2], [2, 3], [3, 4], [4, 5], [5, 1]]}},
        {"graph": [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]], "n": 5},
    ]}
    (tmp_path / "b.json").write_text(json.dumps(data))
    insts = load_bundle(tmp_path / "b.json")
    assert all(i.g == cycle(5) for i in insts)
    assert insts[0].clique_witness == (0, 1) and insts[0].is_legal_refinement()
    assert bundle_from_dict(bundle_to_dict(insts[:1])) == insts[:1]
