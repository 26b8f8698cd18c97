"""End-to-end command line checks driven through run()."""

import json

import pytest

from foundry.cli import run
from foundry.matroid import matroidToJson, namedMatroid
from foundry.pasture import builtinPasture, pastureToJson


def runJson(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_foundation_text(capsys):
    assert run(["foundation", "--matroid", "example52"]) == 0
    out = capsys.readouterr().out
    assert "unit group: Z/2 x Z^3" in out
    assert "reference basis: 0,1,3" in out
    assert "hexagons: 3 (U:3)" in out


def test_foundation_json(capsys):
    code, doc = runJson(capsys, ["foundation", "--matroid", "example52",
                                 "--output", "json"])
    assert code == 0
    assert doc["B0"] == [0, 1, 3]
    assert doc["invariants"] == [2]
    assert doc["freeRank"] == 3
    assert doc["epsilon"] == [1, 0, 0, 0]


def test_foundation_basis_override(capsys):
    assert run(["foundation", "--matroid", "example52", "--basis", "0,1,4"]) == 0
    out = capsys.readouterr().out
    assert "reference basis: 0,1,4" in out


def test_representations_json(capsys):
    code, doc = runJson(capsys, ["representations", "--matroid", "example52",
                                 "--field", "5", "--output", "json"])
    assert code == 0
    assert doc["count"] == 2
    assert doc["matrices"] == [
        [[1, 0, 1, 0, 1, 1, 1], [0, 1, 1, 0, 0, 1, 4], [0, 0, 0, 1, 1, 1, 4]],
        [[1, 0, 1, 0, 1, 1, 1], [0, 1, 1, 0, 0, 1, 2], [0, 0, 0, 1, 1, 1, 2]],
    ]


def test_representations_text_signed_residues(capsys):
    assert run(["representations", "--matroid", "example52", "--field", "5"]) == 0
    out = capsys.readouterr().out
    assert "representations over GF(5): 2" in out
    assert "-1" in out  # 4 displayed symmetrically


def test_morphisms_count_and_stats(capsys):
    code, doc = runJson(capsys, ["morphisms", "--matroid", "pappus",
                                 "--target", "gf:8", "--count", "--stats",
                                 "--output", "json"])
    assert code == 0
    assert doc["count"] == 18
    assert doc["stats"]["leafCandidates"] <= 36
    assert doc["stats"]["p1"] + doc["stats"]["p2"] + 2 * doc["stats"]["p3"] == 7


def test_morphisms_matrices_listed(capsys):
    code, doc = runJson(capsys, ["morphisms", "--matroid", "example52",
                                 "--target", "gf:5", "--output", "json"])
    assert code == 0
    assert doc["count"] == 2
    assert doc["matrices"] == [[[2, 0, 3, 1]], [[2, 3, 1, 2]]]


def test_morphisms_builtin_target(capsys):
    code, doc = runJson(capsys, ["morphisms", "--matroid", "vamos",
                                 "--target", "sign", "--count",
                                 "--output", "json"])
    assert code == 0
    assert doc["count"] > 0


def test_orientable(capsys):
    code, doc = runJson(capsys, ["orientable", "--matroid", "fano",
                                 "--output", "json"])
    assert code == 0 and doc["orientable"] is False
    code, doc = runJson(capsys, ["orientable", "--matroid", "nonpappus",
                                 "--output", "json"])
    assert code == 0 and doc["orientable"] is True


def test_certificate(capsys):
    code, doc = runJson(capsys, ["certificate", "--matroid", "vamos",
                                 "--output", "json"])
    assert code == 0
    assert doc["certificate"]["kind"] == "OneIsFundamental"
    code, doc = runJson(capsys, ["certificate", "--matroid", "pappus",
                                 "--output", "json"])
    assert code == 0
    assert doc["certificate"] is None


def test_iso_matroid_source(capsys):
    code, doc = runJson(capsys, ["iso", "--matroid", "t8", "--target", "F3",
                                 "--output", "json"])
    assert code == 0
    assert doc["isomorphic"] is True


def test_iso_pasture_source(capsys):
    code, doc = runJson(capsys, ["iso", "--source", "F3", "--target", "sign",
                                 "--output", "json"])
    assert code == 0
    assert doc["isomorphic"] is False


def test_iso_requires_exactly_one_source(capsys):
    assert run(["iso", "--target", "F3"]) == 1
    assert run(["iso", "--matroid", "t8", "--source", "F3",
                "--target", "F3"]) == 1


def test_matroid_from_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin",
                        io.StringIO(json.dumps(matroidToJson(namedMatroid("uniform:2,4")))))
    code, doc = runJson(capsys, ["foundation", "--matroid", "-",
                                 "--output", "json"])
    assert code == 0
    assert doc["freeRank"] == 2


def test_matroid_from_file(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(matroidToJson(namedMatroid("fano"))))
    code, doc = runJson(capsys, ["orientable", "--matroid", str(path),
                                 "--output", "json"])
    assert code == 0
    assert doc["orientable"] is False


def test_pasture_target_from_file(capsys, tmp_path):
    path = tmp_path / "sign.json"
    path.write_text(json.dumps(pastureToJson(builtinPasture("sign"))))
    code, doc = runJson(capsys, ["morphisms", "--matroid", "fano",
                                 "--target", "file:%s" % path, "--count",
                                 "--output", "json"])
    assert code == 0
    assert doc["count"] == 0


def test_domain_errors_exit_two(capsys):
    assert run(["foundation", "--matroid", "nosuchthing"]) == 2
    assert run(["morphisms", "--matroid", "fano", "--target", "gf:6"]) == 2
    assert run(["morphisms", "--matroid", "fano", "--target", "nosuch"]) == 2
    capsys.readouterr()


def test_input_errors_exit_one(capsys, tmp_path):
    assert run(["foundation", "--matroid", "no/such/file.json"]) == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert run(["foundation", "--matroid", str(bad)]) == 1
    assert run(["morphisms", "--matroid", "fano", "--target", "gf:notanumber"]) == 1
    capsys.readouterr()


def test_usage_errors_exit_one(capsys):
    assert run(["foundation"]) == 1
    assert run(["nosuchcommand"]) == 1
    assert run(["foundation", "--matroid", "fano", "--output", "bogus"]) == 1
    capsys.readouterr()


def test_stdin_bad_json_exits_one(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("not json"))
    assert run(["foundation", "--matroid", "-"]) == 1
    capsys.readouterr()


def test_jobs_flag_accepted(capsys):
    assert run(["orientable", "--matroid", "fano", "--jobs", "4"]) == 0
    capsys.readouterr()
