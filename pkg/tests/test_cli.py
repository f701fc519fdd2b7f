import json

import pytest

from bbcage.cli import main
from bbcage.graphs import from_dimacs, from_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_cage_report(tmp_path, capsys):
    out = tmp_path / "g.g6"
    code, stdout, _ = run(
        capsys,
        "construct", "--family", "q4-hyperbolic-prune", "--q", "3",
        "--out", str(out),
    )
    assert code == 0
    report = json.loads(stdout)
    assert report["vertices"] == 56
    assert report["girth"] == 8
    assert report["moore_bound"] == 49
    assert report["improved_lower_bound"] == 56
    assert report["cage_certified"] is True
    assert sorted(report["degrees"][0] + report["degrees"][1]) == [3, 4]
    n, edges = from_graph6(out.read_bytes())
    assert n == 56
    assert len(edges) == 96  # 24 * 4


def test_construct_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.g6", tmp_path / "b.g6"]
    reports = []
    for p in paths:
        code, stdout, _ = run(
            capsys,
            "construct", "--family", "steiner-cage", "--v", "13",
            "--out", str(p),
        )
        assert code == 0
        reports.append(stdout)
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert reports[0] == reports[1]
    assert json.loads(reports[0])["vertices"] == 32


def test_construct_report_file(tmp_path, capsys):
    rpt = tmp_path / "r.json"
    code, stdout, _ = run(
        capsys,
        "construct", "--family", "t2-slab", "--q", "5", "--m1", "3", "--n1", "4",
        "--report", str(rpt),
    )
    assert code == 0 and stdout == ""
    report = json.loads(rpt.read_text())
    assert report["vertices"] == 175
    assert report["girth"] == 8


def test_construct_dimacs_and_verify(tmp_path, capsys):
    out = tmp_path / "g.dimacs"
    code, _, _ = run(
        capsys,
        "construct", "--family", "q4", "--q", "2",
        "--out", str(out), "--format", "dimacs",
    )
    assert code == 0
    n, edges = from_dimacs(out.read_bytes())
    assert n == 30 and len(edges) == 45
    code, stdout, _ = run(
        capsys, "verify", "--in", str(out), "--expect-girth", "8"
    )
    assert code == 0
    assert json.loads(stdout)["girth"] == 8


def test_construct_ag2_family(capsys):
    code, stdout, _ = run(
        capsys,
        "construct", "--family", "ag2-girth6", "--q", "5", "--m1", "3", "--n1", "4",
    )
    assert code == 0
    report = json.loads(stdout)
    assert report["vertices"] == 35
    assert report["girth"] == 6


def test_internal_assertion_exit3(capsys, monkeypatch):
    from bbcage.polygons import ConstructionError

    def boom(family, q):
        raise ConstructionError("violated invariant: synthetic")

    monkeypatch.setattr("bbcage.cli.construct_named", boom)
    code, _, err = run(capsys, "construct", "--family", "q4-ovoid-delete", "--q", "2")
    assert code == 3
    assert "violated invariant" in err


def test_construct_cap_exit2(capsys):
    code, _, err = run(capsys, "construct", "--family", "hexagon", "--q", "5")
    assert code == 2
    assert "error" in err


def test_construct_missing_param_exit2(capsys):
    code, _, _ = run(capsys, "construct", "--family", "steiner-cage")
    assert code == 2


def test_construct_bad_family_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--family", "nope", "--q", "2"])
    assert exc.value.code == 2


def test_construct_branch_prune_auto_edge(capsys):
    code, stdout, _ = run(
        capsys,
        "construct", "--family", "branch-prune", "--q", "4",
        "--m1", "3", "--n1", "4", "--edge", "auto",
    )
    assert code == 0
    report = json.loads(stdout)
    assert report["vertices"] == 7 * 16
    assert report["girth"] == 8


def test_construct_mixed_prune(capsys):
    code, stdout, _ = run(
        capsys, "construct", "--family", "mixed-prune", "--q", "2", "--host", "hexagon"
    )
    assert code == 0
    report = json.loads(stdout)
    assert report["vertices"] == 80
    assert report["girth"] == 12


def test_verify_roundtrip(tmp_path, capsys):
    out = tmp_path / "g.g6"
    run(capsys, "construct", "--family", "q4-hyperbolic-prune", "--q", "3",
        "--out", str(out))
    code, stdout, _ = run(
        capsys, "verify", "--in", str(out), "--expect-girth", "8",
        "--expect-m", "3", "--expect-n", "4",
    )
    assert code == 0
    report = json.loads(stdout)
    assert report["vertices"] == 56
    assert report["expectation_failures"] == []


def test_verify_expectation_mismatch(tmp_path, capsys):
    from bbcage.designs import sts_generate
    from bbcage.graphs import levi, to_graph6

    out = tmp_path / "heawood.g6"
    out.write_bytes(to_graph6(levi(sts_generate(7).to_structure())))
    code, stdout, _ = run(capsys, "verify", "--in", str(out), "--expect-girth", "8")
    assert code == 1
    assert json.loads(stdout)["expectation_failures"]


def test_verify_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.g6"
    bad.write_bytes(b"\x01\x02gibberish\n")
    code, _, err = run(capsys, "verify", "--in", str(bad))
    assert code == 2


def test_verify_irregular_reports_without_bounds(tmp_path, capsys):
    from bbcage.graphs import BipartiteGraph, to_graph6

    g = BipartiteGraph.from_edges(2, 2, [(0, 0), (0, 1), (1, 0)])
    path = tmp_path / "p.g6"
    path.write_bytes(to_graph6(g))
    code, stdout, _ = run(capsys, "verify", "--in", str(path))
    assert code == 0
    report = json.loads(stdout)
    assert "moore_bound" not in report
    assert report["degrees"]


def test_bounds_command(capsys):
    code, stdout, _ = run(capsys, "bounds", "--m", "3", "--n", "4", "--girth", "8")
    assert code == 0
    data = json.loads(stdout)
    assert data["moore_bound"] == 49
    assert data["improved_lower_bound"] == 56
    code, stdout, _ = run(capsys, "bounds", "--m", "3", "--n", "5", "--girth", "6")
    assert json.loads(stdout)["improved_lower_bound"] == 32
    code, _, _ = run(capsys, "bounds", "--m", "5", "--n", "3", "--girth", "8")
    assert code == 2


def test_table_command(capsys):
    code, stdout, _ = run(capsys, "table", "--q", "2", "--q", "3")
    assert code == 0
    lines = [ln for ln in stdout.splitlines() if ln.strip()]
    assert len(lines) == 1 + 14  # header + 7 rows per q
    assert any("measured-ok" in ln for ln in lines)
    assert not any("measured-MISMATCH" in ln for ln in lines)
