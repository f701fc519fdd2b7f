import itertools

import pytest

from bbcage.designs import (
    Design,
    DesignError,
    design_load,
    design_save,
    design_validate,
    steiner_truncate,
    sts_generate,
)
from bbcage.gf import field_new
from bbcage.graphs import bb_check, bfs_distances, girth, levi
from bbcage.projective import projective_space


@pytest.mark.parametrize("v", [7, 9, 13, 15, 19, 21, 25, 31, 37])
def test_sts_valid(v):
    d = sts_generate(v)
    assert d.b == v * (v - 1) // 6
    assert design_validate(d).valid


@pytest.mark.parametrize("v", [6, 8, 11, 5, 17])
def test_sts_infeasible(v):
    with pytest.raises(DesignError):
        sts_generate(v)


def test_sts7_is_fano():
    d = sts_generate(7)
    assert d.b == 7
    pairs = {p for blk in d.blocks for p in itertools.combinations(blk, 2)}
    assert len(pairs) == 21


def test_validate_reports_missing_block():
    d = sts_generate(9)
    broken = Design(9, d.blocks[1:])
    report = design_validate(broken)
    assert not report.valid
    assert not report.pair_coverage
    assert report.problems


def test_validate_reports_duplicate_block():
    d = sts_generate(9)
    doubled = Design(9, d.blocks + d.blocks[:1])
    report = design_validate(doubled)
    assert not report.valid


def test_truncate_sts13():
    g = steiner_truncate(sts_generate(13))
    assert g.n_vertices == 32
    assert (g.n_a, g.n_b) == (12, 20)
    assert bb_check(g, 3, 5, 6).passed


def test_truncate_sts19():
    g = steiner_truncate(sts_generate(19))
    assert g.n_vertices == 66
    assert bb_check(g, 3, 8, 6).passed


def test_truncate_sts9_rejected():
    # replication 4 gives n = 3, and 3 is not -1 mod 3
    with pytest.raises(DesignError):
        steiner_truncate(sts_generate(9))


@pytest.mark.parametrize("v", [13, 19])
def test_truncate_reconstruction_pairing(v):
    g = steiner_truncate(sts_generate(v))
    adj = g.adjacency()
    far = {}
    for s in range(g.n_a):
        dist = bfs_distances(adj, s)
        others = [x for x in range(g.n_a) if x != s and dist[x] > 2]
        assert len(others) == 1  # unique far partner per point
        far[s] = others[0]
    assert all(far[far[s]] == s for s in far)


def test_truncate_any_point_same_parameters():
    d = sts_generate(13)
    for x in (0, 5, 12):
        g = steiner_truncate(d, x)
        assert g.n_vertices == 32
        assert girth(g) == 6


def test_file_roundtrip():
    d = sts_generate(13)
    text = design_save(d)
    assert design_save(design_load(text)) == text
    assert text.endswith("\n")


def test_file_errors():
    with pytest.raises(DesignError):
        design_load("")
    with pytest.raises(DesignError):
        design_load("7 1\n0 1 2\n")
    with pytest.raises(DesignError):
        design_load("3 1 3\n0 1 7\n")  # index out of range
    with pytest.raises(DesignError):
        design_load("4 1 3\n0 1\n")  # wrong block size
    with pytest.raises(DesignError):
        design_load("4 2 3\n0 1 2\n")  # block count mismatch
    with pytest.raises(DesignError):
        design_load("4 1 3\n0 1 1\n")  # repeated point


def test_pg23_as_design():
    # the 13 lines of PG(2, 3) form an S(2, 4, 13)
    space = projective_space(2, field_new(3, 1))
    lines = sorted(space.all_lines())
    d = Design(13, tuple(lines))
    assert design_validate(d).valid
    text = design_save(d)
    assert design_save(design_load(text)) == text
    # block size 4 exceeds the truncated degree 3
    with pytest.raises(DesignError):
        steiner_truncate(d)


def test_truncated_design_levi_from_structure():
    d = sts_generate(13)
    g = levi(d.to_structure())
    assert g.n_vertices == 13 + 26


def test_polygon_blocks_export_in_design_format():
    # uniform block size lets incidence structures ride the design file format
    from bbcage.polygons import gq_q4

    s = gq_q4(field_new(2, 1))
    d = Design(s.num_points, tuple(s.blocks))
    text = design_save(d)
    back = design_load(text)
    assert back.blocks == d.blocks
    assert design_save(back) == text
    assert not design_validate(back).valid  # a quadrangle is not a 2-design
