import pytest

from bbcage.gf import field_new
from bbcage.graphs import girth, levi
from bbcage.polygons import (
    gq_q4,
    gq_q5,
    ovoid_of_q4,
    polygon_certify,
    quadric_structure,
    split_cayley_hexagon,
)
from bbcage.projective import GeometryError

F2 = field_new(2, 1)
F3 = field_new(3, 1)
F4 = field_new(2, 2)


@pytest.mark.parametrize("q,count", [(2, 15), (3, 40), (4, 85)])
def test_gq_q4_counts(q, count):
    s = gq_q4(field_new(2, 2) if q == 4 else field_new(q, 1))
    assert s.num_points == count
    assert s.num_blocks == count
    assert s.block_sizes() == {q + 1}
    assert s.point_degrees() == {q + 1}


def test_gq_q5_counts():
    s2 = gq_q5(F2)
    assert (s2.num_points, s2.num_blocks) == (27, 45)
    assert s2.point_degrees() == {5}  # q^2 + 1
    s3 = gq_q5(F3)
    assert (s3.num_points, s3.num_blocks) == (112, 280)
    assert s3.point_degrees() == {10}
    assert s3.block_sizes() == {4}


def test_gq_caps():
    with pytest.raises(GeometryError):
        gq_q4(field_new(7, 1))
    with pytest.raises(GeometryError):
        split_cayley_hexagon(F4)


def test_certify_q43():
    cert = polygon_certify(gq_q4(F3), 4)
    assert cert.certified
    assert (cert.s, cert.t) == (3, 3)
    assert cert.girth_measured == 8
    assert cert.diameter_measured == 4


def test_certify_q52():
    cert = polygon_certify(gq_q5(F2), 4)
    assert cert.certified
    assert (cert.s, cert.t) == (2, 4)


def test_certify_wrong_gonality_fails():
    cert = polygon_certify(gq_q4(F2), 6)
    assert not cert.certified
    assert cert.girth_measured == 8


def test_hexagon_q2():
    s = split_cayley_hexagon(F2)
    assert (s.num_points, s.num_blocks) == (63, 63)
    cert = polygon_certify(s, 6)
    assert cert.certified
    assert (cert.s, cert.t) == (2, 2)
    assert cert.girth_measured == 12
    assert cert.diameter_measured == 6


def test_hexagon_q3_counts():
    s = split_cayley_hexagon(F3)
    assert (s.num_points, s.num_blocks) == (364, 364)
    assert s.point_degrees() == {4}
    assert s.block_sizes() == {4}


def test_hexagon_lines_lie_on_quadric():
    s = split_cayley_hexagon(F2)
    base = quadric_structure("parabolic-6", F2)
    assert set(s.blocks) <= set(base.blocks)


@pytest.mark.parametrize("field,q", [(F2, 2), (F3, 3)])
def test_ovoid(field, q):
    s = gq_q4(field)
    ovoid = ovoid_of_q4(field)
    assert len(ovoid) == q * q + 1
    oset = set(ovoid)
    # exhaustive pair check: no two ovoid points share a line
    for blk in s.blocks:
        assert len(oset.intersection(blk)) <= 1
    # every line meets the ovoid exactly once
    assert all(len(oset.intersection(blk)) == 1 for blk in s.blocks)


def test_levi_of_polygons_girth():
    assert girth(levi(gq_q4(F2))) == 8
    assert girth(levi(gq_q5(F2))) == 8
