"""Classical generalized quadrangles Q(4,q), Q(5,q) and the split Cayley
hexagon as incidence structures, plus ovoids and polygon certification.

The hexagon lives on the parabolic quadric of PG(6, q).  That quadric is
exactly the norm-zero locus of trace-zero split octonions (Zorn vector
matrices with a = X0, v = (X1, X3, X5), w = (X2, X4, X6), b = -X0), and the
hexagon lines are the quadric lines spanned by points whose octonion product
vanishes.  Certification (biregular, girth 12, diameter 6) is the operational
acceptance oracle for the line filter.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf import Field
from .graphs import BipartiteGraph, diameter, girth, is_connected, levi
from .incidence import IncidenceStructure
from .projective import (
    GeometryError,
    form_by_tag,
    projective_space,
    quadric_lines,
    quadric_points,
)

GQ_MAX_Q = 5
HEXAGON_Q = (2, 3)


class ConstructionError(RuntimeError):
    """A construction violated its own mathematical contract."""


@dataclass(frozen=True)
class PolygonCertificate:
    gonality: int
    s: int
    t: int
    num_points: int
    num_lines: int
    connected: bool
    biregular: bool
    girth_ok: bool
    diameter_ok: bool
    girth_measured: int | float
    diameter_measured: int | None

    @property
    def certified(self) -> bool:
        return self.connected and self.biregular and self.girth_ok and self.diameter_ok


def quadric_structure(tag: str, field: Field) -> IncidenceStructure:
    """Points and full line set of a named quadric, locally re-indexed."""
    form = form_by_tag(tag, field)
    pts = quadric_points(form, field)
    local = {p.id: i for i, p in enumerate(pts)}
    blocks = [tuple(local[x] for x in line) for line in quadric_lines(form, field)]
    return IncidenceStructure(
        [p.coords for p in pts],
        blocks,
        tag={"family": f"quadric:{tag}", "q": field.q, "field": field},
    )


@lru_cache(maxsize=None)
def gq_q4(field: Field) -> IncidenceStructure:
    """The classical generalized quadrangle of order (q, q) on the parabolic
    quadric of PG(4, q); (q+1)(q^2+1) points and as many lines."""
    q = field.q
    if q > GQ_MAX_Q:
        raise GeometryError(f"generalized quadrangles are capped at q <= {GQ_MAX_Q}")
    s = quadric_structure("parabolic-4", field)
    s.tag.update(family="Q(4,q)", order=(q, q), gonality=4)
    _expect(s.num_points == (q + 1) * (q * q + 1), "Q(4,q) point count")
    _expect(s.num_blocks == (q + 1) * (q * q + 1), "Q(4,q) line count")
    return s


@lru_cache(maxsize=None)
def gq_q5(field: Field) -> IncidenceStructure:
    """The classical generalized quadrangle of order (q, q^2) on the elliptic
    quadric of PG(5, q)."""
    q = field.q
    if q > GQ_MAX_Q:
        raise GeometryError(f"generalized quadrangles are capped at q <= {GQ_MAX_Q}")
    s = quadric_structure("elliptic-5", field)
    s.tag.update(family="Q(5,q)", order=(q, q * q), gonality=4)
    _expect(s.num_points == (q + 1) * (q ** 3 + 1), "Q(5,q) point count")
    _expect(s.num_blocks == (q * q + 1) * (q ** 3 + 1), "Q(5,q) line count")
    return s


def _zorn(coords, field: Field):
    a = coords[0]
    return (
        a,
        (coords[1], coords[3], coords[5]),
        (coords[2], coords[4], coords[6]),
        field.neg(a),
    )


def _cross(u, v, field: Field):
    m, s = field.mul, field.sub
    return (
        s(m(u[1], v[2]), m(u[2], v[1])),
        s(m(u[2], v[0]), m(u[0], v[2])),
        s(m(u[0], v[1]), m(u[1], v[0])),
    )


def _dot(u, v, field: Field):
    acc = 0
    for x, y in zip(u, v):
        acc = field.add(acc, field.mul(x, y))
    return acc


def _zorn_mul(x, y, field: Field):
    a1, v1, w1, b1 = x
    a2, v2, w2, b2 = y
    m, add, sub = field.mul, field.add, field.sub
    cw = _cross(w1, w2, field)
    cv = _cross(v1, v2, field)
    a = add(m(a1, a2), _dot(v1, w2, field))
    v = tuple(sub(add(m(a1, v2[i]), m(b2, v1[i])), cw[i]) for i in range(3))
    w = tuple(add(add(m(a2, w1[i]), m(b1, w2[i])), cv[i]) for i in range(3))
    b = add(m(b1, b2), _dot(w1, v2, field))
    return a, v, w, b


def _zorn_is_zero(x) -> bool:
    a, v, w, b = x
    return a == 0 and b == 0 and not any(v) and not any(w)


@lru_cache(maxsize=None)
def split_cayley_hexagon(field: Field) -> IncidenceStructure:
    """The split Cayley hexagon of order (q, q), q in {2, 3}.

    Points are every point of the parabolic quadric in PG(6, q); the lines are
    the quadric lines on which the split-octonion product vanishes.  The
    result must certify as a generalized hexagon or construction aborts.
    """
    q = field.q
    if q not in HEXAGON_Q:
        raise GeometryError(f"hexagon construction is capped at q in {HEXAGON_Q}")
    base = quadric_structure("parabolic-6", field)
    kept = []
    for blk in base.blocks:
        x = _zorn(base.points[blk[0]], field)
        y = _zorn(base.points[blk[1]], field)
        if _zorn_is_zero(_zorn_mul(x, y, field)) and _zorn_is_zero(
            _zorn_mul(y, x, field)
        ):
            kept.append(blk)
    s = IncidenceStructure(
        base.points,
        kept,
        tag={
            "family": "H(q)",
            "q": q,
            "field": field,
            "order": (q, q),
            "gonality": 6,
        },
    )
    cert = polygon_certify(s, 6)
    if not cert.certified:
        raise ConstructionError(f"hexagon line filter failed certification: {cert}")
    _expect(s.num_points == (q ** 6 - 1) // (q - 1), "hexagon point count")
    _expect(s.num_blocks == s.num_points, "hexagon line count")
    return s


def polygon_certify(structure: IncidenceStructure, r: int) -> PolygonCertificate:
    """Certify a structure as a generalized r-gon via its incidence graph:
    connected, biregular, girth 2r, diameter r.  Flags are only set from
    measurements."""
    if structure.num_points == 0 or structure.num_blocks == 0:
        raise GeometryError("cannot certify an empty structure")
    g = levi(structure)
    da, db = g.degree_sets()
    biregular = len(da) == 1 and len(db) == 1
    s_val = t_val = -1
    if biregular:
        t_val = next(iter(da)) - 1
        s_val = next(iter(db)) - 1
    connected = is_connected(g)
    gi = girth(g)
    diam = diameter(g) if connected else None
    return PolygonCertificate(
        gonality=r,
        s=s_val,
        t=t_val,
        num_points=structure.num_points,
        num_lines=structure.num_blocks,
        connected=connected,
        biregular=biregular,
        girth_ok=(gi == 2 * r),
        diameter_ok=(diam == r),
        girth_measured=gi,
        diameter_measured=diam,
    )


def ovoid_of_q4(field: Field) -> list[int]:
    """q^2+1 pairwise non-collinear points of Q(4,q), found as the section of
    the first hyperplane containing no line of the quadrangle."""
    q = field.q
    s = gq_q4(field)
    space = projective_space(4, field)
    coord_index = {c: i for i, c in enumerate(s.points)}
    for h in space.hyperplanes():
        inside = [
            coord_index[c]
            for c in s.points
            if space.on_hyperplane(h, c)
        ]
        if len(inside) != q * q + 1:
            continue
        inset = set(inside)
        if any(all(x in inset for x in blk) for blk in s.blocks):
            continue
        ovoid = sorted(inside)
        for i, a in enumerate(ovoid):
            blocks_a = set(s.point_blocks[a])
            for b in ovoid[i + 1 :]:
                if blocks_a.intersection(s.point_blocks[b]):
                    raise ConstructionError("ovoid candidate has collinear points")
        return ovoid
    raise ConstructionError(f"no ovoid section found on Q(4,{q})")


def levi_graph(structure: IncidenceStructure) -> BipartiteGraph:
    return levi(structure)


def _expect(cond: bool, what: str):
    if not cond:
        raise ConstructionError(f"violated invariant: {what}")
