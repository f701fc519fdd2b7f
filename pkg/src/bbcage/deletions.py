"""Substructure deletions from incidence structures: point sets (ovoids),
block sets (spreads), subquadrangles, and hyperplane sections, plus one-call
named constructions composing them."""

from __future__ import annotations

import logging
from fractions import Fraction

from .gf import Field, field_of_order
from .graphs import BipartiteGraph, bb_check, girth, levi
from .incidence import IncidenceStructure
from .polygons import ConstructionError, gq_q4, gq_q5, ovoid_of_q4, split_cayley_hexagon
from .projective import Hyperplane, hyperplane_section

log = logging.getLogger(__name__)


def delete_points(
    structure: IncidenceStructure, point_ids, drop_empty_blocks: bool = False
) -> IncidenceStructure:
    """Remove a point set; blocks shrink by their removed members.

    Deletion must not create duplicate blocks (it never does for polygon
    inputs); blocks emptied by the deletion are dropped only when
    drop_empty_blocks is set, and with a logged count.
    """
    doomed = set(point_ids)
    if any(not 0 <= x < structure.num_points for x in doomed):
        raise ValueError("point set to delete is not a subset of the points")
    remap = {}
    new_points = []
    for i, payload in enumerate(structure.points):
        if i in doomed:
            continue
        remap[i] = len(new_points)
        new_points.append(payload)
    new_blocks = []
    emptied = 0
    for blk in structure.blocks:
        t = tuple(remap[x] for x in blk if x not in doomed)
        if not t:
            emptied += 1
            if drop_empty_blocks:
                continue
            raise ValueError(
                "deletion emptied a block; pass drop_empty_blocks to allow"
            )
        new_blocks.append(t)
    if emptied and drop_empty_blocks:
        log.info("delete_points dropped %d emptied blocks", emptied)
    if len(set(new_blocks)) != len(new_blocks):
        raise ConstructionError("violated invariant: deletion created duplicate blocks")
    tag = dict(structure.tag)
    tag["deleted_points"] = tag.get("deleted_points", 0) + len(doomed)
    return IncidenceStructure(new_points, new_blocks, tag=tag)


def delete_blocks(
    structure: IncidenceStructure, block_ids, as_spread: bool = False
) -> IncidenceStructure:
    """Remove a block set, points untouched.  With as_spread the set must be
    pairwise disjoint and have st+1 members for the structure's order (s, t)."""
    doomed = set(block_ids)
    if any(not 0 <= x < structure.num_blocks for x in doomed):
        raise ValueError("block set to delete is not a subset of the blocks")
    if as_spread:
        order = structure.order_pair()
        if order is None:
            raise ValueError("spread validation needs a structure with a known order")
        s, t = order
        if len(doomed) != s * t + 1:
            raise ValueError(
                f"a spread of an order ({s}, {t}) quadrangle has {s * t + 1} lines, "
                f"got {len(doomed)}"
            )
        seen: set[int] = set()
        for bi in sorted(doomed):
            blk = structure.blocks[bi]
            if seen.intersection(blk):
                raise ValueError("spread lines are not pairwise disjoint")
            seen.update(blk)
    new_blocks = [b for i, b in enumerate(structure.blocks) if i not in doomed]
    tag = dict(structure.tag)
    tag["deleted_blocks"] = tag.get("deleted_blocks", 0) + len(doomed)
    return IncidenceStructure(list(structure.points), new_blocks, tag=tag)


def delete_subquadrangle(
    structure: IncidenceStructure, sub_points, sub_blocks
) -> BipartiteGraph:
    """Delete a subquadrangle of order (m, n/m) from a generalized quadrangle
    of order (m, n); every remaining line must contain exactly one deleted
    point, and the result is an (m, n+1; 8) biregular graph of order
    (m+n+1) (m^2-1) n / m."""
    order = structure.order_pair()
    if order is None:
        raise ValueError("subquadrangle deletion needs a structure with a known order")
    m, n = order
    if n % m:
        raise ValueError(f"order ({m}, {n}) does not admit an (m, n/m) subquadrangle")
    doomed_pts = set(sub_points)
    doomed_blocks = set(sub_blocks)
    if any(not 0 <= x < structure.num_points for x in doomed_pts):
        raise ValueError("subquadrangle points are not a subset")
    if any(not 0 <= x < structure.num_blocks for x in doomed_blocks):
        raise ValueError("subquadrangle blocks are not a subset")
    for bi, blk in enumerate(structure.blocks):
        if bi in doomed_blocks:
            continue
        hit = sum(1 for x in blk if x in doomed_pts)
        if hit != 1:
            raise ValueError(
                f"remaining line {bi} contains {hit} deleted points, expected 1"
            )
    remaining = delete_points(
        delete_blocks(structure, doomed_blocks), doomed_pts
    )
    g = levi(remaining, meta={"construction": "subquadrangle-delete"})
    order_expected = (m + n + 1) * (m * m - 1) * n // m
    if g.n_vertices != order_expected:
        raise ConstructionError(
            f"violated invariant: order {g.n_vertices} != {order_expected}"
        )
    rep = bb_check(g, m, n + 1, 8)
    if not rep.passed:
        raise ConstructionError(f"violated invariant: {rep.violation}")
    return g


def hyperplane_delete(structure: IncidenceStructure, h: Hyperplane) -> BipartiteGraph:
    """Delete the points of a coordinatized polygon lying on a hyperplane and
    the lines fully inside it.

    Every remaining line loses exactly one point (checked via the section
    classification), giving an (m, n+1) biregular graph whose order is pinned
    by the section size u and whose girth never drops below the host's 2r.
    The measured girth is stored in the graph meta; at boundary parameters a
    deletion can kill every shortest cycle and push the girth above 2r.
    """
    field: Field | None = structure.tag.get("field")
    order = structure.order_pair()
    r = structure.tag.get("gonality")
    if field is None or order is None or r is None:
        raise ValueError("hyperplane deletion needs a coordinatized tagged polygon")
    if structure.points and not isinstance(structure.points[0], tuple):
        raise ValueError("structure points carry no coordinates")
    pts_in, blocks_inside, _ = hyperplane_section(
        structure.points, structure.blocks, h, field
    )
    m, n = order
    u = len(pts_in)
    remaining = delete_points(delete_blocks(structure, blocks_inside), pts_in)
    g = levi(remaining, meta={"construction": "hyperplane-delete", "u": u})
    expected = (m + n + 1) * (
        Fraction((m + 1) * ((m * n) ** (r // 2) - 1), m * (m * n - 1)) - Fraction(u, m)
    )
    if expected.denominator != 1 or g.n_vertices != expected.numerator:
        raise ConstructionError(
            f"violated invariant: order {g.n_vertices} != {expected}"
        )
    da, db = g.degree_sets()
    if not ((da == {n + 1} and db == {m}) or (da == {m} and db == {n + 1})):
        raise ConstructionError(
            f"violated invariant: degrees {sorted(da)}/{sorted(db)} "
            f"are not {{{m}}}/{{{n + 1}}}"
        )
    gi = girth(g)
    if gi < 2 * r:
        raise ConstructionError(
            f"violated invariant: deletion decreased girth to {gi} from {2 * r}"
        )
    g.meta["girth"] = gi
    return g


def _marquee_section(structure: IncidenceStructure, h: Hyperplane, expect_pts: int):
    field = structure.tag["field"]
    pts_in, blocks_inside, _ = hyperplane_section(
        structure.points, structure.blocks, h, field
    )
    if len(pts_in) != expect_pts:
        raise ConstructionError(
            f"violated invariant: section has {len(pts_in)} points, "
            f"expected {expect_pts}"
        )
    return pts_in, blocks_inside


def _named_q4_hyperbolic(q: int) -> BipartiteGraph:
    field = field_of_order(q)
    s = gq_q4(field)
    h = Hyperplane((1, 0, 0, 0, 0))
    _marquee_section(s, h, (q + 1) ** 2)
    g = hyperplane_delete(s, h)
    return _check_named(g, q, q + 1, 8, (2 * q + 1) * (q * q - 1), "q4-hyperbolic-prune")


def _named_q5_parabolic(q: int) -> BipartiteGraph:
    field = field_of_order(q)
    s = gq_q5(field)
    h = Hyperplane((0, 0, 0, 0, 1, 0))
    _marquee_section(s, h, q ** 3 + q * q + q + 1)
    g = hyperplane_delete(s, h)
    return _check_named(
        g, q, q * q + 1, 8, (q * q + q + 1) * (q ** 3 - q), "q5-parabolic-prune"
    )


def _named_hexagon_hyperbolic(q: int) -> BipartiteGraph:
    field = field_of_order(q)
    s = split_cayley_hexagon(field)
    h = Hyperplane((1, 0, 0, 0, 0, 0, 0))
    g = hyperplane_delete(s, h)
    # At q = 2 every hexagon 12-cycle meets the hyperbolic section, for every
    # hyperbolic hyperplane (exhaustively checked, cycle-enumeration verified):
    # the result is the subdivided Coxeter graph of girth 14.  For q >= 3 the
    # girth stays exactly 12.
    expected_girth = 14 if q == 2 else 12
    return _check_named(
        g, q, q + 1, expected_girth, (2 * q + 1) * (q ** 4 - q),
        "hexagon-hyperbolic-prune",
    )


def _named_q4_ovoid(q: int) -> BipartiteGraph:
    field = field_of_order(q)
    s = gq_q4(field)
    remaining = delete_points(s, ovoid_of_q4(field))
    g = levi(remaining, meta={"construction": "q4-ovoid-delete"})
    # At q = 2 every 8-cycle of the quadrangle meets every ovoid: what remains
    # is the subdivided Petersen graph of girth 10.  For q >= 3 some
    # quadrangle misses the ovoid and the girth stays exactly 8.
    expected_girth = 10 if q == 2 else 8
    return _check_named(
        g, q, q + 1, expected_girth, (q * q + 1) * (2 * q + 1), "q4-ovoid-delete"
    )


def _named_q5_subgq(q: int) -> BipartiteGraph:
    field = field_of_order(q)
    s = gq_q5(field)
    pts_in, blocks_inside = _marquee_section(
        s, Hyperplane((0, 0, 0, 0, 1, 0)), q ** 3 + q * q + q + 1
    )
    g = delete_subquadrangle(s, pts_in, blocks_inside)
    g.meta["construction"] = "q5-subgq-delete"
    return _check_named(
        g, q, q * q + 1, 8, (q * q + q + 1) * (q ** 3 - q), "q5-subgq-delete"
    )


def _check_named(
    g: BipartiteGraph, m: int, n: int, girth_expected: int, order: int, family: str
) -> BipartiteGraph:
    if g.n_vertices != order:
        raise ConstructionError(
            f"violated invariant: {family} order {g.n_vertices} != {order}"
        )
    rep = bb_check(g, m, n, girth_expected)
    if not rep.passed:
        raise ConstructionError(f"violated invariant: {family}: {rep.violation}")
    g.meta.update(family=family, m=m, n=n)
    return g


NAMED_FAMILIES = {
    "q4-hyperbolic-prune": _named_q4_hyperbolic,
    "q5-parabolic-prune": _named_q5_parabolic,
    "hexagon-hyperbolic-prune": _named_hexagon_hyperbolic,
    "q4-ovoid-delete": _named_q4_ovoid,
    "q5-subgq-delete": _named_q5_subgq,
}


def construct_named(family: str, q: int) -> BipartiteGraph:
    """One-call wrappers for the named deletion constructions; every output
    passes bb_check and its exact order formula or construction aborts."""
    try:
        builder = NAMED_FAMILIES[family]
    except KeyError:
        raise ValueError(
            f"unknown family {family!r}; known: {sorted(NAMED_FAMILIES)}"
        ) from None
    return builder(q)
