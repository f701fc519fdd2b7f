"""Projective geometry over GF(q): points, lines and hyperplanes of PG(d, q),
quadric point/line enumeration, hyperplane sections, and the conic oval.

Point representatives are normalized (first nonzero coordinate = 1) and listed
in lexicographic coordinate order; a point's id is its position in that list,
so every downstream structure is bit-reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .gf import Field


class GeometryError(ValueError):
    """Inconsistent geometric input (bad dimension, degenerate section, ...)."""


@dataclass(frozen=True)
class ProjectivePoint:
    id: int
    coords: tuple[int, ...]


@dataclass(frozen=True)
class Hyperplane:
    """Coefficient vector; a point lies on it iff the dot product vanishes."""

    coeffs: tuple[int, ...]


@dataclass(frozen=True)
class QuadraticForm:
    """Upper-triangular coefficient matrix of a homogeneous quadratic form."""

    dim: int
    matrix: tuple[tuple[int, ...], ...]
    tag: str


class ProjectiveSpace:
    """PG(d, q) with normalized, lexicographically ordered point list."""

    def __init__(self, d: int, field: Field):
        if d < 1:
            raise GeometryError(f"projective dimension must be >= 1, got {d}")
        self.d = d
        self.field = field
        q = field.q
        pts = []
        for lead in range(d, -1, -1):
            for tail in itertools.product(range(q), repeat=d - lead):
                pts.append((0,) * lead + (1,) + tail)
        self.points = [ProjectivePoint(i, c) for i, c in enumerate(pts)]
        self._id = {c: i for i, c in enumerate(pts)}

    def normalize(self, coords) -> tuple[int, ...]:
        F = self.field
        lead = next((c for c in coords if c != 0), None)
        if lead is None:
            raise GeometryError("cannot normalize the zero vector")
        if lead == 1:
            return tuple(coords)
        s = F.inv(lead)
        return tuple(F.mul(s, c) for c in coords)

    def id_of(self, coords) -> int:
        return self._id[self.normalize(coords)]

    def line_through(self, a_id: int, b_id: int) -> tuple[int, ...]:
        """The q+1 point ids of the line spanned by two distinct points."""
        if a_id == b_id:
            raise GeometryError("line_through needs two distinct points")
        F = self.field
        a = self.points[a_id].coords
        b = self.points[b_id].coords
        ids = [a_id, b_id]
        for lam in range(1, F.q):
            c = tuple(F.add(x, F.mul(lam, y)) for x, y in zip(a, b))
            ids.append(self._id[self.normalize(c)])
        return tuple(sorted(ids))

    def all_lines(self) -> list[tuple[int, ...]]:
        """Every line, as sorted id tuples, deduped over point pairs."""
        n = len(self.points)
        done = set()
        lines = []
        for i in range(n):
            for j in range(i + 1, n):
                if (i, j) in done:
                    continue
                line = self.line_through(i, j)
                lines.append(line)
                done.update(itertools.combinations(line, 2))
        lines.sort()
        return lines

    def hyperplanes(self) -> list[Hyperplane]:
        return [Hyperplane(p.coords) for p in self.points]

    def on_hyperplane(self, h: Hyperplane, coords) -> bool:
        F = self.field
        acc = 0
        for a, x in zip(h.coeffs, coords):
            acc = F.add(acc, F.mul(a, x))
        return acc == 0


@lru_cache(maxsize=None)
def projective_space(d: int, field: Field) -> ProjectiveSpace:
    return ProjectiveSpace(d, field)


def pg_points(d: int, field: Field) -> list[ProjectivePoint]:
    """All points of PG(d, q), 2 <= d <= 6."""
    if not 2 <= d <= 6:
        raise GeometryError(f"supported dimensions are 2..6, got {d}")
    return projective_space(d, field).points


def evaluate_form(form: QuadraticForm, coords, field: Field) -> int:
    acc = 0
    for i, row in enumerate(form.matrix):
        xi = coords[i]
        if xi == 0:
            continue
        for j in range(i, form.dim + 1):
            m = row[j]
            if m:
                acc = field.add(acc, field.mul(m, field.mul(xi, coords[j])))
    return acc


def _blank(d: int) -> list[list[int]]:
    return [[0] * (d + 1) for _ in range(d + 1)]


def parabolic_form(d: int, field: Field) -> QuadraticForm:
    """X0^2 + X1X2 + X3X4 (+ X5X6) in PG(4, q) or PG(6, q)."""
    if d not in (4, 6):
        raise GeometryError(f"parabolic form defined for d in {{4, 6}}, got {d}")
    m = _blank(d)
    m[0][0] = 1
    for i in range(1, d, 2):
        m[i][i + 1] = 1
    return QuadraticForm(d, tuple(tuple(r) for r in m), f"parabolic-{d}")


def elliptic_form(field: Field) -> QuadraticForm:
    """X0X1 + X2X3 + g(X4, X5) with g the smallest irreducible binary quadratic."""
    b, c = _smallest_anisotropic_pair(field)
    m = _blank(5)
    m[0][1] = 1
    m[2][3] = 1
    m[4][4] = 1
    m[4][5] = b
    m[5][5] = c
    return QuadraticForm(5, tuple(tuple(r) for r in m), "elliptic-5")


def _smallest_anisotropic_pair(field: Field) -> tuple[int, int]:
    # first (b, c) with t^2 + b*t + c having no root, so x^2 + bxy + cy^2
    # vanishes only at (0, 0)
    for b in range(field.q):
        for c in range(field.q):
            if all(
                field.add(field.add(field.mul(t, t), field.mul(b, t)), c) != 0
                for t in range(field.q)
            ):
                return b, c
    raise GeometryError(f"no irreducible binary quadratic over {field}")


def form_by_tag(tag: str, field: Field) -> QuadraticForm:
    if tag == "parabolic-4":
        return parabolic_form(4, field)
    if tag == "parabolic-6":
        return parabolic_form(6, field)
    if tag == "elliptic-5":
        return elliptic_form(field)
    raise GeometryError(f"unknown quadric tag {tag!r}")


def quadric_points(form: QuadraticForm, field: Field) -> list[ProjectivePoint]:
    """All projective points with Q(x) = 0, keeping their PG(d, q) ids."""
    space = projective_space(form.dim, field)
    return [p for p in space.points if evaluate_form(form, p.coords, field) == 0]


def quadric_lines(form: QuadraticForm, field: Field) -> list[tuple[int, ...]]:
    """Lines of PG(d, q) fully contained in the quadric, as sorted id tuples.

    Enumerated by scanning collinear quadric-point pairs with dedup.
    """
    space = projective_space(form.dim, field)
    pts = quadric_points(form, field)
    on = {p.id for p in pts}
    ids = [p.id for p in pts]
    done = set()
    lines = []
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            if (a, b) in done:
                continue
            line = space.line_through(a, b)
            if all(x in on for x in line):
                lines.append(line)
                done.update(itertools.combinations(line, 2))
    lines.sort()
    return lines


def hyperplane_section(
    point_coords: list[tuple[int, ...]],
    blocks: list[tuple[int, ...]],
    h: Hyperplane,
    field: Field,
) -> tuple[list[int], list[int], list[int]]:
    """Classify a coordinatized structure against a hyperplane.

    Returns (point indices on h, block indices fully inside h, block indices
    meeting h in exactly one point).  Any block meeting h in between 2 and
    size-1 points is a geometric violation and raises.
    """
    inside_pts = []
    acc_on = set()
    for i, coords in enumerate(point_coords):
        s = 0
        for a, x in zip(h.coeffs, coords):
            s = field.add(s, field.mul(a, x))
        if s == 0:
            inside_pts.append(i)
            acc_on.add(i)
    blocks_inside, blocks_tangent = [], []
    for bi, blk in enumerate(blocks):
        cnt = sum(1 for x in blk if x in acc_on)
        if cnt == len(blk):
            blocks_inside.append(bi)
        elif cnt == 1:
            blocks_tangent.append(bi)
        else:
            raise GeometryError(
                f"block {bi} meets the hyperplane in {cnt} of {len(blk)} points"
            )
    return inside_pts, blocks_inside, blocks_tangent


def conic_oval(field: Field) -> list[ProjectivePoint]:
    """The q+1 conic points {(1, t, t^2)} + {(0, 0, 1)} of PG(2, q); no three
    are collinear (asserted)."""
    space = projective_space(2, field)
    ids = [space.id_of((1, t, field.mul(t, t))) for t in range(field.q)]
    ids.append(space.id_of((0, 0, 1)))
    pts = [space.points[i] for i in sorted(ids)]
    for a, b, c in itertools.combinations(range(len(pts)), 3):
        if pts[c].id in space.line_through(pts[a].id, pts[b].id):
            raise GeometryError("conic produced three collinear points")
    return pts
