"""Steiner systems: triple-system generation (Bose / Skolem), validation,
point truncation to girth-6 biregular cages, and a line-oriented file format.

File format: first line "v b k" (ASCII decimals), then b lines of k
space-separated 0-based point indices, each line ascending, LF-terminated.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .graphs import BipartiteGraph, bb_check, levi
from .incidence import IncidenceStructure
from .polygons import ConstructionError


class DesignError(ValueError):
    pass


@dataclass(frozen=True)
class Design:
    v: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.blocks[0]) if self.blocks else 0

    @property
    def b(self) -> int:
        return len(self.blocks)

    def to_structure(self) -> IncidenceStructure:
        return IncidenceStructure(
            [None] * self.v, self.blocks, tag={"family": "design", "v": self.v}
        )


@dataclass
class DesignReport:
    valid: bool
    uniform_block_size: bool
    pair_coverage: bool
    uniform_replication: bool
    problems: list = dc_field(default_factory=list)


def _half_label(n2: int):
    """Permutation of Z_{2n} relabeling the cyclic addition table so the
    diagonal reads 0..n-1, 0..n-1 (half-idempotent commutative quasigroup)."""
    out = [0] * n2
    n = n2 // 2
    for h in range(n):
        out[2 * h] = h
        out[2 * h + 1] = n + h
    return out


def sts_generate(v: int) -> Design:
    """A Steiner triple system on v points, v = 1 or 3 (mod 6), v >= 7.

    Bose construction for v = 3 (mod 6), Skolem for v = 1 (mod 6); the output
    always passes design_validate.
    """
    if v < 7 or v % 6 not in (1, 3):
        raise DesignError(f"no Steiner triple system on {v} points")
    blocks = []
    if v % 6 == 3:
        n = (v - 3) // 6
        g = 2 * n + 1
        half = n + 1  # (i + j) * (n+1) halves i + j mod 2n+1

        def pt(i, c):
            return 3 * i + c

        for i in range(g):
            blocks.append((pt(i, 0), pt(i, 1), pt(i, 2)))
        for i in range(g):
            for j in range(i + 1, g):
                h = ((i + j) * half) % g
                for c in range(3):
                    blocks.append(tuple(sorted((pt(i, c), pt(j, c), pt(h, (c + 1) % 3)))))
    else:
        n = (v - 1) // 6
        g = 2 * n
        label = _half_label(g)
        inf = v - 1

        def pt(i, c):
            return 3 * i + c

        for i in range(n):
            blocks.append((pt(i, 0), pt(i, 1), pt(i, 2)))
        for i in range(n):
            for c in range(3):
                blocks.append(tuple(sorted((inf, pt(n + i, c), pt(i, (c + 1) % 3)))))
        for i in range(g):
            for j in range(i + 1, g):
                h = label[(i + j) % g]
                for c in range(3):
                    blocks.append(tuple(sorted((pt(i, c), pt(j, c), pt(h, (c + 1) % 3)))))
    design = Design(v, tuple(sorted(blocks)))
    report = design_validate(design)
    if not report.valid:
        raise ConstructionError(f"generated triple system is invalid: {report.problems}")
    return design


def design_validate(design: Design) -> DesignReport:
    """Check uniform block size, every point pair covered exactly once, and
    uniform replication; violations are reported, not raised."""
    problems = []
    sizes = {len(b) for b in design.blocks}
    uniform = len(sizes) == 1
    if not uniform:
        problems.append(f"block sizes {sorted(sizes)} are not uniform")
    pair_count = {}
    for blk in design.blocks:
        for a_i in range(len(blk)):
            for b_i in range(a_i + 1, len(blk)):
                key = (blk[a_i], blk[b_i])
                pair_count[key] = pair_count.get(key, 0) + 1
    multi = sorted(k for k, c in pair_count.items() if c > 1)
    uncovered = []
    for a in range(design.v):
        for b in range(a + 1, design.v):
            if (a, b) not in pair_count:
                uncovered.append((a, b))
    pair_ok = not multi and not uncovered
    if multi:
        problems.append(f"pairs covered more than once: {multi[:10]}")
    if uncovered:
        problems.append(f"uncovered pairs: {uncovered[:10]}")
    reps = [0] * design.v
    for blk in design.blocks:
        for x in blk:
            reps[x] += 1
    rep_ok = len(set(reps)) == 1
    if not rep_ok:
        problems.append(f"replication numbers {sorted(set(reps))} are not uniform")
    return DesignReport(
        valid=uniform and pair_ok and rep_ok,
        uniform_block_size=uniform,
        pair_coverage=pair_ok,
        uniform_replication=rep_ok,
        problems=problems,
    )


def steiner_truncate(design: Design, point: int = 0) -> BipartiteGraph:
    """Delete one point and every block through it; the incidence graph of the
    remainder is an (m, n; 6) biregular graph of order (n/m + 1)(n+1)(m-1)
    where m is the block size and n = replication - 1.

    Requires m <= n and n = -1 (mod m).
    """
    if not 0 <= point < design.v:
        raise DesignError(f"point {point} out of range")
    m = design.k
    if m < 3:
        raise DesignError("block size must be at least 3")
    if (design.v - 1) % (m - 1):
        raise DesignError(f"replication (v-1)/(k-1) is not integral for v={design.v}")
    r = (design.v - 1) // (m - 1)
    n = r - 1
    if m > n:
        raise DesignError(f"needs block size <= truncated degree, got m={m} > n={n}")
    if (n + 1) % m:
        raise DesignError(f"needs n = -1 (mod m): n={n}, m={m}")
    kept = []
    for blk in design.blocks:
        if point in blk:
            continue
        kept.append(tuple(x - (x > point) for x in blk))
    structure = IncidenceStructure(
        [None] * (design.v - 1),
        kept,
        tag={"family": "steiner-truncated", "m": m, "n": n},
    )
    g = levi(structure, meta={"construction": "steiner-cage", "m": m, "n": n})
    order = (n + m) * ((n + 1) // m) * (m - 1)
    if g.n_vertices != order:
        raise ConstructionError(
            f"violated invariant: truncation order {g.n_vertices} != {order}"
        )
    rep = bb_check(g, m, n, 6)
    if not rep.passed:
        raise ConstructionError(f"violated invariant: {rep.violation}")
    return g


def design_save(design: Design) -> str:
    lines = [f"{design.v} {design.b} {design.k}"]
    for blk in design.blocks:
        lines.append(" ".join(str(x) for x in blk))
    return "\n".join(lines) + "\n"


def design_load(text: str) -> Design:
    """Parse the design file format; syntactic checks only (run
    design_validate for the combinatorial ones)."""
    lines = [ln for ln in text.splitlines()]
    if not lines:
        raise DesignError("empty design file")
    head = lines[0].split()
    if len(head) != 3:
        raise DesignError(f"malformed header {lines[0]!r}, expected 'v b k'")
    try:
        v, b, k = (int(x) for x in head)
    except ValueError as exc:
        raise DesignError(f"malformed header {lines[0]!r}") from exc
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != b:
        raise DesignError(f"expected {b} blocks, found {len(body)}")
    blocks = []
    for ln in body:
        try:
            ids = tuple(sorted(int(x) for x in ln.split()))
        except ValueError as exc:
            raise DesignError(f"malformed block line {ln!r}") from exc
        if len(ids) != k:
            raise DesignError(f"block {ln!r} does not have {k} entries")
        if len(set(ids)) != k:
            raise DesignError(f"block {ln!r} repeats a point")
        if any(not 0 <= x < v for x in ids):
            raise DesignError(f"block {ln!r} has an index out of range")
        blocks.append(ids)
    return Design(v, tuple(blocks))
