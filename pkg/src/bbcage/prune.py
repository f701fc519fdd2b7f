"""Prunes of generalized-polygon incidence graphs and direct affine
constructions.

The prunes keep carefully chosen distance sets around an anchor edge of a
certified polygon's incidence graph; the affine constructions build girth-8
and girth-6 biregular graphs from a slab of planes in PG(3, p) and from
horizontal lines of AG(2, p).
"""

from __future__ import annotations

from collections import deque

from .bounds import moore_odd
from .gf import Field
from .graphs import (
    BipartiteGraph,
    bb_check,
    bfs_distances,
    diameter,
    girth,
    induced_subgraph,
    is_connected,
    levi,
)
from .incidence import IncidenceStructure
from .polygons import ConstructionError
from .projective import GeometryError, conic_oval, projective_space


def _certify_prune_host(g: BipartiteGraph) -> int:
    """Require a connected biregular host with girth = 2 * diameter (the
    incidence graph of a generalized r-gon); returns r."""
    da, db = g.degree_sets()
    if len(da) != 1 or len(db) != 1:
        raise ValueError(f"host is not biregular: degrees {sorted(da)}/{sorted(db)}")
    if not is_connected(g):
        raise ValueError("host graph is disconnected")
    r = diameter(g)
    if girth(g) != 2 * r:
        raise ValueError(f"host girth {girth(g)} != 2 * diameter {2 * r}")
    return r


def _default_edge(g: BipartiteGraph) -> tuple[int, int]:
    """Lexicographically first edge, oriented so the second endpoint is the
    smaller-degree one (ties keep the block-side endpoint second)."""
    adj = g.adjacency()
    u = 0
    v = adj[0][0]
    if len(adj[u]) < len(adj[v]):
        u, v = v, u
    return u, v


def induced_branch_graph(
    g: BipartiteGraph, m1: int, n1: int, edge: tuple[int, int] | None = None
) -> BipartiteGraph:
    """Induced subgraph on the deepest distance sets of m1 branch roots at one
    end of an anchor edge and n1 at the other (the anchor partner may be the
    last root on a side whose opposite side is taken in full).

    For a host that certifies as an r-gon of order (s, t) this is an
    (m1, n1; 2r) biregular graph on (m1 + n1) * (st)^(r/2 - 1) vertices; the
    order must stay below the odd-case bound at girth 2(r+1), which forces the
    girth back down to 2r.
    """
    r = _certify_prune_host(g)
    adj = g.adjacency()
    u, v = edge if edge is not None else _default_edge(g)
    if v not in adj[u]:
        raise ValueError(f"anchor ({u}, {v}) is not an edge")
    if not 2 <= m1 <= n1:
        raise ValueError(f"need 2 <= m1 <= n1, got ({m1}, {n1})")
    branches_v = [w for w in adj[v] if w != u]
    branches_u = [w for w in adj[u] if w != v]
    # The anchor partner can serve as one extra branch root (its distance set
    # has the same cardinality), but only when the opposite side takes all of
    # its own genuine branches, else that set picks up short-degree vertices.
    roots_v = branches_v[:m1]
    roots_u = branches_u[:n1]
    if m1 == len(branches_v) + 1 and n1 == len(branches_u):
        roots_v = branches_v + [u]
    elif n1 == len(branches_u) + 1 and m1 == len(branches_v):
        roots_u = branches_u + [v]
    elif m1 > len(branches_v) or n1 > len(branches_u):
        raise ValueError(
            f"need m1 <= {len(branches_v)} and n1 <= {len(branches_u)} "
            f"(one more on a side only when the other side is full), "
            f"got ({m1}, {n1})"
        )
    s = len(adj[v]) - 1
    t = len(adj[u]) - 1
    order = (m1 + n1) * (s * t) ** (r // 2 - 1)
    ceiling = moore_odd(m1, n1, r + 1)
    if order >= ceiling:
        raise ValueError(
            f"hypothesis fails: order {order} is not below the girth-{2 * (r + 1)} "
            f"bound {ceiling}"
        )
    dist_v = bfs_distances(adj, v)
    dist_u = bfs_distances(adj, u)
    keep = set()
    for root in roots_v:
        d = bfs_distances(adj, root)
        keep.update(
            w for w in range(len(adj)) if dist_v[w] == r - 1 and d[w] == r - 2
        )
    for root in roots_u:
        d = bfs_distances(adj, root)
        keep.update(
            w for w in range(len(adj)) if dist_u[w] == r - 1 and d[w] == r - 2
        )
    out = induced_subgraph(
        g, keep, meta={"construction": "branch-prune", "m1": m1, "n1": n1}
    )
    if out.n_vertices != order:
        raise ConstructionError(
            f"violated invariant: branch prune order {out.n_vertices} != {order}"
        )
    rep = bb_check(out, m1, n1, 2 * r)
    if not rep.passed:
        raise ConstructionError(f"violated invariant: {rep.violation}")
    return out


def mixed_degree_prune(
    g: BipartiteGraph, edge: tuple[int, int] | None = None
) -> BipartiteGraph:
    """Prune a certified r-gon incidence graph of order (s, t) down to an
    (s, t+1; 2r) biregular graph on (st)^(r/2 - 1) * (s + t + 1) vertices.

    Keeps three distance shells along the anchor edge (u, v) plus the two
    deepest shells of every branch at v except the first; the degree contract
    is verified by measurement and any failure aborts loudly.  Swapping the
    anchor orientation yields the (s+1, t; 2r) twin.
    """
    r = _certify_prune_host(g)
    adj = g.adjacency()
    u, v = edge if edge is not None else _default_edge(g)
    if v not in adj[u]:
        raise ValueError(f"anchor ({u}, {v}) is not an edge")
    s = len(adj[v]) - 1
    t = len(adj[u]) - 1
    dist_u = bfs_distances(adj, u)
    dist_v = bfs_distances(adj, v)
    nv = len(adj)
    keep = set()
    for j in (1, 2, 3):
        keep.update(
            w
            for w in range(nv)
            if dist_u[w] == r - j and dist_v[w] == r + 1 - j
        )
    for root in [w for w in adj[v] if w != u][1:]:
        d = bfs_distances(adj, root)
        keep.update(
            w for w in range(nv) if dist_v[w] == r - 1 and d[w] == r - 2
        )
        keep.update(
            w for w in range(nv) if dist_v[w] == r - 2 and d[w] == r - 3
        )
    out = induced_subgraph(g, keep, meta={"construction": "mixed-prune"})
    order = (s * t) ** (r // 2 - 1) * (s + t + 1)
    if out.n_vertices != order:
        raise ConstructionError(
            f"violated invariant: mixed prune order {out.n_vertices} != {order}"
        )
    rep = bb_check(out, s, t + 1, 2 * r)
    if not rep.passed:
        raise ConstructionError(f"violated invariant: {rep.violation}")
    return out


def find_free_edge(structure: IncidenceStructure) -> tuple[int, int]:
    """In a generalized quadrangle of order (s, t) with s, t >= 3, find an
    incident (point, line) pair where the point is collinear with no vertex of
    some proper quadrangle and the line meets none of its sides.

    Returns (point index, block index), the anchor for induced_branch_graph.
    """
    sizes = structure.block_sizes()
    degs = structure.point_degrees()
    if len(sizes) != 1 or len(degs) != 1:
        raise ValueError("structure is not an order-uniform quadrangle")
    s = next(iter(sizes)) - 1
    t = next(iter(degs)) - 1
    if s < 3 or t < 3:
        raise ValueError(f"needs order at least (3, 3), got ({s}, {t})")
    g = levi(structure)
    adj = g.adjacency()
    cycle = _girth_cycle_through(adj, 0, 8)
    pts = [x for x in cycle if x < g.n_a]
    sides = [x - g.n_a for x in cycle if x >= g.n_a]
    if len(pts) != 4 or len(sides) != 4:
        raise ConstructionError("quadrangle search produced a bad girth cycle")
    near = set()
    for p in pts:
        for bi in structure.point_blocks[p]:
            near.update(structure.blocks[bi])
    side_points = set()
    for bi in sides:
        side_points.update(structure.blocks[bi])
    for e_point in range(structure.num_points):
        if e_point in near:
            continue
        for bi in structure.point_blocks[e_point]:
            if not side_points.intersection(structure.blocks[bi]):
                return e_point, bi
    raise ConstructionError("no free incident point-line pair found")


def _girth_cycle_through(adj, root: int, length: int) -> list[int]:
    """Vertices of a cycle of the given length through root, via BFS parents."""
    n = len(adj)
    dist = [-1] * n
    parent = [-1] * n
    dist[root] = 0
    q = deque([root])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                parent[y] = x
                q.append(y)
            elif y != parent[x] and dist[x] + dist[y] + 1 == length:
                path_x = []
                w = x
                while w != -1:
                    path_x.append(w)
                    w = parent[w]
                path_y = []
                w = y
                while w != -1:
                    path_y.append(w)
                    w = parent[w]
                if set(path_x).intersection(path_y) != {root}:
                    continue
                return path_x[::-1] + path_y[:-1]
    raise ConstructionError(f"no cycle of length {length} through vertex {root}")


def affine_slab_graph(
    field: Field, m1: int, n1: int, arc: list[int] | None = None
) -> BipartiteGraph:
    """Girth-8 biregular graph from PG(3, p), p prime: V1 is the affine point
    set of m1 planes through a line of the ideal plane disjoint from a conic,
    V2 the affine lines through n1 conic points (or a supplied ideal arc);
    degrees are (n1, m1) with |V1| = m1*p^2 and |V2| = n1*p^2.
    """
    if field.k != 1:
        raise ValueError("slab construction needs a prime field")
    p = field.p
    if not 2 <= m1 <= p:
        raise ValueError(f"need 2 <= m1 <= {p}, got {m1}")
    space = projective_space(3, field)
    ideal = [pt.id for pt in space.points if pt.coords[0] == 0]
    ideal_set = set(ideal)
    affine = [pt.id for pt in space.points if pt.coords[0] != 0]
    oval = [space.id_of((0,) + pt.coords) for pt in conic_oval(field)]
    if arc is None:
        if not 2 <= n1 <= p + 1:
            raise ValueError(f"need 2 <= n1 <= {p + 1} conic points, got {n1}")
        chosen = oval[:n1]
    else:
        chosen = list(arc)
        if len(chosen) != n1 or len(set(chosen)) != n1 or n1 < 2:
            raise ValueError("arc must list n1 distinct ideal point ids")
        if any(x not in ideal_set for x in chosen):
            raise ValueError("arc points must be ideal (first coordinate 0)")
        for i in range(n1):
            for j in range(i + 1, n1):
                line = space.line_through(chosen[i], chosen[j])
                if any(x in line for x in chosen if x not in (chosen[i], chosen[j])):
                    raise ValueError("arc has three collinear points")
    # first ideal line disjoint from the source oval (or the supplied arc)
    chosen_set = set(chosen)
    targets = set(oval) if arc is None else chosen_set
    ell = None
    seen = set()
    for i, a in enumerate(ideal):
        for b in ideal[i + 1 :]:
            if (a, b) in seen:
                continue
            line = space.line_through(a, b)
            seen.update(
                (x, y) for xi, x in enumerate(line) for y in line[xi + 1 :]
            )
            if not targets.intersection(line):
                ell = line
                break
        if ell:
            break
    if ell is None:
        raise ConstructionError("no ideal line disjoint from the conic found")
    ell_pts = [space.points[x].coords for x in ell[:2]]
    planes = [
        h
        for h in space.hyperplanes()
        if h.coeffs != (1, 0, 0, 0)
        and all(space.on_hyperplane(h, c) for c in ell_pts)
    ]
    if len(planes) != p:
        raise ConstructionError(f"expected {p} slab planes, found {len(planes)}")
    slab: list[int] = []
    for h in planes[:m1]:
        slab.extend(
            x for x in affine if space.on_hyperplane(h, space.points[x].coords)
        )
    if len(slab) != m1 * p * p or len(set(slab)) != len(slab):
        raise ConstructionError("slab planes do not partition their affine points")
    slab.sort()
    slab_index = {x: i for i, x in enumerate(slab)}
    blocks = []
    for point_id in chosen:
        direction = space.points[point_id].coords
        covered = set()
        for a in affine:
            if a in covered:
                continue
            base = space.points[a].coords
            members = []
            for lam in range(p):
                c = tuple(
                    field.add(x, field.mul(lam, y)) for x, y in zip(base, direction)
                )
                members.append(space.id_of(c))
            covered.update(members)
            blocks.append(tuple(sorted(members)))
    adj = [[] for _ in range(len(slab))]
    for bi, members in enumerate(blocks):
        hits = [slab_index[x] for x in members if x in slab_index]
        if len(hits) != m1:
            raise ConstructionError(
                f"affine line meets the slab in {len(hits)} points, expected {m1}"
            )
        for a_local in hits:
            adj[a_local].append(bi)
    g = BipartiteGraph(
        len(slab),
        len(blocks),
        adj,
        meta={"construction": "t2-slab", "p": p, "m1": m1, "n1": n1},
    )
    da, db = g.degree_sets()
    if da != {n1} or db != {m1}:
        raise ConstructionError(
            f"violated invariant: slab degrees {sorted(da)}/{sorted(db)}"
        )
    return g


def affine_girth6_graph(field: Field, m1: int, n1: int) -> BipartiteGraph:
    """Bipartite graph from AG(2, p), p prime: V1 the points of m1 horizontal
    lines, V2 the affine lines through n1 non-horizontal directions; degrees
    (n1, m1), no 4-cycles.  Girth is measured, exactly 6 once triangles fit
    (m1, n1 >= 3)."""
    if field.k != 1:
        raise ValueError("affine construction needs a prime field")
    p = field.p
    if not 2 <= m1 <= p:
        raise ValueError(f"only {p} horizontal lines are affine, got m1={m1}")
    if not 2 <= n1 <= p:
        raise ValueError(f"only {p} non-horizontal directions exist, got n1={n1}")
    slopes: list[int | None] = list(range(1, p)) + [None]  # None is vertical
    chosen = slopes[:n1]
    n_points = m1 * p

    def pid(x: int, y: int) -> int:
        return y * p + x

    blocks = []
    for s in chosen:
        if s is None:
            for c in range(p):
                blocks.append(tuple(pid(c, y) for y in range(m1)))
        else:
            for b in range(p):
                members = []
                for y in range(m1):
                    # x with s*x + b = y
                    x = field.mul(field.inv(s), field.sub(y, b))
                    members.append(pid(x, y))
                blocks.append(tuple(sorted(members)))
    adj = [[] for _ in range(n_points)]
    for bi, members in enumerate(blocks):
        for a in members:
            adj[a].append(bi)
    g = BipartiteGraph(
        n_points,
        len(blocks),
        adj,
        meta={"construction": "ag2-girth6", "p": p, "m1": m1, "n1": n1},
    )
    da, db = g.degree_sets()
    if da != {n1} or db != {m1}:
        raise ConstructionError(
            f"violated invariant: affine degrees {sorted(da)}/{sorted(db)}"
        )
    return g
