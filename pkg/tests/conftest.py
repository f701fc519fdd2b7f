"""Shared test oracles, kept independent of the library's own algorithms."""

from __future__ import annotations


def brute_girth(graph, cap: int = 24):
    """Girth by exhaustive simple-cycle enumeration (DFS with canonical
    smallest-vertex root), independent of the BFS girth routine.

    Returns None when no cycle of length <= cap exists.
    """
    adj = graph.adjacency()
    n = len(adj)
    best = cap + 1
    for s in range(n):
        stack = [(s, 1, {s})]
        while stack:
            x, plen, seen = stack.pop()
            for y in adj[x]:
                if y == s and plen >= 3:
                    if plen < best:
                        best = plen
                elif y > s and y not in seen and plen < best - 1:
                    stack.append((y, plen + 1, seen | {y}))
    return best if best <= cap else None


def edge_count_conserved(graph) -> bool:
    """m * |larger class| == n * |smaller class| accounting for biregularity."""
    da, db = graph.degree_sets()
    if len(da) != 1 or len(db) != 1:
        return False
    return graph.n_a * next(iter(da)) == graph.n_b * next(iter(db))


def tree_count_oracle(m: int, n: int, r: int) -> int:
    """Independent odd-case bound: explicit power-formula terms (the code path
    under test uses a level recurrence instead)."""
    total = 1 + n
    for i in range(1, (r - 1) // 2 + 1):
        total += n * (m - 1) ** i * (n - 1) ** (i - 1)  # even level 2i
        if 2 * i + 1 <= r - 1:
            total += n * (m - 1) ** i * (n - 1) ** i  # odd level 2i+1
    top = n * (m - 1) ** ((r - 1) // 2) * (n - 1) ** ((r - 1) // 2)
    total += -(-top // m)
    if top % m:
        total += -(-n // m)
    return total
