"""Brute-force oracles and frozen expected values.

Everything here is written independently of the package code so that the
tests compare two implementations.
"""

from __future__ import annotations

from itertools import combinations, permutations

# frozen values ------------------------------------------------------------

# base-cobase counts of the rank-n wheel and whirl
WHEEL_BC = {n: 2 * (2**n - 2) for n in range(3, 9)}
WHIRL_BC = {n: 2 ** (n + 1) - 2 for n in range(3, 9)}

# spanning trees of the wheel graph with n spokes (Lucas L_{2n} - 2)
WHEEL_BASES = {3: 16, 4: 45, 5: 121, 6: 320, 7: 841}

R10_BASES = 162
R10_BC = 72
R10_S2 = 60
R10_D5 = 12
R10_CIRCUITS = {4: 15, 6: 15}

# BFS distance between v+ and v- for the block vector v
LOWER_BOUND = {3: 1, 4: 3, 5: 3, 6: 3, 7: 3, 8: 5, 12: 7}

WHIRL5_DIAMETER = 5


# brute force ----------------------------------------------------------------


def to_set(mask: int) -> frozenset:
    return frozenset(i for i in range(mask.bit_length()) if (mask >> i) & 1)


def to_mask(s) -> int:
    m = 0
    for i in s:
        m |= 1 << i
    return m


def forest_rank(edges, subset) -> int:
    """Size of a spanning forest of the chosen edges, by plain DFS."""
    adj: dict = {}
    for i in subset:
        u, v = edges[i]
        if u == v:
            continue
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    seen: set = set()
    comps = 0
    for s in adj:
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(adj) - comps


def gf2_rank_columns(columns) -> int:
    """Rank over GF(2) of a list of column vectors given as tuples."""
    rows = [list(c) for c in columns]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def bases_by_rank(n: int, rank_of) -> list[int]:
    full = rank_of(frozenset(range(n)))
    return sorted(to_mask(c) for c in combinations(range(n), full) if rank_of(frozenset(c)) == full)


def bc_of(n: int, bases) -> list[int]:
    fam = set(bases)
    full = (1 << n) - 1
    return sorted(b for b in fam if full ^ b in fam)


def exchange_ok(bases) -> bool:
    fam = set(bases)
    for B in fam:
        for B2 in fam:
            for e in to_set(B & ~B2):
                if not any(((B & ~(1 << e)) | (1 << f)) in fam for f in to_set(B2 & ~B)):
                    return False
    return True


def wheel_graph_edges(n: int) -> list[tuple[int, int]]:
    """Rim i joins v_i, v_{i+1}; spoke i joins the hub 0 and v_i; rim then spoke."""
    out = []
    for i in range(1, n + 1):
        out.append((i, i % n + 1))
        out.append((0, i))
    return out


def ham_path_exists(adj: dict, s, t) -> bool:
    """Exhaustive check on tiny graphs."""
    verts = [v for v in adj if v not in (s, t)]
    for order in permutations(verts):
        path = (s, *order, t)
        if all(b in adj[a] for a, b in zip(path, path[1:])):
            return True
    return False


def bfs(adj: dict, s) -> dict:
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


def r10_columns() -> list[tuple[int, ...]]:
    triples = list(combinations(range(1, 6), 3))
    return [tuple(1 if i in t else 0 for i in range(1, 6)) for t in triples]
