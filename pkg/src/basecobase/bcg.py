"""Base graphs, base-cobase graphs, and the property checks run on them."""

from __future__ import annotations

import time
from collections import deque
from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from . import hamsearch
from .masks import MAX_GROUND, bits, full_mask, popcount, to_bitstring
from .matroid import (
    DEFAULT_BUDGET,
    BaseFamily,
    Matroid,
    base_cobases,
    enumerate_bases,
    exchange_violation,
)

HOLDS = "Holds"
FAILS = "Fails"
UNKNOWN = "Unknown"

DEFAULT_HAM_CAP = 100


class IndexedGraph:
    """Simple undirected graph on ``vertices`` with neighbour index lists."""

    def __init__(self, vertices: Sequence[Hashable], adjacency: Sequence[Sequence[int]]):
        self.vertices = tuple(vertices)
        self.adjacency = tuple(tuple(sorted(a)) for a in adjacency)
        self.index = {v: i for i, v in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nb in enumerate(self.adjacency) for j in nb if i < j]

    def edge_set(self) -> set[frozenset]:
        return {frozenset((self.vertices[i], self.vertices[j])) for i, j in self.edges()}

    def neighbor_map(self) -> dict:
        return {v: [self.vertices[j] for j in self.adjacency[i]] for i, v in enumerate(self.vertices)}

    def distances_from(self, src: int) -> list[int]:
        dist = [-1] * len(self.vertices)
        dist[src] = 0
        q = deque([src])
        while q:
            x = q.popleft()
            for y in self.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    q.append(y)
        return dist

    def two_coloring(self) -> list[int] | None:
        """A proper 2-colouring, or ``None`` when an odd cycle exists."""
        color = [-1] * len(self.vertices)
        for s in range(len(self.vertices)):
            if color[s] >= 0:
                continue
            color[s] = 0
            q = deque([s])
            while q:
                x = q.popleft()
                for y in self.adjacency[x]:
                    if color[y] < 0:
                        color[y] = 1 - color[x]
                        q.append(y)
                    elif color[y] == color[x]:
                        return None
        return color

    def label(self, i: int) -> str:
        return str(self.vertices[i])

    def to_dot(self, name: str = "G", attrs: Callable[[int], str] | None = None) -> str:
        lines = [f"graph {name} {{"]
        for i in range(len(self.vertices)):
            extra = attrs(i) if attrs else ""
            sep = ", " if extra else ""
            lines.append(f'  v{i} [label="{self.label(i)}"{sep}{extra}];')
        for i, j in self.edges():
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


class BCGraph(IndexedGraph):
    """Graph on subset masks, adjacent iff the symmetric difference has size 2."""

    def __init__(self, n: int, masks: Sequence[int], kind: str = "raw", adjacency=None):
        if n > MAX_GROUND:
            raise ValueError(f"mask width {n} exceeds {MAX_GROUND}")
        masks = tuple(masks)
        if adjacency is None:
            adjacency = _delta2_adjacency(n, masks)
        super().__init__(masks, adjacency)
        self.n = n
        self.kind = kind

    def label(self, i: int) -> str:
        return to_bitstring(self.vertices[i], self.n)


def _delta2_adjacency(n: int, masks: Sequence[int]) -> list[list[int]]:
    index = {m: i for i, m in enumerate(masks)}
    sizes = {popcount(m) for m in masks}
    adj: list[list[int]] = [[] for _ in masks]
    if len(sizes) == 1:
        full = full_mask(n)
        for i, m in enumerate(masks):
            outside = full & ~m
            for e in bits(m):
                base = m & ~(1 << e)
                for f in bits(outside):
                    j = index.get(base | (1 << f))
                    if j is not None:
                        adj[i].append(j)
    else:
        for i, j in combinations(range(len(masks)), 2):
            if popcount(masks[i] ^ masks[j]) == 2:
                adj[i].append(j)
                adj[j].append(i)
    return adj


def build_base_graph(M: Matroid, budget: int = DEFAULT_BUDGET) -> BCGraph:
    return BCGraph(M.n, enumerate_bases(M, budget).masks, kind="BaseGraph")


def build_bc_graph(M: Matroid, budget: int = DEFAULT_BUDGET) -> BCGraph:
    return BCGraph(M.n, base_cobases(M, budget).masks, kind="BaseCobaseGraph")


def graph_of_family(F: BaseFamily, kind: str = "BaseGraph") -> BCGraph:
    return BCGraph(F.n, F.masks, kind=kind)


def check_delta2(G: BCGraph) -> bool:
    """Exhaustive check that adjacency is exactly the size-2 difference relation."""
    expected = set()
    for i, j in combinations(range(len(G)), 2):
        if popcount(G.vertices[i] ^ G.vertices[j]) == 2:
            expected.add((i, j))
    return expected == set(G.edges())


@dataclass
class PropertyReport:
    property: str
    verdict: str
    witness: object = None
    elapsed_ms: float = 0.0
    nodes_expanded: int = 0
    details: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_json(self) -> dict:
        out = {
            "property": self.property,
            "verdict": self.verdict,
            "witness": self.witness,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "nodes_expanded": self.nodes_expanded,
        }
        out.update(self.details)
        return out


def _nonempty(G: IndexedGraph) -> None:
    if len(G) == 0:
        raise ValueError("empty graph: the matroid has no base-cobases")


def _mask_label(G: IndexedGraph, i: int) -> str:
    return G.label(i)


def check_con(G: IndexedGraph) -> PropertyReport:
    t0 = time.perf_counter()
    _nonempty(G)
    dist = G.distances_from(0)
    missing = [i for i, d in enumerate(dist) if d < 0]
    ms = (time.perf_counter() - t0) * 1e3
    if missing:
        return PropertyReport("Con", FAILS, [G.label(0), G.label(missing[0])], ms)
    return PropertyReport("Con", HOLDS, None, ms)


def _complement_distances(M: Matroid, G: BCGraph) -> list[tuple[int, int]]:
    full = full_mask(M.n)
    out = []
    for i, B in enumerate(G.vertices):
        dist = G.distances_from(i)
        out.append((i, dist[G.index[full ^ B]]))
    return out


def check_circ(M: Matroid, G: BCGraph) -> PropertyReport:
    t0 = time.perf_counter()
    _nonempty(G)
    pairs = _complement_distances(M, G)
    ms = (time.perf_counter() - t0) * 1e3
    hits = [i for i, d in pairs if d == M.r]
    if hits:
        return PropertyReport("Circ", HOLDS, G.label(hits[0]), ms)
    table = {G.label(i): d for i, d in pairs}
    return PropertyReport("Circ", FAILS, table, ms)


def check_scirc(M: Matroid, G: BCGraph) -> PropertyReport:
    t0 = time.perf_counter()
    _nonempty(G)
    pairs = _complement_distances(M, G)
    ms = (time.perf_counter() - t0) * 1e3
    bad = [(i, d) for i, d in pairs if d != M.r]
    if bad:
        i, d = bad[0]
        return PropertyReport("SCirc", FAILS, {"base": G.label(i), "distance": d}, ms)
    return PropertyReport("SCirc", HOLDS, None, ms)


def diameter(G: IndexedGraph) -> tuple[int, tuple[int, int]]:
    """Diameter and a pair realising it; ``-1`` if disconnected."""
    best, pair = 0, (0, 0)
    for i in range(len(G)):
        dist = G.distances_from(i)
        for j, d in enumerate(dist):
            if d < 0:
                return -1, (i, j)
            if d > best:
                best, pair = d, (i, j)
    return best, pair


def check_diam(M: Matroid, G: BCGraph) -> PropertyReport:
    t0 = time.perf_counter()
    _nonempty(G)
    diam, (i, j) = diameter(G)
    ms = (time.perf_counter() - t0) * 1e3
    details = {"diameter": diam if diam >= 0 else None, "rank": M.r}
    if diam == M.r:
        return PropertyReport("Diam", HOLDS, None, ms, details=details)
    return PropertyReport("Diam", FAILS, {"pair": [G.label(i), G.label(j)], "distance": diam}, ms, details=details)


def check_poly(G: IndexedGraph) -> PropertyReport:
    """Reports the measured diameter only."""
    t0 = time.perf_counter()
    _nonempty(G)
    diam, _ = diameter(G)
    ms = (time.perf_counter() - t0) * 1e3
    return PropertyReport("Poly", UNKNOWN, None, ms, details={"diameter": diam if diam >= 0 else None})


def is_hypercube(G: IndexedGraph) -> bool:
    """Recognise Q_d by labelling BFS layers with unions of neighbour labels."""
    nv = len(G)
    if nv == 0:
        return False
    d = nv.bit_length() - 1
    if 1 << d != nv:
        return False
    if any(len(nb) != d for nb in G.adjacency):
        return False
    if d == 0:
        return True
    dist = G.distances_from(0)
    if min(dist) < 0:
        return False
    label = [-1] * nv
    label[0] = 0
    for k, j in enumerate(G.adjacency[0]):
        label[j] = 1 << k
    order = sorted(range(nv), key=dist.__getitem__)
    for x in order:
        if dist[x] < 2:
            continue
        lab = 0
        for y in G.adjacency[x]:
            if dist[y] == dist[x] - 1:
                lab |= label[y]
        label[x] = lab
    if sorted(label) != list(range(nv)):
        return False
    return all(popcount(label[i] ^ label[j]) == 1 for i, j in G.edges())


def verify_path(G: IndexedGraph, path: Sequence[int], start: int | None = None, end: int | None = None) -> bool:
    """Hamiltonian-path certificate check on vertex indices."""
    if len(path) != len(G) or len(set(path)) != len(G):
        return False
    if start is not None and path[0] != start:
        return False
    if end is not None and path[-1] != end:
        return False
    return all(b in G.adjacency[a] for a, b in zip(path, path[1:]))


def check_ham(
    G: IndexedGraph,
    budget: int = 10**6,
    max_vertices: int = DEFAULT_HAM_CAP,
    keep_certificates: bool = False,
) -> PropertyReport:
    """Hamiltonian connectivity (or being a hypercube), decided exhaustively.

    ``budget`` is the node cap of each pairwise search.
    """
    t0 = time.perf_counter()
    _nonempty(G)
    if is_hypercube(G):
        return PropertyReport("Ham", HOLDS, {"hypercube": True}, (time.perf_counter() - t0) * 1e3)
    coloring = G.two_coloring()
    if coloring is not None and len(G) >= 3:
        side = [i for i, c in enumerate(coloring) if c == 0]
        other = [i for i, c in enumerate(coloring) if c == 1]
        if len(side) >= len(other):
            pair = side[:2] if len(side) >= 2 else [side[0], other[0]]
        else:
            pair = other[:2]
        if len(side) != len(other) and abs(len(side) - len(other)) == 1:
            big = side if len(side) > len(other) else other
            small = other if big is side else side
            pair = [big[0], small[0]]
        witness = {
            "bipartite": True,
            "coloring": {G.label(i): c for i, c in enumerate(coloring)},
            "class_sizes": [len(side), len(other)],
            "unreachable_pair": [G.label(pair[0]), G.label(pair[1])],
        }
        return PropertyReport("Ham", FAILS, witness, (time.perf_counter() - t0) * 1e3)
    if len(G) > max_vertices:
        return PropertyReport(
            "Ham", UNKNOWN, None, (time.perf_counter() - t0) * 1e3, details={"reason": f"more than {max_vertices} vertices"}
        )
    nb = {i: G.adjacency[i] for i in range(len(G))}
    nodes = 0
    certs = {}
    checked = 0
    for u, v in combinations(range(len(G)), 2):
        out = hamsearch.find_path_cover(nb, [(u, v)], node_limit=budget, seed=0)
        nodes += out.nodes
        if out.status == hamsearch.EXHAUSTED:
            return PropertyReport(
                "Ham", FAILS, {"no_path_between": [G.label(u), G.label(v)]}, (time.perf_counter() - t0) * 1e3, nodes
            )
        if out.status == hamsearch.BUDGET:
            return PropertyReport(
                "Ham",
                UNKNOWN,
                None,
                (time.perf_counter() - t0) * 1e3,
                nodes,
                details={"pairs_checked": checked, "stalled_pair": [G.label(u), G.label(v)]},
            )
        path = out.paths[0]
        if not verify_path(G, path, u, v):
            raise AssertionError(f"search returned an invalid path for {(u, v)}")
        checked += 1
        if keep_certificates:
            certs[f"{G.label(u)}~{G.label(v)}"] = [G.label(x) for x in path]
    witness = {"exhaustive": True, "pairs_checked": checked}
    if keep_certificates:
        witness["certificates"] = certs
    return PropertyReport("Ham", HOLDS, witness, (time.perf_counter() - t0) * 1e3, nodes)


def is_exchange_family(masks: Sequence[int]) -> bool:
    return exchange_violation(list(masks)) is None


def check_mat(F: BaseFamily) -> PropertyReport:
    """Whether the family is the basis family of a matroid.

    On success the witness is that family, and it must be identically
    self-dual (complement-closed); a violation raises ``AssertionError``.
    """
    t0 = time.perf_counter()
    if len(F) == 0:
        raise ValueError("empty family")
    bad = exchange_violation(list(F.masks))
    ms = (time.perf_counter() - t0) * 1e3
    if bad is not None:
        B, B2, e = bad
        return PropertyReport("Mat", FAILS, {"B": to_bitstring(B, F.n), "B2": to_bitstring(B2, F.n), "e": e}, ms)
    if F.complements().masks != F.masks:
        raise AssertionError("exchange family is not identically self-dual")
    return PropertyReport("Mat", HOLDS, [to_bitstring(b, F.n) for b in F.masks], ms, details={"self_dual": True})


def cartesian_product(G1: BCGraph, G2: BCGraph) -> BCGraph:
    """Product on concatenated masks: ``G1`` bits first, then ``G2``."""
    n = G1.n + G2.n
    if n > MAX_GROUND:
        raise ValueError(f"combined mask width {n} exceeds {MAX_GROUND}")
    n2 = len(G2)
    masks = [a | (b << G1.n) for a in G1.vertices for b in G2.vertices]
    adj = []
    for i in range(len(G1)):
        for j in range(n2):
            nb = [k * n2 + j for k in G1.adjacency[i]] + [i * n2 + k for k in G2.adjacency[j]]
            adj.append(nb)
    return BCGraph(n, masks, kind=G1.kind, adjacency=adj)


def bipartition_report(G: IndexedGraph) -> dict:
    coloring = G.two_coloring()
    if coloring is None:
        return {"bipartite": False}
    zeros = coloring.count(0)
    return {"bipartite": True, "class_sizes": [zeros, len(coloring) - zeros]}


def base_graph_distance_identity(G: BCGraph) -> bool:
    """In a base graph, graph distance equals half the symmetric difference."""
    for i in range(len(G)):
        dist = G.distances_from(i)
        for j, d in enumerate(dist):
            if 2 * d != popcount(G.vertices[i] ^ G.vertices[j]):
                return False
    return True
