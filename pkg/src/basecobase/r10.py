"""The matroid R10 on the ten triples of {1,...,5}.

Column ``j`` of the representing matrix is the incidence vector of the
``j``-th triple in lexicographic order, so ground-set position ``j`` is the
triple ``TRIPLES[j]``.  Base-cobases come in two shapes, labelled by a
permutation ``abcde`` up to reversal (``S2``) or up to the dihedral group
(``D5``).
"""

from __future__ import annotations

import time
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from . import hamsearch
from .bcg import FAILS, BCGraph, build_bc_graph, check_ham, verify_path
from .matroid import LinearGF2

TRIPLES: tuple[tuple[int, int, int], ...] = tuple(combinations(range(1, 6), 3))
_POS = {t: j for j, t in enumerate(TRIPLES)}

S2 = "S2"
D5 = "D5"
VERIFIED = "Verified"
UNKNOWN = "Unknown"

MATRIX = (
    "1111110000",
    "1110001110",
    "1001101101",
    "0101011011",
    "0010110111",
)

Perm = tuple[int, ...]


def r10_matroid() -> LinearGF2:
    rows = [sum(1 << j for j, ch in enumerate(row) if ch == "1") for row in MATRIX]
    return LinearGF2(rows, 10)


def triple(t) -> tuple[int, int, int]:
    """Accept ``(1, 2, 3)``, ``{1, 2, 3}`` or ``"123"``."""
    if isinstance(t, str):
        t = [int(ch) for ch in t]
    out = tuple(sorted(t))
    if out not in _POS:
        raise ValueError(f"{t!r} is not a 3-subset of 1..5")
    return out


def mask_of_triples(ts: Iterable) -> int:
    m = 0
    for t in ts:
        m |= 1 << _POS[triple(t)]
    return m


def triples_of(mask: int) -> list[tuple[int, int, int]]:
    return [TRIPLES[j] for j in range(10) if (mask >> j) & 1]


def degrees(ts: Iterable) -> tuple[int, ...]:
    d = [0] * 5
    for t in ts:
        for a in triple(t):
            d[a - 1] += 1
    return tuple(d)


def perm_label(w: Perm) -> str:
    return "".join(map(str, w))


def sign(w: Perm) -> int:
    """+1 for even permutations of 1..5, -1 for odd."""
    s = 1
    for i, j in combinations(range(len(w)), 2):
        if w[i] > w[j]:
            s = -s
    return s


# ---------------------------------------------------------------------------
# circuits


@dataclass(frozen=True)
class CircuitClass:
    kind: str  # "Circuit4", "Circuit6" or "NotCircuit"
    perm: Perm | None = None


def circuit4(w: Perm) -> frozenset:
    a, b, c, d, e = w
    return frozenset(triple(t) for t in ((a, b, c), (a, b, e), (a, c, d), (a, d, e)))


def _is_circuit(mask: int) -> bool:
    M = r10_matroid()
    k = mask.bit_count()
    if k == 0 or M.rank(mask) != k - 1:
        return False
    return all(M.rank(mask & ~(1 << j)) == k - 1 for j in range(10) if (mask >> j) & 1)


def _circuit4_perm(ts: frozenset) -> Perm | None:
    for w in permutations(range(1, 6)):
        if circuit4(w) == ts:
            return w
    return None


def classify_circuit(C: Iterable) -> CircuitClass:
    ts = frozenset(triple(t) for t in C)
    mask = mask_of_triples(ts)
    if not _is_circuit(mask):
        return CircuitClass("NotCircuit")
    if len(ts) == 4:
        w = _circuit4_perm(ts)
        kind = "Circuit4"
    else:
        w = _circuit4_perm(frozenset(TRIPLES) - ts)
        kind = "Circuit6"
    if w is None:
        raise AssertionError(f"circuit {sorted(ts)} has no template form")
    return CircuitClass(kind, w)


def circuit_census() -> dict[int, int]:
    """Number of circuits of each size, by brute force over all subsets."""
    out: dict[int, int] = {}
    for mask in range(1, 1 << 10):
        if _is_circuit(mask):
            k = mask.bit_count()
            out[k] = out.get(k, 0) + 1
    return out


# ---------------------------------------------------------------------------
# base-cobase classes


def _rotations(w: Perm) -> list[Perm]:
    return [w[i:] + w[:i] for i in range(5)]


def canonical(kind: str, w: Perm) -> Perm:
    if kind == S2:
        return min(w, w[::-1])
    if kind == D5:
        return min(_rotations(w) + _rotations(w[::-1]))
    raise ValueError(f"unknown class kind {kind!r}")


@dataclass(frozen=True, order=True)
class BcClass:
    kind: str
    rep: Perm

    @classmethod
    def of(cls, kind: str, w: Iterable[int] | str) -> BcClass:
        w = tuple(int(ch) for ch in w) if isinstance(w, str) else tuple(w)
        if sorted(w) != [1, 2, 3, 4, 5]:
            raise ValueError(f"{w} is not a permutation of 12345")
        return cls(kind, canonical(kind, w))

    def __str__(self) -> str:
        return f"[{perm_label(self.rep)}]_{self.kind}"

    @property
    def sign(self) -> int:
        return sign(self.rep)

    def side(self) -> int:
        """0 for the part holding odd D5 and even S2 classes, 1 for the other."""
        odd = self.sign < 0
        return 0 if odd == (self.kind == D5) else 1

    def triples(self) -> frozenset:
        return template(self.kind, self.rep)


def template(kind: str, w: Perm) -> frozenset:
    a, b, c, d, e = w
    if kind == S2:
        ts = ((a, b, d), (a, c, d), (b, c, d), (b, c, e), (b, d, e))
    elif kind == D5:
        ts = ((a, b, d), (a, c, d), (a, c, e), (b, c, e), (b, d, e))
    else:
        raise ValueError(f"unknown class kind {kind!r}")
    return frozenset(triple(t) for t in ts)


@lru_cache(maxsize=1)
def _class_table() -> dict[int, BcClass]:
    table: dict[int, BcClass] = {}
    for kind in (S2, D5):
        for w in permutations(range(1, 6)):
            table.setdefault(mask_of_triples(template(kind, w)), BcClass.of(kind, w))
    return table


def all_classes() -> list[BcClass]:
    return sorted(set(_class_table().values()))


def is_base_cobase(mask: int) -> bool:
    M = r10_matroid()
    return mask.bit_count() == 5 and M.rank(mask) == 5 and M.rank(0x3FF & ~mask) == 5


def classify_bc(B: Iterable | int) -> BcClass:
    mask = B if isinstance(B, int) else mask_of_triples(B)
    if not is_base_cobase(mask):
        raise ValueError(f"{sorted(triples_of(mask))} is not a base-cobase of R10")
    degs = sorted(degrees(triples_of(mask)))
    if degs == [2, 2, 3, 4, 4]:
        kind = S2
    elif degs == [3, 3, 3, 3, 3]:
        kind = D5
    else:
        raise AssertionError(f"unexpected degree sequence {degs}")
    c = _class_table().get(mask)
    if c is None or c.kind != kind:
        raise AssertionError(f"no template matches {sorted(triples_of(mask))}")
    assert mask_of_triples(c.triples()) == mask
    return c


def predicted_adjacency(c: BcClass) -> list[BcClass]:
    a, b, cc, d, e = c.rep
    if c.kind == D5:
        return [BcClass.of(S2, w) for w in _rotations(c.rep)]
    return [
        BcClass.of(D5, (a, b, cc, d, e)),
        BcClass.of(S2, (cc, b, a, d, e)),
        BcClass.of(S2, (a, cc, b, d, e)),
        BcClass.of(S2, (a, b, d, cc, e)),
        BcClass.of(S2, (a, b, e, d, cc)),
    ]


def predicted_adjacency_as_printed(c: BcClass) -> list[BcClass]:
    """The S2 neighbour list with ``[abcde]`` in the slot of ``[acbde]``."""
    out = predicted_adjacency(c)
    if c.kind == S2:
        out[2] = c
    return out


# ---------------------------------------------------------------------------
# the graph


@lru_cache(maxsize=1)
def r10_bc_graph() -> BCGraph:
    return build_bc_graph(r10_matroid())


def class_labels(G: BCGraph | None = None) -> list[BcClass]:
    G = G or r10_bc_graph()
    return [classify_bc(m) for m in G.vertices]


def _edges_from(rule) -> set[frozenset]:
    return {frozenset((c, d)) for c in all_classes() for d in rule(c) if c != d}


@dataclass
class R10Report:
    vertices: int
    s2_classes: int
    d5_classes: int
    edges_match: bool
    printed_list_matches: bool
    regular_degree: int | None
    bipartite: bool
    sides: tuple[int, int]
    sides_are_sign_classes: bool
    ham: str
    ham_witness: dict | None = None

    @property
    def passed(self) -> bool:
        return (
            self.vertices == 72
            and (self.s2_classes, self.d5_classes) == (60, 12)
            and self.edges_match
            and self.regular_degree == 5
            and self.bipartite
            and self.sides == (36, 36)
            and self.sides_are_sign_classes
            and self.ham == FAILS
        )

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices,
            "classes": {"S2": self.s2_classes, "D5": self.d5_classes},
            "edges_match_description": self.edges_match,
            "printed_neighbour_list_matches": self.printed_list_matches,
            "degree": self.regular_degree,
            "bipartite": self.bipartite,
            "sides": list(self.sides),
            "sides_are_sign_classes": self.sides_are_sign_classes,
            "ham": self.ham,
            "passed": self.passed,
        }


def describe_r10() -> R10Report:
    G = r10_bc_graph()
    labels = class_labels(G)
    computed = {frozenset((labels[i], labels[j])) for i, j in G.edges()}
    degs = {len(a) for a in G.adjacency}
    coloring = G.two_coloring()
    sides = (0, 0)
    sign_ok = False
    if coloring is not None:
        sides = (coloring.count(0), coloring.count(1))
        by_sign = [labels[i].side() for i in range(len(G))]
        sign_ok = by_sign == coloring or [1 - x for x in by_sign] == coloring
    ham = check_ham(G)
    return R10Report(
        vertices=len(G),
        s2_classes=sum(c.kind == S2 for c in labels),
        d5_classes=sum(c.kind == D5 for c in labels),
        edges_match=computed == _edges_from(predicted_adjacency),
        printed_list_matches=computed == _edges_from(predicted_adjacency_as_printed),
        regular_degree=degs.pop() if len(degs) == 1 else None,
        bipartite=coloring is not None,
        sides=sides,
        sides_are_sign_classes=sign_ok,
        ham=ham.verdict,
        ham_witness=ham.witness,
    )


def verify_r10_description() -> bool:
    return describe_r10().passed


# ---------------------------------------------------------------------------
# laceability


def _act(w: Perm, mask: int) -> int:
    """Relabel the points of every triple in ``mask`` by ``i -> w[i-1]``."""
    return mask_of_triples(tuple(w[a - 1] for a in t) for t in triples_of(mask))


@lru_cache(maxsize=1)
def _vertex_actions() -> list[tuple[int, ...]]:
    """The automorphisms of the bc-graph from S5 and complementation, on indices."""
    G = r10_bc_graph()
    idx = {m: i for i, m in enumerate(G.vertices)}
    out = []
    for w in permutations(range(1, 6)):
        for comp in (False, True):
            img = []
            for m in G.vertices:
                x = _act(w, m)
                img.append(idx[0x3FF & ~x if comp else x])
            out.append(tuple(img))
    return out


def cross_pairs() -> list[tuple[int, int]]:
    G = r10_bc_graph()
    col = G.two_coloring()
    return [(i, j) for i in range(len(G)) for j in range(len(G)) if col[i] == 0 and col[j] == 1]


def pair_orbits() -> list[list[tuple[int, int]]]:
    """Orbits of unordered cross pairs under the automorphisms above."""
    seen: set[frozenset] = set()
    orbits = []
    for i, j in cross_pairs():
        key = frozenset((i, j))
        if key in seen:
            continue
        orb = []
        for g in _vertex_actions():
            img = frozenset((g[i], g[j]))
            if img not in seen:
                seen.add(img)
                orb.append(tuple(sorted(img)))
        orbits.append(orb)
    return orbits


def _search_pair(args) -> tuple[tuple[int, int], str, list[int] | None, int]:
    (u, v), budget = args
    G = r10_bc_graph()
    nb = {i: G.adjacency[i] for i in range(len(G))}
    col = G.two_coloring()
    out = hamsearch.find_path_cover(
        nb, [(u, v)], coloring={i: c for i, c in enumerate(col)}, node_limit=budget, seed=0
    )
    if not out.found:
        return (u, v), out.status, None, out.nodes
    return (u, v), out.status, out.paths[0], out.nodes


@dataclass
class LaceabilityReport:
    status: str
    pairs_total: int
    pairs_checked: int
    orbits: int
    representatives_only: bool
    elapsed_ms: float
    nodes: int = 0
    stalled: list = field(default_factory=list)
    certificates: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "pairs_total": self.pairs_total,
            "pairs_checked": self.pairs_checked,
            "orbits": self.orbits,
            "representatives_only": self.representatives_only,
            "stalled": self.stalled,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def verify_laceability(
    budget: int = 10**6, *, long: bool = False, jobs: int = 1, keep_certificates: bool = False
) -> LaceabilityReport:
    """Hamiltonian path between every cross-coloured pair (one per orbit unless ``long``)."""
    t0 = time.perf_counter()
    G = r10_bc_graph()
    orbits = pair_orbits()
    total = sum(len(o) for o in orbits)
    todo: Sequence[tuple[int, int]] = [p for o in orbits for p in o] if long else [o[0] for o in orbits]
    args = [(p, budget) for p in todo]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_search_pair, args))
    else:
        results = [_search_pair(a) for a in args]
    checked = 0
    nodes = 0
    stalled = []
    certs = {}
    for (u, v), status, path, k in results:
        nodes += k
        if path is None:
            stalled.append({"pair": [G.label(u), G.label(v)], "status": status})
            continue
        if not verify_path(G, path, u, v):
            raise AssertionError(f"invalid certificate for {(u, v)}")
        checked += 1
        if keep_certificates:
            certs[f"{G.label(u)}~{G.label(v)}"] = [G.label(x) for x in path]
    return LaceabilityReport(
        VERIFIED if not stalled else UNKNOWN,
        total,
        checked,
        len(orbits),
        not long,
        (time.perf_counter() - t0) * 1e3,
        nodes,
        stalled,
        certs,
    )
