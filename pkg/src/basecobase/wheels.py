"""Wheels, whirls and necklaces, and the stitched two-cube model of their
base-cobase graphs.

Element labels follow the usual convention: label ``2i-1`` is the rim edge
``e_i`` between ``v_i`` and ``v_{i+1}``, label ``2i`` is the spoke ``f_i``
from the hub to ``v_i``.  Label ``p`` lives at mask position ``p-1``.

Cube coordinates ``1..n`` are bits ``0..n-1`` of ``CubeVertex.bits``.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from typing import NamedTuple

from .bcg import BCGraph, IndexedGraph, build_bc_graph
from .masks import full_mask, popcount, to_bitstring
from .matroid import (
    DEFAULT_BUDGET,
    ExplicitBases,
    Graphic,
    Matroid,
    Transversal,
    enumerate_bases,
)

PLUS = 1
MINUS = -1
WHEEL = "wheel"
WHIRL = "whirl"
KINDS = (WHEEL, WHIRL)


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"wheels and whirls need n >= 3, got {n}")


def _check_kind(kind: str) -> str:
    kind = kind.lower()
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return kind


def _cyc(i: int, n: int) -> int:
    """Representative of ``i`` modulo ``n`` in ``1..n``."""
    return (i - 1) % n + 1


def rim_pos(i: int, n: int) -> int:
    return 2 * _cyc(i, n) - 2


def spoke_pos(i: int, n: int) -> int:
    return 2 * _cyc(i, n) - 1


def rim_mask(n: int) -> int:
    return sum(1 << rim_pos(i, n) for i in range(1, n + 1))


def spoke_mask(n: int) -> int:
    return sum(1 << spoke_pos(i, n) for i in range(1, n + 1))


def wheel_edges(n: int) -> list[tuple[int, int]]:
    """Edges in label order; vertex 0 is the hub, ``1..n`` the rim vertices."""
    _check_n(n)
    out = []
    for i in range(1, n + 1):
        out.append((i, _cyc(i + 1, n)))
        out.append((0, i))
    return out


def wheel(n: int) -> Graphic:
    return Graphic(wheel_edges(n))


def whirl(n: int, budget: int = DEFAULT_BUDGET) -> ExplicitBases:
    """The wheel with its rim relaxed to a basis."""
    fam = enumerate_bases(wheel(n), budget)
    return ExplicitBases(2 * n, fam.masks + (rim_mask(n),), validate=False)


def necklace(n: int) -> Transversal:
    """Transversal matroid of the ``n`` cyclic 3-intervals on ``2n`` elements."""
    _check_n(n)
    m = 2 * n
    sets = [sum(1 << ((2 * i - 2 + k) % m) for k in range(3)) for i in range(1, n + 1)]
    return Transversal(m, sets)


def wheel_or_whirl(kind: str, n: int) -> Matroid:
    return wheel(n) if _check_kind(kind) == WHEEL else whirl(n)


# --- the cube model --------------------------------------------------------


class CubeVertex(NamedTuple):
    bits: int
    sign: int
    n: int

    def __str__(self) -> str:
        return to_bitstring(self.bits, self.n) + ("+" if self.sign == PLUS else "-")

    @property
    def weight(self) -> int:
        return popcount(self.bits)

    def other(self) -> CubeVertex:
        return CubeVertex(self.bits, -self.sign, self.n)


def support(bits: int, n: int) -> list[int]:
    return [i for i in range(1, n + 1) if (bits >> (i - 1)) & 1]


def _has(bits: int, i: int, n: int) -> bool:
    return bool((bits >> (_cyc(i, n) - 1)) & 1)


def interval_starts(bits: int, n: int) -> list[int]:
    return [i for i in support(bits, n) if not _has(bits, i - 1, n)]


def interval_ends(bits: int, n: int) -> list[int]:
    return [i for i in support(bits, n) if not _has(bits, i + 1, n)]


def is_lean(bits: int, n: int) -> bool:
    """Support is a cyclic interval; empty and full supports count."""
    return bits == 0 or bits == full_mask(n) or len(interval_starts(bits, n)) == 1


def lean_interval(bits: int, n: int) -> tuple[int, int]:
    """``(start, length)`` of a lean vertex other than 0 and 1."""
    starts = interval_starts(bits, n)
    if len(starts) != 1:
        raise ValueError(f"{to_bitstring(bits, n)} is not a proper lean vertex")
    return starts[0], popcount(bits)


def rotate(bits: int, n: int, k: int = 1) -> int:
    """Move coordinate ``i`` to ``i + k``."""
    k %= n
    return ((bits << k) | (bits >> (n - k))) & full_mask(n)


def reflect(bits: int, n: int) -> int:
    """Coordinate ``i`` goes to ``n + 1 - i``."""
    return sum(1 << (n - i) for i in support(bits, n))


def lean_vertices(n: int) -> list[int]:
    return [b for b in range(1 << n) if is_lean(b, n)]


def lean_edge_count(n: int, i: int) -> int:
    """Lean edges in direction ``i``, not counting those at ``0`` or ``1``."""
    _check_n(n)
    if not 1 <= i <= n:
        raise ValueError(f"direction {i} outside 1..{n}")
    bit = 1 << (i - 1)
    full = full_mask(n)
    return sum(
        1
        for b in range(1, full)
        if not b & bit and (b | bit) != full and is_lean(b, n) and is_lean(b | bit, n)
    )


StitchRule = Callable[[int, int], list[int]]


def stitch_targets(bits: int, n: int) -> list[int]:
    """Minus-copy partners of the lean vertex ``bits``+ (not 0 or 1)."""
    start, length = lean_interval(bits, n)
    out = [bits, rotate(bits, n)]
    if length >= 2:
        out.append(bits & ~(1 << (start - 1)))
    if length <= n - 2:
        end = _cyc(start + length - 1, n)
        out.append(bits | (1 << (_cyc(end + 1, n) - 1)))
    return out


class StitchedModel(IndexedGraph):
    """Two copies of ``Q_n`` joined by stitching edges between lean vertices.

    For the wheel, ``0`` and ``1`` are removed from both copies; for the whirl
    they are kept once each (stored with sign ``PLUS``) and adjacent to both
    copies.
    """

    def __init__(self, n: int, kind: str, rule: StitchRule | None = None):
        _check_n(n)
        kind = _check_kind(kind)
        rule = rule or stitch_targets
        full = full_mask(n)
        verts: list[CubeVertex] = []
        for sign in (PLUS, MINUS):
            for b in range(1 << n):
                if b in (0, full) and (kind == WHEEL or sign == MINUS):
                    continue
                verts.append(CubeVertex(b, sign, n))
        index = {v: i for i, v in enumerate(verts)}

        def find(b: int, sign: int) -> int | None:
            if b in (0, full):
                return index.get(CubeVertex(b, PLUS, n))
            return index[CubeVertex(b, sign, n)]

        adj: list[set[int]] = [set() for _ in verts]

        def link(i: int | None, j: int | None) -> None:
            if i is None or j is None or i == j:
                return
            adj[i].add(j)
            adj[j].add(i)

        for i, v in enumerate(verts):
            for k in range(n):
                w = v.bits ^ (1 << k)
                if v.bits in (0, full):
                    link(i, find(w, PLUS))
                    link(i, find(w, MINUS))
                else:
                    link(i, find(w, v.sign))
        self.stitching: list[tuple[CubeVertex, CubeVertex]] = []
        for b in range(1, full):
            if not is_lean(b, n):
                continue
            for t in rule(b, n):
                link(index[CubeVertex(b, PLUS, n)], find(t, MINUS))
                self.stitching.append((CubeVertex(b, PLUS, n), CubeVertex(t, MINUS, n)))
        super().__init__(verts, [sorted(a) for a in adj])
        self.n = n
        self.kind = kind

    def label(self, i: int) -> str:
        return str(self.vertices[i])

    def color(self, v: CubeVertex) -> int:
        """1 (red) for odd weight, 0 (green) for even."""
        return v.weight & 1

    def export_dot(self) -> str:
        def attrs(i: int) -> str:
            v = self.vertices[i]
            fill = "lightblue" if v.sign == PLUS else "lightpink"
            shape = "doublecircle" if is_lean(v.bits, self.n) else "circle"
            return f'style=filled, fillcolor="{fill}", shape={shape}'

        return self.to_dot(f"{self.kind}{self.n}", attrs)


def model_vertex_count(n: int, kind: str) -> int:
    return 2 * (2**n - 2) if _check_kind(kind) == WHEEL else 2 ** (n + 1) - 2


def image(v: CubeVertex) -> int:
    """Base-cobase attached to a cube vertex."""
    n = v.n
    full = full_mask(n)
    if v.bits == 0:
        return spoke_mask(n)
    if v.bits == full:
        return rim_mask(n)
    m = 0
    for i in support(v.bits, n):
        m |= 1 << rim_pos(i, n)
    for j in range(1, n + 1):
        if not _has(v.bits, j, n) and not _has(v.bits, j - 1, n):
            m |= 1 << spoke_pos(j, n)
    if v.sign == PLUS:
        for j in interval_starts(v.bits, n):
            m |= 1 << spoke_pos(j, n)
    else:
        for j in interval_ends(v.bits, n):
            m |= 1 << spoke_pos(j + 1, n)
    return m


def bijection_to_model(n: int, kind: str) -> dict[CubeVertex, int]:
    model = StitchedModel(n, kind)
    return {v: image(v) for v in model.vertices}


def verify_bijection(n: int, kind: str, budget: int = DEFAULT_BUDGET) -> bool:
    bc = build_bc_graph(wheel_or_whirl(kind, n), budget)
    images = bijection_to_model(n, kind).values()
    return len(set(images)) == len(images) and set(images) == set(bc.vertices)


def verify_structure(n: int, kind: str, rule: StitchRule | None = None, budget: int = DEFAULT_BUDGET) -> bool:
    """Model edges, relabelled through the bijection, equal the bc-graph edges."""
    if n > 10:
        raise ValueError("verify_structure supports n <= 10")
    model = StitchedModel(n, kind, rule)
    bc = build_bc_graph(wheel_or_whirl(kind, n), budget)
    img = [image(v) for v in model.vertices]
    if len(set(img)) != len(img) or set(img) != set(bc.vertices):
        return False
    mapped = {frozenset((img[i], img[j])) for i, j in model.edges()}
    return mapped == bc.edge_set()


@dataclass
class LowerBoundReport:
    n: int
    kind: str
    pair: tuple[CubeVertex, CubeVertex]
    distance: int
    half_difference: int
    formula: int

    @property
    def matches_formula(self) -> bool:
        return self.distance == self.formula


def block_sizes(n: int) -> tuple[int, int, int, int]:
    """Four cyclic block sizes as equal as possible, extras to a, b, c first."""
    q, k = divmod(n, 4)
    return tuple(q + (1 if j < k else 0) for j in range(4))  # type: ignore[return-value]


def lower_bound_vertex(n: int) -> int:
    a, b, c, _ = block_sizes(n)
    ones = [1] * a + [0] * b + [1] * c
    return sum(1 << i for i, x in enumerate(ones) if x)


def verify_lower_bound(n: int, kind: str = WHEEL) -> LowerBoundReport:
    """BFS distance in the stitched model between ``v+`` and ``v-``.

    ``v`` is the block vector ``1^a 0^b 1^c 0^d``; its two images differ in
    only two spokes, yet the graph distance grows with ``n``.
    """
    _check_n(n)
    model = StitchedModel(n, kind)
    v = lower_bound_vertex(n)
    plus, minus = CubeVertex(v, PLUS, n), CubeVertex(v, MINUS, n)
    dist = model.distances_from(model.index[plus])[model.index[minus]]
    half = popcount(image(plus) ^ image(minus)) // 2
    return LowerBoundReport(n, _check_kind(kind), (plus, minus), dist, half, 2 * (n // 4) + 1)


def necklace_position(p: int, n: int) -> int:
    """Where whirl position ``p`` goes in the necklace.

    Spokes stay put; the rim edge ``e_i`` moves to label ``2i+1`` so that the
    interval ``{2i-1, 2i, 2i+1}`` is exactly the star ``{e_(i-1), f_i, e_i}``
    of rim vertex ``v_i``.
    """
    return p if p % 2 else (p + 2) % (2 * n)


def relabel(mask: int, f: Callable[[int], int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << f(low.bit_length() - 1)
        mask ^= low
    return out


def verify_necklace_iso(n: int, identity: bool = False, budget: int = DEFAULT_BUDGET) -> bool:
    """The relabelling carries the whirl's bases onto the necklace's.

    ``identity=True`` tests the plain identity on labels instead (it fails).
    """
    if n > 8:
        raise ValueError("verify_necklace_iso supports n <= 8")
    f = (lambda p: p) if identity else (lambda p: necklace_position(p, n))
    mapped = sorted(relabel(B, f) for B in enumerate_bases(whirl(n, budget), budget).masks)
    return tuple(mapped) == enumerate_bases(necklace(n), budget).masks


def bc_graph_of(kind: str, n: int) -> BCGraph:
    return build_bc_graph(wheel_or_whirl(kind, n))


def iter_lean_stitched(n: int) -> Iterator[int]:
    full = full_mask(n)
    for b in range(1, full):
        if is_lean(b, n):
            yield b
