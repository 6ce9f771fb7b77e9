"""The eight hypercube path-cover primitives (a)-(h).

Each primitive checks the colour and distinctness hypotheses of its
statement (up to swapping the two colours), runs the search, and returns a
``PathCover``.  A failed search under valid hypotheses raises
``PrimitiveFailure``: it would contradict a published lemma.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass, field

from .cube import SubCube, color, cube_cover


class PreconditionError(ValueError):
    pass


@dataclass
class PathCover:
    paths: list[list]
    declared_endpoints: list[tuple]
    forced_edges: list[tuple] = field(default_factory=list)
    forbidden_vertices: list = field(default_factory=list)
    host: SubCube | None = None
    meta: dict = field(default_factory=dict)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def _members(host: SubCube, *xs: int) -> None:
    for x in xs:
        _require(x in host, f"vertex {x} not in host subcube")


def _distinct(*xs: int) -> None:
    _require(len(set(xs)) == len(xs), "anchors must be distinct")


def _same(*xs: int) -> None:
    _require(len({color(x) for x in xs}) == 1, "anchors have the wrong colours")


def _opposite(a: int, b: int) -> None:
    _require(color(a) != color(b), "anchors have the wrong colours")


def _edge(host: SubCube, e: tuple[int, int], forbidden: set[int]) -> None:
    a, b = e
    _members(host, a, b)
    _require((a ^ b).bit_count() == 1, f"{e} is not a cube edge")
    _require(a not in forbidden and b not in forbidden, f"edge {e} touches a removed vertex")


def _dim(host: SubCube, need: int) -> None:
    _require(host.dim >= need, f"needs dimension >= {need}, host has {host.dim}")


def _run(letter, host, segments, forbidden, forced=(), banned=(), log=None, **kw) -> PathCover:
    paths = cube_cover(
        host, segments, forbidden=forbidden, forced=forced, banned=banned, label=f"({letter})", log=log, **kw
    )
    return PathCover(
        paths,
        [tuple(s) for s in segments],
        [tuple(e) for e in forced],
        sorted(forbidden),
        host,
        {"primitive": letter},
    )


def prim_a(host: SubCube, r: int, g: int, e: tuple[int, int], *, banned=(), log=None, **kw) -> PathCover:
    """Hamiltonian path of the cube from ``r`` to ``g`` through ``e``."""
    _dim(host, 4)
    _members(host, r, g)
    _opposite(r, g)
    _edge(host, e, set())
    _require(set(e) != {r, g}, "edge must differ from {r, g}")
    return _run("a", host, [(r, g)], (), [e], banned, log, **kw)


def prim_b(host: SubCube, rs: int, gs: int, r: int, g: int, *, banned=(), log=None, **kw) -> PathCover:
    """Hamiltonian path of ``Q - {rs, gs}`` from ``r`` to ``g``."""
    _dim(host, 4)
    _members(host, rs, gs, r, g)
    _distinct(rs, gs, r, g)
    _same(rs, r)
    _same(gs, g)
    _opposite(r, g)
    return _run("b", host, [(r, g)], {rs, gs}, (), banned, log, **kw)


def prim_c(host: SubCube, rs: int, r1: int, g1: int, g2: int, g3: int, *, log=None, **kw) -> PathCover:
    """2-path cover of ``Q - {rs}``: ``r1 -> g1`` and ``g2 -> g3``."""
    _dim(host, 4)
    _members(host, rs, r1, g1, g2, g3)
    _distinct(rs, r1, g1, g2, g3)
    _same(rs, r1)
    _same(g1, g2, g3)
    _opposite(r1, g1)
    return _run("c", host, [(r1, g1), (g2, g3)], {rs}, log=log, **kw)


def prim_d(host: SubCube, gs: int, r1: int, r2: int, e: tuple[int, int] | None = None, *, log=None, **kw) -> PathCover:
    """Hamiltonian path of ``Q - {gs}`` from ``r1`` to ``r2`` (through ``e``)."""
    _dim(host, 4)
    _members(host, gs, r1, r2)
    _distinct(gs, r1, r2)
    _same(r1, r2)
    _opposite(gs, r1)
    forced = []
    if e is not None:
        _edge(host, e, {gs})
        forced = [e]
    return _run("d", host, [(r1, r2)], {gs}, forced, (), log, **kw)


def prim_e(host: SubCube, gs: int, rs1: int, rs2: int, g1: int, g2: int, *, log=None, **kw) -> PathCover:
    """Hamiltonian path of ``Q - {gs, rs1, rs2}`` from ``g1`` to ``g2``."""
    _dim(host, 4)
    _members(host, gs, rs1, rs2, g1, g2)
    _distinct(gs, rs1, rs2, g1, g2)
    _same(gs, g1, g2)
    _same(rs1, rs2)
    _opposite(gs, rs1)
    return _run("e", host, [(g1, g2)], {gs, rs1, rs2}, log=log, **kw)


def prim_f(host: SubCube, rs1: int, rs2: int, g1: int, g2: int, g3: int, g4: int, *, log=None, **kw) -> PathCover:
    """2-path cover of ``Q - {rs1, rs2}``: ``g1 -> g2`` and ``g3 -> g4``."""
    _dim(host, 4)
    _members(host, rs1, rs2, g1, g2, g3, g4)
    _distinct(rs1, rs2, g1, g2, g3, g4)
    _same(rs1, rs2)
    _same(g1, g2, g3, g4)
    _opposite(rs1, g1)
    return _run("f", host, [(g1, g2), (g3, g4)], {rs1, rs2}, log=log, **kw)


def prim_g(host: SubCube, rs: int, gs: int, r1: int, g1: int, r2: int, g2: int, *, log=None, **kw) -> PathCover:
    """2-path cover of ``Q - {rs, gs}``: ``r1 -> g1`` and ``r2 -> g2``."""
    _dim(host, 4)
    _members(host, rs, gs, r1, g1, r2, g2)
    _distinct(rs, gs, r1, g1, r2, g2)
    _same(rs, r1, r2)
    _same(gs, g1, g2)
    _opposite(rs, gs)
    return _run("g", host, [(r1, g1), (r2, g2)], {rs, gs}, log=log, **kw)


def prim_h(
    host: SubCube, rs1: int, rs2: int, g1: int, g2: int, g3: int, g4: int, g5: int, r1: int, *, log=None, **kw
) -> PathCover:
    """3-path cover of ``Q - {rs1, rs2}``: ``g1 -> g2``, ``g3 -> g4``, ``g5 -> r1``."""
    _dim(host, 6)
    _members(host, rs1, rs2, g1, g2, g3, g4, g5, r1)
    _distinct(rs1, rs2, g1, g2, g3, g4, g5, r1)
    _same(rs1, rs2, r1)
    _same(g1, g2, g3, g4, g5)
    _opposite(rs1, g1)
    return _run("h", host, [(g1, g2), (g3, g4), (g5, r1)], {rs1, rs2}, log=log, **kw)


PRIMITIVES: dict[str, Callable[..., PathCover]] = {
    "a": prim_a,
    "b": prim_b,
    "c": prim_c,
    "d": prim_d,
    "e": prim_e,
    "f": prim_f,
    "g": prim_g,
    "h": prim_h,
}

MIN_DIM = {k: 4 for k in PRIMITIVES} | {"h": 6}


def primitive(letter: str, n: int, *anchors, host: SubCube | None = None, **kw) -> PathCover:
    if letter not in PRIMITIVES:
        raise ValueError(f"unknown primitive {letter!r}")
    return PRIMITIVES[letter](host or SubCube(n), *anchors, **kw)


def random_instance(letter: str, n: int, rng: random.Random) -> tuple:
    """Anchors satisfying the hypotheses of ``letter`` in ``Q_n``."""
    swap = rng.random() < 0.5
    verts = list(range(1 << n))
    R = [x for x in verts if color(x) != swap]
    G = [x for x in verts if color(x) == swap]

    def edge(avoid=()) -> tuple[int, int]:
        while True:
            a = rng.choice(verts)
            b = a ^ (1 << rng.randrange(n))
            if a not in avoid and b not in avoid:
                return a, b

    if letter == "a":
        r, g = rng.choice(R), rng.choice(G)
        while True:
            e = edge()
            if set(e) != {r, g}:
                return r, g, e
    if letter == "b":
        rs, r = rng.sample(R, 2)
        gs, g = rng.sample(G, 2)
        return rs, gs, r, g
    if letter == "c":
        rs, r1 = rng.sample(R, 2)
        return (rs, r1, *rng.sample(G, 3))
    if letter == "d":
        gs = rng.choice(G)
        r1, r2 = rng.sample(R, 2)
        return gs, r1, r2, (edge((gs,)) if rng.random() < 0.8 else None)
    if letter == "e":
        gs, g1, g2 = rng.sample(G, 3)
        rs1, rs2 = rng.sample(R, 2)
        return gs, rs1, rs2, g1, g2
    if letter == "f":
        return (*rng.sample(R, 2), *rng.sample(G, 4))
    if letter == "g":
        rs, r1, r2 = rng.sample(R, 3)
        gs, g1, g2 = rng.sample(G, 3)
        return rs, gs, r1, g1, r2, g2
    if letter == "h":
        rs1, rs2, r1 = rng.sample(R, 3)
        return (rs1, rs2, *rng.sample(G, 5), r1)
    raise ValueError(f"unknown primitive {letter!r}")
