"""Two composite path constructions assembled from the primitives."""

from __future__ import annotations

from ..wheels import is_lean
from .cube import CallLog, SubCube, color, cube_cover
from .primitives import PathCover, PreconditionError, prim_a, prim_b, prim_d


def _lean_edge(x: int, y: int, n: int) -> bool:
    return is_lean(x, n) and is_lean(y, n)


def _has_lean_edge(path: list[int], n: int) -> tuple[int, int] | None:
    for a, b in zip(path, path[1:]):
        if _lean_edge(a, b, n):
            return a, b
    return None


def _crossing_lean_edges(n: int, k: int, Q: SubCube, forbid: set[int]) -> list[tuple[int, int]]:
    """Lean edges in direction ``k`` as (end in Q, end in Q*), lowest first."""
    out = []
    for x in Q.vertices():
        y = x ^ (1 << k)
        if x not in forbid and y not in forbid and _lean_edge(x, y, n):
            out.append((x, y))
    return out


def _direct(n: int, rs: int, gs: int, r: int, g: int, log: CallLog | None, **kw) -> tuple[list[int], tuple[int, int]]:
    """Search route: force each lean edge in turn."""
    host = SubCube(n)
    for x in range(1 << n):
        for i in range(n):
            y = x ^ (1 << i)
            if x < y and _lean_edge(x, y, n) and not {x, y} & {rs, gs} and {x, y} != {r, g}:
                try:
                    (path,) = cube_cover(host, [(r, g)], forbidden={rs, gs}, forced=[(x, y)], label="lean-direct", log=log, **kw)
                except RuntimeError:
                    continue
                return path, (x, y)
    raise PreconditionError("no Hamiltonian path through a lean edge")


def lemma_36_plus(n: int, rs: int, gs: int, r: int, g: int, *, log: CallLog | None = None, **kw) -> PathCover:
    """Hamiltonian path of ``Q_n - {rs, gs}`` from ``r`` to ``g`` through a lean edge.

    Splits along the lowest coordinate where ``r`` and ``rs`` differ and
    resolves the four placements of ``g`` and ``gs``.  Halves of dimension
    below 4 fall back to direct search.
    """
    if n < 4:
        raise PreconditionError("needs n >= 4")
    if len({rs, gs, r, g}) != 4 or color(r) != color(rs) or color(g) != color(gs) or color(r) == color(g):
        raise PreconditionError("anchors have the wrong colours or coincide")
    log = log if log is not None else CallLog()
    k = min(i for i in range(n) if ((r ^ rs) >> i) & 1)
    lo, hi = SubCube(n).halves(k)
    Q, Qs = (lo, hi) if r in lo else (hi, lo)
    case = {(False, False): "a", (False, True): "b", (True, False): "c", (True, True): "d"}[(g in Q, gs in Q)]
    meta = {"case": case, "split": k + 1}
    if n - 1 < 4:
        path, e = _direct(n, rs, gs, r, g, log, **kw)
        meta["route"] = "direct"
    else:
        path = _construct(case, n, k, Q, Qs, rs, gs, r, g, log, **kw)
        e = _has_lean_edge(path, n)
        meta["route"] = "construct"
    if e is None:
        raise PreconditionError("construction produced no lean edge")
    meta["lean_edge"] = e
    meta["log"] = log.entries
    return PathCover([path], [(r, g)], [], [rs, gs], SubCube(n), meta)


def _construct(case, n, k, Q, Qs, rs, gs, r, g, log, **kw) -> list[int]:
    if case == "a":
        # g' in Q joined by a lean edge to r' in Q* - {rs}
        for gp, rp in _crossing_lean_edges(n, k, Q, {rs, gs, g}):
            if color(gp) != color(g) or gp == r:
                continue
            e = _any_edge(Q, r, gp)
            P1 = prim_a(Q, r, gp, e, log=log, **kw).paths[0]
            P2 = prim_b(Qs, rs, gs, rp, g, log=log, **kw).paths[0]
            return P1 + P2
    elif case == "b":
        for rp, gp in _crossing_lean_edges(n, k, Q, {r, gs, g, rs}):
            if color(rp) != color(r):
                continue
            P1 = prim_d(Q, gs, r, rp, log=log, **kw).paths[0]
            P2 = prim_d(Qs, rs, gp, g, log=log, **kw).paths[0]
            return P1 + P2
    elif case == "c":
        cands = _crossing_lean_edges(n, k, Q, {r, g, gs, rs})
        for rp, gp in cands:
            if color(rp) != color(r):
                continue
            for gpp in Q.vertices():
                rpp = gpp ^ (1 << k)
                if color(gpp) != color(g) or gpp in (g, rp) or rpp in (rs, gp, gs):
                    continue
                P1, P3 = cube_cover(Q, [(r, rp), (gpp, g)], label="2-cover", log=log, **kw)
                P2 = prim_b(Qs, rs, gs, rpp, gp, log=log, **kw).paths[0]
                return P1 + P2[::-1] + P3
    else:
        for rp, gp in _crossing_lean_edges(n, k, Q, {r, gs, g, rs}):
            if color(rp) != color(r):
                continue
            P1 = prim_d(Q, gs, r, rp, log=log, **kw).paths[0]
            i = P1.index(g)
            rpp = P1[i - 1]
            gpp = rpp ^ (1 << k)
            if gpp in (rs, gp):
                continue
            P2 = prim_d(Qs, rs, gpp, gp, log=log, **kw).paths[0]
            return P1[:i] + P2 + P1[i:][::-1]
    raise PreconditionError(f"no anchor choice for case {case}")


def _any_edge(Q: SubCube, r: int, g: int) -> tuple[int, int]:
    for x in Q.vertices():
        for y in Q.neighbors(x):
            if {x, y} != {r, g}:
                return x, y
    raise PreconditionError("cube has no spare edge")


def lemma_43_plus(
    n: int, u1: int, v1: int, w1: int, u2: int, v2: int, z1: int, *, log: CallLog | None = None, **kw
) -> PathCover:
    """2-path cover of ``Q_n - {0, 1}``: ``u1 -> v1`` through ``w1 z1`` and ``u2 -> v2``."""
    full = (1 << n) - 1
    if n < 7:
        raise PreconditionError("needs n >= 7")
    for x in (u1, v1, w1):
        if x.bit_count() != 1 or not is_lean(x, n):
            raise PreconditionError("u1, v1, w1 must have weight 1")
    for x in (u2, v2):
        if x.bit_count() != n - 1:
            raise PreconditionError("u2, v2 must have weight n - 1")
    if len({u1, v1, w1}) != 3 or u2 == v2:
        raise PreconditionError("anchors must be distinct")
    if z1.bit_count() != 2 or not is_lean(z1, n) or (z1 ^ w1).bit_count() != 1:
        raise PreconditionError("z1 must be a lean weight-2 neighbour of w1")
    log = log if log is not None else CallLog()
    ones = u1 | v1 | w1 | z1
    zeros = full & ~(u2 & v2)
    free = [i for i in range(n) if not ((ones | zeros) >> i) & 1]
    assert free, "a free coordinate always exists for n >= 7"
    k = free[0]
    Q, Qs = SubCube(n).halves(k)
    P1 = prim_d(Q, 0, u1, v1, (w1, z1), log=log, **kw).paths[0]
    P2 = prim_d(Qs, full, u2, v2, log=log, **kw).paths[0]
    return PathCover(
        [P1, P2],
        [(u1, v1), (u2, v2)],
        [(w1, z1)],
        [0, full],
        SubCube(n),
        {"split": k + 1, "log": log.entries},
    )
