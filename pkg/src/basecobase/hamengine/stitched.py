"""Hamiltonian paths between any two base-cobases of wheels and whirls.

Paths live in the stitched model (two copies of ``Q_n`` glued along lean
vertices).  Every pair is first normalised by a model automorphism:

* ``kappa``: complement the bits, keep the copy;
* ``sigma``: reflect the coordinates and swap the copies;
* reversal of the requested path.

The normalised pair then falls into one of the cases below, each built from
the cube primitives.  Small orders, where the primitives have no room, are
handled by direct search of the model graph.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator

from .. import hamsearch
from ..wheels import (
    MINUS,
    PLUS,
    WHEEL,
    WHIRL,
    CubeVertex,
    StitchedModel,
    is_lean,
    reflect,
    rotate,
    stitch_targets,
)
from .cube import DEFAULT_NODE_LIMIT, CallLog, PrimitiveFailure, SubCube, color
from .lemmas import lemma_36_plus, lemma_43_plus
from .primitives import (
    PathCover,
    PreconditionError,
    prim_a,
    prim_b,
    prim_c,
    prim_d,
    prim_e,
    prim_f,
    prim_g,
    prim_h,
)
from .verify import model_path_problems

METHODS = ("auto", "construct", "search")


class ConstructionError(RuntimeError):
    """No anchor configuration satisfied the hypotheses of a case."""


def min_construct_order(kind: str) -> int:
    return 7 if kind == WHEEL else 4


def _construct_ok(kind: str, n: int) -> bool:
    return n >= min_construct_order(kind)


class _Ctx:
    def __init__(self, kind: str, n: int, log: CallLog, kw: dict):
        self.kind = kind
        self.n = n
        self.full = (1 << n) - 1
        self.Q = SubCube(n)
        self.log = log
        self.kw = kw

    # model vertices -------------------------------------------------------

    def V(self, b: int, sign: int) -> CubeVertex:
        if self.kind == WHIRL and b in (0, self.full):
            sign = PLUS
        return CubeVertex(b, sign, self.n)

    def lift(self, path: Iterable[int], sign: int) -> list[CubeVertex]:
        return [self.V(b, sign) for b in path]

    def kappa(self, v: CubeVertex) -> CubeVertex:
        return self.V(self.full ^ v.bits, v.sign)

    def sigma(self, v: CubeVertex) -> CubeVertex:
        return self.V(reflect(v.bits, self.n), -v.sign)

    def special(self, b: int) -> bool:
        return b in (0, self.full)

    # cube data ------------------------------------------------------------

    def partners(self, b: int) -> list[int]:
        """Minus-side stitch partners of ``b``+, excluding 0 and 1."""
        out = []
        for t in stitch_targets(b, self.n):
            if not self.special(t) and t not in out:
                out.append(t)
        return out

    def lean(self) -> list[int]:
        return [b for b in range(1, self.full) if is_lean(b, self.n)]

    def lean_edges(self) -> list[tuple[int, int]]:
        out = []
        for x in self.lean():
            for i in range(self.n):
                y = x | (1 << i)
                if y != x and not self.special(y) and is_lean(y, self.n):
                    out.append((x, y))
        return out

    def unit(self, i: int) -> int:
        """Weight-one vertex with coordinate ``i`` (1-based, cyclic)."""
        return 1 << ((i - 1) % self.n)

    def shift(self, b: int) -> int:
        return rotate(b, self.n)

    # primitive calls ------------------------------------------------------

    def call(self, fn: Callable[..., PathCover], *args, **extra) -> list[list[int]]:
        return fn(self.Q, *args, log=self.log, **extra, **self.kw).paths


def _first(candidates: Iterator, build: Callable) -> list[CubeVertex]:
    """First candidate whose anchors meet the case hypotheses."""
    for cand in candidates:
        try:
            return build(*cand)
        except PreconditionError:
            continue
    raise ConstructionError("no admissible anchor configuration")


def _neighbours_in(path: list[int], x: int) -> tuple[int, int]:
    i = path.index(x)
    if i == 0 or i == len(path) - 1:
        raise PreconditionError("vertex is a path end")
    return path[i - 1], path[i + 1]


def _splice(path: list[CubeVertex], a: CubeVertex, b: CubeVertex, detour: list[CubeVertex]) -> list[CubeVertex]:
    """Insert ``detour`` between consecutive vertices ``a`` and ``b``."""
    for i in range(len(path) - 1):
        if path[i] == a and path[i + 1] == b:
            return path[: i + 1] + detour + path[i + 1 :]
        if path[i] == b and path[i + 1] == a:
            return path[: i + 1] + detour[::-1] + path[i + 1 :]
    raise ValueError("edge not on path")


# ---------------------------------------------------------------------------
# wheel, n odd


def _wheel_odd(c: _Ctx, u: CubeVertex, v: CubeVertex) -> tuple[str, list[CubeVertex]]:
    if u.sign == MINUS and v.sign == MINUS:
        return _via(c, c.sigma, u, v, _wheel_odd)
    if u.sign == MINUS:
        return _reverse(c, u, v, _wheel_odd)
    if v.sign == PLUS:
        cu, cv = color(u.bits), color(v.bits)
        if cu and not cv:
            return "wheel-odd-1a", _w1a(c, u.bits, v.bits)
        if not cu and cv:
            return _reverse(c, u, v, _wheel_odd)
        if not cu:
            return _via(c, c.kappa, u, v, _wheel_odd)
        return "wheel-odd-1b", _w1b(c, u.bits, v.bits)
    if not color(u.bits):
        return _via(c, c.kappa, u, v, _wheel_odd)
    if not color(v.bits):
        return "wheel-odd-1c", _w1c(c, u.bits, v.bits)
    return "wheel-odd-1d", _w1d(c, u.bits, v.bits)


def _w1a(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full = c.full
    pc = lemma_36_plus(c.n, full, 0, u, v, log=c.log, **c.kw)
    x, y = pc.meta["lean_edge"]
    red, green = (x, y) if color(x) else (y, x)
    (P2,) = c.call(prim_b, full, 0, red, green)
    path = c.lift(pc.paths[0], PLUS)
    return _splice(path, c.V(red, PLUS), c.V(green, PLUS), c.lift(P2, MINUS))


def _w1b(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full = c.full
    greens = [b for b in c.lean() if not color(b)]

    def cands():
        for g1 in greens:
            for g2 in greens:
                if g1 != g2:
                    for r2 in c.partners(g2):
                        if color(r2):
                            yield g1, g2, r2

    def build(g1, g2, r2):
        P1, P3 = c.call(prim_g, full, 0, u, g1, v, g2)
        (P2,) = c.call(prim_b, full, 0, r2, g1)
        return c.lift(P1, PLUS) + c.lift(P2[::-1], MINUS) + c.lift(P3[::-1], PLUS)

    return _first(cands(), build)


def _w1c(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full = c.full

    def cands():
        for g in c.lean():
            if not color(g):
                for r in c.partners(g):
                    if color(r):
                        yield g, r

    def build(g, r):
        (P1,) = c.call(prim_b, full, 0, u, g)
        (P2,) = c.call(prim_b, full, 0, r, v)
        return c.lift(P1, PLUS) + c.lift(P2, MINUS)

    return _first(cands(), build)


def _w1d(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full = c.full

    def build(g):
        (P1,) = c.call(prim_b, full, 0, u, g)
        (P2,) = c.call(prim_b, full, 0, v, g)
        return c.lift(P1, PLUS) + c.lift(P2[::-1], MINUS)

    return _first(((g,) for g in c.lean() if not color(g)), build)


# ---------------------------------------------------------------------------
# wheel, n even


def _wheel_even(c: _Ctx, u: CubeVertex, v: CubeVertex) -> tuple[str, list[CubeVertex]]:
    if u.sign == MINUS and v.sign == MINUS:
        return _via(c, c.sigma, u, v, _wheel_even)
    if u.sign == MINUS:
        return _reverse(c, u, v, _wheel_even)
    cu, cv = color(u.bits), color(v.bits)
    if v.sign == PLUS:
        if cu and not cv:
            return _reverse(c, u, v, _wheel_even)
        if not cu and cv:
            return "wheel-even-2a", _w2a(c, u.bits, v.bits)
        if cu:
            return "wheel-even-2b", _w2b(c, u.bits, v.bits)
        return "wheel-even-2c", _w2c(c, u.bits, v.bits)
    if not cu and cv:
        return "wheel-even-2d", _w2d(c, u.bits, v.bits)
    if cu and cv:
        return "wheel-even-2e", _w2e(c, u.bits, v.bits)
    if not cu and not cv:
        return "wheel-even-2f", _w2d(c, u.bits, v.bits, to_copy=True)
    # u+ red, v- green: reverse and reflect across the copies
    return _reverse(c, u, v, lambda c2, a, b: _via(c2, c2.sigma, a, b, _wheel_even))


def _around_specials(c: _Ctx, P: list[int]) -> tuple[int, int, int, int]:
    r1, r2 = _neighbours_in(P, 0)
    r3, r4 = _neighbours_in(P, c.full)
    return r1, r2, r3, r4


def _put(path: list[CubeVertex], x: CubeVertex, detour: list[CubeVertex]) -> list[CubeVertex]:
    """Swap the interior vertex ``x`` for ``detour``, oriented to fit."""
    i = path.index(x)
    if detour[0].bits != path[i - 1].bits:
        detour = detour[::-1]
    return path[:i] + detour + path[i + 1 :]


def _detour(c: _Ctx, path: list[CubeVertex], b: int, seg: list[int]) -> list[CubeVertex]:
    """Replace ``b``+ by the minus-side path ``seg`` between its neighbours' copies."""
    return _put(path, c.V(b, PLUS), c.lift(seg, MINUS))


def _any_edge(avoid: set[int], n: int, ends: tuple[int, int]) -> Iterator[tuple[int, int]]:
    for x in range(1 << n):
        for i in range(n):
            y = x ^ (1 << i)
            if x < y and x not in avoid and y not in avoid and {x, y} != set(ends):
                yield x, y


def _w2a(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full = c.full

    def build(e):
        (P1,) = c.call(prim_a, u, v, e)
        r1, r2, r3, r4 = _around_specials(c, P1)
        A, B = c.call(prim_f, 0, full, r1, r2, r3, r4)
        return _detour(c, _detour(c, c.lift(P1, PLUS), 0, A), full, B)

    return _first(((e,) for e in _any_edge(set(), c.n, (u, v))), build)


def _common_partners(c: _Ctx, x: int, y: int) -> list[int]:
    py = c.partners(y)
    return [t for t in c.partners(x) if t in py]


def _w2b(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full, n = c.full, c.n

    def cands():
        for x, y in c.lean_edges():
            if 2 <= x.bit_count() and y.bit_count() <= n - 2 and not {x, y} & {u, v}:
                for r in _common_partners(c, x, y):
                    if color(r):
                        yield x, y, r

    def build(x, y, r):
        (P1,) = c.call(prim_d, full, u, v, (x, y))
        r1, r2 = _neighbours_in(P1, 0)
        if r in (r1, r2):
            raise PreconditionError("grabbed vertex is a detour end")
        (P2,) = c.call(prim_e, r, 0, full, r1, r2)
        path = c.lift(P1, PLUS)
        path = _splice(path, c.V(x, PLUS), c.V(y, PLUS), [c.V(r, MINUS)])
        return _detour(c, path, 0, P2)

    return _first(cands(), build)


def _w2c(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full = c.full

    def build(k):
        r = c.unit(k)
        g = r | c.unit(k + 1)
        (P1,) = c.call(prim_d, r, u, v)
        r1, r2, r3, r4 = _around_specials(c, P1)
        pc = lemma_43_plus(c.n, r1, r2, r, r3, r4, g, log=c.log, **c.kw)
        A, B = pc.paths
        # the 0-detour borrows r+ between r- and g-
        A = _splice(c.lift(A, MINUS), c.V(r, MINUS), c.V(g, MINUS), [c.V(r, PLUS)])
        path = _put(c.lift(P1, PLUS), c.V(0, PLUS), A)
        return _detour(c, path, full, B)

    return _first(((k,) for k in range(1, c.n + 1)), build)


def _w2d(c: _Ctx, u: int, v: int, to_copy: bool = False) -> list[CubeVertex]:
    """u+ green to v- red; with ``to_copy`` u+ green to v- green."""
    full, n = c.full, c.n

    def cands():
        for k in range(1, n + 1):
            r = c.unit(k)
            for j in range(n):
                if (1 << j) != r:
                    yield r, (r, r ^ (1 << j))

    def build(r, e):
        g = r | c.shift(r)
        banned = []
        if v.bit_count() == 1:
            banned.append((0, v))
        if v.bit_count() == n - 1:
            banned.append((full, v))
        if to_copy:
            banned.append((0, r))
        (P1,) = c.call(prim_a, u, r, e, banned=banned)
        r1, r2, r3, r4 = _around_specials(c, P1)
        if to_copy:
            A, B, T = c.call(prim_h, 0, full, r1, r2, r3, r4, r, v)
            tail = c.lift(T, MINUS)
        else:
            A, B, T = c.call(prim_h, 0, full, r1, r2, r3, r4, v, g)
            tail = c.lift(T[::-1], MINUS)
        path = _detour(c, c.lift(P1, PLUS), 0, A)
        path = _detour(c, path, full, B)
        return path + tail

    return _first(cands(), build)


def _w2e(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full, n = c.full, c.n
    units = [c.unit(k) for k in range(1, n + 1)]

    def cands():
        free = [x for x in units if x not in (u, v)]
        for i, r1 in enumerate(free):
            for r2 in free:
                for r3 in free:
                    if len({r1, r2, r3}) == 3:
                        yield r1, r2, r3

    def build(r1, r2, r3):
        A, B = c.call(prim_f, 0, full, u, r1, r2, r3)
        C, D = c.call(prim_f, 0, full, r1, r2, r3, v)
        return c.lift(A, PLUS) + c.lift(C, MINUS) + c.lift(B, PLUS) + c.lift(D, MINUS)

    return _first(cands(), build)


# ---------------------------------------------------------------------------
# whirl, n odd


def _whirl_same_side(c: _Ctx, u: CubeVertex, v: CubeVertex, again) -> tuple[str, list[CubeVertex]] | None:
    """Normalise so both ends sit on the plus side (0 and 1 count as plus)."""
    su = c.special(u.bits)
    sv = c.special(v.bits)
    if (u.sign == MINUS and not su) and (v.sign == MINUS and not sv):
        return _via(c, c.sigma, u, v, again)
    if (su and v.sign == MINUS and not sv) or (sv and u.sign == MINUS and not su):
        return _via(c, c.sigma, u, v, again)
    return None


def _whirl_odd(c: _Ctx, u: CubeVertex, v: CubeVertex) -> tuple[str, list[CubeVertex]]:
    moved = _whirl_same_side(c, u, v, _whirl_odd)
    if moved is not None:
        return moved
    if u.sign == MINUS:
        return _reverse(c, u, v, _whirl_odd)
    cu, cv = color(u.bits), color(v.bits)
    if v.sign == PLUS:
        if cu and not cv:
            return "whirl-odd-1a", _h1a(c, u.bits, v.bits)
        if not cu and cv:
            return _reverse(c, u, v, _whirl_odd)
        if not cu:
            return _via(c, c.kappa, u, v, _whirl_odd)
        return "whirl-odd-1b", _h1b(c, u.bits, v.bits)
    if not cu:
        return _via(c, c.kappa, u, v, _whirl_odd)
    if not cv:
        return "whirl-odd-1c", _h1c(c, u.bits, v.bits)
    return "whirl-odd-1d", _h1d(c, u.bits, v.bits)


def _lean_edges_avoiding(c: _Ctx, avoid: Iterable[int]) -> list[tuple[int, int]]:
    avoid = set(avoid)
    return [(x, y) for x, y in c.lean_edges() if x not in avoid and y not in avoid]


def _h1a(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full = c.full

    def build(x, y):
        (P1,) = c.call(prim_a, u, v, (x, y))
        red, green = (x, y) if color(x) else (y, x)
        (P2,) = c.call(prim_b, full, 0, red, green)
        return _splice(c.lift(P1, PLUS), c.V(red, PLUS), c.V(green, PLUS), c.lift(P2, MINUS))

    return _first(_lean_edges_avoiding(c, (u, v)), build)


def _h1b(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full = c.full

    def cands():
        for x, y in _lean_edges_avoiding(c, (u, v)):
            red, green = (x, y) if color(x) else (y, x)
            for g1 in c.partners(green):
                for g2 in c.partners(red):
                    if not color(g1) and not color(g2) and g1 != g2:
                        yield red, green, g1, g2

    def build(red, green, g1, g2):
        (P1,) = c.call(prim_d, 0, u, v, (red, green))
        (P2,) = c.call(prim_d, full, g1, g2)
        return _splice(c.lift(P1, PLUS), c.V(green, PLUS), c.V(red, PLUS), c.lift(P2, MINUS))

    return _first(cands(), build)


def _h1c(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full = c.full

    def cands():
        for r in c.lean():
            if color(r) and r != u:
                for g in c.partners(r):
                    if not color(g) and g != v:
                        yield r, g

    def build(r, g):
        (P1,) = c.call(prim_d, 0, u, r)
        (P2,) = c.call(prim_d, full, g, v)
        return c.lift(P1, PLUS) + c.lift(P2, MINUS)

    return _first(cands(), build)


def _h1d(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full = c.full

    def cands():
        for g in c.lean():
            if not color(g):
                for e in _any_edge(set(), c.n, (u, g)):
                    yield g, e
                    break

    def build(g, e):
        (P1,) = c.call(prim_a, u, g, e)
        (P2,) = c.call(prim_b, full, 0, v, g)
        return c.lift(P1, PLUS) + c.lift(P2[::-1], MINUS)

    return _first(cands(), build)


# ---------------------------------------------------------------------------
# whirl, n even


def _whirl_even(c: _Ctx, u: CubeVertex, v: CubeVertex) -> tuple[str, list[CubeVertex]]:
    moved = _whirl_same_side(c, u, v, _whirl_even)
    if moved is not None:
        return moved
    if u.sign == MINUS:
        return _reverse(c, u, v, _whirl_even)
    cu, cv = color(u.bits), color(v.bits)
    if v.sign == PLUS:
        if not cu and cv:
            return _reverse(c, u, v, _whirl_even)
        if cu and not cv:
            if v.bits == 0:
                return _via(c, c.kappa, u, v, _whirl_even)
            return "whirl-even-2a", _e2a(c, u.bits, v.bits)
        if cu:
            return "whirl-even-2b", _e2b(c, u.bits, v.bits)
        return _e2c(c, u, v)
    if cu and not cv:
        return "whirl-even-2d", _e2d(c, u.bits, v.bits)
    if cu and cv:
        return "whirl-even-2e", _e2d(c, u.bits, v.bits, red_end=True)
    if not cu and not cv:
        return "whirl-even-2f", _e2f(c, u.bits, v.bits)
    return _reverse(c, u, v, lambda c2, a, b: _via(c2, c2.sigma, a, b, _whirl_even))


def _e2a(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full = c.full

    def cands():
        reds = [b for b in c.lean() if color(b) and b != u]
        for r1 in reds:
            for r2 in reds:
                if r1 == r2:
                    continue
                for r3 in (r1, c.shift(r1)):
                    for r4 in (r2, c.shift(r2)):
                        if r3 != r4 and not c.special(r3) and not c.special(r4):
                            yield r1, r2, r3, r4

    def build(r1, r2, r3, r4):
        A, B = c.call(prim_c, 0, v, r2, u, r1)
        (C,) = c.call(prim_d, full, r3, r4)
        return c.lift(B, PLUS) + c.lift(C, MINUS) + c.lift(A[::-1], PLUS)

    return _first(cands(), build)


def _e2b(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full = c.full

    def cands():
        for x, y in _lean_edges_avoiding(c, (u, v)):
            r, g = (x, y) if color(x) else (y, x)
            for r1 in c.partners(g):
                if color(r1) and r1 != r:
                    yield r, g, r1

    def build(r, g, r1):
        (P1,) = c.call(prim_d, 0, u, v, (r, g))
        (P2,) = c.call(prim_d, full, r, r1)
        return _splice(c.lift(P1, PLUS), c.V(r, PLUS), c.V(g, PLUS), c.lift(P2, MINUS))

    return _first(cands(), build)


def _e2c(c: _Ctx, u: CubeVertex, v: CubeVertex) -> tuple[str, list[CubeVertex]]:
    full, n = c.full, c.n
    if {u.bits, v.bits} == {0, full}:
        if u.bits == full:
            return _reverse(c, u, v, _whirl_even)
        a = CubeVertex(1, PLUS, n)
        b = CubeVertex(full ^ 1, PLUS, n)
        inner = _solve(WHEEL, n, a, b, c.log, c.kw)
        return "whirl-even-2c-poles", [c.V(0, PLUS)] + inner + [c.V(full, PLUS)]
    if full in (u.bits, v.bits):
        return _via(c, c.kappa, u, v, _whirl_even)
    uu, vv = u.bits, v.bits
    r = full ^ 1

    def cands():
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                r1, r2 = c.unit(i), c.unit(j)
                if r1 not in (r2, c.shift(r2)):
                    yield r1, r2

    def build(r1, r2):
        A, B = c.call(prim_c, r2, r1, vv, uu, full)
        C, D = c.call(prim_f, 0, full, r, r2, c.shift(r2), r1)
        return (
            c.lift(B, PLUS)
            + c.lift(C, MINUS)
            + [c.V(r2, PLUS)]
            + c.lift(D, MINUS)
            + c.lift(A, PLUS)
        )

    return "whirl-even-2c", _first(cands(), build)


def _e2d(c: _Ctx, u: int, v: int, red_end: bool = False) -> list[CubeVertex]:
    """u+ red to v- green; with ``red_end`` u+ red to v- red."""
    full = c.full

    def cands():
        for r1 in c.lean():
            if not color(r1) or r1 == u:
                continue
            firsts = [r1]
            if red_end:
                firsts = [g for g in c.partners(r1) if not color(g)]
            for x, y in _lean_edges_avoiding(c, (u, r1)):
                for r2 in _common_partners(c, x, y):
                    if color(r2) and r2 != r1 and r2 != v:
                        for f in firsts:
                            yield r1, (x, y), r2, f

    def build(r1, e, r2, f):
        (P1,) = c.call(prim_d, 0, u, r1, e)
        if red_end:
            (P2,) = c.call(prim_b, r2, full, v, f)
            P2 = P2[::-1]
        else:
            (P2,) = c.call(prim_b, r2, full, r1, v)
        path = _splice(c.lift(P1, PLUS), c.V(e[0], PLUS), c.V(e[1], PLUS), [c.V(r2, MINUS)])
        return path + c.lift(P2, MINUS)

    return _first(cands(), build)


def _e2f(c: _Ctx, u: int, v: int) -> list[CubeVertex]:
    full, n = c.full, c.n

    def cands():
        units = [c.unit(k) for k in range(1, n + 1)]
        for r1 in units:
            for r2 in units:
                for r3 in units:
                    if len({r1, r2, r3}) == 3:
                        yield r1, r2, r3

    def build(r1, r2, r3):
        A, B = c.call(prim_c, 0, u, r1, r2, r3)
        C, D = c.call(prim_c, full, v, r3, r1, r2)
        return c.lift(A, PLUS) + c.lift(D, MINUS) + c.lift(B, PLUS) + c.lift(C[::-1], MINUS)

    return _first(cands(), build)


# ---------------------------------------------------------------------------
# normalisation and entry points


def _via(c: _Ctx, phi, u, v, solver) -> tuple[str, list[CubeVertex]]:
    """Solve for ``phi(u), phi(v)`` and map back (every ``phi`` is an involution)."""
    name = "kappa" if phi == c.kappa else "sigma"
    c.log.add(call="symmetry", name=name)
    case, path = solver(c, phi(u), phi(v))
    return case, [phi(x) for x in path]


def _reverse(c: _Ctx, u, v, solver) -> tuple[str, list[CubeVertex]]:
    c.log.add(call="symmetry", name="reverse")
    case, path = solver(c, v, u)
    return case, path[::-1]


def _search(kind: str, n: int, u: CubeVertex, v: CubeVertex, node_limit: int) -> list[CubeVertex]:
    model = StitchedModel(n, kind)
    nb = {x: [model.vertices[j] for j in model.adjacency[i]] for i, x in enumerate(model.vertices)}
    out = hamsearch.hamiltonian_path(nb, u, v, node_limit=node_limit)
    if not out.found:
        raise PrimitiveFailure(f"model search {kind}{n} {u}..{v}: {out.status}", out.nodes)
    return out.paths[0]


def _normalise(kind: str, n: int, v: CubeVertex | tuple) -> CubeVertex:
    if not isinstance(v, CubeVertex):
        v = CubeVertex(v[0], v[1], n)
    if v.n != n or not 0 <= v.bits < (1 << n) or v.sign not in (PLUS, MINUS):
        raise ValueError(f"{v} is not a vertex of the {kind} model of order {n}")
    full = (1 << n) - 1
    if v.bits in (0, full):
        if kind == WHEEL:
            raise ValueError(f"{v} is not a vertex of the wheel model")
        v = CubeVertex(v.bits, PLUS, n)
    return v


def _solve(kind, n, u, v, log, kw, method="auto") -> list[CubeVertex]:
    if method == "search" or (method == "auto" and not _construct_ok(kind, n)):
        log.add(call="model-search", kind=kind, n=n)
        return _search(kind, n, u, v, kw.get("node_limit", DEFAULT_NODE_LIMIT))
    if not _construct_ok(kind, n):
        raise ValueError(f"no construction for {kind} of order {n}")
    c = _Ctx(kind, n, log, kw)
    if kind == WHEEL:
        solver = _wheel_odd if n % 2 else _wheel_even
    else:
        solver = _whirl_odd if n % 2 else _whirl_even
    case, path = solver(c, u, v)
    log.add(call="case", case=case)
    return path


def ham_path(
    kind: str,
    n: int,
    u: CubeVertex | tuple,
    v: CubeVertex | tuple,
    *,
    method: str = "auto",
    verify: bool = True,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> PathCover:
    """Hamiltonian path of the base-cobase graph of the wheel or whirl from ``u`` to ``v``.

    Vertices are ``CubeVertex`` values or ``(bits, sign)`` pairs in the
    stitched model.  ``method`` is ``auto`` (construct where the primitives
    apply, search otherwise), ``construct`` or ``search``.
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    u = _normalise(kind, n, u)
    v = _normalise(kind, n, v)
    if u == v:
        raise ValueError("endpoints must differ")
    log = CallLog()
    path = _solve(kind, n, u, v, log, {"node_limit": node_limit}, method)
    cases = [e["case"] for e in log.entries if e.get("call") == "case"]
    meta = {
        "kind": kind,
        "n": n,
        "case": cases[-1] if cases else "search",
        "method": "search" if any(e.get("call") == "model-search" for e in log.entries) and not cases else "construct",
        "log": log.entries,
    }
    if verify:
        problems = model_path_problems(kind, n, path, u, v)
        if problems:
            raise AssertionError(f"{kind}{n} {u}..{v}: " + "; ".join(problems))
        meta["verified"] = True
    return PathCover([path], [(u, v)], meta=meta)


def ham_path_wheel(n: int, u, v, **kw) -> PathCover:
    return ham_path(WHEEL, n, u, v, **kw)


def ham_path_whirl(n: int, u, v, **kw) -> PathCover:
    return ham_path(WHIRL, n, u, v, **kw)
