"""Lattice path matroids, reflection duality, the base-cobase envelope, and
series-parallel towers over them."""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import accumulate

from .bcg import check_mat
from .masks import full_mask
from .matroid import (
    DEFAULT_BUDGET,
    BaseFamily,
    Dual,
    ExplicitBases,
    Matroid,
    MatroidError,
    Minor,
    base_cobases,
    parallel_extend,
    series_extend,
)


def _parse_path(path: str | Sequence[int]) -> tuple[int, ...]:
    if isinstance(path, str):
        table = {"N": 1, "E": 0, "1": 1, "0": 0}
        try:
            return tuple(table[c] for c in path.strip().upper())
        except KeyError as exc:
            raise MatroidError(f"bad step {exc.args[0]!r} in path {path!r}") from None
    return tuple(int(bool(x)) for x in path)


@dataclass(frozen=True)
class LatticePathPair:
    """Upper and lower boundary paths, stored as prefix North counts."""

    upper: tuple[int, ...]
    lower: tuple[int, ...]

    @classmethod
    def from_paths(cls, U: str | Sequence[int], L: str | Sequence[int]) -> LatticePathPair:
        u, l = _parse_path(U), _parse_path(L)
        if len(u) != len(l):
            raise MatroidError("paths have different lengths")
        pair = cls((0,) + tuple(accumulate(u)), (0,) + tuple(accumulate(l)))
        pair.validate()
        return pair

    @classmethod
    def from_heights(cls, upper: Sequence[int], lower: Sequence[int]) -> LatticePathPair:
        pair = cls(tuple(upper), tuple(lower))
        pair.validate()
        return pair

    def validate(self) -> None:
        for h in (self.upper, self.lower):
            if h[0] != 0 or any(b - a not in (0, 1) for a, b in zip(h, h[1:])):
                raise MatroidError("not a monotone lattice path")
        if self.upper[-1] != self.lower[-1]:
            raise MatroidError("paths end at different heights")
        if any(u < l for u, l in zip(self.upper, self.lower)):
            raise MatroidError("upper path dips below lower path")

    @property
    def n(self) -> int:
        return len(self.upper) - 1

    @property
    def r(self) -> int:
        return self.upper[-1]

    @property
    def m(self) -> int:
        return self.n - self.r

    @staticmethod
    def _steps(h: Sequence[int]) -> str:
        return "".join("N" if b > a else "E" for a, b in zip(h, h[1:]))

    @property
    def U(self) -> str:
        return self._steps(self.upper)

    @property
    def L(self) -> str:
        return self._steps(self.lower)


def lpm_bases(pair: LatticePathPair) -> list[int]:
    """North-step masks of all paths squeezed between the boundaries."""
    n, up, lo = pair.n, pair.upper, pair.lower
    out: list[int] = []

    def walk(i: int, h: int, mask: int) -> None:
        if i == n:
            out.append(mask)
            return
        if lo[i + 1] <= h <= up[i + 1]:
            walk(i + 1, h, mask)
        if lo[i + 1] <= h + 1 <= up[i + 1]:
            walk(i + 1, h + 1, mask | (1 << i))

    walk(0, 0, 0)
    return sorted(out)


def lpm_matroid(pair: LatticePathPair) -> ExplicitBases:
    return ExplicitBases(pair.n, lpm_bases(pair), validate=False)


def _flip(h: Sequence[int]) -> tuple[int, ...]:
    """Swap North and East steps."""
    return tuple(i - x for i, x in enumerate(h))


def lpm_dual(pair: LatticePathPair) -> LatticePathPair:
    return LatticePathPair(_flip(pair.lower), _flip(pair.upper))


def bc_envelope(pair: LatticePathPair) -> LatticePathPair | None:
    """Boundaries of the base-cobase paths, or ``None`` when there are none."""
    if pair.m != pair.r:
        raise MatroidError("base-cobases need a square diagram (m = r)")
    fu, fl = _flip(pair.upper), _flip(pair.lower)
    upper = tuple(min(a, b) for a, b in zip(pair.upper, fl))
    lower = tuple(max(a, b) for a, b in zip(fu, pair.lower))
    if any(u < l for u, l in zip(upper, lower)):
        return None
    return LatticePathPair(upper, lower)


def envelope_family(pair: LatticePathPair) -> tuple[int, ...]:
    env = bc_envelope(pair)
    return () if env is None else tuple(lpm_bases(env))


def random_pair(rng: random.Random, m: int, r: int) -> LatticePathPair:
    """Two random paths, ordered pointwise into upper and lower."""
    def path() -> tuple[int, ...]:
        steps = [1] * r + [0] * m
        rng.shuffle(steps)
        return (0,) + tuple(accumulate(steps))

    a, b = path(), path()
    return LatticePathPair(tuple(map(max, a, b)), tuple(map(min, a, b)))


def random_block_pair(rng: random.Random, r: int, tries: int = 1000) -> LatticePathPair:
    for _ in range(tries):
        pair = random_pair(rng, r, r)
        if bc_envelope(pair) is not None:
            return pair
    raise RuntimeError("no block diagram found")


# --- series-parallel towers ------------------------------------------------


@dataclass(frozen=True)
class SpexTower:
    """An LPM core followed by parallel ('p') or series ('s') extensions."""

    core: LatticePathPair
    ops: tuple[tuple[str, int], ...] = ()

    def build(self) -> Matroid:
        M: Matroid = lpm_matroid(self.core)
        for kind, e in self.ops:
            if kind == "p":
                M = parallel_extend(M, e)
            elif kind == "s":
                M = series_extend(M, e)
            else:
                raise MatroidError(f"unknown extension {kind!r}")
        return M


def random_tower(rng: random.Random, max_depth: int = 4, max_r: int = 4) -> SpexTower:
    r = rng.randint(1, max_r)
    core = random_block_pair(rng, r)
    ops = []
    n = core.n
    for _ in range(rng.randint(0, max_depth)):
        ops.append((rng.choice("ps"), rng.randrange(n)))
        n += 1
    return SpexTower(core, tuple(ops))


def _pair_of_rank_one(M: Matroid) -> tuple[int, int] | None:
    """Two non-loop elements that are parallel."""
    for e in range(M.n):
        if M._rank(1 << e) == 0:
            continue
        for f in range(e + 1, M.n):
            if M._rank(1 << f) == 1 and M._rank((1 << e) | (1 << f)) == 1:
                return e, f
    return None


def peeled_bc_family(M: Matroid, budget: int = DEFAULT_BUDGET) -> tuple[tuple[int, ...], int]:
    """Base-cobases by splitting off 2-circuits and 2-cocircuits.

    For a parallel pair ``{e, f}`` each base-cobase holds exactly one of the
    two plus a base-cobase of ``M / {e, f}``; for a series pair it is a
    base-cobase of ``M \\ {e, f}`` plus one of the two.  Returns the family
    and the size of the core that was enumerated directly.
    """
    pair = _pair_of_rank_one(M)
    kind = "p"
    if pair is None:
        pair = _pair_of_rank_one(Dual(M))
        kind = "s"
    if pair is None:
        return base_cobases(M, budget).masks, M.n
    e, f = pair
    C = (1 << e) | (1 << f)
    rest = Minor(M, contract=C) if kind == "p" else Minor(M, delete=C)
    if rest.n == 0:
        inner, core_n = ((0,) if rest.r == 0 else ()), 0
    else:
        inner, core_n = peeled_bc_family(rest, budget)
    out = []
    for B in inner:
        lifted = rest.lift(B)
        out.append(lifted | (1 << e))
        out.append(lifted | (1 << f))
    return tuple(sorted(out)), core_n


@dataclass
class SpexReport:
    block: bool
    agree: bool
    mat_holds: bool
    core_n: int
    bc_size: int

    @property
    def ok(self) -> bool:
        return not self.block or (self.agree and self.mat_holds)


def verify_spex_preservation(tower: SpexTower | Matroid, budget: int = DEFAULT_BUDGET) -> SpexReport:
    M = tower.build() if isinstance(tower, SpexTower) else tower
    if M.n > 18:
        raise MatroidError("tower too large (n > 18)")
    direct = base_cobases(M, budget)
    peeled, core_n = peeled_bc_family(M, budget)
    if not direct.masks:
        return SpexReport(False, not peeled, True, core_n, 0)
    mat = check_mat(direct).holds
    return SpexReport(True, peeled == direct.masks, mat, core_n, len(direct))


def bc_family_as_matroid(M: Matroid, budget: int = DEFAULT_BUDGET) -> BaseFamily:
    return base_cobases(M, budget)


def is_square(pair: LatticePathPair) -> bool:
    return pair.m == pair.r


def north_mask(path: str) -> int:
    return sum(1 << i for i, c in enumerate(path.upper()) if c == "N")


def complement_family(masks, n: int) -> tuple[int, ...]:
    full = full_mask(n)
    return tuple(sorted(full ^ b for b in masks))

