"""Exact matroids given by a rank oracle over bitmask subsets.

Every concrete family keeps its defining data and answers ``rank(A)``
exactly.  Minors, duals and sums are lazy wrappers around other matroids.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import product
from math import comb

from .masks import (
    MAX_GROUND,
    bits,
    check_mask,
    full_mask,
    mask_of,
    popcount,
    subsets_of_size,
)

DEFAULT_BUDGET = 5_000_000


class MatroidError(ValueError):
    """Invalid matroid data or an operation outside its domain."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured size budget."""


@dataclass(frozen=True)
class BaseFamily:
    """A canonically sorted, duplicate-free list of equal-size masks."""

    n: int
    r: int
    masks: tuple[int, ...]

    @classmethod
    def of(cls, n: int, r: int, masks: Iterable[int]) -> BaseFamily:
        return cls(n, r, tuple(sorted(set(masks))))

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.masks)

    def __contains__(self, mask: object) -> bool:
        return mask in self._lookup

    @property
    def _lookup(self) -> frozenset:
        cached = self.__dict__.get("_set")
        if cached is None:
            cached = frozenset(self.masks)
            object.__setattr__(self, "_set", cached)
        return cached

    def complements(self) -> BaseFamily:
        full = full_mask(self.n)
        return BaseFamily.of(self.n, self.n - self.r, (full ^ b for b in self.masks))


class Matroid:
    """Base class: subclasses set ``n`` and ``r`` and implement ``_rank``."""

    n: int
    r: int
    kind = "abstract"

    def rank(self, A: int) -> int:
        check_mask(A, self.n)
        return self._rank(A)

    def _rank(self, A: int) -> int:
        raise NotImplementedError

    def is_independent(self, A: int) -> bool:
        return self.rank(A) == popcount(A)

    def is_basis(self, A: int) -> bool:
        return popcount(A) == self.r and self.is_independent(A)

    @property
    def ground(self) -> int:
        return full_mask(self.n)

    def closure(self, A: int) -> int:
        ra = self.rank(A)
        cl = A
        for e in range(self.n):
            if not (A >> e) & 1 and self._rank(A | (1 << e)) == ra:
                cl |= 1 << e
        return cl

    def describe(self) -> dict:
        return {"type": self.kind, "n": self.n}

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, r={self.r})"


def _check_ground(n: int) -> None:
    if n < 0 or n > MAX_GROUND:
        raise MatroidError(f"ground set size {n} outside 0..{MAX_GROUND}")


class Uniform(Matroid):
    kind = "uniform"

    def __init__(self, r: int, n: int):
        _check_ground(n)
        if not 0 <= r <= n:
            raise MatroidError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
        self.n, self.r = n, r

    def _rank(self, A):
        return min(popcount(A), self.r)

    def describe(self):
        return {"type": "uniform", "n": self.n, "r": self.r}


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of integer bit rows."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = row
                rank += 1
                break
            row ^= p
    return rank


class LinearGF2(Matroid):
    """Column matroid of a binary matrix; ``rows[i]`` bit j is entry (i, j)."""

    kind = "gf2"

    def __init__(self, rows: Sequence[int], n: int):
        _check_ground(n)
        self.rows = tuple(rows)
        for row in self.rows:
            check_mask(row, n)
        self.n = n
        self.r = gf2_rank(self.rows)

    def _rank(self, A):
        return gf2_rank(row & A for row in self.rows)

    def describe(self):
        return {
            "type": "gf2",
            "rows": ["".join("1" if (row >> j) & 1 else "0" for j in range(self.n)) for row in self.rows],
        }


class Graphic(Matroid):
    """Cycle matroid; element i is ``edges[i]``."""

    kind = "graphic"

    def __init__(self, edges: Sequence[tuple[int, int]]):
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        _check_ground(len(self.edges))
        self.n = len(self.edges)
        self.vertices = sorted({x for e in self.edges for x in e})
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        self.r = self._rank(full_mask(self.n))

    def _rank(self, A):
        parent = list(range(len(self.vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        rank = 0
        for i in bits(A):
            u, v = self.edges[i]
            a, b = find(self._vindex[u]), find(self._vindex[v])
            if a != b:
                parent[a] = b
                rank += 1
        return rank

    def describe(self):
        return {"type": "graphic", "edges": [list(e) for e in self.edges]}


class Transversal(Matroid):
    """Transversal matroid of the set system ``sets`` (masks over the ground set)."""

    kind = "transversal"

    def __init__(self, n: int, sets: Sequence[int]):
        _check_ground(n)
        self.n = n
        self.sets = tuple(sets)
        for s in self.sets:
            check_mask(s, n)
        self._member_of = [[j for j, s in enumerate(self.sets) if (s >> e) & 1] for e in range(n)]
        self.r = self._rank(full_mask(n))

    def _rank(self, A):
        match_set: dict[int, int] = {}

        def augment(e, seen):
            for j in self._member_of[e]:
                if j in seen:
                    continue
                seen.add(j)
                if j not in match_set or augment(match_set[j], seen):
                    match_set[j] = e
                    return True
            return False

        size = 0
        for e in bits(A):
            if augment(e, set()):
                size += 1
        return size

    def describe(self):
        return {"type": "transversal", "n": self.n, "sets": [list(bits(s)) for s in self.sets]}


_UPSET_MAX_N = 22


def _contains_member(masks: Sequence[int], n: int) -> int:
    """Bit ``Y`` is set iff some mask is a subset of ``Y`` (as one big int)."""
    size = 1 << n
    table = 0
    for m in masks:
        table |= 1 << m
    for i in range(n):
        step = 1 << i
        period = step << 1
        low = ((1 << size) - 1) // ((1 << period) - 1) * ((1 << step) - 1)
        table |= (table & low) << step
    return table


def exchange_violation(masks: Sequence[int]) -> tuple[int, int, int] | None:
    """Some ``(B, B', e)`` breaking the basis exchange axiom, else ``None``.

    For ``e`` in ``B`` let ``S`` be the ``f`` with ``B - e + f`` in the family;
    exchange fails at ``(B, e)`` iff some member avoids ``{e} | S``.  With a
    subset-closure table that is one lookup per ``(B, e)``.
    """
    masks = list(masks)
    if not masks:
        return None
    n = max(masks).bit_length()
    if n > _UPSET_MAX_N:
        return _exchange_violation_pairs(masks)
    family = set(masks)
    full = (1 << n) - 1
    table = _contains_member(masks, n)
    for B in masks:
        outside = full & ~B
        for e in bits(B):
            base = B & ~(1 << e)
            S = 0
            for f in bits(outside):
                if (base | (1 << f)) in family:
                    S |= 1 << f
            avoid = full & ~(S | (1 << e))
            if (table >> avoid) & 1:
                B2 = next(m for m in masks if m & avoid == m)
                return B, B2, e
    return None


def _exchange_violation_pairs(masks: Sequence[int]) -> tuple[int, int, int] | None:
    family = set(masks)
    for B in masks:
        for B2 in masks:
            diff = B & ~B2
            if not diff:
                continue
            other = B2 & ~B
            for e in bits(diff):
                base = B & ~(1 << e)
                if not any((base | (1 << f)) in family for f in bits(other)):
                    return B, B2, e
    return None


class ExplicitBases(Matroid):
    """Matroid given by its full list of bases; rank is ``max |A & B|``."""

    kind = "explicit"

    def __init__(self, n: int, bases: Iterable[int], *, validate: bool = True):
        _check_ground(n)
        self.n = n
        fam = sorted(set(bases))
        if not fam:
            raise MatroidError("a matroid needs at least one basis")
        for b in fam:
            check_mask(b, n)
        sizes = {popcount(b) for b in fam}
        if len(sizes) != 1:
            raise MatroidError("bases must have equal cardinality")
        self.r = sizes.pop()
        self._bases = tuple(fam)
        self._set = frozenset(fam)
        if validate and len(fam) <= 2000:
            bad = exchange_violation(fam)
            if bad is not None:
                raise MatroidError(f"basis exchange fails for {bad}")

    @property
    def bases(self) -> tuple[int, ...]:
        return self._bases

    def is_basis(self, A):
        return A in self._set

    def _rank(self, A):
        if A in self._set:
            return self.r
        return max(popcount(A & b) for b in self._bases)

    def describe(self):
        return {"type": "explicit", "n": self.n, "bases": [list(bits(b)) for b in self._bases]}


class DirectSum(Matroid):
    """Elements of ``left`` come first, then ``right`` shifted by ``left.n``."""

    kind = "sum"

    def __init__(self, left: Matroid, right: Matroid):
        _check_ground(left.n + right.n)
        self.left, self.right = left, right
        self.n = left.n + right.n
        self.r = left.r + right.r
        self._lo = full_mask(left.n)

    def _rank(self, A):
        return self.left._rank(A & self._lo) + self.right._rank(A >> self.left.n)

    def is_basis(self, A):
        return self.left.is_basis(A & self._lo) and self.right.is_basis(A >> self.left.n)

    def describe(self):
        return {"type": "sum", "parts": [self.left.describe(), self.right.describe()]}


class Dual(Matroid):
    kind = "dual"

    def __init__(self, inner: Matroid):
        self.inner = inner
        self.n = inner.n
        self.r = inner.n - inner.r

    def _rank(self, A):
        return popcount(A) - self.inner.r + self.inner._rank(full_mask(self.n) & ~A)

    def is_basis(self, A):
        return popcount(A) == self.r and self.inner.is_basis(full_mask(self.n) & ~A)

    def describe(self):
        return {"type": "dual", "of": self.inner.describe()}


class Minor(Matroid):
    """``inner / contract \\ delete`` on the surviving elements, relabelled in order."""

    kind = "minor"

    def __init__(self, inner: Matroid, contract: int = 0, delete: int = 0):
        check_mask(contract, inner.n)
        check_mask(delete, inner.n)
        if contract & delete:
            raise MatroidError("contract and delete sets overlap")
        self.inner = inner
        self.contract, self.delete = contract, delete
        self.keep = [e for e in range(inner.n) if not ((contract | delete) >> e) & 1]
        self.n = len(self.keep)
        self._rt = inner._rank(contract)
        self.r = inner._rank(contract | mask_of(self.keep)) - self._rt

    def lift(self, A: int) -> int:
        """Translate a minor mask into the inner ground set."""
        out = 0
        for i in bits(A):
            out |= 1 << self.keep[i]
        return out

    def _rank(self, A):
        return self.inner._rank(self.lift(A) | self.contract) - self._rt

    def describe(self):
        return {
            "type": "minor",
            "of": self.inner.describe(),
            "contract": list(bits(self.contract)),
            "delete": list(bits(self.delete)),
        }


class ParallelExtension(Matroid):
    """Adds element ``n`` parallel to ``e``."""

    kind = "parallel_ext"

    def __init__(self, inner: Matroid, e: int):
        if not 0 <= e < inner.n:
            raise MatroidError(f"element {e} not in ground set of size {inner.n}")
        _check_ground(inner.n + 1)
        self.inner, self.e = inner, e
        self.n = inner.n + 1
        self.r = inner.r
        self._new = 1 << inner.n

    def _rank(self, A):
        if A & self._new:
            A = (A & ~self._new) | (1 << self.e)
        return self.inner._rank(A)

    def describe(self):
        return {"type": "parallel_ext", "of": self.inner.describe(), "element": self.e}


class SeriesExtension(Matroid):
    """Adds element ``n`` in series with ``e``: the dual of a parallel extension."""

    kind = "series_ext"

    def __init__(self, inner: Matroid, e: int):
        if not 0 <= e < inner.n:
            raise MatroidError(f"element {e} not in ground set of size {inner.n}")
        self.inner, self.e = inner, e
        self._via = Dual(ParallelExtension(Dual(inner), e))
        self.n = inner.n + 1
        self.r = inner.r + 1

    def _rank(self, A):
        return self._via._rank(A)

    def describe(self):
        return {"type": "series_ext", "of": self.inner.describe(), "element": self.e}


def dual(M: Matroid) -> Matroid:
    return M.inner if isinstance(M, Dual) else Dual(M)


def direct_sum(*parts: Matroid) -> Matroid:
    if not parts:
        raise MatroidError("direct_sum needs at least one summand")
    out = parts[0]
    for p in parts[1:]:
        out = DirectSum(out, p)
    return out


def minor(M: Matroid, contract: int = 0, delete: int = 0) -> Minor:
    return Minor(M, contract, delete)


def parallel_extend(M: Matroid, e: int) -> Matroid:
    return ParallelExtension(M, e)


def series_extend(M: Matroid, e: int) -> Matroid:
    return SeriesExtension(M, e)


def enumerate_bases(M: Matroid, budget: int = DEFAULT_BUDGET) -> BaseFamily:
    """All bases, sorted as unsigned integers.

    Raises ``BudgetExceeded`` instead of truncating.
    """
    if isinstance(M, ExplicitBases):
        if len(M.bases) > budget:
            raise BudgetExceeded(f"{len(M.bases)} stored bases exceed budget {budget}")
        return BaseFamily(M.n, M.r, M.bases)
    if isinstance(M, Dual):
        return enumerate_bases(M.inner, budget).complements()
    if isinstance(M, DirectSum):
        lf = enumerate_bases(M.left, budget)
        rt = enumerate_bases(M.right, budget)
        if len(lf) * len(rt) > budget:
            raise BudgetExceeded(f"{len(lf) * len(rt)} bases exceed budget {budget}")
        shift = M.left.n
        return BaseFamily.of(M.n, M.r, (a | (b << shift) for a, b in product(lf.masks, rt.masks)))
    stored = getattr(M, "stored_bases", None)
    if stored is not None:
        if len(stored) > budget:
            raise BudgetExceeded(f"{len(stored)} stored bases exceed budget {budget}")
        return BaseFamily.of(M.n, M.r, stored)
    total = comb(M.n, M.r)
    if total > budget:
        raise BudgetExceeded(f"C({M.n},{M.r}) = {total} candidate sets exceed budget {budget}")
    is_basis = M.is_basis
    return BaseFamily(M.n, M.r, tuple(A for A in subsets_of_size(M.n, M.r) if is_basis(A)))


def base_cobases(M: Matroid, budget: int = DEFAULT_BUDGET) -> BaseFamily:
    """Bases whose complement is also a basis (empty unless ``n == 2r``)."""
    if M.n != 2 * M.r:
        return BaseFamily(M.n, M.r, ())
    fam = enumerate_bases(M, budget)
    full = full_mask(M.n)
    return BaseFamily(M.n, M.r, tuple(b for b in fam.masks if (full ^ b) in fam))


def is_block(M: Matroid, budget: int = DEFAULT_BUDGET) -> bool:
    return len(base_cobases(M, budget)) > 0


def greedy_basis(M: Matroid) -> int:
    B = 0
    for e in range(M.n):
        if M._rank(B | (1 << e)) > popcount(B):
            B |= 1 << e
    return B


def components(M: Matroid) -> list[int]:
    """Connected components as masks, via the fundamental graph of one basis."""
    B = greedy_basis(M)
    parent = list(range(M.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    r = M.r
    for e in range(M.n):
        if (B >> e) & 1:
            continue
        for b in bits(B):
            cand = (B & ~(1 << b)) | (1 << e)
            if M._rank(cand) == r:
                parent[find(e)] = find(b)
    groups: dict[int, int] = {}
    for e in range(M.n):
        root = find(e)
        groups[root] = groups.get(root, 0) | (1 << e)
    return sorted(groups.values())


def is_connected(M: Matroid) -> bool:
    return len(components(M)) <= 1


def has_separator(M: Matroid, max_n: int = 20) -> bool:
    """Brute-force scan for ``F`` with ``r(F) + r(E - F) = r(E)``."""
    if M.n > max_n:
        raise BudgetExceeded(f"separator scan limited to n <= {max_n}")
    full = full_mask(M.n)
    for F in range(1, 1 << (M.n - 1)):
        # fix the top element outside F to visit each split once
        if M._rank(F) + M._rank(full ^ F) == M.r:
            return True
    return False
