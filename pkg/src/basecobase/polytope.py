"""Flats, tight sets and the base-cobase polytope, all in exact arithmetic."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from math import gcd

from .masks import bits, full_mask, popcount, subsets_of_size, to_bitstring
from .matroid import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    Dual,
    Matroid,
    MatroidError,
    Minor,
    base_cobases,
    components,
    enumerate_bases,
    is_connected,
)

MAX_SCAN = 20


def rank_table(M: Matroid) -> list[int]:
    """``r(A)`` for every ``A``, indexed by mask."""
    if M.n > MAX_SCAN:
        raise BudgetExceeded(f"subset scan limited to n <= {MAX_SCAN}")
    rk = M._rank
    return [rk(A) for A in range(1 << M.n)]


def is_inseparable(M: Matroid, F: int) -> bool:
    """``M|F`` is nonempty and connected."""
    if F == 0:
        return False
    return is_connected(Minor(M, delete=full_mask(M.n) & ~F))


def is_separable_bruteforce(M: Matroid, F: int) -> bool:
    """Some split ``F = F1 + F2`` into nonempty parts has ``r(F) = r(F1) + r(F2)``."""
    if popcount(F) > MAX_SCAN:
        raise BudgetExceeded("separability scan limited to 20 elements")
    if popcount(F) < 2:
        return False
    top = F.bit_length() - 1
    rest = F & ~(1 << top)
    rF = M._rank(F)
    # F1 ranges over nonempty subsets avoiding the top element, so each split is seen once
    F1 = rest
    while F1:
        if M._rank(F1) + M._rank(F & ~F1) == rF:
            return True
        F1 = (F1 - 1) & rest
    return False


@dataclass(frozen=True)
class FlatInfo:
    mask: int
    rank: int
    inseparable_in_M: bool
    inseparable_complement_in_dual: bool
    complement_is_dual_flat: bool

    @property
    def is_flacet(self) -> bool:
        return self.inseparable_in_M and self.inseparable_complement_in_dual and self.complement_is_dual_flat


def _is_flat(table: list[int], n: int, A: int) -> bool:
    ra = table[A]
    for e in range(n):
        if not (A >> e) & 1 and table[A | (1 << e)] == ra:
            return False
    return True


def flat_masks(M: Matroid) -> list[int]:
    table = rank_table(M)
    return [A for A in range(1 << M.n) if _is_flat(table, M.n, A)]


def flats(M: Matroid) -> list[FlatInfo]:
    table = rank_table(M)
    D = Dual(M)
    dtable = rank_table(D)
    full = full_mask(M.n)
    out = []
    for A in range(1 << M.n):
        if not _is_flat(table, M.n, A):
            continue
        comp = full & ~A
        out.append(
            FlatInfo(
                A,
                table[A],
                is_inseparable(M, A),
                is_inseparable(D, comp),
                _is_flat(dtable, M.n, comp),
            )
        )
    return out


def flacets(M: Matroid, nontrivial: bool = True) -> list[int]:
    full = full_mask(M.n)
    return [f.mask for f in flats(M) if f.is_flacet and not (nontrivial and f.mask in (0, full))]


def tight_sets(M: Matroid, nontrivial: bool = False) -> list[int]:
    table = rank_table(M)
    full = full_mask(M.n)
    out = [A for A in range(1 << M.n) if popcount(A) == 2 * table[A]]
    if nontrivial:
        out = [A for A in out if A not in (0, full)]
    return out


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank over the rationals by fraction-free elimination."""
    basis: list[tuple[int, list[int]]] = []  # (pivot column, row)
    for row in rows:
        v = list(row)
        for piv, b in basis:
            if v[piv]:
                a, c = b[piv], v[piv]
                v = [a * x - c * y for x, y in zip(v, b)]
                g = 0
                for x in v:
                    g = gcd(g, x)
                if g > 1:
                    v = [x // g for x in v]
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is not None:
            basis.append((lead, v))
    return len(basis)


def incidence(mask: int, n: int) -> list[int]:
    return [(mask >> i) & 1 for i in range(n)]


def bc_polytope_dim(M: Matroid, budget: int = DEFAULT_BUDGET) -> int:
    fam = base_cobases(M, budget)
    if len(fam) == 0:
        raise MatroidError("empty base-cobase family")
    b0 = incidence(fam.masks[0], M.n)
    rows = [[x - y for x, y in zip(incidence(B, M.n), b0)] for B in fam.masks[1:]]
    return integer_rank(rows)


def is_identically_self_dual(M: Matroid, budget: int = DEFAULT_BUDGET) -> bool:
    fam = enumerate_bases(M, budget)
    return fam.complements().masks == fam.masks


def _lift_family(n: int, keep: int, masks) -> list[int]:
    pos = list(bits(keep))
    out = []
    for m in masks:
        x = 0
        for i in bits(m):
            x |= 1 << pos[i]
        out.append(x)
    return out


def split_family(M: Matroid, F: int, contract_dual: bool = False, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Base-cobases of ``M|F (+) N`` on the original labels.

    ``N`` is ``M/F`` by default, ``M*/F`` with ``contract_dual``.
    """
    full = full_mask(M.n)
    rest = full & ~F
    left = Minor(M, delete=rest)
    right = Minor(Dual(M) if contract_dual else M, contract=F)
    lf = _lift_family(M.n, F, base_cobases(left, budget).masks)
    rt = _lift_family(M.n, rest, base_cobases(right, budget).masks)
    return tuple(sorted(a | b for a in lf for b in rt))


@dataclass
class CodimReport:
    tight: bool
    low_dim: bool
    flacet_split: bool
    tight_witness: int | None
    dim: int
    flacet_witness: int | None
    dual_variant: bool
    n: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.tight == self.low_dim == self.flacet_split

    def to_json(self) -> dict:
        w = lambda m: None if m is None else to_bitstring(m, self.n)
        return {
            "tight_witness": w(self.tight_witness),
            "dim": self.dim,
            "flacet_witness": w(self.flacet_witness),
            "conditions": [self.tight, self.low_dim, self.flacet_split],
            "dual_variant": self.dual_variant,
            "agree": self.agree,
        }


def verify_codim_equivalence(M: Matroid, budget: int = DEFAULT_BUDGET) -> CodimReport:
    """Evaluate the three equivalent conditions for a connected block matroid.

    (i) a nontrivial tight set; (ii) the base-cobase polytope is not full
    dimensional inside the hyperplane; (iii) a nontrivial flacet ``F`` whose
    restriction and contraction are both block with the base-cobases
    splitting as ``M|F (+) M/F``.  ``dual_variant`` records whether (iii)
    also holds when ``M/F`` is replaced by ``M*/F``.
    """
    if M.n > 16:
        raise BudgetExceeded("codim check limited to n <= 16")
    if not is_connected(M):
        raise MatroidError("matroid is not connected")
    bc = base_cobases(M, budget)
    if len(bc) == 0:
        raise MatroidError("matroid is not block")
    tight = tight_sets(M, nontrivial=True)
    dim = bc_polytope_dim(M, budget)
    full = full_mask(M.n)
    split_witness = None
    dual_ok = False
    for F in flacets(M):
        left = Minor(M, delete=full & ~F)
        right = Minor(M, contract=F)
        if 2 * left.r != left.n or 2 * right.r != right.n:
            continue
        fam = split_family(M, F, budget=budget)
        if fam and fam == bc.masks:
            if split_witness is None:
                split_witness = F
        if not dual_ok and split_family(M, F, contract_dual=True, budget=budget) == bc.masks:
            dual_ok = True
    return CodimReport(
        tight=bool(tight),
        low_dim=dim < M.n - 1,
        flacet_split=split_witness is not None,
        tight_witness=tight[0] if tight else None,
        dim=dim,
        flacet_witness=split_witness,
        dual_variant=dual_ok,
        n=M.n,
    )


def flat_inequalities_hold(M: Matroid, budget: int = DEFAULT_BUDGET) -> bool:
    """Every base satisfies ``|B & F| <= r(F)``; each flacet is tight at some base."""
    if M.n > 12:
        raise BudgetExceeded("flat inequality check limited to n <= 12")
    fam = enumerate_bases(M, budget).masks
    info = flats(M)
    for f in info:
        if any(popcount(B & f.mask) > f.rank for B in fam):
            return False
        if f.is_flacet and not any(popcount(B & f.mask) == f.rank for B in fam):
            return False
    return True


def lattice_points(M: Matroid) -> tuple[int, ...]:
    """r-sets satisfying the flat inequalities of both ``M`` and ``M*``."""
    if M.n > 16:
        raise BudgetExceeded("lattice point scan limited to n <= 16")
    D = Dual(M)
    fm = [(F, M._rank(F)) for F in flat_masks(M)]
    fd = [(F, D._rank(F)) for F in flat_masks(D)]
    out = []
    for x in subsets_of_size(M.n, M.r):
        if popcount(x) != D.r:
            continue
        if all(popcount(x & F) <= r for F, r in fm) and all(popcount(x & F) <= r for F, r in fd):
            out.append(x)
    return tuple(out)


def lattice_points_match(M: Matroid, budget: int = DEFAULT_BUDGET) -> bool:
    return lattice_points(M) == base_cobases(M, budget).masks


def component_count(M: Matroid) -> int:
    return len(components(M))
