from __future__ import annotations

from itertools import combinations

import oracles
import pytest
from hypothesis import given
from hypothesis import strategies as st

from basecobase.masks import (
    all_subsets,
    complement,
    from_bitstring,
    mask_of,
    popcount,
    subsets_of_size,
    to_bitstring,
)
from basecobase.matroid import (
    BudgetExceeded,
    ExplicitBases,
    Graphic,
    LinearGF2,
    MatroidError,
    Transversal,
    Uniform,
    base_cobases,
    components,
    direct_sum,
    dual,
    enumerate_bases,
    exchange_violation,
    is_connected,
    minor,
    parallel_extend,
    series_extend,
)

# --- masks -----------------------------------------------------------------


@given(st.integers(0, 2**12 - 1))
def test_bitstring_round_trip(m):
    assert from_bitstring(to_bitstring(m, 12)) == m
    assert popcount(m) == to_bitstring(m, 12).count("1")


def test_bitstring_is_position_zero_first():
    assert to_bitstring(0b001, 3) == "100"
    with pytest.raises(ValueError):
        from_bitstring("10x")


@given(st.integers(0, 10), st.data())
def test_subsets_of_size_matches_combinations(n, data):
    k = data.draw(st.integers(0, n))
    got = list(subsets_of_size(n, k))
    assert got == sorted(mask_of(c) for c in combinations(range(n), k))


def test_complement_and_range():
    assert complement(0b0101, 4) == 0b1010
    assert len(all_subsets(5)) == 32


# --- strategies --------------------------------------------------------------


@st.composite
def gf2_matroids(draw):
    n = draw(st.integers(1, 8))
    k = draw(st.integers(1, 4))
    rows = [draw(st.integers(0, 2**n - 1)) for _ in range(k)]
    return LinearGF2(rows, n)


@st.composite
def graphic_matroids(draw):
    v = draw(st.integers(2, 5))
    m = draw(st.integers(1, 8))
    edges = [(draw(st.integers(0, v - 1)), draw(st.integers(0, v - 1))) for _ in range(m)]
    return Graphic(edges)


@st.composite
def transversal_matroids(draw):
    n = draw(st.integers(1, 7))
    k = draw(st.integers(1, 4))
    sets = [draw(st.integers(1, 2**n - 1)) for _ in range(k)]
    return Transversal(n, sets)


any_matroid = st.one_of(
    gf2_matroids(),
    graphic_matroids(),
    transversal_matroids(),
    st.integers(0, 7).flatmap(lambda n: st.integers(0, n).map(lambda r: Uniform(r, n))),
)


# --- rank axioms and oracles ---------------------------------------------------


@given(any_matroid, st.data())
def test_rank_axioms(M, data):
    A = data.draw(st.integers(0, 2**M.n - 1))
    B = data.draw(st.integers(0, 2**M.n - 1))
    ra, rb = M.rank(A), M.rank(B)
    assert 0 <= ra <= popcount(A)
    assert M.rank(A | B) + M.rank(A & B) <= ra + rb
    if A & B == A:
        assert ra <= rb
    assert M.rank(M.ground) == M.r


@given(gf2_matroids())
def test_gf2_rank_matches_oracle(M):
    cols = [tuple((row >> j) & 1 for row in M.rows) for j in range(M.n)]
    for A in range(1 << M.n):
        assert M.rank(A) == oracles.gf2_rank_columns([cols[j] for j in oracles.to_set(A)] or [()])


@given(graphic_matroids())
def test_graphic_rank_matches_oracle(M):
    for A in range(1 << M.n):
        assert M.rank(A) == oracles.forest_rank(M.edges, oracles.to_set(A))


@given(any_matroid)
def test_bases_satisfy_exchange(M):
    fam = enumerate_bases(M)
    assert oracles.exchange_ok(fam.masks)
    assert exchange_violation(list(fam.masks)) is None


@given(any_matroid)
def test_duality_round_trip(M):
    D = dual(M)
    assert dual(D) is M
    assert D.r == M.n - M.r
    full = M.ground
    for A in range(1 << M.n):
        assert D.rank(A) == popcount(A) - M.r + M.rank(full ^ A)
    assert enumerate_bases(D).masks == enumerate_bases(M).complements().masks


@given(any_matroid, st.data())
def test_minor_rank(M, data):
    C = data.draw(st.integers(0, 2**M.n - 1))
    Dl = data.draw(st.integers(0, 2**M.n - 1)) & ~C
    N = minor(M, C, Dl)
    keep = [e for e in range(M.n) if not (C | Dl) >> e & 1]
    assert N.n == len(keep)
    for A in range(1 << N.n):
        lifted = mask_of(keep[i] for i in oracles.to_set(A))
        assert N.rank(A) == M.rank(lifted | C) - M.rank(C)


def test_wheel_spanning_trees():
    from basecobase.wheels import wheel

    for n, count in oracles.WHEEL_BASES.items():
        assert len(enumerate_bases(wheel(n))) == count
        if n <= 5:
            edges = oracles.wheel_graph_edges(n)
            brute = oracles.bases_by_rank(2 * n, lambda s, edges=edges: oracles.forest_rank(edges, s))
            assert enumerate_bases(wheel(n)).masks == tuple(brute)


def test_direct_sum_and_extensions():
    U = Uniform(1, 2)
    S = direct_sum(U, U, U)
    assert (S.n, S.r, len(enumerate_bases(S))) == (6, 3, 8)
    assert len(base_cobases(S)) == 8
    P = parallel_extend(Uniform(1, 1), 0)
    assert enumerate_bases(P).masks == (0b01, 0b10)
    T = series_extend(Uniform(2, 3), 0)
    assert (T.n, T.r) == (4, 3)
    want = oracles.bases_by_rank(4, lambda s: T.rank(oracles.to_mask(s)))
    assert enumerate_bases(T).masks == tuple(want)
    assert oracles.exchange_ok(want)


def test_components():
    S = direct_sum(Uniform(1, 2), Uniform(2, 4))
    assert sorted(components(S)) == [0b000011, 0b111100]
    assert not is_connected(S)
    assert is_connected(Uniform(2, 4))


def test_bad_inputs():
    with pytest.raises(MatroidError):
        Uniform(3, 2)
    with pytest.raises(MatroidError):
        ExplicitBases(4, [0b0011, 0b1100])
    with pytest.raises(MatroidError):
        ExplicitBases(3, [])
    with pytest.raises(ValueError):
        Uniform(2, 4).rank(1 << 4)


def test_budget_is_enforced_not_truncated():
    with pytest.raises(BudgetExceeded):
        enumerate_bases(Uniform(6, 12), budget=100)


@given(st.integers(2, 7), st.data())
def test_exchange_check_matches_pairwise_and_oracle(n, data):
    from basecobase.matroid import _exchange_violation_pairs

    r = data.draw(st.integers(1, n - 1))
    pool = list(subsets_of_size(n, r))
    fam = sorted(set(data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=12))))
    fast = exchange_violation(fam)
    assert (fast is None) == (_exchange_violation_pairs(fam) is None) == oracles.exchange_ok(fam)
    if fast is not None:
        B, B2, e = fast
        assert B in fam and B2 in fam and (B >> e) & 1 and not (B2 >> e) & 1
        assert not any(((B & ~(1 << e)) | (1 << f)) in fam for f in oracles.to_set(B2 & ~B))


def test_series_extension_of_u12_is_triangle():
    T = series_extend(Uniform(1, 2), 0)
    assert enumerate_bases(T).masks == (0b011, 0b101, 0b110)
    # contracting the new element gives back U_{1,2}
    assert enumerate_bases(minor(T, contract=0b100)).masks == (0b01, 0b10)
    P = parallel_extend(Uniform(1, 2), 0)
    assert enumerate_bases(minor(P, delete=0b100)).masks == (0b01, 0b10)
