from __future__ import annotations

import random

import oracles
import pytest
from hypothesis import given
from hypothesis import strategies as st

from basecobase.bcg import HOLDS, check_mat
from basecobase.lpm import (
    LatticePathPair,
    SpexTower,
    bc_envelope,
    envelope_family,
    lpm_bases,
    lpm_dual,
    lpm_matroid,
    peeled_bc_family,
    random_block_pair,
    random_pair,
    random_tower,
    verify_spex_preservation,
)
from basecobase.matroid import (
    MatroidError,
    Uniform,
    base_cobases,
    direct_sum,
    enumerate_bases,
    is_connected,
)
from basecobase.polytope import (
    bc_polytope_dim,
    flacets,
    flat_inequalities_hold,
    integer_rank,
    is_inseparable,
    is_separable_bruteforce,
    lattice_points_match,
    tight_sets,
    verify_codim_equivalence,
)
from basecobase.r10 import r10_matroid
from basecobase.wheels import wheel, whirl

# --- lattice path matroids ------------------------------------------------------


def _brute_lpm(pair: LatticePathPair) -> list[int]:
    """All r-subsets whose path stays between the boundaries."""
    from itertools import combinations

    out = []
    for c in combinations(range(pair.n), pair.r):
        h, ok = 0, True
        for i in range(pair.n):
            h += i in c
            if not pair.lower[i + 1] <= h <= pair.upper[i + 1]:
                ok = False
                break
        if ok:
            out.append(oracles.to_mask(c))
    return sorted(out)


@given(st.integers(0, 10**6), st.integers(1, 4), st.integers(1, 4))
def test_lpm_bases_match_brute_force(seed, m, r):
    pair = random_pair(random.Random(seed), m, r)
    assert lpm_bases(pair) == _brute_lpm(pair)
    assert oracles.exchange_ok(lpm_bases(pair))


@given(st.integers(0, 10**6), st.integers(1, 4), st.integers(1, 4))
def test_lpm_dual_is_matroid_dual(seed, m, r):
    pair = random_pair(random.Random(seed), m, r)
    full = (1 << pair.n) - 1
    assert sorted(full ^ b for b in lpm_bases(pair)) == lpm_bases(lpm_dual(pair))


def test_path_parsing():
    pair = LatticePathPair.from_paths("NNEE", "EENN")
    assert (pair.n, pair.r, pair.U, pair.L) == (4, 2, "NNEE", "EENN")
    assert len(lpm_bases(pair)) == 6
    with pytest.raises(MatroidError):
        LatticePathPair.from_paths("NEEE", "EENN")
    with pytest.raises(MatroidError):
        LatticePathPair.from_paths("EENN", "NNEE")
    with pytest.raises(MatroidError):
        LatticePathPair.from_paths("NXEE", "EENN")


@pytest.mark.parametrize("seed", range(12))
def test_envelope_gives_base_cobases(seed):
    rng = random.Random(seed)
    pair = random_block_pair(rng, rng.randint(1, 6))
    M = lpm_matroid(pair)
    bc = base_cobases(M)
    assert bc.masks == envelope_family(pair)
    assert len(bc) > 0
    assert check_mat(bc).verdict == HOLDS
    env = bc_envelope(pair)
    assert env is not None and tuple(lpm_bases(env)) == bc.masks


def test_envelope_needs_square():
    with pytest.raises(MatroidError):
        bc_envelope(LatticePathPair.from_paths("NNE", "ENN"))


@pytest.mark.parametrize("seed", range(10))
def test_spex_towers(seed):
    tower = random_tower(random.Random(seed))
    rep = verify_spex_preservation(tower)
    assert rep.ok
    M = tower.build()
    fam, _ = peeled_bc_family(M)
    assert fam == base_cobases(M).masks


def test_spex_tower_by_hand():
    core = LatticePathPair.from_paths("NE", "EN")
    tower = SpexTower(core, (("p", 0), ("s", 1)))
    M = tower.build()
    assert (M.n, M.r) == (4, 2)
    assert verify_spex_preservation(tower).ok
    with pytest.raises(MatroidError):
        SpexTower(core, (("x", 0),)).build()


# --- polytope -------------------------------------------------------------------


def test_integer_rank():
    assert integer_rank([[1, 0], [0, 1], [1, 1]]) == 2
    assert integer_rank([[2, 4], [1, 2]]) == 1


def test_separators():
    S = direct_sum(Uniform(1, 2), Uniform(1, 2))
    assert is_inseparable(S, 0b0011)
    assert not is_inseparable(S, 0b0101)
    assert is_separable_bruteforce(S, 0b0101)
    assert not is_separable_bruteforce(S, 0b0011)
    assert is_inseparable(Uniform(2, 4), 0b0111)
    assert not is_inseparable(Uniform(2, 4), 0b0011)


def test_flat_inequalities_and_lattice_points():
    for M in (whirl(3), wheel(3), Uniform(2, 4), Uniform(3, 6)):
        assert flat_inequalities_hold(M)
        assert lattice_points_match(M)


def test_uniform_has_no_tight_sets_and_full_dimension():
    M = Uniform(3, 6)
    assert tight_sets(M, nontrivial=True) == []
    assert bc_polytope_dim(M) == M.n - 1
    rep = verify_codim_equivalence(M)
    assert rep.agree and not rep.tight


@pytest.mark.parametrize("M", [whirl(3), wheel(4), whirl(4), wheel(5), r10_matroid()], ids=str)
def test_codim_agreement_on_families(M):
    rep = verify_codim_equivalence(M)
    assert rep.agree
    assert set(rep.to_json()) >= {"conditions", "agree", "dim"}


def test_codim_nontrivial_tight_example():
    # the block LPM fixtures include several with tight sets
    found = 0
    for seed in range(40):
        pair = random_block_pair(random.Random(seed), random.Random(seed).randint(2, 5))
        M = lpm_matroid(pair)
        if not is_connected(M):
            continue
        rep = verify_codim_equivalence(M)
        assert rep.agree
        found += rep.tight
    assert found >= 1


def test_codim_rejects_disconnected():
    with pytest.raises(MatroidError):
        verify_codim_equivalence(direct_sum(Uniform(1, 2), Uniform(1, 2)))


def test_flacets_of_uniform_are_empty_nontrivially():
    assert flacets(Uniform(2, 4)) == []
    assert len(enumerate_bases(Uniform(2, 4))) == 6
