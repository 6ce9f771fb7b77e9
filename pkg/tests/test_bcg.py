from __future__ import annotations

import random

import oracles
import pytest
from hypothesis import given
from hypothesis import strategies as st

from basecobase import hamsearch
from basecobase.bcg import (
    FAILS,
    HOLDS,
    UNKNOWN,
    BCGraph,
    base_graph_distance_identity,
    bipartition_report,
    build_base_graph,
    build_bc_graph,
    cartesian_product,
    check_circ,
    check_con,
    check_delta2,
    check_diam,
    check_ham,
    check_mat,
    check_poly,
    check_scirc,
    diameter,
    is_hypercube,
    verify_path,
)
from basecobase.matroid import BaseFamily, Uniform, base_cobases, direct_sum
from basecobase.wheels import whirl

# --- exhaustive Hamiltonian search against brute force -----------------------


@st.composite
def small_graphs(draw):
    k = draw(st.integers(2, 7))
    adj = {i: set() for i in range(k)}
    for i in range(k):
        for j in range(i + 1, k):
            if draw(st.booleans()):
                adj[i].add(j)
                adj[j].add(i)
    return adj


@given(small_graphs(), st.data())
def test_search_agrees_with_brute_force(adj, data):
    s, t = data.draw(st.lists(st.sampled_from(sorted(adj)), min_size=2, max_size=2, unique=True))
    out = hamsearch.hamiltonian_path(adj, s, t, node_limit=10**6)
    assert out.status in (hamsearch.FOUND, hamsearch.EXHAUSTED)
    assert out.found == oracles.ham_path_exists(adj, s, t)
    if out.found:
        path = out.paths[0]
        assert path[0] == s and path[-1] == t and sorted(path) == sorted(adj)
        assert all(b in adj[a] for a, b in zip(path, path[1:]))


def test_search_path_cover_with_forced_and_banned_edges():
    # 4-cycle 0-1-2-3-0 plus chord 0-2
    adj = {0: [1, 2, 3], 1: [0, 2], 2: [0, 1, 3], 3: [0, 2]}
    out = hamsearch.find_path_cover(adj, [(1, 3)], forced_edges=[(0, 2)])
    assert out.found and out.paths[0] in ([1, 0, 2, 3], [1, 2, 0, 3])
    out = hamsearch.find_path_cover(adj, [(1, 3)], banned_edges=[(0, 2)])
    assert out.status == hamsearch.EXHAUSTED
    out = hamsearch.find_path_cover(adj, [(0, 1), (2, 3)])
    assert out.found and sorted(len(p) for p in out.paths) == [2, 2]


def test_search_budget_reports_budget():
    rng = random.Random(3)
    n = 40
    adj = {i: {(i + 1) % n, (i - 1) % n} for i in range(n)}
    for _ in range(60):
        a, b = rng.sample(range(n), 2)
        adj[a].add(b)
        adj[b].add(a)
    out = hamsearch.hamiltonian_path(adj, 0, 20, node_limit=5, seed=None)
    assert out.status in (hamsearch.BUDGET, hamsearch.FOUND)
    assert out.status == hamsearch.BUDGET or out.nodes <= 5


def test_search_rejects_bad_segments():
    with pytest.raises(ValueError):
        hamsearch.hamiltonian_path({0: [1], 1: [0]}, 0, 0)
    with pytest.raises(ValueError):
        hamsearch.hamiltonian_path({0: [1], 1: [0]}, 0, 7)


# --- graph construction ----------------------------------------------------------


def test_bc_graph_is_delta2_graph():
    G = build_bc_graph(whirl(4))
    assert check_delta2(G)
    assert len(G) == oracles.WHIRL_BC[4]
    brute = oracles.bc_of(8, oracles.bases_by_rank(8, lambda s: whirl(4).rank(oracles.to_mask(s))))
    assert sorted(G.vertices) == brute


def test_base_graph_distance_identity():
    assert base_graph_distance_identity(build_base_graph(Uniform(2, 5)))
    assert base_graph_distance_identity(build_base_graph(whirl(3)))


def test_whirl5_diameter_frozen():
    G = build_bc_graph(whirl(5))
    d, _ = diameter(G)
    assert d == oracles.WHIRL5_DIAMETER
    adj = {i: G.adjacency[i] for i in range(len(G))}
    assert max(max(oracles.bfs(adj, s).values()) for s in adj) == d
    assert check_diam(whirl(5), G).verdict == HOLDS


# --- property checks ----------------------------------------------------------------


def test_checks_on_whirl():
    M = whirl(4)
    G = build_bc_graph(M)
    assert check_con(G).verdict == HOLDS
    assert check_circ(M, G).verdict in (HOLDS, FAILS)
    assert check_scirc(M, G).verdict in (HOLDS, FAILS)
    assert check_poly(G).verdict == UNKNOWN
    report = check_ham(G)
    assert report.verdict == HOLDS and report.witness["exhaustive"]
    js = report.to_json()
    assert set(js) >= {"property", "verdict", "witness", "elapsed_ms", "nodes_expanded"}


def test_disconnected_graph_fails_con():
    G = BCGraph(4, [0b0011, 0b1100])
    assert check_con(G).verdict == FAILS


def test_hypercube_and_products():
    U = Uniform(1, 2)
    for k in range(1, 6):
        M = direct_sum(*[U] * k)
        G = build_bc_graph(M)
        assert is_hypercube(G)
        assert check_mat(base_cobases(M)).verdict == HOLDS
    G2 = build_bc_graph(direct_sum(U, U))
    P = cartesian_product(G2, G2)
    assert is_hypercube(P) and len(P) == 16
    assert not is_hypercube(build_bc_graph(whirl(3)))


def test_bipartite_graph_fails_ham_with_colouring():
    # an even cycle of length 6 is bipartite, balanced, and not Ham-connected
    masks = [0b000011, 0b000101, 0b001100, 0b011000, 0b110000, 0b100010]
    G = BCGraph(6, masks, adjacency=[[1, 5], [0, 2], [1, 3], [2, 4], [3, 5], [4, 0]])
    r = check_ham(G)
    assert r.verdict == FAILS
    assert r.witness["bipartite"] and r.witness["class_sizes"] == [3, 3]
    assert bipartition_report(G) == {"bipartite": True, "class_sizes": [3, 3]}


def test_check_mat_fails_with_witness():
    fam = BaseFamily.of(4, 2, [0b0011, 0b1100])
    r = check_mat(fam)
    assert r.verdict == FAILS and set(r.witness) == {"B", "B2", "e"}
    with pytest.raises(ValueError):
        check_mat(BaseFamily.of(4, 2, []))


def test_verify_path():
    G = BCGraph(4, [0b0011, 0b0101, 0b0110])
    assert verify_path(G, [0, 1, 2])
    assert not verify_path(G, [0, 1])
    assert not verify_path(G, [0, 1, 2], start=1)
