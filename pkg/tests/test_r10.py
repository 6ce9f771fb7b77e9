from __future__ import annotations

from itertools import combinations, permutations

import oracles
import pytest

from basecobase.bcg import FAILS
from basecobase.matroid import base_cobases, enumerate_bases
from basecobase.r10 import (
    D5,
    S2,
    VERIFIED,
    BcClass,
    all_classes,
    circuit4,
    circuit_census,
    class_labels,
    classify_bc,
    classify_circuit,
    degrees,
    describe_r10,
    mask_of_triples,
    pair_orbits,
    predicted_adjacency,
    r10_bc_graph,
    r10_matroid,
    template,
    triple,
    triples_of,
    verify_laceability,
    verify_r10_description,
)


def test_matrix_columns_are_triples():
    M = r10_matroid()
    cols = oracles.r10_columns()
    for A in range(0, 1 << 10, 7):
        assert M.rank(A) == oracles.gf2_rank_columns([cols[j] for j in oracles.to_set(A)] or [()])


def test_counts_frozen():
    M = r10_matroid()
    assert len(enumerate_bases(M)) == oracles.R10_BASES
    bc = base_cobases(M)
    assert len(bc) == oracles.R10_BC
    labels = class_labels()
    assert sum(c.kind == S2 for c in labels) == oracles.R10_S2
    assert sum(c.kind == D5 for c in labels) == oracles.R10_D5
    assert circuit_census() == oracles.R10_CIRCUITS


def test_triple_parsing():
    assert triple("135") == triple((5, 1, 3)) == triple({1, 3, 5}) == (1, 3, 5)
    assert triples_of(mask_of_triples(["123", "345"])) == [(1, 2, 3), (3, 4, 5)]
    with pytest.raises(ValueError):
        triple("12")


def test_templates_degree_sequences():
    assert degrees(template(S2, (1, 2, 3, 4, 5))) == (2, 4, 3, 4, 2)
    assert degrees(template(D5, (1, 2, 3, 4, 5))) == (3, 3, 3, 3, 3)


def test_every_template_is_base_cobase_and_classifies_back():
    bc = set(base_cobases(r10_matroid()).masks)
    for kind in (S2, D5):
        for w in permutations(range(1, 6)):
            m = mask_of_triples(template(kind, w))
            assert m in bc
            assert classify_bc(m) == BcClass.of(kind, w)
    assert len(all_classes()) == 72


def test_class_canonical_forms():
    assert BcClass.of(S2, "54321") == BcClass.of(S2, "12345")
    assert BcClass.of(D5, "23451") == BcClass.of(D5, "12345")
    assert BcClass.of(D5, "15432") == BcClass.of(D5, "12345")
    assert str(BcClass.of(S2, "12345")) == "[12345]_S2"
    with pytest.raises(ValueError):
        BcClass.of(S2, "12344")


def test_circuits():
    M = r10_matroid()
    C = circuit4((1, 2, 3, 4, 5))
    m = mask_of_triples(C)
    assert len(C) == 4 and M.rank(m) == 3
    assert all(M.rank(m & ~(1 << j)) == 3 for j in oracles.to_set(m))
    assert classify_circuit(C).kind == "Circuit4"
    assert classify_circuit(["123"]).kind == "NotCircuit"
    # brute-force circuit count
    count = 0
    for k in range(1, 7):
        for c in combinations(range(10), k):
            A = oracles.to_mask(c)
            if M.rank(A) == k - 1 and all(M.rank(A & ~(1 << j)) == k - 1 for j in c):
                count += 1
    assert count == sum(oracles.R10_CIRCUITS.values())


def test_neighbour_description_matches_graph():
    G = r10_bc_graph()
    labels = class_labels(G)
    where = {c: i for i, c in enumerate(labels)}
    for c in labels:
        got = {labels[j] for j in G.adjacency[where[c]]}
        assert got == set(predicted_adjacency(c))
    s2 = BcClass.of(S2, "12345")
    assert set(map(str, predicted_adjacency(s2))) == {
        "[12345]_D5",
        str(BcClass.of(S2, "32145")),
        str(BcClass.of(S2, "13245")),
        str(BcClass.of(S2, "12435")),
        str(BcClass.of(S2, "12543")),
    }


def test_description_report():
    rep = describe_r10()
    assert rep.passed and verify_r10_description()
    assert rep.sides == (36, 36) and rep.regular_degree == 5
    assert rep.ham == FAILS and rep.ham_witness["bipartite"]
    assert rep.sides_are_sign_classes
    # the neighbour list with the class itself in place of the transposition
    # (b c) is not the graph
    assert not rep.printed_list_matches


def test_orbits_and_laceability():
    orbits = pair_orbits()
    assert len(orbits) == 13
    assert sum(len(o) for o in orbits) == 36 * 36
    rep = verify_laceability()
    assert rep.status == VERIFIED and rep.pairs_checked == 13 and rep.representatives_only


@pytest.mark.slow
def test_laceability_all_pairs():
    rep = verify_laceability(long=True)
    assert rep.status == VERIFIED and rep.pairs_checked == 1296
