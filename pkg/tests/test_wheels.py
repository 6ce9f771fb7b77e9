from __future__ import annotations

import oracles
import pytest

from basecobase.bcg import build_bc_graph
from basecobase.masks import full_mask
from basecobase.matroid import base_cobases, enumerate_bases
from basecobase.wheels import (
    MINUS,
    PLUS,
    WHEEL,
    WHIRL,
    CubeVertex,
    StitchedModel,
    block_sizes,
    image,
    is_lean,
    lean_interval,
    lean_vertices,
    model_vertex_count,
    necklace,
    reflect,
    rotate,
    stitch_targets,
    verify_bijection,
    verify_lower_bound,
    verify_necklace_iso,
    verify_structure,
    wheel,
    whirl,
)


@pytest.mark.parametrize("n", range(3, 8))
def test_bc_counts(n):
    assert len(base_cobases(wheel(n))) == oracles.WHEEL_BC[n]
    assert len(base_cobases(whirl(n))) == oracles.WHIRL_BC[n]
    assert model_vertex_count(n, WHEEL) == oracles.WHEEL_BC[n]
    assert model_vertex_count(n, WHIRL) == oracles.WHIRL_BC[n]


def test_whirl_is_wheel_plus_rim():
    for n in range(3, 7):
        assert len(enumerate_bases(whirl(n))) == oracles.WHEEL_BASES[n] + 1


def test_lean_vertices():
    n = 6
    assert is_lean(0b000111, n) and is_lean(0b100001, n)
    assert not is_lean(0b000101, n)
    assert lean_interval(0b000111, n) == (1, 3)
    assert len(lean_vertices(n)) == n * (n - 1) + 2


def test_rotate_and_reflect_are_bijections():
    n = 5
    full = full_mask(n)
    assert sorted(rotate(b, n) for b in range(full + 1)) == list(range(full + 1))
    assert all(reflect(reflect(b, n), n) == b for b in range(full + 1))
    assert rotate(rotate(1, n, 2), n, 3) == 1


@pytest.mark.parametrize("kind", [WHEEL, WHIRL])
@pytest.mark.parametrize("n", range(3, 8))
def test_structure(kind, n):
    assert verify_bijection(n, kind)
    assert verify_structure(n, kind)


def test_wrong_stitch_rule_is_caught():
    def no_shrink(b, n):
        return [t for t in stitch_targets(b, n)[:2]]

    assert not verify_structure(5, WHEEL, rule=no_shrink)
    assert not verify_structure(5, WHIRL, rule=lambda b, n: [b])


def _is_automorphism(G, f) -> bool:
    img = [G.index[f(v)] for v in G.vertices]
    if sorted(img) != list(range(len(G))):
        return False
    return all(img[j] in G.adjacency[img[i]] for i, j in G.edges())


@pytest.mark.parametrize("kind", [WHEEL, WHIRL])
@pytest.mark.parametrize("n", [4, 5, 6])
def test_model_symmetries(kind, n):
    G = StitchedModel(n, kind)
    full = full_mask(n)

    def fix(b, s):
        return CubeVertex(b, PLUS if b in (0, full) else s, n)

    def kappa(v):
        return fix(full ^ v.bits, v.sign)

    def sigma(v):
        return fix(reflect(v.bits, n), -v.sign)

    def rot(v):
        return fix(rotate(v.bits, n), v.sign)

    assert _is_automorphism(G, kappa)
    assert _is_automorphism(G, sigma)
    assert _is_automorphism(G, rot)


def test_model_vertices_and_images():
    G = StitchedModel(4, WHIRL)
    assert CubeVertex(0, PLUS, 4) in G.index
    assert CubeVertex(0, MINUS, 4) not in G.index
    assert str(CubeVertex(0b0001, MINUS, 4)) == "1000-"
    bc = set(build_bc_graph(whirl(4)).vertices)
    assert {image(v) for v in G.vertices} == bc
    assert "graph whirl4" in G.export_dot()


def test_lower_bound_values():
    for n, d in oracles.LOWER_BOUND.items():
        for kind in (WHEEL, WHIRL):
            rep = verify_lower_bound(n, kind)
            assert rep.distance == d
            assert rep.half_difference == (1 if n == 3 else 2)
            if n % 4 == 0:
                assert rep.matches_formula
    assert block_sizes(7) == (2, 2, 2, 1)


def test_necklace_relabelling():
    for n in range(3, 7):
        assert verify_necklace_iso(n)
    assert not verify_necklace_iso(5, identity=True)
    assert necklace(4).n == 8


def test_small_n_rejected():
    with pytest.raises(ValueError):
        StitchedModel(2, WHEEL)
    with pytest.raises(ValueError):
        StitchedModel(4, "spiral")
