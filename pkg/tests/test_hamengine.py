from __future__ import annotations

import random
from itertools import combinations

import pytest

from basecobase.hamengine import (
    PRIMITIVES,
    PreconditionError,
    SubCube,
    color,
    cover_is_valid,
    cube_cover_problems,
    ham_path,
    ham_path_wheel,
    ham_path_whirl,
    lemma_36_plus,
    lemma_43_plus,
    model_path_is_valid,
    primitive,
    random_instance,
)
from basecobase.hamengine.primitives import MIN_DIM
from basecobase.hamengine.stitched import min_construct_order
from basecobase.wheels import (
    MINUS,
    PLUS,
    WHEEL,
    WHIRL,
    CubeVertex,
    StitchedModel,
    is_lean,
)

# --- cube primitives --------------------------------------------------------------


@pytest.mark.parametrize("letter", sorted(PRIMITIVES))
def test_primitives_on_random_instances(letter):
    rng = random.Random(ord(letter))
    lo = MIN_DIM[letter]
    for n in range(lo, lo + 2):
        for _ in range(8):
            anchors = random_instance(letter, n, rng)
            cover = primitive(letter, n, *anchors)
            assert cover_is_valid(n, cover), (letter, n, anchors)


def test_subcube_halves():
    lo, hi = SubCube(4).halves(1)
    assert lo.dim == hi.dim == 3
    assert 0b0010 in hi and 0b0010 not in lo
    assert sorted(lo.vertices() + hi.vertices()) == list(range(16))
    with pytest.raises(ValueError):
        lo.halves(1)


def test_primitive_preconditions():
    with pytest.raises(PreconditionError):
        primitive("a", 3, 0b001, 0b000, (0b010, 0b011))  # dimension too small
    with pytest.raises(PreconditionError):
        primitive("a", 4, 0b0001, 0b0010, (0b0100, 0b0110))  # same colour
    with pytest.raises(PreconditionError):
        primitive("b", 4, 0b0001, 0b0000, 0b0001, 0b0011)  # coinciding anchors
    with pytest.raises(PreconditionError):
        primitive("h", 5, *random_instance("h", 6, random.Random(0)))
    with pytest.raises(ValueError):
        primitive("z", 4)


def test_cover_checker_flags_bad_covers():
    good = primitive("a", 4, 0b0001, 0b0000, (0b0100, 0b0110))
    assert not cube_cover_problems(4, good.paths, good.declared_endpoints, forced=good.forced_edges)
    bad = [good.paths[0][:-1]]
    assert cube_cover_problems(4, bad, good.declared_endpoints)
    swapped = [list(good.paths[0])]
    swapped[0][1], swapped[0][2] = swapped[0][2], swapped[0][1]
    assert cube_cover_problems(4, swapped, good.declared_endpoints)


# --- lemmas ---------------------------------------------------------------------------


def _lean_edge_in(path, n):
    return any(is_lean(a, n) and is_lean(b, n) and a not in (0, (1 << n) - 1) for a, b in zip(path, path[1:]))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_lemma_36_plus(n):
    rng = random.Random(n)
    verts = range(1 << n)
    cases = set()
    for _ in range(60):
        swap = rng.random() < 0.5
        R = [x for x in verts if color(x) != swap]
        G = [x for x in verts if color(x) == swap]
        rs, r = rng.sample(R, 2)
        gs, g = rng.sample(G, 2)
        cover = lemma_36_plus(n, rs, gs, r, g)
        path = cover.paths[0]
        assert path[0] == r and path[-1] == g
        assert sorted(path) == sorted(x for x in verts if x not in (rs, gs))
        assert all((a ^ b).bit_count() == 1 for a, b in zip(path, path[1:]))
        assert _lean_edge_in(path, n)
        cases.add(cover.meta["case"])
    if n >= 5:
        assert cases == {"a", "b", "c", "d"}


def test_lemma_36_plus_rejects_bad_anchors():
    with pytest.raises(PreconditionError):
        lemma_36_plus(4, 0b0001, 0b0011, 0b0100, 0b0111)  # g has the colour of r
    with pytest.raises(PreconditionError):
        lemma_36_plus(3, 0b001, 0b011, 0b010, 0b000)


def test_lemma_43_plus():
    n = 7
    full = (1 << n) - 1
    rng = random.Random(5)
    for _ in range(10):
        w1 = 1 << rng.randrange(n)
        u1, v1 = rng.sample([1 << i for i in range(n) if 1 << i != w1], 2)
        j = rng.choice([-1, 1])
        z1 = w1 | (1 << ((w1.bit_length() - 1 + j) % n))
        u2, v2 = (full ^ (1 << i) for i in rng.sample(range(n), 2))
        cover = lemma_43_plus(n, u1, v1, w1, u2, v2, z1)
        assert cover_is_valid(n, cover)
        assert sorted(x for p in cover.paths for x in p) == list(range(1, full))
    with pytest.raises(PreconditionError):
        lemma_43_plus(6, 1, 2, 4, 0b111110, 0b111101, 0b1100)


# --- stitched model paths -----------------------------------------------------------


def _vertices(kind, n):
    return StitchedModel(n, kind).vertices


@pytest.mark.parametrize("kind,n", [(WHEEL, 3), (WHEEL, 4), (WHIRL, 3), (WHIRL, 4), (WHIRL, 5)])
def test_all_pairs_small(kind, n):
    verts = _vertices(kind, n)
    for u, v in combinations(verts, 2):
        cover = ham_path(kind, n, u, v)
        assert cover.meta["verified"]
        path = cover.paths[0]
        assert path[0] == u and path[-1] == v


@pytest.mark.parametrize("kind,n,k", [(WHEEL, 7, 40), (WHEEL, 8, 20), (WHIRL, 6, 40), (WHIRL, 7, 30)])
def test_random_pairs_construct(kind, n, k):
    rng = random.Random(n)
    verts = _vertices(kind, n)
    seen = set()
    for _ in range(k):
        u, v = rng.sample(verts, 2)
        cover = ham_path(kind, n, u, v, method="construct")
        assert cover.meta["method"] == "construct"
        assert model_path_is_valid(kind, n, cover.paths[0], u, v)
        seen.add(cover.meta["case"])
    assert len(seen) >= 2


def test_construct_and_search_agree_on_validity():
    rng = random.Random(1)
    verts = _vertices(WHIRL, 5)
    for _ in range(10):
        u, v = rng.sample(verts, 2)
        a = ham_path_whirl(5, u, v, method="construct").paths[0]
        b = ham_path_whirl(5, u, v, method="search").paths[0]
        assert model_path_is_valid(WHIRL, 5, a, u, v) and model_path_is_valid(WHIRL, 5, b, u, v)


def test_wrappers_and_tuple_endpoints():
    cover = ham_path_wheel(7, (0b0000001, PLUS), (0b0000011, MINUS))
    assert cover.meta["kind"] == WHEEL and cover.meta["verified"]
    # the whirl stores the poles on the plus side; a minus sign is normalised
    cover = ham_path_whirl(4, (0, MINUS), (0b1111, PLUS))
    assert cover.paths[0][0] == CubeVertex(0, PLUS, 4)


def test_invalid_requests():
    with pytest.raises(ValueError):
        ham_path(WHEEL, 5, (0, PLUS), (1, PLUS))  # 0 is not in the wheel model
    with pytest.raises(ValueError):
        ham_path(WHEEL, 5, (1, PLUS), (1, PLUS))
    with pytest.raises(ValueError):
        ham_path(WHEEL, 5, (1, PLUS), (2, PLUS), method="magic")
    with pytest.raises(ValueError):
        ham_path(WHEEL, 5, (1, PLUS), (2, PLUS), method="construct")
    assert min_construct_order(WHEEL) == 7 and min_construct_order(WHIRL) == 4


def test_path_checker_rejects_tampering():
    u, v = CubeVertex(1, PLUS, 7), CubeVertex(3, MINUS, 7)
    path = list(ham_path_wheel(7, u, v).paths[0])
    assert model_path_is_valid(WHEEL, 7, path, u, v)
    assert not model_path_is_valid(WHEEL, 7, path[:-1], u, v)
    assert not model_path_is_valid(WHEEL, 7, path[::-1], u, v)
    path[3], path[7] = path[7], path[3]
    assert not model_path_is_valid(WHEEL, 7, path, u, v)
