"""Certificate checks, written without reference to the search or builders.

Cube covers are checked combinatorially; stitched-model paths are mapped
through the bijection to base-cobases of the actual matroid and checked as
a Hamiltonian path of its base-cobase graph.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import lru_cache

from ..matroid import base_cobases
from ..wheels import CubeVertex, image, model_vertex_count, wheel_or_whirl


def cube_cover_problems(
    n: int,
    paths: Sequence[Sequence[int]],
    endpoints: Sequence[tuple[int, int]],
    *,
    fixed_mask: int = 0,
    fixed_val: int = 0,
    forbidden: Iterable[int] = (),
    forced: Iterable[tuple[int, int]] = (),
) -> list[str]:
    problems = []
    removed = set(forbidden)
    host = {x for x in range(2**n) if (x & fixed_mask) == fixed_val and x not in removed}
    if len(paths) != len(endpoints):
        problems.append("wrong number of paths")
    seen: list[int] = []
    for k, p in enumerate(paths):
        if not p:
            problems.append(f"path {k} is empty")
            continue
        if k < len(endpoints) and (p[0], p[-1]) != tuple(endpoints[k]):
            problems.append(f"path {k} runs {p[0]}..{p[-1]}, expected {tuple(endpoints[k])}")
        for a, b in zip(p, p[1:]):
            diff = a ^ b
            if diff == 0 or diff & (diff - 1):
                problems.append(f"{a} and {b} are not adjacent")
        seen.extend(p)
    if len(seen) != len(set(seen)):
        problems.append("a vertex is visited twice")
    if set(seen) != host:
        problems.append(f"cover misses {len(host - set(seen))} and strays onto {len(set(seen) - host)} vertices")
    used = set()
    for p in paths:
        for a, b in zip(p, p[1:]):
            used.add(frozenset((a, b)))
    for a, b in forced:
        if frozenset((a, b)) not in used:
            problems.append(f"required edge {(a, b)} unused")
    return problems


def cover_is_valid(n: int, cover) -> bool:
    host = cover.host
    return not cube_cover_problems(
        n,
        cover.paths,
        cover.declared_endpoints,
        fixed_mask=host.fixed_mask if host else 0,
        fixed_val=host.fixed_val if host else 0,
        forbidden=cover.forbidden_vertices,
        forced=cover.forced_edges,
    )


@lru_cache(maxsize=32)
def _bc_set(kind: str, n: int) -> frozenset:
    return frozenset(base_cobases(wheel_or_whirl(kind, n)).masks)


def model_path_problems(
    kind: str, n: int, path: Sequence[CubeVertex], start: CubeVertex | None = None, end: CubeVertex | None = None
) -> list[str]:
    problems = []
    bc = _bc_set(kind, n)
    masks = [image(v) for v in path]
    if len(masks) != model_vertex_count(n, kind):
        problems.append(f"path has {len(masks)} vertices, graph has {model_vertex_count(n, kind)}")
    if len(set(masks)) != len(masks):
        problems.append("a base-cobase is visited twice")
    if set(masks) != bc:
        problems.append("path vertices differ from the base-cobase family")
    for a, b in zip(masks, masks[1:]):
        if (a ^ b).bit_count() != 2:
            problems.append(f"consecutive bases {a:#x}, {b:#x} are not adjacent")
            break
    if start is not None and path and image(path[0]) != image(start):
        problems.append("wrong start vertex")
    if end is not None and path and image(path[-1]) != image(end):
        problems.append("wrong end vertex")
    return problems


def model_path_is_valid(kind: str, n: int, path, start=None, end=None) -> bool:
    return not model_path_problems(kind, n, path, start, end)
