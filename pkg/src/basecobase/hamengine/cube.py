"""Hypercube hosts for the path-cover searches.

A host is a subcube ``{x : x & fixed_mask == fixed_val}`` of ``Q_n`` minus
some forbidden vertices.  Colours: red iff the weight is odd.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .. import hamsearch

RED = 1
GREEN = 0

DEFAULT_NODE_LIMIT = 10**7


def color(x: int) -> int:
    return x.bit_count() & 1


class PrimitiveFailure(RuntimeError):
    """A search that a published lemma guarantees came back empty."""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(f"PRIMITIVE_FAILURE: {message} (nodes={nodes})")
        self.nodes = nodes


@dataclass(frozen=True)
class SubCube:
    n: int
    fixed_mask: int = 0
    fixed_val: int = 0

    @property
    def dim(self) -> int:
        return self.n - self.fixed_mask.bit_count()

    def __contains__(self, x: int) -> bool:
        return 0 <= x < (1 << self.n) and x & self.fixed_mask == self.fixed_val

    def vertices(self) -> list[int]:
        return [x for x in range(1 << self.n) if x & self.fixed_mask == self.fixed_val]

    def free_bits(self) -> list[int]:
        return [i for i in range(self.n) if not (self.fixed_mask >> i) & 1]

    def neighbors(self, x: int) -> list[int]:
        return [x ^ (1 << i) for i in self.free_bits()]

    def halves(self, k: int) -> tuple[SubCube, SubCube]:
        """Split along free bit ``k``: (bit 0 side, bit 1 side)."""
        if (self.fixed_mask >> k) & 1:
            raise ValueError(f"bit {k} is already fixed")
        m = self.fixed_mask | (1 << k)
        return SubCube(self.n, m, self.fixed_val), SubCube(self.n, m, self.fixed_val | (1 << k))


@dataclass
class CallLog:
    entries: list[dict] = field(default_factory=list)

    def add(self, **kw) -> None:
        self.entries.append(kw)


def cube_cover(
    host: SubCube,
    segments: Sequence[tuple[int, int]],
    *,
    forbidden: Iterable[int] = (),
    forced: Iterable[tuple[int, int]] = (),
    banned: Iterable[tuple[int, int]] = (),
    node_limit: int = DEFAULT_NODE_LIMIT,
    seed: int | None = 0,
    label: str = "search",
    log: CallLog | None = None,
) -> list[list[int]]:
    forbidden = set(forbidden)
    verts = [x for x in host.vertices() if x not in forbidden]
    bitsets = host.free_bits()
    nb = {x: [x ^ (1 << i) for i in bitsets] for x in verts}
    col = {x: color(x) for x in verts}
    out = hamsearch.find_path_cover(
        nb,
        list(segments),
        vertices=verts,
        forced_edges=list(forced),
        banned_edges=list(banned),
        coloring=col,
        node_limit=node_limit,
        seed=seed,
    )
    if log is not None:
        log.add(call=label, dim=host.dim, segments=[list(s) for s in segments], nodes=out.nodes, status=out.status)
    if not out.found:
        raise PrimitiveFailure(f"{label} on Q_{host.dim} with segments {list(segments)}: {out.status}", out.nodes)
    return out.paths
