"""Backtracking search for Hamiltonian paths and k-path coverings.

The host graph is packed into integer bitsets.  A covering is a list of
segments ``(s, t)``; the search builds the segments one after another,
jumping from ``t_i`` to ``s_{i+1}``.  Required edges are handled by
subdividing them with a virtual degree-2 vertex, which the degree pruning
then forces through.

Pruning at every node:

* every unvisited non-endpoint needs two available neighbours, every
  unvisited endpoint one;
* each component of the unvisited graph must be closed under the pending
  segments (both endpoints of a segment in the same component);
* with a 2-colouring, the red/green surplus of each component must equal
  the surplus forced by the segments it contains.
"""

from __future__ import annotations

import random
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET = "budget"


@dataclass
class SearchOutcome:
    status: str
    paths: list[list] | None = None
    nodes: int = 0
    attempts: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND


class _Exhausted(Exception):
    pass


class _OutOfBudget(Exception):
    pass


@dataclass
class _Instance:
    adj: list[int]
    n_real: int
    segments: list[tuple[int, int]]
    red: int = 0
    green: int = 0
    colored: bool = False
    universe: int = 0
    universe_all: int = 0
    endpoint_mask: int = 0


def _iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _components(adj: list[int], region: int) -> list[int]:
    comps = []
    while region:
        low = region & -region
        comp = low
        frontier = low
        while frontier:
            nb = 0
            f = frontier
            while f:
                b = f & -f
                nb |= adj[b.bit_length() - 1]
                f ^= b
            nb &= region & ~comp
            comp |= nb
            frontier = nb
        comps.append(comp)
        region &= ~comp
    return comps


def _surplus(inst: _Instance, a: int, b: int) -> int:
    # red minus green count along any path from a to b in a bipartite host
    ra = (inst.red >> a) & 1
    rb = (inst.red >> b) & 1
    if ra and rb:
        return 1
    if not ra and not rb:
        return -1
    return 0


def _feasible(inst: _Instance, free: int, head: int, seg: int) -> bool:
    """Connectivity and parity test of the remaining region."""
    adj = inst.adj
    segs = inst.segments
    region = free | (1 << head)
    target = segs[seg][1]
    for comp in _components(adj, region):
        has_head = (comp >> head) & 1
        if has_head and not (comp >> target) & 1:
            return False
        surplus = 0
        populated = bool(has_head)
        if has_head:
            h = head
            if h >= inst.n_real:
                # a virtual head is uncoloured; the real path resumes at its free end
                nxt = adj[h] & free
                h = nxt.bit_length() - 1 if nxt else target
            surplus += _surplus(inst, h, target)
        for j in range(seg + 1, len(segs)):
            s, t = segs[j]
            ins, intt = (comp >> s) & 1, (comp >> t) & 1
            if ins != intt:
                return False
            if ins:
                populated = True
                surplus += _surplus(inst, s, t)
        if not populated:
            return False
        if inst.colored:
            real = comp & inst.universe
            if (real & inst.red).bit_count() - (real & inst.green).bit_count() != surplus:
                return False
    return True


def _local_ok(inst: _Instance, free: int, head: int, touched: int) -> bool:
    adj = inst.adj
    avail_region = free | (1 << head)
    ends = inst.endpoint_mask
    t = touched & free
    while t:
        low = t & -t
        w = low.bit_length() - 1
        t ^= low
        need = 1 if (ends & low) else 2
        if (adj[w] & avail_region).bit_count() < need:
            return False
    return True


def _dfs(inst: _Instance, node_cap: int, rng: random.Random | None, counter: list[int]) -> list[int]:
    adj = inst.adj
    segs = inst.segments
    k = len(segs)
    full = inst.universe_all
    s0 = segs[0][0]
    free = full & ~(1 << s0)
    path = [s0]
    seg = 0
    if not _local_ok(inst, free, s0, free) or not _feasible(inst, free, s0, 0):
        raise _Exhausted

    def candidates(head: int, free: int, seg: int) -> list[int]:
        target = segs[seg][1]
        blocked = inst.endpoint_mask & ~(1 << target)
        cand = adj[head] & free & ~blocked
        if seg == k - 1 and (cand >> target) & 1 and free != (1 << target):
            cand &= ~(1 << target)
        scored = []
        for c in _iter_bits(cand):
            deg = (adj[c] & free).bit_count()
            key = rng.random() if rng is not None else c
            scored.append((deg, key, c))
        scored.sort()
        return [c for _, _, c in scored]

    # frames are [candidates, next position]; ``saved`` holds (free, seg) to restore on pop
    stack = [[candidates(s0, free, 0), 0]]
    saved = [(free, seg)]
    while stack:
        frame = stack[-1]
        cands, pos = frame
        if pos >= len(cands):
            stack.pop()
            free, seg = saved.pop()
            path.pop()
            continue
        frame[1] = pos + 1
        counter[0] += 1
        if counter[0] > node_cap:
            raise _OutOfBudget
        head = path[-1]
        c = cands[pos]
        nfree = free & ~(1 << c)
        nseg = seg
        nhead = c
        jumped = False
        if c == segs[seg][1]:
            if seg == k - 1:
                if nfree == 0:
                    path.append(c)
                    return path
                continue
            nseg = seg + 1
            nhead = segs[nseg][0]
            nfree &= ~(1 << nhead)
            jumped = True
        touched = adj[head] | (adj[c] if jumped else 0)
        if not _local_ok(inst, nfree, nhead, touched):
            continue
        if not _feasible(inst, nfree, nhead, nseg):
            continue
        path.append(c)
        if jumped:
            path.append(nhead)
        saved.append((free, seg))
        free, seg = nfree, nseg
        if jumped:
            # the jump itself is a forced single-candidate frame
            stack.append([[], 0])
            saved.append((free, seg))
        stack.append([candidates(nhead, free, seg), 0])
    raise _Exhausted


def find_path_cover(
    neighbors: Mapping[Hashable, Iterable[Hashable]],
    segments: Sequence[tuple[Hashable, Hashable]],
    *,
    vertices: Iterable[Hashable] | None = None,
    forbidden: Iterable[Hashable] = (),
    forced_edges: Iterable[tuple[Hashable, Hashable]] = (),
    banned_edges: Iterable[tuple[Hashable, Hashable]] = (),
    coloring: Mapping[Hashable, int] | None = None,
    node_limit: int = 10**7,
    seed: int | None = 0,
) -> SearchOutcome:
    """Find vertex-disjoint paths ``s_i -> t_i`` covering every vertex.

    ``vertices`` defaults to the keys of ``neighbors``; ``forbidden`` vertices
    are removed first.  ``coloring`` maps vertices to 0/1 and must be a proper
    2-colouring of the host; it enables parity pruning.  With ``seed=None``
    the search is a single deterministic DFS, otherwise it runs seeded
    restarts with a growing node cap.
    """
    forbidden = set(forbidden)
    order = [v for v in (neighbors if vertices is None else vertices) if v not in forbidden]
    index = {v: i for i, v in enumerate(order)}
    n_real = len(order)
    seg_idx = []
    for s, t in segments:
        if s not in index or t not in index:
            raise ValueError(f"segment endpoint not in host graph: {(s, t)}")
        if s == t:
            raise ValueError("segments must have distinct endpoints")
        seg_idx.append((index[s], index[t]))
    flat = [x for st in seg_idx for x in st]
    if len(set(flat)) != len(flat):
        raise ValueError("segment endpoints must be distinct")

    adj = [0] * n_real
    for v, i in index.items():
        m = 0
        for w in neighbors[v]:
            j = index.get(w)
            if j is not None and j != i:
                m |= 1 << j
        adj[i] = m
    for a, b in banned_edges:
        i, j = index.get(a), index.get(b)
        if i is None or j is None:
            continue
        adj[i] &= ~(1 << j)
        adj[j] &= ~(1 << i)
    virtual_of = {}
    for a, b in forced_edges:
        i, j = index.get(a), index.get(b)
        if i is None or j is None or not (adj[i] >> j) & 1:
            return SearchOutcome(EXHAUSTED)
        adj[i] &= ~(1 << j)
        adj[j] &= ~(1 << i)
        w = len(adj)
        adj.append((1 << i) | (1 << j))
        adj[i] |= 1 << w
        adj[j] |= 1 << w
        virtual_of[w] = (i, j)

    inst = _Instance(adj=adj, n_real=n_real, segments=seg_idx)
    inst.universe = (1 << n_real) - 1
    inst.universe_all = (1 << len(adj)) - 1
    for s, t in seg_idx:
        inst.endpoint_mask |= (1 << s) | (1 << t)
    if coloring is not None:
        inst.colored = True
        for v, i in index.items():
            if coloring[v]:
                inst.red |= 1 << i
            else:
                inst.green |= 1 << i

    counter = [0]
    attempts = 0
    if seed is None:
        caps = [node_limit]
    else:
        caps = []
        cap = max(50 * len(adj), 2000)
        total = 0
        while total + cap < node_limit:
            caps.append(cap)
            total += cap
            cap = int(cap * 1.5)
        caps.append(max(node_limit - total, 1))
    rng_seed = seed
    for cap in caps:
        attempts += 1
        rng = None if seed is None else random.Random(rng_seed)
        local = [0]
        try:
            raw = _dfs(inst, cap, rng, local)
        except _Exhausted:
            counter[0] += local[0]
            return SearchOutcome(EXHAUSTED, nodes=counter[0], attempts=attempts)
        except _OutOfBudget:
            counter[0] += local[0]
            rng_seed = (rng_seed or 0) * 7919 + 104729
            continue
        counter[0] += local[0]
        return SearchOutcome(FOUND, _split(raw, inst, order), counter[0], attempts)
    return SearchOutcome(BUDGET, nodes=counter[0], attempts=attempts)


def _split(raw: list[int], inst: _Instance, order: list) -> list[list]:
    n_real = inst.n_real
    paths = []
    pos = 0
    for s, t in inst.segments:
        assert raw[pos] == s
        cur = []
        while True:
            x = raw[pos]
            pos += 1
            if x < n_real:
                cur.append(order[x])
            if x == t:
                break
        paths.append(cur)
    return paths


def hamiltonian_path(neighbors, start, end, **kw) -> SearchOutcome:
    return find_path_cover(neighbors, [(start, end)], **kw)
