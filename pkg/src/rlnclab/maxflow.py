"""Edge-disjoint-path maximum flow on augmented networks.

Unit capacity per edge (parallel edges carry multiplicity), multiple
origins via a temporary super-source, blocking-flow (level graph) search.
The result bundles the flow value with explicit certificates: the disjoint
paths and a minimum cut, both in terms of real edge ids.  Neighbor scans
follow edge-id order, so values, paths, and cuts are reproducible.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .network import AugmentedNetwork


@dataclass(frozen=True)
class FlowResult:
    value: int
    paths: tuple[tuple[str, ...], ...]
    mincut: frozenset[str]
    source_set: frozenset[str]
    sink: str


def maxflow(aug: AugmentedNetwork, source_set: Iterable[str], sink: str) -> FlowResult:
    """Maximum number of edge-disjoint paths from any node in source_set to sink."""
    source_set = frozenset(source_set)
    known = set(aug.nodes)
    for n in source_set:
        if n not in known:
            raise ValueError(f"unknown node {n!r} in source set")
    if sink not in known:
        raise ValueError(f"unknown sink {sink!r}")
    if sink in source_set:
        raise ValueError(f"sink {sink!r} is in the source set")

    index = {n: i for i, n in enumerate(aug.nodes)}
    super_src = len(index)
    n_nodes = super_src + 1

    # Arc arrays; forward arc 2i pairs with residual arc 2i+1.
    to: list[int] = []
    cap: list[int] = []
    eid: list[str | None] = []
    adj: list[list[int]] = [[] for _ in range(n_nodes)]

    def add_arc(u: int, v: int, c: int, edge_id: str | None) -> None:
        adj[u].append(len(to))
        to.append(v)
        cap.append(c)
        eid.append(edge_id)
        adj[v].append(len(to))
        to.append(u)
        cap.append(0)
        eid.append(None)

    for e in sorted(aug.edges, key=lambda e: e.id):
        add_arc(index[e.tail], index[e.head], 1, e.id)
    inf = len(aug.edges) + 1  # no unit-capacity flow can exceed the edge count
    for n in sorted(source_set):
        add_arc(super_src, index[n], inf, None)

    t = index[sink]
    level = [0] * n_nodes
    it = [0] * n_nodes

    def bfs() -> bool:
        for i in range(n_nodes):
            level[i] = -1
        level[super_src] = 0
        dq = deque([super_src])
        while dq:
            u = dq.popleft()
            for a in adj[u]:
                if cap[a] > 0 and level[to[a]] < 0:
                    level[to[a]] = level[u] + 1
                    dq.append(to[a])
        return level[t] >= 0

    def dfs(u: int, pushed: int) -> int:
        if u == t:
            return pushed
        while it[u] < len(adj[u]):
            a = adj[u][it[u]]
            v = to[a]
            if cap[a] > 0 and level[v] == level[u] + 1:
                got = dfs(v, min(pushed, cap[a]))
                if got:
                    cap[a] -= got
                    cap[a ^ 1] += got
                    return got
            it[u] += 1
        return 0

    value = 0
    while bfs():
        for i in range(n_nodes):
            it[i] = 0
        while True:
            got = dfs(super_src, inf)
            if not got:
                break
            value += got

    # Decompose the integral flow into edge-disjoint paths over real edges.
    # For a forward arc a the residual arc's capacity equals the net flow on a.
    flow_left = [cap[a ^ 1] if a % 2 == 0 else 0 for a in range(len(to))]
    paths: list[tuple[str, ...]] = []
    for _ in range(value):
        u = super_src
        walk: list[str] = []
        while u != t:
            for a in adj[u]:
                if a % 2 == 0 and flow_left[a] > 0:
                    flow_left[a] -= 1
                    if eid[a] is not None:
                        walk.append(eid[a])
                    u = to[a]
                    break
            else:  # conservation guarantees a continuation; unreachable
                raise RuntimeError("flow decomposition lost a unit")
        paths.append(tuple(walk))

    # Residual reachability from the super-source yields a minimum cut.
    reach = [False] * n_nodes
    reach[super_src] = True
    dq = deque([super_src])
    while dq:
        u = dq.popleft()
        for a in adj[u]:
            if cap[a] > 0 and not reach[to[a]]:
                reach[to[a]] = True
                dq.append(to[a])
    mincut = frozenset(
        eid[a]
        for a in range(0, len(to), 2)
        if eid[a] is not None and reach[to[a ^ 1]] and not reach[to[a]]
    )

    return FlowResult(
        value=value,
        paths=tuple(paths),
        mincut=mincut,
        source_set=source_set,
        sink=sink,
    )


def verify_flow(aug: AugmentedNetwork, result: FlowResult) -> str | None:
    """Recheck a FlowResult without re-running maxflow; None means consistent.

    Checks, in order: path validity (existing edges, chained endpoints,
    correct terminals), pairwise edge-disjointness, value bookkeeping, and
    that removing the reported cut disconnects the source set from the sink.
    """
    used: set[str] = set()
    for path in result.paths:
        if not path:
            return "empty path"
        prev_head: str | None = None
        for pos, edge_id in enumerate(path):
            e = aug.edge_by_id.get(edge_id)
            if e is None:
                return f"path references unknown edge {edge_id!r}"
            if pos == 0 and e.tail not in result.source_set:
                return f"path starts at {e.tail!r}, outside the source set"
            if prev_head is not None and e.tail != prev_head:
                return f"path breaks at edge {edge_id!r}"
            if edge_id in used:
                return f"edge {edge_id!r} shared between paths"
            used.add(edge_id)
            prev_head = e.head
        if prev_head != result.sink:
            return f"path ends at {prev_head!r}, not at sink {result.sink!r}"

    if len(result.paths) != result.value:
        return f"value {result.value} != number of paths {len(result.paths)}"
    if len(result.mincut) != result.value:
        return f"value {result.value} != cut size {len(result.mincut)}"
    for edge_id in result.mincut:
        if edge_id not in aug.edge_by_id:
            return f"cut references unknown edge {edge_id!r}"

    if _reaches(aug, result.source_set, result.sink, result.mincut):
        return "removing the cut does not disconnect the source set from the sink"
    return None


def _reaches(
    aug: AugmentedNetwork, origins: frozenset[str], goal: str, removed: frozenset[str]
) -> bool:
    seen = set(origins)
    dq = deque(origins)
    while dq:
        u = dq.popleft()
        if u == goal:
            return True
        for eid_ in aug.out_edges[u]:
            if eid_ in removed:
                continue
            head = aug.edge_by_id[eid_].head
            if head not in seen:
                seen.add(head)
                dq.append(head)
    return goal in seen
