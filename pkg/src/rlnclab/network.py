"""Multi-source multi-sink acyclic network model, validation, and augmentation.

A network is a DAG with parallel edges, an ordered source list, an ordered
sink list, and per-sink demands given as 1-based source indices.  Fixing a
rate vector attaches one virtual source per real source, wired in by as many
parallel virtual edges as that source's rate; the virtual edges carry the
unit vectors of the global coding space.

Everything here is deterministic: ids, orderings, and the topological edge
order are functions of the input alone, so a master seed reproduces an
entire experiment bit-for-bit.
"""
from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from pathlib import Path

Rate = tuple[int, ...]


class NetworkError(ValueError):
    """Raised when an operation requires a valid network and gets violations."""

    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


class NetworkFormatError(ValueError):
    """Raised on malformed network files; the message names the location."""


@dataclass(frozen=True, slots=True)
class Edge:
    id: str
    tail: str
    head: str


@dataclass(frozen=True)
class NetworkSpec:
    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]
    sources: tuple[str, ...]
    sinks: tuple[str, ...]
    demands: dict[str, tuple[int, ...]]  # sink -> sorted 1-based source indices
    name: str = "net"

    @property
    def num_sources(self) -> int:
        return len(self.sources)


def make_network(
    nodes,
    edges,
    sources,
    sinks,
    demands,
    name: str = "net",
) -> NetworkSpec:
    """Normalize plain containers into a NetworkSpec (no validation)."""
    edge_tuple = tuple(
        e if isinstance(e, Edge) else Edge(str(e[0]), str(e[1]), str(e[2])) for e in edges
    )
    dem = {str(t): tuple(sorted(set(int(i) for i in idx))) for t, idx in dict(demands).items()}
    return NetworkSpec(
        nodes=tuple(str(n) for n in nodes),
        edges=edge_tuple,
        sources=tuple(str(s) for s in sources),
        sinks=tuple(str(t) for t in sinks),
        demands=dem,
        name=name,
    )


def validate(spec: NetworkSpec) -> list[str]:
    """Check every structural invariant; returns one message per violation."""
    problems: list[str] = []
    nodes = set(spec.nodes)
    if len(nodes) != len(spec.nodes):
        problems.append("duplicate node ids")
    if not spec.sources:
        problems.append("at least one source is required")
    if not spec.sinks:
        problems.append("at least one sink is required")
    for label, group in (("source", spec.sources), ("sink", spec.sinks)):
        for n in group:
            if n not in nodes:
                problems.append(f"{label} {n!r} is not a declared node")
        if len(set(group)) != len(group):
            problems.append(f"duplicate {label} entries")
    overlap = set(spec.sources) & set(spec.sinks)
    if overlap:
        problems.append(f"nodes {sorted(overlap)} are both source and sink")

    seen_ids: set[str] = set()
    for e in spec.edges:
        if e.id in seen_ids:
            problems.append(f"duplicate edge id {e.id!r}")
        seen_ids.add(e.id)
        for endpoint in (e.tail, e.head):
            if endpoint not in nodes:
                problems.append(f"edge {e.id!r} references unknown node {endpoint!r}")

    m = len(spec.sources)
    for t in spec.sinks:
        dem = spec.demands.get(t)
        if dem is None:
            problems.append(f"sink {t!r} has no demand")
            continue
        if not dem:
            problems.append(f"sink {t!r} has an empty demand")
        for i in dem:
            if not 1 <= i <= m:
                problems.append(f"demand index {i} of sink {t!r} outside 1..{m}")
    for t in spec.demands:
        if t not in spec.sinks:
            problems.append(f"demand declared for non-sink {t!r}")

    if not problems:
        cycle = _find_cycle(spec)
        if cycle:
            problems.append("cycle: " + " -> ".join(cycle))
    return problems


def require_valid(spec: NetworkSpec) -> None:
    problems = validate(spec)
    if problems:
        raise NetworkError(problems)


def _find_cycle(spec: NetworkSpec) -> list[str] | None:
    """Iterative DFS; returns the edge ids of one directed cycle, if any."""
    out: dict[str, list[Edge]] = {n: [] for n in spec.nodes}
    for e in spec.edges:
        out[e.tail].append(e)
    for adj in out.values():
        adj.sort(key=lambda e: e.id)
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {n: WHITE for n in spec.nodes}
    for start in spec.nodes:
        if color[start] != WHITE:
            continue
        stack: list[tuple[str, int]] = [(start, 0)]
        path_edges: list[Edge] = []
        color[start] = GRAY
        while stack:
            node, idx = stack[-1]
            if idx < len(out[node]):
                stack[-1] = (node, idx + 1)
                e = out[node][idx]
                if color[e.head] == GRAY:
                    cycle = [e]
                    for back in reversed(path_edges):
                        if cycle[0].tail == e.head:
                            break
                        cycle.insert(0, back)
                    return [c.id for c in cycle]
                if color[e.head] == WHITE:
                    color[e.head] = GRAY
                    path_edges.append(e)
                    stack.append((e.head, 0))
            else:
                color[node] = BLACK
                stack.pop()
                if path_edges:
                    path_edges.pop()
    return None


class AugmentedNetwork:
    """A validated network plus its rate-dependent virtual sources and edges.

    Derived structure (in/out adjacency, topological edge order, coordinate
    offsets) is computed once here and treated as immutable.
    """

    def __init__(self, spec: NetworkSpec, rate: Rate):
        require_valid(spec)
        rate = tuple(int(r) for r in rate)
        if len(rate) != len(spec.sources):
            raise ValueError(f"rate has {len(rate)} entries for {len(spec.sources)} sources")
        if any(r < 0 for r in rate):
            raise ValueError("rate entries must be non-negative")
        self.spec = spec
        self.rate = rate
        self.r = sum(rate)

        taken_nodes = set(spec.nodes)
        vnodes: list[str] = []
        for s in spec.sources:
            cand = s + "*"
            while cand in taken_nodes:
                cand += "*"
            taken_nodes.add(cand)
            vnodes.append(cand)
        self.virtual_nodes = tuple(vnodes)

        taken_edges = {e.id for e in spec.edges}
        vedges: list[Edge] = []
        tags: dict[str, tuple[int, int]] = {}
        for i, (vn, s) in enumerate(zip(vnodes, spec.sources), start=1):
            for j in range(1, rate[i - 1] + 1):
                cand = f"{vn}:{j}"
                while cand in taken_edges:
                    cand += "'"
                taken_edges.add(cand)
                vedges.append(Edge(cand, vn, s))
                tags[cand] = (i, j)
        self.virtual_edges = tuple(vedges)
        self.virtual_tags = tags

        self.nodes = self.virtual_nodes + spec.nodes
        self.edges = self.virtual_edges + spec.edges
        self.edge_by_id = {e.id: e for e in self.edges}

        offsets, acc = [], 0
        for r_i in rate:
            offsets.append(acc)
            acc += r_i
        self._offsets = tuple(offsets)

        in_edges: dict[str, list[str]] = {n: [] for n in self.nodes}
        out_edges: dict[str, list[str]] = {n: [] for n in self.nodes}
        for e in self.edges:
            out_edges[e.tail].append(e.id)
            in_edges[e.head].append(e.id)
        self.in_edges = {n: tuple(sorted(ids)) for n, ids in in_edges.items()}
        self.out_edges = {n: tuple(sorted(ids)) for n, ids in out_edges.items()}

        self.topo_edges = self._topo_edge_order()

    def coord_of(self, i: int, j: int) -> int:
        """0-based global coordinate of virtual edge tag (i, j), both 1-based."""
        if not 1 <= i <= len(self.rate) or not 1 <= j <= self.rate[i - 1]:
            raise ValueError(f"no virtual edge tagged ({i}, {j})")
        return self._offsets[i - 1] + (j - 1)

    def source_coords(self, i: int) -> frozenset[int]:
        """All global coordinates belonging to source i (1-based)."""
        return frozenset(range(self._offsets[i - 1], self._offsets[i - 1] + self.rate[i - 1]))

    def demand_coords(self, sink: str) -> frozenset[int]:
        """Coordinates of every symbol demanded by the sink."""
        if sink not in self.spec.sinks:
            raise ValueError(f"unknown sink {sink!r}")
        coords: set[int] = set()
        for i in self.spec.demands[sink]:
            coords |= self.source_coords(i)
        return frozenset(coords)

    def _topo_edge_order(self) -> tuple[str, ...]:
        # Kahn over nodes; virtual sources drain first, ties break on node id,
        # and each node's out-edges are emitted in edge-id order.
        virtual = set(self.virtual_nodes)
        indeg = {n: len(self.in_edges[n]) for n in self.nodes}
        ready = [(n not in virtual, n) for n in self.nodes if indeg[n] == 0]
        heapq.heapify(ready)
        order: list[str] = []
        while ready:
            _, node = heapq.heappop(ready)
            for eid in self.out_edges[node]:
                order.append(eid)
                head = self.edge_by_id[eid].head
                indeg[head] -= 1
                if indeg[head] == 0:
                    heapq.heappush(ready, (head not in virtual, head))
        if len(order) != len(self.edges):  # pre-validated acyclic, so unreachable
            raise RuntimeError("augmented network is not acyclic")
        return tuple(order)


def augment(spec: NetworkSpec, rate: Rate) -> AugmentedNetwork:
    """Attach virtual sources realizing the rate vector."""
    return AugmentedNetwork(spec, rate)


def topo_edge_order(aug: AugmentedNetwork) -> tuple[str, ...]:
    """Edge order where every in-edge of a tail precedes the edge itself."""
    return aug.topo_edges


def parse_rate(text: str) -> Rate:
    """Parse a comma-separated rate vector such as "2" or "1,1"."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p.isdigit() for p in parts):
        raise ValueError(f"bad rate vector {text!r} (expected comma-separated naturals)")
    return tuple(int(p) for p in parts)


def parse_network(text: str, name: str = "net") -> NetworkSpec:
    """Parse the JSON network format; errors name the offending field."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NetworkFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise NetworkFormatError("top level: expected an object")

    def str_list(key: str) -> list[str]:
        val = doc.get(key)
        if not isinstance(val, list) or not all(isinstance(x, str) for x in val):
            raise NetworkFormatError(f"field {key!r}: expected a list of strings")
        return val

    nodes = str_list("nodes")
    sources = str_list("sources")
    sinks = str_list("sinks")

    raw_edges = doc.get("edges")
    if not isinstance(raw_edges, list):
        raise NetworkFormatError("field 'edges': expected a list of objects")
    edges: list[Edge] = []
    for pos, item in enumerate(raw_edges):
        if not isinstance(item, dict):
            raise NetworkFormatError(f"edges[{pos}]: expected an object")
        for key in ("id", "tail", "head"):
            if not isinstance(item.get(key), str):
                raise NetworkFormatError(f"edges[{pos}].{key}: expected a string")
        edges.append(Edge(item["id"], item["tail"], item["head"]))

    raw_dem = doc.get("demands")
    if not isinstance(raw_dem, dict):
        raise NetworkFormatError("field 'demands': expected an object sink -> index list")
    demands: dict[str, tuple[int, ...]] = {}
    for sink, idx in raw_dem.items():
        if not isinstance(idx, list) or not all(isinstance(i, int) for i in idx):
            raise NetworkFormatError(f"demands[{sink!r}]: expected a list of integers")
        demands[sink] = tuple(sorted(set(idx)))

    return NetworkSpec(
        nodes=tuple(nodes),
        edges=tuple(edges),
        sources=tuple(sources),
        sinks=tuple(sinks),
        demands=demands,
        name=name,
    )


def load_network(path: str | Path) -> NetworkSpec:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise NetworkFormatError(f"{path}: {exc.strerror or exc}") from None
    try:
        return parse_network(text, name=path.stem)
    except NetworkFormatError as exc:
        raise NetworkFormatError(f"{path}: {exc}") from None


def network_to_json(spec: NetworkSpec) -> str:
    doc = {
        "nodes": list(spec.nodes),
        "edges": [{"id": e.id, "tail": e.tail, "head": e.head} for e in spec.edges],
        "sources": list(spec.sources),
        "sinks": list(spec.sinks),
        "demands": {t: list(dem) for t, dem in spec.demands.items()},
    }
    return json.dumps(doc, indent=2)


def save_network(spec: NetworkSpec, path: str | Path) -> None:
    Path(path).write_text(network_to_json(spec) + "\n")
