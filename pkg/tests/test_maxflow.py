from __future__ import annotations

import random

import pytest

from netgen import random_instances
from oracles import assert_min_cut, reaches
from rlnclab.maxflow import FlowResult, maxflow, verify_flow
from rlnclab.network import augment, make_network


def test_single_edge_value_one():
    spec = make_network(
        nodes=["s", "t"], edges=[("e1", "s", "t")], sources=["s"], sinks=["t"],
        demands={"t": [1]},
    )
    aug = augment(spec, (1,))
    result = maxflow(aug, {aug.virtual_nodes[0]}, "t")
    assert result.value == 1
    assert len(result.paths) == 1
    assert result.paths[0][-1] == "e1"
    assert verify_flow(aug, result) is None


def test_empty_source_set(bottleneck):
    aug = augment(bottleneck, (1, 1))
    result = maxflow(aug, frozenset(), "t")
    assert (result.value, result.paths, result.mincut) == (0, (), frozenset())
    assert verify_flow(aug, result) is None


def test_butterfly_both_sinks_value_two(butterfly):
    aug = augment(butterfly, (2,))
    for sink in ("t1", "t2"):
        result = maxflow(aug, set(aug.virtual_nodes), sink)
        assert result.value == 2
        assert verify_flow(aug, result) is None
        assert_min_cut(aug, aug.virtual_nodes, sink, result.value, result.mincut)


def test_bottleneck_mincut(bottleneck):
    aug = augment(bottleneck, (1, 1))
    result = maxflow(aug, set(aug.virtual_nodes), "t")
    assert result.value == 1
    assert result.mincut == frozenset({"e3"})
    assert_min_cut(aug, aug.virtual_nodes, "t", 1, result.mincut)


def test_input_errors(bottleneck):
    aug = augment(bottleneck, (1, 1))
    with pytest.raises(ValueError):
        maxflow(aug, {"nope"}, "t")
    with pytest.raises(ValueError):
        maxflow(aug, {"s1"}, "nope")
    with pytest.raises(ValueError):
        maxflow(aug, {"t"}, "t")


def test_verify_flow_catches_tampering(butterfly):
    aug = augment(butterfly, (2,))
    result = maxflow(aug, set(aug.virtual_nodes), "t1")

    shared = FlowResult(
        value=result.value,
        paths=(result.paths[0], result.paths[0]),
        mincut=result.mincut,
        source_set=result.source_set,
        sink=result.sink,
    )
    assert "shared" in verify_flow(aug, shared)

    leaky = FlowResult(
        value=result.value,
        paths=result.paths,
        mincut=frozenset(list(result.mincut)[:1]),
        source_set=result.source_set,
        sink=result.sink,
    )
    assert verify_flow(aug, leaky) is not None

    broken = FlowResult(
        value=result.value,
        paths=tuple(p[:-1] for p in result.paths),
        mincut=result.mincut,
        source_set=result.source_set,
        sink=result.sink,
    )
    assert "sink" in verify_flow(aug, broken) or "breaks" in verify_flow(aug, broken)


def test_deterministic_result(crossing):
    aug = augment(crossing, (1, 1))
    results = [maxflow(aug, set(aug.virtual_nodes), "t1") for _ in range(3)]
    assert results[0] == results[1] == results[2]


def test_oracle_agreement_on_random_dags():
    # Smaller sample here; the acceptance suite runs the full 50.
    for spec, rate in random_instances(seed=101, count=12):
        aug = augment(spec, rate)
        all_virtual = set(aug.virtual_nodes)
        for sink in spec.sinks:
            result = maxflow(aug, all_virtual, sink)
            assert verify_flow(aug, result) is None
            assert_min_cut(aug, all_virtual, sink, result.value, result.mincut)


def test_monotone_in_source_set():
    rng = random.Random("monotone")
    for spec, rate in random_instances(seed=202, count=10):
        aug = augment(spec, rate)
        nodes = list(aug.virtual_nodes)
        small = {n for n in nodes if rng.random() < 0.5}
        big = small | {n for n in nodes if rng.random() < 0.5}
        for sink in spec.sinks:
            assert maxflow(aug, small, sink).value <= maxflow(aug, big, sink).value


def test_flow_subadditivity_over_demand_splits():
    # Removing the demanded virtual sources costs at most their rate total.
    for spec, rate in random_instances(seed=303, count=10):
        aug = augment(spec, rate)
        all_virtual = set(aug.virtual_nodes)
        for sink in spec.sinks:
            total = maxflow(aug, all_virtual, sink).value
            for dem in _subsets(range(1, len(spec.sources) + 1)):
                removed = {aug.virtual_nodes[i - 1] for i in dem}
                rest = maxflow(aug, all_virtual - removed, sink).value
                assert rest + sum(rate[i - 1] for i in dem) >= total


def _subsets(items):
    items = list(items)
    for mask in range(1 << len(items)):
        yield [x for i, x in enumerate(items) if mask >> i & 1]


def test_paths_stay_inside_graph_and_reach(crossing):
    aug = augment(crossing, (1, 1))
    result = maxflow(aug, set(aug.virtual_nodes), "t2")
    for path in result.paths:
        assert reaches(aug, {aug.edge_by_id[path[0]].tail}, "t2")
