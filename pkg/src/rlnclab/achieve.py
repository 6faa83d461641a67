"""Rate achievability by random coding: the maxflow criterion and the region.

A rate vector passes when, for every sink, the demanded symbol count plus
the maxflow from the non-demanded virtual sources equals the maxflow from
all virtual sources.  Passing rates are exactly those on which random
coding succeeds with probability approaching 1 as the field grows; failing
rates drive it to 0.  The achievable set is downward closed, which the
region enumerator exploits for pruning.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import GuardExceeded
from .maxflow import maxflow
from .network import AugmentedNetwork, NetworkSpec, Rate, augment

REGION_GUARD = 10**6


@dataclass(frozen=True)
class SinkCondition:
    sink: str
    d1: int
    d2: int
    total: int
    holds: bool


@dataclass(frozen=True)
class RegionReport:
    bound: int
    num_sources: int
    achievable: frozenset[Rate]
    frontier: frozenset[Rate]


def sink_condition(aug: AugmentedNetwork, sink: str) -> SinkCondition:
    """Evaluate the criterion for one sink of an augmented network."""
    spec = aug.spec
    all_virtual = frozenset(aug.virtual_nodes)
    demanded = frozenset(
        aug.virtual_nodes[i - 1] for i in spec.demands[sink]
    )
    d1 = sum(aug.rate[i - 1] for i in spec.demands[sink])
    d2 = maxflow(aug, all_virtual - demanded, sink).value
    total = maxflow(aug, all_virtual, sink).value
    if d1 + d2 < total:  # impossible by flow decomposition; guard against bugs
        raise RuntimeError(f"sink {sink!r}: d1 + d2 = {d1 + d2} < total {total}")
    return SinkCondition(sink=sink, d1=d1, d2=d2, total=total, holds=d1 + d2 == total)


def check_rate(spec: NetworkSpec, rate: Rate) -> tuple[list[SinkCondition], bool]:
    """Per-sink conditions plus the overall verdict (all sinks hold)."""
    aug = augment(spec, rate)
    conditions = [sink_condition(aug, t) for t in spec.sinks]
    return conditions, all(c.holds for c in conditions)


def enumerate_region(spec: NetworkSpec, bound: int, guard: int = REGION_GUARD) -> RegionReport:
    """All achievable rate vectors in the box [0, bound]^m.

    Ascending lexicographic sweep; a vector is skipped (as unachievable)
    when decrementing some coordinate already failed, which is sound
    because the achievable set is downward closed.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    m = spec.num_sources
    if (bound + 1) ** m > guard:
        raise GuardExceeded(
            f"region enumeration of {(bound + 1) ** m} rate vectors exceeds guard {guard}"
        )
    achievable: set[Rate] = set()
    failed: set[Rate] = set()
    for rate in itertools.product(range(bound + 1), repeat=m):
        pruned = any(
            rate[i] > 0 and rate[:i] + (rate[i] - 1,) + rate[i + 1:] in failed
            for i in range(m)
        )
        if pruned or not check_rate(spec, rate)[1]:
            failed.add(rate)
        else:
            achievable.add(rate)
    frontier = frozenset(
        r
        for r in achievable
        if not any(other != r and all(a >= b for a, b in zip(other, r)) for other in achievable)
    )
    return RegionReport(
        bound=bound, num_sources=m, achievable=frozenset(achievable), frontier=frontier
    )
