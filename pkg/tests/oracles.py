"""Independent brute-force oracles the tests check the library against.

Nothing here calls into the code paths under test: reachability is a plain
BFS over edge tuples, the cut oracle enumerates edge subsets, and the
GF(2^k) reference multiplier is a direct carry-less multiply with
polynomial reduction (no tables).
"""
from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable

from rlnclab.network import AugmentedNetwork


def reaches(
    aug: AugmentedNetwork,
    origins: Iterable[str],
    goal: str,
    removed: frozenset[str] = frozenset(),
) -> bool:
    seen = set(origins)
    dq = deque(seen)
    while dq:
        u = dq.popleft()
        if u == goal:
            return True
        for e in aug.edges:
            if e.tail == u and e.id not in removed and e.head not in seen:
                seen.add(e.head)
                dq.append(e.head)
    return goal in seen


def assert_min_cut(aug: AugmentedNetwork, source_set, sink: str, value: int, mincut) -> None:
    """Exponential check that `value` is the minimum disconnecting size.

    No edge subset smaller than `value` may disconnect, and the reported
    cut itself must disconnect.
    """
    source_set = frozenset(source_set)
    edge_ids = [e.id for e in aug.edges]
    for k in range(value):
        for combo in itertools.combinations(edge_ids, k):
            assert reaches(aug, source_set, sink, frozenset(combo)), (
                f"cut {combo} of size {k} < {value} disconnects {sorted(source_set)} from {sink}"
            )
    assert not reaches(aug, source_set, sink, frozenset(mincut)), (
        f"reported cut {sorted(mincut)} does not disconnect"
    )


def clmul_reduce(a: int, b: int, poly: int, k: int) -> int:
    """Reference GF(2^k) product: carry-less multiply, then long reduction."""
    prod = 0
    for i in range(b.bit_length()):
        if (b >> i) & 1:
            prod ^= a << i
    for bit in range(prod.bit_length() - 1, k - 1, -1):
        if (prod >> bit) & 1:
            prod ^= poly << (bit - k)
    return prod


def poly_has_factor(poly: int, k: int) -> bool:
    """True when some polynomial of degree 1..k-1 divides poly over GF(2)."""
    for d in range(1, k):
        for low in range(1 << d):
            cand = (1 << d) | low
            rem = poly
            while rem and rem.bit_length() - 1 >= d:
                rem ^= cand << (rem.bit_length() - 1 - d)
            if rem == 0:
                return True
    return False


def all_cuts(aug: AugmentedNetwork, keep_side: Iterable[str], sink: str):
    """Every node partition (V_S, V_T) with keep_side in V_S and sink in V_T.

    Yields the crossing edge-id sets.
    """
    keep = set(keep_side)
    rest = [n for n in aug.nodes if n not in keep and n != sink]
    for bits in itertools.product((0, 1), repeat=len(rest)):
        v_s = keep | {n for n, b in zip(rest, bits) if b}
        yield frozenset(e.id for e in aug.edges if e.tail in v_s and e.head not in v_s)
