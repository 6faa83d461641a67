"""Construction of linear coding assignments over an augmented network.

Each virtual edge tagged (i, j) carries the unit vector of its global
coordinate; every other edge carries a linear combination of the vectors on
the in-edges of its tail, one coefficient per (edge, in-edge) pair.  The
random constructor draws those coefficients uniformly (zero included) from
a caller-supplied seeded stream; the explicit constructor takes them as a
mapping, which is what the exact enumeration oracle replays.

Assignments retain their coefficients so any vector can be re-derived and
audited after the fact.
"""
from __future__ import annotations

import random
from collections.abc import Callable, Mapping
from dataclasses import dataclass

from .gf import Field
from .linalg import Vec, unit
from .network import AugmentedNetwork


@dataclass(frozen=True)
class CodingAssignment:
    field: Field
    dim: int
    vectors: dict[str, Vec]
    coefficients: dict[tuple[str, str], int]


def coefficient_slots(aug: AugmentedNetwork) -> tuple[tuple[str, str], ...]:
    """All (edge, in-edge-of-tail) pairs, in deterministic evaluation order."""
    slots: list[tuple[str, str]] = []
    for eid in aug.topo_edges:
        if eid in aug.virtual_tags:
            continue
        tail = aug.edge_by_id[eid].tail
        slots.extend((eid, ein) for ein in aug.in_edges[tail])
    return tuple(slots)


def _evaluate(
    aug: AugmentedNetwork,
    field: Field,
    coeff_of: Callable[[str, str], int],
) -> CodingAssignment:
    r = aug.r
    add, mul = field.add, field.mul
    vectors: dict[str, Vec] = {}
    coefficients: dict[tuple[str, str], int] = {}
    for eid in aug.topo_edges:
        tag = aug.virtual_tags.get(eid)
        if tag is not None:
            vectors[eid] = unit(field, r, aug.coord_of(*tag))
            continue
        tail = aug.edge_by_id[eid].tail
        acc = [0] * r
        for ein in aug.in_edges[tail]:
            c = coeff_of(eid, ein)
            coefficients[(eid, ein)] = c
            if c:
                src = vectors[ein].values
                for idx in range(r):
                    v = src[idx]
                    if v:
                        acc[idx] = add(acc[idx], mul(c, v))
        vectors[eid] = Vec(field, tuple(acc))
    return CodingAssignment(field=field, dim=r, vectors=vectors, coefficients=coefficients)


def random_code(aug: AugmentedNetwork, field: Field, rng: random.Random) -> CodingAssignment:
    """Draw every coefficient independently and uniformly from rng.

    Edges are processed in topological order and the in-edges of each tail
    in edge-id order, so a given stream state always yields the same
    assignment.
    """
    return _evaluate(aug, field, lambda _eid, _ein: field.sample(rng))


def code_with_coefficients(
    aug: AugmentedNetwork, field: Field, coefficients: Mapping[tuple[str, str], int]
) -> CodingAssignment:
    """Run the same recursion with explicitly supplied coefficients."""
    expected = set(coefficient_slots(aug))
    got = set(coefficients)
    if got != expected:
        missing = sorted(expected - got)
        extra = sorted(got - expected)
        parts = []
        if missing:
            parts.append(f"missing coefficients for {missing[:5]}")
        if extra:
            parts.append(f"extraneous coefficients for {extra[:5]}")
        raise ValueError("; ".join(parts))
    canon = field.canon
    return _evaluate(aug, field, lambda eid, ein: canon(coefficients[(eid, ein)]))


def recheck(assignment: CodingAssignment, aug: AugmentedNetwork) -> str | None:
    """Re-derive every vector from the stored coefficients; None means clean.

    Reports the first offending edge in topological order, so a mutated
    coefficient is attributed to the first edge it corrupts.
    """
    field, r = assignment.field, assignment.dim
    if r != aug.r:
        return f"assignment dimension {r} != augmented dimension {aug.r}"
    missing = [eid for eid in aug.topo_edges if eid not in assignment.vectors]
    if missing:
        return f"edge {missing[0]!r} has no vector"
    extra = set(assignment.vectors) - set(aug.topo_edges)
    if extra:
        return f"vector stored for unknown edge {sorted(extra)[0]!r}"

    add, mul = field.add, field.mul
    for eid in aug.topo_edges:
        stored = assignment.vectors[eid]
        tag = aug.virtual_tags.get(eid)
        if tag is not None:
            want = unit(field, r, aug.coord_of(*tag)).values if r else ()
            if stored.values != want:
                return f"virtual edge {eid!r} does not carry its unit vector"
            continue
        tail = aug.edge_by_id[eid].tail
        acc = [0] * r
        for ein in aug.in_edges[tail]:
            c = assignment.coefficients.get((eid, ein))
            if c is None:
                return f"missing coefficient for ({eid!r}, {ein!r})"
            if c:
                src = assignment.vectors[ein].values
                for idx in range(r):
                    v = src[idx]
                    if v:
                        acc[idx] = add(acc[idx], mul(c, v))
        if tuple(acc) != stored.values:
            return f"edge {eid!r}: stored vector disagrees with its coefficients"
    return None


def dump_assignment(assignment: CodingAssignment, aug: AugmentedNetwork) -> str:
    """Debug text dump: one line per edge, vector then the coefficients used."""
    lines = []
    for eid in aug.topo_edges:
        vec = ",".join(str(v) for v in assignment.vectors[eid].values)
        tail = aug.edge_by_id[eid].tail
        coeffs = " ".join(
            f"{ein}={assignment.coefficients[(eid, ein)]}"
            for ein in aug.in_edges[tail]
            if (eid, ein) in assignment.coefficients
        )
        lines.append(f"{eid}: [{vec}]" + (f"; {coeffs}" if coeffs else ""))
    return "\n".join(lines) + "\n"
