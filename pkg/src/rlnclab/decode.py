"""Per-sink decodability and explicit decoding matrices.

A sink decodes when every unit vector of its demanded coordinates lies in
the span of the vectors arriving on its in-edges; the decoding matrix is
the witness that recombines the in-edge symbols into the demanded source
symbols.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coding import CodingAssignment
from .linalg import Vec, solve_for_targets, span_contains_all, unit
from .network import AugmentedNetwork


@dataclass(frozen=True)
class SinkView:
    """What one sink sees: its in-edge vectors and the basis it must recover."""

    sink: str
    in_vectors: tuple[tuple[str, Vec], ...]
    demanded_basis: tuple[Vec, ...]


def sink_view(assignment: CodingAssignment, aug: AugmentedNetwork, sink: str) -> SinkView:
    if sink not in aug.spec.sinks:
        raise ValueError(f"unknown sink {sink!r}")
    in_vectors = tuple((eid, assignment.vectors[eid]) for eid in aug.in_edges[sink])
    basis = tuple(
        unit(assignment.field, aug.r, coord) for coord in sorted(aug.demand_coords(sink))
    )
    return SinkView(sink=sink, in_vectors=in_vectors, demanded_basis=basis)


def decodable(assignment: CodingAssignment, aug: AugmentedNetwork, sink: str) -> bool:
    """True iff the sink's demanded basis lies in the span of its in-edges.

    A demand whose sources all have rate zero is vacuously satisfied.
    """
    view = sink_view(assignment, aug, sink)
    if not view.demanded_basis:
        return True
    return span_contains_all([v for _, v in view.in_vectors], view.demanded_basis)


def decoding_matrix(
    assignment: CodingAssignment, aug: AugmentedNetwork, sink: str
) -> tuple[tuple[int, ...], ...] | None:
    """Matrix D with D . (in-edge vectors) = demanded basis, or None.

    Row order follows the demanded coordinates ascending; column order
    follows the sink's in-edges in edge-id order.
    """
    view = sink_view(assignment, aug, sink)
    return solve_for_targets([v for _, v in view.in_vectors], view.demanded_basis)


def all_sinks_decodable(
    assignment: CodingAssignment, aug: AugmentedNetwork
) -> tuple[dict[str, bool], bool]:
    """Per-sink decodability in declared sink order, plus the conjunction."""
    per_sink = {t: decodable(assignment, aug, t) for t in aug.spec.sinks}
    return per_sink, all(per_sink.values())
