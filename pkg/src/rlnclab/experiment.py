"""Monte Carlo and exact-enumeration experiments on random linear coding.

The empirical side: seeded trials of the random scheme, exact success
probabilities by enumerating every coefficient tuple on small instances,
field sweeps that expose the success/failure dichotomy as the field grows,
and a search for explicit coding solutions.

Reproducibility contract: trial k of a run draws from a stream seeded by
the pair (master seed, k), so reports are bit-identical across runs and
across any parallel schedule.  Streams are `random.Random` seeded with the
string "<master>:<k>"; CPython hashes string seeds with SHA-512, which is
stable across platforms and versions.
"""
from __future__ import annotations

import csv
import io
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .coding import code_with_coefficients, coefficient_slots, random_code
from .decode import all_sinks_decodable
from .errors import GuardExceeded
from .gf import Field
from .network import NetworkSpec, Rate, augment

TUPLE_GUARD = 10**7

OVERALL = "ALL"

CSV_HEADER = ["network", "rate", "field", "trials", "seed", "sink", "successes", "success_rate"]
ORACLE_CSV_HEADER = CSV_HEADER + ["numerator", "denominator"]


@dataclass(frozen=True)
class TrialReport:
    network: str
    rate: Rate
    field: str
    trials: int
    master_seed: int | str
    per_sink: dict[str, int]
    overall: int

    def success_rate(self, sink: str | None = None) -> float:
        hits = self.overall if sink is None else self.per_sink[sink]
        return hits / self.trials


@dataclass(frozen=True)
class ExactProbability:
    network: str
    rate: Rate
    field: str
    slot_count: int
    tuple_count: int
    per_sink: dict[str, int]
    overall: int

    def probability(self, sink: str | None = None) -> Fraction:
        hits = self.overall if sink is None else self.per_sink[sink]
        return Fraction(hits, self.tuple_count)


@dataclass(frozen=True)
class SweepTable:
    rows: tuple[TrialReport, ...]


def trial_rng(master_seed: int | str, trial_index: int) -> random.Random:
    """Independent deterministic stream for one trial of one run."""
    return random.Random(f"{master_seed}:{trial_index}")


def _mc_chunk(args) -> tuple[dict[str, int], int]:
    spec, rate, fieldobj, master_seed, start, stop = args
    aug = augment(spec, rate)
    per_sink = {t: 0 for t in spec.sinks}
    overall = 0
    for k in range(start, stop):
        assignment = random_code(aug, fieldobj, trial_rng(master_seed, k))
        sink_ok, ok = all_sinks_decodable(assignment, aug)
        for t, hit in sink_ok.items():
            if hit:
                per_sink[t] += 1
        if ok:
            overall += 1
    return per_sink, overall


def monte_carlo(
    spec: NetworkSpec,
    rate: Rate,
    field: Field,
    trials: int,
    master_seed: int | str,
    workers: int = 1,
) -> TrialReport:
    """Run seeded random-coding trials; counts are schedule-independent.

    Each trial draws a fresh assignment from its own stream and records
    which sinks decode; `workers` > 1 splits the trial range over processes
    without changing any count.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    augment(spec, rate)  # fail fast on invalid inputs
    if workers <= 1:
        per_sink, overall = _mc_chunk((spec, rate, field, master_seed, 0, trials))
    else:
        bounds = [trials * i // workers for i in range(workers + 1)]
        chunks = [
            (spec, rate, field, master_seed, lo, hi)
            for lo, hi in zip(bounds, bounds[1:])
            if lo < hi
        ]
        per_sink = {t: 0 for t in spec.sinks}
        overall = 0
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            for chunk_sink, chunk_overall in pool.map(_mc_chunk, chunks):
                for t, n in chunk_sink.items():
                    per_sink[t] += n
                overall += chunk_overall
    return TrialReport(
        network=spec.name,
        rate=rate,
        field=field.descriptor,
        trials=trials,
        master_seed=master_seed,
        per_sink=per_sink,
        overall=overall,
    )


def _guarded_tuple_count(field: Field, slot_count: int, guard: int) -> int:
    count = field.q**slot_count
    if count > guard:
        raise GuardExceeded(f"{count} coefficient tuples exceed the guard of {guard}")
    return count


def brute_force(
    spec: NetworkSpec, rate: Rate, field: Field, guard: int = TUPLE_GUARD
) -> ExactProbability:
    """Exact success probability by enumerating every coefficient mapping.

    Every tuple is instantiated through the same explicit-coefficient
    constructor used elsewhere, so this is an independent oracle for the
    Monte Carlo path rather than a reimplementation of it.
    """
    aug = augment(spec, rate)
    slots = coefficient_slots(aug)
    tuple_count = _guarded_tuple_count(field, len(slots), guard)
    per_sink = {t: 0 for t in spec.sinks}
    overall = 0
    for combo in itertools.product(field.elements(), repeat=len(slots)):
        assignment = code_with_coefficients(aug, field, dict(zip(slots, combo)))
        sink_ok, ok = all_sinks_decodable(assignment, aug)
        for t, hit in sink_ok.items():
            if hit:
                per_sink[t] += 1
        if ok:
            overall += 1
    return ExactProbability(
        network=spec.name,
        rate=rate,
        field=field.descriptor,
        slot_count=len(slots),
        tuple_count=tuple_count,
        per_sink=per_sink,
        overall=overall,
    )


def existence_search(
    spec: NetworkSpec, rate: Rate, field: Field, guard: int = TUPLE_GUARD
) -> dict[tuple[str, str], int] | None:
    """First coefficient mapping (in enumeration order) decoding all sinks.

    Returns None when no linear solution over this field exists.
    """
    aug = augment(spec, rate)
    slots = coefficient_slots(aug)
    _guarded_tuple_count(field, len(slots), guard)
    for combo in itertools.product(field.elements(), repeat=len(slots)):
        mapping = dict(zip(slots, combo))
        assignment = code_with_coefficients(aug, field, mapping)
        if all_sinks_decodable(assignment, aug)[1]:
            return mapping
    return None


def field_sweep(
    spec: NetworkSpec,
    rate: Rate,
    fields: list[Field],
    trials: int,
    master_seed: int | str,
    workers: int = 1,
) -> SweepTable:
    """One Monte Carlo report per field, fields ordered by increasing size."""
    sizes = [f.q for f in fields]
    if sizes != sorted(sizes):
        raise ValueError("sweep fields must be ordered by increasing order q")
    rows = tuple(
        monte_carlo(spec, rate, f, trials, master_seed, workers=workers) for f in fields
    )
    return SweepTable(rows=rows)


def _rate_str(rate: Rate) -> str:
    return ",".join(str(r) for r in rate)


def emit_csv(header: list[str], rows: list[list[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def report_rows(report: TrialReport) -> list[list[object]]:
    base = [report.network, _rate_str(report.rate), report.field, report.trials,
            report.master_seed]
    rows = [
        base + [sink, hits, repr(hits / report.trials)]
        for sink, hits in report.per_sink.items()
    ]
    rows.append(base + [OVERALL, report.overall, repr(report.overall / report.trials)])
    return rows


def report_csv(report: TrialReport) -> str:
    return emit_csv(CSV_HEADER, report_rows(report))


def sweep_csv(table: SweepTable) -> str:
    rows: list[list[object]] = []
    for report in table.rows:
        rows.extend(report_rows(report))
    return emit_csv(CSV_HEADER, rows)


def oracle_csv(exact: ExactProbability) -> str:
    base = [exact.network, _rate_str(exact.rate), exact.field, exact.tuple_count, ""]
    rows = [
        base + [sink, hits, repr(hits / exact.tuple_count), hits, exact.tuple_count]
        for sink, hits in exact.per_sink.items()
    ]
    rows.append(
        base
        + [OVERALL, exact.overall, repr(exact.overall / exact.tuple_count), exact.overall,
           exact.tuple_count]
    )
    return emit_csv(ORACLE_CSV_HEADER, rows)
