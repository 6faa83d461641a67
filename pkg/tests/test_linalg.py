from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlnclab.gf import binary_field, prime_field
from rlnclab.linalg import (
    Vec,
    complement,
    in_span,
    project,
    rank,
    solve_for_targets,
    unit,
    zero,
)

GF2 = prime_field(2)
GF3 = prime_field(3)
GF5 = prime_field(5)
GF7 = prime_field(7)
GF16 = binary_field(4)


def vec(field, *values):
    return Vec(field, tuple(field.canon(v) for v in values))


def test_project_masks_coordinates():
    v = vec(GF5, 1, 2, 3)
    assert project(v, {0}).values == (1, 0, 0)
    assert project(v, {1, 2}).values == (0, 2, 3)
    assert project(v, set()).values == (0, 0, 0)


def test_project_index_out_of_range():
    with pytest.raises(ValueError):
        project(vec(GF5, 1, 2), {2})


@settings(max_examples=100)
@given(st.lists(st.integers(min_value=0, max_value=4), min_size=1, max_size=8), st.data())
def test_project_direct_sum_and_idempotence(values, data):
    v = Vec(GF5, tuple(values))
    dim = len(values)
    coords = data.draw(st.sets(st.integers(min_value=0, max_value=dim - 1)))
    u2 = complement(coords, dim)
    assert (project(v, coords) + project(v, u2)).values == v.values
    assert project(project(v, coords), coords).values == project(v, coords).values


def test_rank_examples():
    assert rank([unit(GF5, 3, i) for i in range(3)]) == 3
    assert rank([vec(GF2, 1, 1), vec(GF2, 1, 1)]) == 1
    # (1, -1) collapses onto (1, 1) in characteristic 2 but not mod 3.
    assert rank([vec(GF2, 1, 1), vec(GF2, 1, -1)]) == 1
    assert rank([vec(GF3, 1, 1), vec(GF3, 1, -1)]) == 2
    assert rank([]) == 0
    assert rank([zero(GF5, 4)]) == 0


def test_rank_dimension_mismatch():
    with pytest.raises(ValueError):
        rank([vec(GF5, 1, 2), vec(GF5, 1, 2, 3)])
    with pytest.raises(ValueError):
        rank([vec(GF5, 1, 2), vec(GF3, 1, 2)])


def test_in_span_examples():
    gens = [vec(GF2, 1, 0), vec(GF2, 0, 1)]
    assert in_span(zero(GF2, 2), [vec(GF2, 1, 1)])
    assert in_span(zero(GF2, 2), [])
    assert not in_span(vec(GF2, 1, 0), [vec(GF2, 0, 1)])
    assert in_span(vec(GF2, 1, 1), gens)


def _random_vectors(rng, field, count, dim):
    return [Vec(field, tuple(rng.randrange(field.q) for _ in range(dim))) for _ in range(count)]


def test_rank_invariant_under_row_operations():
    rng = random.Random("rowops")
    for field in (GF2, GF5, GF16):
        for _ in range(30):
            dim = rng.randint(1, 6)
            vs = _random_vectors(rng, field, rng.randint(1, 6), dim)
            base = rank(vs)
            ops = list(vs)
            for _ in range(10):
                kind = rng.randrange(3)
                i, j = rng.randrange(len(ops)), rng.randrange(len(ops))
                if kind == 0:
                    ops[i], ops[j] = ops[j], ops[i]
                elif kind == 1:
                    ops[i] = ops[i].scale(rng.randrange(1, field.q))
                elif i != j:
                    ops[i] = ops[i] + ops[j].scale(rng.randrange(field.q))
            assert rank(ops) == base


def test_projection_rank_subadditivity():
    rng = random.Random("subadd")
    for _ in range(50):
        field = rng.choice([GF2, GF3, GF16])
        dim = rng.randint(1, 6)
        vs = _random_vectors(rng, field, rng.randint(0, 6), dim)
        coords = {i for i in range(dim) if rng.random() < 0.5}
        u2 = complement(coords, dim)
        p1 = rank([project(v, coords) for v in vs])
        p2 = rank([project(v, u2) for v in vs])
        assert p1 + p2 >= rank(vs)


def test_in_span_consistent_with_solver():
    rng = random.Random("span-vs-solve")
    for _ in range(80):
        field = rng.choice([GF2, GF5, GF16])
        dim = rng.randint(1, 5)
        gens = _random_vectors(rng, field, rng.randint(0, 4), dim)
        target = Vec(field, tuple(rng.randrange(field.q) for _ in range(dim)))
        assert in_span(target, gens) == (solve_for_targets(gens, [target]) is not None)


def test_solver_identity_generators():
    gens = [unit(GF7, 3, i) for i in range(3)]
    targets = [vec(GF7, 2, 5, 0), vec(GF7, 1, 1, 1)]
    assert solve_for_targets(gens, targets) == tuple(t.values for t in targets)


def test_solver_fail_outside_span():
    assert solve_for_targets([vec(GF7, 1, 0, 0)], [vec(GF7, 0, 1, 0)]) is None


def test_solver_inverts_random_invertible_matrix():
    rng = random.Random("invert")
    found = 0
    while found < 10:
        gens = _random_vectors(rng, GF7, 3, 3)
        if rank(gens) < 3:
            continue
        found += 1
        targets = [unit(GF7, 3, i) for i in range(3)]
        d = solve_for_targets(gens, targets)
        assert d is not None
        # Multiply back by hand: row i of D against the generators gives e_i.
        for i, row in enumerate(d):
            acc = [0, 0, 0]
            for c, g in zip(row, gens):
                acc = [GF7.add(a, GF7.mul(c, v)) for a, v in zip(acc, g.values)]
            assert tuple(acc) == targets[i].values


def test_solver_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_for_targets([vec(GF5, 1, 2)], [vec(GF5, 1, 2, 3)])
