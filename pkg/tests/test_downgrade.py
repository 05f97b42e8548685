import random

import pytest

from trinodiv.downgrade import (
    BadOverride,
    BadRelation,
    build_torus_data,
    image_generators,
    ray_generators,
    trinomial_relation,
)
from trinodiv.exactla import IntMatrix, column_hermite, same_column_lattice
from trinodiv.trinomial import gcd_invariants, invariants_from_block_gcds, validate


def test_factorial_grading(factorial):
    td = build_torus_data(factorial.t, factorial.f, factorial.s)
    assert td.degrees == ((5, 0), (3, 0), (0, 1), (15, -1))
    assert td.u0 == (-1, -1) and td.u1 == (1, 0) and td.u2 == (0, 1)
    assert td.v0 == (-3, -3) and td.v1 == (5, 0) and td.v2 == (0, 1)


def test_pham_brieskorn_vectors(pb236):
    td = build_torus_data(pb236.t, pb236.f, pb236.s)
    assert td.F.columns() == ((3, 2, 1),)
    assert td.S.entries == ((1, -1, 0),)
    assert td.u0 == (-2, -2) and td.u1 == (3, 0) and td.u2 == (0, 6)


def test_canonical_without_overrides(factorial):
    td = build_torus_data(factorial.t)
    assert (td.L @ td.F).is_zero()
    assert (td.S @ td.F).entries == IntMatrix.identity(2).entries
    assert same_column_lattice(td.F, factorial.f)


def test_bad_override_shape(factorial):
    with pytest.raises(BadOverride):
        build_torus_data(factorial.t, IntMatrix.identity(2), None)


def test_bad_override_not_kernel(factorial):
    wrong = IntMatrix.from_columns([(1, 0, 0, 0), (0, 1, 0, 0)])
    with pytest.raises(BadOverride):
        build_torus_data(factorial.t, wrong, None)


def test_bad_override_not_saturated(factorial):
    doubled = IntMatrix.from_columns([(10, 6, 0, 30), (0, 0, 2, -2)])
    with pytest.raises(BadOverride):
        build_torus_data(factorial.t, doubled, None)


def test_bad_override_section(factorial):
    not_section = IntMatrix.from_rows([(0, 0, 0, 0), (0, 0, 1, 0)])
    with pytest.raises(BadOverride):
        build_torus_data(factorial.t, factorial.f, not_section)


def test_ray_generators_unit_relation():
    vs = [(1, 0), (0, 1), (-1, -1)]
    out = ray_generators(vs, (1, 1, 1))
    assert out == [(1, (1, 0)), (1, (0, 1)), (1, (-1, -1))]


def test_ray_generators_factorial():
    out = ray_generators([(-3, -3), (5, 0), (0, 1)], (5, 3, 15))
    assert out == [(3, (-1, -1)), (5, (1, 0)), (1, (0, 1))]


def test_ray_generators_pham_brieskorn():
    out = ray_generators([(-2, -2), (3, 0), (0, 6)], (3, 2, 1))
    assert out == [(1, (-2, -2)), (1, (3, 0)), (1, (0, 6))]


def test_ray_generators_bad_relation():
    with pytest.raises(BadRelation):
        ray_generators([(1, 0), (-1, 0)], (1, -1))
    with pytest.raises(BadRelation):
        ray_generators([(1, 0), (-1, 0)], (2, 2))
    with pytest.raises(BadRelation):
        ray_generators([(1, 0), (0, 1)], (1, 1))


def test_image_generators_examples():
    assert image_generators(invariants_from_block_gcds(1, 1, 1)) == ((-1, -1), (1, 0), (0, 1))
    g = gcd_invariants(validate((3,), (5,), (1, 1)))
    assert image_generators(g) == ((-1, -1), (1, 0), (0, 1))
    g = gcd_invariants(validate((2,), (3,), (6,)))
    assert image_generators(g) == ((-2, -2), (3, 0), (0, 6))


def test_image_generators_match_ray_generators_random():
    rng = random.Random(4257)
    for _ in range(200):
        d0, d1, d2 = (rng.randint(1, 30) for _ in range(3))
        g = invariants_from_block_gcds(d0, d1, d2)
        vs = [(-d0, -d0), (d1, 0), (0, d2)]
        q = trinomial_relation(g)
        out = ray_generators(vs, q)
        assert tuple(u for _, u in out) == image_generators(g)


def _lattice_contains(columns, vec) -> bool:
    lat = IntMatrix.from_columns(columns)
    extended = IntMatrix.from_columns(list(columns) + [vec])
    return column_hermite(lat).entries == column_hermite(extended).entries


def test_image_generators_primitive_random():
    rng = random.Random(907)
    for _ in range(100):
        d0, d1, d2 = (rng.randint(1, 20) for _ in range(3))
        g = invariants_from_block_gcds(d0, d1, d2)
        vs = [(-d0, -d0), (d1, 0), (0, d2)]
        for u in image_generators(g):
            assert _lattice_contains(vs, u)
            for m in range(2, 12):
                if all(x % m == 0 for x in u):
                    assert not _lattice_contains(vs, tuple(x // m for x in u))


def test_grading_makes_trinomial_homogeneous():
    rng = random.Random(5811)
    for _ in range(60):
        blocks = []
        for _ in range(3):
            ni = rng.randint(1, 3)
            block = tuple(rng.randint(1, 9) for _ in range(ni))
            if len(block) == 1 and block[0] == 1:
                block = (2,)
            blocks.append(block)
        t = validate(*blocks)
        td = build_torus_data(t)
        degs = []
        for i in range(3):
            total = [0] * td.rank
            for j, pos in enumerate(t.block_positions(i)):
                for c in range(td.rank):
                    total[c] += t.blocks[i][j] * td.degrees[pos][c]
            degs.append(tuple(total))
        assert degs[0] == degs[1] == degs[2]
