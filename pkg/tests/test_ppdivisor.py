import dataclasses
import random
from fractions import Fraction

import pytest

from trinodiv.convexq import fiber_vertices, normalize_polyhedron, qvec
from trinodiv.downgrade import BadOverride, build_torus_data
from trinodiv.exactla import IntMatrix
from trinodiv.ppdivisor import (
    NotRational,
    OutsideDualCone,
    base_curve,
    compute_ppdivisor,
    curve_identity_holds,
    evaluate,
    pham_brieskorn,
    properness_report,
    rational_model,
    support_points,
    tail_cone,
    theorem_vertices,
)
from trinodiv.trinomial import classify, gcd_invariants, validate


def _pipeline(fx):
    t = fx.t
    g = gcd_invariants(t)
    td = build_torus_data(t, fx.f, fx.s)
    return t, g, td


def test_tail_cone_factorial(factorial):
    _, _, td = _pipeline(factorial)
    assert set(tail_cone(td).rays) == {(1, 0), (1, 15)}


def test_tail_cone_pham_brieskorn(pb236):
    _, _, td = _pipeline(pb236)
    assert tail_cone(td).rays == ((1,),)


def test_tail_cone_type_ii(type_ii):
    _, _, td = _pipeline(type_ii)
    assert set(tail_cone(td).rays) == {(1, 0), (1, -1)}


def test_tail_cone_independent_of_section(factorial):
    t, _, td = _pipeline(factorial)
    # another valid section: add rows of L (they pair to zero with F's columns)
    s_alt = IntMatrix.from_rows(
        [
            tuple(a + b for a, b in zip(td.S.entries[0], td.L.entries[0])),
            tuple(a + b for a, b in zip(td.S.entries[1], td.L.entries[1])),
        ]
    )
    td_alt = build_torus_data(t, factorial.f, s_alt)
    assert tail_cone(td_alt) == tail_cone(td)


def test_theorem_vertices_factorial(factorial):
    t, g, td = _pipeline(factorial)
    v0, v1, v2 = theorem_vertices(t, g, td)
    assert v0 == ((Fraction(2, 3), Fraction(0)),)
    assert v1 == ((Fraction(-3, 5), Fraction(0)),)
    assert set(v2) == {qvec((0, 1)), qvec((0, 0))}


def test_theorem_vertices_type_ii(type_ii):
    t, g, td = _pipeline(type_ii)
    v0, v1, v2 = theorem_vertices(t, g, td)
    assert v0 == (qvec((1, 0)),)
    assert v1 == ((Fraction(-1, 2), Fraction(-1, 2)),)
    assert set(v2) == {qvec((0, 0)), (Fraction(0), Fraction(1, 2))}


def test_theorem_vertices_type_i(type_i):
    t, g, td = _pipeline(type_i)
    v0, v1, v2 = theorem_vertices(t, g, td)
    assert v0 == ((Fraction(1, 2), Fraction(0)),)
    assert v1 == (qvec((-1, 0)),)
    assert set(v2) == {qvec((0, 0)), qvec((0, 1))}


def test_base_curve_factorial(factorial):
    t = factorial.t
    g = gcd_invariants(t)
    curve = base_curve(g, classify(g, t))
    assert curve.weights == (1, 1, 1)
    assert curve.equation_exponents == (1, 1, 1)
    assert curve.genus == 0


def test_base_curve_type_i(type_i):
    t = type_i.t
    g = gcd_invariants(t)
    curve = base_curve(g, classify(g, t))
    assert curve.weights == (3, 1, 1)
    assert curve.equation_exponents == (1, 3, 3)


def test_base_curve_pham_brieskorn(pb236):
    t = pb236.t
    g = gcd_invariants(t)
    curve = base_curve(g, classify(g, t))
    assert curve.weights == (3, 2, 1)
    assert curve.equation_exponents == (2, 3, 6)
    assert curve.genus == 1
    assert curve.cover_exponent == 6


def test_support_cardinalities():
    for blocks, expected in [
        (((3,), (5,), (1, 1)), (1, 1, 1)),
        (((2,), (3,), (6,)), (3, 2, 1)),
        (((2,), (4,), (2, 4)), (2, 2, 2)),
    ]:
        g = gcd_invariants(validate(*blocks))
        sups = support_points(g)
        assert tuple(s.cardinality for s in sups) == expected
        assert tuple(len(s.points) for s in sups) == expected


def _projectively_equal(p, q, weights, order):
    """Equality in the weighted projective plane for root-of-unity points.

    With pairwise coprime weights, [..zeta^a..zeta^b..] = [..zeta^a'..zeta^b'..]
    (same vanishing coordinate, non-zero entries at j < k) exactly when
    (a'-a) * w_k = (b'-b) * w_j modulo the root order.
    """
    if p.zero_index != q.zero_index:
        return False
    j, k = (i for i in range(3) if i != p.zero_index)
    (pa, pb), (qa, qb) = p.entries, q.entries
    return ((qa.exponent - pa.exponent) * weights[k] - (qb.exponent - pb.exponent) * weights[j]) % order == 0


def test_support_points_satisfy_curve_identity():
    rng = random.Random(1559)
    for _ in range(50):
        blocks = []
        for _ in range(3):
            ni = rng.randint(1, 2)
            block = tuple(rng.randint(1, 9) for _ in range(ni))
            if len(block) == 1 and block[0] == 1:
                block = (3,)
            blocks.append(block)
        g = gcd_invariants(validate(*blocks))
        exps = (g.dtilde // g.d12, g.dtilde // g.d02, g.dtilde // g.d01)
        weights = (g.d12, g.d02, g.d01)
        for sup in support_points(g):
            for p in sup.points:
                assert curve_identity_holds(p, exps, 2 * g.dtilde)
            # listed representatives are pairwise distinct as projective points
            for a in range(len(sup.points)):
                for b in range(a + 1, len(sup.points)):
                    assert not _projectively_equal(
                        sup.points[a], sup.points[b], weights, 2 * g.dtilde
                    )


def test_rational_model_factorial(factorial):
    dv = compute_ppdivisor(factorial.t, factorial.f, factorial.s)
    assert [p.display() for p in dv.supports[0].p1_model] == ["0"]
    assert [p.display() for p in dv.supports[1].p1_model] == ["1"]
    assert [p.display() for p in dv.supports[2].p1_model] == ["inf"]


def test_rational_model_type_i(type_i):
    dv = compute_ppdivisor(type_i.t, type_i.f, type_i.s)
    assert [p.display() for p in dv.supports[0].p1_model] == ["1", "zeta(3)", "zeta(3)^2"]
    assert [p.display() for p in dv.supports[1].p1_model] == ["0"]
    assert [p.display() for p in dv.supports[2].p1_model] == ["inf"]


def test_rational_model_type_ii(type_ii):
    dv = compute_ppdivisor(type_ii.t, type_ii.f, type_ii.s)
    assert [p.display() for p in dv.supports[0].p1_model] == ["1", "-1"]
    assert [p.display() for p in dv.supports[1].p1_model] == ["i", "-i"]
    assert [p.display() for p in dv.supports[2].p1_model] == ["0", "inf"]


def test_rational_model_refuses_positive_genus(pb236):
    t = pb236.t
    g = gcd_invariants(t)
    curve = base_curve(g, classify(g, t))
    with pytest.raises(NotRational):
        rational_model(curve, support_points(g))


def test_no_p1_model_on_genus_one(non_rational):
    dv = compute_ppdivisor(non_rational.t, non_rational.f, non_rational.s)
    assert all(s.p1_model is None for s in dv.supports)
    assert tuple(s.cardinality for s in dv.supports) == (3, 2, 1)


def test_compute_non_rational_fixture(non_rational):
    dv = compute_ppdivisor(non_rational.t, non_rational.f, non_rational.s)
    assert dv.polyhedra[0].vertices == (qvec((1, 0)),)
    assert dv.polyhedra[1].vertices == (qvec((-1, 0)),)
    assert set(dv.polyhedra[2].vertices) == {qvec((0, 0)), qvec((0, 1))}
    assert set(dv.tail.rays) == {(1, 0), (1, 1)}
    assert dv.curve.genus == 1


def test_theorem_equals_fiber_construction():
    rng = random.Random(31338)
    for _ in range(40):
        blocks = []
        for _ in range(3):
            ni = rng.randint(1, 3)
            block = tuple(rng.randint(1, 9) for _ in range(ni))
            if len(block) == 1 and block[0] == 1:
                block = (rng.randint(2, 9),)
            blocks.append(block)
        t = validate(*blocks)
        g = gcd_invariants(t)
        td = build_torus_data(t)
        sigma = tail_cone(td)
        vlists = theorem_vertices(t, g, td)
        for i, u in enumerate((td.u0, td.u1, td.u2)):
            closed_form = normalize_polyhedron(vlists[i], sigma)
            constructed = normalize_polyhedron(fiber_vertices(td.L, u, td.S), sigma)
            assert closed_form == constructed


def test_evaluate_factorial(factorial):
    dv = compute_ppdivisor(factorial.t, factorial.f, factorial.s)
    ev = evaluate(dv, (5, 0))
    assert ev.coefficients == (Fraction(10, 3), Fraction(-3), Fraction(0))
    assert ev.degree == Fraction(1, 3)
    assert ev.floor_degree == 0
    ev = evaluate(dv, (15, 0))
    assert ev.coefficients == (Fraction(10), Fraction(-9), Fraction(0))
    assert ev.floor_degree == 1
    ev = evaluate(dv, (0, 0))
    assert ev.coefficients == (0, 0, 0)
    assert ev.degree == 0


def test_evaluate_outside_dual_cone(factorial):
    dv = compute_ppdivisor(factorial.t, factorial.f, factorial.s)
    with pytest.raises(OutsideDualCone):
        evaluate(dv, (-1, 0))


def test_evaluate_superadditive_degree(any_fixture):
    dv = compute_ppdivisor(any_fixture.t, any_fixture.f, any_fixture.s)
    from trinodiv.convexq import dual_cone

    rays = dual_cone(dv.tail).rays
    rng = random.Random(99)

    def random_dual_point():
        coeffs = [rng.randint(0, 6) for _ in rays]
        return tuple(sum(c * r[i] for c, r in zip(coeffs, rays)) for i in range(dv.lattice_rank))

    for _ in range(30):
        u = random_dual_point()
        v = random_dual_point()
        w = tuple(a + b for a, b in zip(u, v))
        assert evaluate(dv, w).degree >= evaluate(dv, u).degree + evaluate(dv, v).degree


def test_properness_factorial(factorial):
    dv = compute_ppdivisor(factorial.t, factorial.f, factorial.s)
    rep = properness_report(dv)
    assert rep.method == "degree-based check"
    assert {r: d for r, d in rep.ray_degrees} == {(0, 1): 0, (15, -1): 0}
    assert rep.relint_sample == (15, 0)
    assert rep.relint_degree == 1
    assert rep.proper


def test_properness_all_fixtures(any_fixture):
    dv = compute_ppdivisor(any_fixture.t, any_fixture.f, any_fixture.s)
    rep = properness_report(dv)
    assert rep.semiample_ok
    assert rep.big_ok


def test_properness_fails_for_degenerate_divisor(factorial):
    dv = compute_ppdivisor(factorial.t, factorial.f, factorial.s)
    sigma_poly = normalize_polyhedron([(0, 0)], dv.tail)
    degenerate = dataclasses.replace(
        dv, terms=tuple((sigma_poly, s) for _, s in dv.terms)
    )
    rep = properness_report(degenerate)
    assert rep.semiample_ok
    assert not rep.big_ok
    assert not rep.proper


def test_pham_brieskorn_236():
    dv = pham_brieskorn(2, 3, 6, s=(1, -1, 0))
    assert [p.vertices for p in dv.polyhedra] == [
        ((Fraction(1),),),
        ((Fraction(-1),),),
        ((Fraction(0),),),
    ]
    assert dv.coefficient_equals_tail(2)
    assert not dv.coefficient_equals_tail(0)
    assert dv.tail.rays == ((1,),)
    assert tuple(s.cardinality for s in dv.supports) == (3, 2, 1)
    assert dv.curve.weights == (3, 2, 1)


def test_pham_brieskorn_excludes_linear():
    from trinodiv.trinomial import LinearTerm

    with pytest.raises(LinearTerm):
        pham_brieskorn(1, 1, 1)


def test_pham_brieskorn_235():
    dv = pham_brieskorn(2, 3, 5, s=(1, 1, -4))
    assert [p.vertices[0][0] for p in dv.polyhedra] == [
        Fraction(1, 2),
        Fraction(1, 3),
        Fraction(-4, 5),
    ]
    ev = evaluate(dv, (1,))
    assert ev.degree == Fraction(1, 30)
    assert properness_report(dv).proper


def test_pham_brieskorn_bad_section():
    with pytest.raises(BadOverride):
        pham_brieskorn(2, 3, 6, s=(1, 1, 1))


def test_pham_brieskorn_agrees_with_general_route():
    for d in [(2, 3, 6), (2, 3, 5), (4, 6, 10), (3, 4, 5), (2, 2, 2)]:
        special = pham_brieskorn(*d)
        t = validate((d[0],), (d[1],), (d[2],))
        td = build_torus_data(t)
        general = compute_ppdivisor(t, td.F, td.S)
        assert special.polyhedra == general.polyhedra
        assert special.tail == general.tail
        assert special.curve == general.curve
        assert special.supports == general.supports


def test_curve_weighted_homogeneity_random():
    rng = random.Random(27)
    for _ in range(100):
        d0, d1, d2 = (rng.randint(1, 30) for _ in range(3))
        from trinodiv.trinomial import classify_invariants, invariants_from_block_gcds

        g = invariants_from_block_gcds(d0, d1, d2)
        curve = base_curve(g, classify_invariants(g))
        for w, e in zip(curve.weights, curve.equation_exponents):
            assert w * e == g.dtilde
        sups = support_points(g)
        assert tuple(s.cardinality for s in sups) == (g.d * g.d12, g.d * g.d02, g.d * g.d01)
