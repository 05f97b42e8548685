"""Assembly of the polyhedral divisor of a trinomial hypersurface.

The divisor lives on a plane curve in a weighted projective plane whose
weights, equation and marked points are all determined by the gcd
invariants; the polyhedral coefficients share the recession cone cut out by
the kernel embedding F and have closed-form vertex lists.  Coefficients that
collapse to the recession cone itself are kept in the data model and only
flagged, so the output schema stays uniform.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

from .convexq import QCone, QPolyhedron, dot, min_linear, normalize_polyhedron, qvec
from .downgrade import BadOverride, TorusData, build_torus_data
from .exactla import IntMatrix, left_inverse
from .trinomial import (
    Classification,
    GcdInvariants,
    InternalInconsistency,
    RationalityClass,
    TrinomialInput,
    classify,
    gcd_invariants,
    validate,
)


class NotRational(ValueError):
    """Only genus-zero curves have a model on the projective line."""


class OutsideDualCone(ValueError):
    """Evaluation degrees must lie in the dual of the recession cone."""


@dataclass(frozen=True)
class RootPower:
    """The root of unity exp(2*pi*i*exponent/root_order), stored exactly."""

    root_order: int
    exponent: int

    def normalized(self) -> "RootPower":
        e = self.exponent % self.root_order
        g = gcd(e, self.root_order)
        if e == 0:
            return RootPower(1, 0)
        return RootPower(self.root_order // g, e // g)

    def display(self) -> str:
        r = self.normalized()
        if r.root_order == 1:
            return "1"
        if r.root_order == 2:
            return "-1"
        if r.root_order == 4:
            return "i" if r.exponent == 1 else "-i"
        return f"zeta({r.root_order})^{r.exponent}" if r.exponent != 1 else f"zeta({r.root_order})"


@dataclass(frozen=True)
class CurvePoint:
    """Point of the curve with one vanishing coordinate, other entries roots of unity.

    `entries` holds the values of the two non-vanishing coordinates in
    coordinate order; exponents refer to a fixed primitive root of order
    2 * cover_exponent, which makes equality and the curve identity decidable.
    """

    zero_index: int
    entries: tuple[RootPower, RootPower]

    def coordinates(self) -> tuple[RootPower | None, ...]:
        vals = list(self.entries)
        out: list[RootPower | None] = []
        for i in range(3):
            out.append(None if i == self.zero_index else vals.pop(0))
        return tuple(out)

    def display(self) -> str:
        parts = ["0" if c is None else c.display() for c in self.coordinates()]
        return "[" + ":".join(parts) + "]"


def curve_identity_holds(point: CurvePoint, equation_exponents, order: int) -> bool:
    """Whether the two surviving terms of the curve equation cancel formally."""
    exps = []
    coords = point.coordinates()
    for i in range(3):
        if coords[i] is None:
            continue
        if coords[i].root_order != order:
            return False
        exps.append(coords[i].exponent * equation_exponents[i] % order)
    if len(exps) != 2:
        return False
    return (exps[0] - exps[1]) % order == order // 2


@dataclass(frozen=True)
class P1Point:
    kind: str  # "zero" | "infinity" | "unity_root"
    root: RootPower | None = None

    def display(self) -> str:
        if self.kind == "zero":
            return "0"
        if self.kind == "infinity":
            return "inf"
        return self.root.display()


P1_ZERO = P1Point("zero")
P1_INFINITY = P1Point("infinity")


def p1_unity_root(order: int, exponent: int) -> P1Point:
    return P1Point("unity_root", RootPower(order, exponent).normalized())


@dataclass(frozen=True)
class BaseCurve:
    """The projective plane curve carrying the divisor.

    The curve sits in the weighted projective plane with the given weights
    and is cut out by w0^e0 + w1^e1 + w2^e2 with e = equation_exponents;
    weights[i] * equation_exponents[i] = cover_exponent for every i.
    """

    weights: tuple[int, int, int]
    equation_exponents: tuple[int, int, int]
    genus: int
    cover_exponent: int
    quotient_orders: tuple[int, int, int]
    classification: Classification

    @property
    def rational_type(self) -> RationalityClass | None:
        if self.classification.tag is RationalityClass.NON_RATIONAL:
            return None
        return self.classification.tag


@dataclass(frozen=True)
class SupportDivisor:
    vanishing_coordinate: int
    cardinality: int
    points: tuple[CurvePoint, ...]
    p1_model: tuple[P1Point, ...] | None = None


@dataclass(frozen=True)
class PPDivisor:
    curve: BaseCurve
    terms: tuple[tuple[QPolyhedron, SupportDivisor], ...]
    tail: QCone
    lattice_rank: int

    @property
    def polyhedra(self) -> tuple[QPolyhedron, ...]:
        return tuple(p for p, _ in self.terms)

    @property
    def supports(self) -> tuple[SupportDivisor, ...]:
        return tuple(s for _, s in self.terms)

    def coefficient_equals_tail(self, i: int) -> bool:
        return self.terms[i][0].is_cone_translate()


def tail_cone(td: TorusData) -> QCone:
    """The common recession cone {y : F y >= 0}; independent of S."""
    return QCone.from_halfspaces(td.F.entries, td.rank)


def theorem_vertices(t: TrinomialInput, g: GcdInvariants, td: TorusData):
    """Closed-form vertex lists of the three polyhedral coefficients.

    Block i contributes one point per variable: the section image of the
    scaled basis vector (scale_i / l_ij) e_k with k running over the block's
    coordinate positions.
    """
    out = []
    for i in range(3):
        scale = g.coefficient_scale(i)
        block = t.blocks[i]
        pts = []
        for j, pos in enumerate(t.block_positions(i)):
            coeff = Fraction(scale, block[j])
            col = td.S.column(pos)
            pts.append(tuple(coeff * c for c in col))
        out.append(tuple(pts))
    return tuple(out)


def base_curve(g: GcdInvariants, cls: Classification) -> BaseCurve:
    weights = (g.d12, g.d02, g.d01)
    exponents = (g.dtilde // g.d12, g.dtilde // g.d02, g.dtilde // g.d01)
    for w, e in zip(weights, exponents):
        if w * e != g.dtilde:
            raise InternalInconsistency("curve equation is not weighted homogeneous")
    return BaseCurve(
        weights=weights,
        equation_exponents=exponents,
        genus=cls.genus,
        cover_exponent=g.dtilde,
        quotient_orders=(g.d12, g.d02, g.d01),
        classification=cls,
    )


def support_points(g: GcdInvariants) -> tuple[SupportDivisor, SupportDivisor, SupportDivisor]:
    """The three marked point sets D_i = {w_i = 0} on the curve.

    Representatives anchor one coordinate at 1; the remaining coordinate
    walks through odd powers of the fixed primitive root.  The listed
    representatives are pairwise distinct in the weighted projective plane.
    """
    order = 2 * g.dtilde
    one = RootPower(order, 0)

    def zeta(e: int) -> RootPower:
        return RootPower(order, e % order)

    d0_points = tuple(
        CurvePoint(0, (one, zeta(g.d01 * (1 + 2 * k)))) for k in range(g.support_cardinality(0))
    )
    d1_points = tuple(
        CurvePoint(1, (one, zeta(g.d01 * (1 + 2 * k)))) for k in range(g.support_cardinality(1))
    )
    d2_points = tuple(
        CurvePoint(2, (one, zeta(g.d02 * (1 + 2 * k)))) for k in range(g.support_cardinality(2))
    )
    return (
        SupportDivisor(0, g.support_cardinality(0), d0_points),
        SupportDivisor(1, g.support_cardinality(1), d1_points),
        SupportDivisor(2, g.support_cardinality(2), d2_points),
    )


def rational_model(curve: BaseCurve, supports) -> tuple[tuple[P1Point, ...], ...]:
    """Images of the D_i on the projective line, for genus-zero curves only."""
    if curve.genus != 0:
        raise NotRational(f"curve has genus {curve.genus}")
    cls = curve.classification
    if cls.tag is RationalityClass.FACTORIAL:
        models = ((P1_ZERO,), (p1_unity_root(1, 0),), (P1_INFINITY,))
    elif cls.tag is RationalityClass.TYPE_I:
        j, k = cls.s_pair
        anchor = ({0, 1, 2} - {j, k}).pop()
        models = [None, None, None]
        models[anchor] = tuple(p1_unity_root(cls.s, e) for e in range(cls.s))
        models[j] = (P1_ZERO,)
        models[k] = (P1_INFINITY,)
        models = tuple(models)
    elif cls.tag is RationalityClass.TYPE_II:
        models = (
            (p1_unity_root(1, 0), p1_unity_root(2, 1)),
            (p1_unity_root(4, 1), p1_unity_root(4, 3)),
            (P1_ZERO, P1_INFINITY),
        )
    else:
        raise NotRational(f"no projective-line model for class {cls.tag}")
    for model, sup in zip(models, supports):
        if len(model) != sup.cardinality:
            raise InternalInconsistency(
                f"projective-line model size {len(model)} != cardinality {sup.cardinality}"
            )
    return models


def compute_ppdivisor(
    t: TrinomialInput,
    f_override: IntMatrix | None = None,
    s_override: IntMatrix | None = None,
) -> PPDivisor:
    """Full assembly: invariants, torus data, tail cone, coefficients, curve."""
    g = gcd_invariants(t)
    cls = classify(g, t)
    td = build_torus_data(t, f_override, s_override)
    sigma = tail_cone(td)
    vertex_lists = theorem_vertices(t, g, td)
    polyhedra = tuple(normalize_polyhedron(v, sigma) for v in vertex_lists)
    curve = base_curve(g, cls)
    supports = support_points(g)
    if cls.genus == 0:
        models = rational_model(curve, supports)
        supports = tuple(replace(s, p1_model=m) for s, m in zip(supports, models))
    terms = tuple(zip(polyhedra, supports))
    return PPDivisor(curve=curve, terms=terms, tail=sigma, lattice_rank=td.rank)


@dataclass(frozen=True)
class EvalResult:
    coefficients: tuple[Fraction, Fraction, Fraction]
    degree: Fraction
    floor_degree: int


def evaluate(dv: PPDivisor, u) -> EvalResult:
    """Coefficients min over each polyhedron, with exact and rounded degrees."""
    uu = qvec(u)
    for ray in dv.tail.rays:
        if dot(uu, ray) < 0:
            raise OutsideDualCone(f"{tuple(u)} pairs negatively with recession ray {ray}")
    coeffs = tuple(min_linear(p, uu) for p in dv.polyhedra)
    cards = [s.cardinality for s in dv.supports]
    degree = sum((c * n for c, n in zip(coeffs, cards)), Fraction(0))
    floor_degree = sum(_floor(c) * n for c, n in zip(coeffs, cards))
    return EvalResult(coeffs, degree, floor_degree)


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


@dataclass(frozen=True)
class PropernessReport:
    """Degree-based check of the positivity conditions on the dual cone.

    On a smooth projective curve, non-negative degree on every boundary ray
    and strictly positive degree at an interior point of the dual cone are
    the working semiample/big criteria; this report checks exactly that and
    does not decide the degree-zero torsion subtleties.
    """

    method: str
    ray_degrees: tuple[tuple[tuple[int, ...], Fraction], ...]
    relint_sample: tuple[int, ...]
    relint_degree: Fraction
    semiample_ok: bool
    big_ok: bool

    @property
    def proper(self) -> bool:
        return self.semiample_ok and self.big_ok


def properness_report(dv: PPDivisor) -> PropernessReport:
    from .convexq import dual_cone

    dual = dual_cone(dv.tail)
    ray_degrees = []
    for ray in dual.rays:
        ray_degrees.append((ray, evaluate(dv, ray).degree))
    sample = tuple(sum(r[i] for r in dual.rays) for i in range(dv.lattice_rank))
    relint_degree = evaluate(dv, sample).degree
    return PropernessReport(
        method="degree-based check",
        ray_degrees=tuple(ray_degrees),
        relint_sample=sample,
        relint_degree=relint_degree,
        semiample_ok=all(d >= 0 for _, d in ray_degrees),
        big_ok=relint_degree > 0,
    )


def pham_brieskorn(d0: int, d1: int, d2: int, s=None) -> PPDivisor:
    """Divisor of the surface x0^d0 + x1^d1 + x2^d2 = 0 over the half-line.

    The kernel embedding is the positive vector (m/d0, m/d1, m/d2) with m the
    lcm of the exponents, so the recession cone is the non-negative half-line
    and each coefficient is a closed half-line [s_i * scale_i / d_i, +inf).
    A section vector `s` may be supplied; it must pair to 1 with the kernel
    vector.
    """
    t = validate((d0,), (d1,), (d2,))
    g = gcd_invariants(t)
    cls = classify(g, t)
    f_vec = _pham_brieskorn_kernel(d0, d1, d2)
    f = IntMatrix.from_columns([f_vec])
    if s is not None:
        s_vec = tuple(int(x) for x in s)
        if sum(a * b for a, b in zip(f_vec, s_vec)) != 1:
            raise BadOverride(f"section {s_vec} does not pair to 1 with {f_vec}")
        s_mat = IntMatrix.from_rows([s_vec])
    else:
        s_mat = left_inverse(f)
        s_vec = s_mat.entries[0]

    sigma = QCone.from_halfspaces([(v,) for v in f_vec], 1)
    polyhedra = []
    for i, di in enumerate((d0, d1, d2)):
        endpoint = Fraction(s_vec[i] * g.coefficient_scale(i), di)
        polyhedra.append(normalize_polyhedron([(endpoint,)], sigma))
    curve = base_curve(g, cls)
    supports = support_points(g)
    if cls.genus == 0:
        models = rational_model(curve, supports)
        supports = tuple(replace(sup, p1_model=m) for sup, m in zip(supports, models))
    terms = tuple(zip(tuple(polyhedra), supports))
    return PPDivisor(curve=curve, terms=terms, tail=sigma, lattice_rank=1)


def _pham_brieskorn_kernel(d0: int, d1: int, d2: int) -> tuple[int, int, int]:
    m = d0 * d1 // gcd(d0, d1)
    m = m * d2 // gcd(m, d2)
    return (m // d0, m // d1, m // d2)
