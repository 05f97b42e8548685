"""Brute-force verification: graded dimensions against divisor section counts.

The graded piece of the hypersurface's coordinate ring has a monomial basis:
the trinomial generates the defining ideal, and under a lexicographic order
ranking one block's variables highest its leading monomial is that block's
term, so monomials not divisible by it survive.  Counting those is pure
lattice-point enumeration in a bounded plane polygon, entirely independent
of the polyhedral construction it cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import ceil, floor

from .downgrade import TorusData, build_torus_data
from .exactla import IntMatrix, kernel_basis
from .ppdivisor import PPDivisor, compute_ppdivisor, evaluate
from .trinomial import InternalInconsistency, TrinomialInput


@dataclass(frozen=True)
class HilbertQuery:
    input: TrinomialInput
    torus: TorusData
    m: tuple[int, ...]


@lru_cache(maxsize=None)
def _grading_kernel(f: IntMatrix):
    """Basis of the rank-2 lattice of exponent moves with trivial degree."""
    basis = kernel_basis(f.transpose())
    if basis.cols != 2:
        raise InternalInconsistency(f"grading kernel has rank {basis.cols}, expected 2")
    return basis.column(0), basis.column(1)


def monomial_count(torus: TorusData, m) -> int:
    """Number of monomials in the ambient ring of the given degree.

    Solutions of (grading) . a = m, a >= 0 are a_p + alpha*b1 + beta*b2 with
    (b1, b2) the grading kernel and a_p an integer particular solution; the
    feasible (alpha, beta) form a bounded polygon that is scanned exactly.
    """
    mm = tuple(int(x) for x in m)
    if len(mm) != torus.rank:
        raise ValueError(f"degree {mm} has wrong dimension, expected {torus.rank}")
    a_p = torus.S.transpose().apply(mm)
    b1, b2 = _grading_kernel(torus.F)
    return _count_plane_points(a_p, b1, b2)


def _count_plane_points(a_p, b1, b2) -> int:
    """Count integer (alpha, beta) with a_p + alpha*b1 + beta*b2 >= 0."""
    cons = []
    for r, p, q in zip(a_p, b1, b2):
        if p == 0 and q == 0:
            if r < 0:
                return 0
            continue
        cons.append((p, q, r))
    corners = []
    for (p1, q1, r1), (p2, q2, r2) in combinations(cons, 2):
        det = p1 * q2 - p2 * q1
        if det == 0:
            continue
        alpha = Fraction(-r1 * q2 + r2 * q1, det)
        beta = Fraction(p2 * r1 - p1 * r2, det)
        if all(p * alpha + q * beta + r >= 0 for p, q, r in cons):
            corners.append((alpha, beta))
    if not corners:
        # bounded polygons are vertex-generated, so no corner means empty
        return 0
    alpha_lo = ceil(min(a for a, _ in corners))
    alpha_hi = floor(max(a for a, _ in corners))
    total = 0
    for alpha in range(alpha_lo, alpha_hi + 1):
        lo = None
        hi = None
        feasible = True
        for p, q, r in cons:
            c = p * alpha + r
            if q == 0:
                if c < 0:
                    feasible = False
                    break
            elif q > 0:
                bound = Fraction(-c, q)
                lo = bound if lo is None else max(lo, bound)
            else:
                bound = Fraction(-c, q)
                hi = bound if hi is None else min(hi, bound)
        if not feasible:
            continue
        if lo is None or hi is None:
            raise InternalInconsistency("fiber polygon is unbounded")
        if lo <= hi:
            total += floor(hi) - ceil(lo) + 1
    return total


def leading_degree(t: TrinomialInput, torus: TorusData, block: int = 0) -> tuple[int, ...]:
    """Degree of the chosen block's monomial (the same for all three blocks)."""
    exps = t.blocks[block]
    out = [0] * torus.rank
    for j, pos in enumerate(t.block_positions(block)):
        row = torus.degrees[pos]
        for i in range(torus.rank):
            out[i] += exps[j] * row[i]
    return tuple(out)


def hilbert_dim(q: HilbertQuery, leading_block: int = 0) -> int:
    """Dimension of the degree-m piece of the hypersurface coordinate ring.

    Counts monomials of degree m, minus those divisible by the leading
    monomial; the choice of leading block does not change the result.
    """
    m0 = leading_degree(q.input, q.torus, leading_block)
    shifted = tuple(a - b for a, b in zip(q.m, m0))
    return monomial_count(q.torus, q.m) - monomial_count(q.torus, shifted)


def section_dim(dv: PPDivisor, m) -> int | None:
    """Dimension of the section space of the evaluated divisor, when decidable.

    A rational divisor has the sections of its floor.  Genus 0: degree + 1
    when non-negative.  Genus 1: the degree when positive; degree 0 is left
    undecided (None) because it hinges on principality.  Genus >= 2 is out
    of verification scope (None).
    """
    fd = evaluate(dv, m).floor_degree
    genus = dv.curve.genus
    if genus == 0:
        return max(0, fd + 1)
    if genus == 1:
        if fd >= 1:
            return fd
        if fd == 0:
            return None
        return 0
    return None


@dataclass(frozen=True)
class VerificationReport:
    bound: int
    checked: int
    mismatches: tuple[tuple[tuple[int, ...], int, int], ...]
    skipped: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def verify_equality(
    t: TrinomialInput,
    f_override: IntMatrix | None = None,
    s_override: IntMatrix | None = None,
    bound: int = 12,
    divisor: PPDivisor | None = None,
) -> VerificationReport:
    """Compare graded dimensions with section dimensions over a degree box.

    Every lattice degree with coordinates bounded by `bound` that lies in the
    dual of the recession cone is checked.  `divisor` substitutes alternative
    polyhedral data (same torus setup), which is how candidate coefficient
    lists can be adjudicated against the ring itself.  Box enumeration is
    exponential in the torus rank; this is a desk-scale verifier.
    """
    torus = build_torus_data(t, f_override, s_override)
    dv = divisor if divisor is not None else compute_ppdivisor(t, f_override, s_override)
    mismatches = []
    skipped = []
    checked = 0
    for m in product(range(-bound, bound + 1), repeat=torus.rank):
        if any(sum(mi * ri for mi, ri in zip(m, ray)) < 0 for ray in dv.tail.rays):
            continue
        checked += 1
        h = hilbert_dim(HilbertQuery(t, torus, m))
        s = section_dim(dv, m)
        if s is None:
            skipped.append((m, evaluate(dv, m).floor_degree))
        elif s != h:
            mismatches.append((m, h, s))
    return VerificationReport(
        bound=bound,
        checked=checked,
        mismatches=tuple(mismatches),
        skipped=tuple(skipped),
    )
