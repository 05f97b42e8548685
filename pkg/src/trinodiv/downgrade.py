"""Lattice setup for the torus action: kernel embedding, section and grading.

The 2 x n weight matrix L determines the acting torus as the kernel of the
induced lattice map.  F embeds that kernel into Z^n, S is an integer section
with S . F = id, and the grading of the coordinate ring reads off the rows
of F.  Because coordinates of all downstream polyhedra depend on the choice
of F and S, both can be overridden (and the overrides are validated, not
trusted).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .exactla import IntMatrix, invariant_factors, kernel_basis, left_inverse, same_column_lattice
from .trinomial import GcdInvariants, TrinomialInput, build_L, gcd_invariants


class BadOverride(ValueError):
    """A supplied F or S violates one of its defining identities."""


class BadRelation(ValueError):
    """The positive relation required by the ray-generator formula fails."""


@dataclass(frozen=True)
class TorusData:
    """Everything the divisor construction needs about the torus action.

    degrees[k] (the k-th row of F) is the weight of the k-th coordinate;
    v0, v1, v2 generate the image lattice of L and u0, u1, u2 are the
    primitive generators of the corresponding rays in that lattice.
    """

    L: IntMatrix
    F: IntMatrix
    S: IntMatrix
    degrees: tuple[tuple[int, ...], ...]
    v0: tuple[int, int]
    v1: tuple[int, int]
    v2: tuple[int, int]
    u0: tuple[int, int]
    u1: tuple[int, int]
    u2: tuple[int, int]

    @property
    def rank(self) -> int:
        return self.F.cols

    @property
    def image_basis(self):
        return (self.u0, self.u1, self.u2)


def build_torus_data(
    t: TrinomialInput,
    f_override: IntMatrix | None = None,
    s_override: IntMatrix | None = None,
) -> TorusData:
    """Assemble (L, F, S, grading, image generators) for a trinomial input."""
    l_matrix = build_L(t)
    n, r = t.n, t.rank

    if f_override is not None:
        f = f_override
        if (f.rows, f.cols) != (n, r):
            raise BadOverride(f"F must be {n}x{r}, got {f.rows}x{f.cols}")
        if not (l_matrix @ f).is_zero():
            raise BadOverride("L . F = 0 fails for the supplied F")
        if invariant_factors(f) != tuple(1 for _ in range(r)):
            raise BadOverride("columns of the supplied F do not span a saturated lattice")
        if not same_column_lattice(f, kernel_basis(l_matrix)):
            raise BadOverride("columns of the supplied F do not span the kernel of L")
    else:
        f = kernel_basis(l_matrix)

    if s_override is not None:
        s = s_override
        if (s.rows, s.cols) != (r, n):
            raise BadOverride(f"S must be {r}x{n}, got {s.rows}x{s.cols}")
        if (s @ f).entries != IntMatrix.identity(r).entries:
            raise BadOverride("S . F = id fails for the supplied S")
    else:
        s = left_inverse(f)

    g = gcd_invariants(t)
    u0, u1, u2 = image_generators(g)
    return TorusData(
        L=l_matrix,
        F=f,
        S=s,
        degrees=f.entries,
        v0=(-g.d0, -g.d0),
        v1=(g.d1, 0),
        v2=(0, g.d2),
        u0=u0,
        u1=u1,
        u2=u2,
    )


def ray_generators(vectors, relation) -> list[tuple[int, tuple[int, ...]]]:
    """Split each v_i as a_i * u_i with u_i primitive in the generated lattice.

    Requires a relation sum(q_i * v_i) = 0 with all q_i positive and
    gcd(q_0, ..., q_n) = 1; then a_i is the gcd of the q's with q_i omitted
    and u_i = v_i / a_i.
    """
    vecs = [tuple(int(x) for x in v) for v in vectors]
    qs = [int(q) for q in relation]
    if len(vecs) != len(qs):
        raise BadRelation("need one relation coefficient per vector")
    if any(q <= 0 for q in qs):
        raise BadRelation(f"relation coefficients must be positive: {qs}")
    if _gcd_all(qs) != 1:
        raise BadRelation(f"relation coefficients must be coprime overall: {qs}")
    dim = len(vecs[0])
    for j in range(dim):
        if sum(q * v[j] for q, v in zip(qs, vecs)) != 0:
            raise BadRelation("relation does not annihilate the vectors")
    out = []
    for i, v in enumerate(vecs):
        a = _gcd_all(qs[:i] + qs[i + 1 :])
        if any(x % a for x in v):
            raise BadRelation(f"{a} does not divide {v} exactly")
        out.append((a, tuple(x // a for x in v)))
    return out


def _gcd_all(xs) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g


def trinomial_relation(g: GcdInvariants) -> tuple[int, int, int]:
    """The canonical positive relation q with q0*v0 + q1*v1 + q2*v2 = 0."""
    big = lcm(lcm(g.d0, g.d1), g.d2)
    qs = (big // g.d0, big // g.d1, big // g.d2)
    shared = _gcd_all(qs)
    return tuple(q // shared for q in qs)


def image_generators(g: GcdInvariants):
    """Closed-form primitive ray generators of the image lattice of L."""
    u0 = (-g.d * g.d01 * g.d02, -g.d * g.d01 * g.d02)
    u1 = (g.d * g.d01 * g.d12, 0)
    u2 = (0, g.d * g.d02 * g.d12)
    return u0, u1, u2
