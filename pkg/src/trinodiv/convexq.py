"""Exact rational convex geometry for pointed cones and their polyhedra.

Vectors are tuples of Fractions (or ints where integrality is guaranteed).
Dimensions here never exceed ~10 and halfspace counts stay small, so extreme
rays are enumerated combinatorially: every extreme ray of a pointed cone is
the one-dimensional kernel of some (dim-1)-subset of its facet normals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd

from .exactla import IntMatrix, kernel_basis, RankDeficient, rank as _matrix_rank


class Unbounded(ValueError):
    """Linear functional is unbounded below on the polyhedron."""


class EmptyInput(ValueError):
    """A polyhedron needs at least one vertex."""


class EmptyFiber(ValueError):
    """The requested fiber polyhedron contains no points."""


QVec = tuple[Fraction, ...]


def qvec(values) -> QVec:
    return tuple(Fraction(x) for x in values)


def dot(u, v) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def primitive(vec) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (gcd 1).

    The direction is preserved; the zero vector is rejected.
    """
    fracs = [Fraction(x) for x in vec]
    if all(x == 0 for x in fracs):
        raise ValueError("zero vector has no primitive representative")
    denom_lcm = 1
    for x in fracs:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _solution_line(normals: list[tuple[int, ...]], dim: int):
    """Primitive generator of the solution line of `normals . y = 0`, if 1-dim."""
    if not normals:
        return (1,) if dim == 1 else None
    try:
        basis = kernel_basis(IntMatrix.from_rows(normals))
    except RankDeficient:
        return None
    return basis.column(0) if basis.cols == 1 else None


def extreme_rays(halfspaces, dim: int) -> tuple[tuple[int, ...], ...]:
    """Irredundant primitive extreme rays of {y : h . y >= 0 for all h}.

    Supports pointed cones of any dimension inside Q^dim (an empty result is
    the cone {0}).  Raises ValueError for non-pointed input, which the
    pipeline never produces.  Output is sorted lexicographically.
    """
    if dim == 0:
        return ()
    normals = sorted({primitive(h) for h in halfspaces if any(Fraction(x) != 0 for x in h)})
    # pointedness: the lineality space {y : h.y = 0 for all h} must be trivial
    if not normals or _matrix_rank(IntMatrix.from_rows(normals)) < dim:
        raise ValueError("cone is not pointed (halfspace normals do not span)")
    found = set()
    for subset in combinations(range(len(normals)), dim - 1):
        line = _solution_line([normals[i] for i in subset], dim)
        if line is None:
            continue
        for cand in (line, tuple(-x for x in line)):
            if all(dot(n, cand) >= 0 for n in normals):
                found.add(cand)
    for r in found:
        if tuple(-x for x in r) in found:
            raise ValueError("cone is not pointed (contains a line)")
    return tuple(sorted(found))


@dataclass(frozen=True)
class QCone:
    """Pointed rational cone with both generator and halfspace descriptions.

    Both representations describe the same set; construction through the
    factory methods cross-checks this.  `rays` are primitive integer vectors
    in lexicographic order.  The degenerate cone {0} has an empty ray tuple;
    the full space (dual of {0}) has an empty halfspace tuple.
    """

    dim: int
    rays: tuple[tuple[int, ...], ...]
    halfspaces: tuple[tuple[int, ...], ...]

    @staticmethod
    def zero(dim: int) -> "QCone":
        halfs = []
        for i in range(dim):
            e = tuple(1 if j == i else 0 for j in range(dim))
            halfs.append(e)
            halfs.append(tuple(-x for x in e))
        return QCone(dim, (), tuple(sorted(halfs)))

    @staticmethod
    def full(dim: int) -> "QCone":
        rays = []
        for i in range(dim):
            e = tuple(1 if j == i else 0 for j in range(dim))
            rays.append(e)
            rays.append(tuple(-x for x in e))
        return QCone(dim, tuple(sorted(rays)), ())

    @staticmethod
    def from_halfspaces(halfspaces, dim: int) -> "QCone":
        rays = extreme_rays(halfspaces, dim)
        if not rays:
            return QCone.zero(dim)
        normals = tuple(sorted({primitive(h) for h in halfspaces}))
        if _span_rank(rays) == dim:
            # facets are exactly the inputs whose tight rays span a hyperplane
            halfs = tuple(h for h in normals if _is_facet(h, rays, dim))
        else:
            halfs = normals
        for r in rays:
            if any(dot(h, r) < 0 for h in halfs):
                raise AssertionError("double description cross-check failed")
        return QCone(dim, rays, halfs)

    @staticmethod
    def from_rays(rays, dim: int) -> "QCone":
        prim = tuple(sorted({primitive(r) for r in rays})) if rays else ()
        if not prim:
            return QCone.zero(dim)
        if _span_rank(prim) != dim:
            raise ValueError("from_rays requires a full-dimensional cone")
        halfs = extreme_rays(prim, dim)
        check = extreme_rays(halfs, dim)
        if check != prim:
            raise ValueError("input rays are not the extreme rays of their cone")
        return QCone(dim, prim, halfs)

    def contains(self, point) -> bool:
        return all(dot(h, point) >= 0 for h in self.halfspaces)

    def is_zero(self) -> bool:
        return not self.rays

    def is_full(self) -> bool:
        return not self.halfspaces

    @cached_property
    def is_full_dimensional(self) -> bool:
        return bool(self.rays) and _span_rank(self.rays) == self.dim


def _span_rank(vectors) -> int:
    return _matrix_rank(IntMatrix.from_columns(list(vectors)))


def _is_facet(normal, rays, dim: int) -> bool:
    tight = [r for r in rays if dot(normal, r) == 0]
    if not tight:
        return dim == 1  # a half-line's only facet is the origin
    return _span_rank(tight) == dim - 1


def dual_cone(c: QCone) -> QCone:
    """The cone {u : u . v >= 0 for all v in c}; involutive on the cones here."""
    if c.is_zero():
        return QCone.full(c.dim)
    if c.is_full():
        return QCone.zero(c.dim)
    rays = extreme_rays(c.rays, c.dim)
    return QCone(c.dim, rays, c.rays)


@dataclass(frozen=True)
class QPolyhedron:
    """conv(vertices) + recession, vertices normalized and lex-sorted."""

    vertices: tuple[QVec, ...]
    recession: QCone

    @property
    def dim(self) -> int:
        return self.recession.dim

    def is_cone_translate(self) -> bool:
        """True when the polyhedron equals its own recession cone."""
        return len(self.vertices) == 1 and all(x == 0 for x in self.vertices[0])


def normalize_polyhedron(vertices, recession: QCone) -> QPolyhedron:
    """Deduplicate and drop points absorbed by another point plus the cone."""
    pts = sorted({qvec(v) for v in vertices})
    if not pts:
        raise EmptyInput("a polyhedron needs at least one generating point")
    kept = []
    for p in pts:
        absorbed = False
        for q in pts:
            if q != p and recession.contains(tuple(a - b for a, b in zip(p, q))):
                # p = q + (cone element); ties (p-q and q-p both inside) are
                # impossible for pointed cones once duplicates are removed
                absorbed = True
                break
        if not absorbed:
            kept.append(p)
    return QPolyhedron(tuple(kept), recession)


def min_linear(p: QPolyhedron, u) -> Fraction:
    """Minimum of v -> u . v over the polyhedron; attained at a vertex."""
    for r in p.recession.rays:
        if dot(u, r) < 0:
            raise Unbounded(f"functional {tuple(u)} is negative on recession ray {r}")
    return min(dot(u, v) for v in p.vertices)


def fiber_vertices(l_matrix: IntMatrix, u, s_matrix: IntMatrix) -> tuple[QVec, ...]:
    """Vertices of S({x >= 0 : L x = u}), by basic-solution enumeration.

    L has rank 2, so vertices of the fiber are the feasible solutions
    supported on at most two coordinates.  This is the construction-side
    counterpart of the closed-form vertex lists and is used to cross-check
    them.  Raises EmptyFiber when no feasible point exists.
    """
    if l_matrix.rows != 2:
        raise ValueError("expected a 2-row matrix")
    target = qvec(u)
    n = l_matrix.cols
    cols = [qvec(l_matrix.column(j)) for j in range(n)]
    points: set[QVec] = set()
    if all(x == 0 for x in target):
        points.add(tuple(Fraction(0) for _ in range(n)))
    for j in range(n):
        cj = cols[j]
        # solve t * cj = target with t >= 0
        nz = next((i for i in range(2) if cj[i] != 0), None)
        if nz is None:
            continue
        t = target[nz] / cj[nz]
        if t > 0 and all(t * cj[i] == target[i] for i in range(2)):
            vec = [Fraction(0)] * n
            vec[j] = t
            points.add(tuple(vec))
    for j, k in combinations(range(n), 2):
        a, b = cols[j], cols[k]
        det = a[0] * b[1] - a[1] * b[0]
        if det == 0:
            continue
        tj = (target[0] * b[1] - target[1] * b[0]) / det
        tk = (a[0] * target[1] - a[1] * target[0]) / det
        if tj > 0 and tk > 0:
            vec = [Fraction(0)] * n
            vec[j] = tj
            vec[k] = tk
            points.add(tuple(vec))
    if not points:
        raise EmptyFiber(f"no non-negative solution of L x = {tuple(u)}")
    images = {tuple(Fraction(c) for c in s_matrix.apply(pt)) for pt in points}
    return tuple(sorted(images))
