"""Trinomial hypersurface input model, gcd invariants and classification.

The hypersurface is the zero set of T0^l0 + T1^l1 + T2^l2 where each Ti^li
is a monomial in its own block of variables.  All the downstream geometry is
driven by the eight gcd invariants computed here, and the rationality class
of the associated projective curve falls out of those invariants alone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exactla import IntMatrix


class ZeroExponent(ValueError):
    """Every exponent must be a positive integer."""


class LinearTerm(ValueError):
    """A single-variable block with exponent 1 makes the hypersurface affine space."""


class EmptyBlock(ValueError):
    """Each of the three blocks needs at least one variable."""


class InternalInconsistency(AssertionError):
    """A derived quantity violated an identity that should always hold."""


@dataclass(frozen=True)
class TrinomialInput:
    """Validated exponent data; build through `validate`."""

    l0: tuple[int, ...]
    l1: tuple[int, ...]
    l2: tuple[int, ...]

    @property
    def blocks(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        return (self.l0, self.l1, self.l2)

    @property
    def block_sizes(self) -> tuple[int, int, int]:
        return (len(self.l0), len(self.l1), len(self.l2))

    @property
    def n(self) -> int:
        return sum(self.block_sizes)

    @property
    def rank(self) -> int:
        """Rank of the acting torus."""
        return self.n - 2

    def block_positions(self, i: int) -> range:
        sizes = self.block_sizes
        start = sum(sizes[:i])
        return range(start, start + sizes[i])


def validate(l0, l1, l2) -> TrinomialInput:
    """Check the exponent tuples and freeze them into a TrinomialInput."""
    blocks = []
    for i, raw in enumerate((l0, l1, l2)):
        block = tuple(int(x) for x in raw)
        if not block:
            raise EmptyBlock(f"block {i} has no variables")
        if any(x < 1 for x in block):
            raise ZeroExponent(f"block {i} contains a non-positive exponent: {block}")
        if len(block) == 1 and block[0] == 1:
            raise LinearTerm(
                f"block {i} is a single variable with exponent 1; "
                "the hypersurface is isomorphic to affine space"
            )
        blocks.append(block)
    return TrinomialInput(*blocks)


@dataclass(frozen=True)
class GcdInvariants:
    d0: int
    d1: int
    d2: int
    d: int
    d01: int
    d02: int
    d12: int
    dtilde: int

    @property
    def pair(self):
        """d_{jk} indexed by the block missing from the pair."""
        return {0: self.d12, 1: self.d02, 2: self.d01}

    def coefficient_scale(self, i: int) -> int:
        """d * d_{ij} * d_{ik}: the numerator scale of block i's vertex formula."""
        pairs = {0: self.d01 * self.d02, 1: self.d01 * self.d12, 2: self.d02 * self.d12}
        return self.d * pairs[i]

    def support_cardinality(self, i: int) -> int:
        """|D_i| = d * d_{jk} with {j, k} the complementary pair."""
        return self.d * self.pair[i]


def gcd_invariants(t: TrinomialInput) -> GcdInvariants:
    d0 = _tuple_gcd(t.l0)
    d1 = _tuple_gcd(t.l1)
    d2 = _tuple_gcd(t.l2)
    d = gcd(gcd(d0, d1), d2)
    d01 = gcd(d0 // d, d1 // d)
    d02 = gcd(d0 // d, d2 // d)
    d12 = gcd(d1 // d, d2 // d)
    return GcdInvariants(d0, d1, d2, d, d01, d02, d12, d * d01 * d02 * d12)


def invariants_from_block_gcds(d0: int, d1: int, d2: int) -> GcdInvariants:
    """Invariants determined by the three block gcds alone."""
    return gcd_invariants(TrinomialInput((d0,), (d1,), (d2,)))


def _tuple_gcd(xs) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g


def build_L(t: TrinomialInput) -> IntMatrix:
    """The 2 x n weight matrix: row 1 = (-l0, l1, 0), row 2 = (-l0, 0, l2)."""
    row1 = tuple(-x for x in t.l0) + t.l1 + tuple(0 for _ in t.l2)
    row2 = tuple(-x for x in t.l0) + tuple(0 for _ in t.l1) + t.l2
    return IntMatrix.from_rows((row1, row2))


class RationalityClass(enum.Enum):
    FACTORIAL = "factorial"
    TYPE_I = "type_i"
    TYPE_II = "type_ii"
    NON_RATIONAL = "non_rational"


@dataclass(frozen=True)
class Classification:
    """Rationality type of the base curve, plus its genus.

    For TYPE_I, `s` is the one pair gcd exceeding 1 and `s_pair` names the
    block pair realizing it, so divisor labels stay aligned with the input
    blocks after the implicit renumbering.
    """

    tag: RationalityClass
    genus: int
    s: int | None = None
    s_pair: tuple[int, int] | None = None
    pham_brieskorn: bool = False

    @property
    def rational(self) -> bool:
        return self.tag is not RationalityClass.NON_RATIONAL


def genus_formula(g: GcdInvariants) -> int:
    """g = d/2 * (dtilde - (d01 + d02 + d12)) + 1, always a non-negative integer."""
    val = Fraction(g.d, 2) * (g.dtilde - (g.d01 + g.d02 + g.d12)) + 1
    if val.denominator != 1 or val < 0:
        raise InternalInconsistency(f"genus {val} is not a non-negative integer")
    return int(val)


def classify_invariants(g: GcdInvariants) -> Classification:
    genus = genus_formula(g)
    pairs = {(1, 2): g.d12, (0, 2): g.d02, (0, 1): g.d01}
    big = [(pair, val) for pair, val in pairs.items() if val > 1]
    coprime = g.d == 1 and not big
    if coprime:
        tag = RationalityClass.FACTORIAL
        s = s_pair = None
    elif g.d == 1 and len(big) == 1:
        tag = RationalityClass.TYPE_I
        s_pair, s = big[0]
    elif g.d == 2 and not big:
        tag = RationalityClass.TYPE_II
        s = s_pair = None
    else:
        tag = RationalityClass.NON_RATIONAL
        s = s_pair = None
    if (genus == 0) != (tag is not RationalityClass.NON_RATIONAL):
        raise InternalInconsistency(
            f"genus {genus} disagrees with rationality class {tag} for {g}"
        )
    return Classification(tag=tag, genus=genus, s=s, s_pair=s_pair)


def classify(g: GcdInvariants, t: TrinomialInput) -> Classification:
    base = classify_invariants(g)
    return Classification(
        tag=base.tag,
        genus=base.genus,
        s=base.s,
        s_pair=base.s_pair,
        pham_brieskorn=t.block_sizes == (1, 1, 1),
    )
