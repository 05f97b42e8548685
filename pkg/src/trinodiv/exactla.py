"""Exact integer linear algebra: Smith/Hermite forms, kernel lattices, sections.

Everything here is arbitrary-precision integer arithmetic on immutable
matrices; there is no floating point in this module.  Instances are tiny
(a dozen rows at most), so the plain cubic algorithms are used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class RankDeficient(ValueError):
    """Matrix rows are linearly dependent where independence is required."""


class NotPrimitive(ValueError):
    """Column lattice is not saturated, so no integer left inverse exists."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries stored row-major as nested tuples.

    Zero-row and zero-column matrices are allowed; they show up naturally as
    kernels of injective maps.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for r in self.entries:
            if len(r) != self.cols:
                raise ValueError(f"expected {self.cols} entries per row, got {len(r)}")

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        nrows = len(entries)
        ncols = len(entries[0]) if entries else 0
        return IntMatrix(nrows, ncols, entries)

    @staticmethod
    def from_columns(cols) -> "IntMatrix":
        cols = [tuple(int(x) for x in c) for c in cols]
        if not cols:
            return IntMatrix(0, 0, ())
        nrows = len(cols[0])
        return IntMatrix.from_rows(tuple(tuple(c[i] for c in cols) for i in range(nrows)))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix.from_rows(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(self.cols))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = other.columns()
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in ocols)
                for row in self.entries
            ),
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def apply(self, vec):
        """Matrix-vector product; accepts ints or Fractions, preserves type."""
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} against {self.rows}x{self.cols}")
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.entries)


def determinant(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = [list(row) for row in a.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _swap_rows(m, u, i, j):
    m[i], m[j] = m[j], m[i]
    u[i], u[j] = u[j], u[i]


def _swap_cols(m, v, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]
    for row in v:
        row[i], row[j] = row[j], row[i]


def _add_row(m, u, dst, src, q):
    """row[dst] += q * row[src], tracked in u."""
    m[dst] = [a + q * b for a, b in zip(m[dst], m[src])]
    u[dst] = [a + q * b for a, b in zip(u[dst], u[src])]


def _add_col(m, v, dst, src, q):
    for row in (*m, *v):
        row[dst] += q * row[src]


def _negate_row(m, u, i):
    m[i] = [-a for a in m[i]]
    u[i] = [-a for a in u[i]]


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _gcd_rows(m, u, t, i):
    """Unimodular transform of rows t, i putting gcd(m[t][t], m[i][t]) at (t, t)."""
    a, b = m[t][t], m[i][t]
    g, x, y = _ext_gcd(a, b)
    p, q = -(b // g), a // g  # determinant x*q - y*p = (x*a + y*b)/g = 1
    m[t], m[i] = (
        [x * s + y * w for s, w in zip(m[t], m[i])],
        [p * s + q * w for s, w in zip(m[t], m[i])],
    )
    u[t], u[i] = (
        [x * s + y * w for s, w in zip(u[t], u[i])],
        [p * s + q * w for s, w in zip(u[t], u[i])],
    )


def _gcd_cols(m, v, t, j):
    """Column version of _gcd_rows, tracked in v."""
    a, b = m[t][t], m[t][j]
    g, x, y = _ext_gcd(a, b)
    p, q = -(b // g), a // g
    for row in (*m, *v):
        row[t], row[j] = x * row[t] + y * row[j], p * row[t] + q * row[j]


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (D, U, V) with U @ a @ V = D, D diagonal with d1 | d2 | ...

    U and V are unimodular; diagonal entries are non-negative.  Entries are
    cleared with extended-gcd 2x2 transforms, which keeps coefficient growth
    in the transform matrices tame.
    """
    nr, nc = a.rows, a.cols
    m = [list(row) for row in a.entries]
    u = [list(row) for row in IntMatrix.identity(nr).entries]
    v = [list(row) for row in IntMatrix.identity(nc).entries]

    def pivot_search(t):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(nr, nc):
        pos = pivot_search(t)
        if pos is None:
            break
        _swap_rows(m, u, t, pos[0])
        _swap_cols(m, v, t, pos[1])
        if m[t][t] < 0:
            _negate_row(m, u, t)
        while True:
            # plain elimination when the (positive) pivot divides the entry;
            # otherwise a gcd transform, which strictly shrinks the pivot
            for i in range(t + 1, nr):
                b = m[i][t]
                if b:
                    if b % m[t][t] == 0:
                        _add_row(m, u, i, t, -(b // m[t][t]))
                    else:
                        _gcd_rows(m, u, t, i)
            # gcd column transforms may repopulate column t below the pivot
            for j in range(t + 1, nc):
                b = m[t][j]
                if b:
                    if b % m[t][t] == 0:
                        _add_col(m, v, j, t, -(b // m[t][t]))
                    else:
                        _gcd_cols(m, v, t, j)
            if all(m[i][t] == 0 for i in range(t + 1, nr)) and all(
                m[t][j] == 0 for j in range(t + 1, nc)
            ):
                break
        # pivot must divide every remaining entry for the divisibility chain
        offender = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if m[i][j] % m[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _add_row(m, u, t, offender, 1)
            continue
        t += 1

    d = IntMatrix.from_rows(m)
    um = IntMatrix.from_rows(u)
    vm = IntMatrix.from_rows(v)
    assert (um @ a @ vm).entries == d.entries
    return d, um, vm


def rank(a: IntMatrix) -> int:
    d, _, _ = smith_normal_form(a)
    return sum(1 for i in range(min(a.rows, a.cols)) if d.entries[i][i] != 0)


def invariant_factors(a: IntMatrix) -> tuple[int, ...]:
    d, _, _ = smith_normal_form(a)
    facs = [d.entries[i][i] for i in range(min(a.rows, a.cols))]
    return tuple(f for f in facs if f != 0)


def column_hermite(a: IntMatrix) -> IntMatrix:
    """Canonical column-style Hermite form of the column lattice of `a`.

    Two matrices span the same column lattice iff their Hermite forms are
    entrywise equal.  Pivots are positive, entries left of a pivot are
    reduced into [0, pivot); zero columns are dropped.
    """
    cols = [list(c) for c in a.columns()]
    k = len(cols)
    c = 0
    for row in range(a.rows):
        if c >= k:
            break
        # gcd-reduce columns c.. so only column c is non-zero at this row
        while True:
            live = [j for j in range(c, k) if cols[j][row] != 0]
            if not live:
                break
            jmin = min(live, key=lambda j: abs(cols[j][row]))
            cols[c], cols[jmin] = cols[jmin], cols[c]
            done = True
            for j in range(c + 1, k):
                if cols[j][row] != 0:
                    q = cols[j][row] // cols[c][row]
                    cols[j] = [x - q * y for x, y in zip(cols[j], cols[c])]
                    if cols[j][row] != 0:
                        done = False
            if done:
                break
        if cols[c][row] == 0:
            continue
        if cols[c][row] < 0:
            cols[c] = [-x for x in cols[c]]
        for j in range(c):
            q = cols[j][row] // cols[c][row]
            if q:
                cols[j] = [x - q * y for x, y in zip(cols[j], cols[c])]
        c += 1
    kept = [col for col in cols if any(col)]
    return IntMatrix.from_columns(kept) if kept else IntMatrix(a.rows, 0, tuple(() for _ in range(a.rows)))


def row_hermite(a: IntMatrix) -> IntMatrix:
    return column_hermite(a.transpose()).transpose()


def same_column_lattice(a: IntMatrix, b: IntMatrix) -> bool:
    return column_hermite(a).entries == column_hermite(b).entries


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Basis of the saturated lattice ker(a) ∩ Z^cols, as matrix columns.

    The output is the canonical column Hermite form, so equal inputs give
    entrywise-equal results.  Raises RankDeficient when the rows of `a` are
    linearly dependent (the callers all require full row rank).
    """
    d, _, v = smith_normal_form(a)
    r = sum(1 for i in range(min(a.rows, a.cols)) if d.entries[i][i] != 0)
    if r < a.rows:
        raise RankDeficient(f"matrix has rank {r} < {a.rows} rows")
    cols = [v.column(j) for j in range(r, a.cols)]
    if not cols:
        return IntMatrix(a.cols, 0, tuple(() for _ in range(a.cols)))
    basis = column_hermite(IntMatrix.from_columns(cols))
    assert (a @ basis).is_zero()
    return basis


def reduce_row_mod_lattice(vec: tuple[int, ...], lattice_rows: IntMatrix) -> tuple[int, ...]:
    """Canonical representative of `vec` modulo the row lattice given."""
    h = row_hermite(lattice_rows)
    out = list(vec)
    for i in range(h.rows):
        row = h.entries[i]
        pivot_col = next(j for j, x in enumerate(row) if x != 0)
        q = out[pivot_col] // row[pivot_col]
        if q:
            out = [x - q * y for x, y in zip(out, row)]
    return tuple(out)


def left_inverse(f: IntMatrix) -> IntMatrix:
    """Integer S with S @ f = identity, for a saturated full-rank column lattice.

    The section is not unique; the result is canonicalised by reducing each
    row modulo the left-kernel lattice of `f`, so it is stable across runs.
    """
    d, u, v = smith_normal_form(f)
    r = f.cols
    facs = [d.entries[i][i] for i in range(min(f.rows, f.cols))]
    if len(facs) < r or any(x == 0 for x in facs):
        raise NotPrimitive("columns are linearly dependent, no left inverse exists")
    if any(x != 1 for x in facs):
        raise NotPrimitive(f"column lattice is not saturated (invariant factors {tuple(facs)})")
    # S = V [I_r | 0] U, then row-reduce modulo ker(f^T)
    proj = IntMatrix.from_rows(tuple(tuple(1 if i == j else 0 for j in range(f.rows)) for i in range(r)))
    s = v @ proj @ u
    left_kernel = kernel_basis(f.transpose()).transpose()  # rows span ker(f^T)
    if left_kernel.rows:
        s = IntMatrix.from_rows(tuple(reduce_row_mod_lattice(row, left_kernel) for row in s.entries))
    assert (s @ f).entries == IntMatrix.identity(r).entries
    return s
