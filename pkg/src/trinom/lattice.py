"""Exact integer linear algebra and rational feasibility primitives.

Everything in this module is exact: matrices carry arbitrary-precision
integers, certificates are built from Fractions, and no floating point is
used anywhere.  The feasibility engine is a plain Fourier-Motzkin
elimination over the rationals, which is entirely adequate for the small
systems (at most a dozen variables) that arise in this library.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

RationalVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored row-major.

    The column count is explicit so that matrices with zero rows keep
    their width (kernel bases of full-rank maps, for example).
    """

    rows: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], ncols: Optional[int] = None) -> "IntMatrix":
        tup = tuple(tuple(int(v) for v in row) for row in rows)
        if ncols is None:
            if not tup:
                raise ValueError("column count required for empty matrix")
            ncols = len(tup[0])
        return cls(tup, ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(tuple(tuple(0 for _ in range(ncols)) for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            tuple(tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.ncols)),
            self.nrows,
        )

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.ncols
        out = tuple(
            tuple(sum(a * other.rows[k][j] for k, a in enumerate(row)) for j in range(cols))
            for row in self.rows
        )
        return IntMatrix(out, cols)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product M·v."""
        if len(vec) != self.ncols:
            raise ValueError("shape mismatch")
        return tuple(sum(a * v for a, v in zip(row, vec)) for row in self.rows)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b), g >= 0 when possible."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular and U·M = H, where H is canonical:
    pivots positive, pivot columns strictly increasing, zero rows last,
    and every entry above a pivot reduced into [0, pivot).
    """
    h = [list(row) for row in m.rows]
    u = [[1 if i == j else 0 for j in range(m.nrows)] for i in range(m.nrows)]
    nr, nc = m.nrows, m.ncols
    row = 0
    for col in range(nc):
        if row == nr:
            break
        piv = next((i for i in range(row, nr) if h[i][col]), None)
        if piv is None:
            continue
        if piv != row:
            h[row], h[piv] = h[piv], h[row]
            u[row], u[piv] = u[piv], u[row]
        for i in range(row + 1, nr):
            if not h[i][col]:
                continue
            a, b = h[row][col], h[i][col]
            g, x, y = _xgcd(a, b)
            p, q = -(b // g), a // g
            # [[x, y], [p, q]] has determinant 1 and sends (a, b) to (g, 0)
            h[row], h[i] = (
                [x * ra + y * rb for ra, rb in zip(h[row], h[i])],
                [p * ra + q * rb for ra, rb in zip(h[row], h[i])],
            )
            u[row], u[i] = (
                [x * ra + y * rb for ra, rb in zip(u[row], u[i])],
                [p * ra + q * rb for ra, rb in zip(u[row], u[i])],
            )
        if h[row][col] < 0:
            h[row] = [-v for v in h[row]]
            u[row] = [-v for v in u[row]]
        for i in range(row):
            q = h[i][col] // h[row][col]
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[row])]
                u[i] = [a - q * b for a, b in zip(u[i], u[row])]
        row += 1
    return IntMatrix.from_rows(h, nc), IntMatrix.from_rows(u, nr)


def smith_normal_form(m: IntMatrix) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of an integer matrix.

    Returns min(nrows, ncols) nonnegative factors, zeros trailing when the
    rank falls short.  d1···dk equals the gcd of all k×k minors.
    """
    a = [list(row) for row in m.rows]
    nr, nc = m.nrows, m.ncols
    k = min(nr, nc)
    factors = []
    top = 0
    while top < k:
        piv = None
        for i in range(top, nr):
            for j in range(top, nc):
                if a[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        while True:
            for i in range(top + 1, nr):
                if a[i][top]:
                    g, x, y = _xgcd(a[top][top], a[i][top])
                    p, q = -(a[i][top] // g), a[top][top] // g
                    a[top], a[i] = (
                        [x * ra + y * rb for ra, rb in zip(a[top], a[i])],
                        [p * ra + q * rb for ra, rb in zip(a[top], a[i])],
                    )
            for j in range(top + 1, nc):
                if a[top][j]:
                    g, x, y = _xgcd(a[top][top], a[top][j])
                    p, q = -(a[top][j] // g), a[top][top] // g
                    for row in a:
                        row[top], row[j] = (
                            x * row[top] + y * row[j],
                            p * row[top] + q * row[j],
                        )
            if all(a[i][top] == 0 for i in range(top + 1, nr)) and all(
                a[top][j] == 0 for j in range(top + 1, nc)
            ):
                # pivot must divide the rest of the block
                bad = next(
                    (
                        (i, j)
                        for i in range(top + 1, nr)
                        for j in range(top + 1, nc)
                        if a[i][j] % a[top][top]
                    ),
                    None,
                )
                if bad is None:
                    break
                a[top] = [x + y for x, y in zip(a[top], a[bad[0]])]
        factors.append(abs(a[top][top]))
        top += 1
    factors.extend(0 for _ in range(k - len(factors)))
    return tuple(factors)


def integer_kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the saturated lattice { w : M·w = 0 }, canonicalized by HNF.

    Rows of the result form a basis; the matrix has zero rows exactly when
    the kernel is trivial (rank 0 result keeps the ambient width).
    """
    if m.nrows == 0:
        return IntMatrix.identity(m.ncols)
    h, u = hermite_normal_form(m.transpose())
    kernel_rows = [u.rows[i] for i in range(h.nrows) if not any(h.rows[i])]
    if not kernel_rows:
        return IntMatrix(tuple(), m.ncols)
    canon, _ = hermite_normal_form(IntMatrix.from_rows(kernel_rows, m.ncols))
    rows = tuple(r for r in canon.rows if any(r))
    return IntMatrix(rows, m.ncols)


def determinant(m: IntMatrix) -> int:
    """Exact determinant via fraction-free rational elimination."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of non-square matrix")
    n = m.nrows
    a = [[Fraction(v) for v in row] for row in m.rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for i in range(col + 1, n):
            if a[i][col]:
                f = a[i][col] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    assert det.denominator == 1
    return int(det)


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Inverse of a matrix with determinant ±1 (exact, integer)."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError("not square")
    a = [[Fraction(v) for v in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(m.rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    out = []
    for i in range(n):
        row = a[i][n:]
        assert all(v.denominator == 1 for v in row), "matrix was not unimodular"
        out.append([int(v) for v in row])
    return IntMatrix.from_rows(out, n)


def rational_rank(m: IntMatrix) -> int:
    """Rank over the rationals."""
    return sum(1 for f in smith_normal_form(m) if f)


# ---------------------------------------------------------------------------
# Rational linear algebra helpers (used by the ring and signature modules)
# ---------------------------------------------------------------------------


def rational_rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    ncols = len(mat[0]) if mat else 0
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for i in range(len(mat)):
            if i != row and mat[i][col]:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[row])]
        pivots.append(col)
        row += 1
    return mat[:row], pivots


class RowSpace:
    """Incremental row space over Q with exact membership tests."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def reduce(self, vec: Sequence[Fraction]) -> list[Fraction]:
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def contains(self, vec: Sequence[Fraction]) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec: Sequence[Fraction]) -> bool:
        """Insert a vector; returns True when it enlarged the space."""
        v = self.reduce(vec)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = 1 / v[p]
        v = [x * inv for x in v]
        for i, (row, q) in enumerate(zip(self.rows, self.pivots)):
            if row[p]:
                f = row[p]
                self.rows[i] = [x - f * y for x, y in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        order = sorted(range(len(self.pivots)), key=lambda i: self.pivots[i])
        self.rows = [self.rows[i] for i in order]
        self.pivots = [self.pivots[i] for i in order]
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def solve_integer_linear(m: IntMatrix, target: Sequence[int]) -> Optional[tuple[int, ...]]:
    """One integer solution e of M·e = target, or None when unsolvable."""
    if len(target) != m.nrows:
        raise ValueError("shape mismatch")
    h, u = hermite_normal_form(m.transpose())
    # f·H = target has echelon shape; forward-substitute along pivot columns.
    f = [0] * h.nrows
    residual = list(target)
    for i in range(h.nrows):
        piv = next((j for j, v in enumerate(h.rows[i]) if v), None)
        if piv is None:
            break
        if residual[piv] % h.rows[i][piv]:
            return None
        f[i] = residual[piv] // h.rows[i][piv]
        if f[i]:
            residual = [r - f[i] * v for r, v in zip(residual, h.rows[i])]
    if any(residual):
        return None
    ut = u.transpose()
    return ut.apply(f)


# ---------------------------------------------------------------------------
# Exact rational feasibility (Fourier-Motzkin)
# ---------------------------------------------------------------------------

Constraint = tuple[tuple[Fraction, ...], bool]  # (coefficients, strict): c·x >= 0 or > 0


def _normalize_constraint(coeffs: Sequence[Fraction], strict: bool) -> Optional[Constraint]:
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        return None if not strict else (tuple(Fraction(0) for _ in coeffs), True)
    return tuple(Fraction(v, g) for v in ints), strict


def _eliminate(cons: list[Constraint], var: int) -> Optional[list[Constraint]]:
    lowers = []  # x_var >= expr
    uppers = []  # x_var <= expr
    passthrough = []
    for coeffs, strict in cons:
        c = coeffs[var]
        if c == 0:
            passthrough.append((coeffs, strict))
        elif c > 0:
            lowers.append((coeffs, strict))
        else:
            uppers.append((coeffs, strict))
    out: list[Constraint] = []
    seen = set()
    for coeffs, strict in passthrough:
        norm = _normalize_constraint(coeffs, strict)
        if norm is None:
            continue
        if not any(norm[0]):
            if norm[1]:
                return None
            continue
        if norm not in seen:
            seen.add(norm)
            out.append(norm)
    for lc, ls in lowers:
        for uc, us in uppers:
            # combine to cancel x_var: (-uc[var])*lc + lc[var]*uc
            a, b = -uc[var], lc[var]
            combo = tuple(a * x + b * y for x, y in zip(lc, uc))
            norm = _normalize_constraint(combo, ls or us)
            if norm is None:
                continue
            if not any(norm[0]):
                if norm[1]:
                    return None
                continue
            if norm not in seen:
                seen.add(norm)
                out.append(norm)
    return out


def rational_feasible(a: IntMatrix, strict_rows: Iterable[int] = ()) -> Optional[RationalVector]:
    """Find x with A·x >= 0 on every row and A_i·x > 0 for i in strict_rows.

    The system is homogeneous; a definite None means no rational (hence no
    real) solution exists.  Solutions are reconstructed by back
    substitution through the elimination stages.
    """
    strict = set(strict_rows)
    cons: list[Constraint] = []
    for i, row in enumerate(a.rows):
        norm = _normalize_constraint([Fraction(v) for v in row], i in strict)
        if norm is None:
            continue
        if not any(norm[0]):
            if norm[1]:
                return None
            continue
        cons.append(norm)
    n = a.ncols
    stages: list[list[Constraint]] = []
    current = cons
    for var in range(n):
        stages.append(current)
        nxt = _eliminate(current, var)
        if nxt is None:
            return None
        current = nxt
    for coeffs, strict_flag in current:
        if strict_flag:
            return None
    x: list[Fraction] = [Fraction(0)] * n
    for var in range(n - 1, -1, -1):
        lo: Optional[tuple[Fraction, bool]] = None
        hi: Optional[tuple[Fraction, bool]] = None
        for coeffs, strict_flag in stages[var]:
            c = coeffs[var]
            if c == 0:
                continue
            rest = sum((coeffs[j] * x[j] for j in range(var + 1, n)), Fraction(0))
            bound = -rest / c
            if c > 0:
                if lo is None or bound > lo[0] or (bound == lo[0] and strict_flag):
                    lo = (bound, strict_flag)
            else:
                if hi is None or bound < hi[0] or (bound == hi[0] and strict_flag):
                    hi = (bound, strict_flag)
        if lo is None and hi is None:
            x[var] = Fraction(0)
        elif hi is None:
            x[var] = lo[0] + 1 if lo[1] else lo[0]
        elif lo is None:
            x[var] = hi[0] - 1 if hi[1] else hi[0]
        else:
            if lo[0] == hi[0]:
                assert not (lo[1] or hi[1]), "inconsistent bounds escaped elimination"
                x[var] = lo[0]
            else:
                assert lo[0] < hi[0], "inconsistent bounds escaped elimination"
                x[var] = (lo[0] + hi[0]) / 2
    return tuple(x)


def primitive_integer_vector(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (same ray)."""
    denom = 1
    for v in vec:
        f = Fraction(v)
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(Fraction(v) * denom) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


def positive_functional(vectors: Sequence[Sequence[int]], rank: int) -> Optional[tuple[int, ...]]:
    """Primitive integer functional phi with phi·v > 0 for every nonzero v.

    Returns None exactly when no such functional exists (the vectors span
    a line through the origin or worse); zero vectors are ignored.
    """
    nonzero = [tuple(v) for v in vectors if any(v)]
    if not nonzero:
        return tuple(1 for _ in range(rank))
    a = IntMatrix.from_rows(nonzero, rank)
    x = rational_feasible(a, strict_rows=range(len(nonzero)))
    if x is None:
        return None
    return primitive_integer_vector(x)


def nonnegative_null_relation(vectors: Sequence[Sequence[int]], rank: int) -> Optional[tuple[int, ...]]:
    """Nonnegative integers c, not all zero, with sum c_j v_j = 0.

    The relation is required to put positive weight on at least one
    nonzero vector, which makes it a genuine unit certificate.  Returns
    None when only the trivial combination exists.
    """
    m = len(vectors)
    nonzero_idx = [j for j, v in enumerate(vectors) if any(v)]
    if not nonzero_idx:
        return None
    rows = []
    strict = []
    for j in range(m):
        rows.append(tuple(1 if t == j else 0 for t in range(m)))
    for i in range(rank):
        coeffs = tuple(vectors[j][i] for j in range(m))
        rows.append(coeffs)
        rows.append(tuple(-c for c in coeffs))
    strict_row = tuple(1 if j in nonzero_idx else 0 for j in range(m))
    rows.append(strict_row)
    strict = [len(rows) - 1]
    a = IntMatrix.from_rows(rows, m)
    x = rational_feasible(a, strict_rows=strict)
    if x is None:
        return None
    return primitive_integer_vector(x)
