"""Exact rational scalars, vectors, and small dense matrices.

Scalars are ``fractions.Fraction`` values, which the standard library keeps
in lowest terms with a positive denominator, so equality and hashing behave
canonically.  Vectors and matrices are plain tuples of Fractions; helpers
below validate shapes on construction.

Determinants and linear solves clear denominators first and then run
fraction-free (Bareiss) elimination over the integers, which bounds the
intermediate entry growth without per-step gcd normalization.  No floating
point is used anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def as_scalar(value: int | str | Fraction) -> Fraction:
    """Coerce an int, Fraction, or string like "3/4" or "1.25" to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")


def scalar_to_str(x: Fraction) -> str:
    """Serialize a scalar as "num/den", keeping the denominator even when 1."""
    return f"{x.numerator}/{x.denominator}"


def scalar_from_str(text: str) -> Fraction:
    """Parse "p/q" or an exact decimal string."""
    return Fraction(text.strip())


def as_vector(entries: Iterable[int | str | Fraction]) -> Vector:
    vec = tuple(as_scalar(e) for e in entries)
    if not vec:
        raise ValueError("vectors must have at least one entry")
    return vec


def as_matrix(rows: Iterable[Iterable[int | str | Fraction]]) -> Matrix:
    mat = tuple(as_vector(row) for row in rows)
    if not mat:
        raise ValueError("matrices must have at least one row")
    width = len(mat[0])
    if any(len(row) != width for row in mat):
        raise ValueError("matrix rows must have equal length")
    return mat


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vec_sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def clear_denominators(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector by a positive integer to an integer vector.

    Positive scaling preserves every sign and incidence predicate built on
    dot products, which is all the geometric code relies on.
    """
    scale = 1
    for x in vec:
        scale = scale * x.denominator // gcd(scale, x.denominator)
    return tuple(int(x * scale) for x in vec)


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def _int_rows(mat: Matrix) -> list[list[int]]:
    # Row scaling by positive integers multiplies det by the same factors,
    # tracked by the callers below.
    return [list(clear_denominators(row)) for row in mat]


def det(mat: Matrix) -> Fraction:
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("determinant requires a square matrix")
    scale = Fraction(1)
    rows: list[list[int]] = []
    for row in mat:
        ints = clear_denominators(row)
        factor = next((x / y for x, y in zip(ints, row) if y != 0), Fraction(1))
        scale *= factor
        rows.append(list(ints))

    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            lead = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return Fraction(sign * rows[n - 1][n - 1]) / scale


def solve_linear(mat: Matrix, rhs: Vector) -> Vector | None:
    """Solve ``mat @ x == rhs`` exactly; None when the matrix is singular."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("solve_linear requires a square matrix")
    if len(rhs) != n:
        raise ValueError("right-hand side length must match the matrix")

    rows = [list(clear_denominators(tuple(row) + (b,))) for row, b in zip(mat, rhs)]
    prev = 1
    for k in range(n):
        if rows[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if pivot_row is None:
                return None
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            lead = ri[k]
            for j in range(k + 1, n + 1):
                ri[j] = (ri[j] * pivot - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot

    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        for j in range(i + 1, n):
            acc -= rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    solution = tuple(x)
    if any(dot(row, solution) != b for row, b in zip(mat, rhs)):
        raise AssertionError("exact solver produced a non-solution")
    return solution


def row_basis(vectors: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Integer row-echelon basis of the span of the given integer vectors."""
    if not vectors:
        return []
    width = len(vectors[0])
    rows = [list(v) for v in vectors if any(v)]
    basis: list[list[int]] = []
    col = 0
    while rows and col < width:
        pivot_idx = next((i for i, r in enumerate(rows) if r[col] != 0), None)
        if pivot_idx is None:
            col += 1
            continue
        pivot_row = rows.pop(pivot_idx)
        pivot = pivot_row[col]
        reduced = []
        for r in rows:
            if r[col] != 0:
                lead = r[col]
                r = [a * pivot - lead * b for a, b in zip(r, pivot_row)]
            if any(r):
                reduced.append(list(primitive(r)))
        rows = reduced
        basis.append(list(primitive(pivot_row)))
        col += 1
    return [tuple(r) for r in basis]


def int_rank(vectors: Sequence[Sequence[int]]) -> int:
    return len(row_basis(vectors))


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss, no Fractions)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            ri, rk = m[i], m[k]
            lead = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def kernel_vector(rows: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """Primitive integer kernel vector of a (k-1) x k integer matrix.

    Computed as the vector of signed maximal minors (the generalized cross
    product).  Returns None when the rows are linearly dependent, in which
    case every minor vanishes.
    """
    m = len(rows)
    k = m + 1
    if any(len(r) != k for r in rows):
        raise ValueError("kernel_vector expects a (k-1) x k matrix")
    if m == 0:
        return (1,)
    if m == 1:
        a, b = rows[0]
        if a == 0 and b == 0:
            return None
        return primitive((-b, a))
    if m == 2:
        (a1, a2, a3), (b1, b2, b3) = rows
        out = (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    else:
        out = tuple(
            (-1) ** drop
            * int_det([[r[j] for j in range(k) if j != drop] for r in rows])
            for drop in range(k)
        )
    if not any(out):
        return None
    vec = primitive(out)
    for r in rows:
        if sum(a * b for a, b in zip(r, vec)) != 0:
            raise AssertionError("kernel vector fails orthogonality")
    return vec
