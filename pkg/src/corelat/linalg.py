"""Exact rational linear algebra and positive-definite quadratic enumeration.

Everything here works over fractions.Fraction; systems are tiny (rank <= 9),
so plain Gauss-Jordan is the right tool.
"""

import math
from fractions import Fraction


def solve_in_span(columns, target):
    """Solve sum_i c_i * columns[i] = target.

    The columns must be linearly independent.  Returns the coefficient
    vector as a list of Fractions, or None when target is outside the span.
    """
    nrows = len(target)
    ncols = len(columns)
    aug = [
        [Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
        for i in range(nrows)
    ]
    pivots = []
    row = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(row, nrows) if aug[i][col] != 0), None)
        if pivot_row is None:
            continue
        aug[row], aug[pivot_row] = aug[pivot_row], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for i in range(nrows):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    if len(pivots) < ncols:
        return None
    for i in range(row, nrows):
        if aug[i][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        sol[col] = aug[r][ncols]
    return sol


def solve_square(matrix, rhs):
    """Solve matrix @ x = rhs for an invertible square matrix."""
    n = len(matrix)
    columns = [[matrix[i][j] for i in range(n)] for j in range(n)]
    sol = solve_in_span(columns, rhs)
    if sol is None:
        raise ValueError("singular system")
    return sol


def det(matrix):
    """Determinant over Fraction (fraction-free enough at these sizes)."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    result = Fraction(1)
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            result = -result
        result *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, n):
            if m[i][col] != 0:
                f = m[i][col] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return result


def floor_sqrt(value):
    """floor(sqrt(value)) for a non-negative int or Fraction, exactly."""
    if value < 0:
        raise ValueError("negative value")
    f = Fraction(value)
    return math.isqrt(f.numerator * f.denominator) // f.denominator


def is_perfect_square(n):
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _ldl(a):
    """LDL^T factors of a symmetric positive-definite Fraction matrix.

    Returns (d, u) with a = u^T diag(d) u and u unit upper triangular.
    """
    k = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    d = [Fraction(0)] * k
    u = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        d[i] = m[i][i]
        if d[i] <= 0:
            raise ValueError("form is not positive definite")
        u[i][i] = Fraction(1)
        for j in range(i + 1, k):
            u[i][j] = m[i][j] / d[i]
        for p in range(i + 1, k):
            for q in range(p, k):
                m[p][q] -= d[i] * u[i][p] * u[i][q]
                m[q][p] = m[p][q]
    return d, u


def _integer_interval(center, radius_sq):
    """A slightly padded integer range containing {m : (m+center)^2 <= radius_sq}.

    Float estimates only; callers re-check the exact inequality, so padding
    is safe and emptiness shows up as an empty range.
    """
    if radius_sq < 0:
        return 1, 0
    c = float(center)
    r = math.sqrt(float(radius_sq)) if radius_sq > 0 else 0.0
    return math.floor(-c - r) - 1, math.ceil(-c + r) + 1


def enumerate_quadratic_upto(a, b, bound):
    """Integer points of a positive-definite quadratic below a bound.

    Yields (value, m) for every m in Z^k with value = m^T a m + b.m <= bound.
    Complete by construction: the LDL factorisation turns the form into a sum
    of weighted squares, and each coordinate range is bounded exactly.
    """
    k = len(a)
    if k == 0:
        if 0 <= bound:
            yield Fraction(0), ()
        return
    bound = Fraction(bound)
    half_b = [Fraction(x) / 2 for x in b]
    shift = solve_square(a, half_b)  # quadratic is (m+shift)^T a (m+shift) - const
    const = sum(shift[i] * sum(a[i][j] * shift[j] for j in range(k)) for i in range(k))
    d, u = _ldl(a)
    budget0 = bound + const
    if budget0 < 0:
        return
    m = [0] * k

    def rec(i, budget):
        if i < 0:
            value = budget0 - budget - const
            yield value, tuple(m)
            return
        center = shift[i] + sum(u[i][j] * (m[j] + shift[j]) for j in range(i + 1, k))
        lo, hi = _integer_interval(center, budget / d[i])
        for mi in range(lo, hi + 1):
            y = mi + center
            remaining = budget - d[i] * y * y
            if remaining < 0:
                continue
            m[i] = mi
            yield from rec(i - 1, remaining)

    yield from rec(k - 1, budget0)


def enumerate_quadratic_level(a, b, target):
    """Integer points with m^T a m + b.m  exactly equal to target."""
    target = Fraction(target)
    return [m for value, m in enumerate_quadratic_upto(a, b, target) if value == target]
