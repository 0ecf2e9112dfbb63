"""Row reduction and friends over an exact field.

Entries may be ``Fraction`` or :class:`~superqf.scalar.Scalar`; the only
requirements are field arithmetic and truthiness meaning "nonzero".
"""
from __future__ import annotations

from fractions import Fraction


class SingularMatrix(ArithmeticError):
    pass


def _zero_like(x):
    return x - x


def _one_like(x):
    z = x - x
    return z + 1


def rref(matrix, zero=None):
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` where zero rows are dropped and every pivot
    entry is 1.  Pivot search takes the first nonzero entry in column order.
    """
    rows = [list(r) for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c] if isinstance(rows[r][c], Fraction) else _one_like(rows[r][c]) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix, ncols: int | None = None, zero=None, one=None):
    """Basis of {x : matrix·x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    rows, pivots = rref(matrix)
    if zero is None:
        sample = next((x for r in matrix for x in r), Fraction(0))
        zero = _zero_like(sample)
    if one is None:
        one = zero + 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(rows, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(matrix, rhs, zero=None):
    """One solution x of matrix·x = rhs, or None when inconsistent."""
    if not matrix:
        return None if any(rhs) else []
    ncols = len(matrix[0])
    aug = [list(r) + [b] for r, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    if ncols in pivots:
        return None
    if zero is None:
        zero = _zero_like(aug[0][0])
    x = [zero] * ncols
    for row, pc in zip(rows, pivots):
        x[pc] = row[ncols]
    return x


def det(matrix):
    """Determinant by Gaussian elimination."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    m = [list(r) for r in matrix]
    result = _one_like(m[0][0])
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return _zero_like(m[0][0])
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            result = -result
        piv = m[c][c]
        result = result * piv
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def det_cofactor(matrix, zero, one):
    """Determinant by Laplace expansion; works over rings (no division)."""
    n = len(matrix)
    memo = {}

    def minor(rows_left: tuple, col: int):
        if col == n:
            return one
        key = (rows_left, col)
        if key in memo:
            return memo[key]
        total = zero
        for idx, r in enumerate(rows_left):
            entry = matrix[r][col]
            if not entry:
                continue
            sub = minor(rows_left[:idx] + rows_left[idx + 1:], col + 1)
            term = entry * sub
            total = total + term if idx % 2 == 0 else total - term
        memo[key] = total
        return total

    return minor(tuple(range(n)), 0)


def inverse(matrix):
    n = len(matrix)
    zero = _zero_like(matrix[0][0])
    one = zero + 1
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(matrix)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrix("matrix is not invertible")
    return [r[n:] for r in rows]


def matmul(a, b):
    zero = _zero_like(a[0][0]) if a and a[0] else Fraction(0)
    cols = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = zero
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def transpose(m):
    return [list(c) for c in zip(*m)]


def matvec(m, v):
    zero = _zero_like(v[0]) if v else Fraction(0)
    out = []
    for row in m:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out
