"""Exact linear algebra over the integers and rationals.

Everything operates on dense lists of lists.  Rank and nullspace use
fraction-free (Bareiss) elimination for integer input, so no floating
point is involved anywhere.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[int]]


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0])
    bt = list(zip(*b))
    out = zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        if not any(ai):
            continue
        for j in range(cols):
            out[i][j] = sum(ai[k] * bt[j][k] for k in range(inner))
    return out


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(row) for row in zip(*a)]


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def is_zero(a: Matrix) -> bool:
    return all(not any(row) for row in a)


def rank(matrix: list[list[int]]) -> int:
    """Rank by fraction-free Gaussian elimination (exact)."""
    m = [row[:] for row in matrix if any(row)]
    if not m:
        return 0
    cols = len(m[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = None
        best = None
        for i in range(r, len(m)):
            v = m[i][c]
            if v:
                score = (abs(v) != 1, abs(v))
                if best is None or score < best:
                    best, piv = score, i
                    if score == (False, 1):
                        break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for i in range(r + 1, len(m)):
            if not m[i][c]:
                continue
            row_i, row_r, vic = m[i], m[r], m[i][c]
            for j in range(c, cols):
                row_i[j] = (row_i[j] * pivot - vic * row_r[j]) // prev
        prev = pivot
        r += 1
        if r == len(m):
            break
        m = m[:r] + [row for row in m[r:] if any(row)]
        if r == len(m):
            break
    return r


def nullity(matrix: list[list[int]], cols: int | None = None) -> int:
    if not matrix:
        return cols or 0
    return len(matrix[0]) - rank(matrix)


def eigenspace_dim(matrix: list[list[int]], eigenvalue: int) -> int:
    """dim ker(matrix - eigenvalue) for a square integer matrix."""
    n = len(matrix)
    shifted = [[matrix[i][j] - (eigenvalue if i == j else 0)
                for j in range(n)] for i in range(n)]
    return n - rank(shifted)


def solve_in_span(basis: list[Matrix], target: Matrix) -> list[Fraction]:
    """Coordinates of target in the span of basis (exact; raises if not
    in the span)."""
    rows = len(target)
    cols = len(target[0])
    system = []
    for i in range(rows):
        for j in range(cols):
            system.append([Fraction(b[i][j]) for b in basis]
                          + [Fraction(target[i][j])])
    n = len(basis)
    # rational Gauss with partial pivoting by first nonzero
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(system)) if system[i][c]), None)
        if piv is None:
            continue
        system[r], system[piv] = system[piv], system[r]
        pr = system[r]
        inv = 1 / pr[c]
        system[r] = [v * inv for v in pr]
        for i in range(len(system)):
            if i != r and system[i][c]:
                f = system[i][c]
                system[i] = [a - f * b for a, b in zip(system[i], system[r])]
        pivots.append(c)
        r += 1
    sol = [Fraction(0)] * n
    for row_idx, c in enumerate(pivots):
        sol[c] = system[row_idx][n]
    for i in range(r, len(system)):
        if system[i][n]:
            raise ValueError("target is not in the span of the basis")
    return sol
