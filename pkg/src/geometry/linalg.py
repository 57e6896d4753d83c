"""
Exact Linear Algebra
Row reduction, null spaces and small determinants over Scalar matrices
"""

from typing import List, Optional, Sequence, Tuple

from src.fields import FieldDescriptor, Scalar

Matrix = List[List[Scalar]]
Vector = List[Scalar]


def det2(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Scalar:
    """Determinant of [[a, b], [c, d]]"""
    return a * d - b * c


def det3(m: Sequence[Sequence[Scalar]]) -> Scalar:
    return (m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2])
            - m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2])
            + m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]))


def cross(u: Sequence[Scalar], v: Sequence[Scalar]) -> Tuple[Scalar, Scalar, Scalar]:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    total = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        total = total + a * b
    return total


def transpose(m: Sequence[Sequence[Scalar]]) -> Matrix:
    return [list(col) for col in zip(*m)]


def mat_vec(m: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> Vector:
    return [dot(row, v) for row in m]


def mat_mul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


def row_echelon(m: Sequence[Sequence[Scalar]]) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form

    Args:
        m: Matrix with at least one row

    Returns:
        (reduced copy of m, pivot column indices)
    """
    rows = [list(r) for r in m]
    n_rows, n_cols = len(rows), len(rows[0])
    pivots: List[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, n_rows):
            if not rows[i_row][piv_c].is_zero():
                break
        else:
            continue
        if i_row != piv_r:
            rows[piv_r], rows[i_row] = rows[i_row], rows[piv_r]
        inv = rows[piv_r][piv_c].inverse()
        rows[piv_r] = [x * inv for x in rows[piv_r]]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = rows[r][piv_c]
            if fr.is_zero():
                continue
            rows[r] = [x - fr * y for x, y in zip(rows[r], rows[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == n_rows:
            break
    return rows, pivots


def rank(m: Sequence[Sequence[Scalar]]) -> int:
    return len(row_echelon(m)[1])


def null_space(m: Sequence[Sequence[Scalar]]) -> List[Vector]:
    """
    Basis of {v : m v = 0}, one vector per free column

    The basis vector for free column c has a 1 in position c and zeros in the
    other free positions.
    """
    reduced, pivots = row_echelon(m)
    n_cols = len(m[0])
    field = m[0][0].field
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for c in free:
        v = [field.zero()] * n_cols
        v[c] = field.one()
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][c]
        basis.append(v)
    return basis


def solve(m: Sequence[Sequence[Scalar]], b: Sequence[Scalar]) -> Optional[Vector]:
    """Unique solution of the square system m x = b, or None when m is singular"""
    n = len(m)
    augmented = [list(row) + [b[i]] for i, row in enumerate(m)]
    reduced, pivots = row_echelon(augmented)
    if pivots != list(range(n)):
        return None
    return [reduced[i][n] for i in range(n)]


def inverse(m: Sequence[Sequence[Scalar]]) -> Optional[Matrix]:
    n = len(m)
    field = m[0][0].field
    augmented = [list(row) + [field.one() if i == j else field.zero() for j in range(n)]
                 for i, row in enumerate(m)]
    reduced, pivots = row_echelon(augmented)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in reduced]


def identity(field: FieldDescriptor, n: int) -> Matrix:
    return [[field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]


def proportional(u: Sequence[Scalar], v: Sequence[Scalar]) -> bool:
    """u and v are nonzero multiples of each other, tested by cross-multiplication"""
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return any(not x.is_zero() for x in u) and any(not x.is_zero() for x in v)
