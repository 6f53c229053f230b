"""
Exact Linear Algebra - the computational substrate

Gaussian elimination over Q or F_p with deterministic pivoting: the pivot in
each column is the first nonzero entry scanning top to bottom, columns are
scanned left to right. Everything downstream (subspace normal forms, quotient
projections, homology bases) inherits its reproducibility from this module.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..models.field import FieldSpec
from ..models.matrix import Matrix, Subspace

logger = logging.getLogger(__name__)


def rref(matrix: Matrix) -> Tuple[int, List[int], Matrix]:
    """
    Reduced row-echelon form.

    Args:
        matrix: Any matrix, empty shapes included

    Returns:
        Tuple of (rank, pivot columns, reduced matrix)
    """
    field = matrix.field
    R = matrix.data.copy()
    n_rows, n_cols = R.shape
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = next((i for i in range(r, n_rows) if R[i, c] != 0), None)
        if nz is None:
            continue
        if nz != r:
            R[[r, nz]] = R[[nz, r]]
        R[r] = field.reduce(R[r] * field.inverse(R[r, c]))
        for i in range(n_rows):
            if i != r and R[i, c] != 0:
                R[i] = field.reduce(R[i] - R[i, c] * R[r])
        pivots.append(c)
        r += 1
    return r, pivots, Matrix(field, R)


def rank(matrix: Matrix) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return rref(matrix)[0]


def span(field: FieldSpec, ambient_dim: int, vectors: Matrix) -> Subspace:
    """Column span of vectors in canonical reduced column-echelon form"""
    if vectors.rows != ambient_dim:
        raise ValueError(f"vectors have {vectors.rows} rows, ambient dimension is {ambient_dim}")
    if vectors.cols == 0:
        return Subspace(ambient_dim, Matrix.zeros(field, ambient_dim, 0), [])
    k, pivots, R = rref(vectors.transpose())
    basis = R.submatrix(0, k, 0, ambient_dim).transpose()
    return Subspace(ambient_dim, basis, pivots)


def zero_subspace(field: FieldSpec, ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, Matrix.zeros(field, ambient_dim, 0), [])


def full_subspace(field: FieldSpec, ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, Matrix.identity(field, ambient_dim), range(ambient_dim))


def kernel_basis(matrix: Matrix) -> Subspace:
    """Subspace {v : Mv = 0} of the domain, dimension cols - rank"""
    field = matrix.field
    n = matrix.cols
    if matrix.rows == 0:
        return full_subspace(field, n)
    k, pivots, R = rref(matrix)
    free = [c for c in range(n) if c not in pivots]
    columns = []
    for f in free:
        v = np.full((n, 1), field.zero(), dtype=object)
        v[f, 0] = field.one()
        for row, p in enumerate(pivots):
            v[p, 0] = field.coerce(-R[row, f])
        columns.append(Matrix(field, v))
    return span(field, n, Matrix.from_columns(field, n, columns))


def image_basis(matrix: Matrix) -> Subspace:
    """Column space of M in canonical form, dimension rank(M)"""
    return span(matrix.field, matrix.rows, matrix)


def solve(matrix: Matrix, b: Matrix) -> Optional[Matrix]:
    """
    Find some x with Mx = b.

    Args:
        matrix: rows x cols coefficient matrix
        b: right-hand side, rows x 1 (several columns are solved together)

    Returns:
        A solution with free variables set to zero, or None when b is not in
        the image of M
    """
    field = matrix.field
    if b.rows != matrix.rows:
        raise ValueError(f"right-hand side has {b.rows} rows, expected {matrix.rows}")
    n = matrix.cols
    if matrix.rows == 0:
        return Matrix.zeros(field, n, b.cols)
    augmented = Matrix.hstack(field, matrix.rows, [matrix, b])
    k, pivots, R = rref(augmented)
    if any(p >= n for p in pivots):
        return None
    x = np.full((n, b.cols), field.zero(), dtype=object)
    for row, p in enumerate(pivots):
        x[p, :] = R.data[row, n:]
    return Matrix(field, x)


def quotient(ambient_dim: int, sub: Subspace) -> Tuple[int, Matrix]:
    """
    Quotient k^ambient_dim / sub.

    The complement is spanned by the standard vectors e_j with j not a pivot
    row of sub's canonical basis; the projection subtracts the sub component
    and reads off the complement coordinates.

    Returns:
        Tuple of (dimension, projection matrix of shape dimension x ambient_dim)
    """
    if sub.ambient_dim != ambient_dim:
        raise ValueError("subspace lives in a different ambient space")
    field = sub.field
    complement = complement_rows(sub)
    selector = Matrix.identity(field, ambient_dim).select_rows(sub.pivot_rows)
    residual = Matrix.identity(field, ambient_dim) - sub.basis @ selector
    return len(complement), residual.select_rows(complement)


def complement_rows(sub: Subspace) -> List[int]:
    return [j for j in range(sub.ambient_dim) if j not in sub.pivot_rows]


def quotient_section(sub: Subspace) -> Matrix:
    """Right inverse of the quotient projection: the complement unit vectors"""
    return Matrix.identity(sub.field, sub.ambient_dim).select_cols(complement_rows(sub))


def inverse(matrix: Matrix) -> Matrix:
    """Inverse of a square matrix, ValueError when singular"""
    if matrix.rows != matrix.cols:
        raise ValueError(f"cannot invert a {matrix.shape} matrix")
    n = matrix.rows
    x = solve(matrix, Matrix.identity(matrix.field, n))
    if x is None:
        raise ValueError("matrix is singular")
    return x


def is_invertible(matrix: Matrix) -> bool:
    return matrix.rows == matrix.cols and rank(matrix) == matrix.rows


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, so that vec_row(A S B) = kron(A, B^T) vec_row(S)"""
    field = a.field
    rows, cols = a.rows * b.rows, a.cols * b.cols
    if rows == 0 or cols == 0:
        return Matrix.zeros(field, rows, cols)
    outer = np.multiply.outer(a.data, b.data)
    data = outer.transpose(0, 2, 1, 3).reshape(rows, cols)
    return Matrix(field, field.reduce(np.array(data, dtype=object)))


def sum_subspaces(first: Subspace, second: Subspace) -> Subspace:
    field = first.field
    joined = Matrix.hstack(field, first.ambient_dim, [first.basis, second.basis])
    return span(field, first.ambient_dim, joined)


def intersect_subspaces(first: Subspace, second: Subspace) -> Subspace:
    field = first.field
    n = first.ambient_dim
    stacked = Matrix.hstack(field, n, [first.basis, -second.basis])
    relations = kernel_basis(stacked)
    head = relations.basis.submatrix(0, first.dim, 0, relations.dim)
    return span(field, n, first.basis @ head)


def image_of_subspace(matrix: Matrix, sub: Subspace) -> Subspace:
    return span(matrix.field, matrix.rows, matrix @ sub.basis)


def preimage(matrix: Matrix, sub: Subspace) -> Subspace:
    """{v : Mv in sub}"""
    _, projection = quotient(matrix.rows, sub)
    return kernel_basis(projection @ matrix)


def restrict(matrix: Matrix, source: Subspace, target: Subspace) -> Matrix:
    """
    Matrix of M restricted to source, in the canonical bases of source and target.

    Raises:
        ValueError: if M does not map source into target
    """
    return target.coordinates(matrix @ source.basis)


def vec_row(matrix: Matrix) -> Matrix:
    """Row-major flattening into a column vector"""
    n = matrix.rows * matrix.cols
    return Matrix(matrix.field, matrix.data.reshape(n, 1).copy())


def unvec_row(vector: Matrix, rows: int, cols: int) -> Matrix:
    return Matrix(vector.field, vector.data.reshape(rows, cols).copy())


def stack_rows(field: FieldSpec, cols: int, blocks: Sequence[Matrix]) -> Matrix:
    return Matrix.vstack(field, cols, list(blocks))
