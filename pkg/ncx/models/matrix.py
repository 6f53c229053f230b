"""
Exact matrices and canonical subspaces.

Entries live in numpy object arrays so that every product and sum goes
through the field's own Python arithmetic (Fraction or int mod p). A matrix
with rows x cols acts on column vectors of length cols.
"""
from typing import Any, Iterable, List, Optional, Sequence

import numpy as np

from .field import FieldSpec


class Matrix:
    """Immutable rows x cols matrix over an exact field"""

    __slots__ = ("field", "_data")

    def __init__(self, field: FieldSpec, data: np.ndarray):
        if data.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        self.field = field
        self._data = data
        self._data.flags.writeable = False

    # construction

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, np.full((rows, cols), field.zero(), dtype=object))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        data = np.full((n, n), field.zero(), dtype=object)
        for k in range(n):
            data[k, k] = field.one()
        return cls(field, data)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[Any]],
                  cols: Optional[int] = None) -> "Matrix":
        """Build from nested Python values, coercing every entry"""
        rows = [list(r) for r in rows]
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        data = np.full((len(rows), width), field.zero(), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ValueError(f"row {i} has {len(row)} entries, expected {width}")
            for j, value in enumerate(row):
                data[i, j] = field.coerce(value)
        return cls(field, data)

    @classmethod
    def from_list(cls, field: FieldSpec, rows: Sequence[Sequence[str]],
                  shape: Optional[Sequence[int]] = None) -> "Matrix":
        """Parse the row-major list-of-scalar-strings file representation"""
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        if shape is not None:
            n_rows, n_cols = shape
            if len(rows) != n_rows:
                raise ValueError(f"expected {n_rows} rows, got {len(rows)}")
        data = np.full((n_rows, n_cols), field.zero(), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n_cols}")
            for j, text in enumerate(row):
                data[i, j] = field.parse_scalar(text)
        return cls(field, data)

    @classmethod
    def from_columns(cls, field: FieldSpec, rows: int,
                     columns: Iterable["Matrix"]) -> "Matrix":
        columns = list(columns)
        if not columns:
            return cls.zeros(field, rows, 0)
        return cls.hstack(field, rows, columns)

    @classmethod
    def hstack(cls, field: FieldSpec, rows: int, blocks: Sequence["Matrix"]) -> "Matrix":
        blocks = [b for b in blocks]
        for b in blocks:
            if b.rows != rows:
                raise ValueError(f"hstack block has {b.rows} rows, expected {rows}")
        width = sum(b.cols for b in blocks)
        if width == 0:
            return cls.zeros(field, rows, 0)
        return cls(field, np.concatenate([b._data for b in blocks], axis=1))

    @classmethod
    def vstack(cls, field: FieldSpec, cols: int, blocks: Sequence["Matrix"]) -> "Matrix":
        blocks = [b for b in blocks]
        for b in blocks:
            if b.cols != cols:
                raise ValueError(f"vstack block has {b.cols} columns, expected {cols}")
        height = sum(b.rows for b in blocks)
        if height == 0:
            return cls.zeros(field, 0, cols)
        return cls(field, np.concatenate([b._data for b in blocks], axis=0))

    @classmethod
    def block(cls, field: FieldSpec, row_dims: Sequence[int], col_dims: Sequence[int],
              entries: dict) -> "Matrix":
        """
        Assemble a block matrix.

        Args:
            row_dims: heights of the block rows
            col_dims: widths of the block columns
            entries: {(block_row, block_col): Matrix}; missing blocks are zero

        Returns:
            The assembled matrix
        """
        row_off = np.concatenate([[0], np.cumsum(row_dims, dtype=int)]).astype(int)
        col_off = np.concatenate([[0], np.cumsum(col_dims, dtype=int)]).astype(int)
        data = np.full((int(row_off[-1]), int(col_off[-1])), field.zero(), dtype=object)
        for (a, b), m in entries.items():
            if m.shape != (row_dims[a], col_dims[b]):
                raise ValueError(
                    f"block ({a},{b}) has shape {m.shape}, expected {(row_dims[a], col_dims[b])}"
                )
            data[row_off[a]:row_off[a + 1], col_off[b]:col_off[b + 1]] = m._data
        return cls(field, data)

    # shape and access

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    @property
    def data(self) -> np.ndarray:
        return self._data

    def __getitem__(self, index):
        return self._data[index]

    def submatrix(self, row_start: int, row_stop: int, col_start: int, col_stop: int) -> "Matrix":
        return Matrix(self.field, self._data[row_start:row_stop, col_start:col_stop].copy())

    def select_rows(self, indices: Sequence[int]) -> "Matrix":
        indices = list(indices)
        if not indices:
            return Matrix.zeros(self.field, 0, self.cols)
        return Matrix(self.field, self._data[indices, :].copy())

    def select_cols(self, indices: Sequence[int]) -> "Matrix":
        indices = list(indices)
        if not indices:
            return Matrix.zeros(self.field, self.rows, 0)
        return Matrix(self.field, self._data[:, indices].copy())

    def column(self, j: int) -> "Matrix":
        return self.select_cols([j])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self._data.T.copy())

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    # arithmetic

    def _check(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError("matrices live over different fields")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0 or self.rows == 0 or other.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        return Matrix(self.field, self.field.reduce(self._data @ other._data))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.field, self.field.reduce(self._data + other._data))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"cannot subtract {other.shape} from {self.shape}")
        return Matrix(self.field, self.field.reduce(self._data - other._data))

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c: Any) -> "Matrix":
        c = self.field.coerce(c)
        if self._data.size == 0:
            return Matrix.zeros(self.field, self.rows, self.cols)
        return Matrix(self.field, self.field.reduce(self._data * c))

    # comparison

    def is_zero(self) -> bool:
        return all(v == 0 for v in self._data.flat)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.field, self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and all(a == b for a, b in zip(self._data.flat, other._data.flat)))

    __hash__ = None

    # serialization

    def to_list(self) -> List[List[str]]:
        return [[self.field.format_scalar(v) for v in row] for row in self._data]

    def to_rows(self) -> List[List[Any]]:
        return [list(row) for row in self._data]

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, {self.to_list()})"


class Subspace:
    """
    A subspace of k^ambient_dim held as a basis in reduced column-echelon form.

    pivot_rows[k] is the row of the leading 1 of basis column k; every other
    basis column vanishes in that row. Two Subspace values over the same field
    are equal iff they are the same subspace. Build instances with
    ncx.services.linalg.span rather than by hand.
    """

    __slots__ = ("ambient_dim", "basis", "pivot_rows")

    def __init__(self, ambient_dim: int, basis: Matrix, pivot_rows: Sequence[int]):
        if basis.rows != ambient_dim:
            raise ValueError("basis rows must equal the ambient dimension")
        if basis.cols != len(pivot_rows):
            raise ValueError("one pivot row per basis column is required")
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivot_rows = tuple(pivot_rows)

    @property
    def field(self) -> FieldSpec:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.cols

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def coordinates(self, vectors: Matrix) -> Matrix:
        """
        Coordinates of columns that lie in the subspace.

        Raises:
            ValueError: if some column is not in the subspace
        """
        coords = vectors.select_rows(self.pivot_rows)
        if self.basis @ coords != vectors:
            raise ValueError("vectors do not lie in the subspace")
        return coords

    def contains(self, vectors: Matrix) -> bool:
        coords = vectors.select_rows(self.pivot_rows)
        return self.basis @ coords == vectors

    def contains_subspace(self, other: "Subspace") -> bool:
        return self.contains(other.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self.pivot_rows == other.pivot_rows
                and self.basis == other.basis)

    __hash__ = None

    def to_dict(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "basis": self.basis.to_list()}

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in {self.ambient_dim})"
