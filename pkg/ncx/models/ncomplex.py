"""
N-complex model and the homology/cokernel value types.

An NComplex stores a dense window of degrees starting at min_degree. Degrees
outside the window are zero spaces. Leading and trailing zero-dimensional
degrees are trimmed on construction so that equal complexes compare equal.
"""
from typing import Any, Dict, Optional, Sequence

from ..errors import DimensionMismatch, InvalidParameters
from .field import FieldSpec
from .matrix import Matrix, Subspace


class NComplex:
    """Finitely supported graded vector space with differential, d^N = 0"""

    def __init__(self, N: int, field: FieldSpec, min_degree: int,
                 dims: Sequence[int], diffs: Sequence[Matrix]):
        if not isinstance(N, int) or N < 2:
            raise InvalidParameters(f"N must be an integer >= 2, got {N!r}")
        dims = [int(n) for n in dims]
        diffs = list(diffs)
        if any(n < 0 for n in dims):
            raise DimensionMismatch("dimensions must be nonnegative")
        if len(diffs) != max(len(dims) - 1, 0):
            raise DimensionMismatch(
                f"{len(dims)} degrees need {max(len(dims) - 1, 0)} differentials, got {len(diffs)}"
            )
        for k, m in enumerate(diffs):
            if m.field != field:
                raise DimensionMismatch(f"differential {k} lives over a different field")
            if m.shape != (dims[k + 1], dims[k]):
                raise DimensionMismatch(
                    f"differential at degree {min_degree + k} has shape {m.shape}, "
                    f"expected {(dims[k + 1], dims[k])}"
                )
        while dims and dims[0] == 0:
            dims.pop(0)
            if diffs:
                diffs.pop(0)
            min_degree += 1
        while dims and dims[-1] == 0:
            dims.pop()
            if diffs:
                diffs.pop()
        if not dims:
            min_degree = 0
        self.N = N
        self.field = field
        self.min_degree = min_degree
        self.dims = tuple(dims)
        self.diffs = tuple(diffs)

    @classmethod
    def zero(cls, N: int, field: FieldSpec) -> "NComplex":
        return cls(N, field, 0, [], [])

    @classmethod
    def from_maps(cls, N: int, field: FieldSpec, dims: Dict[int, int],
                  diffs: Dict[int, Matrix]) -> "NComplex":
        """Build from degree-keyed dictionaries; missing differentials are zero"""
        support = [i for i, n in dims.items() if n > 0]
        if not support:
            return cls.zero(N, field)
        lo, hi = min(support), max(support)
        window = [dims.get(i, 0) for i in range(lo, hi + 1)]
        maps = []
        for i in range(lo, hi):
            m = diffs.get(i)
            if m is None:
                m = Matrix.zeros(field, dims.get(i + 1, 0), dims.get(i, 0))
            maps.append(m)
        return cls(N, field, lo, window, maps)

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.dims) - 1

    def is_zero(self) -> bool:
        return not self.dims

    def degrees(self) -> range:
        return range(self.min_degree, self.max_degree + 1)

    def dim(self, i: int) -> int:
        k = i - self.min_degree
        if 0 <= k < len(self.dims):
            return self.dims[k]
        return 0

    def d(self, i: int) -> Matrix:
        """d^i: X^i -> X^{i+1}"""
        k = i - self.min_degree
        if 0 <= k < len(self.diffs):
            return self.diffs[k]
        return Matrix.zeros(self.field, self.dim(i + 1), self.dim(i))

    def total_dim(self) -> int:
        return sum(self.dims)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "N": self.N,
            "field": self.field.to_dict(),
            "min_degree": self.min_degree,
            "dims": list(self.dims),
            "diffs": [m.to_list() for m in self.diffs],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], field: FieldSpec) -> "NComplex":
        dims = data["dims"]
        diffs = data.get("diffs", [])
        if len(diffs) != max(len(dims) - 1, 0):
            raise DimensionMismatch(
                f"{len(dims)} degrees need {max(len(dims) - 1, 0)} differentials, got {len(diffs)}"
            )
        matrices = [
            Matrix.from_list(field, rows, shape=(dims[k + 1], dims[k]))
            for k, rows in enumerate(diffs)
        ]
        return cls(data["N"], field, data["min_degree"], dims, matrices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NComplex):
            return NotImplemented
        return (self.N == other.N and self.field == other.field
                and self.min_degree == other.min_degree and self.dims == other.dims
                and self.diffs == other.diffs)

    __hash__ = None

    def __repr__(self) -> str:
        return f"NComplex(N={self.N}, min_degree={self.min_degree}, dims={list(self.dims)})"


class HomologyGroup:
    """
    H^i_(r) = Z^i_(r) / B^i_(N-r) with explicit bases.

    projection maps Z-coordinates onto the quotient; representatives holds one
    cycle in X^i per quotient basis vector.
    """

    def __init__(self, degree: int, amplitude: int, ambient: Subspace, boundary: Subspace,
                 projection: Matrix, representatives: Matrix):
        self.degree = degree
        self.amplitude = amplitude
        self.ambient = ambient
        self.boundary = boundary
        self.projection = projection
        self.representatives = representatives

    @property
    def dim(self) -> int:
        return self.projection.rows

    def classify(self, vectors: Matrix) -> Matrix:
        """Classes of cycles given as columns in X^i"""
        return self.projection @ self.ambient.coordinates(vectors)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "amplitude": self.amplitude,
            "dim": self.dim,
            "cycles_dim": self.ambient.dim,
            "boundaries_dim": self.boundary.dim,
        }

    def __repr__(self) -> str:
        return f"HomologyGroup(H^{self.degree}_({self.amplitude}), dim={self.dim})"


class CokGroup:
    """C^i_(r) = X^i / B^i_(r)"""

    def __init__(self, degree: int, amplitude: int, projection: Matrix,
                 boundary: Optional[Subspace] = None):
        self.degree = degree
        self.amplitude = amplitude
        self.projection = projection
        self.boundary = boundary

    @property
    def dim(self) -> int:
        return self.projection.rows

    def to_dict(self) -> Dict[str, Any]:
        return {"degree": self.degree, "amplitude": self.amplitude, "dim": self.dim}
