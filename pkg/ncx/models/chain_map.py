# Chain maps and homotopy witnesses between N-complexes
from typing import Any, Dict, Optional

from ..errors import DimensionMismatch, FieldMismatch, ModulusMismatch
from .field import FieldSpec
from .matrix import Matrix
from .ncomplex import NComplex


def check_compatible(first: NComplex, second: NComplex) -> None:
    """Raise unless both complexes share N and field"""
    if first.N != second.N:
        raise ModulusMismatch(f"N={first.N} and N={second.N} do not match")
    if first.field != second.field:
        raise FieldMismatch(f"{first.field!r} and {second.field!r} do not match")


class ChainMap:
    """Degreewise matrices f^i: source^i -> target^i"""

    def __init__(self, source: NComplex, target: NComplex,
                 maps: Optional[Dict[int, Matrix]] = None):
        check_compatible(source, target)
        self.source = source
        self.target = target
        self._maps: Dict[int, Matrix] = {}
        for i, m in (maps or {}).items():
            expected = (target.dim(i), source.dim(i))
            if m.shape != expected:
                raise DimensionMismatch(
                    f"component at degree {i} has shape {m.shape}, expected {expected}"
                )
            if expected[0] and expected[1]:
                self._maps[i] = m

    @property
    def field(self) -> FieldSpec:
        return self.source.field

    @property
    def N(self) -> int:
        return self.source.N

    def component(self, i: int) -> Matrix:
        m = self._maps.get(i)
        if m is None:
            return Matrix.zeros(self.field, self.target.dim(i), self.source.dim(i))
        return m

    def degrees(self) -> range:
        """Degrees where both ends are nonzero, as a contiguous window"""
        lo = max(self.source.min_degree, self.target.min_degree)
        hi = min(self.source.max_degree, self.target.max_degree)
        if self.source.is_zero() or self.target.is_zero() or lo > hi:
            return range(0)
        return range(lo, hi + 1)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self._maps.values())

    def to_dict(self) -> Dict[str, Any]:
        window = self.degrees()
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "min_degree": window.start if window else 0,
            "maps": [self.component(i).to_list() for i in window],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], field: FieldSpec) -> "ChainMap":
        source = NComplex.from_dict(data["source"], field)
        target = NComplex.from_dict(data["target"], field)
        start = data.get("min_degree", 0)
        maps = {}
        for k, rows in enumerate(data.get("maps", [])):
            i = start + k
            maps[i] = Matrix.from_list(field, rows, shape=(target.dim(i), source.dim(i)))
        return cls(source, target, maps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainMap):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        return all(self.component(i) == other.component(i)
                   for i in set(self._maps) | set(other._maps))

    __hash__ = None

    def __repr__(self) -> str:
        return f"ChainMap({self.source!r} -> {self.target!r})"


class HomotopyWitness:
    """
    Family s^i: X^i -> Y^{i-N+1} with
    f^i = sum_j d_Y^{N-j} s^{i+j-1} d_X^{j-1}.
    """

    def __init__(self, source: NComplex, target: NComplex, maps: Dict[int, Matrix],
                 convention: str = "full"):
        self.source = source
        self.target = target
        self.maps = dict(maps)
        self.convention = convention

    def component(self, i: int) -> Matrix:
        shift = self.source.N - 1
        m = self.maps.get(i)
        if m is None:
            return Matrix.zeros(self.source.field, self.target.dim(i - shift), self.source.dim(i))
        return m

    def to_dict(self) -> Dict[str, Any]:
        return {
            "convention": self.convention,
            "maps": {str(i): m.to_list() for i, m in sorted(self.maps.items())},
        }
