# Short exact sequences, squares and triangles
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .chain_map import ChainMap
from .matrix import Matrix
from .ncomplex import NComplex


@dataclass
class ShortExactSeq:
    """0 -> X --alpha--> Y --beta--> Z -> 0, degreewise exact"""

    alpha: ChainMap
    beta: ChainMap

    @property
    def left(self) -> NComplex:
        return self.alpha.source

    @property
    def middle(self) -> NComplex:
        return self.alpha.target

    @property
    def right(self) -> NComplex:
        return self.beta.target

    def to_dict(self) -> Dict[str, Any]:
        return {"alpha": self.alpha.to_dict(), "beta": self.beta.to_dict()}


@dataclass
class ExactSquare:
    """
    Commutative square

        A --f--> B
        |x       |y
        D --f'-> E

    exact when 0 -> A -> B + D -> E -> 0, with maps (f, x) and (y, -f'), is exact.
    """

    f: Matrix
    x: Matrix
    y: Matrix
    f_prime: Matrix
    label: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "field": self.f.field.to_dict(),
            "f": self.f.to_list(),
            "x": self.x.to_list(),
            "y": self.y.to_list(),
            "f_prime": self.f_prime.to_list(),
            "dims": {"A": self.f.cols, "B": self.f.rows, "D": self.x.rows, "E": self.y.rows},
        }


@dataclass
class Triangle:
    """A --f--> B --u--> C --v--> Sigma A, with C built as a mapping cone"""

    f: ChainMap
    u: ChainMap
    v: ChainMap
    blocks: Dict[int, List[List[Any]]] = field(default_factory=dict)

    @property
    def A(self) -> NComplex:
        return self.f.source

    @property
    def B(self) -> NComplex:
        return self.f.target

    @property
    def C(self) -> NComplex:
        return self.u.target

    def to_dict(self) -> Dict[str, Any]:
        cone = self.C.to_dict()
        cone["blocks"] = [self.blocks.get(i, []) for i in self.C.degrees()]
        return {"A": self.A.to_dict(), "B": self.B.to_dict(), "C": cone}
