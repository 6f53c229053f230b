# Base field class
from abc import ABC, abstractmethod
from typing import Any, Dict

import numpy as np


class FieldSpec(ABC):
    """Base class for the exact fields the toolkit computes over"""

    @property
    @abstractmethod
    def kind(self) -> str:
        """Each field type must implement this"""

    @abstractmethod
    def coerce(self, value: Any) -> Any:
        """Turn an int or compatible scalar into a canonical field element"""

    @abstractmethod
    def inverse(self, value: Any) -> Any:
        """Multiplicative inverse of a nonzero element"""

    @abstractmethod
    def reduce(self, array: np.ndarray) -> np.ndarray:
        """Bring an object array produced by ring operations back into canonical form"""

    @abstractmethod
    def format_scalar(self, value: Any) -> str:
        """Serialize one element the way the file formats expect"""

    @abstractmethod
    def parse_scalar(self, text: str) -> Any:
        """Parse one normalized scalar string, raising ValueError otherwise"""

    @abstractmethod
    def random_element(self, rng: np.random.Generator) -> Any:
        """Draw a small element, used by the generators"""

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        """Convert to the JSON field descriptor"""

    def zero(self) -> Any:
        return self.coerce(0)

    def one(self) -> Any:
        return self.coerce(1)

    def is_zero(self, value: Any) -> bool:
        return value == 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.to_dict().items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_dict()})"
