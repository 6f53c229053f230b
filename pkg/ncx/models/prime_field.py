# Residues modulo a prime
import re
from typing import Any, Dict

import numpy as np

from .field import FieldSpec

_DECIMAL = re.compile(r"^(0|[1-9][0-9]*)$")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


class PrimeField(FieldSpec):
    """The field F_p, elements stored as Python ints in [0, p)"""

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"modulus must be a prime, got {p!r}")
        self.p = p

    @property
    def kind(self) -> str:
        return "Fp"

    def coerce(self, value: Any) -> int:
        if isinstance(value, float):
            raise TypeError("floating point values are not exact field elements")
        return int(value) % self.p

    def inverse(self, value: Any) -> int:
        value = int(value) % self.p
        if value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(value, self.p - 2, self.p)

    def reduce(self, array: np.ndarray) -> np.ndarray:
        return np.mod(array, self.p)

    def format_scalar(self, value: Any) -> str:
        return str(int(value) % self.p)

    def parse_scalar(self, text: str) -> int:
        if not isinstance(text, str) or not _DECIMAL.match(text):
            raise ValueError(f"not a decimal residue: {text!r}")
        value = int(text)
        if value >= self.p:
            raise ValueError(f"residue {text} out of range for p={self.p}")
        return value

    def random_element(self, rng: np.random.Generator) -> int:
        return int(rng.integers(0, self.p))

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "Fp", "p": self.p}
