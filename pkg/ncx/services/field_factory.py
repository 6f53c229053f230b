# Factory Pattern - Create the field an N-complex lives over
from typing import Any, Dict, Union

from ..models.field import FieldSpec
from ..models.prime_field import PrimeField
from ..models.rationals import Rationals


class FieldFactory:
    """Simple factory to create fields from CLI specs or JSON descriptors"""

    @staticmethod
    def create_field(spec: Union[str, Dict[str, Any], FieldSpec]) -> FieldSpec:
        """
        Create a field based on its spec.

        Accepts "q", "fp:<p>", {"kind": "Q"} or {"kind": "Fp", "p": p}.
        """
        if isinstance(spec, FieldSpec):
            return spec
        if isinstance(spec, dict):
            kind = spec.get("kind")
            if kind == "Q":
                return Rationals()
            if kind == "Fp":
                p = spec.get("p")
                if not isinstance(p, int) or isinstance(p, bool):
                    raise ValueError(f"Fp field needs an integer p, got {p!r}")
                return PrimeField(p)
            raise ValueError(f"Unknown field kind: {kind!r}")
        if isinstance(spec, str):
            text = spec.strip().lower()
            if text == "q":
                return Rationals()
            if text.startswith("fp:"):
                try:
                    p = int(text[3:])
                except ValueError:
                    raise ValueError(f"Unknown field kind: {spec!r}") from None
                return PrimeField(p)
        raise ValueError(f"Unknown field kind: {spec!r}")

    @staticmethod
    def get_field_kinds():
        """Get available field kinds"""
        return ["q", "fp"]
