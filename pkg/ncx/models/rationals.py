# Rational numbers with arbitrary precision
import re
from fractions import Fraction
from typing import Any, Dict

import numpy as np

from .field import FieldSpec

_RATIONAL = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")


class Rationals(FieldSpec):
    """The field Q, elements stored as fractions.Fraction"""

    @property
    def kind(self) -> str:
        return "Q"

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, float):
            raise TypeError("floating point values are not exact field elements")
        return Fraction(value)

    def inverse(self, value: Any) -> Fraction:
        if value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return Fraction(1) / Fraction(value)

    def reduce(self, array: np.ndarray) -> np.ndarray:
        # Fractions and ints already compare exactly
        return array

    def format_scalar(self, value: Any) -> str:
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def parse_scalar(self, text: str) -> Fraction:
        if not isinstance(text, str) or not _RATIONAL.match(text):
            raise ValueError(f"not a normalized rational: {text!r}")
        if text == "-0" or text.startswith("-0/"):
            raise ValueError(f"not a normalized rational: {text!r}")
        value = Fraction(text)
        if "/" in text and self.format_scalar(value) != text:
            raise ValueError(f"rational not in lowest terms: {text!r}")
        return value

    def random_element(self, rng: np.random.Generator) -> Fraction:
        return Fraction(int(rng.integers(-3, 4)))

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "Q"}
