"""
Unit tests for the Factory Pattern implementation.

Tests FieldFactory, which turns CLI specs and JSON descriptors into fields.
"""
import pytest

from ncx.models.prime_field import PrimeField
from ncx.models.rationals import Rationals
from ncx.services.field_factory import FieldFactory

pytestmark = pytest.mark.unit


class TestFieldFactory:
    """Test cases for FieldFactory."""

    @pytest.mark.parametrize("spec,expected", [
        ("q", Rationals()),
        ("Q", Rationals()),
        (" fp:7 ", PrimeField(7)),
        ({"kind": "Q"}, Rationals()),
        ({"kind": "Fp", "p": 5}, PrimeField(5)),
    ])
    def test_factory_creates_correct_fields(self, spec, expected):
        """Test every accepted spelling."""
        assert FieldFactory.create_field(spec) == expected

    def test_field_instances_pass_through(self):
        F5 = PrimeField(5)
        assert FieldFactory.create_field(F5) is F5

    @pytest.mark.parametrize("spec", ["r", "fp:", "fp:x", "fp:4", {"kind": "Z"}, {"kind": "Fp"},
                                      {"kind": "Fp", "p": True}, {"kind": "Fp", "p": "5"}, 3])
    def test_create_invalid_field(self, spec):
        """Test that bad specs raise ValueError."""
        with pytest.raises(ValueError):
            FieldFactory.create_field(spec)

    def test_unknown_kind_message(self):
        with pytest.raises(ValueError, match="Unknown field kind"):
            FieldFactory.create_field("reals")

    def test_get_field_kinds(self):
        assert FieldFactory.get_field_kinds() == ["q", "fp"]
