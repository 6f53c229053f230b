"""
Unit tests for the Strategy Pattern implementation.

Tests the JSON and text output strategies.
"""
import json

import pytest

from ncx.services.strategy import JsonFormatStrategy, ReportFormatter, TextFormatStrategy

pytestmark = pytest.mark.unit


@pytest.fixture
def payload():
    return {
        "b": 1,
        "a": {"x": [1, 2], "m": [["1", "0"], ["0", "1/2"]]},
        "ok": True,
        "none": None,
    }


def _pairs(text):
    return dict(line.split(None, 1) for line in text.splitlines())


class TestJsonFormat:
    """Test cases for JSON output."""

    def test_round_trips(self, payload):
        assert json.loads(JsonFormatStrategy().format(payload)) == payload

    def test_keys_are_sorted(self, payload):
        text = JsonFormatStrategy().format(payload)
        assert text.index('"a"') < text.index('"b"') < text.index('"none"') < text.index('"ok"')

    def test_stable(self, payload):
        assert JsonFormatStrategy().format(payload) == JsonFormatStrategy().format(dict(reversed(payload.items())))


class TestTextFormat:
    """Test cases for the aligned key/value output."""

    def test_nested_keys_are_joined(self, payload):
        pairs = _pairs(TextFormatStrategy().format(payload))
        assert pairs["a.m"] == "1 0 | 0 1/2"
        assert pairs["a.x"] == "1 2"
        assert pairs["b"] == "1"
        assert pairs["ok"] == "true"
        assert pairs["none"] == "null"

    def test_values_are_aligned(self, payload):
        lines = TextFormatStrategy().format(payload).splitlines()
        columns = {len(line) - len(line.split(None, 1)[1]) for line in lines}
        assert len(columns) == 1

    def test_lists_of_records(self):
        text = TextFormatStrategy().format({"records": [{"j": -1, "dims": [1, 1]}]})
        assert _pairs(text) == {"records[0].dims": "1 1", "records[0].j": "-1"}

    def test_empty_values(self):
        assert _pairs(TextFormatStrategy().format({"blocks": [], "table": {}})) == {"blocks": "[]", "table": "{}"}


class TestReportFormatter:
    """Test cases for picking a strategy by name."""

    @pytest.mark.parametrize("name,strategy", [("json", JsonFormatStrategy), ("text", TextFormatStrategy)])
    def test_for_name(self, name, strategy):
        assert isinstance(ReportFormatter.for_name(name).strategy, strategy)

    def test_unknown_format(self):
        with pytest.raises(ValueError, match="Unknown output format"):
            ReportFormatter.for_name("yaml")

    def test_render_delegates(self, mocker, payload):
        strategy = mocker.Mock()
        strategy.format.return_value = "rendered"
        assert ReportFormatter(strategy).render(payload) == "rendered"
        strategy.format.assert_called_once_with(payload)
