# Strategy Pattern - Different ways to print a result payload
import json


class FormatStrategy:
    """Base strategy for formatting"""
    def format(self, payload):
        pass


class JsonFormatStrategy(FormatStrategy):
    """Stable JSON, keys sorted"""
    def format(self, payload):
        return json.dumps(payload, indent=2, sort_keys=True)


class TextFormatStrategy(FormatStrategy):
    """Aligned "key  value" lines, nested keys joined with dots"""
    def format(self, payload):
        lines = list(_flatten("", payload))
        if not lines:
            return ""
        width = max(len(key) for key, _ in lines)
        return "\n".join(f"{key.ljust(width)}  {value}" for key, value in lines)


def _is_matrix(value):
    return isinstance(value, list) and bool(value) and all(isinstance(row, list) for row in value)


def _flatten(prefix, value):
    if isinstance(value, dict):
        if not value:
            yield prefix or ".", "{}"
        for key in sorted(value, key=str):
            yield from _flatten(f"{prefix}.{key}" if prefix else str(key), value[key])
    elif _is_matrix(value) and all(not isinstance(x, (dict, list)) for row in value for x in row):
        yield prefix, " | ".join(" ".join(str(x) for x in row) for row in value) or "[]"
    elif isinstance(value, list) and any(isinstance(x, (dict, list)) for x in value):
        for k, item in enumerate(value):
            yield from _flatten(f"{prefix}[{k}]", item)
    elif isinstance(value, list):
        yield prefix, " ".join(str(x) for x in value) or "[]"
    else:
        yield prefix or ".", json.dumps(value) if isinstance(value, bool) or value is None else str(value)


class ReportFormatter:
    """Uses different formatting strategies"""
    def __init__(self, strategy):
        self.strategy = strategy

    @classmethod
    def for_name(cls, name):
        strategies = {"json": JsonFormatStrategy, "text": TextFormatStrategy}
        if name not in strategies:
            raise ValueError(f"Unknown output format: {name}")
        return cls(strategies[name]())

    def render(self, payload):
        return self.strategy.format(payload)
