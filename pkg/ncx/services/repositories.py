# Repository Pattern - Simple flat-file access
import json
import logging
from pathlib import Path

from ..errors import ParseError
from .chain_of_responsibility import DocumentPipeline

logger = logging.getLogger(__name__)


class DocumentRepository:
    """Handle one kind of JSON document on disk"""
    kind = None

    def __init__(self, kind=None, pipeline=None):
        self.kind = kind or self.kind
        self.pipeline = pipeline or DocumentPipeline()

    def read_document(self, path):
        """Decoded JSON of a file, parse errors carry the path"""
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise ParseError(str(path), "/", f"cannot read file: {e.strerror or e}") from None
        try:
            return json.loads(text, parse_constant=_reject_constant)
        except ValueError as e:
            line = getattr(e, "lineno", "?")
            col = getattr(e, "colno", "?")
            raise ParseError(str(path), f"line {line} column {col}", str(e)) from None

    def load(self, path, check_nilpotency=True):
        """Read and validate a file into a model"""
        model = self.pipeline.load(self.read_document(path), str(path), self.kind, check_nilpotency)
        logger.debug("loaded %s from %s", self.kind, path)
        return model

    def parse(self, document, name="<request>", check_nilpotency=True):
        """Validate an already decoded document"""
        return self.pipeline.load(document, name, self.kind, check_nilpotency)

    def save(self, model, path):
        """Write a model as UTF-8 JSON"""
        Path(path).write_text(json.dumps(model.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
        logger.debug("saved %s to %s", self.kind, path)
        return path

    def find_all(self, directory):
        """All *.json files in a directory, loaded in name order"""
        return [(str(p), self.load(p)) for p in sorted(Path(directory).glob("*.json"))]


class ComplexRepository(DocumentRepository):
    """Handle N-complex files"""
    kind = "complex"


class ChainMapRepository(DocumentRepository):
    """Handle chain map files"""
    kind = "chain_map"


def _reject_constant(name):
    raise ValueError(f"{name} is not a valid scalar")
