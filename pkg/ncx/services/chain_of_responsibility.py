"""
Chain of Responsibility Pattern - Document Loading Pipeline

Every JSON document handed to the CLI or the HTTP API passes through a chain
of handlers before it becomes a model:

    SchemaHandler -> ScalarHandler -> ShapeHandler -> NilpotencyHandler

Each handler either lets the request continue or records an error with a
JSON-pointer-like location and stops the chain.
"""
import logging
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Tuple

from ..errors import NcxError, ParseError
from ..models.chain_map import ChainMap
from ..models.field import FieldSpec
from ..models.matrix import Matrix
from ..models.ncomplex import NComplex
from ..models.sequences import ExactSquare, ShortExactSeq
from .complexes import validate
from .field_factory import FieldFactory

logger = logging.getLogger(__name__)

DOCUMENT_KINDS = ("complex", "chain_map", "ses", "square", "elementary")

Located = Tuple[str, Any]


class ProcessingResult(Enum):
    """Result of processing step"""
    SUCCESS = "success"
    FAILURE = "failure"


class LoadRequest:
    """
    CHAIN OF RESPONSIBILITY - Request object for document loading

    Carries the raw document, where it came from, and everything the handlers
    learn about it on the way.
    """

    def __init__(self, document: Any, path: str, kind: str, check_nilpotency: bool = True):
        """
        Initialize a load request

        Args:
            document: Decoded JSON value
            path: File path or request name used in error messages
            kind: One of DOCUMENT_KINDS
            check_nilpotency: Reject complexes with d^N != 0
        """
        self.document = document
        self.path = path
        self.kind = kind
        self.check_nilpotency = check_nilpotency
        self.field: Optional[FieldSpec] = None
        self.model: Any = None
        self.failure: Optional[NcxError] = None
        self.errors: List[Dict[str, str]] = []
        self.processing_log: List[Dict[str, str]] = []

    def add_error(self, location: str, message: str, handler: str = None) -> None:
        """Add error to request"""
        self.errors.append({"location": location, "message": message, "handler": handler})

    def log_processing_step(self, handler: str, result: ProcessingResult, message: str = "") -> None:
        """Log processing step"""
        self.processing_log.append({"handler": handler, "result": result.value, "message": message})
        logger.debug("%s: %s %s", handler, result.value, message)

    def has_errors(self) -> bool:
        """Check if request has errors"""
        return len(self.errors) > 0


class DocumentHandler(ABC):
    """
    CHAIN OF RESPONSIBILITY - Abstract document handler
    """

    def __init__(self):
        self._next_handler: Optional["DocumentHandler"] = None
        self.handler_name = self.__class__.__name__

    def set_next(self, handler: "DocumentHandler") -> "DocumentHandler":
        """
        Set the next handler in the chain

        Args:
            handler: Next handler

        Returns:
            The handler that was set (for chaining)
        """
        self._next_handler = handler
        return handler

    def handle(self, request: LoadRequest) -> ProcessingResult:
        """
        Handle the load request

        Args:
            request: Load request

        Returns:
            Processing result
        """
        try:
            result = self._process(request)
        except NcxError as e:
            request.failure = e
            result = ProcessingResult.FAILURE
        except (ValueError, KeyError, TypeError) as e:
            request.add_error("/", f"Unexpected error in {self.handler_name}: {e}", self.handler_name)
            result = ProcessingResult.FAILURE
        request.log_processing_step(self.handler_name, result)

        # If processing failed, stop the chain
        if result == ProcessingResult.FAILURE:
            return result

        if self._next_handler:
            return self._next_handler.handle(request)

        return result

    @abstractmethod
    def _process(self, request: LoadRequest) -> ProcessingResult:
        pass


# Document layout helpers

def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _complex_errors(doc: Any, loc: str) -> List[Located]:
    if not isinstance(doc, dict):
        return [(loc, "expected an object")]
    errors = []
    for key in ("N", "field", "min_degree", "dims", "diffs"):
        if key not in doc:
            errors.append((f"{loc}/{key}", "missing key"))
    if errors:
        return errors
    if not _is_int(doc["N"]) or doc["N"] < 2:
        errors.append((f"{loc}/N", "N must be an integer >= 2"))
    if not isinstance(doc["field"], dict):
        errors.append((f"{loc}/field", "expected an object"))
    if not _is_int(doc["min_degree"]):
        errors.append((f"{loc}/min_degree", "expected an integer"))
    if not isinstance(doc["dims"], list) or not all(_is_int(n) and n >= 0 for n in doc["dims"]):
        errors.append((f"{loc}/dims", "expected a list of nonnegative integers"))
    errors.extend(_matrix_list_errors(doc["diffs"], f"{loc}/diffs"))
    return errors


def _matrix_errors(value: Any, loc: str) -> List[Located]:
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        return [(loc, "expected a list of rows")]
    return []


def _matrix_list_errors(value: Any, loc: str) -> List[Located]:
    if not isinstance(value, list):
        return [(loc, "expected a list of matrices")]
    errors = []
    for k, m in enumerate(value):
        errors.extend(_matrix_errors(m, f"{loc}/{k}"))
    return errors


def _chain_map_errors(doc: Any, loc: str) -> List[Located]:
    if not isinstance(doc, dict):
        return [(loc, "expected an object")]
    missing = [(f"{loc}/{key}", "missing key") for key in ("source", "target", "maps") if key not in doc]
    if missing:
        return missing
    errors = _complex_errors(doc["source"], f"{loc}/source") + _complex_errors(doc["target"], f"{loc}/target")
    if not _is_int(doc.get("min_degree", 0)):
        errors.append((f"{loc}/min_degree", "expected an integer"))
    errors.extend(_matrix_list_errors(doc["maps"], f"{loc}/maps"))
    return errors


def _ses_errors(doc: Any, loc: str) -> List[Located]:
    if not isinstance(doc, dict):
        return [(loc, "expected an object")]
    missing = [(f"{loc}/{key}", "missing key") for key in ("alpha", "beta") if key not in doc]
    if missing:
        return missing
    return _chain_map_errors(doc["alpha"], f"{loc}/alpha") + _chain_map_errors(doc["beta"], f"{loc}/beta")


def _square_errors(doc: Any, loc: str) -> List[Located]:
    if not isinstance(doc, dict):
        return [(loc, "expected an object")]
    missing = [(f"{loc}/{key}", "missing key") for key in ("field", "dims", "f", "x", "y", "f_prime")
               if key not in doc]
    if missing:
        return missing
    errors = []
    dims = doc["dims"]
    if not isinstance(dims, dict) or not all(_is_int(dims.get(k)) and dims[k] >= 0 for k in "ABDE"):
        errors.append((f"{loc}/dims", "expected nonnegative integers A, B, D, E"))
    for key in ("f", "x", "y", "f_prime"):
        errors.extend(_matrix_errors(doc[key], f"{loc}/{key}"))
    return errors


def _elementary_errors(doc: Any, loc: str) -> List[Located]:
    if not isinstance(doc, dict):
        return [(loc, "expected an object")]
    missing = [(f"{loc}/{key}", "missing key") for key in ("complex", "degree", "u", "cols") if key not in doc]
    if missing:
        return missing
    errors = _complex_errors(doc["complex"], f"{loc}/complex")
    if not _is_int(doc["degree"]):
        errors.append((f"{loc}/degree", "expected an integer"))
    if not _is_int(doc["cols"]) or doc["cols"] < 0:
        errors.append((f"{loc}/cols", "expected a nonnegative integer"))
    errors.extend(_matrix_errors(doc["u"], f"{loc}/u"))
    return errors


SCHEMAS = {
    "complex": _complex_errors,
    "chain_map": _chain_map_errors,
    "ses": _ses_errors,
    "square": _square_errors,
    "elementary": _elementary_errors,
}


def _complexes(document: Any, kind: str) -> Iterator[Located]:
    """Every embedded complex document with its location"""
    if kind == "complex":
        yield "", document
    elif kind == "chain_map":
        yield "/source", document["source"]
        yield "/target", document["target"]
    elif kind == "ses":
        for name in ("alpha", "beta"):
            yield f"/{name}/source", document[name]["source"]
            yield f"/{name}/target", document[name]["target"]
    elif kind == "elementary":
        yield "/complex", document["complex"]


def _dim(doc: Dict[str, Any], i: int) -> int:
    k = i - doc["min_degree"]
    return doc["dims"][k] if 0 <= k < len(doc["dims"]) else 0


def _chain_map_matrices(doc: Dict[str, Any], loc: str) -> Iterator[Tuple[str, Any, Tuple[int, int]]]:
    start = doc.get("min_degree", 0)
    for k, rows in enumerate(doc["maps"]):
        i = start + k
        yield f"{loc}/maps/{k}", rows, (_dim(doc["target"], i), _dim(doc["source"], i))


def _matrices(document: Any, kind: str) -> Iterator[Tuple[str, Any, Tuple[int, int]]]:
    """Every matrix in the document with its location and expected shape"""
    for loc, doc in _complexes(document, kind):
        dims = doc["dims"]
        for k, rows in enumerate(doc["diffs"]):
            yield f"{loc}/diffs/{k}", rows, (dims[k + 1], dims[k])
    if kind == "chain_map":
        yield from _chain_map_matrices(document, "")
    elif kind == "ses":
        for name in ("alpha", "beta"):
            yield from _chain_map_matrices(document[name], f"/{name}")
    elif kind == "square":
        d = document["dims"]
        shapes = {"f": (d["B"], d["A"]), "x": (d["D"], d["A"]), "y": (d["E"], d["B"]), "f_prime": (d["E"], d["D"])}
        for key, shape in shapes.items():
            yield f"/{key}", document[key], shape
    elif kind == "elementary":
        yield "/u", document["u"], (_dim(document["complex"], document["degree"]), document["cols"])


class SchemaHandler(DocumentHandler):
    """
    CHAIN OF RESPONSIBILITY - Schema Handler

    Required keys and value types for the requested document kind.
    """

    def _process(self, request: LoadRequest) -> ProcessingResult:
        if request.kind not in SCHEMAS:
            request.add_error("", f"unknown document kind {request.kind!r}", self.handler_name)
            return ProcessingResult.FAILURE
        errors = SCHEMAS[request.kind](request.document, "")
        for location, message in errors:
            request.add_error(location or "/", message, self.handler_name)
        if errors:
            return ProcessingResult.FAILURE
        for loc, doc in _complexes(request.document, request.kind):
            if len(doc["diffs"]) != max(len(doc["dims"]) - 1, 0):
                request.add_error(
                    f"{loc}/diffs",
                    f"{len(doc['dims'])} degrees need {max(len(doc['dims']) - 1, 0)} differentials, "
                    f"got {len(doc['diffs'])}",
                    self.handler_name,
                )
                return ProcessingResult.FAILURE
        return ProcessingResult.SUCCESS


class ScalarHandler(DocumentHandler):
    """
    CHAIN OF RESPONSIBILITY - Scalar Handler

    Resolves the field and accepts only normalized scalar strings.
    """

    def _process(self, request: LoadRequest) -> ProcessingResult:
        descriptors = [(f"{loc}/field", doc["field"]) for loc, doc in _complexes(request.document, request.kind)]
        if request.kind == "square":
            descriptors = [("/field", request.document["field"])]
        location, descriptor = descriptors[0]
        try:
            request.field = FieldFactory.create_field(descriptor)
        except ValueError as e:
            request.add_error(location, str(e), self.handler_name)
            return ProcessingResult.FAILURE
        for location, other in descriptors[1:]:
            if other != descriptor:
                request.add_error(location, "all complexes must share one field", self.handler_name)
                return ProcessingResult.FAILURE
        for loc, rows, _ in _matrices(request.document, request.kind):
            for i, row in enumerate(rows):
                for j, text in enumerate(row):
                    try:
                        request.field.parse_scalar(text)
                    except ValueError as e:
                        request.add_error(f"{loc}/{i}/{j}", str(e), self.handler_name)
                        return ProcessingResult.FAILURE
        return ProcessingResult.SUCCESS


class ShapeHandler(DocumentHandler):
    """
    CHAIN OF RESPONSIBILITY - Shape Handler

    Matrix sizes against the declared dimensions.
    """

    def _process(self, request: LoadRequest) -> ProcessingResult:
        for loc, rows, (n_rows, n_cols) in _matrices(request.document, request.kind):
            if len(rows) != n_rows:
                request.add_error(loc, f"expected {n_rows} rows, got {len(rows)}", self.handler_name)
                return ProcessingResult.FAILURE
            for i, row in enumerate(rows):
                if len(row) != n_cols:
                    request.add_error(f"{loc}/{i}", f"expected {n_cols} entries, got {len(row)}",
                                      self.handler_name)
                    return ProcessingResult.FAILURE
        return ProcessingResult.SUCCESS


class NilpotencyHandler(DocumentHandler):
    """
    CHAIN OF RESPONSIBILITY - Nilpotency Handler

    Builds the model and checks d^N = 0 on every complex in it.
    """

    def _process(self, request: LoadRequest) -> ProcessingResult:
        request.model = _build(request.document, request.kind, request.field)
        if request.check_nilpotency:
            for X in _built_complexes(request.model, request.kind):
                validate(X)
        return ProcessingResult.SUCCESS


def _build(document: Dict[str, Any], kind: str, field: FieldSpec) -> Any:
    if kind == "complex":
        return NComplex.from_dict(document, field)
    if kind == "chain_map":
        return ChainMap.from_dict(document, field)
    if kind == "ses":
        return ShortExactSeq(ChainMap.from_dict(document["alpha"], field),
                             ChainMap.from_dict(document["beta"], field))
    if kind == "square":
        d = document["dims"]
        return ExactSquare(
            Matrix.from_list(field, document["f"], shape=(d["B"], d["A"])),
            Matrix.from_list(field, document["x"], shape=(d["D"], d["A"])),
            Matrix.from_list(field, document["y"], shape=(d["E"], d["B"])),
            Matrix.from_list(field, document["f_prime"], shape=(d["E"], d["D"])),
            document.get("label"),
        )
    X = NComplex.from_dict(document["complex"], field)
    u = Matrix.from_list(field, document["u"], shape=(X.dim(document["degree"]), document["cols"]))
    return {"complex": X, "u": u, "degree": document["degree"]}


def _built_complexes(model: Any, kind: str) -> List[NComplex]:
    if kind == "complex":
        return [model]
    if kind == "chain_map":
        return [model.source, model.target]
    if kind == "ses":
        return [model.left, model.middle, model.right]
    if kind == "elementary":
        return [model["complex"]]
    return []


class DocumentPipeline:
    """
    CHAIN OF RESPONSIBILITY - Complete document loading pipeline
    """

    def __init__(self):
        self.schema_handler = SchemaHandler()
        self.schema_handler.set_next(ScalarHandler()).set_next(ShapeHandler()).set_next(NilpotencyHandler())

    def process(self, document: Any, path: str, kind: str, check_nilpotency: bool = True) -> LoadRequest:
        """
        Run the chain without raising

        Returns:
            Load request with model, errors and processing log
        """
        request = LoadRequest(document, path, kind, check_nilpotency)
        self.schema_handler.handle(request)
        return request

    def load(self, document: Any, path: str, kind: str, check_nilpotency: bool = True) -> Any:
        """
        Run the chain and return the model

        Raises:
            ParseError: the document is malformed (path and location attached)
            NcxError: the document is well formed but violates a domain rule
        """
        request = self.process(document, path, kind, check_nilpotency)
        if request.failure is not None:
            raise request.failure
        if request.has_errors():
            first = request.errors[0]
            raise ParseError(path, first["location"], first["message"])
        return request.model

    def get_pipeline_status(self) -> Dict[str, Any]:
        """Get status information about the pipeline"""
        return {
            "handlers": ["SchemaHandler", "ScalarHandler", "ShapeHandler", "NilpotencyHandler"],
            "total_handlers": 4,
            "document_kinds": list(DOCUMENT_KINDS),
        }
