"""
Facade Pattern - Simplified Interface for the N-complex toolkit

The HTTP layer talks to this one object. It parses documents through the
loading pipeline, runs the matching command and turns domain errors into a
(success, result, message) tuple.
"""
import logging
from typing import Any, Callable, Dict, Optional, Tuple

from ..errors import NcxError, ParseError
from .commands import (CommandInvoker, ConeCommand, HomologyCommand, MorCommand, MuCommand, NhnCommand, QisCommand,
                       SuspendCommand, ValidateCommand)
from .field_factory import FieldFactory
from .repositories import ChainMapRepository, ComplexRepository
from .settings import Settings

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, Optional[Dict[str, Any]], str]


class NComplexToolkit:
    """
    FACADE PATTERN - Simplified interface for the toolkit

    Provides a single entry point for the API endpoints.
    """

    def __init__(self, settings: Settings = None):
        """Initialize the facade with the repositories and the command invoker"""
        self.settings = settings or Settings()
        self.complex_repository = ComplexRepository()
        self.chain_map_repository = ChainMapRepository()
        self.invoker = CommandInvoker()
        self.last_error: Optional[Exception] = None

    def _run(self, build: Callable[[], Any], success_message: str) -> Outcome:
        self.last_error = None
        try:
            command = build()
            payload = self.invoker.execute_command(command)
            return True, payload, success_message
        except ParseError as e:
            self.last_error = e
            return False, None, str(e)
        except NcxError as e:
            self.last_error = e
            logger.info("domain error: %s", e)
            return False, None, f"{type(e).__name__}: {e}"

    def is_parse_error(self) -> bool:
        """Whether the last failure came from a malformed document"""
        return isinstance(self.last_error, ParseError)

    def validate(self, document: Dict[str, Any], kind: str = "complex") -> Outcome:
        """
        Validate a complex (d^N = 0) or a chain map (commutation)

        Args:
            document: Complex or chain map document
            kind: "complex" or "chain_map"

        Returns:
            Tuple of (success, {"valid": ...}, message); an invalid but well
            formed document is still a success
        """
        repository = self.chain_map_repository if kind == "chain_map" else self.complex_repository
        return self._run(
            lambda: ValidateCommand(repository.parse(document, "body", check_nilpotency=False)),
            "Validation finished",
        )

    def homology(self, document: Dict[str, Any], degree: int = None, amplitude: int = None) -> Outcome:
        """
        Homology table, or a single group when degree and amplitude are given

        Returns:
            Tuple of (success, payload, message)
        """
        return self._run(
            lambda: HomologyCommand(self.complex_repository.parse(document, "body"), degree, amplitude),
            "Homology computed",
        )

    def cone(self, document: Dict[str, Any]) -> Outcome:
        return self._run(lambda: ConeCommand(self.chain_map_repository.parse(document, "body")), "Cone built")

    def suspend(self, document: Dict[str, Any], times: int = 1, strict: bool = False) -> Outcome:
        return self._run(
            lambda: SuspendCommand(self.complex_repository.parse(document, "body"), times, strict),
            "Suspension built",
        )

    def qis(self, document: Dict[str, Any]) -> Outcome:
        return self._run(lambda: QisCommand(self.chain_map_repository.parse(document, "body")),
                         "Quasi-isomorphism checked")

    def mor(self, document: Dict[str, Any], j: int = None) -> Outcome:
        return self._run(lambda: MorCommand(self.complex_repository.parse(document, "body"), j),
                         "Mor transport computed")

    def nhn(self, document: Dict[str, Any], degree: int = None, amplitude: int = None) -> Outcome:
        return self._run(
            lambda: NhnCommand(self.complex_repository.parse(document, "body"), degree, amplitude),
            "Hom_K check finished",
        )

    def mu(self, N: int, r: int, s: int, dim: int = 1, field: str = None) -> Outcome:
        """
        Build mu_r^s k^dim

        Args:
            field: "q" or "fp:<p>", defaults to the configured field
        """
        def build():
            try:
                spec = FieldFactory.create_field(field or self.settings.default_field)
            except ValueError as e:
                raise ParseError("query", "/field", str(e)) from None
            return MuCommand(N, r, s, dim, spec)

        return self._run(build, "mu complex built")

    def get_status(self) -> Dict[str, Any]:
        """Status information for the health endpoint"""
        return {
            "status": "ok",
            "default_field": self.settings.default_field,
            "pipeline": self.complex_repository.pipeline.get_pipeline_status(),
            "commands_run": len(self.invoker.history),
        }
