# Verification reports returned by the checker services
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Tuple


@dataclass
class ExactnessNode:
    """One node of a long sequence of homology groups"""

    degree: int
    amplitude: int
    object: str
    dim: int
    rank_in: int
    dim_ker_out: int

    @property
    def exact(self) -> bool:
        return self.rank_in == self.dim_ker_out

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["exact"] = self.exact
        return data


@dataclass
class ExactnessReport:
    """Nodes of one or more long sequences, in emission order"""

    kind: str
    nodes: List[ExactnessNode] = field(default_factory=list)
    composites_vanish: bool = True

    @property
    def exact(self) -> bool:
        return self.composites_vanish and all(node.exact for node in self.nodes)

    def first_failure(self) -> Optional[ExactnessNode]:
        return next((node for node in self.nodes if not node.exact), None)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * node.dim for k, node in enumerate(self.nodes))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "exact": self.exact,
            "composites_vanish": self.composites_vanish,
            "nodes": [node.to_dict() for node in self.nodes],
        }


@dataclass
class ElementaryReport:
    """Three equivalent conditions for an elementary morphism"""

    degree: int
    is_qis: bool
    squares_exact: List[bool]
    composite_exact: bool
    pullback_pairs: List[Tuple[int, bool, bool]] = field(default_factory=list)

    @property
    def all_squares_exact(self) -> bool:
        return all(self.squares_exact)

    @property
    def equivalent(self) -> bool:
        return self.is_qis == self.all_squares_exact == self.composite_exact

    @property
    def pullback_law_holds(self) -> bool:
        return all(composite == both for _, composite, both in self.pullback_pairs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "is_qis": self.is_qis,
            "squares_exact": self.squares_exact,
            "composite_exact": self.composite_exact,
            "equivalent": self.equivalent,
            "pullback_law_holds": self.pullback_law_holds,
        }


@dataclass
class SigmaMuClass:
    """Homotopy class of a suspended mu complex, predicted and computed"""

    j: int
    r: int
    N: int
    predicted: Tuple[int, int]
    printed: Tuple[int, int]
    computed: Optional[Tuple[int, int]]

    @property
    def matches(self) -> bool:
        return self.computed == self.predicted

    @property
    def printed_matches(self) -> bool:
        return self.computed == self.printed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "j": self.j,
            "r": self.r,
            "N": self.N,
            "predicted": list(self.predicted),
            "printed": list(self.printed),
            "computed": list(self.computed) if self.computed else None,
            "matches": self.matches,
            "printed_matches": self.printed_matches,
        }


@dataclass
class ShiftCheck:
    """One statement checked under one reading of the degree shift"""

    statement: str
    reading: str
    expected_degree: int
    holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class Smcatcp2Report:
    """Checks of the three shift identities for a single-degree complex"""

    N: int
    i: int
    dim: int
    checks: List[ShiftCheck] = field(default_factory=list)

    def holds(self, statement: str, reading: str = "raising") -> bool:
        relevant = [c for c in self.checks if c.statement == statement and c.reading == reading]
        return bool(relevant) and all(c.holds for c in relevant)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "N": self.N,
            "i": self.i,
            "dim": self.dim,
            "checks": [c.to_dict() for c in self.checks],
        }
