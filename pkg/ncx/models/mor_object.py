# Objects and morphisms of the category of N-1 term sequences
from typing import Any, Dict, List, Sequence, Tuple

from .field import FieldSpec
from .matrix import Matrix


class MorObject:
    """Sequence V_1 -> V_2 -> ... -> V_{N-1} of linear maps"""

    def __init__(self, field: FieldSpec, dims: Sequence[int], maps: Sequence[Matrix],
                 slots: Sequence[Tuple[int, int]] = ()):
        if len(maps) != max(len(dims) - 1, 0):
            raise ValueError(f"{len(dims)} components need {len(dims) - 1} maps")
        for j, m in enumerate(maps):
            if m.shape != (dims[j + 1], dims[j]):
                raise ValueError(f"map {j} has shape {m.shape}, expected {(dims[j + 1], dims[j])}")
        self.field = field
        self.dims = tuple(dims)
        self.maps = tuple(maps)
        self.slots = tuple(slots)

    def is_zero(self) -> bool:
        return all(n == 0 for n in self.dims)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dims": list(self.dims),
            "maps": [m.to_list() for m in self.maps],
            "slots": [list(s) for s in self.slots],
        }


class MorMorphism:
    """Ladder of component maps f^t: X_t -> Y_t"""

    def __init__(self, source: MorObject, target: MorObject, components: List[Matrix]):
        self.source = source
        self.target = target
        self.components = list(components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def compose(self, first: "MorMorphism") -> "MorMorphism":
        """self after first"""
        return MorMorphism(first.source, self.target,
                           [g @ f for g, f in zip(self.components, first.components)])

    def to_dict(self) -> Dict[str, Any]:
        return {"components": [c.to_list() for c in self.components]}
