"""
Mor Transport - homology bookkeeping of N-complexes as sequences of N-1 maps

For j = 2i the sequence is

    H^{iN+1}_(N-1) -> H^{iN+2}_(N-2) -> ... -> H^{iN+N-1}_(1)

with maps induced by d, and for j = 2i+1 it is

    H^{(i+1)N}_(1) -> H^{(i+1)N}_(2) -> ... -> H^{(i+1)N}_(N-1)

with maps induced by the inclusions of cycles.
"""
import logging
from typing import Any, Dict, List, Optional, Tuple

from ..errors import InconsistencyError, InvalidParameters, NotCommutative
from ..models.chain_map import ChainMap
from ..models.field import FieldSpec
from ..models.matrix import Matrix
from ..models.mor_object import MorMorphism, MorObject
from ..models.ncomplex import NComplex
from ..models.reports import ShiftCheck, SigmaMuClass, Smcatcp2Report
from . import linalg
from .complexes import (decomposition_table, homology, homology_table, induced_map, mu, mu_decomposition, power,
                        theta_shift, theta_shift_map)
from .homology_qis import induced_homology_map
from .homotopy import chainmap_space_dim, homK_dim, homotopy_equivalent
from .triangles import cone, suspend_power

logger = logging.getLogger(__name__)

Slot = Tuple[int, int]


def mor_slots(N: int, j: int) -> List[Slot]:
    """(degree, amplitude) of each component of the j-th sequence"""
    i = j // 2
    if j % 2 == 0:
        return [(i * N + t, N - t) for t in range(1, N)]
    return [((i + 1) * N, t) for t in range(1, N)]


def mor_window(*complexes: NComplex) -> range:
    """Every j whose slots can meet the support"""
    live = [X for X in complexes if not X.is_zero()]
    if not live:
        return range(0)
    N = live[0].N
    lo = min(X.min_degree for X in live)
    hi = max(X.max_degree for X in live)
    return range(2 * ((lo - N) // N), 2 * (hi // N + 1) + 2)


def _step_map(X: NComplex, j: int, source: Slot) -> Matrix:
    degree, _ = source
    if j % 2 == 0:
        return power(X, degree, 1)
    return Matrix.identity(X.field, X.dim(degree))


def mor_homology(X: NComplex, j: int) -> MorObject:
    """The j-th sequence of homology groups with its induced maps"""
    slots = mor_slots(X.N, j)
    groups = [homology(X, i, r) for i, r in slots]
    maps = [induced_map(_step_map(X, j, slots[t]), groups[t], groups[t + 1]) for t in range(len(slots) - 1)]
    return MorObject(X.field, [g.dim for g in groups], maps, slots)


def mor_induced(f: ChainMap, j: int) -> MorMorphism:
    """
    Componentwise induced maps between the j-th sequences.

    Raises:
        NotCommutative: the ladder does not commute
    """
    source, target = mor_homology(f.source, j), mor_homology(f.target, j)
    components = [induced_homology_map(f, i, r) for i, r in mor_slots(f.N, j)]
    for t in range(len(components) - 1):
        if components[t + 1] @ source.maps[t] != target.maps[t] @ components[t]:
            raise NotCommutative(f"ladder at j={j} does not commute at component {t + 1}")
    return MorMorphism(source, target, components)


def mor_table(X: NComplex) -> Dict[int, MorObject]:
    """Nonzero sequences keyed by j"""
    table = {}
    for j in mor_window(X):
        obj = mor_homology(X, j)
        if not obj.is_zero():
            table[j] = obj
    return table


def _is_iso(matrix: Matrix) -> bool:
    return matrix.rows == matrix.cols and linalg.rank(matrix) == matrix.rows


def qis_via_mor(f: ChainMap) -> bool:
    """Every induced ladder is a componentwise isomorphism"""
    for j in mor_window(f.source, f.target):
        if not all(_is_iso(c) for c in mor_induced(f, j).components):
            return False
    return True


def mor_coverage(X: NComplex) -> Dict[str, Any]:
    """
    Which nonzero H^i_(r) land in some slot.

    Raises:
        InconsistencyError: a slot is reached twice
    """
    owners: Dict[Slot, Tuple[int, int]] = {}
    for j in mor_window(X):
        for position, slot in enumerate(mor_slots(X.N, j)):
            if slot in owners:
                raise InconsistencyError(f"slot {slot} reached by j={owners[slot][0]} and j={j}")
            owners[slot] = (j, position)
    table = homology_table(X)
    covered = sorted(key for key in table if key in owners)
    uncovered = sorted(key for key in table if key not in owners)
    return {
        "covered": [list(key) for key in covered],
        "uncovered": [list(key) for key in uncovered],
        "slots": {f"{i},{r}": list(owners[(i, r)]) for i, r in covered},
    }


def nhn_sides(X: NComplex, i: int, r: int) -> Tuple[int, int]:
    """(dim Hom_K(mu_r^{i+r-1} k, X), dim H^i_(r)(X))"""
    test_object = mu(X.N, r, i + r - 1, 1, X.field)
    return homK_dim(test_object, X), homology(X, i, r).dim


def nhn_check(X: NComplex, i: int, r: int) -> bool:
    lhs, rhs = nhn_sides(X, i, r)
    return lhs == rhs


def predicted_sigma_mu(j: int, r: int, N: int) -> Tuple[int, int]:
    """(amplitude, top degree) of Sigma^j mu_r^{N-1}"""
    if j % 2 == 0:
        return r, (2 - j) * N // 2 - 1
    return N - r, (3 - j) * N // 2 - r - 1


def printed_sigma_mu(j: int, r: int, N: int) -> Tuple[int, int]:
    if j % 2 == 0:
        return r, (2 - j) * N // 2 - 1
    return N - r, (1 - j) * N // 2 - r - 1


def essential_class(X: NComplex) -> Optional[Tuple[int, int]]:
    """The single non-contractible mu summand of X, if there is exactly one"""
    pieces = {key: m for key, m in mu_decomposition(X).items() if key[0] != X.N}
    if list(pieces.values()) != [1]:
        return None
    return next(iter(pieces))


def sigma_mu_class(j: int, r: int, N: int, field: FieldSpec, strict: bool = False) -> SigmaMuClass:
    """Predicted and computed class of Sigma^j mu_r^{N-1} k"""
    if not 1 <= r <= N - 1:
        raise InvalidParameters(f"need 1 <= r <= N-1, got r={r}, N={N}")
    computed = essential_class(suspend_power(mu(N, r, N - 1, 1, field), j, strict=strict))
    result = SigmaMuClass(j, r, N, predicted_sigma_mu(j, r, N), printed_sigma_mu(j, r, N), computed)
    if not result.printed_matches:
        logger.info("Sigma^%d mu_%d (N=%d): printed exponent differs, computed %s", j, r, N, computed)
    return result


def _placed(C: NComplex, degree: int) -> NComplex:
    """C moved so that its degree-0 part sits in the given degree"""
    return theta_shift(C, -degree)


def _inclusion(N: int, r: int, dim: int, field: FieldSpec) -> ChainMap:
    """mu_{r-1}^{N-1} -> mu_r^{N-1}, identity on the shared top degrees"""
    small = mu(N, r - 1, N - 1, dim, field) if r > 1 else NComplex.zero(N, field)
    large = mu(N, r, N - 1, dim, field)
    return ChainMap(small, large, {k: Matrix.identity(field, dim) for k in small.degrees()})


def smcatcp2_check(dim: int, N: int, i: int, field: FieldSpec) -> Smcatcp2Report:
    """
    Shift identities for C = k^dim in degree 0.

    Statement 1: Theta^{iN} C vs Sigma^{1-2i} mu_{N-1}^{N-1} C.
    Statement 2: Theta^{iN-1} C vs Sigma^{2-2i} mu_1^{N-1} C.
    Statement 3: the cone of Theta^{(1-i)N} (mu_{r-1}^{N-1} C -> mu_r^{N-1} C)
    vs Theta^{iN-r} C, for 1 <= r <= N-1.

    Under the "raising" reading Theta^t moves C up to degree t, under the
    "literal" reading it is theta_shift by t. Statement 3 is also checked in
    the "mixed" reading: the inclusion shifted by theta_shift, C placed in
    degree iN-r.
    """
    C = mu(N, 1, 0, dim, field)
    report = Smcatcp2Report(N, i, dim)
    sides = [
        ("1", i * N, suspend_power(mu(N, N - 1, N - 1, dim, field), 1 - 2 * i)),
        ("2", i * N - 1, suspend_power(mu(N, 1, N - 1, dim, field), 2 - 2 * i)),
    ]
    for statement, t, rhs in sides:
        for reading, degree in (("raising", t), ("literal", -t)):
            report.checks.append(
                ShiftCheck(statement, reading, degree, homotopy_equivalent(_placed(C, degree), rhs))
            )
    shift = (1 - i) * N
    for r in range(1, N):
        inclusion = _inclusion(N, r, dim, field)
        t = i * N - r
        readings = (("raising", -shift, t), ("literal", shift, -t), ("mixed", shift, t))
        for reading, map_shift, degree in readings:
            lhs = cone(theta_shift_map(inclusion, map_shift)).C
            report.checks.append(
                ShiftCheck("3", reading, degree, homotopy_equivalent(lhs, _placed(C, degree)))
            )
    return report


def split_mono_decomposition(X: NComplex) -> Dict[int, int]:
    """
    Multiplicities m_t of mu_t^{N-1} for a complex of split monos in degrees 1..N-1.

    Raises:
        InvalidParameters: X is not of that form
        InconsistencyError: the decomposition does not reproduce the homology
    """
    decomposition = mu_decomposition(X)
    if any(s != X.N - 1 for _, s in decomposition):
        raise InvalidParameters("complex is not a sequence of monomorphisms ending in degree N-1")
    if decomposition_table(decomposition, X.N) != homology_table(X):
        raise InconsistencyError("mu decomposition does not reproduce the homology table")
    return {t: m for (t, _), m in sorted(decomposition.items())}


def mor_to_complex(obj: MorObject, N: int) -> NComplex:
    """Place V_1 -> ... -> V_{N-1} in degrees 1..N-1"""
    if len(obj.dims) != N - 1:
        raise InvalidParameters(f"need {N - 1} components, got {len(obj.dims)}")
    return NComplex(N, obj.field, 1, obj.dims, obj.maps)


def smcatcp_hom_checks(X: NComplex, Y: NComplex, shifts=(-2, -1, 1, 2)) -> Dict[str, Any]:
    """
    For X, Y sums of mu_t^{N-1}: every chain map is essential, and
    Hom_K(X, Sigma^i Y) vanishes for the given nonzero shifts.
    """
    split_mono_decomposition(X)
    split_mono_decomposition(Y)
    vanishing = {i: homK_dim(X, suspend_power(Y, i)) == 0 for i in shifts if i}
    return {
        "hom_c_equals_hom_k": chainmap_space_dim(X, Y) == homK_dim(X, Y),
        "vanishing": vanishing,
    }
