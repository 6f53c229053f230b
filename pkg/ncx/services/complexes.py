"""
N-complex core - validation, powers of d, building blocks and amplitude homology

Conventions used throughout the package:

    Z^i_(r) = Ker(d^r: X^i -> X^{i+r})
    B^i_(r) = Im(d^r: X^{i-r} -> X^i)
    C^i_(r) = X^i / B^i_(r)
    H^i_(r) = Z^i_(r) / B^i_(N-r)         for 1 <= r <= N-1

mu(N, r, s, m) is k^m repeated in degrees s-r+1..s joined by identities, and
theta_shift(X, t) is the complex with (Theta^t X)^i = X^{i+t}.
"""
import logging
from collections import Counter
from typing import Dict, Iterable, Tuple

from ..errors import DimensionMismatch, InconsistencyError, InvalidAmplitude, InvalidParameters, NPowerNonzero
from ..models.chain_map import ChainMap
from ..models.field import FieldSpec
from ..models.matrix import Matrix, Subspace
from ..models.ncomplex import CokGroup, HomologyGroup, NComplex
from . import linalg
from .decorators import amplitude_range, same_category

logger = logging.getLogger(__name__)

HomologyTable = Dict[Tuple[int, int], int]


def validate(X: NComplex) -> bool:
    """
    Check matrix shapes and d^N = 0.

    Only windows X^i -> X^{i+N} with both ends nonzero are checked; every
    other window passes through a zero space.

    Raises:
        DimensionMismatch: a differential has the wrong shape
        NPowerNonzero: d^N starting at the reported degree is nonzero
    """
    for i in X.degrees():
        if i == X.max_degree:
            break
        if X.d(i).shape != (X.dim(i + 1), X.dim(i)):
            raise DimensionMismatch(f"differential at degree {i} has shape {X.d(i).shape}")
    for i in X.degrees():
        if X.dim(i) == 0 or X.dim(i + X.N) == 0:
            continue
        if not power(X, i, X.N).is_zero():
            logger.debug("d^%d nonzero from degree %d", X.N, i)
            raise NPowerNonzero(i)
    return True


def power(X: NComplex, i: int, r: int) -> Matrix:
    """d^{i+r-1} ... d^i as a dim X^{i+r} x dim X^i matrix; r = 0 is the identity"""
    if r < 0:
        raise InvalidAmplitude(f"power of d must be nonnegative, got {r}")
    result = Matrix.identity(X.field, X.dim(i))
    for k in range(i, i + r):
        if result.rows == 0 or result.cols == 0:
            return Matrix.zeros(X.field, X.dim(i + r), X.dim(i))
        result = X.d(k) @ result
    return result


def mu(N: int, r: int, s: int, m: int, field: FieldSpec) -> NComplex:
    """The complex k^m -> ... -> k^m of length r ending in degree s, identity maps"""
    if not 1 <= r <= N:
        raise InvalidAmplitude(f"mu needs 1 <= r <= N, got r={r}, N={N}")
    if m < 0:
        raise InvalidParameters(f"dimension must be nonnegative, got {m}")
    identity = Matrix.identity(field, m)
    return NComplex(N, field, s - r + 1, [m] * r, [identity] * (r - 1))


def theta_shift(X: NComplex, t: int) -> NComplex:
    """(Theta^t X)^i = X^{i+t}, no signs"""
    if X.is_zero():
        return X
    return NComplex(X.N, X.field, X.min_degree - t, X.dims, X.diffs)


def theta_shift_map(f: ChainMap, t: int) -> ChainMap:
    source, target = theta_shift(f.source, t), theta_shift(f.target, t)
    return ChainMap(source, target, {i - t: f.component(i) for i in f.degrees()})


@amplitude_range()
def cycles(X: NComplex, i: int, r: int) -> Subspace:
    """Z^i_(r); r = N gives all of X^i"""
    return linalg.kernel_basis(power(X, i, r))


@amplitude_range()
def boundaries(X: NComplex, i: int, r: int) -> Subspace:
    """B^i_(r), the image of d^r from X^{i-r}"""
    return linalg.image_basis(power(X, i - r, r))


@amplitude_range()
def cok(X: NComplex, i: int, r: int) -> CokGroup:
    """C^i_(r) = X^i / B^i_(r)"""
    boundary = boundaries(X, i, r)
    _, projection = linalg.quotient(X.dim(i), boundary)
    return CokGroup(i, r, projection, boundary)


@amplitude_range(top_offset=-1)
def homology(X: NComplex, i: int, r: int) -> HomologyGroup:
    """
    H^i_(r)(X) with an explicit basis.

    Raises:
        InvalidAmplitude: r outside 1..N-1
        InconsistencyError: B^i_(N-r) is not inside Z^i_(r), so X is not an N-complex
    """
    cycle_space = cycles(X, i, r)
    boundary = boundaries(X, i, X.N - r)
    try:
        inside = cycle_space.coordinates(boundary.basis)
    except ValueError:
        raise InconsistencyError(
            f"B^{i}_({X.N - r}) is not contained in Z^{i}_({r}); validate the complex first"
        ) from None
    sub = linalg.span(X.field, cycle_space.dim, inside)
    _, projection = linalg.quotient(cycle_space.dim, sub)
    representatives = cycle_space.basis @ linalg.quotient_section(sub)
    return HomologyGroup(i, r, cycle_space, boundary, projection, representatives)


def homology_window(X: NComplex) -> range:
    return X.degrees()


def homology_table(X: NComplex) -> HomologyTable:
    """Nonzero dims of H^i_(r), ordered by degree then amplitude"""
    table: HomologyTable = {}
    for i in homology_window(X):
        for r in range(1, X.N):
            n = homology(X, i, r).dim
            if n:
                table[(i, r)] = n
    return table


def add_tables(*tables: HomologyTable) -> HomologyTable:
    total: Counter = Counter()
    for table in tables:
        total.update(table)
    return {key: total[key] for key in sorted(total) if total[key]}


def shift_table(table: HomologyTable, t: int) -> HomologyTable:
    """Table of Theta^t X given the table of X"""
    return {(i - t, r): n for (i, r), n in table.items()}


def is_acyclic_table(table: HomologyTable) -> bool:
    return not any(table.values())


@same_category
def direct_sum(X: NComplex, Y: NComplex) -> NComplex:
    """Degreewise block diagonal sum"""
    if X.is_zero():
        return Y
    if Y.is_zero():
        return X
    lo = min(X.min_degree, Y.min_degree)
    hi = max(X.max_degree, Y.max_degree)
    dims = [X.dim(i) + Y.dim(i) for i in range(lo, hi + 1)]
    diffs = [
        Matrix.block(X.field, [X.dim(i + 1), Y.dim(i + 1)], [X.dim(i), Y.dim(i)],
                     {(0, 0): X.d(i), (1, 1): Y.d(i)})
        for i in range(lo, hi)
    ]
    return NComplex(X.N, X.field, lo, dims, diffs)


def direct_sum_all(N: int, field: FieldSpec, complexes: Iterable[NComplex]) -> NComplex:
    total = NComplex.zero(N, field)
    for X in complexes:
        total = direct_sum(total, X)
    return total


def identity_map(X: NComplex) -> ChainMap:
    return ChainMap(X, X, {i: Matrix.identity(X.field, X.dim(i)) for i in X.degrees()})


def zero_map(X: NComplex, Y: NComplex) -> ChainMap:
    return ChainMap(X, Y, {})


def subcomplex(X: NComplex, subspaces: Dict[int, Subspace]) -> Tuple[NComplex, ChainMap]:
    """
    Subcomplex spanned degreewise by the given subspaces (missing degrees are 0).

    Returns:
        Tuple of (subcomplex in the canonical bases, inclusion chain map)

    Raises:
        InvalidParameters: if d does not map the subspaces into each other
    """
    def space(i: int) -> Subspace:
        return subspaces.get(i) or linalg.zero_subspace(X.field, X.dim(i))

    dims, diffs = {}, {}
    for i in X.degrees():
        dims[i] = space(i).dim
        try:
            diffs[i] = linalg.restrict(X.d(i), space(i), space(i + 1))
        except ValueError:
            raise InvalidParameters(f"subspaces are not closed under d at degree {i}") from None
    Y = NComplex.from_maps(X.N, X.field, dims, diffs)
    inclusion = ChainMap(Y, X, {i: space(i).basis for i in X.degrees() if Y.dim(i)})
    return Y, inclusion


def quotient_complex(X: NComplex, subspaces: Dict[int, Subspace]) -> Tuple[NComplex, ChainMap]:
    """
    Quotient of X by a subcomplex given degreewise (missing degrees are 0).

    Returns:
        Tuple of (quotient complex, projection chain map)
    """
    def space(i: int) -> Subspace:
        return subspaces.get(i) or linalg.zero_subspace(X.field, X.dim(i))

    dims, diffs, projections = {}, {}, {}
    for i in X.degrees():
        if not space(i + 1).contains(X.d(i) @ space(i).basis):
            raise InvalidParameters(f"subspaces are not closed under d at degree {i}")
        dims[i], projections[i] = linalg.quotient(X.dim(i), space(i))
    for i in X.degrees():
        target = projections.get(i + 1)
        if target is None:
            continue
        diffs[i] = target @ X.d(i) @ linalg.quotient_section(space(i))
    Q = NComplex.from_maps(X.N, X.field, dims, diffs)
    projection = ChainMap(X, Q, {i: projections[i] for i in X.degrees() if Q.dim(i)})
    return Q, projection


def induced_map(linear: Matrix, source: HomologyGroup, target: HomologyGroup) -> Matrix:
    """
    Matrix of the map on homology induced by a linear map between the ambient spaces.

    Raises:
        InconsistencyError: the map does not send cycles to cycles or
            boundaries to boundaries
    """
    try:
        matrix = target.classify(linear @ source.representatives)
        on_boundaries = target.classify(linear @ source.boundary.basis)
    except ValueError:
        raise InconsistencyError(
            f"map does not send Z^{source.degree}_({source.amplitude}) into "
            f"Z^{target.degree}_({target.amplitude})"
        ) from None
    if not on_boundaries.is_zero():
        raise InconsistencyError("induced map is not well defined on boundaries")
    return matrix


def cycle_differential(X: NComplex, n: int, r: int) -> Matrix:
    """d restricted to Z^n_(r) -> Z^{n+1}_(r-1), for 2 <= r <= N"""
    return linalg.restrict(X.d(n), cycles(X, n, r), cycles(X, n + 1, r - 1))


def cycle_differentials_surjective(X: NComplex) -> bool:
    """Every d: Z^n_(r) -> Z^{n+1}_(r-1) is onto"""
    for n in range(X.min_degree - 1, X.max_degree + 1):
        for r in range(2, X.N + 1):
            target_dim = cycles(X, n + 1, r - 1).dim
            if target_dim and linalg.rank(cycle_differential(X, n, r)) != target_dim:
                return False
    return True


def rank_profile(X: NComplex, a: int, b: int, cache: Dict[Tuple[int, int], int]) -> int:
    """rank of d^{b-a}: X^a -> X^b"""
    if b - a >= X.N or b < a:
        return 0
    if (a, b) not in cache:
        cache[(a, b)] = linalg.rank(power(X, a, b - a)) if X.dim(a) and X.dim(b) else 0
    return cache[(a, b)]


def mu_decomposition(X: NComplex) -> Dict[Tuple[int, int], int]:
    """
    Multiplicity of every mu_t^s summand of X.

    The summand living in degrees a..b is counted by
    rho(a,b) - rho(a-1,b) - rho(a,b+1) + rho(a-1,b+1), rho being the rank
    of the power of d between the two degrees. Keys are (t, s) with
    t = b - a + 1 and s = b.
    """
    cache: Dict[Tuple[int, int], int] = {}
    decomposition: Dict[Tuple[int, int], int] = {}
    for a in X.degrees():
        for b in range(a, min(a + X.N, X.max_degree + 1)):
            mult = (rank_profile(X, a, b, cache) - rank_profile(X, a - 1, b, cache)
                    - rank_profile(X, a, b + 1, cache) + rank_profile(X, a - 1, b + 1, cache))
            if mult < 0:
                raise InconsistencyError(f"negative multiplicity for degrees {a}..{b}")
            if mult:
                decomposition[(b - a + 1, b)] = mult
    return decomposition


def mu_homology_table(t: int, s: int, N: int) -> HomologyTable:
    """Closed-form homology of mu_t^s k"""
    table: HomologyTable = {}
    for i in range(s - t + 1, s + 1):
        for q in range(1, N):
            if s + 1 - q <= i <= s - t + N - q:
                table[(i, q)] = 1
    return table


def decomposition_table(decomposition: Dict[Tuple[int, int], int], N: int) -> HomologyTable:
    """Homology table implied by a mu-decomposition"""
    tables = []
    for (t, s), mult in decomposition.items():
        tables.append({key: n * mult for key, n in mu_homology_table(t, s, N).items()})
    return add_tables(*tables)


def mu_sum(N: int, field: FieldSpec, blocks: Iterable[Tuple[int, int, int]]) -> NComplex:
    """Direct sum of mu(N, t, s, m) over blocks (t, s, m)"""
    return direct_sum_all(N, field, (mu(N, t, s, m, field) for t, s, m in blocks))
