"""
Homotopy - chain maps, null-homotopies and hom-space dimensions

A family s^k: X^k -> Y^{k-N+1} is a null-homotopy of f when, at every degree,

    f^i = sum_{j=1}^{N} d_Y^{N-j} s^{i+j-1} d_X^{j-1}

where d^{r} denotes the r-fold power. The "printed" convention stops the sum
at j = N-1; it is kept so the two null-homotopic subspaces can be compared.

Every question here becomes one linear system over the finite support window.
Unknown matrices are flattened row-major and concatenated in ascending degree,
so vec_row(A S B) = kron(A, B^T) vec_row(S) assembles each coefficient block.
"""
import logging
from typing import Dict, List, Optional, Tuple

from ..errors import CommutationFailure, CompositionMismatch, DimensionMismatch, InconsistencyError, InvalidParameters
from ..models.chain_map import ChainMap, HomotopyWitness, check_compatible
from ..models.field import FieldSpec
from ..models.matrix import Matrix
from ..models.ncomplex import NComplex
from . import linalg
from .complexes import cycle_differentials_surjective, identity_map, mu_decomposition, power
from .decorators import same_category

logger = logging.getLogger(__name__)

CONVENTIONS = ("full", "printed")


class VariableLayout:
    """Unknown matrices indexed by degree, flattened into one vector"""

    def __init__(self, field: FieldSpec, shapes: Dict[int, Tuple[int, int]]):
        self.field = field
        self.shapes = {k: s for k, s in sorted(shapes.items()) if s[0] and s[1]}
        self.index = {k: n for n, k in enumerate(self.shapes)}
        self.widths = [r * c for r, c in self.shapes.values()]
        self.size = sum(self.widths)

    def __contains__(self, k: int) -> bool:
        return k in self.shapes

    def row(self, height: int, coefficients: Dict[int, Matrix]) -> Matrix:
        """One block row of a system: coefficients[k] multiplies the unknown at degree k"""
        entries = {(0, self.index[k]): m for k, m in coefficients.items() if k in self}
        return Matrix.block(self.field, [height], self.widths, entries)

    def split(self, vector: Matrix) -> Dict[int, Matrix]:
        out, offset = {}, 0
        for k, (r, c) in self.shapes.items():
            chunk = vector.submatrix(offset, offset + r * c, 0, 1)
            out[k] = linalg.unvec_row(chunk, r, c)
            offset += r * c
        return out

    def join(self, matrices: Dict[int, Matrix]) -> Matrix:
        blocks = []
        for k, (r, c) in self.shapes.items():
            m = matrices.get(k)
            blocks.append(linalg.vec_row(m) if m is not None else Matrix.zeros(self.field, r * c, 1))
        return linalg.stack_rows(self.field, 1, blocks)


def _stack(field: FieldSpec, cols: int, rows: List[Matrix]) -> Matrix:
    return linalg.stack_rows(field, cols, rows) if rows else Matrix.zeros(field, 0, cols)


def map_layout(X: NComplex, Y: NComplex) -> VariableLayout:
    """Unknowns f^i: X^i -> Y^i"""
    lo = min(X.min_degree, Y.min_degree)
    hi = max(X.max_degree, Y.max_degree)
    return VariableLayout(X.field, {i: (Y.dim(i), X.dim(i)) for i in range(lo, hi + 1)})


def homotopy_layout(X: NComplex, Y: NComplex) -> VariableLayout:
    """Unknowns s^k: X^k -> Y^{k-N+1}"""
    shift = X.N - 1
    return VariableLayout(X.field, {k: (Y.dim(k - shift), X.dim(k)) for k in X.degrees()})


def commutation_operator(X: NComplex, Y: NComplex, layout: Optional[VariableLayout] = None) -> Matrix:
    """Rows f^{i+1} d_X^i - d_Y^i f^i for every degree with a nonzero equation block"""
    layout = layout or map_layout(X, Y)
    field = X.field
    rows = []
    for i in range(min(X.min_degree, Y.min_degree) - 1, max(X.max_degree, Y.max_degree) + 1):
        height = Y.dim(i + 1) * X.dim(i)
        if not height:
            continue
        coefficients = {}
        if i + 1 in layout:
            coefficients[i + 1] = linalg.kron(Matrix.identity(field, Y.dim(i + 1)), X.d(i).T)
        if i in layout:
            coefficients[i] = -linalg.kron(Y.d(i), Matrix.identity(field, X.dim(i)))
        rows.append(layout.row(height, coefficients))
    return _stack(field, layout.size, rows)


def _homotopy_terms(N: int, convention: str) -> range:
    if convention not in CONVENTIONS:
        raise InvalidParameters(f"Unknown homotopy convention: {convention}")
    return range(1, N + 1) if convention == "full" else range(1, N)


def homotopy_operator(X: NComplex, Y: NComplex, convention: str = "full") -> Tuple[Matrix, VariableLayout, VariableLayout]:
    """
    Linear map taking a homotopy family s to the chain map it produces.

    Returns:
        Tuple of (operator matrix, map layout, homotopy layout)
    """
    maps, homotopies = map_layout(X, Y), homotopy_layout(X, Y)
    N = X.N
    rows = []
    for i in maps.shapes:
        coefficients: Dict[int, Matrix] = {}
        for j in _homotopy_terms(N, convention):
            k = i + j - 1
            if k not in homotopies:
                continue
            term = linalg.kron(power(Y, i + j - N, N - j), power(X, i, j - 1).T)
            coefficients[k] = coefficients[k] + term if k in coefficients else term
        rows.append(homotopies.row(Y.dim(i) * X.dim(i), coefficients))
    return _stack(X.field, homotopies.size, rows), maps, homotopies


def validate_map(f: ChainMap) -> bool:
    """
    Raises:
        DimensionMismatch: a component has the wrong shape
        CommutationFailure: f^{i+1} d_X^i != d_Y^i f^i at the reported degree
    """
    X, Y = f.source, f.target
    for i in range(min(X.min_degree, Y.min_degree) - 1, max(X.max_degree, Y.max_degree) + 1):
        if f.component(i).shape != (Y.dim(i), X.dim(i)):
            raise DimensionMismatch(f"component at degree {i} has the wrong shape")
        if f.component(i + 1) @ X.d(i) != Y.d(i) @ f.component(i):
            raise CommutationFailure(i)
    return True


def compose(g: ChainMap, f: ChainMap) -> ChainMap:
    """g after f"""
    if f.target != g.source:
        raise CompositionMismatch("target of the first map is not the source of the second")
    window = set(f.degrees()) & set(g.degrees())
    return ChainMap(f.source, g.target, {i: g.component(i) @ f.component(i) for i in window})


def add_maps(f: ChainMap, g: ChainMap) -> ChainMap:
    if f.source != g.source or f.target != g.target:
        raise CompositionMismatch("maps to add must share source and target")
    return ChainMap(f.source, f.target, {i: f.component(i) + g.component(i) for i in f.degrees()})


def scale_map(f: ChainMap, c) -> ChainMap:
    return ChainMap(f.source, f.target, {i: f.component(i).scale(c) for i in f.degrees()})


def map_vector(f: ChainMap) -> Matrix:
    return map_layout(f.source, f.target).join({i: f.component(i) for i in f.degrees()})


def apply_homotopy(witness: HomotopyWitness) -> ChainMap:
    """The map sum_j d^{N-j} s d^{j-1} produced by a homotopy family"""
    X, Y = witness.source, witness.target
    N = X.N
    maps = {}
    for i in map_layout(X, Y).shapes:
        total = Matrix.zeros(X.field, Y.dim(i), X.dim(i))
        for j in _homotopy_terms(N, witness.convention):
            s = witness.component(i + j - 1)
            total = total + power(Y, i + j - N, N - j) @ s @ power(X, i, j - 1)
        maps[i] = total
    return ChainMap(X, Y, maps)


def null_homotopy_witness(f: ChainMap, convention: str = "full") -> Optional[HomotopyWitness]:
    """
    Solve the null-homotopy equation for f.

    Returns:
        A witness reproducing f exactly, or None when f is not null-homotopic
    """
    operator, maps, homotopies = homotopy_operator(f.source, f.target, convention)
    solution = linalg.solve(operator, maps.join({i: f.component(i) for i in f.degrees()}))
    if solution is None:
        return None
    witness = HomotopyWitness(f.source, f.target, homotopies.split(solution), convention)
    if apply_homotopy(witness) != f:
        raise InconsistencyError("homotopy solve returned a family that does not reproduce the map")
    return witness


def is_null_homotopic(f: ChainMap, convention: str = "full") -> bool:
    return null_homotopy_witness(f, convention) is not None


@same_category
def chainmap_space_dim(X: NComplex, Y: NComplex) -> int:
    layout = map_layout(X, Y)
    return layout.size - linalg.rank(commutation_operator(X, Y, layout))


@same_category
def chain_map_basis(X: NComplex, Y: NComplex) -> List[ChainMap]:
    """A basis of the space of chain maps X -> Y"""
    layout = map_layout(X, Y)
    kernel = linalg.kernel_basis(commutation_operator(X, Y, layout))
    return [ChainMap(X, Y, layout.split(kernel.basis.column(k))) for k in range(kernel.dim)]


@same_category
def null_homotopic_dim(X: NComplex, Y: NComplex, convention: str = "full") -> int:
    """Dimension of the null-homotopic chain maps X -> Y under a convention"""
    operator, maps, _ = homotopy_operator(X, Y, convention)
    commutation = commutation_operator(X, Y, maps)
    if convention == "printed":
        # truncated sums need not be chain maps
        image = linalg.image_basis(operator)
        return linalg.intersect_subspaces(image, linalg.kernel_basis(commutation)).dim
    if not (commutation @ operator).is_zero():
        raise InconsistencyError("homotopy operator leaves the space of chain maps")
    return linalg.rank(operator)


@same_category
def homK_dim(X: NComplex, Y: NComplex) -> int:
    """dim Hom_K(X, Y): chain maps modulo null-homotopic ones"""
    result = chainmap_space_dim(X, Y) - null_homotopic_dim(X, Y)
    logger.debug("homK_dim = %d", result)
    return result


def factors_through(f: ChainMap, g: ChainMap, side: str = "after") -> Optional[ChainMap]:
    """
    Find a chain map h with f = h o g (side "after") or f = g o h (side "before").

    Args:
        f: map to factor
        g: map to factor through; must share f's source ("after") or target ("before")

    Returns:
        The chain map h, or None when no factorization exists
    """
    if side == "after":
        if g.source != f.source:
            raise CompositionMismatch("g must start where f starts")
        domain, codomain = g.target, f.target
    elif side == "before":
        if g.target != f.target:
            raise CompositionMismatch("g must end where f ends")
        domain, codomain = f.source, g.source
    else:
        raise InvalidParameters(f"Unknown factorization side: {side}")
    check_compatible(domain, codomain)
    layout = map_layout(domain, codomain)
    targets = map_layout(f.source, f.target)
    field = f.field
    rows = []
    for i in targets.shapes:
        if i not in layout:
            rows.append(layout.row(targets.shapes[i][0] * targets.shapes[i][1], {}))
            continue
        if side == "after":
            coefficient = linalg.kron(Matrix.identity(field, codomain.dim(i)), g.component(i).T)
        else:
            coefficient = linalg.kron(g.component(i), Matrix.identity(field, domain.dim(i)))
        rows.append(layout.row(targets.shapes[i][0] * targets.shapes[i][1], {i: coefficient}))
    commutation = commutation_operator(domain, codomain, layout)
    system = linalg.stack_rows(field, layout.size, [commutation, _stack(field, layout.size, rows)])
    rhs = linalg.stack_rows(field, 1, [Matrix.zeros(field, commutation.rows, 1),
                                      targets.join({i: f.component(i) for i in f.degrees()})])
    solution = linalg.solve(system, rhs)
    if solution is None:
        return None
    return ChainMap(domain, codomain, layout.split(solution))


def contractible_by_criterion(X: NComplex) -> bool:
    """Every induced d: Z^n_(r) -> Z^{n+1}_(r-1) is onto"""
    return cycle_differentials_surjective(X)


def is_contractible(X: NComplex) -> bool:
    """
    Identity null-homotopic, cross-checked against the cycle-surjectivity criterion.

    Raises:
        InconsistencyError: the two tests disagree
    """
    by_homotopy = is_null_homotopic(identity_map(X))
    if by_homotopy != contractible_by_criterion(X):
        raise InconsistencyError("contractibility tests disagree")
    return by_homotopy


def essential_decomposition(X: NComplex) -> Dict[Tuple[int, int], int]:
    """mu-decomposition with the contractible mu_N summands dropped"""
    return {key: m for key, m in mu_decomposition(X).items() if key[0] != X.N}


@same_category
def homotopy_equivalent(X: NComplex, Y: NComplex) -> bool:
    return essential_decomposition(X) == essential_decomposition(Y)
