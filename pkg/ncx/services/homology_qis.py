"""
Homology and Quasi-isomorphisms

Induced maps on H^i_(r), quasi-isomorphism and acyclicity tests, the two long
exact sequences, elementary morphisms built by iterated pullback, exact
squares, and the truncation quasi-isomorphism.
"""
import logging
from typing import List, Set, Tuple

from ..errors import (InconsistencyError, InvalidAmplitude, InvalidParameters, LiftFailure, NotCommutative,
                      NotExact, PreconditionFailed)
from ..models.chain_map import ChainMap
from ..models.matrix import Matrix
from ..models.ncomplex import HomologyGroup, NComplex
from ..models.reports import ElementaryReport, ExactnessNode, ExactnessReport
from ..models.sequences import ExactSquare, ShortExactSeq
from . import linalg
from .complexes import (cycle_differentials_surjective, homology, homology_table, induced_map, is_acyclic_table,
                        power)
from .homotopy import compose, validate_map
from .triangles import cone
from .truncation import sigma_le_with_inclusion

logger = logging.getLogger(__name__)


def _window(*complexes: NComplex) -> range:
    live = [X for X in complexes if not X.is_zero()]
    if not live:
        return range(0)
    return range(min(X.min_degree for X in live), max(X.max_degree for X in live) + 1)


def induced_homology_map(f: ChainMap, i: int, r: int) -> Matrix:
    """H^i_(r)(f) in the canonical homology bases"""
    if not 1 <= r <= f.N - 1:
        raise InvalidAmplitude(f"amplitude {r} outside 1..{f.N - 1}")
    return induced_map(f.component(i), homology(f.source, i, r), homology(f.target, i, r))


def _is_iso(matrix: Matrix) -> bool:
    return matrix.rows == matrix.cols and linalg.rank(matrix) == matrix.rows


def qis_by_homology(f: ChainMap) -> bool:
    for i in _window(f.source, f.target):
        for r in range(1, f.N):
            if not _is_iso(induced_homology_map(f, i, r)):
                logger.debug("H^%d_(%d)(f) is not an isomorphism", i, r)
                return False
    return True


def qis_by_cone(f: ChainMap) -> bool:
    return is_acyclic_table(homology_table(cone(f).C))


def is_qis(f: ChainMap) -> bool:
    """
    All induced maps on homology are isomorphisms.

    Raises:
        InconsistencyError: the homology test and the acyclic-cone test disagree
    """
    by_homology = qis_by_homology(f)
    if by_homology != qis_by_cone(f):
        raise InconsistencyError("quasi-isomorphism tests disagree")
    return by_homology


def acyclic(X: NComplex) -> bool:
    """
    All H^i_(r)(X) vanish, cross-checked with surjectivity of d: Z_(r) -> Z_(r-1).
    """
    by_table = is_acyclic_table(homology_table(X))
    if by_table != cycle_differentials_surjective(X):
        raise InconsistencyError("acyclicity tests disagree")
    return by_table


def check_short_exact(ses: ShortExactSeq) -> bool:
    """
    Raises:
        NotExact: alpha not injective, beta not surjective or im alpha != ker beta
    """
    alpha, beta = ses.alpha, ses.beta
    if alpha.target != beta.source:
        raise NotExact(0, "the two maps do not share the middle complex")
    validate_map(alpha)
    validate_map(beta)
    for i in _window(ses.left, ses.middle, ses.right):
        a, b = alpha.component(i), beta.component(i)
        if not (b @ a).is_zero():
            raise NotExact(i, f"beta o alpha is nonzero at degree {i}")
        rank_a, rank_b = linalg.rank(a), linalg.rank(b)
        if rank_a != ses.left.dim(i) or rank_b != ses.right.dim(i):
            raise NotExact(i)
        if rank_a + rank_b != ses.middle.dim(i):
            raise NotExact(i)
    return True


# Long exact sequences

def _exactness_report(groups: List[HomologyGroup], labels: List[str],
                      maps: List[Matrix]) -> Tuple[List[ExactnessNode], bool]:
    """Nodes of one finite stretch of a long sequence; maps[k] goes from groups[k] to groups[k+1]"""
    nodes = []
    vanish = all((maps[k + 1] @ maps[k]).is_zero() for k in range(len(maps) - 1))
    for k, group in enumerate(groups):
        rank_in = linalg.rank(maps[k - 1]) if k > 0 else 0
        dim_ker_out = group.dim - linalg.rank(maps[k]) if k < len(maps) else group.dim
        nodes.append(ExactnessNode(group.degree, group.amplitude, labels[k], group.dim, rank_in, dim_ker_out))
    return nodes, vanish


def les_single_steps(N: int, ell: int, m: int) -> List[Tuple[str, int, int]]:
    """One period as (kind, degree step, amplitude after the step)"""
    return [
        ("inclusion", 0, ell + m),
        ("d", m, ell),
        ("inclusion", 0, N - m),
        ("d", ell, N - ell - m),
        ("inclusion", 0, N - ell),
        ("d", N - ell - m, m),
    ]


def les_single(X: NComplex, ell: int, m: int) -> ExactnessReport:
    """
    Exactness of the long sequence of a single complex.

    H^i_(m) -> H^i_(l+m) -> H^{i+m}_(l) -> H^{i+m}_(N-m) -> H^{i+l+m}_(N-l-m)
        -> H^{i+l+m}_(N-l) -> H^{i+N}_(m) -> ...

    with inclusion-induced maps at fixed degree and d-power-induced maps
    where the degree grows.

    Raises:
        InvalidParameters: unless l, m >= 1 and l + m < N
    """
    N = X.N
    if ell < 1 or m < 1 or ell + m >= N:
        raise InvalidParameters(f"need l, m >= 1 and l + m < N, got l={ell}, m={m}, N={N}")
    report = ExactnessReport(kind="single")
    if X.is_zero():
        return report
    steps = les_single_steps(N, ell, m)
    for start in range(X.min_degree - N, X.min_degree):
        degree, amplitude = start, m
        groups = [homology(X, degree, amplitude)]
        maps = []
        while degree <= X.max_degree:
            for kind, step, new_amplitude in steps:
                source = groups[-1]
                target = homology(X, degree + step, new_amplitude)
                if kind == "inclusion":
                    linear = Matrix.identity(X.field, X.dim(degree))
                else:
                    linear = power(X, degree, step)
                maps.append(induced_map(linear, source, target))
                groups.append(target)
                degree += step
        nodes, vanish = _exactness_report(groups, ["X"] * len(groups), maps)
        report.nodes.extend(nodes)
        report.composites_vanish = report.composites_vanish and vanish
    return report


def connecting(ses: ShortExactSeq, i: int, r: int) -> Matrix:
    """
    Connecting map H^i_(r)(Z) -> H^{i+r}_(N-r)(X) by the zig-zag.

    Each basis class is lifted through beta, pushed by d^r, pulled back through
    alpha and classified. A second lift perturbed by ker beta and by a boundary
    must give the same classes.

    Raises:
        InvalidAmplitude: r outside 1..N-1
        LiftFailure: a lift does not exist
        InconsistencyError: the result depends on the lift
    """
    N = ses.middle.N
    if not 1 <= r <= N - 1:
        raise InvalidAmplitude(f"amplitude {r} outside 1..{N - 1}")
    X, Y, Z = ses.left, ses.middle, ses.right
    source = homology(Z, i, r)
    target = homology(X, i + r, N - r)
    field = X.field
    if source.dim == 0 or target.dim == 0:
        return Matrix.zeros(field, target.dim, source.dim)

    def push(lift: Matrix) -> Matrix:
        image = power(Y, i, r) @ lift
        x = linalg.solve(ses.alpha.component(i + r), image)
        if x is None:
            raise LiftFailure(f"d^{r} of the lift at degree {i} is not in the image of alpha")
        if not (power(X, i + r, N - r) @ x).is_zero():
            raise InconsistencyError(f"pulled back element is not in Z^{i + r}_({N - r})")
        return target.classify(x)

    lift = linalg.solve(ses.beta.component(i), source.representatives)
    if lift is None:
        raise LiftFailure(f"beta is not onto at degree {i}")
    result = push(lift)

    kernel = linalg.kernel_basis(ses.beta.component(i)).basis
    ones = Matrix.from_rows(field, [[1]] * Y.dim(i - N + r), cols=1)
    shift = Matrix.from_rows(field, [[1]] * kernel.cols, cols=1)
    perturbation = kernel @ shift + power(Y, i - N + r, N - r) @ ones
    perturbed = lift + Matrix.hstack(field, Y.dim(i), [perturbation] * lift.cols)
    if push(perturbed) != result:
        raise InconsistencyError(f"connecting map at ({i}, {r}) depends on the chosen lift")
    return result


def _ses_chain_keys(lo: int, hi: int, N: int) -> List[List[Tuple[int, int]]]:
    """Chains (i, r) -> (i+r, N-r) -> (i+N, r) -> ... covering every slot once"""
    seen: Set[Tuple[int, int]] = set()
    chains = []
    for degree in range(lo, hi + 1):
        for amplitude in range(1, N):
            if (degree, amplitude) in seen:
                continue
            d, a = degree, amplitude
            while d >= lo:
                d, a = d - (N - a), N - a
            chain = []
            while d <= hi + N:
                chain.append((d, a))
                seen.add((d, a))
                d, a = d + a, N - a
            chains.append(chain)
    return chains


def les_ses(ses: ShortExactSeq) -> ExactnessReport:
    """
    Exactness of

    H^i_(r)(X) -> H^i_(r)(Y) -> H^i_(r)(Z) -> H^{i+r}_(N-r)(X) -> ... -> H^{i+N}_(r)(X)

    Raises:
        NotExact: the input sequence is not degreewise exact
    """
    check_short_exact(ses)
    N = ses.middle.N
    report = ExactnessReport(kind="ses")
    window = _window(ses.left, ses.middle, ses.right)
    if not window:
        return report
    for chain in _ses_chain_keys(window.start, window.stop - 1, N):
        groups, labels, maps = [], [], []
        for k, (i, r) in enumerate(chain):
            hx, hy, hz = homology(ses.left, i, r), homology(ses.middle, i, r), homology(ses.right, i, r)
            if k:
                maps.append(connecting(ses, *chain[k - 1]))
            maps.append(induced_map(ses.alpha.component(i), hx, hy))
            maps.append(induced_map(ses.beta.component(i), hy, hz))
            groups.extend([hx, hy, hz])
            labels.extend(["X", "Y", "Z"])
        nodes, vanish = _exactness_report(groups, labels, maps)
        report.nodes.extend(nodes)
        report.composites_vanish = report.composites_vanish and vanish
    return report


# Exact squares and elementary morphisms

def is_exact_square(square: ExactSquare) -> bool:
    """
    0 -> A -> B + D -> E -> 0 with maps (f, x) and (y, -f') is exact.

    Raises:
        NotCommutative: y f != f' x
    """
    f, x, y, f_prime = square.f, square.x, square.y, square.f_prime
    if y @ f != f_prime @ x:
        raise NotCommutative("square does not commute")
    field = f.field
    first = Matrix.vstack(field, f.cols, [f, x])
    second = Matrix.hstack(field, y.rows, [y, -f_prime])
    rank_first, rank_second = linalg.rank(first), linalg.rank(second)
    injective = rank_first == f.cols
    surjective = rank_second == y.rows
    middle = rank_first == first.rows - rank_second
    return injective and surjective and middle


def elementary(X: NComplex, u: Matrix, i: int) -> Tuple[NComplex, ChainMap]:
    """
    Elementary morphism p(u, i): X(u, i) -> X of degree i.

    Y^i is the source of u and Y^{j-1} = X^{j-1} x_{X^j} Y^j for
    j = i, ..., i-N+2, realized as the kernel of (d_X | -u^j). The
    differential leaving degree i-N is forced by the pullback property.

    Returns:
        Tuple of (X(u, i), p(u, i))
    """
    N, field = X.N, X.field
    if u.rows != X.dim(i):
        raise InvalidParameters(f"u must land in X^{i} of dimension {X.dim(i)}, got {u.rows} rows")
    m = u.cols
    dims = {k: X.dim(k) for k in range(X.min_degree, X.max_degree + 1)}
    diffs = {k: X.d(k) for k in range(X.min_degree, X.max_degree)}
    ups = {i: u}
    dims[i] = m
    kernels = {}
    for j in range(i, i - N + 1, -1):
        difference = Matrix.hstack(field, X.dim(j), [X.d(j - 1), -ups[j]])
        kernel = linalg.kernel_basis(difference)
        kernels[j - 1] = kernel
        top = X.dim(j - 1)
        ups[j - 1] = kernel.basis.submatrix(0, top, 0, kernel.dim)
        diffs[j - 1] = kernel.basis.submatrix(top, top + dims[j], 0, kernel.dim)
        dims[j - 1] = kernel.dim
    start = i - N
    block = linalg.stack_rows(field, X.dim(start),
                              [power(X, start, N - 1), Matrix.zeros(field, m, X.dim(start))])
    lifted = kernels[i - 1].coordinates(block)
    for j in range(i - 2, i - N, -1):
        block = linalg.stack_rows(field, X.dim(start), [power(X, start, j - start), lifted])
        lifted = kernels[j].coordinates(block)
    diffs[start] = lifted
    diffs[i] = X.d(i) @ u
    Y = NComplex.from_maps(N, field, dims, diffs)
    maps = {k: ups.get(k, Matrix.identity(field, X.dim(k))) for k in set(dims) | set(ups)}
    return Y, ChainMap(Y, X, maps)


def elementary_squares(X: NComplex, Y: NComplex, p: ChainMap, i: int) -> List[ExactSquare]:
    """Squares E^j for j = i-N+1, ..., i-1"""
    return [
        ExactSquare(Y.d(j), p.component(j), p.component(j + 1), X.d(j), label=f"E^{j}")
        for j in range(i - X.N + 1, i)
    ]


def _composite_square(X: NComplex, Y: NComplex, p: ChainMap, lo: int, hi: int) -> ExactSquare:
    return ExactSquare(power(Y, lo, hi - lo), p.component(lo), p.component(hi), power(X, lo, hi - lo),
                       label=f"E^{lo}..E^{hi - 1}")


def verify_elementary(X: NComplex, u: Matrix, i: int) -> ElementaryReport:
    """
    Compare the three conditions on p(u, i): quasi-isomorphism, every square
    E^j exact, and the composite square exact. Also records the pasting law
    for adjacent pullback squares.
    """
    Y, p = elementary(X, u, i)
    validate_map(p)
    squares = elementary_squares(X, Y, p, i)
    exact = [is_exact_square(sq) for sq in squares]
    composite = is_exact_square(_composite_square(X, Y, p, i - X.N + 1, i))
    pairs = []
    for k in range(len(squares) - 1):
        j = i - X.N + 1 + k
        pasted = is_exact_square(_composite_square(X, Y, p, j, j + 2))
        pairs.append((j, pasted, exact[k] and exact[k + 1]))
    report = ElementaryReport(i, is_qis(p), exact, composite, pairs)
    if not report.equivalent:
        logger.warning("elementary morphism conditions disagree at degree %d: %s", i, report.to_dict())
    return report


def trunc_qis_check(X: NComplex, n: int) -> bool:
    """
    The inclusion sigma_le(n) X -> X, tested for being a quasi-isomorphism.

    Raises:
        PreconditionFailed: some H^i_(r)(X) with i >= n is nonzero
    """
    for (i, r), dim in homology_table(X).items():
        if i >= n and dim:
            raise PreconditionFailed(i, r)
    _, inclusion = sigma_le_with_inclusion(X, n)
    return is_qis(inclusion)


def homology_functorial(g: ChainMap, f: ChainMap) -> bool:
    """H(g o f) = H(g) H(f) at every degree and amplitude"""
    gf = compose(g, f)
    for i in _window(f.source, f.target, g.target):
        for r in range(1, f.N):
            if induced_homology_map(gf, i, r) != induced_homology_map(g, i, r) @ induced_homology_map(f, i, r):
                return False
    return True
