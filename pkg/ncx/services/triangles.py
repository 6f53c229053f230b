"""
Triangle constructions - suspension, projective covers, mapping cones

All block sums are ordered by ascending degree, left to right and top to
bottom:

    (Sigma X)^m      = X^{m+1} + ... + X^{m+N-1}
    (Sigma^-1 X)^m   = X^{m-N+1} + ... + X^{m-1}
    P(X)^m           = X^{m-N+1} + ... + X^m
    I(X)^m           = X^m + ... + X^{m+N-1}
    C(f)^m           = B^m + A^{m+1} + ... + A^{m+N-1}      for f: A -> B
"""
import logging
from typing import Callable, Dict, List, Tuple

from ..models.chain_map import ChainMap
from ..models.matrix import Matrix
from ..models.ncomplex import NComplex
from ..models.sequences import ShortExactSeq, Triangle
from .complexes import homology_table, power, theta_shift

logger = logging.getLogger(__name__)

BlockDims = Callable[[int], List[int]]
BlockEntries = Callable[[int], Dict[Tuple[int, int], Matrix]]


def _blocks(X: NComplex, start: int, count: int) -> List[int]:
    return [X.dim(start + k) for k in range(count)]


def _window(*complexes: NComplex) -> range:
    """Generous degree window covering every construction below"""
    live = [X for X in complexes if not X.is_zero()]
    if not live:
        return range(0)
    N = live[0].N
    lo = min(X.min_degree for X in live) - N
    hi = max(X.max_degree for X in live) + N
    return range(lo, hi + 1)


def _assemble(template: NComplex, degrees: range, dims: BlockDims, entries: BlockEntries) -> NComplex:
    field = template.field
    spaces, diffs = {}, {}
    for m in degrees:
        spaces[m] = sum(dims(m))
        diffs[m] = Matrix.block(field, dims(m + 1), dims(m), entries(m))
    return NComplex.from_maps(template.N, field, spaces, diffs)


def _block_map(source: NComplex, target: NComplex, degrees: range, source_dims: BlockDims,
               target_dims: BlockDims, entries: BlockEntries) -> ChainMap:
    field = source.field
    maps = {m: Matrix.block(field, target_dims(m), source_dims(m), entries(m)) for m in degrees}
    return ChainMap(source, target, maps)


def _identity(X: NComplex, degree: int) -> Matrix:
    return Matrix.identity(X.field, X.dim(degree))


def suspension_dims(X: NComplex) -> BlockDims:
    return lambda m: _blocks(X, m + 1, X.N - 1)


def cosuspension_dims(X: NComplex) -> BlockDims:
    return lambda m: _blocks(X, m - X.N + 1, X.N - 1)


def suspend(X: NComplex) -> NComplex:
    """Sigma X: superdiagonal identities, bottom row -d^{N-1}, ..., -d"""
    N = X.N

    def entries(m):
        out = {(a, a + 1): _identity(X, m + 2 + a) for a in range(N - 2)}
        for k in range(N - 1):
            out[(N - 2, k)] = -power(X, m + 1 + k, N - 1 - k)
        return out

    return _assemble(X, _window(X), suspension_dims(X), entries)


def cosuspend(X: NComplex) -> NComplex:
    """Sigma^-1 X: left column -d, -d^2, ..., -d^{N-1}, subdiagonal identities"""
    N = X.N

    def entries(m):
        out = {(j, 0): -power(X, m - N + 1, j + 1) for j in range(N - 1)}
        for k in range(1, N - 1):
            out[(k - 1, k)] = _identity(X, m - N + 1 + k)
        return out

    return _assemble(X, _window(X), cosuspension_dims(X), entries)


def suspend_map(f: ChainMap) -> ChainMap:
    """Sigma f, block diagonal"""
    A, B = f.source, f.target
    N = A.N
    return _block_map(suspend(A), suspend(B), _window(A, B), suspension_dims(A), suspension_dims(B),
                      lambda m: {(k, k): f.component(m + 1 + k) for k in range(N - 1)})


def cosuspend_map(f: ChainMap) -> ChainMap:
    A, B = f.source, f.target
    N = A.N
    return _block_map(cosuspend(A), cosuspend(B), _window(A, B), cosuspension_dims(A),
                      cosuspension_dims(B),
                      lambda m: {(k, k): f.component(m - N + 1 + k) for k in range(N - 1)})


def suspend_power(X: NComplex, j: int, strict: bool = False) -> NComplex:
    """
    Sigma^j X for any integer j.

    By default Sigma^{2q+e} X is realized as Theta^{qN} Sigma^e X, using the
    isomorphism Sigma^2 = Theta^N; strict=True applies suspend or cosuspend
    |j| times instead.
    """
    if strict:
        step = suspend if j >= 0 else cosuspend
        for _ in range(abs(j)):
            X = step(X)
        return X
    q, e = divmod(j, 2)
    return theta_shift(suspend(X) if e else X, q * X.N)


def _cover_dims(X: NComplex) -> BlockDims:
    return lambda m: _blocks(X, m - X.N + 1, X.N)


def _hull_dims(X: NComplex) -> BlockDims:
    return lambda m: _blocks(X, m, X.N)


def _shift_down_entries(X: NComplex, first: Callable[[int], int]) -> BlockEntries:
    """Identity from block k to block k-1; block k of degree m lives in degree first(m) + k"""
    return lambda m: {(k - 1, k): _identity(X, first(m) + k) for k in range(1, X.N)}


def pi_cover(X: NComplex) -> Tuple[NComplex, ChainMap, ChainMap]:
    """
    Projective-injective cover 0 -> Sigma^-1 X -> P(X) -> X -> 0.

    Returns:
        Tuple of (P(X), epsilon: Sigma^-1 X -> P(X), rho: P(X) -> X)
    """
    N = X.N
    degrees = _window(X)
    P = _assemble(X, degrees, _cover_dims(X), _shift_down_entries(X, lambda m: m - N + 1))

    def epsilon(m):
        out = {(0, 0): _identity(X, m - N + 1)}
        for j in range(1, N - 1):
            out[(j, j - 1)] = -X.d(m - N + j)
            out[(j, j)] = _identity(X, m - N + 1 + j)
        out[(N - 1, N - 2)] = -X.d(m - 1)
        return out

    eps = _block_map(cosuspend(X), P, degrees, cosuspension_dims(X), _cover_dims(X), epsilon)
    rho = _block_map(P, X, degrees, _cover_dims(X), lambda m: [X.dim(m)],
                     lambda m: {(0, k): power(X, m - N + 1 + k, N - 1 - k) for k in range(N)})
    return P, eps, rho


def pi_hull(X: NComplex) -> Tuple[NComplex, ChainMap, ChainMap]:
    """
    Projective-injective hull 0 -> X -> I(X) -> Sigma X -> 0.

    Returns:
        Tuple of (I(X), Sigma epsilon: X -> I(X), Sigma rho: I(X) -> Sigma X)
    """
    N = X.N
    degrees = _window(X)
    I = _assemble(X, degrees, _hull_dims(X), _shift_down_entries(X, lambda m: m))
    sigma_eps = _block_map(X, I, degrees, lambda m: [X.dim(m)], _hull_dims(X),
                           lambda m: {(k, 0): power(X, m, k) for k in range(N)})

    def sigma_rho(m):
        out = {}
        for j in range(N - 1):
            out[(j, j)] = -X.d(m + j)
            out[(j, j + 1)] = _identity(X, m + j + 1)
        return out

    return I, sigma_eps, _block_map(I, suspend(X), degrees, _hull_dims(X), suspension_dims(X), sigma_rho)


def _cone_dims(f: ChainMap) -> BlockDims:
    A, B = f.source, f.target
    return lambda m: [B.dim(m)] + _blocks(A, m + 1, A.N - 1)


def cone_complex(f: ChainMap) -> NComplex:
    A, B = f.source, f.target
    N = A.N

    def entries(m):
        out = {(0, 0): B.d(m), (0, 1): f.component(m + 1)}
        for a in range(N - 2):
            out[(1 + a, 2 + a)] = _identity(A, m + 2 + a)
        for k in range(N - 1):
            out[(N - 1, 1 + k)] = -power(A, m + 1 + k, N - 1 - k)
        return out

    return _assemble(B, _window(A, B), _cone_dims(f), entries)


def cone_blocks(f: ChainMap, C: NComplex) -> Dict[int, List[List]]:
    """Which summand sits where: [["B", m], ["A", m+1], ...] per cone degree"""
    N = f.N
    return {m: [["B", m]] + [["A", m + 1 + k] for k in range(N - 1)] for m in C.degrees()}


def cone(f: ChainMap) -> Triangle:
    """
    Standard triangle A -> B -> C(f) -> Sigma A.

    Returns:
        Triangle with u the inclusion of B and v the projection onto Sigma A
    """
    A, B = f.source, f.target
    N = A.N
    C = cone_complex(f)
    degrees = _window(A, B)
    u = _block_map(B, C, degrees, lambda m: [B.dim(m)], _cone_dims(f),
                   lambda m: {(0, 0): _identity(B, m)})
    v = _block_map(C, suspend(A), degrees, _cone_dims(f), suspension_dims(A),
                   lambda m: {(k, 1 + k): _identity(A, m + 1 + k) for k in range(N - 1)})
    logger.debug("cone built with dims %s", list(C.dims))
    return Triangle(f, u, v, cone_blocks(f, C))


def cone_pushout_map(f: ChainMap) -> ChainMap:
    """psi_f: I(A) -> C(f), restricting to f on A and to Sigma rho on the rest"""
    A, B = f.source, f.target
    N = A.N

    def entries(m):
        out = {(0, 0): f.component(m)}
        for j in range(1, N):
            out[(j, j - 1)] = -A.d(m + j - 1)
            out[(j, j)] = _identity(A, m + j)
        return out

    I, _, _ = pi_hull(A)
    return _block_map(I, cone_complex(f), _window(A, B), _hull_dims(A), _cone_dims(f), entries)


def _cocone_dims(f: ChainMap) -> BlockDims:
    A, B = f.source, f.target
    return lambda m: _blocks(B, m - B.N + 1, B.N - 1) + [A.dim(m)]


def cocone(f: ChainMap) -> NComplex:
    """Sigma^-1 C(f)^m = B^{m-N+1} + ... + B^{m-1} + A^m"""
    A, B = f.source, f.target
    N = A.N

    def entries(m):
        out = {(j, 0): -power(B, m - N + 1, j + 1) for j in range(N - 1)}
        for k in range(1, N - 1):
            out[(k - 1, k)] = _identity(B, m - N + 1 + k)
        out[(N - 2, N - 1)] = f.component(m)
        out[(N - 1, N - 1)] = A.d(m)
        return out

    return _assemble(A, _window(A, B), _cocone_dims(f), entries)


def cocone_maps(f: ChainMap) -> Tuple[ChainMap, ChainMap, ChainMap]:
    """
    Maps around the cocone.

    Returns:
        Tuple of (Sigma^-1 B -> cocone, cocone -> A, phi_f: cocone -> P(B))
    """
    A, B = f.source, f.target
    N = A.N
    K = cocone(f)
    degrees = _window(A, B)
    inclusion = _block_map(cosuspend(B), K, degrees, cosuspension_dims(B), _cocone_dims(f),
                           lambda m: {(k, k): _identity(B, m - N + 1 + k) for k in range(N - 1)})
    projection = _block_map(K, A, degrees, _cocone_dims(f), lambda m: [A.dim(m)],
                            lambda m: {(0, N - 1): _identity(A, m)})
    P, eps, _ = pi_cover(B)

    def phi(m):
        out = {(0, 0): _identity(B, m - N + 1)}
        for j in range(1, N - 1):
            out[(j, j - 1)] = -B.d(m - N + j)
            out[(j, j)] = _identity(B, m - N + 1 + j)
        out[(N - 1, N - 2)] = -B.d(m - 1)
        out[(N - 1, N - 1)] = f.component(m)
        return out

    comparison = _block_map(K, P, degrees, _cocone_dims(f), _cover_dims(B), phi)
    return inclusion, projection, comparison


def sigma2_theta_iso(X: NComplex) -> ChainMap:
    """
    phi_X: Sigma X -> Theta^N Sigma^-1 X, lower unitriangular with d^{a-b} at (a, b).
    """
    N = X.N
    target = theta_shift(cosuspend(X), N)

    def entries(m):
        return {(a, b): power(X, m + 1 + b, a - b) for a in range(N - 1) for b in range(a + 1)}

    return _block_map(suspend(X), target, _window(X), suspension_dims(X), suspension_dims(X), entries)


def rotate(triangle: Triangle) -> bool:
    """Cone of u against Sigma A, compared up to homotopy"""
    from .homotopy import homotopy_equivalent

    rotated = cone(triangle.u).C
    shifted = suspend(triangle.A)
    return homotopy_equivalent(rotated, shifted) and homology_table(rotated) == homology_table(shifted)


def embed_ses_as_triangle(ses: ShortExactSeq) -> Tuple[Triangle, ChainMap, bool]:
    """
    Complete 0 -> X -> Y -> Z -> 0 to the cone triangle of X -> Y.

    Returns:
        Tuple of (cone triangle, comparison s: C(alpha) -> Z, whether s is a
        quasi-isomorphism)

    Raises:
        NotExact: the sequence is not degreewise exact
    """
    from .homology_qis import check_short_exact, is_qis

    check_short_exact(ses)
    triangle = cone(ses.alpha)
    Z = ses.right
    s = _block_map(triangle.C, Z, _window(ses.left, ses.middle, Z), _cone_dims(ses.alpha),
                   lambda m: [Z.dim(m)], lambda m: {(0, 0): ses.beta.component(m)})
    return triangle, s, is_qis(s)
