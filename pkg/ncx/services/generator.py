"""
Random generators with known ground truth

Complexes are direct sums of randomly placed mu_t^s blocks, conjugated
degreewise by random invertible matrices, so every generated complex carries
its own mu-decomposition as an independent oracle. All randomness flows
through numpy's Generator; draws are converted to Python ints before they
reach the exact arithmetic.
"""
import logging
from typing import List, Optional, Tuple, Union

import numpy as np

from ..errors import InvalidParameters
from ..models.chain_map import ChainMap
from ..models.field import FieldSpec
from ..models.matrix import Matrix
from ..models.ncomplex import NComplex
from ..models.sequences import ShortExactSeq
from . import linalg
from .complexes import mu_sum, quotient_complex, subcomplex
from .homotopy import add_maps, chain_map_basis, scale_map

logger = logging.getLogger(__name__)

Block = Tuple[int, int, int]
Seed = Union[int, np.random.Generator, None]


def make_rng(seed: Seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_matrix(field: FieldSpec, rows: int, cols: int, rng: np.random.Generator) -> Matrix:
    values = [[field.random_element(rng) for _ in range(cols)] for _ in range(rows)]
    return Matrix.from_rows(field, values, cols=cols)


def random_invertible(field: FieldSpec, n: int, rng: np.random.Generator) -> Matrix:
    while True:
        candidate = random_matrix(field, n, n, rng)
        if linalg.is_invertible(candidate):
            return candidate


def random_surjection(field: FieldSpec, rows: int, cols: int, rng: np.random.Generator) -> Matrix:
    """A rows x cols matrix of full row rank; needs cols >= rows"""
    if cols < rows:
        raise InvalidParameters(f"no surjection from dimension {cols} onto {rows}")
    while True:
        candidate = random_matrix(field, rows, cols, rng)
        if linalg.rank(candidate) == rows:
            return candidate


def random_blocks(N: int, max_dim: int, window: int, rng: np.random.Generator) -> List[Block]:
    """mu blocks (t, s, m) fitting in degrees 0..window-1 with every dimension <= max_dim"""
    if N < 2 or max_dim < 0 or window < 1:
        raise InvalidParameters(f"bad generator parameters N={N}, max_dim={max_dim}, window={window}")
    used = [0] * window
    blocks = []
    for _ in range(int(rng.integers(1, 2 * window + 1))):
        t = int(rng.integers(1, min(N, window) + 1))
        s = int(rng.integers(t - 1, window))
        m = int(rng.integers(1, 3))
        span = range(s - t + 1, s + 1)
        if any(used[k] + m > max_dim for k in span):
            continue
        for k in span:
            used[k] += m
        blocks.append((t, s, m))
    return blocks


def conjugate(X: NComplex, rng: np.random.Generator) -> NComplex:
    """X with a random change of basis in every degree"""
    changes = {k: random_invertible(X.field, X.dim(k), rng) for k in X.degrees()}
    diffs = [
        changes[k + 1] @ X.d(k) @ linalg.inverse(changes[k])
        for k in range(X.min_degree, X.max_degree)
    ]
    return NComplex(X.N, X.field, X.min_degree, X.dims, diffs)


def generate_with_blocks(N: int, field: FieldSpec, max_dim: int = 3, window: int = 5,
                         seed: Seed = None, offset: int = 0) -> Tuple[NComplex, List[Block]]:
    """
    Random N-complex supported in degrees offset..offset+window-1.

    Returns:
        Tuple of (complex, hidden mu blocks as (t, s, m) with s already offset)
    """
    rng = make_rng(seed)
    blocks = [(t, s + offset, m) for t, s, m in random_blocks(N, max_dim, window, rng)]
    X = conjugate(mu_sum(N, field, blocks), rng)
    logger.debug("generated complex %r from %d blocks", X, len(blocks))
    return X, blocks


def generate_random(N: int, field: FieldSpec, max_dim: int = 3, window: int = 5,
                    seed: Seed = None, offset: int = 0) -> NComplex:
    return generate_with_blocks(N, field, max_dim, window, seed, offset)[0]


def random_chain_map(X: NComplex, Y: NComplex, seed: Seed = None) -> ChainMap:
    """Random combination of a basis of the chain maps X -> Y"""
    rng = make_rng(seed)
    total = ChainMap(X, Y, {})
    for f in chain_map_basis(X, Y):
        total = add_maps(total, scale_map(f, X.field.random_element(rng)))
    return total


def random_ses(Y: NComplex, seed: Seed = None, max_dim: int = 2, window: Optional[int] = None) -> ShortExactSeq:
    """0 -> im f -> Y -> Y / im f -> 0 for a random chain map f into Y"""
    rng = make_rng(seed)
    if Y.is_zero():
        W = Y
    else:
        length = window or len(Y.dims)
        W = generate_random(Y.N, Y.field, max_dim, length, rng, offset=Y.min_degree)
    f = random_chain_map(W, Y, rng)
    images = {i: linalg.image_basis(f.component(i)) for i in Y.degrees()}
    _, alpha = subcomplex(Y, images)
    _, beta = quotient_complex(Y, images)
    return ShortExactSeq(alpha, beta)


def random_elementary_input(X: NComplex, seed: Seed = None, surjective: Optional[bool] = None,
                            max_dim: int = 3) -> Tuple[Matrix, int]:
    """
    A degree i in the support and a map u into X^i.

    Args:
        surjective: force u onto (True), force u = 0 (False) or draw freely (None)
    """
    rng = make_rng(seed)
    if X.is_zero():
        raise InvalidParameters("elementary morphisms need a nonzero complex")
    i = int(rng.integers(X.min_degree, X.max_degree + 1))
    n = X.dim(i)
    if surjective is True:
        m = int(rng.integers(n, n + 2))
        return random_surjection(X.field, n, m, rng), i
    m = int(rng.integers(0, max_dim + 1))
    if surjective is False:
        return Matrix.zeros(X.field, n, m), i
    return random_matrix(X.field, n, m, rng), i
