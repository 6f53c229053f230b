# Smart and brutal truncations of N-complexes
import logging
from typing import Dict, Tuple

from ..models.chain_map import ChainMap
from ..models.matrix import Subspace
from ..models.ncomplex import NComplex
from . import linalg
from .complexes import boundaries, cycles, homology_table, quotient_complex, subcomplex

logger = logging.getLogger(__name__)


def sigma_le_subspaces(X: NComplex, n: int) -> Dict[int, Subspace]:
    """Degree n-j carries Z^{n-j}_(j+1) for 0 <= j <= N-2, X below, zero above n"""
    spaces = {}
    for k in X.degrees():
        if k > n:
            spaces[k] = linalg.zero_subspace(X.field, X.dim(k))
        elif k >= n - X.N + 2:
            spaces[k] = cycles(X, k, n - k + 1)
        else:
            spaces[k] = linalg.full_subspace(X.field, X.dim(k))
    return spaces


def sigma_ge_subspaces(X: NComplex, n: int) -> Dict[int, Subspace]:
    """Subcomplex killed by sigma_ge: B^k_(N-1-(n-k)) near n, everything below"""
    spaces = {}
    for k in X.degrees():
        if k > n:
            spaces[k] = linalg.zero_subspace(X.field, X.dim(k))
        elif k >= n - X.N + 2:
            spaces[k] = boundaries(X, k, X.N - 1 - (n - k))
        else:
            spaces[k] = linalg.full_subspace(X.field, X.dim(k))
    return spaces


def sigma_le_with_inclusion(X: NComplex, n: int) -> Tuple[NComplex, ChainMap]:
    return subcomplex(X, sigma_le_subspaces(X, n))


def sigma_ge_with_projection(X: NComplex, n: int) -> Tuple[NComplex, ChainMap]:
    return quotient_complex(X, sigma_ge_subspaces(X, n))


def sigma_le(X: NComplex, n: int) -> NComplex:
    """... -> Z^{n-N+2}_(N-1) -> ... -> Z^n_(1) -> 0"""
    return sigma_le_with_inclusion(X, n)[0]


def sigma_ge(X: NComplex, n: int) -> NComplex:
    """0 -> C^{n-N+2}_(1) -> ... -> C^n_(N-1) -> X^{n+1} -> ..."""
    return sigma_ge_with_projection(X, n)[0]


def _window(X: NComplex, lo: int, hi: int) -> NComplex:
    lo, hi = max(lo, X.min_degree), min(hi, X.max_degree)
    if X.is_zero() or lo > hi:
        return NComplex.zero(X.N, X.field)
    dims = [X.dim(i) for i in range(lo, hi + 1)]
    diffs = [X.d(i) for i in range(lo, hi)]
    return NComplex(X.N, X.field, lo, dims, diffs)


def tau_le(X: NComplex, n: int) -> NComplex:
    """Brutal truncation keeping degrees <= n"""
    return _window(X, X.min_degree, n)


def tau_ge(X: NComplex, n: int) -> NComplex:
    """Brutal truncation keeping degrees >= n"""
    return _window(X, n, X.max_degree)


def agreement(X: NComplex, n: int, side: str) -> bool:
    """
    Compare homology of a smart truncation with that of X where they must agree.

    Args:
        side: "le" compares degrees i <= n-N+1, "ge" compares degrees i >= n+N-2

    Returns:
        True if the dimensions agree on the whole range
    """
    if side == "le":
        T, keep = sigma_le(X, n), (lambda i: i <= n - X.N + 1)
    elif side == "ge":
        T, keep = sigma_ge(X, n), (lambda i: i >= n + X.N - 2)
    else:
        raise ValueError(f"Unknown truncation side: {side}")
    ours = {key: v for key, v in homology_table(T).items() if keep(key[0])}
    theirs = {key: v for key, v in homology_table(X).items() if keep(key[0])}
    if ours != theirs:
        logger.debug("sigma_%s at n=%d differs: %s vs %s", side, n, ours, theirs)
    return ours == theirs
