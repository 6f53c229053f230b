# Small builders shared by the test modules
from ncx.models.matrix import Matrix
from ncx.models.ncomplex import NComplex


def matrix(field, rows, cols=None):
    """Shorthand for Matrix.from_rows"""
    return Matrix.from_rows(field, rows, cols=cols)


def complex_from(N, field, min_degree, dims, diffs):
    """NComplex from nested Python lists"""
    maps = [matrix(field, d, cols=dims[k]) for k, d in enumerate(diffs)]
    return NComplex(N, field, min_degree, dims, maps)
