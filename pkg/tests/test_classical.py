"""
N = 2 against a separate classical implementation.

For ordinary complexes H^i_(1) = ker d^i / im d^{i-1}, the cone of f: A -> B
is B^m + A^{m+1} with d = [[d_B, f], [0, -d_A]], the shift X[1] carries -d,
and a short exact sequence gives the long sequence with the snake connecting
map. Everything below works on plain Python lists and does not touch
ncx.services.linalg.
"""
import pytest

from ncx.services.complexes import homology, homology_table, theta_shift
from ncx.services.generator import generate_random, random_chain_map, random_ses
from ncx.services.homology_qis import les_ses
from ncx.services.triangles import cone, suspend

pytestmark = pytest.mark.unit


def plain_rref(field, rows, width):
    rows = [[field.coerce(x) for x in row] for row in rows]
    pivots = []
    for col in range(width):
        top = len(pivots)
        pivot = next((k for k in range(top, len(rows)) if rows[k][col] != 0), None)
        if pivot is None:
            continue
        rows[top], rows[pivot] = rows[pivot], rows[top]
        scale = field.inverse(rows[top][col])
        rows[top] = [field.coerce(x * scale) for x in rows[top]]
        for k in range(len(rows)):
            if k != top and rows[k][col] != 0:
                factor = rows[k][col]
                rows[k] = [field.coerce(a - factor * b) for a, b in zip(rows[k], rows[top])]
        pivots.append(col)
    return rows, pivots


def plain_rank(field, rows):
    width = len(rows[0]) if rows else 0
    return len(plain_rref(field, rows, width)[1])


def columns(M):
    rows = M.to_rows()
    return [[row[j] for row in rows] for j in range(M.cols)]


def apply(field, M, v):
    return [field.coerce(sum((a * b for a, b in zip(row, v)), field.coerce(0))) for row in M.to_rows()]


def kernel(field, M):
    R, pivots = plain_rref(field, M.to_rows(), M.cols)
    basis = []
    for free in (c for c in range(M.cols) if c not in pivots):
        v = [field.coerce(0)] * M.cols
        v[free] = field.coerce(1)
        for row, p in enumerate(pivots):
            v[p] = field.coerce(-R[row][free])
        basis.append(v)
    return basis


def solve(field, M, b):
    augmented = [row + [value] for row, value in zip(M.to_rows(), b)]
    R, pivots = plain_rref(field, augmented, M.cols + 1)
    if M.cols in pivots:
        return None
    x = [field.coerce(0)] * M.cols
    for row, p in enumerate(pivots):
        x[p] = R[row][M.cols]
    return x


def relative_rank(field, vectors, boundaries):
    return plain_rank(field, vectors + boundaries) - plain_rank(field, boundaries)


def classical_homology_dim(field, X, i):
    return len(kernel(field, X.d(i))) - plain_rank(field, columns(X.d(i - 1)))


def classical_induced_rank(field, f, i):
    images = [apply(field, f.component(i), z) for z in kernel(field, f.source.d(i))]
    return relative_rank(field, images, columns(f.target.d(i - 1)))


def classical_connecting_rank(field, ses, i):
    """Rank of delta: H^i(C) -> H^{i+1}(A), lifting through beta and pulling back through alpha"""
    A, B, C = ses.left, ses.middle, ses.right
    pulled = []
    for z in kernel(field, C.d(i)):
        b = solve(field, ses.beta.component(i), z)
        a = solve(field, ses.alpha.component(i + 1), apply(field, B.d(i), b))
        assert a is not None
        pulled.append(a)
    return relative_rank(field, pulled, columns(A.d(i)))


@pytest.mark.parametrize("seed", range(50))
def test_homology_is_ker_mod_im(field, seed):
    X = generate_random(2, field, max_dim=4, window=7, seed=seed)
    for i in range(X.min_degree - 1, X.max_degree + 2):
        expected = X.dim(i) - plain_rank(field, X.d(i).to_rows()) - plain_rank(field, X.d(i - 1).to_rows())
        assert homology(X, i, 1).dim == expected
        assert classical_homology_dim(field, X, i) == expected


def test_table_keys_use_amplitude_one(Q):
    X = generate_random(2, Q, seed=7)
    assert all(r == 1 for _, r in homology_table(X))


class TestClassicalConstructions:
    """Cone and shift agree entry by entry with the textbook formulas."""

    @pytest.mark.parametrize("seed", range(100))
    def test_mapping_cone(self, field, seed):
        A = generate_random(2, field, max_dim=3, window=5, seed=seed)
        B = generate_random(2, field, max_dim=3, window=5, seed=seed + 1000, offset=seed % 3 - 1)
        f = random_chain_map(A, B, seed)
        C = cone(f).C
        for m in range(min(A.min_degree, B.min_degree) - 2, max(A.max_degree, B.max_degree) + 2):
            assert C.dim(m) == B.dim(m) + A.dim(m + 1)
            top = [dB + fm for dB, fm in zip(B.d(m).to_rows(), f.component(m + 1).to_rows())]
            bottom = [[field.coerce(0)] * B.dim(m) + [field.coerce(-x) for x in row]
                      for row in A.d(m + 1).to_rows()]
            assert C.d(m).to_rows() == top + bottom

    @pytest.mark.parametrize("seed", range(100))
    def test_shift(self, field, seed):
        X = generate_random(2, field, max_dim=3, window=5, seed=seed)
        S = suspend(X)
        for m in range(X.min_degree - 2, X.max_degree + 1):
            assert S.dim(m) == X.dim(m + 1)
            assert S.d(m).to_rows() == [[field.coerce(-x) for x in row] for row in X.d(m + 1).to_rows()]
        assert suspend(S) == theta_shift(X, 2)


class TestClassicalLongExactSequence:
    """les_ses against ranks of the classical induced and connecting maps."""

    @pytest.mark.parametrize("seed", range(100))
    def test_ses_sequence(self, field, seed):
        Y = generate_random(2, field, max_dim=3, window=5, seed=seed)
        ses = random_ses(Y, seed)
        report = les_ses(ses)
        assert report.exact
        for node in report.nodes:
            i = node.degree
            if node.object == "X":
                expected = (classical_homology_dim(field, ses.left, i), classical_connecting_rank(field, ses, i - 1))
            elif node.object == "Y":
                expected = (classical_homology_dim(field, ses.middle, i), classical_induced_rank(field, ses.alpha, i))
            else:
                expected = (classical_homology_dim(field, ses.right, i), classical_induced_rank(field, ses.beta, i))
            assert (node.dim, node.rank_in) == expected
