"""
Unit tests for the N-complex model and amplitude homology.
"""
import pytest

from ncx.errors import DimensionMismatch, InconsistencyError, InvalidAmplitude, InvalidParameters, NPowerNonzero
from ncx.models.matrix import Matrix
from ncx.models.ncomplex import NComplex
from ncx.services import complexes
from ncx.services.complexes import (cok, cycle_differentials_surjective, direct_sum, homology, homology_table,
                                    identity_map, induced_map, mu, mu_decomposition, mu_homology_table, power,
                                    theta_shift, validate)
from tests.helpers import complex_from, matrix

pytestmark = pytest.mark.unit


class TestNComplexModel:
    """Construction rules of NComplex."""

    def test_zero_ends_are_trimmed(self, Q):
        X = NComplex(3, Q, -1, [0, 1, 0], [Matrix.zeros(Q, 1, 0), Matrix.zeros(Q, 0, 1)])
        assert X.min_degree == 0
        assert X.dims == (1,)
        assert X == mu(3, 1, 0, 1, Q)

    def test_zero_complex(self, Q):
        Z = NComplex.zero(4, Q)
        assert Z.is_zero()
        assert list(Z.degrees()) == []
        assert Z.dim(7) == 0

    def test_needs_N_at_least_two(self, Q):
        with pytest.raises(InvalidParameters, match="N must be an integer >= 2"):
            NComplex(1, Q, 0, [1], [])

    def test_differential_count(self, Q):
        with pytest.raises(DimensionMismatch, match="need 1 differentials"):
            NComplex(2, Q, 0, [1, 1], [])

    def test_differential_shape(self, Q):
        with pytest.raises(DimensionMismatch, match="expected"):
            NComplex(2, Q, 0, [1, 2], [matrix(Q, [[1]])])

    def test_outside_support(self, two_step_q):
        assert two_step_q.dim(-5) == 0
        assert two_step_q.d(5).shape == (0, 0)
        assert two_step_q.d(-1).shape == (1, 0)

    def test_to_dict(self, Q, complex_document):
        assert mu(3, 2, 1, 1, Q).to_dict() == complex_document
        assert NComplex.from_dict(complex_document, Q) == mu(3, 2, 1, 1, Q)


class TestValidation:
    """d^N = 0 and powers of d."""

    def test_valid_complex(self, two_step_q):
        assert validate(two_step_q) is True

    def test_nilpotency_failure_reports_degree(self, Q):
        X = complex_from(2, Q, 3, [1, 1, 1], [[[1]], [[1]]])
        with pytest.raises(NPowerNonzero) as info:
            validate(X)
        assert info.value.degree == 3

    def test_mu_of_full_length_is_valid(self, field):
        for N in (2, 3, 4):
            assert validate(mu(N, N, 0, 2, field))

    def test_identities_too_long(self, Q):
        X = complex_from(3, Q, 0, [1, 1, 1, 1], [[[1]], [[1]], [[1]]])
        with pytest.raises(NPowerNonzero):
            validate(X)

    def test_power(self, Q):
        X = complex_from(3, Q, 0, [1, 1, 1], [[[2]], [[3]]])
        assert power(X, 0, 0).is_identity()
        assert power(X, 0, 2) == matrix(Q, [[6]])
        assert power(X, 1, 1) == matrix(Q, [[3]])
        with pytest.raises(InvalidAmplitude):
            power(X, 0, -1)


class TestBuildingBlocks:
    """mu_r^s and the degree shift."""

    def test_mu_layout(self, Q):
        X = mu(4, 3, 5, 2, Q)
        assert X.min_degree == 3
        assert X.dims == (2, 2, 2)
        assert all(d.is_identity() for d in X.diffs)

    @pytest.mark.parametrize("r", [0, 4])
    def test_mu_amplitude_range(self, Q, r):
        with pytest.raises(InvalidAmplitude):
            mu(3, r, 0, 1, Q)

    def test_mu_negative_dimension(self, Q):
        with pytest.raises(InvalidParameters):
            mu(3, 1, 0, -1, Q)

    def test_theta_shift_lowers_degrees(self, Q):
        assert theta_shift(mu(3, 2, 1, 1, Q), 2) == mu(3, 2, -1, 1, Q)
        assert theta_shift(theta_shift(mu(3, 2, 1, 1, Q), 2), -2) == mu(3, 2, 1, 1, Q)

    def test_direct_sum(self, Q, two_step_q):
        total = direct_sum(mu(3, 2, 1, 1, Q), mu(3, 1, 2, 1, Q))
        assert total.dims == (1, 1, 1)
        assert homology_table(total) == homology_table(two_step_q)


class TestHomology:
    """H^i_(r) = Z^i_(r) / B^i_(N-r)."""

    def test_mu_table(self, Q):
        assert homology_table(mu(3, 2, 1, 1, Q)) == {(0, 2): 1, (1, 1): 1}

    def test_contractible_mu_has_no_homology(self, field):
        for N in (2, 3, 5):
            assert homology_table(mu(N, N, 1, 2, field)) == {}

    @pytest.mark.parametrize("N", [2, 3, 4, 5])
    def test_mu_table_closed_form(self, Q, N):
        for r in range(1, N + 1):
            for s in (-1, 0, 2):
                assert homology_table(mu(N, r, s, 1, Q)) == mu_homology_table(r, s, N)

    def test_two_step_table(self, two_step_q):
        assert homology_table(two_step_q) == {(0, 2): 1, (1, 1): 1, (2, 1): 1, (2, 2): 1}

    def test_classical_case(self, Q):
        X = complex_from(2, Q, 0, [2, 1], [[[1, 0]]])
        assert homology_table(X) == {(0, 1): 1}

    def test_table_depends_on_field(self, Q, F5):
        rows = [[1, 2], [3, 1]]
        assert homology_table(complex_from(2, Q, 0, [2, 2], [rows])) == {}
        assert homology_table(complex_from(2, F5, 0, [2, 2], [rows])) == {(0, 1): 1, (1, 1): 1}

    @pytest.mark.parametrize("r", [0, 3])
    def test_amplitude_range(self, Q, r):
        with pytest.raises(InvalidAmplitude):
            homology(mu(3, 2, 1, 1, Q), 0, r)

    def test_cycles_accept_amplitude_N(self, two_step_q):
        assert complexes.cycles(two_step_q, 0, 3).is_full()

    def test_group_bases(self, Q):
        X = mu(3, 2, 1, 1, Q)
        group = homology(X, 0, 2)
        assert group.dim == 1
        assert group.to_dict() == {"degree": 0, "amplitude": 2, "dim": 1, "cycles_dim": 1, "boundaries_dim": 0}
        assert group.classify(group.representatives).is_identity()

    def test_not_an_n_complex(self, Q):
        X = complex_from(2, Q, 0, [1, 1, 1], [[[1]], [[1]]])
        with pytest.raises(InconsistencyError, match="validate the complex first"):
            homology(X, 1, 1)

    def test_cokernels(self, Q):
        X = mu(3, 2, 1, 1, Q)
        assert cok(X, 1, 1).dim == 0
        assert cok(X, 0, 1).dim == 1

    def test_identity_induces_identity(self, two_step_q):
        group = homology(two_step_q, 2, 1)
        f = identity_map(two_step_q)
        assert induced_map(f.component(2), group, group).is_identity()


class TestDecomposition:
    """mu-decomposition by the rank formula."""

    def test_two_step(self, two_step_q):
        assert mu_decomposition(two_step_q) == {(2, 1): 1, (1, 2): 1}

    def test_contractibility_criterion(self, Q):
        assert cycle_differentials_surjective(mu(3, 3, 0, 1, Q))
        assert not cycle_differentials_surjective(mu(3, 2, 1, 1, Q))

    def test_decomposition_table_matches(self, two_step_q):
        decomposition = mu_decomposition(two_step_q)
        assert complexes.decomposition_table(decomposition, 3) == homology_table(two_step_q)

    def test_mu_sum(self, Q):
        X = complexes.mu_sum(3, Q, [(3, 2, 1), (1, 4, 2)])
        assert mu_decomposition(X) == {(3, 2): 1, (1, 4): 2}
