"""
Unit tests for chain maps, null-homotopies and Hom_K dimensions.
"""
import pytest

from ncx.errors import CommutationFailure, CompositionMismatch, FieldMismatch, InvalidParameters, ModulusMismatch
from ncx.models.chain_map import ChainMap
from ncx.models.matrix import Matrix
from ncx.services import homotopy
from ncx.services.complexes import direct_sum, homology, identity_map, mu, zero_map
from ncx.services.generator import generate_random, random_chain_map
from ncx.services.triangles import pi_cover
from tests.helpers import matrix

pytestmark = pytest.mark.unit


class TestChainMaps:
    """Commutation, composition and the space of chain maps."""

    def test_identity_commutes(self, two_step_q):
        assert homotopy.validate_map(identity_map(two_step_q))

    def test_commutation_failure_reports_degree(self, Q):
        X = mu(3, 2, 1, 1, Q)
        f = ChainMap(X, X, {0: matrix(Q, [[1]]), 1: matrix(Q, [[2]])})
        with pytest.raises(CommutationFailure) as info:
            homotopy.validate_map(f)
        assert info.value.degree == 0

    def test_compose(self, Q):
        X = mu(3, 2, 1, 1, Q)
        double = ChainMap(X, X, {0: matrix(Q, [[2]]), 1: matrix(Q, [[2]])})
        assert homotopy.compose(double, double) == homotopy.scale_map(identity_map(X), 4)
        assert homotopy.add_maps(double, double) == homotopy.compose(double, double)

    def test_compose_mismatch(self, Q):
        f = identity_map(mu(3, 2, 1, 1, Q))
        g = identity_map(mu(3, 1, 0, 1, Q))
        with pytest.raises(CompositionMismatch):
            homotopy.compose(g, f)

    def test_chain_map_space(self, Q, two_step_q):
        point = mu(3, 1, 0, 1, Q)
        assert homotopy.chainmap_space_dim(point, point) == 1
        basis = homotopy.chain_map_basis(two_step_q, two_step_q)
        assert len(basis) == homotopy.chainmap_space_dim(two_step_q, two_step_q)
        for f in basis:
            assert homotopy.validate_map(f)

    def test_random_chain_maps_commute(self, field):
        for seed in range(3):
            X = generate_random(3, field, seed=seed)
            Y = generate_random(3, field, seed=seed + 10)
            assert homotopy.validate_map(random_chain_map(X, Y, seed))

    def test_categories_must_match(self, Q, F5):
        with pytest.raises(ModulusMismatch):
            homotopy.homK_dim(mu(3, 1, 0, 1, Q), mu(2, 1, 0, 1, Q))
        with pytest.raises(FieldMismatch):
            homotopy.homK_dim(mu(3, 1, 0, 1, Q), mu(3, 1, 0, 1, F5))


class TestNullHomotopy:
    """Witnesses under the full and the printed convention."""

    @pytest.mark.parametrize("N", [2, 3, 4, 5])
    def test_mu_N_is_contractible(self, field, N):
        X = mu(N, N, 1, 2, field)
        witness = homotopy.null_homotopy_witness(identity_map(X))
        assert witness is not None
        assert homotopy.apply_homotopy(witness) == identity_map(X)
        assert homotopy.is_contractible(X)

    @pytest.mark.parametrize("seed", range(5))
    def test_cover_is_contractible(self, field, seed):
        X = generate_random(3, field, max_dim=2, window=4, seed=seed)
        P, _, rho = pi_cover(X)
        witness = homotopy.null_homotopy_witness(identity_map(P))
        assert witness is not None
        assert homotopy.apply_homotopy(witness) == identity_map(P)
        assert homotopy.is_null_homotopic(rho)

    @pytest.mark.parametrize("N,m", [(2, 1), (3, 1), (3, 2), (4, 2)])
    def test_witness_between_different_complexes(self, Q, N, m):
        X = mu(N, N, 0, m, Q)
        Y = direct_sum(X, mu(N, 1, 3, 1, Q))
        f = ChainMap(X, Y, {i: Matrix.identity(Q, X.dim(i)) for i in X.degrees()})
        witness = homotopy.null_homotopy_witness(f)
        assert witness is not None
        assert homotopy.apply_homotopy(witness) == f

    def test_point_is_not_contractible(self, Q):
        X = mu(3, 1, 0, 1, Q)
        assert homotopy.null_homotopy_witness(identity_map(X)) is None
        assert not homotopy.is_contractible(X)

    def test_zero_map_is_null_homotopic(self, two_step_q):
        assert homotopy.is_null_homotopic(zero_map(two_step_q, two_step_q))

    def test_witness_serializes(self, Q):
        X = mu(2, 2, 0, 1, Q)
        witness = homotopy.null_homotopy_witness(identity_map(X))
        data = witness.to_dict()
        assert data["convention"] == "full"
        assert set(data["maps"]) <= {"-1", "0"}

    def test_printed_convention_is_weaker(self, Q):
        X = mu(2, 2, 0, 1, Q)
        assert homotopy.is_null_homotopic(identity_map(X), "full")
        assert not homotopy.is_null_homotopic(identity_map(X), "printed")
        assert homotopy.null_homotopic_dim(X, X, "full") == 1
        assert homotopy.null_homotopic_dim(X, X, "printed") == 0

    def test_unknown_convention(self, Q):
        X = mu(2, 2, 0, 1, Q)
        with pytest.raises(InvalidParameters, match="Unknown homotopy convention"):
            homotopy.null_homotopic_dim(X, X, "sideways")


class TestHomK:
    """dim Hom_K and homotopy equivalence."""

    def test_point(self, Q):
        point = mu(3, 1, 0, 1, Q)
        assert homotopy.homK_dim(point, point) == 1

    def test_contractible_source(self, Q, two_step_q):
        assert homotopy.homK_dim(mu(3, 3, 2, 1, Q), two_step_q) == 0
        assert homotopy.homK_dim(two_step_q, mu(3, 3, 1, 2, Q)) == 0

    @pytest.mark.parametrize("i,r", [(0, 1), (0, 2), (1, 1), (1, 2), (2, 1), (2, 2), (3, 1)])
    def test_hom_from_mu_counts_homology(self, two_step_q, i, r):
        test_object = mu(3, r, i + r - 1, 1, two_step_q.field)
        assert homotopy.homK_dim(test_object, two_step_q) == homology(two_step_q, i, r).dim

    def test_homotopy_equivalence_ignores_contractible_summands(self, Q, two_step_q):
        padded = direct_sum(two_step_q, mu(3, 3, 4, 2, Q))
        assert homotopy.homotopy_equivalent(padded, two_step_q)
        assert not homotopy.homotopy_equivalent(padded, mu(3, 2, 1, 1, Q))
        assert homotopy.essential_decomposition(padded) == {(2, 1): 1, (1, 2): 1}


class TestFactorization:
    """Solving f = h o g and f = g o h."""

    def test_factor_through_identity(self, two_step_q):
        f = identity_map(two_step_q)
        assert homotopy.factors_through(f, f, "after") == f
        assert homotopy.factors_through(f, f, "before") == f

    def test_no_factorization_through_zero(self, Q):
        X = mu(3, 1, 0, 1, Q)
        assert homotopy.factors_through(identity_map(X), zero_map(X, X)) is None

    def test_unknown_side(self, two_step_q):
        f = identity_map(two_step_q)
        with pytest.raises(InvalidParameters):
            homotopy.factors_through(f, f, "sideways")
