"""
Property-based tests with hypothesis.

Inputs are seeds and small parameters; complexes come from the generator so
every case carries its hidden mu-decomposition.
"""
import json
from collections import Counter

import pytest
from hypothesis import HealthCheck, given, settings
import hypothesis.strategies as st

from ncx.models.matrix import Matrix
from ncx.services import linalg
from ncx.services.complexes import (decomposition_table, homology_table, identity_map, mu_decomposition,
                                    shift_table, theta_shift, validate)
from ncx.services.field_factory import FieldFactory
from ncx.services.generator import generate_random, generate_with_blocks, make_rng, random_chain_map, random_matrix
from ncx.services.homology_qis import acyclic, is_qis
from ncx.services.homotopy import homotopy_equivalent, validate_map
from ncx.services.repositories import ChainMapRepository, ComplexRepository
from ncx.services.triangles import cone, suspend_power
from ncx.services.truncation import agreement

pytestmark = [pytest.mark.properties, pytest.mark.slow]

fields = st.sampled_from(["q", "fp:2", "fp:3", "fp:5"]).map(FieldFactory.create_field)
Ns = st.integers(min_value=2, max_value=5)
seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)

checked = settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])


@checked
@given(field=fields, rows=st.integers(0, 4), cols=st.integers(0, 4), seed=seeds)
def test_rank_nullity(field, rows, cols, seed):
    A = random_matrix(field, rows, cols, make_rng(seed))
    assert linalg.rank(A) + linalg.kernel_basis(A).dim == cols
    assert linalg.image_basis(A).dim == linalg.rank(A)


@checked
@given(field=fields, values=st.lists(st.integers(-9, 9), min_size=4, max_size=4))
def test_two_by_two_inverse(field, values):
    A = Matrix.from_rows(field, [values[:2], values[2:]])
    if linalg.is_invertible(A):
        assert (A @ linalg.inverse(A)).is_identity()
    else:
        assert linalg.rank(A) < 2


@checked
@given(N=Ns, field=fields, seed=seeds)
def test_homology_matches_hidden_blocks(N, field, seed):
    X, blocks = generate_with_blocks(N, field, seed=seed)
    hidden = Counter()
    for t, s, m in blocks:
        hidden[(t, s)] += m
    assert validate(X)
    assert homology_table(X) == decomposition_table(dict(hidden), N)
    assert mu_decomposition(X) == dict(hidden)


@checked
@given(N=Ns, field=fields, seed=seeds, t=st.integers(-4, 4))
def test_theta_shift_moves_the_table(N, field, seed, t):
    X = generate_random(N, field, seed=seed)
    assert homology_table(theta_shift(X, t)) == shift_table(homology_table(X), t)


@checked
@given(N=Ns, field=fields, seed=seeds)
def test_sigma_squared(N, field, seed):
    X = generate_random(N, field, max_dim=2, window=4, seed=seed)
    assert homotopy_equivalent(suspend_power(X, 2, strict=True), theta_shift(X, N))


@checked
@given(N=Ns, field=fields, seed=seeds)
def test_identity_cone(N, field, seed):
    X = generate_random(N, field, seed=seed)
    assert is_qis(identity_map(X))
    assert acyclic(cone(identity_map(X)).C)


@checked
@given(N=st.integers(2, 4), field=fields, seed=seeds)
def test_random_maps_are_chain_maps(N, field, seed):
    X = generate_random(N, field, max_dim=2, window=4, seed=seed)
    Y = generate_random(N, field, max_dim=2, window=4, seed=seed + 1)
    f = random_chain_map(X, Y, seed=seed)
    assert validate_map(f)
    assert validate(cone(f).C)


@checked
@given(N=Ns, field=fields, seed=seeds, n=st.integers(-2, 6))
def test_truncations_agree(N, field, seed, n):
    X = generate_random(N, field, seed=seed)
    assert agreement(X, n, "le")
    assert agreement(X, n, "ge")


@checked
@given(N=Ns, field=fields, seed=seeds)
def test_complex_documents_round_trip(N, field, seed):
    X = generate_random(N, field, seed=seed)
    text = json.dumps(X.to_dict(), sort_keys=True)
    assert ComplexRepository().parse(json.loads(text)) == X


@checked
@given(N=st.integers(2, 4), field=fields, seed=seeds)
def test_chain_map_documents_round_trip(N, field, seed):
    X = generate_random(N, field, max_dim=2, window=4, seed=seed)
    Y = generate_random(N, field, max_dim=2, window=4, seed=seed + 1)
    f = random_chain_map(X, Y, seed=seed)
    text = json.dumps(f.to_dict(), sort_keys=True)
    loaded = ChainMapRepository().parse(json.loads(text))
    assert loaded == f
    assert loaded.to_dict() == f.to_dict()
