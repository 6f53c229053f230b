"""
Randomized self-test suite

Every property draws its inputs from the seeded generator, so a run with a
fixed seed and case count is reproducible. Results are published case by
case through a ResultNotifier; the caller decides which observers listen.
"""
import logging
from collections import Counter
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np

from ..errors import NcxError, PreconditionFailed
from ..models.chain_map import ChainMap
from ..models.field import FieldSpec
from ..models.matrix import Matrix
from ..models.ncomplex import NComplex
from ..models.sequences import ShortExactSeq
from . import linalg
from .complexes import (decomposition_table, homology, homology_table, identity_map, mu, mu_decomposition,
                        theta_shift, theta_shift_map, validate)
from .field_factory import FieldFactory
from .generator import generate_random, generate_with_blocks, make_rng, random_chain_map, random_elementary_input, \
    random_ses
from .homology_qis import (acyclic, elementary, les_single, les_ses, qis_by_cone, qis_by_homology, trunc_qis_check,
                           verify_elementary)
from .homotopy import compose, null_homotopy_witness, validate_map
from .mor_transport import mor_coverage, mor_table, nhn_check, qis_via_mor, sigma_mu_class
from .observer import LoggingObserver, ResultNotifier, TallyObserver
from .triangles import (cone, cone_complex, cosuspend, cosuspend_map, pi_cover, pi_hull, sigma2_theta_iso, suspend,
                        suspend_map)
from .truncation import agreement, sigma_ge, sigma_le, tau_ge, tau_le

logger = logging.getLogger(__name__)

PropertyCheck = Callable[[np.random.Generator, int, FieldSpec], Optional[str]]

DEFAULT_NS = (2, 3, 4, 5)
MAX_DIM = 2
WINDOW = 4
# inputs of the properties that solve large homotopy or cone systems
SMALL_WINDOW = 3


def _pair(rng: np.random.Generator, N: int, field: FieldSpec, max_dim: int = MAX_DIM, window: int = WINDOW):
    X = generate_random(N, field, max_dim, window, rng)
    Y = generate_random(N, field, max_dim, window, rng, offset=int(rng.integers(-1, 2)))
    return X, Y, random_chain_map(X, Y, rng)


def check_constructions_validate(rng, N, field):
    X, Y, f = _pair(rng, N, field)
    n = int(rng.integers(X.min_degree - 1, X.max_degree + 2))
    u, i = random_elementary_input(X, rng) if not X.is_zero() else (None, None)
    built = {
        "X": X,
        "Sigma": suspend(X),
        "Sigma^-1": cosuspend(X),
        "P": pi_cover(X)[0],
        "I": pi_hull(X)[0],
        "cone": cone_complex(f),
        "sigma_le": sigma_le(X, n),
        "sigma_ge": sigma_ge(X, n),
        "tau_le": tau_le(X, n),
        "tau_ge": tau_ge(X, n),
    }
    if u is not None:
        built["elementary"] = elementary(X, u, i)[0]
    for name, complex_ in built.items():
        try:
            validate(complex_)
        except NcxError as e:
            return f"{name}: {e}"
    return None


def check_contractible(rng, N, field):
    X = generate_random(N, field, MAX_DIM, SMALL_WINDOW, rng)
    s = int(rng.integers(-2, 3))
    candidates = {"mu_N": mu(N, N, s, int(rng.integers(1, 3)), field), "P": pi_cover(X)[0], "I": pi_hull(X)[0]}
    for name, complex_ in candidates.items():
        if null_homotopy_witness(identity_map(complex_)) is None:
            return f"identity of {name} is not null-homotopic"
    return None


def check_sigma2_theta(rng, N, field):
    X, Y, f = _pair(rng, N, field)
    phi_x, phi_y = sigma2_theta_iso(X), sigma2_theta_iso(Y)
    validate_map(phi_x)
    for k in phi_x.source.degrees():
        if not linalg.is_invertible(phi_x.component(k)):
            return f"phi_X not invertible at degree {k}"
    left = compose(phi_y, suspend_map(f))
    right = compose(theta_shift_map(cosuspend_map(f), N), phi_x)
    if left != right:
        return "naturality square does not commute"
    return None


def check_les_ses(rng, N, field):
    X, Y, f = _pair(rng, N, field, MAX_DIM, SMALL_WINDOW)
    report = les_ses(random_ses(Y, rng))
    if not report.exact:
        return f"random sequence: first failure {report.first_failure()}"
    triangle = cone(f)
    report = les_ses(ShortExactSeq(triangle.u, triangle.v))
    if not report.exact:
        return f"cone sequence: first failure {report.first_failure()}"
    return None


def check_les_single(rng, N, field):
    X = generate_random(N, field, MAX_DIM, WINDOW, rng)
    for ell in range(1, N):
        for m in range(1, N - ell):
            report = les_single(X, ell, m)
            if not report.exact:
                return f"l={ell}, m={m}: first failure {report.first_failure()}"
    return None


def check_qis_cone(rng, N, field):
    X, Y, f = _pair(rng, N, field, MAX_DIM, SMALL_WINDOW)
    maps = [f]
    if not X.is_zero():
        u, i = random_elementary_input(X, rng, surjective=True)
        maps.append(elementary(X, u, i)[1])
    for g in maps:
        if qis_by_homology(g) != qis_by_cone(g):
            return f"homology and cone criteria disagree on {g!r}"
    return None


def check_elementary(rng, N, field):
    X = generate_random(N, field, MAX_DIM, SMALL_WINDOW, rng)
    if X.is_zero():
        return None
    surjective = [None, True, False][int(rng.integers(0, 3))]
    u, i = random_elementary_input(X, rng, surjective=surjective)
    report = verify_elementary(X, u, i)
    if not report.equivalent:
        return f"conditions disagree: {report.to_dict()}"
    if not report.pullback_law_holds:
        return f"pasting law fails: {report.pullback_pairs}"
    return None


def check_nhn(rng, N, field):
    X = generate_random(N, field, MAX_DIM, WINDOW, rng)
    for i in range(X.min_degree - 1, X.max_degree + 2):
        for r in range(1, N):
            if not nhn_check(X, i, r):
                return f"Hom_K(mu, X) and H^{i}_({r}) differ"
    return None


def check_truncations(rng, N, field):
    X = generate_random(N, field, MAX_DIM, SMALL_WINDOW, rng)
    n = int(rng.integers(X.min_degree - 1, X.max_degree + 2))
    for side in ("le", "ge"):
        if not agreement(X, n, side):
            return f"sigma_{side}({n}) homology disagrees in its range"
    table = homology_table(X)
    top = max((i for i, _ in table), default=X.min_degree - 1) + 1
    try:
        if not trunc_qis_check(X, top):
            return f"inclusion of sigma_le({top}) is not a quasi-isomorphism"
    except PreconditionFailed as e:
        return str(e)
    return None


def check_mor(rng, N, field):
    X, Y, f = _pair(rng, N, field)
    if qis_via_mor(f) != qis_by_homology(f):
        return "qis via Mor disagrees with qis via homology"
    mor_coverage(X)
    if acyclic(X) != (not mor_table(X)):
        return "acyclicity and vanishing of every Mor object disagree"
    return None


def check_sigma_mu(rng, N, field):
    r = int(rng.integers(1, N))
    j = int(rng.integers(-4, 5))
    result = sigma_mu_class(j, r, N, field, strict=True)
    if not result.matches:
        return f"Sigma^{j} mu_{r}: predicted {result.predicted}, computed {result.computed}"
    return None


def check_generator_oracle(rng, N, field):
    X, blocks = generate_with_blocks(N, field, MAX_DIM, WINDOW, rng)
    hidden: Counter = Counter()
    for t, s, m in blocks:
        hidden[(t, s)] += m
    if homology_table(X) != decomposition_table(dict(hidden), N):
        return "homology table differs from the hidden blocks"
    if mu_decomposition(X) != {key: m for key, m in sorted(hidden.items())}:
        return "rank formula does not recover the hidden blocks"
    return None


def classical_cone(f: ChainMap) -> NComplex:
    """Cone of an ordinary chain map: B^m + A^{m+1} with d = [[d_B, f], [0, -d_A]]"""
    A, B = f.source, f.target
    field = A.field
    degrees = range(min(A.min_degree, B.min_degree) - 2, max(A.max_degree, B.max_degree) + 2)
    dims = {m: B.dim(m) + A.dim(m + 1) for m in degrees}
    diffs = {m: Matrix.block(field, [B.dim(m + 1), A.dim(m + 2)], [B.dim(m), A.dim(m + 1)],
                             {(0, 0): B.d(m), (0, 1): f.component(m + 1), (1, 1): -A.d(m + 1)})
             for m in degrees}
    return NComplex.from_maps(2, field, dims, diffs)


def classical_shift(X: NComplex) -> NComplex:
    """X[1]: X^{m+1} with differential -d"""
    degrees = range(X.min_degree - 2, X.max_degree + 1)
    return NComplex.from_maps(2, X.field, {m: X.dim(m + 1) for m in degrees}, {m: -X.d(m + 1) for m in degrees})


def check_classical(rng, N, field):
    X = generate_random(2, field, MAX_DIM + 1, WINDOW + 2, rng)
    for i in X.degrees():
        expected = X.dim(i) - linalg.rank(X.d(i)) - linalg.rank(X.d(i - 1))
        if homology(X, i, 1).dim != expected:
            return f"H^{i} differs from ker/im"
    if suspend(X) != classical_shift(X):
        return "suspension differs from X[1]"
    if suspend(suspend(X)) != theta_shift(X, 2):
        return "double suspension differs from the shift by two"
    Y = generate_random(2, field, MAX_DIM, WINDOW, rng, offset=int(rng.integers(-1, 2)))
    f = random_chain_map(X, Y, rng)
    if cone_complex(f) != classical_cone(f):
        return "cone differs from the classical mapping cone"
    return None


PROPERTIES: Dict[str, PropertyCheck] = {
    "constructions_validate": check_constructions_validate,
    "contractible": check_contractible,
    "sigma2_theta": check_sigma2_theta,
    "les_ses": check_les_ses,
    "les_single": check_les_single,
    "qis_cone": check_qis_cone,
    "elementary": check_elementary,
    "nhn": check_nhn,
    "truncations": check_truncations,
    "mor": check_mor,
    "sigma_mu": check_sigma_mu,
    "generator_oracle": check_generator_oracle,
    "classical": check_classical,
}


def default_fields() -> List[FieldSpec]:
    return [FieldFactory.create_field("q"), FieldFactory.create_field("fp:5")]


def run_selftest(seed: int, cases: int, properties: Optional[Iterable[str]] = None,
                 notifier: Optional[ResultNotifier] = None, Ns: Sequence[int] = DEFAULT_NS,
                 fields: Optional[Sequence[FieldSpec]] = None) -> Dict:
    """
    Run every selected property on `cases` random inputs.

    Case k of a property uses N = Ns[k % len(Ns)] and alternates fields. The
    inputs of a case depend only on (seed, property, k).

    Returns:
        {"seed", "cases", "passed": bool, "summary": {property: counts}, "failures": [...]}
    """
    names = list(properties or PROPERTIES)
    unknown = [name for name in names if name not in PROPERTIES]
    if unknown:
        raise ValueError(f"Unknown properties: {', '.join(unknown)}")
    fields = list(fields or default_fields())
    notifier = notifier or ResultNotifier()
    tally = TallyObserver()
    notifier.add_observer(tally)
    if not any(isinstance(o, LoggingObserver) for o in notifier.observers):
        notifier.add_observer(LoggingObserver())
    order = list(PROPERTIES)
    for name in names:
        logger.info("selftest property %s: %d cases", name, cases)
        for k in range(cases):
            rng = make_rng([seed, order.index(name), k])
            N = Ns[k % len(Ns)]
            field = fields[(k // len(Ns)) % len(fields)]
            try:
                detail = PROPERTIES[name](rng, N, field)
            except NcxError as e:
                detail = f"{type(e).__name__}: {e}"
            except Exception as e:
                logger.exception("selftest property %s case %d raised", name, k)
                detail = f"{type(e).__name__}: {e}"
            notifier.notify_all(name, k, detail is None, detail or "")
    notifier.remove_observer(tally)
    return {
        "seed": seed,
        "cases": cases,
        "passed": tally.all_passed(),
        "summary": tally.summary(),
        "failures": tally.failures,
    }
