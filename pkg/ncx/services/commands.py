# Simple command pattern for the ncx verbs
import logging

from ..errors import InvalidParameters, NcxError
from ..models.chain_map import ChainMap
from . import complexes, homology_qis, homotopy, mor_transport, triangles, truncation
from .generator import generate_with_blocks
from .selftest import run_selftest

logger = logging.getLogger(__name__)


def table_payload(table):
    """Homology table as {"i,r": dim}"""
    return {f"{i},{r}": dim for (i, r), dim in table.items()}


def decomposition_payload(decomposition):
    return [{"t": t, "s": s, "multiplicity": m} for (t, s), m in sorted(decomposition.items())]


class Command:
    """Base command class"""
    name = None

    def __init__(self):
        self.ok = True

    def execute(self):
        pass


class ValidateCommand(Command):
    """d^N = 0 for a complex, commutation for a chain map; failures are data"""
    name = "validate"

    def __init__(self, model):
        super().__init__()
        self.model = model

    def execute(self):
        try:
            if isinstance(self.model, ChainMap):
                homotopy.validate_map(self.model)
            else:
                complexes.validate(self.model)
        except NcxError as e:
            self.ok = False
            return {"valid": False, "error": type(e).__name__, "degree": getattr(e, "degree", None),
                    "message": str(e)}
        return {"valid": True}


class HomologyCommand(Command):
    name = "homology"

    def __init__(self, X, degree=None, amplitude=None):
        super().__init__()
        self.X, self.degree, self.amplitude = X, degree, amplitude

    def execute(self):
        if self.degree is not None and self.amplitude is not None:
            return complexes.homology(self.X, self.degree, self.amplitude).to_dict()
        return {"N": self.X.N, "table": table_payload(complexes.homology_table(self.X))}


class ConeCommand(Command):
    name = "cone"

    def __init__(self, f):
        super().__init__()
        self.f = f

    def execute(self):
        homotopy.validate_map(self.f)
        return triangles.cone(self.f).to_dict()


class SuspendCommand(Command):
    """Sigma^times X; times = -1 is the cosuspension"""
    name = "suspend"

    def __init__(self, X, times=1, strict=False):
        super().__init__()
        self.X, self.times, self.strict = X, times, strict

    def execute(self):
        if self.times == 1:
            return triangles.suspend(self.X).to_dict()
        if self.times == -1:
            return triangles.cosuspend(self.X).to_dict()
        return triangles.suspend_power(self.X, self.times, strict=self.strict).to_dict()


class CoverCommand(Command):
    """P(X) with epsilon and rho, or I(X) with its two maps"""

    def __init__(self, X, hull=False):
        super().__init__()
        self.X, self.hull = X, hull
        self.name = "ihull" if hull else "pcover"

    def execute(self):
        if self.hull:
            I, sigma_eps, sigma_rho = triangles.pi_hull(self.X)
            return {"I": I.to_dict(), "sigma_epsilon": sigma_eps.to_dict(), "sigma_rho": sigma_rho.to_dict()}
        P, eps, rho = triangles.pi_cover(self.X)
        return {"P": P.to_dict(), "epsilon": eps.to_dict(), "rho": rho.to_dict()}


class ShiftCommand(Command):
    name = "shift"

    def __init__(self, X, by):
        super().__init__()
        self.X, self.by = X, by

    def execute(self):
        return complexes.theta_shift(self.X, self.by).to_dict()


class MuCommand(Command):
    name = "mu"

    def __init__(self, N, r, s, dim, field):
        super().__init__()
        self.N, self.r, self.s, self.dim, self.field = N, r, s, dim, field

    def execute(self):
        return complexes.mu(self.N, self.r, self.s, self.dim, self.field).to_dict()


class NullHomotopyCommand(Command):
    name = "nullhomotopy"

    def __init__(self, f, convention="full"):
        super().__init__()
        self.f, self.convention = f, convention

    def execute(self):
        homotopy.validate_map(self.f)
        witness = homotopy.null_homotopy_witness(self.f, self.convention)
        return {
            "null_homotopic": witness is not None,
            "witness": witness.to_dict() if witness is not None else None,
        }


class HomDimCommand(Command):
    name = "homdim"

    def __init__(self, X, Y, convention="full"):
        super().__init__()
        self.X, self.Y, self.convention = X, Y, convention

    def execute(self):
        chain_maps = homotopy.chainmap_space_dim(self.X, self.Y)
        null = homotopy.null_homotopic_dim(self.X, self.Y, self.convention)
        return {"chain_maps": chain_maps, "null_homotopic": null, "hom_k": chain_maps - null,
                "convention": self.convention}


class QisCommand(Command):
    name = "qis"

    def __init__(self, f):
        super().__init__()
        self.f = f

    def execute(self):
        homotopy.validate_map(self.f)
        return {
            "qis": homology_qis.is_qis(self.f),
            "cone_acyclic": homology_qis.qis_by_cone(self.f),
            "via_mor": mor_transport.qis_via_mor(self.f),
        }


class LesSingleCommand(Command):
    name = "les-single"

    def __init__(self, X, ell, m):
        super().__init__()
        self.X, self.ell, self.m = X, ell, m

    def execute(self):
        return homology_qis.les_single(self.X, self.ell, self.m).to_dict()


class LesSesCommand(Command):
    name = "les-ses"

    def __init__(self, ses):
        super().__init__()
        self.ses = ses

    def execute(self):
        return homology_qis.les_ses(self.ses).to_dict()


class ElementaryCommand(Command):
    name = "elementary"

    def __init__(self, X, u, degree):
        super().__init__()
        self.X, self.u, self.degree = X, u, degree

    def execute(self):
        Y, p = homology_qis.elementary(self.X, self.u, self.degree)
        report = homology_qis.verify_elementary(self.X, self.u, self.degree)
        return {"complex": Y.to_dict(), "map": p.to_dict(), "report": report.to_dict()}


class ExactSquareCommand(Command):
    name = "exact-square-check"

    def __init__(self, square):
        super().__init__()
        self.square = square

    def execute(self):
        return {"label": self.square.label, "exact": homology_qis.is_exact_square(self.square)}


TRUNCATIONS = {
    "sigma_le": truncation.sigma_le,
    "sigma_ge": truncation.sigma_ge,
    "tau_le": truncation.tau_le,
    "tau_ge": truncation.tau_ge,
}


class TruncateCommand(Command):
    name = "truncate"

    def __init__(self, X, n, kind):
        super().__init__()
        if kind not in TRUNCATIONS:
            raise InvalidParameters(f"Unknown truncation: {kind}")
        self.X, self.n, self.kind = X, n, kind

    def execute(self):
        payload = {"complex": TRUNCATIONS[self.kind](self.X, self.n).to_dict(), "kind": self.kind, "n": self.n}
        if self.kind in ("sigma_le", "sigma_ge"):
            payload["homology_agrees"] = truncation.agreement(self.X, self.n, self.kind[-2:])
        return payload


class MorCommand(Command):
    name = "mor"

    def __init__(self, X, j=None):
        super().__init__()
        self.X, self.j = X, j

    def execute(self):
        window = [self.j] if self.j is not None else list(mor_transport.mor_window(self.X))
        records = [{"j": j, "mor": mor_transport.mor_homology(self.X, j).to_dict()} for j in window]
        return {"records": records, "coverage": mor_transport.mor_coverage(self.X)}


class NhnCommand(Command):
    name = "nhn"

    def __init__(self, X, degree=None, amplitude=None):
        super().__init__()
        self.X, self.degree, self.amplitude = X, degree, amplitude

    def execute(self):
        if self.degree is not None and self.amplitude is not None:
            keys = [(self.degree, self.amplitude)]
        else:
            keys = [(i, r) for i in self.X.degrees() for r in range(1, self.X.N)]
        rows = []
        for i, r in keys:
            hom_k, dim = mor_transport.nhn_sides(self.X, i, r)
            rows.append({"degree": i, "amplitude": r, "hom_k": hom_k, "homology": dim, "holds": hom_k == dim})
        return {"checks": rows, "holds": all(row["holds"] for row in rows)}


class Smcatcp2Command(Command):
    name = "smcatcp2"

    def __init__(self, N, i, dim, field):
        super().__init__()
        self.N, self.i, self.dim, self.field = N, i, dim, field

    def execute(self):
        report = mor_transport.smcatcp2_check(self.dim, self.N, self.i, self.field)
        payload = report.to_dict()
        payload["holds"] = {
            f"{statement}/{reading}": report.holds(statement, reading)
            for statement, reading in sorted({(c.statement, c.reading) for c in report.checks})
        }
        return payload


class SigmaMuCommand(Command):
    name = "sigma-mu"

    def __init__(self, N, r, j, field, strict=False):
        super().__init__()
        self.N, self.r, self.j, self.field, self.strict = N, r, j, field, strict

    def execute(self):
        return mor_transport.sigma_mu_class(self.j, self.r, self.N, self.field, self.strict).to_dict()


class DecomposeCommand(Command):
    name = "decompose"

    def __init__(self, X):
        super().__init__()
        self.X = X

    def execute(self):
        decomposition = complexes.mu_decomposition(self.X)
        return {"blocks": decomposition_payload(decomposition),
                "contractible": homotopy.is_contractible(self.X)}


class GenerateCommand(Command):
    name = "generate"

    def __init__(self, N, field, seed, max_dim=3, window=5):
        super().__init__()
        self.N, self.field, self.seed, self.max_dim, self.window = N, field, seed, max_dim, window

    def execute(self):
        X, blocks = generate_with_blocks(self.N, self.field, self.max_dim, self.window, self.seed)
        return {"complex": X.to_dict(), "blocks": [list(b) for b in blocks]}


class SelftestCommand(Command):
    name = "selftest"

    def __init__(self, seed, cases, properties=None, notifier=None, fields=None, Ns=None):
        super().__init__()
        self.seed, self.cases, self.properties = seed, cases, properties
        self.notifier, self.fields, self.Ns = notifier, fields, Ns

    def execute(self):
        kwargs = {"Ns": self.Ns} if self.Ns else {}
        result = run_selftest(self.seed, self.cases, self.properties, self.notifier, fields=self.fields, **kwargs)
        self.ok = result["passed"]
        return result


class CommandInvoker:
    """Executes commands"""
    def __init__(self):
        self.history = []

    def execute_command(self, command):
        logger.info("running %s", command.name)
        result = command.execute()
        self.history.append(command)
        return result
