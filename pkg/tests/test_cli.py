"""
Integration tests for the command-line front end.
"""
import json

import pytest

from ncx.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, main

pytestmark = pytest.mark.integration


@pytest.fixture
def write_json(tmp_path):
    def write(name, document):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSuccessfulVerbs:
    """Exit code 0 and the printed payload."""

    def test_mu(self, capsys, complex_document):
        code, out, _ = run(capsys, "mu", "--N", "3", "--r", "2", "--s", "1")
        assert code == EXIT_OK
        assert json.loads(out) == complex_document

    def test_homology(self, capsys, write_json, complex_document):
        path = write_json("x.json", complex_document)
        code, out, _ = run(capsys, "homology", path)
        assert code == EXIT_OK
        assert json.loads(out) == {"N": 3, "table": {"0,2": 1, "1,1": 1}}

    def test_text_format(self, capsys, write_json, complex_document):
        path = write_json("x.json", complex_document)
        code, out, _ = run(capsys, "homology", path, "--format", "text")
        assert code == EXIT_OK
        lines = dict(line.split(None, 1) for line in out.splitlines())
        assert lines["table.0,2"] == "1"
        assert lines["N"] == "3"

    def test_out_file(self, capsys, tmp_path, write_json, complex_document):
        path = write_json("x.json", complex_document)
        target = tmp_path / "result.json"
        code, out, _ = run(capsys, "decompose", path, "--out", str(target))
        assert code == EXIT_OK
        assert out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["blocks"] == [{"t": 2, "s": 1, "multiplicity": 1}]

    def test_chain_map_verbs(self, capsys, write_json, identity_map_document):
        path = write_json("f.json", identity_map_document)
        code, out, _ = run(capsys, "qis", path)
        assert code == EXIT_OK
        assert json.loads(out)["qis"] is True
        code, out, _ = run(capsys, "validate", path, "--map")
        assert code == EXIT_OK
        assert json.loads(out) == {"valid": True}

    def test_generate_then_homology(self, capsys, write_json):
        code, out, _ = run(capsys, "generate", "--N", "3", "--seed", "4", "--field", "fp:5")
        assert code == EXIT_OK
        generated = json.loads(out)
        path = write_json("g.json", generated["complex"])
        code, _, _ = run(capsys, "homology", path)
        assert code == EXIT_OK

    def test_small_selftest(self, capsys):
        code, out, _ = run(capsys, "selftest", "--cases", "2", "--property", "classical", "--N", "2")
        assert code == EXIT_OK
        assert json.loads(out)["passed"] is True


class TestFailures:
    """Exit codes 1 and 2."""

    def test_invalid_complex_exits_one(self, capsys, write_json):
        document = {"N": 2, "field": {"kind": "Q"}, "min_degree": 0, "dims": [1, 1, 1],
                    "diffs": [[["1"]], [["1"]]]}
        path = write_json("bad.json", document)
        code, out, _ = run(capsys, "validate", path)
        assert code == EXIT_DOMAIN
        payload = json.loads(out)
        assert payload["valid"] is False
        assert payload["degree"] == 0

    def test_domain_error(self, capsys, write_json, complex_document):
        path = write_json("x.json", complex_document)
        code, _, err = run(capsys, "homology", path, "--degree", "0", "--amplitude", "3")
        assert code == EXIT_DOMAIN
        assert "InvalidAmplitude" in err

    def test_parse_error_location(self, capsys, write_json, complex_document):
        path = write_json("x.json", dict(complex_document, diffs=[[["0.5"]]]))
        code, _, err = run(capsys, "homology", path)
        assert code == EXIT_USAGE
        assert f"{path}: /diffs/0/0/0: " in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "homology", str(tmp_path / "nope.json"))
        assert code == EXIT_USAGE
        assert "cannot read file" in err

    @pytest.mark.parametrize("argv", [
        [],
        ["mu", "--N", "3"],
        ["frobnicate"],
        ["mu", "--N", "3", "--r", "1", "--s", "0", "--field", "fp:4"],
        ["selftest", "--seed", "-1"],
        ["homology", "x.json", "--format", "yaml"],
    ])
    def test_usage_errors(self, capsys, argv):
        code, _, _ = run(capsys, *argv)
        assert code == EXIT_USAGE

    def test_help_exits_zero(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == EXIT_OK
        assert "ncx" in out
