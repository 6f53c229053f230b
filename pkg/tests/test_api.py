"""
Integration tests for the HTTP API.
"""
import pytest

from app import create_app

pytestmark = pytest.mark.integration


@pytest.fixture
def client():
    app = create_app()
    app.config["TESTING"] = True
    with app.test_client() as client:
        yield client


class TestHealth:
    """Test cases for the status endpoint."""

    def test_health(self, client):
        response = client.get("/api/health")
        assert response.status_code == 200
        data = response.get_json()
        assert data["status"] == "ok"
        assert data["default_field"] == "q"
        assert data["pipeline"]["total_handlers"] == 4

    def test_commands_are_counted(self, client, complex_document):
        client.post("/api/homology", json=complex_document)
        assert client.get("/api/health").get_json()["commands_run"] == 1


class TestComplexEndpoints:
    """Endpoints that take a complex document."""

    def test_homology(self, client, complex_document):
        response = client.post("/api/homology", json=complex_document)
        assert response.status_code == 200
        data = response.get_json()
        assert data["message"] == "Homology computed"
        assert data["result"] == {"N": 3, "table": {"0,2": 1, "1,1": 1}}

    def test_single_group(self, client, complex_document):
        response = client.post("/api/homology?degree=0&amplitude=2", json=complex_document)
        assert response.status_code == 200
        assert response.get_json()["result"]["dim"] == 1

    def test_domain_error_is_422(self, client, complex_document):
        response = client.post("/api/homology?degree=0&amplitude=3", json=complex_document)
        assert response.status_code == 422
        assert response.get_json()["error"].startswith("InvalidAmplitude")

    def test_parse_error_is_400(self, client, complex_document):
        response = client.post("/api/homology", json=dict(complex_document, diffs=[[["one"]]]))
        assert response.status_code == 400
        assert response.get_json()["error"].startswith("body: /diffs/0/0/0: ")

    def test_bad_query_is_400(self, client, complex_document):
        response = client.post("/api/homology?degree=zero", json=complex_document)
        assert response.status_code == 400
        assert "must be an integer" in response.get_json()["error"]

    def test_body_must_be_json(self, client):
        response = client.post("/api/homology", data="not json", content_type="text/plain")
        assert response.status_code == 400

    def test_validate_reports_invalid_complex(self, client):
        document = {"N": 2, "field": {"kind": "Q"}, "min_degree": 0, "dims": [1, 1, 1],
                    "diffs": [[["1"]], [["1"]]]}
        response = client.post("/api/validate", json=document)
        assert response.status_code == 200
        assert response.get_json()["result"]["valid"] is False

    def test_validate_kind(self, client, complex_document):
        response = client.post("/api/validate?kind=square", json=complex_document)
        assert response.status_code == 400

    def test_suspend(self, client, complex_document):
        response = client.post("/api/suspend?times=-1", json=complex_document)
        assert response.status_code == 200
        result = response.get_json()["result"]
        assert result["min_degree"] == 1
        assert result["dims"] == [1, 2, 1]

    def test_mor(self, client, complex_document):
        response = client.post("/api/mor?j=-1", json=complex_document)
        assert response.status_code == 200
        records = response.get_json()["result"]["records"]
        assert [record["j"] for record in records] == [-1]

    def test_nhn(self, client, complex_document):
        response = client.post("/api/nhn", json=complex_document)
        assert response.get_json()["result"]["holds"] is True


class TestChainMapEndpoints:
    """Endpoints that take a chain map document."""

    def test_validate_chain_map(self, client, identity_map_document):
        response = client.post("/api/validate?kind=chain_map", json=identity_map_document)
        assert response.get_json()["result"] == {"valid": True}

    def test_cone(self, client, identity_map_document):
        response = client.post("/api/cone", json=identity_map_document)
        assert response.status_code == 200
        assert set(response.get_json()["result"]) == {"A", "B", "C"}

    def test_qis(self, client, identity_map_document):
        response = client.post("/api/qis", json=identity_map_document)
        assert response.get_json()["result"]["qis"] is True


class TestMuEndpoint:
    """Building mu_r^s from query parameters."""

    def test_mu(self, client, complex_document):
        response = client.get("/api/mu?N=3&r=2&s=1")
        assert response.status_code == 200
        assert response.get_json()["result"] == complex_document

    def test_mu_over_fp(self, client):
        response = client.get("/api/mu?N=2&r=1&s=0&dim=2&field=fp:7")
        assert response.get_json()["result"]["field"] == {"kind": "Fp", "p": 7}

    def test_missing_parameter(self, client):
        response = client.get("/api/mu?N=3&r=2")
        assert response.status_code == 400
        assert "s is required" in response.get_json()["error"]

    def test_bad_field(self, client):
        assert client.get("/api/mu?N=3&r=1&s=0&field=fp:4").status_code == 400

    def test_amplitude_out_of_range(self, client):
        assert client.get("/api/mu?N=3&r=0&s=0").status_code == 422
