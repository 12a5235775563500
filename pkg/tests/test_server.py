"""
HTTP service endpoints
"""

import pytest
from fastapi.testclient import TestClient  # type: ignore

from backend_server import app


@pytest.fixture
def client():
    return TestClient(app)


def test_root_lists_the_commands(client):
    response = client.get("/")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "running"
    assert "chow-sample" in body["commands"]


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "healthy"
    assert all(body["config_status"].values())


def test_run_returns_the_report(client):
    response = client.post("/api/run", json={"command": "semigroup", "args": ["--a", "3", "--c", "5"]})
    assert response.status_code == 200
    report = response.json()
    assert report["exit_code"] == 0
    assert report["data"]["gaps"] == [1, 2, 4, 7]


def test_no_answers_are_not_http_errors(client):
    response = client.post("/api/run", json={"command": "member", "args": ["--vars", "x", "--poly", "x", "--ideal", "x^2"]})
    assert response.status_code == 200
    assert response.json()["status"] == "no"


def test_unknown_command_is_404(client):
    assert client.post("/api/run", json={"command": "frobnicate"}).status_code == 404


def test_bad_input_is_400(client):
    response = client.post("/api/run", json={"command": "gb", "args": ["--ideal", "x +"]})
    assert response.status_code == 400
    assert response.json()["detail"]["data"]["error_type"] == "parse_error"
