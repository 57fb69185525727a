import json

import pytest

from lamlab.tools.lamlab_server import app


@pytest.fixture
def client():
    app.config["TESTING"] = True
    return app.test_client()


def post(client, path, body):
    response = client.post(path, data=json.dumps(body), content_type="application/json")
    return response.status_code, json.loads(response.data.decode("utf-8"))


def test_index(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.data.decode("utf-8").startswith("lamlab ")


def test_reduce(client):
    status, record = post(client, "/reduce", {"expr": "S 0"})
    assert status == 200
    assert record["status"] == "NormalForm"
    assert record["final"] == r"\x.\f.f x"

    status, record = post(client, "/reduce", {"expr": r"(\x.x x) (\x.x x)", "fuel": 4})
    assert record["status"] == "FuelExhausted"
    assert record["fuel"] == 4


def test_equiv(client):
    assert post(client, "/equiv", {"left": "P 3", "right": "2"})[1]["verdict"] == "Equal"
    assert post(client, "/equiv", {"left": "S 1", "right": "2", "as_printed": True})[1]["verdict"] == "Distinct"


def test_star(client):
    assert post(client, "/star", {"type": "B"}) == (200, {"type": "forall X. ~X -> ~X -> ~X"})


def test_verify(client):
    status, record = post(client, "/verify", {"suite": "bool", "max_n": 1})
    assert status == 200
    assert record["passed"]
    assert all(claim["claim_id"].startswith("bool.") for claim in record["claims"])


@pytest.mark.parametrize("path,body,message", [
    ("/reduce", {"expr": "\\x."}, "parse error"),
    ("/reduce", {}, "missing field"),
    ("/reduce", {"expr": "a", "fuel": 0}, "fuel must be positive"),
    ("/verify", {"suite": "binary"}, "Unknown suite"),
])
def test_bad_requests(client, path, body, message):
    status, record = post(client, path, body)
    assert status == 400
    assert message in record["error"]
