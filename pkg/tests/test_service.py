"""HTTP service: endpoint contracts, session stepping, undo, eviction."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from saf import io_formats
from saf.service import create_app


@pytest.fixture
def client():
    app = create_app(validate_states=True)
    return TestClient(app)


def upload(client, framework, fmt="tgf"):
    content = io_formats.emit_framework(framework, fmt)
    resp = client.post("/api/frameworks", json={"format": fmt, "content": content})
    assert resp.status_code == 201
    return resp.json()


def test_upload_returns_snapshot(client, three_class):
    body = upload(client, three_class)
    assert body["args"] == list(three_class.names)
    assert ["a", "a"] in body["attacks"]
    assert len(body["attacks"]) == 15


def test_upload_rejects_bad_content(client):
    resp = client.post("/api/frameworks", json={"format": "tgf", "content": "a\nb\n"})
    assert resp.status_code == 400
    resp = client.post("/api/frameworks", json={"format": 3, "content": "x"})
    assert resp.status_code == 400
    resp = client.post("/api/frameworks", content=b"not json")
    assert resp.status_code == 400


def test_unknown_ids_are_404(client):
    assert client.get("/api/frameworks/xx/initial-sets").status_code == 404
    assert client.post("/api/sessions/xx/undo").status_code == 404
    assert client.get("/api/sessions/xx/sequence").status_code == 404
    resp = client.post("/api/sessions", json={"frameworkId": "xx", "semantics": "pr"})
    assert resp.status_code == 404


def test_initial_sets_endpoint(client, three_class):
    fid = upload(client, three_class)["id"]
    resp = client.get(f"/api/frameworks/{fid}/initial-sets")
    assert resp.status_code == 200
    by_set = {tuple(e["set"]): e for e in resp.json()["initial_sets"]}
    assert by_set[("e", "i")]["class"] == "challenged"
    assert by_set[("e", "i")]["conflicts"] == [["d", "j"]]


def test_extensions_endpoint_with_witnesses(client, skeptical_gap):
    fid = upload(client, skeptical_gap)["id"]
    resp = client.get(f"/api/frameworks/{fid}/extensions", params={"semantics": "uc"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["semantics"] == "unchallenged"
    assert [e["extension"] for e in body["extensions"]] == [["d", "f"]]
    seq = body["extensions"][0]["sequence"]
    assert seq["extension"] == ["d", "f"]
    assert len(seq["steps"]) == 2
    resp = client.get(f"/api/frameworks/{fid}/extensions", params={"semantics": "zz"})
    assert resp.status_code == 422


def test_decompose_endpoint(client, three_class):
    fid = upload(client, three_class)["id"]
    good = client.post(
        f"/api/frameworks/{fid}/decompose", json={"extension": ["b", "e", "f", "h", "i"]}
    )
    assert good.status_code == 200
    record = good.json()
    assert record["extension"] == ["b", "e", "f", "h", "i"]
    bad = client.post(f"/api/frameworks/{fid}/decompose", json={"extension": ["e"]})
    assert bad.status_code == 422
    unknown = client.post(f"/api/frameworks/{fid}/decompose", json={"extension": ["zz"]})
    assert unknown.status_code == 422
    malformed = client.post(f"/api/frameworks/{fid}/decompose", json={"extension": "e"})
    assert malformed.status_code == 400


def test_session_walkthrough(client, skeptical_gap):
    fid = upload(client, skeptical_gap)["id"]
    resp = client.post("/api/sessions", json={"frameworkId": fid, "semantics": "uc"})
    assert resp.status_code == 201
    sid = resp.json()["sessionId"]
    state = resp.json()["state"]
    assert [c["set"] for c in state["choices"]] == [["d"], ["f"]]
    assert state["terminal"] is False

    state = client.post(f"/api/sessions/{sid}/step", json={"select": ["d"]}).json()["state"]
    assert [c["set"] for c in state["choices"]] == [["f"]]
    assert state["terminal"] is False
    assert [c["class"] for c in state["choices"]] == ["unattacked"]

    state = client.post(f"/api/sessions/{sid}/step", json={"select": ["f"]}).json()["state"]
    assert state["accumulated"] == ["d", "f"]
    assert state["terminal"] is True
    # a terminal session's accumulated set is one of the preset's extensions
    from saf import serial

    extensions = serial.enumerate_extensions(skeptical_gap, serial.preset("uc"))
    assert skeptical_gap.set_of(*state["accumulated"]) in extensions

    seq = client.get(f"/api/sessions/{sid}/sequence").json()
    assert seq["extension"] == ["d", "f"]
    assert [s["select"] for s in seq["steps"]] == [["d"], ["f"]]

    undone = client.post(f"/api/sessions/{sid}/undo")
    assert undone.status_code == 200
    assert undone.json()["state"]["accumulated"] == ["d"]
    client.post(f"/api/sessions/{sid}/undo")
    final = client.post(f"/api/sessions/{sid}/undo")
    assert final.status_code == 409


def test_step_rejections(client, three_class, cycle_mutual):
    fid = upload(client, three_class)["id"]
    sid = client.post(
        "/api/sessions", json={"frameworkId": fid, "semantics": "pr"}
    ).json()["sessionId"]
    resp = client.post(f"/api/sessions/{sid}/step", json={"select": []})
    assert resp.status_code == 422 and resp.json()["reason"] == "empty"
    resp = client.post(f"/api/sessions/{sid}/step", json={"select": ["e"]})
    assert resp.status_code == 422 and resp.json()["reason"] == "not-admissible"
    resp = client.post(f"/api/sessions/{sid}/step", json={"select": ["zz"]})
    assert resp.status_code == 422
    resp = client.post(f"/api/sessions/{sid}/step", json={"select": 5})
    assert resp.status_code == 400

    fid2 = upload(client, cycle_mutual, fmt="apx")["id"]
    sid2 = client.post(
        "/api/sessions", json={"frameworkId": fid2, "semantics": "gr"}
    ).json()["sessionId"]
    resp = client.post(f"/api/sessions/{sid2}/step", json={"select": ["e"]})
    assert resp.status_code == 422 and resp.json()["reason"] == "not-eligible"


def test_session_ttl_eviction(three_class):
    now = [0.0]
    app = create_app(ttl_seconds=10.0, clock=lambda: now[0])
    client = TestClient(app)
    fid = upload(client, three_class)["id"]
    sid = client.post(
        "/api/sessions", json={"frameworkId": fid, "semantics": "gr"}
    ).json()["sessionId"]
    now[0] = 5.0
    assert client.get(f"/api/sessions/{sid}/sequence").status_code == 200
    now[0] = 14.0
    assert client.get(f"/api/sessions/{sid}/sequence").status_code == 200  # refreshed at 5.0
    now[0] = 30.0
    assert client.get(f"/api/sessions/{sid}/sequence").status_code == 404


def test_root_serves_a_page(client):
    resp = client.get("/")
    assert resp.status_code == 200


def test_service_bound(three_class):
    app = create_app(bound=3)
    client = TestClient(app)
    fid = upload(client, three_class)["id"]
    assert client.get(f"/api/frameworks/{fid}/initial-sets").status_code == 422
