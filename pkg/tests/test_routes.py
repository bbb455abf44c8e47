import pytest
from fastapi.testclient import TestClient

from main import app

FOUR_CYCLE = {"m": 4, "minimal_nonfaces": [[0, 2], [1, 3]]}
SQUARE = {"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}
PENTAGON_RAYS = {"dim": 2, "points": [[1, 0], [3, 10], [-4, 3], [-4, -3], [3, -10]]}


@pytest.fixture
def client():
    return TestClient(app)


def test_dual(client):
    response = client.post("/complexes/dual", json=FOUR_CYCLE)
    assert response.status_code == 200
    assert response.json() == {"m": 4, "maximal_faces": [[0, 2], [1, 3]]}


def test_dual_of_full_simplex(client):
    response = client.post("/complexes/dual", json={"m": 3, "maximal_faces": [[0, 1, 2]]})
    assert response.status_code == 400
    assert response.json()["detail"] == "dual undefined for the full simplex"


def test_complex_needs_one_generator(client):
    response = client.post("/complexes/dual", json={"m": 3})
    assert response.status_code == 422


def test_vertex_out_of_range(client):
    response = client.post("/complexes/f-vector", json={"m": 2, "maximal_faces": [[0, 4]]})
    assert response.status_code == 422


def test_link_of_nonface(client):
    response = client.post("/complexes/link", json={"complex": FOUR_CYCLE, "face": [0, 2]})
    assert response.status_code == 400


def test_homology(client):
    response = client.post("/complexes/homology", json={"complex": FOUR_CYCLE, "field": "q"})
    assert response.status_code == 200
    assert response.json() == {"field": "q", "betti": {"1": 1}}


def test_square_facets_and_gale(client):
    facets = client.post("/polytopes/facets", json=SQUARE).json()
    assert facets == {"dimension": 2, "facets": [[0, 1], [1, 2], [0, 3], [2, 3]]}
    gale = client.post("/polytopes/gale", json=SQUARE).json()
    assert gale == {"dim": 1, "points": [["1"], ["-1"], ["1"], ["-1"]]}
    assert client.post("/polytopes/gale-alexander", json=SQUARE).json() == {"holds": True}


def test_rational_coordinates(client):
    response = client.post("/polytopes/facets", json={"vertices": [["0", "0"], ["1/2", "0"], ["0", "1/3"]]})
    assert response.status_code == 200
    assert len(response.json()["facets"]) == 3


def test_interior_point(client):
    response = client.post("/polytopes/facets", json={"vertices": [[0, 0], [4, 0], [0, 4], [1, 1]]})
    assert response.status_code == 422
    assert "point 3" in response.json()["detail"]


def test_configuration_properties(client):
    response = client.post("/configurations/properties", json=PENTAGON_RAYS)
    assert response.json() == {"covers_sphere": True, "good": True, "nondegenerate": True}


def test_hochster(client):
    response = client.post("/betti/hochster", json={"complex": FOUR_CYCLE})
    assert response.json() == {
        "field": "gf2",
        "m": 4,
        "entries": [
            {"i": 0, "deg": 0, "value": 1},
            {"i": 1, "deg": 4, "value": 2},
            {"i": 2, "deg": 8, "value": 1},
        ],
    }


def test_linear_resolution(client):
    body = {"complex": {"m": 5, "minimal_nonfaces": [[0, 1, 3], [1, 2, 4], [0, 2, 3], [1, 3, 4], [0, 2, 4]]}, "r": 1}
    assert client.post("/betti/linear-resolution", json=body).json() == {"r": 1, "linear": True}


def test_real_invariant(client):
    response = client.post("/buchstaber/real", json={"complex": FOUR_CYCLE})
    data = response.json()
    assert data["value"] == 2
    assert data["exact"] is True
    assert len(data["witness"]["rows"]) == 4


def test_xi_rank_cap(client):
    response = client.post("/buchstaber/xi", json={"complex": FOUR_CYCLE, "k": 9})
    assert response.status_code == 400


def test_fano(client):
    assert client.get("/buchstaber/fano").json() == {"colorings": 128, "with_single_colored_line": 128, "holds": True}


def test_coloring(client):
    data = client.post("/buchstaber/coloring", json={"k": 3, "colors": 2}).json()
    assert data["found"] is False
    assert "colors" not in data


def test_verify_lists_suites(client):
    names = client.get("/verify").json()
    assert "fano" in names and "corpus" in names


def test_verify_one_suite(client):
    reports = client.get("/verify/fano").json()
    assert reports == [{"name": "fano", "passed": True, "checks": 3, "skipped": 0, "failures": []}]


def test_verify_unknown_suite(client):
    assert client.get("/verify/nope").status_code == 422
