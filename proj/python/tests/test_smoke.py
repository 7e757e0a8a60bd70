import pytest

import cartan_odd as co


def test_build_and_dims():
    g = co.build("m", 1, 5)
    assert g.dim == 20
    assert g.graded_dims() == [1, 2, 3, 4, 4, 3, 2, 1]
    s = co.build("sm", 2, 5, kappa=1)
    assert s.kind == "sm" and s.kappa == 1
    assert s.lsa.verify_jacobi()


def test_export_roundtrip():
    g = co.build("sm", 1, 7, kappa=0)
    doc = co.export(g)
    assert set(doc) >= {"basis", "parity", "degree", "sc", "pmap", "p", "labels"}
    back = co.import_json(g.lsa.to_json())
    assert back.dim == g.dim
    assert back.labels == g.lsa.labels
    assert all(back.bracket(i, j) == g.lsa.bracket(i, j) for i in range(g.dim) for j in range(g.dim))
    assert back.to_json() == g.lsa.to_json()
    with pytest.raises(ValueError):
        co.import_json("{}")


def test_characters():
    g = co.build("m", 1, 5)
    chi = [0] * g.dim
    chi[g.monomial_index([2, 1, 0])] = 1
    chi[g.monomial_index([1, 0, 1])] = 1
    assert co.height(g, chi) == 2
    assert co.rank(g, chi) == 3
    assert co.is_nonsingular(g, chi)
    with pytest.raises(ValueError):
        co.height(g, [1, 2])


def test_search_and_kac():
    g = co.build("m", 1, 5)
    r = co.search(g, "nonsingular", seed=3, budget=200)
    assert r["found"] and r["log"]
    assert co.search(g, "nonsingular", seed=3, budget=200) == r
    dims = co.kac_dims(g, r["chi"])
    assert dims and all(k == 5 * 4 * m for m, k in dims)
    assert co.kac_irreducible(g, r["chi"], 0) == "irreducible"


def test_regular_and_delta():
    g = co.build("m", 2, 5)
    chi = [0] * g.dim
    chi[g.monomial_index([1, 0, 1, 0, 0])] = 1
    assert co.is_regular_semisimple(g, chi)
    h = co.build("m", 1, 7)
    r = co.search(h, "delta-invertible", seed=0, budget=500)
    assert r["found"]
    assert co.is_delta_invertible(h, r["chi"]) == "yes"


def test_run_suite():
    code, rep = co.run_suite("algebra", "dims", algebra="sm", n=1, p=5, kappa=2)
    assert code == 0 and rep["status"] == "pass"
    code, rep = co.run_suite("char", "examples", n=1)
    assert code == 2
    code, again = co.run_suite("char", "examples", n=1)
    assert rep == again
    with pytest.raises(ValueError):
        co.run_suite("verify", "golden15", p=7)
