import json

import pytest

import limitrep


def test_conway_polynomials():
    assert limitrep.conway_polynomial(2, 2) == [1, 1, 1]  # x^2 + x + 1
    assert limitrep.field_order(3, 2) == 9
    with pytest.raises(limitrep.InputError):
        limitrep.conway_polynomial(4, 1)


def test_group_orders():
    assert limitrep.group_order("SL(2,3)") == "24"
    assert limitrep.group_order("SL(2,2)", 4) == "4080"
    assert limitrep.group_order("SL(3,2)") == "168"


def test_kl_polynomial():
    assert limitrep.kl_polynomial("A2", [1], [1, 2, 1]) == [1]
    # the smallest pair with a nontrivial polynomial
    assert limitrep.kl_polynomial("A3", [2], [2, 1, 3, 2]) == [1, 1]


def test_cells():
    data = json.loads(limitrep.cells("A2", "left"))
    assert data["schema"] == 1
    assert len(data["blocks"]) == 4
    two = json.loads(limitrep.cells("A2", "two_sided"))
    assert len(two["blocks"]) == 3


def test_bruhat():
    nf = json.loads(limitrep.bruhat_decompose("SL(2,3)", 1, "[[[0],[2]],[[1],[0]]]"))
    assert nf["w"] == "2,1"


def test_steinberg_reports():
    rep = json.loads(limitrep.steinberg_report("SL(2,3)", 1, "Q"))
    assert rep["dim"] == 3
    assert rep["irreducible"] is True
    red = json.loads(limitrep.steinberg_report("SL(2,2)", 1, "F_3"))
    assert red["irreducible"] is False
    assert red["criterion"] is False


def test_mtheta_report():
    rep = json.loads(limitrep.mtheta_report("SL(2,5)", 1, [1], "Q(z_4)"))
    assert rep["dim"] == 6
    assert rep["bound_report"]["length"] == 1


def test_tower_report():
    rep = json.loads(limitrep.tower_report("SL(2,2)", [1, 2], "Q(z_4)"))
    assert rep["verdict"] is True
    assert [pl["dim"] for pl in rep["per_level"]] == [2, 4]


def test_gelfand_graev():
    rep = json.loads(limitrep.gelfand_graev_report("GL(2,2)", 1, "Q(z_2)"))
    assert rep["dim"] == 3
    assert rep["multiplicity_free"] is True


def test_certify_single():
    ok, title, details = limitrep.certify(4)
    assert ok is True
    assert "induced module" in title


def test_cli_inprocess():
    code, out, err = limitrep.cli(["cells", "--type", "A1", "--kind", "left"])
    assert code == 0
    assert json.loads(out)["kind"] == "left"
    code2, _, _ = limitrep.cli(["nonsense"])
    assert code2 == 2
