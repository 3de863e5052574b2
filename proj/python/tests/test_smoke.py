from pathlib import Path

import pytest

import hyparr

CORPUS = Path(__file__).resolve().parents[2] / "corpus"


def four_planes():
    return hyparr.Arrangement.corpus("budur-example")


def test_corpus_entries_load():
    names = hyparr.corpus_names()
    assert "boolean3" in names and "budur-example" in names
    for name in names:
        arr = hyparr.Arrangement.corpus(name)
        assert len(arr) >= 1
    with pytest.raises(KeyError):
        hyparr.Arrangement.corpus("no-such-entry")


def test_parse_and_load_agree():
    text = (CORPUS / "boolean3.txt").read_text()
    assert hyparr.Arrangement.parse(text) == hyparr.Arrangement.load(str(CORPUS / "boolean3.txt"))
    json_input = hyparr.Arrangement.load(str(CORPUS / "budur-xyz.json"))
    assert json_input.dim == 3 and len(json_input) == 4


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        hyparr.Arrangement.parse("not an arrangement")
    with pytest.raises(RuntimeError):
        hyparr.Arrangement.load(str(CORPUS / "missing.txt"))


def test_lattice_and_charpoly():
    arr = four_planes()
    assert hyparr.lattice(arr)["rank_counts"] == [1, 4, 6, 1]
    # (t - 1)(t^2 - 3t + 3)
    assert hyparr.charpoly(arr) == ["-3", "6", "-4", "1"]
    assert hyparr.lct(arr) == "3/4"
    assert [e["edge"] for e in hyparr.dense_edges(arr)][-1] == "{1,2,3,4}"


def test_freeness_verdicts():
    assert hyparr.freeness(four_planes())["verdict"] == "not-free"
    free = hyparr.freeness(hyparr.Arrangement.corpus("supersolvable-a3"))
    assert free["verdict"] == "free"
    assert free["exponents"] == [1, 2, 3]


def test_free_roots():
    pencil = hyparr.free_roots(hyparr.Arrangement.corpus("generic-2-3"))
    assert pencil == {"roots": ["-2/3", "-1", "-4/3"], "status": "certified"}
    with pytest.raises(ValueError):
        hyparr.free_roots(four_planes())
    assumed = hyparr.free_roots(four_planes(), assume_free=True)
    assert assumed["roots"] == ["-3/4", "-1", "-5/4"]
    assert assumed["status"] == "assumed free"


def test_lower_bound_components():
    forms = hyparr.bs_lower(four_planes())
    assert len(forms) == 8
    assert {"coeffs": [1, 1, 1, 1], "const": 6} in forms


def test_zeta_single_variable():
    z = hyparr.zeta(four_planes(), single_variable=True)
    assert z["text"] == "(s^2 - 2*s + 3)/((s + 1)^2*(4*s + 3))"
    assert sorted((p["coeffs"], p["const"], p["order"]) for p in z["poles"]) == [([1], 1, 2), ([4], 3, 1)]


def test_smc_and_report():
    for name in hyparr.corpus_names():
        assert hyparr.verify_smc(hyparr.Arrangement.corpus(name))["pass"]
    report = hyparr.report(four_planes(), assume_free=True)
    assert report["schema_version"] == 1
    assert report == hyparr.report(four_planes(), assume_free=True)
