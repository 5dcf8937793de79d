import json

import pytest

import cdga

KT = """\
algebra kt
gen a : 1
gen b : 1
gen c : 1
gen e : 1
d c = a*b
"""


def test_parse_and_betti():
    a = cdga.parse_algebra(KT)
    assert a.name == "kt"
    assert a.betti(4) == [1, 3, 4, 3, 1]
    minimal, witness = a.is_minimal()
    assert minimal and witness is None
    assert a.d("c") == "a*b"
    assert a.is_cocycle("a*b")
    assert a.class_is_zero("a*b")


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        cdga.parse_algebra("algebra x\ngen a : oops\n")
    assert issubclass(cdga.InputError, ValueError)


def test_check_reports_broken_differential():
    report = cdga.check(
        "algebra broken\ngen a : 2\ngen b : 3\ngen c : 4\nd b = a*a\nd c = a*b\n"
    )
    assert report["d_squared"]["pass"] is False


def test_cohomology_table():
    a = cdga.parse_algebra(KT)
    table = cdga.cohomology(a, 4)
    assert table["betti"] == [1, 3, 4, 3, 1]
    assert "a" in table["rows"][1]["representatives"]


def test_ring_and_lefschetz():
    model = cdga.catalog_model("cpn(2)")
    ring = model.extract_ring(4)
    assert ring.dim() == 3
    assert cdga.lefschetz(ring)["passes"] is True
    assert ring.gysin("", 5) == [1, 0, 0, 0, 0, 1]

    kt_ring = cdga.parse_algebra(KT).extract_ring(4)
    assert cdga.lefschetz(kt_ring, "h2_0")["passes"] is False


def test_sasaki_check():
    good = cdga.sasaki_check([1, 0, 2], 5)
    assert good["possibly_sasakian"] is True
    bad = cdga.sasaki_check([1, 1], 5)
    assert bad["possibly_sasakian"] is False
    assert bad["offending_degrees"] == [1]


def test_pipeline_model_mode():
    report = cdga.pipeline("cpn(2)")
    assert report["mode"] == "model"
    assert report["total_dimension"] == 7
    assert report["betti"] == [1, 0, 1, 0, 0, 1, 0, 1]
    assert report["parity"]["possibly_sasakian"] is True
    assert report["fatness"]["bound"] == "1/1"


def test_pipeline_transfer_mode():
    report = cdga.pipeline("blowup_cp5", weights=(1, 1))
    assert report["mode"] == "betti_transfer"
    assert report["total_dimension"] == 13
    assert report["betti"][3] == 3
    assert report["betti"][4] is None
    assert report["parity"]["possibly_sasakian"] is False


def test_csplit_handles_unknowns():
    assert cdga.csplit([1, 0, 1], [1, 0, 3], 2) == 4
    assert cdga.csplit([1, None], [1, 1, 3], 2) is None
    assert cdga.weinstein_example(3)["betti"] == 3


def test_fat_weights():
    cert = cdga.fat_weights(["1/2", "2"])
    assert cert["certified"] is True
    assert cert["bound"] == "1/2"
    bad = cdga.fat_weights(["1", "-1"])
    assert bad["certified"] is False


def test_catalog():
    names = cdga.catalog()["entries"]
    assert "kodaira_thurston" in names
    entry = cdga.catalog("blowup_cp5")
    assert entry["dimension"] == 10
    assert entry["betti"][3] == 3
    assert entry["betti"][2] is None
    assert cdga.catalog_model("blowup_cp5") is None


def test_minimal_model():
    a = cdga.parse_algebra(
        "algebra pair\ngen a : 2\ngen b : 4\ngen c : 3\nd c = b\n"
    )
    model, report = cdga.minimal_model(a, 8)
    assert report["verified"] is True
    assert model.betti(8) == [1, 0, 1, 0, 1, 0, 1, 0, 1]
    assert model.generators() == [("x2_0", 2)]


def test_bundle_constructions():
    s2 = cdga.catalog_model("sphere(2)")
    total = s2.sphere_bundle("v*v", 3)
    assert total.betti(5) == [1, 0, 1, 1, 0, 1]

    cp2 = cdga.catalog_model("cpn(2)")
    three = json.loads(cp2.verify_degree_three_invariance("v*v"))
    assert three["equal"] is True
