import pytest

import reflwb


def test_g4_basics():
    g = reflwb.Group({"kind": "exceptional", "st": 4})
    assert (g.order, g.dim, g.hyperplanes, g.center) == (24, 2, 4, 2)
    assert g.kappa() == 6
    assert g.indices() == [1, 2, 3, 6]
    assert g.period() == 6


def test_chi_zero_at_identity_counts_hyperplanes():
    g = reflwb.Group({"kind": "coxeter", "type": "A", "n": 3})
    assert g.chi(0)[0] == "6"


def test_reducible_product_is_not_surjective():
    spec = {"kind": "product", "factors": [{"kind": "imprimitive", "d": 2, "e": 1, "r": 1}] * 2}
    report = reflwb.Group(spec).analyze()
    assert report["schema"] == 1
    assert report["group"]["irreducible"] is False
    assert report["phi"]["surjective"] is False


def test_poincare_counterexample():
    report = reflwb.poincare([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [0, 1, -1]])
    assert report["poincare"] == [1, 5, 8, 4]
    assert report["phi"]["rank"] == 5


def test_kappa_formula_and_table():
    assert reflwb.kappa_formula(2, 1, 3) == 2
    table = reflwb.kappa_table("2..2,1..1,2..3")
    assert [row["kappa"] for row in table["family"]] == [2, 2]


def test_bad_spec_raises():
    with pytest.raises(ValueError):
        reflwb.Group({"kind": "exceptional", "st": 99})
    with pytest.raises(ValueError):
        reflwb.Group({"kind": "nonsense"})


def test_text_rendering_mentions_kappa():
    report = reflwb.Group({"kind": "exceptional", "st": 4}).verify("kappa")
    assert "kappa: 6" in reflwb.render_text(report)
