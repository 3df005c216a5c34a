import amenable
import pytest


def test_type_c_code_and_shape():
    w = [-5, 3, -4, 7, -1, -6, 2]
    assert amenable.a_code("C", w) == [1, 4, 1, 3, 1, 0, 0]
    assert amenable.shape("C", w)["lambda"] == [11, 7, 6, 2]
    assert amenable.length("C", w) == 26


def test_type_a_formula_description():
    assert amenable.formula("A", [3, 4, 6, 1, 5, 2]) == "R^∅ ^{(3,3,3,5)}h^{(5,2,2,2)}_{(3,2,2,1)}"
    s = amenable.shape("A", [3, 4, 6, 1, 5, 2])
    assert s["f"] == [3, 3, 3, 5] and s["g"] == [5, 2, 2, 2]


def test_leading_element():
    w = [2, 4, 6, 5, -1, -3]
    assert amenable.classify("C", w)["leading"]
    assert amenable.formula("C", w) == "R^{(1,2)} ^{(5,4,3)}c^{(-2,0,5)}_{(8,5,1)}"


def test_vexillary_agrees_with_amenable_in_s4():
    perms = __import__("itertools").permutations(range(1, 5))
    for p in perms:
        p = list(p)
        assert amenable.is_vexillary(p) == amenable.is_amenable("A", p)


def test_canonical_omega_and_tableau():
    w = [1, 3, 6, 7, 9, 4, 8, 2, 5]
    c = amenable.canonical_omega(w)
    assert c["product"] == [9, 7, 6, 8, 4, 3, 1, 2, 5]
    assert amenable.tableau(w)["omega_word"] == c["word"]


def test_schubert_identity_and_rendering():
    assert amenable.schubert("A", [1, 2, 3]) == "1"
    assert amenable.schubert("A", [2, 1]) != amenable.schubert("A", [1, 2])
    assert isinstance(amenable.schubert("C", [-1], latex=True), str)


@pytest.mark.parametrize("t", ["A", "B", "C", "D"])
def test_formula_checks_in_rank_three(t):
    for w in amenable.amenable_elements(t, 3):
        assert amenable.check_formula(t, w, exact=True)


def test_sweep_report():
    rep = amenable.sweep("C", 3)
    assert rep["schema"] == "amenable-report/1"
    assert rep["summary"]["ok"]


def test_lemmas_and_counterexamples():
    names = amenable.lemma_names()
    rep = amenable.lemmas(trials=5, only=names[:3])
    assert rep["summary"]["ok"]
    assert amenable.appendix_b()["summary"]["ok"]


def test_locus_and_bad_input():
    assert "c" in amenable.locus("C", [2, 4, 6, 5, -1, -3])
    with pytest.raises(Exception):
        amenable.length("C", [1, 1])
