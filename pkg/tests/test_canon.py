import json
from fractions import Fraction

import pytest

from cmband.bunch import CyclicWord, FullWord, Sym, enumerate_full_words, module_to_bunch, parse_word, validate_band
from cmband.canon import (
    canonical_form, canonical_form_band, canonical_form_string, essential_image_predicate,
    regularity_check, symbol_latex,
)
from cmband.golden import CANONICAL_EXAMPLES, canonical_example, check_canonical_example


@pytest.mark.parametrize("name", sorted(CANONICAL_EXAMPLES))
def test_worked_examples(name):
    assert check_canonical_example(name)


def test_band_example_blocks():
    w, tx, ty, _ = canonical_example("ex1")
    cf = canonical_form_band(w, 2, 5)
    # the Jordan block sits in the first column block of the last beta stripe
    assert cf.theta_y[-2][:2] == (Fraction(5), Fraction(1))
    assert cf.theta_y[-1][:2] == (Fraction(0), Fraction(5))
    assert regularity_check(cf)


def test_type_checks():
    w = FullWord.parse("xi_0 - gamma ~ delta")
    with pytest.raises(TypeError):
        canonical_form_band(w, 1, 1)
    c = module_to_bunch(validate_band(parse_word("x[1]- y[1]-")))
    with pytest.raises(TypeError):
        canonical_form_string(c)
    with pytest.raises(ValueError):
        canonical_form_band(c, 1, 0)


def test_stripes_follow_chain_order():
    w = FullWord.parse("alpha_inf - gamma ~ delta - beta_3 ~ zeta_3 - delta ~ gamma - xi_2 ~ alpha_2 - "
                       "gamma ~ delta - beta_inf")
    cf = canonical_form(w)
    assert [str(s) for s, _ in cf.stripes("x")] == ["xi_2", "alpha_inf", "alpha_2"]
    assert [str(s) for s, _ in cf.stripes("y")] == ["zeta_3", "beta_inf", "beta_3"]


def test_json_layout():
    w, _, _, _ = canonical_example("ex1")
    obj = json.loads(canonical_form(w, 2, Fraction(5, 3)).to_json())
    assert set(obj) == {"stripes_x", "stripes_y", "t", "m", "theta_x", "theta_y"}
    assert obj["t"] == 4 and obj["m"] == 2
    assert "5/3" in obj["theta_y"][-2]


def test_latex_labels():
    w, _, _, _ = canonical_example("ex4")
    tex = canonical_form(w).to_latex()
    assert "\\alpha_{\\infty}" in tex and "\\Theta_x" in tex and "\\Theta_y" in tex
    assert symbol_latex(Sym("gamma")) == "\\gamma"


def test_predicate_cases():
    assert not essential_image_predicate(FullWord.parse("gamma ~ delta"))
    assert not essential_image_predicate(FullWord.parse("xi_0"))
    assert essential_image_predicate(FullWord.parse("xi_0 - gamma ~ delta"))
    # an E-symbol end joined by ~ leaves a zero row
    w = FullWord.parse("xi_1 ~ alpha_1 - gamma ~ delta")
    assert not essential_image_predicate(w)
    assert not regularity_check(canonical_form(w))
    # literal reading only admits F-symbol ends
    assert not essential_image_predicate(FullWord.parse("xi_0 - gamma ~ delta"), literal=True)


def test_cyclic_words_are_regular():
    c = module_to_bunch(validate_band(parse_word("x[2]- y[1]+ x[1]+ y[3]-"), 3, 2))
    assert essential_image_predicate(c)
    assert regularity_check(canonical_form(c, 3, 2))


def test_predicate_on_small_enumeration():
    for w in enumerate_full_words(6, 2):
        assert regularity_check(canonical_form(w)) == essential_image_predicate(w), str(w)
