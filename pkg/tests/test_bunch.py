from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cmband.bunch import (
    BadLetter, BadShape, CyclicWord, EmptyWord, FullWord, IllegalEndpoint, IndexZeroInfInterior,
    InvalidWord, NonAlternating, OddShift, Periodic, StringDatum, ZeroLambda, bunch_to_module,
    canonical_band_bunch, enumerate_band_words, enumerate_data, enumerate_full_words, enumerate_strings,
    equivalent_bands, equivalent_strings, module_to_bunch, opposite_word, parse_datum, parse_word,
    tau_word, validate_band, validate_string,
)


def S(text):
    return validate_string(parse_word(text))


def B(text, m=1, lam=1):
    return validate_band(parse_word(text), m, Fraction(lam))


# ---------------------------------------------------------------- validation

def test_string_validation_errors():
    with pytest.raises(NonAlternating):
        S("x[1]- x[2]+")
    with pytest.raises(IndexZeroInfInterior):
        S("x[1]- y[0] x[2]+")
    with pytest.raises(IllegalEndpoint):
        S("x[0]+ y[1]-")
    with pytest.raises(BadLetter):
        S("x[1] y[1]-")
    with pytest.raises(EmptyWord):
        validate_string(())


def test_exceptional_flag():
    assert S("x[0] y[0]").exceptional
    assert not S("x[0] y[1]-").exceptional


def test_band_validation_errors():
    with pytest.raises(Periodic):
        B("x[1]- y[1]+ x[1]- y[1]+")
    with pytest.raises(ZeroLambda):
        B("x[1]- y[1]+", 1, 0)
    with pytest.raises(BadShape):
        B("y[1]- x[1]+")
    with pytest.raises(BadShape):
        B("x[1]- y[inf]")
    with pytest.raises(BadShape):
        B("x[1]- y[1]+", 0)


def test_parse_datum_round_trip():
    for text in ["x[1]- y[2]+", "x[inf] y[3]-", "band(x[1]- y[2]-; m=2; lambda=3/2)"]:
        assert str(parse_datum(text)) == text


# ---------------------------------------------------------------- symbol words

def test_string_to_symbol_word():
    assert str(module_to_bunch(S("x[2]- y[1]-"))) == \
        "delta ~ gamma - xi_2 ~ alpha_2 - gamma ~ delta - zeta_1 ~ beta_1 - delta ~ gamma"
    assert str(module_to_bunch(S("x[inf] y[3]+ x[2]- y[inf]"))) == \
        "alpha_inf - gamma ~ delta - beta_3 ~ zeta_3 - delta ~ gamma - xi_2 ~ alpha_2 - gamma ~ delta - beta_inf"


def test_single_zero_letters_keep_a_column():
    assert str(module_to_bunch(S("x[0]"))) == "xi_0 - gamma ~ delta"
    assert str(module_to_bunch(S("y[0]"))) == "zeta_0 - delta ~ gamma"


def test_band_to_symbol_word_and_back():
    b = B("x[2]- y[1]- x[2]+ y[3]-", 2, 5)
    w = module_to_bunch(b)
    assert isinstance(w, CyclicWord)
    assert str(w).endswith(" -")
    assert bunch_to_module(w, 2, 5) == b


def test_full_word_rules():
    with pytest.raises(InvalidWord):
        FullWord.parse("xi_1 - gamma ~ delta")  # xi_1 needs its partner
    with pytest.raises(InvalidWord):
        FullWord.parse("gamma ~ delta ~ gamma")
    assert FullWord.parse("alpha_inf - gamma ~ delta").opposite().opposite() == FullWord.parse(
        "alpha_inf - gamma ~ delta")


def test_shift_rules():
    w = module_to_bunch(B("x[1]- y[1]+"))
    with pytest.raises(OddShift):
        w.shift(1)
    assert w.shift(len(w)) == w


def test_shift_by_two_mod_four_inverts_lambda():
    b = B("x[1]- y[2]-", 1, 3)
    w = module_to_bunch(b)
    for k in range(0, len(w), 2):
        d = bunch_to_module(w.shift(k), 1, 3 if k % 4 == 0 else Fraction(1, 3))
        assert equivalent_bands(d, b)


# ---------------------------------------------------------------- equivalence

def test_opposite_reverses_and_flips():
    assert opposite_word(parse_word("x[1]- y[2]+ x[inf]")) == parse_word("x[inf] y[2]- x[1]+")


def test_string_equivalence():
    assert equivalent_strings(S("x[1]- y[2]+"), S("y[2]- x[1]+"))
    assert not equivalent_strings(S("x[1]- y[2]+"), S("x[1]+ y[2]-"))


def test_band_rotation_equivalence():
    b = B("x[1]- y[2]+ x[2]- y[1]-")
    assert equivalent_bands(b, B("x[2]- y[1]- x[1]- y[2]+"))
    assert not equivalent_bands(b, B("x[2]- y[1]- x[1]- y[2]+", 1, 2))


def test_symbol_word_equivalence_includes_reversal():
    # reading the cycle backwards gives the opposite word with inverted lambda
    assert equivalent_bands(B("x[1]+ y[1]+", 1, Fraction(1, 2)), B("x[1]- y[1]-", 1, 2), mode="bunch")
    assert not equivalent_bands(B("x[1]+ y[1]+", 1, Fraction(1, 2)), B("x[1]- y[1]-", 1, 2))
    c = canonical_band_bunch(B("x[1]+ y[1]+", 1, 2))
    assert c == canonical_band_bunch(B("x[1]- y[1]-", 1, Fraction(1, 2)))


def test_tau_word():
    assert tau_word(parse_word("x[1]- y[2]+")) == parse_word("y[1]- x[2]+")


# ---------------------------------------------------------------- enumeration

def test_small_enumeration_counts():
    assert len(enumerate_strings(2, 1)) == 22
    assert len(enumerate_band_words(2, 1)) == 4
    assert enumerate_data(0, 1) == []


def test_enumerated_strings_are_class_representatives():
    data = enumerate_strings(3, 2)
    seen = set()
    for d in data:
        key = min(d.word, opposite_word(d.word), key=lambda w: str(w))
        assert key not in seen
        seen.add(key)


def test_full_word_enumeration():
    words = enumerate_full_words(6, 3)
    assert len(words) == 97
    assert len({str(w) for w in words}) == 97


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(enumerate_strings(4, 2)))
def test_string_round_trip(d):
    assert bunch_to_module(module_to_bunch(d)) == d
    o = validate_string(opposite_word(d.word))
    w = module_to_bunch(d)
    assert str(module_to_bunch(o)) in {str(w), str(w.opposite())}


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(enumerate_band_words(4, 2)), st.integers(1, 3), st.sampled_from([1, 2, Fraction(2, 3)]))
def test_band_round_trip(word, m, lam):
    b = validate_band(word, m, Fraction(lam))
    assert bunch_to_module(module_to_bunch(b), m, b.lam) == b
