from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cmband.bunch import enumerate_bands, enumerate_strings, opposite_word, parse_datum, validate_string
from cmband.golden import PRESENTATION_EXAMPLES, check_presentation_example
from cmband.linalg import Equal, Unequal
from cmband.modpres import (
    IDEAL_ROW_IDS, ExceptionalWord, Presentation, ShapeMismatch, TranslationError, UnknownRow, as_ideal,
    band_rotation_permutation_only, band_rotation_transform, build, compact_condition, compact_form_P,
    ideal_presentations, ideal_table_row, induce_to_T, involution_tau, is_locally_free, jordan_block,
    invert_matrix, merge_is_faithful, merge_rows, reconstruct_datum, restrict_to_P, reversal_permutation,
    same_submodule, verify_ideal_row,
)
from cmband.ring import A_RING, P_RING, T_RING, PolyMatrix, format_elem


def strs(p):
    return [[format_elem(f) for f in col] for col in p.columns]


@pytest.mark.parametrize("name", sorted(PRESENTATION_EXAMPLES))
def test_presentation_examples(name):
    assert all(check_presentation_example(name).values())


def test_string_module_shape():
    a = build(parse_datum("x[1]- y[1]-"))
    assert a.ring is A_RING and a.gens.nrows == 2
    assert strs(a) == [["x", "0"], ["u", "y"], ["0", "v"]]
    am = merge_rows(a)
    assert am.gens.nrows == 1 and am.merged
    assert merge_is_faithful(a)


def test_ideal_merge_x1_y1():
    am = merge_rows(build(parse_datum("x[1]- y[1]-")))
    ideal = as_ideal(am)
    assert {format_elem(f) for f in ideal} == {"x", "y + u", "v"}


def test_ideal_row_examples():
    r = ideal_table_row("x[inf]")
    assert [format_elem(g) for g in r.gens_A] == ["u"]
    assert [format_elem(g) for g in r.gens_P] == ["x*z"]
    assert [format_elem(g) for g in r.gens_T] == ["a^2*b"]
    r = ideal_table_row("x[i]- y[0]", 1)
    assert [format_elem(g) for g in r.gens_T] == ["a^3", "a^2*b + b^2"]
    r = ideal_table_row("band(x[i]- y[j]+)", 1, 1, 2)
    assert [format_elem(g) for g in r.gens_A] == ["x + 2*y", "u + v"]
    assert [format_elem(g) for g in r.gens_T] == ["a^3 + 2*b^3", "a^2*b + a*b^2"]
    with pytest.raises(UnknownRow):
        ideal_table_row("x[7]")


def test_ideal_table_count():
    assert len(IDEAL_ROW_IDS) == 15


@pytest.mark.parametrize("row_id", IDEAL_ROW_IDS)
def test_ideal_rows_small(row_id):
    res = verify_ideal_row(row_id, 2, 1, 2)
    assert all(isinstance(v, Equal) for v in res.values()), res


def test_exceptional_word():
    d = parse_datum("x[0] y[0]")
    a = merge_rows(build(d))
    with pytest.raises(ExceptionalWord):
        restrict_to_P(a, d)
    p = restrict_to_P(a, d, exceptional="adjoin")
    assert p.ring is P_RING
    with pytest.raises(TranslationError):
        restrict_to_P(p, d)


def test_p_translation_rules():
    d = parse_datum("x[2]- y[1]+")
    p = restrict_to_P(merge_rows(build(d)), d)
    flat = {format_elem(f) for col in p.columns for f in col}
    assert flat & {"x^3", "y^2"}
    d0 = parse_datum("x[0] y[1]-")
    p0 = restrict_to_P(merge_rows(build(d0)), d0)
    assert p0.ring is P_RING


def test_compact_form():
    assert compact_condition(parse_datum("x[1]- y[1]+"))
    assert not compact_condition(parse_datum("x[1]+ y[1]-"))
    assert not compact_condition(parse_datum("x[1]- y[1]- x[1]-"))
    d = parse_datum("x[2]- y[3]+")
    p = restrict_to_P(merge_rows(build(d)), d)
    c = compact_form_P(p, d)
    s = P_RING.gen("x") + P_RING.gen("y")
    assert c.gens.scale(s) == p.gens
    assert compact_form_P(p, parse_datum("x[1]+ y[1]-")) is None


def test_t_translation_adds_columns_for_zero_letters():
    d = parse_datum("x[0] y[1]-")
    a = merge_rows(build(d))
    t = induce_to_T(a, d)
    assert t.ring is T_RING and t.gens.ncols > a.gens.ncols


def test_tau():
    x = A_RING.gen("x")
    assert involution_tau(x) == A_RING.gen("y")
    assert involution_tau(P_RING.gen("z")) == P_RING.gen("z")
    assert str(involution_tau(parse_datum("x[1]- y[2]+"))) == "y[1]- x[2]+"
    a = build(parse_datum("x[1]- y[2]+"))
    assert involution_tau(involution_tau(a)) == a


def test_tau_band_equivariance():
    b = parse_datum("band(x[2]- y[1]+; m=2; lambda=3)")
    tb = involution_tau(b)
    lhs = band_rotation_transform(involution_tau(build(b)), 1, b.m, b.lam)
    assert isinstance(same_submodule(lhs, build(tb)), Equal)


def test_locally_free():
    assert is_locally_free(parse_datum("band(x[1]- y[1]-; m=1; lambda=1)"))
    assert not is_locally_free(parse_datum("x[inf] y[1]-"))
    assert is_locally_free(parse_datum("x[0] y[1]-"))


def test_same_submodule_verdicts():
    x, y = A_RING.gen("x"), A_RING.gen("y")
    p1 = Presentation(A_RING, (("X1",),), PolyMatrix(A_RING, [[x]]))
    p2 = Presentation(A_RING, (("X1",),), PolyMatrix(A_RING, [[y]]))
    assert isinstance(same_submodule(p1, p2), Unequal)
    p3 = Presentation(A_RING, (("X1",), ("X1",)), PolyMatrix(A_RING, [[x], [x]]))
    with pytest.raises(ShapeMismatch):
        same_submodule(p1, p3)


def test_jordan_inverse():
    J = jordan_block(3, Fraction(2))
    Ji = invert_matrix(J)
    prod = [[sum(J[a][k] * Ji[k][c] for k in range(3)) for c in range(3)] for a in range(3)]
    assert prod == [[1 if a == c else 0 for c in range(3)] for a in range(3)]


def test_rotation_needs_block_automorphism():
    b = parse_datum("band(x[1]- y[1]- x[1]- y[2]+; m=2; lambda=2)")
    rb = parse_datum("band(x[1]- y[2]+ x[1]- y[1]-; m=2; lambda=2)")
    a = build(b)
    assert isinstance(same_submodule(band_rotation_transform(a, 2, 2, 2), build(rb)), Equal)
    assert isinstance(same_submodule(band_rotation_permutation_only(a, 2, 2), build(rb)), Unequal)


def test_reversal_small():
    for d in enumerate_strings(3, 1):
        o = build(validate_string(opposite_word(d.word)))
        assert isinstance(same_submodule(build(d), o, reversal_permutation(o)), Equal), str(d)


def test_json_and_latex():
    a = build(parse_datum("x[1]- y[1]-"))
    obj = a.to_json_obj()
    assert set(obj) == {"ring", "frame", "exceptional", "generators"}
    tex = a.to_latex()
    assert tex.startswith("\\left[") and tex.rstrip().endswith("_{A}")


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(enumerate_strings(4, 2) + enumerate_bands(4, 2, 2, (Fraction(1), Fraction(2)))))
def test_reconstruction_matches_build(d):
    assert reconstruct_datum(d).gens == build(d).gens


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(enumerate_strings(3, 2)))
def test_ideal_presentations_translate(d):
    if d.exceptional:
        return
    a, p, pc, t = ideal_presentations(d)
    assert p.ring is P_RING and t.ring is T_RING
