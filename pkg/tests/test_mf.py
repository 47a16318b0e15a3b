from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cmband.mf import (
    MF_ROW_IDS, PRINTED_VARIANTS, MatrixFactorization, MissingParameter, ShapeError, UnknownRow, det,
    exact_divide, golden_mf, knorrer_double, normalize_row_id, parameter_grid, syzygy_check, verify_mf,
    verify_mf_up_to_unit,
)
from cmband.ring import A_RING, FREE2, FREE4, PolyMatrix

F = FREE2.parse("a^2*b^2")
DEFECTIVE = "(a^{i+2}+Lab^2,a^2b+b^{j+2})"


def mf(phi, psi):
    return MatrixFactorization(PolyMatrix(FREE2, phi), PolyMatrix(FREE2, psi), F)


def test_verify_small_cases():
    assert verify_mf(mf([["b^2"]], [["a^2"]]))
    assert verify_mf(mf([["b"]], [["a^2*b"]]))
    assert not verify_mf(mf([["b"]], [["a^2"]]))


def test_shape_errors():
    with pytest.raises(ShapeError):
        verify_mf(mf([["b", "0"]], [["a"]]))
    with pytest.raises(ShapeError):
        verify_mf(MatrixFactorization(PolyMatrix(A_RING, [["x"]]), PolyMatrix(A_RING, [["y"]]), A_RING.zero()))


def test_row_lookup():
    assert len(MF_ROW_IDS) == 13
    assert normalize_row_id(1) == "(a^2)"
    assert normalize_row_id("(a² b)") == "(a^2b)"
    assert normalize_row_id("(a^{i+2}+λab², a²b+b^{j+2})") == DEFECTIVE
    with pytest.raises(UnknownRow):
        normalize_row_id("(a^5)")
    with pytest.raises(UnknownRow):
        normalize_row_id(14)


def test_parameters():
    with pytest.raises(MissingParameter):
        golden_mf("(a^{i+2},a^2b)")
    with pytest.raises(ValueError):
        golden_mf(DEFECTIVE, 1, 1, 0)
    # unused parameters are ignored
    assert golden_mf("(ab)", 3, 3, 2).phi.to_strings() == [["a*b"]]


def test_known_rows():
    m = golden_mf("(a^{i+2},a^2b)", 2)
    assert m.phi.to_strings() == [["b", "0"], ["-a^2", "b"]]
    assert m.psi.to_strings() == [["a^2*b", "0"], ["a^4", "a^2*b"]]
    m = golden_mf("(a^{i+2}+Lb^{j+2},a^2b+ab^2)", 1, 1, 1)
    assert m.phi.to_strings() == [["a*b", "0"], ["-a^2 - b^2", "a*b"]]
    assert m.psi.to_strings() == [["a*b", "0"], ["a^2 + b^2", "a*b"]]
    m = golden_mf(DEFECTIVE, 1, 1, 2)
    assert m.phi.to_strings() == [["a*b", "-b^2"], ["-a^2", "2*a*b"]]
    assert m.psi.to_strings() == [["a*b", "1/2*b^2"], ["1/2*a^2", "1/2*a*b"]]


@pytest.mark.parametrize("row", [r for r in MF_ROW_IDS if r != DEFECTIVE])
def test_rows_factor_exactly(row):
    for i, j, lam in parameter_grid(row):
        assert verify_mf(golden_mf(row, i, j, lam))


def test_defective_row_is_a_unit_multiple():
    # phi psi = (1 - lambda^-1 a^(i-1) b^(j-1)) a^2 b^2 I; a unit over power series unless i=j=lambda=1
    verdicts = [(i, j, lam, verify_mf_up_to_unit(golden_mf(DEFECTIVE, i, j, lam)))
                for i in range(1, 5) for j in range(1, 5) for lam in (1, 2, 3)]
    assert not any(v.exact for *_, v in verdicts)
    bad = [(i, j, lam) for i, j, lam, v in verdicts if not v.invertible]
    assert bad == [(1, 1, 1)]


def test_printed_variants_fail():
    for row, *_ in PRINTED_VARIANTS:
        params = {"i": 2, "j": 2}
        assert not verify_mf(golden_mf(row, verbatim=True, **params))
        assert verify_mf(golden_mf(row, **params))


@pytest.mark.parametrize("row", MF_ROW_IDS)
def test_syzygy(row):
    assert syzygy_check(row, 2, 3, 2)


def test_knorrer_small():
    k = knorrer_double(golden_mf(1))
    assert k.size == 2 and k.ring is FREE4
    assert k.phi.to_strings() == [["b^2", "-u"], ["v", "a^2"]]
    assert k.psi.to_strings() == [["a^2", "u"], ["-v", "b^2"]]
    assert verify_mf(k)
    assert not verify_mf(knorrer_double(golden_mf(1), verbatim=True))


@pytest.mark.parametrize("row", [r for r in MF_ROW_IDS if r != DEFECTIVE])
def test_knorrer_rows(row):
    for i, j, lam in parameter_grid(row, (1, 3), (2,)):
        m = golden_mf(row, i, j, lam)
        k = knorrer_double(m)
        assert k.size == 2 * m.size and verify_mf(k)


@pytest.mark.parametrize("row", MF_ROW_IDS)
def test_determinants(row):
    m = golden_mf(row, 2, 3, 2)
    if m.size > 3:
        return
    lhs = det(m.phi) * det(m.psi)
    if verify_mf(m):
        assert lhs == F ** m.size
    else:
        assert exact_divide(lhs, F ** m.size) is not None


def test_exact_divide():
    assert exact_divide(FREE2.parse("a^3*b + a^2"), FREE2.parse("a")) == FREE2.parse("a^2*b + a")
    assert exact_divide(FREE2.parse("a + b"), FREE2.parse("a")) is None


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([r for r in MF_ROW_IDS if r != DEFECTIVE]), st.integers(1, 6), st.integers(1, 6),
       st.sampled_from([1, 2, Fraction(-1, 3), Fraction(5, 2)]))
def test_rows_factor_for_other_parameters(row, i, j, lam):
    assert verify_mf(golden_mf(row, i, j, lam))


def test_json_and_latex():
    m = golden_mf(13, 1, 2, 3)
    assert set(m.to_json_obj()) == {"size", "potential", "phi", "psi"}
    tex = m.to_latex()
    assert tex.count("\\begin{pmatrix}") == 2 and "3b^{3}" in tex
