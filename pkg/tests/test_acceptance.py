"""Acceptance criteria 1-8, each printing one PASS/FAIL line (see the terminal summary)."""

import random
import time
from fractions import Fraction
from itertools import product

from hypothesis import given, settings, strategies as st

from acceptance_log import record
from oracles import rank_by_minors

from cmband.bunch import (
    BandDatum, Periodic, enumerate_band_words, enumerate_bands, enumerate_full_words, enumerate_strings,
    equivalent_bands, module_to_bunch, opposite_word, parse_word, validate_band, validate_string,
)
from cmband.canon import canonical_form, essential_image_predicate, regularity_check
from cmband.golden import (
    CANONICAL_EXAMPLES, PRESENTATION_EXAMPLES, check_canonical_example, check_presentation_example,
)
from cmband.linalg import Equal, Member, rank_q
from cmband.modpres import (
    IDEAL_ROW_IDS, band_rotation_transform, build, involution_tau, is_locally_free, merge_rows,
    reversal_permutation, same_submodule, verify_ideal_row,
)
from cmband.catalog import _merge_check
from cmband.mf import MF_ROW_IDS, golden_mf, knorrer_double, parameter_grid, verify_mf
from cmband.ring import BUILTIN_RINGS

LAMBDAS = (Fraction(1), Fraction(2))


def _mf_grid():
    for row in MF_ROW_IDS:
        for i, j, lam in parameter_grid(row, (1, 2, 3, 4), (1, 2, 3)):
            yield row, i, j, lam


# ---------------------------------------------------------------- 1

def test_criterion_1_mf_table():
    t = time.time()
    bad = [(row, i, j, lam) for row, i, j, lam in _mf_grid() if not verify_mf(golden_mf(row, i, j, lam))]
    rows = sorted({b[0] for b in bad})
    record(1, not bad, f"{len(bad)} failing grid points in rows {rows} ({time.time() - t:.1f}s)")
    assert not bad


# ---------------------------------------------------------------- 2

def _certified(v):
    return isinstance(v, Equal) and all(isinstance(c, Member) for c in v.forward + v.backward)


def test_criterion_2_ideal_table():
    t = time.time()
    bad = []
    n = 0
    for row in IDEAL_ROW_IDS:
        for i, j, lam in product((1, 2, 3), (1, 2, 3), LAMBDAS):
            res = verify_ideal_row(row, i, j, lam)
            n += 1
            bad += [(row, i, j, lam, ring) for ring, v in res.items() if not _certified(v)]
    record(2, not bad, f"{n} row instances, {len(bad)} failures ({time.time() - t:.1f}s)")
    assert not bad


# ---------------------------------------------------------------- 3

def test_criterion_3_worked_examples():
    t = time.time()
    bad = [name for name in sorted(CANONICAL_EXAMPLES) if not check_canonical_example(name)]
    for name in sorted(PRESENTATION_EXAMPLES):
        bad += [f"{name}:{k}" for k, ok in check_presentation_example(name).items() if not ok]
    record(3, not bad, f"failures {bad} ({time.time() - t:.1f}s)" if bad else f"({time.time() - t:.1f}s)")
    assert not bad


# ---------------------------------------------------------------- 4

def test_criterion_4_regularity():
    t = time.time()
    words = [module_to_bunch(d) for d in enumerate_strings(6, 3)]
    words += enumerate_full_words(10, 3)
    bad = [w for w in words if regularity_check(canonical_form(w)) != essential_image_predicate(w)]
    cyclic = [module_to_bunch(validate_band(w)) for w in enumerate_band_words(6, 3)]
    bad += [w for w in cyclic if regularity_check(canonical_form(w, 1, 1)) != essential_image_predicate(w)]
    n = len(words) + len(cyclic)
    record(4, not bad, f"{n} words, {len(bad)} exceptions ({time.time() - t:.1f}s)")
    assert not bad


# ---------------------------------------------------------------- 5

def test_criterion_5_equivalence_invariance():
    t = time.time()
    bad = []
    strings = enumerate_strings(4, 2)
    for d in strings:
        o = build(validate_string(opposite_word(d.word)))
        if not isinstance(same_submodule(build(d), o, reversal_permutation(o)), Equal):
            bad.append(str(d))
    bands = enumerate_bands(4, 2, 2, LAMBDAS)
    for b in bands:
        a = build(b)
        for s in range(2, len(b.word), 2):
            rb = validate_band(b.word[s:] + b.word[:s], b.m, b.lam)
            if not isinstance(same_submodule(band_rotation_transform(a, s, b.m, b.lam), build(rb)), Equal):
                bad.append(f"{b} shift {s}")
    record(5, not bad, f"{len(strings)} strings, {len(bands)} bands, {len(bad)} failures ({time.time() - t:.1f}s)")
    assert not bad


# ---------------------------------------------------------------- 6

def test_criterion_6_knorrer():
    t = time.time()
    bad = []
    for row, i, j, lam in _mf_grid():
        m = golden_mf(row, i, j, lam)
        k = knorrer_double(m)
        if not (k.size == 2 * m.size and verify_mf(k)):
            bad.append((row, i, j, lam))
    rows = sorted({b[0] for b in bad})
    record(6, not bad, f"{len(bad)} failing grid points in rows {rows} ({time.time() - t:.1f}s)")
    assert not bad


# ---------------------------------------------------------------- 7

def test_criterion_7_structure():
    t = time.time()
    strings = enumerate_strings(4, 2)
    bands = enumerate_bands(4, 2, 2, LAMBDAS)
    problems = []
    if any(involution_tau(involution_tau(d)) != d for d in strings):
        problems.append("tau on strings")
    if any(not equivalent_bands(involution_tau(involution_tau(b)), b) for b in bands):
        problems.append("tau on bands")
    for d in strings + bands:
        a = build(d)
        if involution_tau(involution_tau(a)) != a:
            problems.append(f"tau twice on {d}")
        ta = involution_tau(a)
        if isinstance(d, BandDatum):
            ta = band_rotation_transform(ta, 1, d.m, d.lam)
        if not isinstance(same_submodule(ta, build(involution_tau(d))), Equal):
            problems.append(f"tau-equivariance {d}")
        if not isinstance(_merge_check(a, merge_rows(a)), Equal):
            problems.append(f"merge {d}")
    for d in enumerate_strings(6, 3) + bands:
        lf = isinstance(d, BandDatum) or not any(str(l).startswith(("x[inf", "y[inf")) for l in d.word)
        if is_locally_free(d) != lf:
            problems.append(f"locally free {d}")
    for w in ("x[1]- y[1]- x[1]- y[1]-", "x[2]+ y[1]- x[2]+ y[1]- x[2]+ y[1]-"):
        try:
            validate_band(parse_word(w))
            problems.append(f"periodic {w} accepted")
        except Periodic:
            pass
    record(7, not problems, f"{len(problems)} problems ({time.time() - t:.1f}s)")
    assert not problems, problems[:10]


# ---------------------------------------------------------------- 8

def _elements(ring):
    coef = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    exps = st.tuples(*[st.integers(0, 3)] * ring.nvars)
    return st.lists(st.tuples(exps, coef), max_size=4).map(lambda ts: ring.from_terms(ts))


_RING_FAILS = {}


def _ring_axioms(ring):
    @settings(max_examples=1000, deadline=None, database=None)
    @given(_elements(ring), _elements(ring), _elements(ring))
    def check(a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)

    try:
        check()
    except AssertionError as e:
        _RING_FAILS[ring.name] = str(e)[:200]


def _rank_cases():
    """Every matrix with at most 6 entries exhaustively, larger shapes by a seeded sample."""
    vals = range(-2, 3)
    for n in range(1, 5):
        for k in range(1, 5):
            if n * k <= 6:
                for flat in product(vals, repeat=n * k):
                    yield [list(flat[r * k:(r + 1) * k]) for r in range(n)]
    rng = random.Random(20261015)
    for n, k in ((2, 4), (4, 2), (3, 3), (3, 4), (4, 3), (4, 4)):
        for _ in range(3000):
            yield [[rng.choice(vals) for _ in range(k)] for _ in range(n)]


def test_criterion_8_ring_oracles():
    t = time.time()
    for ring in BUILTIN_RINGS.values():
        _ring_axioms(ring)
    bad_rank = 0
    n = 0
    for m in _rank_cases():
        n += 1
        if rank_q(m) != rank_by_minors(m):
            bad_rank += 1
    ok = not _RING_FAILS and not bad_rank
    record(8, ok, f"{len(BUILTIN_RINGS)} rings x 1000 triples, {n} rank cases, "
                  f"ring failures {sorted(_RING_FAILS)}, rank mismatches {bad_rank} ({time.time() - t:.1f}s)")
    assert ok
