"""Worked examples frozen as fixtures: canonical forms and module presentations.

Parameters are instantiated concretely (indices, m, lambda) and the block
entries I, J are expanded.  Row order of an unmerged presentation follows the
display convention (all X-rows, then all Y-rows, each in word order).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .bunch import CyclicWord, FullWord, Sym, bunch_to_module, parse_word, validate_band, validate_string
from .canon import canonical_form
from .modpres import (
    build, compact_form_P, induce_to_T, jordan_block, merge_rows, restrict_to_P,
)
from .ring import A_RING, P_RING, T_RING, PolyMatrix

# ---------------------------------------------------------------- canonical forms

CANONICAL_EXAMPLES = {
    "ex1": {
        "word": "delta ~ gamma - xi_2 ~ alpha_2 - gamma ~ delta - zeta_1 ~ beta_1 - "
                "delta ~ gamma - alpha_2 ~ xi_2 - gamma ~ delta - zeta_1 ~ beta_1 -",
        "m": 2, "lam": 5,
        "module_word": "x[2]- y[1]- x[2]+ y[1]-",
        "x": [("xi_2", "I000"), ("xi_2", "000I"), ("alpha_2", "0I00"), ("alpha_2", "00I0")],
        "y": [("zeta_1", "0I00"), ("zeta_1", "000I"), ("beta_1", "00I0"), ("beta_1", "J000")],
    },
    "ex2": {
        "word": "delta ~ gamma - xi_2 ~ alpha_2 - gamma ~ delta - zeta_1 ~ beta_1 - delta ~ gamma",
        "module_word": "x[2]- y[1]-",
        "x": [("xi_2", "100"), ("alpha_2", "010")],
        "y": [("zeta_1", "010"), ("beta_1", "001")],
    },
    "ex3": {
        "word": "xi_0 - gamma ~ delta - zeta_1 ~ beta_1 - delta ~ gamma - xi_2 ~ alpha_2 - "
                "gamma ~ delta - beta_1 ~ zeta_1 - delta ~ gamma",
        "module_word": "x[0] y[1]- x[2]- y[1]+",
        "x": [("xi_0", "1000"), ("xi_2", "0100"), ("alpha_2", "0010")],
        "y": [("zeta_1", "1000"), ("zeta_1", "0001"), ("beta_1", "0100"), ("beta_1", "0010")],
    },
    "ex4": {
        "word": "alpha_inf - gamma ~ delta - beta_3 ~ zeta_3 - delta ~ gamma - xi_2 ~ alpha_2 - "
                "gamma ~ delta - beta_inf",
        "module_word": "x[inf] y[3]+ x[2]- y[inf]",
        "x": [("xi_2", "010"), ("alpha_inf", "100"), ("alpha_2", "001")],
        "y": [("zeta_3", "010"), ("beta_inf", "001"), ("beta_3", "100")],
    },
}


def _expand_rows(spec, m, lam):
    J = jordan_block(m, lam)
    out = []
    for _, cells in spec:
        for a in range(m):
            row = []
            for cell in cells:
                for c in range(m):
                    if cell == "0":
                        row.append(Fraction(0))
                    elif cell in "1I":
                        row.append(Fraction(int(a == c)))
                    else:
                        row.append(J[a][c])
            out.append(tuple(row))
    return tuple(out)


def canonical_example(name: str):
    """(symbol word, expected theta_x, expected theta_y, expected stripe labels)."""
    ex = CANONICAL_EXAMPLES[name]
    text = ex["word"]
    w = CyclicWord.parse(text) if text.rstrip().endswith("-") else FullWord.parse(text)
    m, lam = ex.get("m", 1), ex.get("lam", 1)
    labels = ([Sym.parse(s) for s, _ in ex["x"]], [Sym.parse(s) for s, _ in ex["y"]])
    return w, _expand_rows(ex["x"], m, lam), _expand_rows(ex["y"], m, lam), labels


def check_canonical_example(name: str) -> bool:
    ex = CANONICAL_EXAMPLES[name]
    w, tx, ty, (lx, ly) = canonical_example(name)
    m, lam = ex.get("m", 1), ex.get("lam", 1)
    cf = canonical_form(w, m, lam)
    got_lx = [r[0] for r in cf.rows_x[::m]]
    got_ly = [r[0] for r in cf.rows_y[::m]]
    d = bunch_to_module(w, m, lam)
    return (cf.theta_x == tx and cf.theta_y == ty and got_lx == lx and got_ly == ly
            and " ".join(str(l) for l in d.word) == ex["module_word"])


# ---------------------------------------------------------------- presentations

# columns are lists of (entry template, block) per row; block is "I", "J" or "" (strings)
PRESENTATION_EXAMPLES = {
    "A1": {
        "datum": "x[{i}]- y[{j1}]- x[{i}]+ y[{j2}]-", "band": True,
        "params": {"i": 2, "j1": 1, "j2": 3, "m": 2, "lam": 5},
        "unmerged": [
            [("x^{i}", "I"), "0", "0", ("v", "J")],
            [("u", "I"), "0", ("y^{j1}", "I"), "0"],
            ["0", ("u", "I"), ("v", "I"), "0"],
            ["0", ("x^{i}", "I"), "0", ("y^{j2}", "I")],
        ],
        "merged": [
            [("x^{i}", "I"), ("v", "J")],
            [("u + y^{j1}", "I"), "0"],
            [("v", "I"), ("u", "I")],
            ["0", ("x^{i} + y^{j2}", "I")],
        ],
        "P": [
            [("x^{i+1}", "I"), ("y*z", "J")],
            [("x*z + y^{j1+1}", "I"), "0"],
            [("y*z", "I"), ("x*z", "I")],
            ["0", ("x^{i+1} + y^{j2+1}", "I")],
        ],
        "P_compact": None,
        "T": [
            [("a^{i+2}", "I"), ("a*b^2", "J")],
            [("a^2*b + b^{j1+2}", "I"), "0"],
            [("a*b^2", "I"), ("a^2*b", "I")],
            ["0", ("a^{i+2} + b^{j2+2}", "I")],
        ],
    },
    "A2": {
        "datum": "x[{i}]- y[{j}]-", "band": False,
        "params": {"i": 2, "j": 1},
        "unmerged": [["x^{i}", "0"], ["u", "y^{j}"], ["0", "v"]],
        "merged": [["x^{i}"], ["u + y^{j}"], ["v"]],
        "P": [["x^{i+1}"], ["x*z + y^{j+1}"], ["y*z"]],
        "P_compact": None,
        "T": [["a^{i+2}"], ["a^2*b + b^{j+2}"], ["a*b^2"]],
    },
    "A3": {
        "datum": "x[0] y[{j1}]- x[{i}]- y[{j2}]+", "band": False,
        "params": {"i": 2, "j1": 1, "j2": 3},
        "unmerged": [
            ["x", "0", "y^{j1+1}", "0"],
            ["0", "x^{i+1}", "v*y", "0"],
            ["0", "u*x", "0", "v*y"],
            ["0", "0", "0", "y^{j2+1}"],
        ],
        "merged": [["x + y^{j1+1}", "0"], ["v*y", "x^{i+1}"], ["0", "u*x + v*y"], ["0", "y^{j2+1}"]],
        "P": [["x + y^{j1+1}", "0"], ["y*z", "x^{i+1}"], ["0", "x*z + y*z"], ["0", "y^{j2+1}"]],
        "P_compact": None,
        "T": [["a^2 + b^{j1+2}", "0"], ["a*b^2", "a^{i+2}"], ["0", "a^2*b + a*b^2"], ["0", "b^{j2+2}"],
              ["a^2*b", "0"]],
    },
    "A4": {
        "datum": "x[inf] y[{j}]+ x[{i}]- y[inf]", "band": False,
        "params": {"i": 2, "j": 3},
        "unmerged": [["u", "0", "v", "0"], ["0", "x^{i}", "y^{j}", "0"], ["0", "u", "0", "v"]],
        "merged": [["u + v", "0"], ["y^{j}", "x^{i}"], ["0", "u + v"]],
        "P": [["x*z + y*z", "0"], ["y^{j+1}", "x^{i+1}"], ["0", "x*z + y*z"]],
        "P_compact": [["z", "0"], ["y^{j}", "x^{i}"], ["0", "z"]],
        "T": [["a^2*b + a*b^2", "0"], ["b^{j+2}", "a^{i+2}"], ["0", "a^2*b + a*b^2"]],
    },
}

_PARAM = re.compile(r"\{(\w+?)([+-]\d+)?\}")


def _fill(template: str, params: dict) -> str:
    def sub(mo):
        return str(params[mo.group(1)] + int(mo.group(2) or 0))

    return _PARAM.sub(sub, template)


def _expand_columns(ring, cols, params, m=1, lam=1):
    J = jordan_block(m, lam)
    out = []
    for col in cols:
        for c in range(m):
            entries = []
            for cell in col:
                if cell == "0":
                    entries += [ring.zero()] * m
                    continue
                text, block = cell if isinstance(cell, tuple) else (cell, "")
                f = ring.parse(_fill(text, params))
                for a in range(m):
                    coeff = J[a][c] if block == "J" else Fraction(int(a == c))
                    entries.append(f.scale(coeff) if coeff else ring.zero())
            out.append(entries)
    return PolyMatrix.from_columns(ring, out)


def presentation_example(name: str):
    ex = PRESENTATION_EXAMPLES[name]
    params = ex["params"]
    text = _fill(ex["datum"], params)
    m, lam = params.get("m", 1), params.get("lam", 1)
    if ex["band"]:
        d = validate_band(parse_word(text), m, Fraction(lam))
    else:
        d = validate_string(parse_word(text))
    expected = {}
    for key, ring in (("unmerged", A_RING), ("merged", A_RING), ("P", P_RING), ("P_compact", P_RING),
                      ("T", T_RING)):
        cols = ex[key]
        expected[key] = None if cols is None else _expand_columns(ring, cols, params, m, lam)
    return d, expected


def computed_presentations(d):
    a = build(d)
    am = merge_rows(a)
    p = restrict_to_P(am, d)
    return {
        "unmerged": a.select_rows(a.display_order()).gens,
        "merged": am.gens,
        "P": p.gens,
        "P_compact": (lambda q: None if q is None else q.gens)(compact_form_P(p, d)),
        "T": induce_to_T(am, d).gens,
    }


def check_presentation_example(name: str) -> dict:
    d, expected = presentation_example(name)
    got = computed_presentations(d)
    return {k: got[k] == expected[k] for k in expected}
