"""Matrix factorizations of a^2 b^2 over k[a,b] and their doubling to a^2 b^2 + uv."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .ring import FREE2, FREE4, T_RING, PolyMatrix, RingElem, RingSpec, format_elem, format_latex


class UnknownRow(KeyError):
    pass


class MissingParameter(ValueError):
    pass


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class MatrixFactorization:
    phi: PolyMatrix
    psi: PolyMatrix
    potential: RingElem

    @property
    def size(self) -> int:
        return self.phi.nrows

    @property
    def ring(self) -> RingSpec:
        return self.phi.ring

    def to_json_obj(self):
        return {
            "size": self.size,
            "potential": format_elem(self.potential),
            "phi": self.phi.to_strings(),
            "psi": self.psi.to_strings(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def to_latex(self) -> str:
        return mf_latex(self)


def _check_shapes(m: MatrixFactorization):
    n1, n2 = m.phi.shape
    k1, k2 = m.psi.shape
    if n1 != n2 or k1 != k2 or n1 != k1:
        raise ShapeError(f"phi {m.phi.shape} and psi {m.psi.shape} are not square of equal size")
    if m.phi.ring != m.psi.ring or m.potential.ring != m.phi.ring:
        raise ShapeError("phi, psi and the potential live over different rings")
    if m.phi.ring.relations:
        raise ShapeError("factorizations are checked over a relation-free ring")


def verify_mf(m: MatrixFactorization) -> bool:
    _check_shapes(m)
    fI = PolyMatrix.identity(m.ring, m.size).scale(m.potential)
    return m.phi @ m.psi == fI and m.psi @ m.phi == fI


def scalar_quotient(M: PolyMatrix, f: RingElem):
    """e with M == e*f*I (e a polynomial), or None."""
    n = M.nrows
    for r in range(n):
        for c in range(n):
            if r != c and M[r, c].terms:
                return None
    d = M[0, 0]
    e = exact_divide(d, f)
    if e is None:
        return None
    if any(M[k, k] != d for k in range(n)):
        return None
    return e


def exact_divide(g: RingElem, f: RingElem):
    """Quotient g/f in a relation-free ring if f divides g, else None."""
    ring = g.ring
    if not f.terms:
        return None
    lead_e, lead_c = f.sorted_terms()[0]
    q = ring.zero()
    r = g
    while r.terms:
        e, c = r.sorted_terms()[0]
        diff = tuple(a - b for a, b in zip(e, lead_e))
        if min(diff) < 0:
            return None
        t = ring.monomial(diff, c * ring.inverse(lead_c))
        q = q + t
        r = r - t * f
    return q


@dataclass(frozen=True)
class UnitVerdict:
    exact: bool  # phi psi = psi phi = f I
    unit: RingElem | None  # e with phi psi = psi phi = e f I, when such a polynomial exists
    invertible: bool  # e has nonzero constant term, so (phi, psi e^-1) factors f over power series


def verify_mf_up_to_unit(m: MatrixFactorization) -> UnitVerdict:
    _check_shapes(m)
    a = m.phi @ m.psi
    b = m.psi @ m.phi
    e1 = scalar_quotient(a, m.potential)
    e2 = scalar_quotient(b, m.potential)
    if e1 is None or e2 is None or e1 != e2:
        return UnitVerdict(False, None, False)
    const = e1.terms.get((0,) * m.ring.nvars, 0)
    return UnitVerdict(e1 == m.ring.one(), e1, const != 0)


# ---------------------------------------------------------------- the table

# row id, parameters used, ideal generators (in T), phi, psi; entries use i, j, L for lambda and M for 1/lambda
_MF_ROWS = [
    ("(a^2)", "", ["a^2"], [["b^2"]], [["a^2"]]),
    ("(a^2b)", "", ["a^2*b"], [["b"]], [["a^2*b"]]),
    ("(a^{i+2},a^2b)", "i", ["a^{i+2}", "a^2*b"],
     [["b", "0"], ["-a^{i}", "b"]],
     [["a^2*b", "0"], ["a^{i+2}", "a^2*b"]]),
    ("(a^{i+1}+b^{j+1},a^2b,ab^2)", "ij", ["a^{i+1} + b^{j+1}", "a^2*b", "a*b^2"],
     [["a*b", "0", "0"], ["-a^{i}", "b", "0"], ["-b^{j}", "0", "a"]],
     [["a*b", "0", "0"], ["a^{i+1}", "a^2*b", "0"], ["b^{j+1}", "0", "a*b^2"]]),
    ("(a^{i+3},a^2b+b^2,ab^2)", "i", ["a^{i+3}", "a^2*b + b^2", "a*b^2"],
     [["b", "0", "0"], ["-a^{i+1}", "a*b", "0"], ["0", "-b", "a"]],
     [["a^2*b", "0", "0"], ["a^{i+2}", "a*b", "0"], ["a^{i+1}*b", "b^2", "a*b^2"]]),
    ("(a^3,a^2b+b^2)", "", ["a^3", "a^2*b + b^2"],
     [["a*b", "0"], ["-a^2", "a^2*b"]],
     [["a*b", "0"], ["a", "b"]]),
    ("(a^{i+2},a^2b+b^{j+2},ab^2)", "ij", ["a^{i+2}", "a^2*b + b^{j+2}", "a*b^2"],
     [["b", "0", "0"], ["-a^{i}", "a*b", "0"], ["a^{i-1}*b^{j}", "-b^{j+1}", "a"]],
     [["a^2*b", "0", "0"], ["a^{i+1}", "a*b", "0"], ["0", "b^{j+2}", "a*b^2"]]),
    ("(a^{i+2},b^{j+2},a^2b+ab^2)", "ij", ["a^{i+2}", "b^{j+2}", "a^2*b + a*b^2"],
     [["b", "0", "0"], ["0", "a", "0"], ["-a^{i}", "-b^{j}", "a*b"]],
     [["a^2*b", "0", "0"], ["0", "a*b^2", "0"], ["a^{i+1}", "b^{j+1}", "a*b"]]),
    ("(a^2b+b^{j+1},ab^2)", "j", ["a^2*b + b^{j+1}", "a*b^2"],
     [["a*b", "0"], ["-b^{j}", "a"]],
     [["a*b", "0"], ["b^{j+1}", "a*b^2"]]),
    ("(b^{j+2},a^2b+ab^2)", "j", ["b^{j+2}", "a^2*b + a*b^2"],
     [["a", "0"], ["-b^{j}", "a*b"]],
     [["a*b^2", "0"], ["b^{j+1}", "a*b"]]),
    ("(ab)", "", ["a*b"], [["a*b"]], [["a*b"]]),
    ("(a^{i+2}+Lab^2,a^2b+b^{j+2})", "ijL", ["a^{i+2} + L*a*b^2", "a^2*b + b^{j+2}"],
     [["a*b", "-b^{j+1}"], ["-a^{i+1}", "L*a*b"]],
     [["a*b", "M*b^{j+1}"], ["M*a^{i+1}", "M*a*b"]]),
    ("(a^{i+2}+Lb^{j+2},a^2b+ab^2)", "ijL", ["a^{i+2} + L*b^{j+2}", "a^2*b + a*b^2"],
     [["a*b", "0"], ["-L*b^{j+1} - a^{i+1}", "a*b"]],
     [["a*b", "0"], ["L*b^{j+1} + a^{i+1}", "a*b"]]),
]

MF_ROW_IDS = tuple(r[0] for r in _MF_ROWS)

# entries changed against the printed table: (row, matrix, r, c) -> printed text
PRINTED_VARIANTS = {
    ("(a^3,a^2b+b^2)", "psi", 1, 0): "-a",
    ("(a^{i+2},a^2b+b^{j+2},ab^2)", "phi", 2, 0): "-a^{i-1}*b^{j}",
}

_UNICODE = str.maketrans({"²": "^2", "³": "^3", "λ": "L", "·": "", "*": "", " ": "", "−": "-"})


def normalize_row_id(row_id) -> str:
    if isinstance(row_id, int):
        if not 1 <= row_id <= len(_MF_ROWS):
            raise UnknownRow(row_id)
        return MF_ROW_IDS[row_id - 1]
    text = str(row_id).translate(_UNICODE)
    if text.isdigit():
        return normalize_row_id(int(text))
    if text not in MF_ROW_IDS:
        raise UnknownRow(row_id)
    return text


def row_parameters(row_id) -> str:
    rid = normalize_row_id(row_id)
    return next(r[1] for r in _MF_ROWS if r[0] == rid)


def _subst(template: str, i, j, lam) -> str:
    out = template
    if i is not None:
        for k in (3, 2, 1):
            out = out.replace("{i+%d}" % k, str(i + k))
        out = out.replace("{i-1}", str(i - 1)).replace("{i}", str(i))
    if j is not None:
        for k in (2, 1):
            out = out.replace("{j+%d}" % k, str(j + k))
        out = out.replace("{j}", str(j))
    if lam is not None:
        lam = Fraction(lam)
        inv = 1 / lam
        out = out.replace("L", f"({lam.numerator}/{lam.denominator})")
        out = out.replace("M", f"({inv.numerator}/{inv.denominator})")
    return out


def _check_params(rid, params, i, j, lam):
    for name, val in (("i", i), ("j", j), ("L", lam)):
        if name in params:
            if val is None:
                raise MissingParameter(f"row {rid} needs parameter {'lambda' if name == 'L' else name}")
            if name == "L":
                if Fraction(val) == 0:
                    raise ValueError("lambda must be nonzero")
            elif not isinstance(val, int) or val < 1:
                raise ValueError(f"{name} must be a positive integer")


def golden_mf(row_id, i: int | None = None, j: int | None = None, lam=None,
              verbatim: bool = False) -> MatrixFactorization:
    """The tabulated factorization with parameters substituted (unused parameters are ignored).

    verbatim=True restores the two printed entries that break the identity.
    """
    rid = normalize_row_id(row_id)
    _, params, _, phi_t, psi_t = next(r for r in _MF_ROWS if r[0] == rid)
    _check_params(rid, params, i, j, lam)
    i = i if "i" in params else None
    j = j if "j" in params else None
    lam = lam if "L" in params else None
    mats = {}
    for name, tmpl in (("phi", phi_t), ("psi", psi_t)):
        rows = []
        for r, row in enumerate(tmpl):
            out = []
            for c, entry in enumerate(row):
                if verbatim:
                    entry = PRINTED_VARIANTS.get((rid, name, r, c), entry)
                out.append(FREE2.parse(_subst(entry, i, j, lam)))
            rows.append(out)
        mats[name] = PolyMatrix(FREE2, rows)
    return MatrixFactorization(mats["phi"], mats["psi"], FREE2.parse("a^2*b^2"))


def table_ideal(row_id, i=None, j=None, lam=None) -> tuple:
    """Left column of the table: generators of the ideal in T."""
    rid = normalize_row_id(row_id)
    _, params, gens, _, _ = next(r for r in _MF_ROWS if r[0] == rid)
    _check_params(rid, params, i, j, lam)
    return tuple(T_RING.parse(_subst(g, i, j, lam)) for g in gens)


def parameter_grid(row_id, indices=(1, 2, 3, 4), lambdas=(1, 2, 3)):
    params = row_parameters(row_id)
    iis = indices if "i" in params else (None,)
    jjs = indices if "j" in params else (None,)
    lls = lambdas if "L" in params else (None,)
    return [(i, j, l) for i in iis for j in jjs for l in lls]


def syzygy_check(row_id, i=None, j=None, lam=None) -> bool:
    """The ideal generators g satisfy g.phi = 0 in T (the cokernel relation)."""
    m = golden_mf(row_id, i, j, lam)
    g = table_ideal(row_id, i, j, lam)
    if len(g) != m.size:
        return False
    phi_t = m.phi.map(lambda f: f.substitute(T_RING, {"a": T_RING.gen("a"), "b": T_RING.gen("b")}), T_RING)
    row = PolyMatrix(T_RING, [g])
    return (row @ phi_t).is_zero()


# pairing of ideal-table rows with table rows, with the parameter shift used
# (ideal row id, mf row id, i -> i', j -> j', relation of the ideals)
MF_PAIRING = (
    ("x[0]", "(a^2)", None, None, "equal"),
    ("x[inf]", "(a^2b)", None, None, "equal"),
    ("x[i]-", "(a^{i+2},a^2b)", "i", None, "equal"),
    ("x[0] y[0]", "(a^{i+1}+b^{j+1},a^2b,ab^2)", "1", "1", "equal"),
    ("x[i]+ y[0]", "(a^{i+1}+b^{j+1},a^2b,ab^2)", "i+1", "1", "equal"),
    ("x[i]+ y[j]-", "(a^{i+1}+b^{j+1},a^2b,ab^2)", "i+1", "j+1", "equal"),
    ("x[i]- y[0]", "(a^{i+3},a^2b+b^2,ab^2)", "i-1", None, "equal"),  # i >= 2
    ("x[i]- y[0]", "(a^3,a^2b+b^2)", None, None, "equal"),  # i = 1
    ("x[i]- y[j]-", "(a^{i+2},a^2b+b^{j+2},ab^2)", "i", "j", "equal"),
    ("x[i]- y[j]+", "(a^{i+2},b^{j+2},a^2b+ab^2)", "i", "j", "equal"),
    ("x[inf] y[0]", "(a^2b+b^{j+1},ab^2)", None, "1", "equal"),
    ("x[inf] y[j]-", "(a^2b+b^{j+1},ab^2)", None, "j+1", "equal"),
    ("x[inf] y[j]+", "(b^{j+2},a^2b+ab^2)", None, "j", "equal"),
    ("x[inf] y[inf]", "(ab)", None, None, "isomorphic"),
    ("band(x[i]- y[j]-)", "(a^{i+2}+Lab^2,a^2b+b^{j+2})", "i", "j", "equal"),
    ("band(x[i]- y[j]+)", "(a^{i+2}+Lb^{j+2},a^2b+ab^2)", "i", "j", "equal"),
)


def _shift(expr, n):
    if expr is None:
        return None
    if expr.isdigit():
        return int(expr)
    base = n
    if expr.endswith("+1"):
        return base + 1
    if expr.endswith("-1"):
        return base - 1
    return base


def mf_for_ideal_row(ideal_row: str, i: int = 1, j: int = 1, lam=1):
    """(mf row id, i', j', lambda, relation) for an ideal-table row, or None."""
    for rid, mrow, si, sj, rel in MF_PAIRING:
        if rid != ideal_row:
            continue
        if rid == "x[i]- y[0]":
            if (i == 1) != (mrow == "(a^3,a^2b+b^2)"):
                continue
        params = row_parameters(mrow)
        return (mrow, _shift(si, i) if "i" in params else None, _shift(sj, j) if "j" in params else None,
                lam if "L" in params else None, rel)
    return None


# ---------------------------------------------------------------- Knörrer doubling

def _embed(M: PolyMatrix) -> PolyMatrix:
    imgs = {"a": FREE4.gen("a"), "b": FREE4.gen("b")}
    return M.map(lambda f: f.substitute(FREE4, imgs), FREE4)


def _blocks(tl, tr, bl, br):
    top = tl.hstack(tr)
    bottom = bl.hstack(br)
    return top.vstack(bottom)


def knorrer_double(m: MatrixFactorization, verbatim: bool = False) -> MatrixFactorization:
    """((phi, -uI), (vI, psi)) paired with ((psi, uI), (-vI, phi)) factors f + uv.

    verbatim=True uses the printed second factor ((psi, vI), (-uI, phi)), whose
    product carries u^2 and v^2 terms instead of uv.
    """
    if m.ring != FREE2:
        raise ShapeError("doubling expects a factorization over k[a,b]")
    _check_shapes(m)
    n = m.size
    phi, psi = _embed(m.phi), _embed(m.psi)
    u, v = FREE4.gen("u"), FREE4.gen("v")
    I = PolyMatrix.identity(FREE4, n)
    M1 = _blocks(phi, I.scale(-u), I.scale(v), psi)
    if verbatim:
        M2 = _blocks(psi, I.scale(v), I.scale(-u), phi)
    else:
        M2 = _blocks(psi, I.scale(u), I.scale(-v), phi)
    f = m.potential.substitute(FREE4, {"a": FREE4.gen("a"), "b": FREE4.gen("b")}) + u * v
    return MatrixFactorization(M1, M2, f)


def det(M: PolyMatrix) -> RingElem:
    n = M.nrows
    if n != M.ncols:
        raise ShapeError("determinant of a non-square matrix")
    if n == 0:
        return M.ring.one()
    if n == 1:
        return M[0, 0]
    acc = M.ring.zero()
    for c in range(n):
        if not M[0, c].terms:
            continue
        minor = PolyMatrix(M.ring, [[M[r, k] for k in range(n) if k != c] for r in range(1, n)])
        term = M[0, c] * det(minor)
        acc = acc + term if c % 2 == 0 else acc - term
    return acc


# ---------------------------------------------------------------- display

def _pmatrix(M: PolyMatrix) -> str:
    body = " \\\\ ".join(" & ".join(format_latex(f) for f in row) for row in M.rows)
    return f"\\begin{{pmatrix}} {body} \\end{{pmatrix}}"


def mf_latex(m: MatrixFactorization) -> str:
    return f"{_pmatrix(m.phi)}\\,{_pmatrix(m.psi)}"
