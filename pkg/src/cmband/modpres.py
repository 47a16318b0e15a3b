"""Generator presentations of string and band modules over A, P and T.

A presentation is a matrix over a ring whose columns generate a submodule of
the frame N, a direct sum of ideals X_i = (u, x^i), Y_j = (v, y^j).  Row k of
the matrix is the coordinate in the k-th summand.  Because the X and Y
coordinates live in different branches, an X-row entry only involves x and u
and a Y-row entry only y and v; merging an X-row with a Y-row therefore loses
nothing, and the merged matrix lives in A itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .bunch import (
    ALPHA, BETA, INF, SIM, XI, ZETA,
    BandDatum, CyclicWord, FullWord, Letter, StringDatum,
    _fmt_frac, format_word, module_to_bunch, parse_word, tau_word, validate_band,
    validate_string, _rotate,
)
from .canon import CanonicalForm, canonical_form
from .linalg import Equal, NotMember, Unequal, Unknown, submodules_equal
from .ring import (
    A_RING, P_RING, T_RING, PolyMatrix, RingElem, RingSpec, format_elem, format_latex,
)


class ExceptionalWord(ValueError):
    pass


class TranslationError(ValueError):
    pass


class UnknownRow(KeyError):
    pass


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class SummandLabel:
    family: str  # "X" or "Y"
    index: object  # int >= 0 or INF

    def __str__(self):
        return f"{self.family}{'inf' if self.index == INF else self.index}"

    def swapped(self):
        return SummandLabel("Y" if self.family == "X" else "X", self.index)


@dataclass(frozen=True)
class Presentation:
    ring: RingSpec
    frame: tuple  # per row: tuple of SummandLabel (two labels once merged)
    gens: PolyMatrix  # columns are the generators
    exceptional: bool = False
    merged: bool = False
    origin: tuple = ()  # per row: tuple of (letter position, copy) it came from

    def __post_init__(self):
        if len(self.frame) != self.gens.nrows:
            raise ShapeMismatch("frame length differs from the number of rows")
        if self.gens.ring != self.ring:
            raise ShapeMismatch("generator matrix over the wrong ring")

    @property
    def columns(self):
        return self.gens.columns()

    def frame_strings(self):
        return ["+".join(str(l) for l in row) for row in self.frame]

    def to_json_obj(self):
        return {
            "ring": self.ring.name,
            "frame": self.frame_strings(),
            "exceptional": self.exceptional,
            "generators": [[format_elem(f) for f in col] for col in self.columns],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def to_latex(self) -> str:
        return presentation_latex(self)

    def select_rows(self, order) -> "Presentation":
        order = list(order)
        if sorted(order) != list(range(self.gens.nrows)):
            raise ShapeMismatch("not a row permutation")
        return replace(
            self,
            frame=tuple(self.frame[k] for k in order),
            gens=self.gens.select_rows(order),
            origin=tuple(self.origin[k] for k in order) if self.origin else (),
        )

    def nonzero_columns(self) -> "Presentation":
        cols = [c for c in self.columns if any(f.terms for f in c)]
        return replace(self, gens=PolyMatrix.from_columns(self.ring, cols, self.gens.nrows))

    def display_order(self):
        """Row order used in the printed examples: X-rows first, then Y-rows, each in word order."""
        xs = [k for k, row in enumerate(self.frame) if row[0].family == "X"]
        ys = [k for k, row in enumerate(self.frame) if row[0].family == "Y"]
        return xs + ys


# ---------------------------------------------------------------- letter entries

def _x_entries(l: Letter, divided: bool):
    """(left entry, right entry) of an x-letter; None where the letter has no side."""
    A = A_RING
    x, u = A.gen("x"), A.gen("u")
    if l.index == 0:
        return x, x
    if l.index == INF:
        return (u, u) if divided else (u * x, u * x)
    power = x ** l.index if divided else x ** (l.index + 1)
    other = u if divided else u * x
    return (other, power) if l.sign == "+" else (power, other)


def _y_entries(l: Letter, divided: bool):
    A = A_RING
    y, v = A.gen("y"), A.gen("v")
    if l.index == 0:
        return y, y
    if l.index == INF:
        return (v, v) if divided else (v * y, v * y)
    power = y ** l.index if divided else y ** (l.index + 1)
    other = v if divided else v * y
    return (other, power) if l.sign == "+" else (power, other)


def letter_entries(l: Letter, divided: bool = True):
    return _x_entries(l, divided) if l.axis == "x" else _y_entries(l, divided)


def _label(l: Letter) -> SummandLabel:
    return SummandLabel(l.axis.upper(), l.index)


# ---------------------------------------------------------------- builders

def build_string_module(s: StringDatum) -> Presentation:
    word = s.word
    divided = not s.has_zero
    r = len(word)
    z = A_RING.zero()
    ent = [letter_entries(l, divided) for l in word]
    cols = []

    def col(pairs):
        c = [z] * r
        for k, f in pairs:
            c[k] = f
        cols.append(c)

    if word[0].finite:
        col([(0, ent[0][0])])
    for k in range(r - 1):
        col([(k, ent[k][1]), (k + 1, ent[k + 1][0])])
    if word[-1].finite or r == 1:
        col([(r - 1, ent[-1][1])])
    frame = tuple((_label(l),) for l in word)
    origin = tuple(((k, 0),) for k in range(r))
    return Presentation(A_RING, frame, PolyMatrix.from_columns(A_RING, cols, r), s.exceptional, False, origin)


def jordan_block(m: int, lam) -> list:
    lam = Fraction(lam)
    return [[lam if a == b else (Fraction(1) if b == a + 1 else Fraction(0)) for b in range(m)] for a in range(m)]


def invert_matrix(M) -> list:
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def build_band_module(b: BandDatum) -> Presentation:
    word, m = b.word, b.m
    L = len(word)
    nrows = L * m
    z = A_RING.zero()
    ent = [letter_entries(l, True) for l in word]
    J = jordan_block(m, b.lam)
    cols = []

    def block(k_left, f_left, k_right, f_right, jordan_on_left=False):
        for c in range(m):
            col = [z] * nrows
            for a in range(m):
                lc = (J[a][c] if jordan_on_left else Fraction(int(a == c)))
                if lc:
                    col[k_left * m + a] = col[k_left * m + a] + f_left * lc
                if a == c:
                    col[k_right * m + a] = col[k_right * m + a] + f_right
            cols.append(col)

    # wrap column first: left entry of the first letter, right entry of the last (with J)
    block(L - 1, ent[L - 1][1], 0, ent[0][0], jordan_on_left=True)
    for k in range(L - 1):
        block(k, ent[k][1], k + 1, ent[k + 1][0])
    frame = tuple((_label(l),) for l in word for _ in range(m))
    origin = tuple(((k, c),) for k in range(L) for c in range(m))
    return Presentation(A_RING, frame, PolyMatrix.from_columns(A_RING, cols, nrows), False, False, origin)


def build(d) -> Presentation:
    if isinstance(d, BandDatum):
        return build_band_module(d)
    return build_string_module(d)


# ---------------------------------------------------------------- merging

def _pair_index(frame_unmerged, origin):
    letters = []
    for row, org in zip(frame_unmerged, origin):
        k = org[0][0]
        while len(letters) <= k:
            letters.append(None)
        letters[k] = row[0].family
    off = 1 if letters and letters[0] == "Y" else 0
    return [(k + off) // 2 for k in range(len(letters))]


def merge_rows(p: Presentation) -> Presentation:
    if p.merged:
        raise ValueError("presentation is already merged")
    pair = _pair_index(p.frame, p.origin)
    groups: dict = {}
    for row_idx, org in enumerate(p.origin):
        k, c = org[0]
        groups.setdefault((pair[k], c), []).append(row_idx)
    keys = sorted(groups)
    rows, frame, origin = [], [], []
    z = p.ring.zero()
    for key in keys:
        idx = groups[key]
        acc = [z] * p.gens.ncols
        for r in idx:
            acc = [a + f for a, f in zip(acc, p.gens.rows[r])]
        rows.append(acc)
        frame.append(tuple(p.frame[r][0] for r in idx))
        origin.append(tuple(p.origin[r][0] for r in idx))
    return Presentation(p.ring, tuple(frame), PolyMatrix(p.ring, rows), p.exceptional, True, tuple(origin))


def merge_is_faithful(p: Presentation) -> bool:
    """Entries of X-rows use only x,u and Y-rows only y,v, none constant, so row sums can be split back."""
    xi = [A_RING.var_index(n) for n in "xu"]
    yi = [A_RING.var_index(n) for n in "yv"]
    for row, lab in zip(p.gens.rows, p.frame):
        allowed = xi if lab[0].family == "X" else yi
        for f in row:
            for e in f.terms:
                if sum(e) == 0 or any(e[k] for k in range(4) if k not in allowed):
                    return False
    return True


# ---------------------------------------------------------------- translations

def _rule_p1(e):
    x, y, u, v = e
    if u == v == 0 and y == 0 and x >= 1:
        return (x + 1, 0, 0)
    if u == v == 0 and x == 0 and y >= 1:
        return (0, y + 1, 0)
    if e == (0, 0, 1, 0):
        return (1, 0, 1)
    if e == (0, 0, 0, 1):
        return (0, 1, 1)
    raise TranslationError(f"no P-translation for monomial {e}")


def _rule_p2(e):
    x, y, u, v = e
    if u == v == 0 and y == 0 and x >= 1:
        return (x, 0, 0)
    if u == v == 0 and x == 0 and y >= 1:
        return (0, y, 0)
    if e == (1, 0, 1, 0):
        return (1, 0, 1)
    if e == (0, 1, 0, 1):
        return (0, 1, 1)
    raise TranslationError(f"no P-translation for monomial {e}")


def _rule_t1(e):
    x, y, u, v = e
    if u == v == 0 and y == 0 and x >= 1:
        return (x + 2, 0)
    if u == v == 0 and x == 0 and y >= 1:
        return (0, y + 2)
    if e == (0, 0, 1, 0):
        return (2, 1)
    if e == (0, 0, 0, 1):
        return (1, 2)
    raise TranslationError(f"no T-translation for monomial {e}")


def _rule_t2(e):
    x, y, u, v = e
    if u == v == 0 and y == 0 and x >= 1:
        return (x + 1, 0)
    if u == v == 0 and x == 0 and y >= 1:
        return (0, y + 1)
    if e == (1, 0, 1, 0):
        return (2, 1)
    if e == (0, 1, 0, 1):
        return (1, 2)
    raise TranslationError(f"no T-translation for monomial {e}")


def _translate(f: RingElem, target: RingSpec, rule) -> RingElem:
    return target.from_terms((rule(e), c) for e, c in f.terms.items())


def _has_zero_letter(p: Presentation, d=None) -> bool:
    if d is not None:
        return d.has_zero
    return any(l.index == 0 for row in p.frame for l in row)


def _is_exceptional(p: Presentation, d=None) -> bool:
    if d is not None:
        return getattr(d, "exceptional", False)
    return p.exceptional


def restrict_to_P(p: Presentation, d=None, exceptional: str = "raise") -> Presentation:
    """Entrywise translation into P.

    For the exceptional word x0 y0 the A-generators do not generate over P;
    with exceptional="adjoin" the columns u*w are added first, which is always
    sound since A = P + P*u.
    """
    if p.ring != A_RING:
        raise TranslationError("restrict_to_P expects a presentation over A")
    gens = p.gens
    if _is_exceptional(p, d):
        if exceptional != "adjoin":
            raise ExceptionalWord("x[0] y[0] is not generated over P by its A-generators")
        u = A_RING.gen("u")
        gens = gens.hstack(gens.scale(u))
    rule = _rule_p2 if _has_zero_letter(p, d) else _rule_p1
    out = gens.map(lambda f: _translate(f, P_RING, rule), P_RING)
    q = Presentation(P_RING, p.frame, out, p.exceptional, p.merged, p.origin)
    return q.nonzero_columns() if _is_exceptional(p, d) else q


def compact_condition(d) -> bool:
    """When the z-compact P-form exists: x-first word of even length, no 0-letters,
    every x-sign minus and every y-sign plus (0/inf letters unsigned)."""
    if d.has_zero:
        return False
    w = d.word
    if len(w) % 2 or w[0].axis != "x":
        return False
    for l in w:
        if l.sign is None:
            continue
        if (l.axis == "x") != (l.sign == "-"):
            return False
    return True


def compact_form_P(p_plain: Presentation, d) -> Presentation | None:
    """Divide the merged plain P-form by (x+y): x^a -> x^(a-1), y^b -> y^(b-1), xz + yz -> z."""
    if not compact_condition(d):
        return None
    if not p_plain.merged:
        raise ValueError("compact form needs a merged presentation")
    P = P_RING

    def divide(f: RingElem) -> RingElem:
        terms = dict(f.terms)
        out = []
        xz, yz = (1, 0, 1), (0, 1, 1)
        if xz in terms or yz in terms:
            if terms.get(xz) != terms.get(yz):
                raise TranslationError(f"{format_elem(f)}: xz and yz do not pair up")
            out.append(((0, 0, 1), terms.pop(xz)))
            terms.pop(yz)
        for e, c in terms.items():
            a, b, zz = e
            if zz == 0 and a >= 2 and b == 0:
                out.append(((a - 1, 0, 0), c))
            elif zz == 0 and b >= 2 and a == 0:
                out.append(((0, b - 1, 0), c))
            else:
                raise TranslationError(f"{format_elem(f)} is not divisible by x+y in the table sense")
        return P.from_terms(out)

    gens = p_plain.gens.map(divide)
    q = replace(p_plain, gens=gens)
    s = P.gen("x") + P.gen("y")
    if q.gens.scale(s) != p_plain.gens:
        raise TranslationError("compact form does not reproduce the plain form")
    return q


def induce_to_T(p: Presentation, d=None) -> Presentation:
    if p.ring != A_RING:
        raise TranslationError("induce_to_T expects a presentation over A")
    gens = p.gens
    if _has_zero_letter(p, d):
        A = A_RING
        u, v = A.gen("u"), A.gen("v")
        ex, ey = (1, 0, 0, 0), (0, 1, 0, 0)
        extra = []
        for col in gens.columns():
            if any(ex in f.terms for f in col):
                extra.append([u * f for f in col])
            if any(ey in f.terms for f in col):
                extra.append([v * f for f in col])
        if extra:
            gens = gens.hstack(PolyMatrix.from_columns(A, extra, gens.nrows))
        rule = _rule_t2
    else:
        rule = _rule_t1
    out = gens.map(lambda f: _translate(f, T_RING, rule), T_RING)
    return Presentation(T_RING, p.frame, out, p.exceptional, p.merged, p.origin)


# ---------------------------------------------------------------- involution

_TAU_IMAGES = {
    "A": {"x": "y", "y": "x", "u": "v", "v": "u"},
    "P": {"x": "y", "y": "x", "z": "z"},
    "T": {"a": "b", "b": "a"},
}


def tau_elem(f: RingElem) -> RingElem:
    ring = f.ring
    names = _TAU_IMAGES[ring.name]
    perm = [ring.var_index(names[v]) for v in ring.variables]
    out = []
    for e, c in f.terms.items():
        ne = [0] * ring.nvars
        for k, a in enumerate(e):
            ne[perm[k]] = a
        out.append((tuple(ne), c))
    return ring.from_terms(out)


def involution_tau(obj):
    """tau on words, data, ring elements and presentations."""
    if isinstance(obj, RingElem):
        return tau_elem(obj)
    if isinstance(obj, Presentation):
        return Presentation(
            obj.ring,
            tuple(tuple(l.swapped() for l in row) for row in obj.frame),
            obj.gens.map(tau_elem),
            obj.exceptional, obj.merged, obj.origin,
        )
    if isinstance(obj, StringDatum):
        return validate_string(tau_word(obj.word))
    if isinstance(obj, BandDatum):
        # swapping gives a y-first word; rotate one letter so that it starts with x again
        return validate_band(_rotate(tau_word(obj.word), 1), obj.m, obj.lam)
    if isinstance(obj, tuple):
        return tau_word(obj)
    raise TypeError(f"tau is not defined on {type(obj).__name__}")


# ---------------------------------------------------------------- frame maps

def reversal_permutation(p: Presentation):
    """Row order of p read backwards (letters reversed, copies kept)."""
    n = p.gens.nrows
    return list(range(n - 1, -1, -1))


def band_rotation_transform(p: Presentation, shift: int, m: int, lam) -> Presentation:
    """Image of a band presentation under the frame isomorphism matching the
    word rotated to start at letter `shift`.

    The summands of letters shift..end are acted on by J^{-1} (a constant
    automorphism of X_i^m resp. Y_j^m), which moves the Jordan block from the
    old wrap column to the new one; then the rows are permuted.
    """
    L = p.gens.nrows // m
    shift %= L
    if shift == 0:
        return p
    Jinv = invert_matrix(jordan_block(m, lam))
    rows = [list(r) for r in p.gens.rows]
    z = p.ring.zero()
    for k in range(shift, L):
        old = rows[k * m:(k + 1) * m]
        new = []
        for a in range(m):
            acc = [z] * p.gens.ncols
            for c in range(m):
                if Jinv[a][c]:
                    acc = [s + f * Jinv[a][c] for s, f in zip(acc, old[c])]
            new.append(acc)
        rows[k * m:(k + 1) * m] = new
    q = replace(p, gens=PolyMatrix(p.ring, rows))
    order = [k * m + c for k in list(range(shift, L)) + list(range(shift)) for c in range(m)]
    return q.select_rows(order)


def band_rotation_permutation_only(p: Presentation, shift: int, m: int) -> Presentation:
    L = p.gens.nrows // m
    shift %= L
    order = [k * m + c for k in list(range(shift, L)) + list(range(shift)) for c in range(m)]
    return p.select_rows(order)


# ---------------------------------------------------------------- comparison

def same_submodule(p1: Presentation, p2: Presentation, perm=None, search_degree=None):
    if perm is not None:
        p2 = p2.select_rows(perm)
    if p1.ring != p2.ring or p1.gens.nrows != p2.gens.nrows:
        raise ShapeMismatch("presentations differ in ring or row count")
    return submodules_equal(p1.columns, p2.columns, p1.ring, search_degree)


def is_locally_free(d) -> bool:
    if isinstance(d, BandDatum):
        return True
    return not any(l.index == INF for l in d.word)


# ---------------------------------------------------------------- reconstruction from canonical forms

def reconstruct(w, cf: CanonicalForm) -> Presentation:
    """Module generators read off a canonical form: weight the stripes, merge ~-paired
    rows into one row per letter, and scale by (x+y) when xi_0 or zeta_0 occurs."""
    A = A_RING
    x, y, u, v = A.gens()
    has_zero = any(s.kind in (XI, ZETA) and s.index == 0 for s in w.symbols)

    def weight(s):
        if s.kind == XI:
            return x ** s.index if s.index else A.one()
        if s.kind == ZETA:
            return y ** s.index if s.index else A.one()
        return u if s.kind == ALPHA else v

    # letters in order of appearance, with the (symbol, occurrence) rows they merge
    occ: dict = {}
    letters = []
    syms, rels = w.symbols, w.relations
    k = 0
    n = len(syms)
    while k < n:
        s = syms[k]
        occ[s] = occ.get(s, 0) + 1
        if s.chain == "F":
            k += 1
            continue
        members = [(s, occ[s])]
        if s.paired:
            t = syms[k + 1]
            occ[t] = occ.get(t, 0) + 1
            members.append((t, occ[t]))
            k += 2
        else:
            k += 1
        letters.append((s.chain, members))
    m = cf.m
    index = {}
    for ax, rows, theta in (("x", cf.rows_x, cf.theta_x), ("y", cf.rows_y, cf.theta_y)):
        for lab, row in zip(rows, theta):
            index[lab] = row
    out_rows, frame, origin = [], [], []
    for li, (ax, members) in enumerate(letters):
        for c in range(m):
            acc = [A.zero()] * cf.ncols
            for s, o in members:
                wt = weight(s)
                if has_zero:
                    wt = wt * (x if ax == "x" else y)
                acc = [a + wt * q for a, q in zip(acc, index[(s, o, c)])]
            out_rows.append(acc)
            first = members[0][0]
            idx = first.index
            frame.append((SummandLabel(ax.upper(), idx),))
            origin.append(((li, c),))
    exceptional = (not w.cyclic) and [m_[0][0] for _, m_ in letters] == [] and False
    return Presentation(A, tuple(frame), PolyMatrix(A, out_rows), exceptional, False, tuple(origin))


def reconstruct_datum(d) -> Presentation:
    w = module_to_bunch(d)
    if isinstance(d, BandDatum):
        cf = canonical_form(w, d.m, d.lam)
    else:
        cf = canonical_form(w)
    p = reconstruct(w, cf)
    return replace(p, exceptional=getattr(d, "exceptional", False))


# ---------------------------------------------------------------- the ideal table

def _inst(word_text: str, i: int, j: int) -> str:
    return word_text.replace("[i]", f"[{i}]").replace("[j]", f"[{j}]")


# row id -> (word template, band?, A-gens, P-gens, T-gens); generator strings use i, j, L (lambda)
_IDEAL_ROWS = [
    ("x[0]", "x[0]", False, ["x"], ["x"], ["a^2"]),
    ("x[inf]", "x[inf]", False, ["u"], ["x*z"], ["a^2*b"]),
    ("x[i]-", "x[i]-", False, ["x^{i}", "u"], ["x^{i+1}", "x*z"], ["a^{i+2}", "a^2*b"]),
    ("x[0] y[0]", "x[0] y[0]", False, ["1"], ["x + y", "x*z"], ["a^2 + b^2", "a^2*b", "a*b^2"]),
    ("x[i]+ y[0]", "x[i]+ y[0]", False, ["u*x", "x^{i+1} + y"], ["x*z", "x^{i+1} + y"],
     ["a^2*b", "a^{i+2} + b^2", "a*b^2"]),
    ("x[i]+ y[j]-", "x[i]+ y[j]-", False, ["u", "x^{i} + y^{j}", "v"], ["x*z", "x^{i+1} + y^{j+1}", "y*z"],
     ["a^2*b", "a^{i+2} + b^{j+2}", "a*b^2"]),
    ("x[i]- y[0]", "x[i]- y[0]", False, ["x^{i+1}", "u*x + y"], ["x^{i+1}", "x*z + y"], None),
    ("x[i]- y[j]-", "x[i]- y[j]-", False, ["x^{i}", "u + y^{j}", "v"], ["x^{i+1}", "x*z + y^{j+1}", "y*z"],
     ["a^{i+2}", "a^2*b + b^{j+2}", "a*b^2"]),
    ("x[i]- y[j]+", "x[i]- y[j]+", False, ["x^{i}", "u + v", "y^{j}"], ["x^{i}", "z", "y^{j}"],
     ["a^{i+2}", "a^2*b + a*b^2", "b^{j+2}"]),
    ("x[inf] y[0]", "x[inf] y[0]", False, ["u*x + y"], ["x*z + y"], ["a^2*b + b^2", "a*b^2"]),
    ("x[inf] y[j]-", "x[inf] y[j]-", False, ["u + y^{j}", "v"], ["x*z + y^{j+1}", "y*z"],
     ["a^2*b + b^{j+2}", "a*b^2"]),
    ("x[inf] y[j]+", "x[inf] y[j]+", False, ["u + v", "y^{j}"], ["z", "y^{j}"], ["a^2*b + a*b^2", "b^{j+2}"]),
    ("x[inf] y[inf]", "x[inf] y[inf]", False, ["u + v"], ["z"], ["a^2*b + a*b^2"]),
    ("band(x[i]- y[j]-)", "x[i]- y[j]-", True, ["x^{i} + L*v", "y^{j} + u"], ["x^{i+1} + L*y*z", "y^{j+1} + x*z"],
     ["a^{i+2} + L*a*b^2", "b^{j+2} + a^2*b"]),
    ("band(x[i]- y[j]+)", "x[i]- y[j]+", True, ["x^{i} + L*y^{j}", "u + v"], ["x^{i} + L*y^{j}", "z"],
     ["a^{i+2} + L*b^{j+2}", "a^2*b + a*b^2"]),
]

IDEAL_ROW_IDS = tuple(r[0] for r in _IDEAL_ROWS)


def _subst(template: str, i: int, j: int, lam) -> str:
    lam = Fraction(lam)
    lam_s = f"({lam.numerator}/{lam.denominator})"
    out = template
    for name, val in (("i+2", i + 2), ("i+1", i + 1), ("j+2", j + 2), ("j+1", j + 1), ("i", i), ("j", j)):
        out = out.replace("{" + name + "}", str(val))
    return out.replace("L", lam_s)


@dataclass(frozen=True)
class IdealRow:
    row_id: str
    datum: object
    gens_A: tuple
    gens_P: tuple
    gens_T: tuple
    scale_A: RingElem | None = None  # table lists the A-ideal up to this non-zero-divisor
    compact_P: bool = False


def ideal_table_row(row_id: str, i: int = 1, j: int = 1, lam=1) -> IdealRow:
    for rid, word, band, ga, gp, gt in _IDEAL_ROWS:
        if rid == row_id:
            break
    else:
        raise UnknownRow(row_id)
    if rid == "x[i]- y[0]":
        gt = ["a^3", "a^2*b + b^2"] if i == 1 else ["a^{i+2}", "a^2*b + b^2", "a*b^2"]
    text = _inst(word, i, j)
    if band:
        d = validate_band(parse_word(text), 1, Fraction(lam))
    else:
        d = validate_string(parse_word(text))
    A = tuple(A_RING.parse(_subst(g, i, j, lam)) for g in ga)
    P = tuple(P_RING.parse(_subst(g, i, j, lam)) for g in gp)
    T = tuple(T_RING.parse(_subst(g, i, j, lam)) for g in gt)
    scale = A_RING.gen("x") + A_RING.gen("y") if rid == "x[0] y[0]" else None
    return IdealRow(rid, d, A, P, T, scale, compact_condition(d))


def as_ideal(p: Presentation) -> tuple:
    """Generators of a one-row presentation as ring elements."""
    if p.gens.nrows != 1:
        raise ShapeMismatch("not an ideal: more than one row after merging")
    return tuple(f for f in p.gens.rows[0] if f.terms)


def ideal_presentations(d):
    """(A, P plain, P compact or None, T) one-row presentations of a datum, merged."""
    a = merge_rows(build(d))
    p = restrict_to_P(a, d, exceptional="adjoin")
    pc = compact_form_P(p, d)
    t = induce_to_T(a, d)
    return a, p, pc, t


def verify_ideal_row(row_id: str, i: int = 1, j: int = 1, lam=1, search_degree=None) -> dict:
    """Compare build -> merge -> translate with the table generators over A, P and T."""
    row = ideal_table_row(row_id, i, j, lam)
    a, p, pc, t = ideal_presentations(row.datum)
    table_a = row.gens_A if row.scale_A is None else tuple(g * row.scale_A for g in row.gens_A)
    p_cmp = pc if pc is not None else p
    out = {}
    for name, ring, ours, theirs in (
        ("A", A_RING, as_ideal(a), table_a),
        ("P", P_RING, as_ideal(p_cmp), row.gens_P),
        ("T", T_RING, as_ideal(t), row.gens_T),
    ):
        out[name] = submodules_equal([(g,) for g in ours], [(g,) for g in theirs], ring, search_degree)
    return out


# ---------------------------------------------------------------- display

def presentation_latex(p: Presentation) -> str:
    cols = []
    for col in p.columns:
        body = " \\\\ ".join(format_latex(f) for f in col)
        cols.append(f"\\left(\\begin{{array}}{{c}} {body} \\end{{array}}\\right)")
    inner = ",\n& ".join(cols) if cols else ""
    spec = "c" * max(len(cols), 1)
    return f"\\left[\\begin{{array}}{{{spec}}}\n{inner}\n\\end{{array}}\\right]_{{{p.ring.name}}}"
