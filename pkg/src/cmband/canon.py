"""Canonical forms of string and band data of the bunch of chains, and the regularity test."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .bunch import (
    ALPHA, BETA, DASH, DELTA, GAMMA, SIM, XI, ZETA, INF,
    CyclicWord, FullWord, Sym,
)
from .linalg import rank_q


@dataclass(frozen=True)
class CanonicalForm:
    rows_x: tuple  # (symbol, occurrence, copy) per row of theta_x
    rows_y: tuple
    t: int  # number of gamma occurrences
    m: int
    theta_x: tuple  # tuple of rows of Fractions, t*m columns
    theta_y: tuple
    lam: Fraction | None = None

    @property
    def ncols(self) -> int:
        return self.t * self.m

    def stripes(self, axis: str):
        """Ordered (symbol, row count) pairs."""
        rows = self.rows_x if axis == "x" else self.rows_y
        out = []
        for s, _, _ in rows:
            if out and out[-1][0] == s:
                out[-1][1] += 1
            else:
                out.append([s, 1])
        return [tuple(p) for p in out]

    def stripe_dims(self):
        return (tuple((str(s), k) for s, k in self.stripes("x")),
                tuple((str(s), k) for s, k in self.stripes("y")))

    def reorder(self, order_x=None, order_y=None) -> "CanonicalForm":
        """Permute stripes into a given symbol order (rows inside a stripe keep their order)."""

        def perm(rows, theta, order):
            if order is None:
                return rows, theta
            idx = []
            for s in order:
                idx += [k for k, r in enumerate(rows) if r[0] == s]
            if sorted(idx) != list(range(len(rows))):
                raise ValueError("stripe order must list every stripe exactly once")
            return tuple(rows[k] for k in idx), tuple(theta[k] for k in idx)

        rx, tx = perm(self.rows_x, self.theta_x, order_x)
        ry, ty = perm(self.rows_y, self.theta_y, order_y)
        return CanonicalForm(rx, ry, self.t, self.m, tx, ty, self.lam)

    def to_json_obj(self):
        def fmt(q):
            q = Fraction(q)
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

        return {
            "stripes_x": [[str(s), k] for s, k in self.stripes("x")],
            "stripes_y": [[str(s), k] for s, k in self.stripes("y")],
            "t": self.t,
            "m": self.m,
            "theta_x": [[fmt(q) for q in r] for r in self.theta_x],
            "theta_y": [[fmt(q) for q in r] for r in self.theta_y],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def to_latex(self) -> str:
        return canonical_form_latex(self)


def _occurrences(symbols):
    seen: dict = {}
    occ = []
    for s in symbols:
        seen[s] = seen.get(s, 0) + 1
        occ.append(seen[s])
    return occ


def _column_of(symbols, relations, occ, pos, cyclic):
    """Column index (0-based) of the F-symbol at pos: occurrence number of the gamma in its pair."""
    s = symbols[pos]
    if s.kind == GAMMA:
        return occ[pos] - 1
    n = len(symbols)
    for q in (pos - 1, pos + 1):
        if cyclic:
            q %= n
        elif not 0 <= q < n:
            continue
        rel = relations[min(pos, q)] if not cyclic else relations[pos if q == (pos + 1) % n else q]
        if rel == SIM and symbols[q].kind == GAMMA:
            return occ[q] - 1
    raise ValueError(f"delta at position {pos} has no gamma partner")


def _dash_entries(symbols, relations, cyclic):
    """(E-symbol, occurrence, column, is_closing) for every `-` relation."""
    occ = _occurrences(symbols)
    n = len(symbols)
    out = []
    for k, rel in enumerate(relations):
        if rel != DASH:
            continue
        p, q = k, (k + 1) % n
        if symbols[p].chain == "F":
            p, q = q, p
        col = _column_of(symbols, relations, occ, q, cyclic)
        out.append((symbols[p], occ[p], col, cyclic and k == n - 1))
    return out


def _assemble(symbols, relations, cyclic, m=1, lam=None):
    occ = _occurrences(symbols)
    t = sum(1 for s in symbols if s.kind == GAMMA)
    rows = {"x": [], "y": []}
    for s, o in zip(symbols, occ):
        if s.chain != "F":
            rows[s.chain] += [(s, o, c) for c in range(m)]
    for ax in rows:
        rows[ax].sort(key=lambda r: (r[0].chain_key(), r[1], r[2]))
    index = {ax: {r: i for i, r in enumerate(rows[ax])} for ax in rows}
    theta = {ax: [[0] * (t * m) for _ in rows[ax]] for ax in rows}  # ints; only lambda is a Fraction
    for s, o, col, closing in _dash_entries(symbols, relations, cyclic):
        ax = s.chain
        for c in range(m):
            r = index[ax][(s, o, c)]
            if closing:
                theta[ax][r][col * m + c] = Fraction(lam)
                if c + 1 < m:
                    theta[ax][r][col * m + c + 1] = 1
            else:
                theta[ax][r][col * m + c] = 1
    return CanonicalForm(
        tuple(rows["x"]), tuple(rows["y"]), t, m,
        tuple(tuple(r) for r in theta["x"]), tuple(tuple(r) for r in theta["y"]),
        None if lam is None else Fraction(lam),
    )


def canonical_form_string(w: FullWord) -> CanonicalForm:
    if not isinstance(w, FullWord):
        raise TypeError("expected a FullWord")
    return _assemble(w.symbols, w.relations, False)


def canonical_form_band(w: CyclicWord, m: int, lam) -> CanonicalForm:
    if not isinstance(w, CyclicWord):
        raise TypeError("expected a CyclicWord")
    if m < 1 or Fraction(lam) == 0:
        raise ValueError("need m >= 1 and nonzero lambda")
    return _assemble(w.symbols, w.relations, True, m, Fraction(lam))


def canonical_form(w, m: int = 1, lam=1) -> CanonicalForm:
    if isinstance(w, CyclicWord):
        return canonical_form_band(w, m, lam)
    return canonical_form_string(w)


def regularity_check(c: CanonicalForm) -> bool:
    nx, ny = len(c.theta_x), len(c.theta_y)
    if nx and rank_q(c.theta_x) != nx:
        return False
    if ny and rank_q(c.theta_y) != ny:
        return False
    stacked = list(c.theta_x) + list(c.theta_y)
    if c.ncols == 0:
        return True
    return rank_q(stacked) == c.ncols


_UNPAIRED_END = {Sym(XI, 0), Sym(ZETA, 0), Sym(ALPHA, INF), Sym(BETA, INF)}


def essential_image_predicate(w, literal: bool = False) -> bool:
    """Whether the canonical form of w satisfies the regularity constraints.

    An E-symbol contributes a row that is nonzero only through a `-` neighbour,
    so an end of the word is admissible when it is an F-symbol or is attached
    by `-` (which forces xi_0, alpha_inf, zeta_0 or beta_inf).  With
    literal=True only F-symbols are admitted at the ends.
    """
    if isinstance(w, CyclicWord):
        return True
    s, r = w.symbols, w.relations
    if len(s) == 2 and s[0].chain == "F" and s[1].chain == "F":
        return False

    def ok(sym, rel):
        if sym.chain == "F":
            return True
        return not literal and rel == DASH

    if len(s) == 1:
        return False
    return ok(s[0], r[0]) and ok(s[-1], r[-1])


# ---------------------------------------------------------------- display

_TEX_KIND = {XI: "\\xi", ALPHA: "\\alpha", ZETA: "\\zeta", BETA: "\\beta", GAMMA: "\\gamma", DELTA: "\\delta"}


def symbol_latex(s: Sym) -> str:
    if s.index is None:
        return _TEX_KIND[s.kind]
    idx = "\\infty" if s.index == INF else str(s.index)
    return f"{_TEX_KIND[s.kind]}_{{{idx}}}"


def _block_latex(theta, rows, m, t, lam):
    """Collapse m x m blocks back to 0 / I / J symbols when m > 1."""
    out = []
    for r0 in range(0, len(rows), m):
        cells = []
        for c0 in range(0, t * m, m):
            block = [theta[r0 + a][c0:c0 + m] for a in range(m)]
            if all(q == 0 for row in block for q in row):
                cells.append("0")
            elif m == 1:
                q = block[0][0]
                cells.append(str(q) if q.denominator == 1 else f"\\tfrac{{{q.numerator}}}{{{q.denominator}}}")
            elif all(block[a][b] == (1 if a == b else 0) for a in range(m) for b in range(m)):
                cells.append("I")
            else:
                cells.append("J")
        out.append((symbol_latex(rows[r0][0]), cells))
    return out


def canonical_form_latex(c: CanonicalForm) -> str:
    parts = []
    for name, theta, rows, col in (("x", c.theta_x, c.rows_x, "\\gamma"), ("y", c.theta_y, c.rows_y, "\\delta")):
        body = _block_latex(theta, rows, c.m, c.t, c.lam)
        spec = "r|" + "c" * max(c.t, 1) + "|"
        lines = [f"\\Theta_{name} = \\left(\\begin{{array}}{{{spec}}}"]
        lines.append(" & " + " & ".join([col] * c.t) + " \\\\ \\hline")
        for label, cells in body:
            lines.append(f"{label} & " + " & ".join(cells) + " \\\\")
        lines.append("\\hline\\end{array}\\right)")
        parts.append("\n".join(lines))
    return "\\[\n" + "\n\\qquad\n".join(parts) + "\n\\]"
