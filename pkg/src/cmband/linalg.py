"""Exact linear algebra: ranks over Q and submodule membership over monomial quotient rings.

Membership of g in the span of columns f_1..f_k of R^n is decided by iterative
deepening on the degree d of the coefficients:

* Member: an explicit certificate g = sum a_k f_k with deg a_k <= d, re-checked
  by ring arithmetic before it is returned.
* NotMember: the linear system already fails modulo m^D (m the ideal of the
  variables), which rules out any certificate, polynomial or power series.
* Unknown: neither happened up to the search degree.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .ring import RingElem, RingSpec, format_elem

SEARCH_DEGREE_ENV = "CMBAND_SEARCH_DEGREE"


# ranks over Q

def rank_q(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix by fraction-free Bareiss elimination."""
    m = []
    for r in rows:
        if all(type(x) is int for x in r):
            m.append(list(r))
            continue
        r = [Fraction(x) for x in r]
        den = lcm(*(x.denominator for x in r)) if r else 1
        m.append([int(x * den) for x in r])
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nrows):
            a = m[i][col]
            row_i, row_r = m[i], m[rank]
            for j in range(col + 1, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


# sparse echelon with combination tracking

class _Echelon:
    """Row-reduced span of sparse vectors; each stored vector has its pivot as minimum key."""

    def __init__(self, ring: RingSpec, track: bool = True):
        self.ring = ring
        self.p = ring.characteristic
        self.track = track
        self.pivots: dict = {}

    def _axpy(self, y: dict, a, x: dict):
        p = self.p
        for k, v in x.items():
            w = y.get(k, 0) - a * v
            if p:
                w %= p
            if w == 0:
                y.pop(k, None)
            else:
                y[k] = w

    def reduce(self, vec: dict, combo: dict):
        vec = dict(vec)
        combo = dict(combo)
        done = set()
        while True:
            keys = [k for k in vec if k not in done]
            if not keys:
                return vec, combo
            k = min(keys)
            piv = self.pivots.get(k)
            if piv is None:
                done.add(k)
                continue
            a = vec[k]
            self._axpy(vec, a, piv[0])
            if self.track:
                self._axpy(combo, a, piv[1])

    def add(self, vec: dict, label):
        if not vec:
            return
        r, c = self.reduce(vec, {label: self.ring.coerce(1)} if self.track else {})
        if not r:
            return
        k = min(r)
        inv = self.ring.inverse(r[k])
        p = self.p
        scale = (lambda v: v * inv % p) if p else (lambda v: v * inv)
        r = {key: scale(v) for key, v in r.items()}
        c = {key: scale(v) for key, v in c.items()}
        self.pivots[k] = (r, c)

    def solve(self, target: dict):
        """Combination (label -> coeff) with sum coeff*vec(label) == target, or None."""
        r, c = self.reduce(target, {})
        if r:
            return None
        # reduce() subtracted combos; the target equals minus the accumulated combination
        p = self.p
        return {k: ((-v) % p if p else -v) for k, v in c.items()}


def _to_sparse(col: Sequence[RingElem], below: int | None = None) -> dict:
    out = {}
    for i, f in enumerate(col):
        for e, c in f.terms.items():
            if below is None or sum(e) < below:
                out[(i, e)] = c
    return out


# results

@dataclass(frozen=True)
class Member:
    coefficients: tuple  # one RingElem per generator
    degree: int

    def digest(self) -> str:
        text = "|".join(format_elem(a) for a in self.coefficients)
        return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class NotMember:
    degree: int  # infeasible modulo m^degree


@dataclass(frozen=True)
class Unknown:
    search_degree: int


def default_search_degree(cols: Sequence[Sequence[RingElem]]) -> int:
    env = os.environ.get(SEARCH_DEGREE_ENV)
    if env:
        return int(env)
    d = 0
    for col in cols:
        for f in col:
            if f.terms:
                d = max(d, f.degree())
    return 2 * d + 4


def _check_column(ring, col, n):
    if len(col) != n:
        raise ValueError(f"column of height {len(col)}, expected {n}")
    for f in col:
        if f.ring != ring:
            raise ValueError(f"element of {f.ring.name} in a {ring.name} column")


def membership_many(targets, gens, ring: RingSpec, search_degree: int | None = None):
    """Decide each target column against the span of the generator columns."""
    targets = [tuple(t) for t in targets]
    gens = [tuple(g) for g in gens]
    n = len(targets[0]) if targets else (len(gens[0]) if gens else 0)
    for col in targets + gens:
        _check_column(ring, col, n)
    if search_degree is None:
        search_degree = default_search_degree(targets + gens)
    results: list = [None] * len(targets)
    for i, t in enumerate(targets):
        if all(not f.terms for f in t):
            results[i] = Member(tuple(ring.zero() for _ in gens), 0)
    ech = _Echelon(ring, track=True)
    for d in range(search_degree + 1):
        for e in ring.monomials_of_degree(d):
            m = ring.monomial(e)
            for k, g in enumerate(gens):
                ech.add(_to_sparse([m * f if f.terms else f for f in g]), (k, e))
        for i, t in enumerate(targets):
            if results[i] is not None:
                continue
            sol = ech.solve(_to_sparse(t))
            if sol is not None:
                results[i] = _certificate(ring, gens, t, sol, d)
        open_ = [i for i, r in enumerate(results) if r is None]
        if not open_:
            break
        D = d + 1
        if D <= search_degree:
            trunc = _Echelon(ring, track=False)
            for dd in range(D):
                for e in ring.monomials_of_degree(dd):
                    m = ring.monomial(e)
                    for g in gens:
                        trunc.add(_to_sparse([m * f if f.terms else f for f in g], below=D), None)
            for i in open_:
                if trunc.solve(_to_sparse(targets[i], below=D)) is None:
                    results[i] = NotMember(D)
    return [r if r is not None else Unknown(search_degree) for r in results]


def _certificate(ring, gens, target, sol, d):
    coeffs = [dict() for _ in gens]
    for (k, e), c in sol.items():
        coeffs[k][e] = c
    elems = tuple(ring.from_terms(c.items()) for c in coeffs)
    check = [ring.zero() for _ in target]
    for a, g in zip(elems, gens):
        if not a.terms:
            continue
        for i, f in enumerate(g):
            if f.terms:
                check[i] = check[i] + a * f
    if tuple(check) != tuple(target):
        raise AssertionError("membership certificate failed to verify")
    return Member(elems, d)


def membership(target, gens, ring: RingSpec, search_degree: int | None = None):
    return membership_many([target], gens, ring, search_degree)[0]


@dataclass(frozen=True)
class Equal:
    forward: tuple  # certificates for each column of the first list
    backward: tuple


@dataclass(frozen=True)
class Unequal:
    side: int  # 0: a column of the first list is missing from the second span
    index: int
    witness: NotMember


def submodules_equal(gens1, gens2, ring: RingSpec, search_degree: int | None = None):
    gens1 = [tuple(g) for g in gens1]
    gens2 = [tuple(g) for g in gens2]
    if search_degree is None:
        search_degree = default_search_degree(gens1 + gens2)
    fwd = membership_many(gens1, gens2, ring, search_degree)
    bwd = membership_many(gens2, gens1, ring, search_degree)
    for side, res in ((0, fwd), (1, bwd)):
        for i, r in enumerate(res):
            if isinstance(r, NotMember):
                return Unequal(side, i, r)
    if all(isinstance(r, Member) for r in fwd + bwd):
        return Equal(tuple(fwd), tuple(bwd))
    return Unknown(search_degree)
