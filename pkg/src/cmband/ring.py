"""Commutative monomial quotient rings with exact coefficients.

A ring is k[vars] modulo an ideal generated by monomials.  Normal forms are
immediate: a monomial is zero iff it is divisible by a relation monomial, so
an element is a finite map from surviving exponent vectors to coefficients.
Coefficients are Fractions (characteristic 0) or ints mod p.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class RingError(ValueError):
    pass


class RingMismatchError(RingError):
    pass


class DimensionMismatchError(RingError):
    pass


class UnknownVariableError(RingError):
    pass


class ParseError(RingError):
    pass


class _ZeroDegree:
    """Degree of the zero element.  Compares below every integer and refuses arithmetic."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "ZERO_DEGREE"


ZERO_DEGREE = _ZeroDegree()


@dataclass(frozen=True)
class RingSpec:
    name: str
    variables: tuple
    relations: tuple = ()  # exponent vectors of the monomial generators of the ideal
    characteristic: int = 0

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise RingError(f"duplicate variable names in {self.variables}")
        for r in self.relations:
            if len(r) != len(self.variables):
                raise RingError("relation length does not match variable count")
        p = self.characteristic
        if p != 0:
            if p <= 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
                raise RingError(f"characteristic must be 0 or an odd prime, got {p}")

    @classmethod
    def make(cls, name, variables, relations=(), characteristic=0):
        variables = tuple(variables)
        rels = []
        for r in relations:
            if isinstance(r, str):
                e = _parse_monomial(r, variables)
            else:
                e = tuple(r)
            rels.append(e)
        return cls(name, variables, tuple(rels), characteristic)

    @property
    def nvars(self):
        return len(self.variables)

    def with_characteristic(self, p):
        return RingSpec(self.name, self.variables, self.relations, p)

    # coefficients

    def coerce(self, c) -> Scalar:
        p = self.characteristic
        if p == 0:
            if isinstance(c, Fraction):
                return c
            if isinstance(c, int):
                return Fraction(c)
            raise TypeError(f"cannot use {c!r} as a coefficient")
        if isinstance(c, Fraction):
            if c.denominator % p == 0:
                raise ZeroDivisionError(f"{c} is not defined mod {p}")
            return c.numerator * pow(c.denominator, -1, p) % p
        if isinstance(c, int):
            return c % p
        raise TypeError(f"cannot use {c!r} as a coefficient")

    def inverse(self, c):
        if self.characteristic == 0:
            return 1 / c
        return pow(c, -1, self.characteristic)

    # monomials

    def is_normal(self, e) -> bool:
        for r in self.relations:
            if all(a >= b for a, b in zip(e, r)):
                return False
        return True

    def monomials_of_degree(self, d: int) -> tuple:
        return _monomials_of_degree(self, d)

    def var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(f"variable {name!r} not in ring {self.name}") from None

    # element constructors

    def zero(self) -> "RingElem":
        return RingElem(self, {})

    def one(self) -> "RingElem":
        return self.const(1)

    def const(self, c) -> "RingElem":
        return self.monomial((0,) * self.nvars, c)

    def gen(self, name: str) -> "RingElem":
        e = [0] * self.nvars
        e[self.var_index(name)] = 1
        return self.monomial(tuple(e))

    def gens(self):
        return tuple(self.gen(v) for v in self.variables)

    def monomial(self, e, c=1) -> "RingElem":
        e = tuple(e)
        c = self.coerce(c)
        if c == 0 or not self.is_normal(e):
            return self.zero()
        return RingElem(self, {e: c})

    def from_terms(self, terms: Iterable) -> "RingElem":
        acc: dict = {}
        p = self.characteristic
        for e, c in terms:
            e = tuple(e)
            if not self.is_normal(e):
                continue
            acc[e] = acc.get(e, 0) + self.coerce(c)
        if p:
            acc = {e: c % p for e, c in acc.items()}
        return RingElem(self, {e: c for e, c in acc.items() if c != 0})

    def parse(self, text: str) -> "RingElem":
        return _Parser(self, text).parse()

    def __call__(self, x) -> "RingElem":
        if isinstance(x, RingElem):
            if x.ring != self:
                raise RingMismatchError(f"{x.ring.name} element given to {self.name}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        return self.const(x)

    def __repr__(self):
        return f"RingSpec({self.name})"


@lru_cache(maxsize=None)
def _monomials_of_degree(ring: RingSpec, d: int) -> tuple:
    n = ring.nvars
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for k in combo:
            e[k] += 1
        e = tuple(e)
        if ring.is_normal(e):
            out.append(e)
    out.sort(reverse=True)
    return tuple(out)


def _mono_key(e):
    return (sum(e), e)


class RingElem:
    """Element of a RingSpec in normal form.  Treat as immutable."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # arithmetic

    def _lift(self, other):
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring.name} vs {other.ring.name}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if p:
                v %= p
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
        return RingElem(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.characteristic
        if p:
            return RingElem(self.ring, {e: (-c) % p for e, c in self.terms.items()})
        return RingElem(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        ring = self.ring
        p = ring.characteristic
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if not ring.is_normal(e):
                    continue
                out[e] = out.get(e, 0) + c1 * c2
        if p:
            out = {e: c % p for e, c in out.items()}
        return RingElem(ring, {e: c for e, c in out.items() if c != 0})

    __rmul__ = __mul__

    def scale(self, c):
        c = self.ring.coerce(c)
        if c == 0:
            return self.ring.zero()
        p = self.ring.characteristic
        if p:
            return RingElem(self.ring, {e: v * c % p for e, v in self.terms.items()})
        return RingElem(self.ring, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # predicates

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.name, frozenset(self.terms.items())))
        return self._hash

    def degree(self):
        if not self.terms:
            return ZERO_DEGREE
        return max(sum(e) for e in self.terms)

    def order(self):
        """Lowest total degree of a term."""
        if not self.terms:
            return ZERO_DEGREE
        return min(sum(e) for e in self.terms)

    def coefficient(self, e) -> Scalar:
        return self.terms.get(tuple(e), self.ring.coerce(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]), reverse=True)

    def substitute(self, target: RingSpec, images: dict) -> "RingElem":
        """Ring map sending each variable name to an element of target."""
        out = target.zero()
        for e, c in self.terms.items():
            t = target.const(c)
            for name, k in zip(self.ring.variables, e):
                if k:
                    t = t * images[name] ** k
            out = out + t
        return out

    # text

    def __str__(self):
        return format_elem(self)

    def __repr__(self):
        return f"<{self.ring.name}: {format_elem(self)}>"


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def format_monomial(ring: RingSpec, e) -> str:
    parts = []
    for name, k in zip(ring.variables, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_elem(f: RingElem) -> str:
    """Canonical text: terms in descending deglex order, `c*x^a*y^b`, zero is `0`."""
    if not f.terms:
        return "0"
    p = f.ring.characteristic
    out = []
    for e, c in f.sorted_terms():
        neg = False
        if p == 0 and c < 0:
            neg, c = True, -c
        mono = format_monomial(f.ring, e)
        if not mono:
            body = _fmt_coeff(c)
        elif c == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(c)}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_latex(f: RingElem) -> str:
    if not f.terms:
        return "0"
    p = f.ring.characteristic
    out = []
    for e, c in f.sorted_terms():
        neg = False
        if p == 0 and c < 0:
            neg, c = True, -c
        mono = "".join(
            (n if k == 1 else f"{n}^{{{k}}}") for n, k in zip(f.ring.variables, e) if k
        )
        if isinstance(c, Fraction) and c.denominator != 1:
            cs = f"\\tfrac{{{c.numerator}}}{{{c.denominator}}}"
        else:
            cs = _fmt_coeff(c)
        body = mono if (mono and c == 1) else (cs + mono)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str):
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        num, name, ch = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif name is not None:
            toks.append(("var", name))
        elif ch is not None and ch.strip():
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r} in {text!r}")
            toks.append(("op", ch))
    return toks


class _Parser:
    def __init__(self, ring: RingSpec, text: str):
        self.ring = ring
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.take()
        if t != ("op", op):
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def parse(self) -> RingElem:
        if not self.toks:
            raise ParseError("empty element text")
        f = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return f

    def expr(self):
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        f = self.term().scale(sign)
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            f = f + t if op == "+" else f - t
        return f

    def term(self):
        f = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            f = f * self.factor()
        return f

    def factor(self):
        kind, val = self.take()
        if kind == "num":
            c = Fraction(val)
            if self.peek() == ("op", "/"):
                self.take()
                k2, den = self.take()
                if k2 != "num" or den == 0:
                    raise ParseError(f"bad fraction in {self.text!r}")
                c = Fraction(val, den)
            base = self.ring.const(c)
        elif kind == "var":
            base = self.ring.gen(val)
        elif (kind, val) == ("op", "("):
            base = self.expr()
            self.expect_op(")")
        else:
            raise ParseError(f"unexpected token {val!r} in {self.text!r}")
        if self.peek() == ("op", "^"):
            self.take()
            k2, n = self.take()
            if k2 != "num":
                raise ParseError(f"bad exponent in {self.text!r}")
            base = base ** n
        return base


def _parse_monomial(text: str, variables: tuple) -> tuple:
    e = [0] * len(variables)
    for part in text.replace(" ", "").split("*"):
        name, _, k = part.partition("^")
        if name not in variables:
            raise UnknownVariableError(f"variable {name!r} not in {variables}")
        e[variables.index(name)] += int(k) if k else 1
    return tuple(e)


A_RING = RingSpec.make("A", "xyuv", ["x*y", "y*u", "u*v", "v*x", "u^2", "v^2"])
P_RING = RingSpec.make("P", "xyz", ["x*y", "z^2"])
T_RING = RingSpec.make("T", "ab", ["a^2*b^2"])
FREE2 = RingSpec.make("Free2", "ab")
FREE4 = RingSpec.make("Free4", "abuv")

BUILTIN_RINGS = {r.name: r for r in (A_RING, P_RING, T_RING, FREE2, FREE4)}


def ring_by_name(name: str, characteristic: int = 0) -> RingSpec:
    try:
        r = BUILTIN_RINGS[name]
    except KeyError:
        raise RingError(f"unknown ring {name!r}") from None
    return r if characteristic == 0 else r.with_characteristic(characteristic)


# images of P and T inside A
def p_to_a(f: RingElem) -> RingElem:
    a = A_RING
    return f.substitute(a, {"x": a.gen("x"), "y": a.gen("y"), "z": a.gen("u") + a.gen("v")})


def t_to_a(f: RingElem) -> RingElem:
    a = A_RING
    return f.substitute(a, {"a": a.gen("x") + a.gen("v"), "b": a.gen("y") + a.gen("u")})


class PolyMatrix:
    """Dense matrix of RingElems over one ring.  Treat as immutable."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: RingSpec, rows: Sequence[Sequence]):
        norm = []
        width = None
        for r in rows:
            r = tuple(ring(x) for x in r)
            if width is None:
                width = len(r)
            elif len(r) != width:
                raise DimensionMismatchError("ragged matrix rows")
            norm.append(r)
        self.ring = ring
        self.rows = tuple(norm)

    @classmethod
    def zeros(cls, ring, nrows, ncols):
        z = ring.zero()
        m = cls(ring, [])
        m.rows = tuple(tuple(z for _ in range(ncols)) for _ in range(nrows))
        return m

    @classmethod
    def identity(cls, ring, n, scalar=1):
        return cls(ring, [[scalar if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, ring, cols, nrows=None):
        cols = [tuple(c) for c in cols]
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        return cls(ring, [[c[i] for c in cols] for i in range(nrows)]) if cols else cls.zeros(ring, nrows, 0)

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return self.shape[1]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return PolyMatrix.from_columns(self.ring, self.rows, self.ncols)

    def _check(self, other):
        if not isinstance(other, PolyMatrix):
            raise TypeError("expected PolyMatrix")
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring.name} vs {other.ring.name}")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{self.shape} + {other.shape}")
        return PolyMatrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return PolyMatrix(self.ring, [[-a for a in r] for r in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        self._check(other)
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise DimensionMismatchError(f"{self.shape} @ {other.shape}")
        z = self.ring.zero()
        cols = other.columns()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = z
                for a, b in zip(r, c):
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out) if out else PolyMatrix.zeros(self.ring, 0, m)

    def scale(self, f):
        return PolyMatrix(self.ring, [[a * f for a in r] for r in self.rows])

    def map(self, fn, ring=None):
        ring = ring or self.ring
        return PolyMatrix(ring, [[fn(a) for a in r] for r in self.rows])

    def hstack(self, other):
        self._check(other)
        if self.nrows != other.nrows:
            raise DimensionMismatchError("hstack row mismatch")
        return PolyMatrix(self.ring, [r + s for r, s in zip(self.rows, other.rows)])

    def vstack(self, other):
        self._check(other)
        if self.ncols != other.ncols:
            raise DimensionMismatchError("vstack column mismatch")
        return PolyMatrix(self.ring, list(self.rows) + list(other.rows))

    def select_rows(self, idx):
        return PolyMatrix(self.ring, [self.rows[i] for i in idx])

    def is_zero(self):
        return all(not a.terms for r in self.rows for a in r)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring.name, self.rows))

    def to_strings(self):
        return [[format_elem(a) for a in r] for r in self.rows]

    def __repr__(self):
        return f"PolyMatrix({self.ring.name}, {self.to_strings()})"
