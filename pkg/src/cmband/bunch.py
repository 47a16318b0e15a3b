"""Words over the bunch of chains and the letter-level string/band data.

Symbol level: row symbols of two chains E_x, E_y and the column symbols
gamma, delta, joined by the relations `~` and `-`.  Letter level: words in
x- and y-letters with an index and a sign, as used for the module
constructions.  The two levels are linked by module_to_bunch and
bunch_to_module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import inf

INF = inf

SIM = "~"
DASH = "-"

# symbol kinds; the first four are row symbols of E_x / E_y, the last two column symbols
XI, ALPHA, ZETA, BETA, GAMMA, DELTA = "xi", "alpha", "zeta", "beta", "gamma", "delta"
_KINDS = (XI, ALPHA, ZETA, BETA, GAMMA, DELTA)


class WordError(ValueError):
    pass


class IllegalEndpoint(WordError):
    pass


class NonAlternating(WordError):
    pass


class IndexZeroInfInterior(WordError):
    pass


class BadLetter(WordError):
    pass


class EmptyWord(WordError):
    pass


class Periodic(WordError):
    pass


class ZeroLambda(WordError):
    pass


class BadShape(WordError):
    pass


class OddShift(WordError):
    pass


class InvalidWord(WordError):
    pass


def _fmt_index(i) -> str:
    return "inf" if i == INF else str(i)


def _parse_index(s: str):
    if s in ("inf", "oo", "∞"):
        return INF
    return int(s)


# ---------------------------------------------------------------- symbols

@dataclass(frozen=True, order=False)
class Sym:
    kind: str
    index: object = None  # int, INF, or None for gamma/delta

    def __post_init__(self):
        k, i = self.kind, self.index
        if k not in _KINDS:
            raise InvalidWord(f"unknown symbol kind {k!r}")
        if k in (GAMMA, DELTA):
            if i is not None:
                raise InvalidWord(f"{k} carries no index")
        elif k in (XI, ZETA):
            if not (isinstance(i, int) and i >= 0):
                raise InvalidWord(f"{k} needs an index in 0,1,2,...")
        else:
            if not (i == INF or (isinstance(i, int) and i >= 1)):
                raise InvalidWord(f"{k} needs an index in 1,2,...,inf")

    @property
    def chain(self):
        if self.kind in (XI, ALPHA):
            return "x"
        if self.kind in (ZETA, BETA):
            return "y"
        return "F"

    @property
    def paired(self) -> bool:
        """Whether the symbol has a ~ partner in the bunch."""
        if self.kind in (GAMMA, DELTA):
            return True
        return self.index not in (0, INF)

    def partner(self):
        if self.kind == GAMMA:
            return Sym(DELTA)
        if self.kind == DELTA:
            return Sym(GAMMA)
        if not self.paired:
            return None
        other = {XI: ALPHA, ALPHA: XI, ZETA: BETA, BETA: ZETA}[self.kind]
        return Sym(other, self.index)

    def chain_key(self):
        """Position in the chain order xi_0 < xi_1 < ... < alpha_inf < ... < alpha_1."""
        if self.kind in (XI, ZETA):
            return (0, self.index)
        if self.index == INF:
            return (1, 0)
        if self.kind in (ALPHA, BETA):
            return (2, -self.index)
        return (3, 0 if self.kind == GAMMA else 1)

    def __str__(self):
        if self.index is None:
            return self.kind
        return f"{self.kind}_{_fmt_index(self.index)}"

    def __repr__(self):
        return str(self)

    @classmethod
    def parse(cls, text: str) -> "Sym":
        text = text.strip()
        name, _, idx = text.partition("_")
        if not idx:
            return cls(name)
        return cls(name, _parse_index(idx))


def related(a: Sym, b: Sym, rel: str) -> bool:
    if rel == SIM:
        return a.partner() == b
    if rel == DASH:
        for f, e in ((a, b), (b, a)):
            if f.kind == GAMMA and e.chain == "x":
                return True
            if f.kind == DELTA and e.chain == "y":
                return True
        return False
    raise InvalidWord(f"unknown relation {rel!r}")


# ---------------------------------------------------------------- symbol words

@dataclass(frozen=True)
class FullWord:
    symbols: tuple
    relations: tuple

    def __post_init__(self):
        s, r = self.symbols, self.relations
        if not s:
            raise InvalidWord("empty word")
        if len(r) != len(s) - 1:
            raise InvalidWord("need exactly one relation between consecutive symbols")
        for k, rel in enumerate(r):
            if not related(s[k], s[k + 1], rel):
                raise InvalidWord(f"{s[k]} {rel} {s[k + 1]} is not a relation of the bunch")
            if k and r[k - 1] == rel:
                raise InvalidWord("relations must alternate")
        if s[0].paired and (not r or r[0] != SIM):
            raise InvalidWord(f"word cannot end at {s[0]} without its ~ partner")
        if s[-1].paired and (not r or r[-1] != SIM):
            raise InvalidWord(f"word cannot end at {s[-1]} without its ~ partner")

    @property
    def cyclic(self) -> bool:
        return False

    def __len__(self):
        return len(self.symbols)

    def opposite(self) -> "FullWord":
        return FullWord(self.symbols[::-1], self.relations[::-1])

    def __str__(self):
        out = [str(self.symbols[0])]
        for rel, s in zip(self.relations, self.symbols[1:]):
            out.append(f" {rel} {s}")
        return "".join(out)

    @classmethod
    def parse(cls, text: str) -> "FullWord":
        syms, rels = _split_symbol_text(text)
        return cls(tuple(syms), tuple(rels))


@dataclass(frozen=True)
class CyclicWord:
    symbols: tuple
    relations: tuple  # n relations; the last one closes the cycle and is `-`

    def __post_init__(self):
        s, r = self.symbols, self.relations
        n = len(s)
        if n < 2 or len(r) != n:
            raise InvalidWord("cyclic word needs n >= 2 symbols and n relations")
        if r[-1] != DASH or r[0] != SIM or r[-2] != SIM:
            raise InvalidWord("cyclic word must start and end with ~ and close with -")
        for k in range(n):
            if not related(s[k], s[(k + 1) % n], r[k]):
                raise InvalidWord(f"{s[k]} {r[k]} {s[(k + 1) % n]} is not a relation")
            if r[k] == r[(k + 1) % n]:
                raise InvalidWord("relations must alternate around the cycle")

    @property
    def cyclic(self) -> bool:
        return True

    def __len__(self):
        return len(self.symbols)

    def shift(self, k: int) -> "CyclicWord":
        if k % 2:
            raise OddShift(f"shift by odd amount {k}")
        n = len(self.symbols)
        k %= n
        return CyclicWord(self.symbols[k:] + self.symbols[:k], self.relations[k:] + self.relations[:k])

    def opposite(self) -> "CyclicWord":
        # reversed cycle, rotated so that it again closes with `-`
        s = self.symbols[::-1]
        r = self.relations[:-1][::-1] + (DASH,)
        return CyclicWord(s, r)

    def is_periodic(self) -> bool:
        n = len(self.symbols)
        return any(n % k == 0 and self.shift(k) == self for k in range(2, n, 2))

    def __str__(self):
        out = [str(self.symbols[0])]
        for rel, s in zip(self.relations[:-1], self.symbols[1:]):
            out.append(f" {rel} {s}")
        return "".join(out) + " -"

    @classmethod
    def parse(cls, text: str) -> "CyclicWord":
        text = text.strip()
        if not text.endswith("-"):
            raise InvalidWord("cyclic word text ends with the closing '-'")
        syms, rels = _split_symbol_text(text[:-1])
        return cls(tuple(syms), tuple(rels) + (DASH,))


def _split_symbol_text(text: str):
    parts = re.split(r"\s*([~-])\s*", text.strip())
    syms = [Sym.parse(p) for p in parts[0::2]]
    rels = parts[1::2]
    return syms, rels


def parse_symbol_word(text: str):
    text = text.strip()
    return CyclicWord.parse(text) if text.endswith("-") else FullWord.parse(text)


# ---------------------------------------------------------------- letters

@dataclass(frozen=True)
class Letter:
    axis: str  # "x" or "y"
    index: object  # int >= 0 or INF
    sign: object = None  # "+", "-" or None

    def __post_init__(self):
        if self.axis not in ("x", "y"):
            raise BadLetter(f"axis must be x or y, got {self.axis!r}")
        if not (self.index == INF or (isinstance(self.index, int) and self.index >= 0)):
            raise BadLetter(f"bad index {self.index!r}")
        if self.sign not in ("+", "-", None):
            raise BadLetter(f"bad sign {self.sign!r}")

    @property
    def finite(self) -> bool:
        return self.index not in (0, INF)

    def flipped(self) -> "Letter":
        if self.sign is None:
            return self
        return Letter(self.axis, self.index, "+" if self.sign == "-" else "-")

    def swapped(self) -> "Letter":
        return Letter("y" if self.axis == "x" else "x", self.index, self.sign)

    def sort_key(self):
        i = self.index
        rank = (0, 0) if i == 0 else ((2, 0) if i == INF else (1, i))
        return (0 if self.axis == "x" else 1, rank, 1 if self.sign == "-" else 0)

    def __str__(self):
        return f"{self.axis}[{_fmt_index(self.index)}]{self.sign or ''}"

    __repr__ = __str__

    def pretty(self) -> str:
        sub = "∞" if self.index == INF else str(self.index)
        return f"{self.axis}_{sub}" + (f"^{self.sign}" if self.sign else "")


_LETTER = re.compile(r"^([xy])\[(\d+|inf)\]([+-]?)$")


def parse_letter(text: str) -> Letter:
    m = _LETTER.match(text.strip())
    if not m:
        raise BadLetter(f"cannot parse letter {text!r}")
    axis, idx, sign = m.groups()
    return Letter(axis, _parse_index(idx), sign or None)


def parse_word(text: str) -> tuple:
    toks = text.split()
    if not toks:
        raise EmptyWord("empty word")
    return tuple(parse_letter(t) for t in toks)


def format_word(word) -> str:
    return " ".join(str(l) for l in word)


def pretty_word(word) -> str:
    return "".join(l.pretty() for l in word)


def word_key(word):
    return tuple(l.sort_key() for l in word)


def opposite_word(word) -> tuple:
    """Reverse the letters; reading a letter backwards exchanges its two ends, so signs flip."""
    return tuple(l.flipped() for l in reversed(word))


def tau_word(word) -> tuple:
    return tuple(l.swapped() for l in word)


def _alternates(word) -> bool:
    return all(a.axis != b.axis for a, b in zip(word, word[1:]))


# ---------------------------------------------------------------- data

@dataclass(frozen=True)
class StringDatum:
    word: tuple
    exceptional: bool = False

    kind = "string"

    def __str__(self):
        return format_word(self.word)

    def pretty(self):
        return pretty_word(self.word)

    @property
    def has_zero(self) -> bool:
        return any(l.index == 0 for l in self.word)

    @property
    def has_inf(self) -> bool:
        return any(l.index == INF for l in self.word)


@dataclass(frozen=True)
class BandDatum:
    word: tuple
    m: int
    lam: Fraction

    kind = "band"

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def __str__(self):
        return f"band({format_word(self.word)}; m={self.m}; lambda={_fmt_frac(self.lam)})"

    def pretty(self):
        return f"({pretty_word(self.word)}, {self.m}, {_fmt_frac(self.lam)})"

    has_zero = False
    has_inf = False


def _fmt_frac(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _check_letter_decoration(l: Letter, at_end: bool):
    if l.finite and l.sign is None:
        raise BadLetter(f"{l}: letters with finite nonzero index carry a sign")
    if not l.finite and l.sign is not None:
        if at_end:
            raise IllegalEndpoint(f"{l}: endpoint letters with index 0 or inf carry no sign")
        raise IndexZeroInfInterior(f"{l}: index 0/inf only at the ends")


def validate_string(word) -> StringDatum:
    if isinstance(word, str):
        word = parse_word(word)
    word = tuple(word)
    if not word:
        raise EmptyWord("empty word")
    if not _alternates(word):
        raise NonAlternating(f"{format_word(word)}: letters must alternate between x and y")
    r = len(word)
    for k, l in enumerate(word):
        at_end = k == 0 or k == r - 1
        if not l.finite and not at_end:
            raise IndexZeroInfInterior(f"{l} occurs in the interior of {format_word(word)}")
        _check_letter_decoration(l, at_end)
    exceptional = r == 2 and all(l.index == 0 for l in word)
    return StringDatum(word, exceptional)


def _rotate(word, k):
    k %= len(word)
    return word[k:] + word[:k]


def is_periodic_word(word) -> bool:
    r = len(word)
    return any(r % k == 0 and _rotate(word, k) == word for k in range(2, r, 2))


def validate_band(word, m: int = 1, lam=1) -> BandDatum:
    if isinstance(word, str):
        word = parse_word(word)
    word = tuple(word)
    if not word or len(word) % 2:
        raise BadShape("band words have even positive length")
    if word[0].axis != "x":
        raise BadShape("band words start with an x-letter")
    if not _alternates(word):
        raise BadShape("band letters must alternate between x and y")
    for l in word:
        if not l.finite or l.sign is None:
            raise BadShape(f"{l}: band letters have finite nonzero index and a sign")
    if not isinstance(m, int) or m < 1:
        raise BadShape(f"multiplicity must be a positive integer, got {m!r}")
    lam = Fraction(lam)
    if lam == 0:
        raise ZeroLambda("lambda must be nonzero")
    if is_periodic_word(word):
        raise Periodic(f"{format_word(word)} is periodic")
    return BandDatum(word, m, lam)


_BAND = re.compile(r"^\s*band\((.*);\s*m\s*=\s*(\d+)\s*;\s*lambda\s*=\s*(-?\d+(?:/\d+)?)\s*\)\s*$")


def parse_datum(text: str):
    """Parse `x[1]- y[2]+` (string) or `band(<word>; m=<int>; lambda=<p>/<q>)`."""
    m = _BAND.match(text)
    if m:
        return validate_band(parse_word(m.group(1)), int(m.group(2)), Fraction(m.group(3)))
    if text.strip().startswith("band"):
        raise BadShape(f"cannot parse band datum {text!r}")
    return validate_string(parse_word(text))


# ---------------------------------------------------------------- letters <-> symbols

def _letter_symbols(l: Letter) -> list:
    e, a = (XI, ALPHA) if l.axis == "x" else (ZETA, BETA)
    if l.index == 0:
        return [Sym(e, 0)]
    if l.index == INF:
        return [Sym(a, INF)]
    first, second = (e, a) if l.sign == "-" else (a, e)
    return [Sym(first, l.index), Sym(second, l.index)]


def _fpair_before(l: Letter) -> list:
    # the F-symbol touching the letter must be gamma for x, delta for y
    return [Sym(DELTA), Sym(GAMMA)] if l.axis == "x" else [Sym(GAMMA), Sym(DELTA)]


def _fpair_after(l: Letter) -> list:
    return _fpair_before(l)[::-1]


def module_to_bunch(d):
    if isinstance(d, BandDatum):
        syms, rels = [], []
        for l in d.word:
            for s in _fpair_before(l) + _letter_symbols(l):
                syms.append(s)
            rels += [SIM, DASH]
            if len(_letter_symbols(l)) == 2:
                rels += [SIM, DASH]
        return CyclicWord(tuple(syms), tuple(rels))
    word = d.word
    syms, rels = [], []

    def push(chunk, joined_by):
        if syms:
            rels.append(joined_by)
        for k, s in enumerate(chunk):
            if k:
                rels.append(SIM)
            syms.append(s)

    if word[0].finite:
        push(_fpair_before(word[0]), None)
    for k, l in enumerate(word):
        if k:
            push(_fpair_before(l), DASH)
        push(_letter_symbols(l), DASH)
    if word[-1].finite or len(word) == 1:
        push(_fpair_after(word[-1]), DASH)
    return FullWord(tuple(syms), tuple(rels))


def _letters_from_symbols(syms, rels):
    """Read letters off a symbol sequence (F-symbols skipped)."""
    letters = []
    k = 0
    n = len(syms)
    while k < n:
        s = syms[k]
        if s.chain == "F":
            k += 1
            continue
        axis = s.chain
        if not s.paired:
            letters.append(Letter(axis, s.index))
            k += 1
            continue
        if k + 1 >= n or rels[k] != SIM:
            raise InvalidWord(f"{s} without its ~ partner")
        sign = "-" if s.kind in (XI, ZETA) else "+"
        letters.append(Letter(axis, s.index, sign))
        k += 2
    return tuple(letters)


def bunch_to_module(w, m: int = 1, lam=1):
    """Letter-level datum of a symbol word; cyclic words also need m and lambda."""
    if isinstance(w, FullWord):
        return validate_string(_letters_from_symbols(w.symbols, w.relations))
    lam = Fraction(lam)
    n = len(w.symbols)
    for k in range(0, n, 2):
        ww = w.shift(k)
        if ww.symbols[0] == Sym(DELTA):
            # moving the closing edge past a letter pair inverts the Jordan parameter
            lam_k = lam if k % 4 == 0 else 1 / lam
            return validate_band(_letters_from_symbols(ww.symbols, ww.relations), m, lam_k)
    raise InvalidWord("cyclic word has no rotation starting with delta ~ gamma")


# ---------------------------------------------------------------- equivalence

def equivalent_strings(d1: StringDatum, d2: StringDatum) -> bool:
    return d1.word == d2.word or d1.word == opposite_word(d2.word)


def band_rotations(word):
    return [_rotate(word, k) for k in range(0, len(word), 2)]


def equivalent_bands(b1: BandDatum, b2: BandDatum, mode: str = "module") -> bool:
    """Module mode: same m and lambda, words related by a shift by xy-pairs.

    Bunch mode: the equivalence of cyclic symbol words, i.e. closure under
    shifts by 4l (same lambda), 4l+2 (inverse lambda) and the opposite word.
    """
    if b1.m != b2.m:
        return False
    if mode == "module":
        return b1.lam == b2.lam and b2.word in band_rotations(b1.word)
    if mode != "bunch":
        raise ValueError(f"unknown mode {mode!r}")
    return canonical_band_bunch(b1) == canonical_band_bunch(b2)


def canonical_band(b: BandDatum) -> BandDatum:
    best = min(band_rotations(b.word), key=word_key)
    return BandDatum(best, b.m, b.lam)


def _bunch_band_class(b: BandDatum):
    w = module_to_bunch(b)
    out = set()
    for ww in (w, w.opposite()):
        for k in range(0, len(ww.symbols), 2):
            d = bunch_to_module(ww.shift(k), b.m, b.lam)
            out.add((d.word, d.lam))
    return out


def canonical_band_bunch(b: BandDatum):
    """Minimal representative of the bunch-level class as (word, m, lambda)."""
    word, lam = min(_bunch_band_class(b), key=lambda t: (word_key(t[0]), t[1]))
    return BandDatum(word, b.m, lam)


def canonical_string(d: StringDatum) -> StringDatum:
    o = opposite_word(d.word)
    w = d.word if word_key(d.word) <= word_key(o) else o
    return StringDatum(w, d.exceptional)


# ---------------------------------------------------------------- enumeration

def _letters(axis, max_index, with_ends):
    out = []
    if with_ends:
        out.append(Letter(axis, 0))
    for i in range(1, max_index + 1):
        out.append(Letter(axis, i, "+"))
        out.append(Letter(axis, i, "-"))
    if with_ends:
        out.append(Letter(axis, INF))
    return out


def _alternating_words(length, max_index, first_axis, ends):
    axes = [first_axis if k % 2 == 0 else ("y" if first_axis == "x" else "x") for k in range(length)]
    pools = []
    for k, ax in enumerate(axes):
        end = ends and (k == 0 or k == length - 1)
        pools.append(_letters(ax, max_index, end))
    for combo in product(*pools):
        yield tuple(combo)


def enumerate_strings(max_letters: int, max_index: int):
    """One representative per string class, ordered by length then letter order."""
    out = []
    for r in range(1, max_letters + 1):
        seen = []
        for ax in ("x", "y"):
            for w in _alternating_words(r, max_index, ax, True):
                d = validate_string(w)
                if word_key(d.word) <= word_key(opposite_word(d.word)):
                    seen.append(d)
        seen.sort(key=lambda d: word_key(d.word))
        out.extend(seen)
    return out


def enumerate_band_words(max_letters: int, max_index: int):
    out = []
    for r in range(2, max_letters + 1, 2):
        words = []
        for w in _alternating_words(r, max_index, "x", False):
            if is_periodic_word(w):
                continue
            if min(band_rotations(w), key=word_key) == w:
                words.append(w)
        words.sort(key=word_key)
        out.extend(words)
    return out


def enumerate_bands(max_letters: int, max_index: int, max_m: int = 1, lambdas=(1,)):
    out = []
    for w in enumerate_band_words(max_letters, max_index):
        for m in range(1, max_m + 1):
            for lam in lambdas:
                out.append(validate_band(w, m, Fraction(lam)))
    return out


def enumerate_data(max_letters: int, max_index: int, kind: str = "all", max_m: int = 1, lambdas=(1,)):
    if max_letters < 1 or max_index < 1:
        return []
    out = []
    if kind in ("string", "all"):
        out.extend(enumerate_strings(max_letters, max_index))
    if kind in ("band", "all"):
        out.extend(enumerate_bands(max_letters, max_index, max_m, lambdas))
    return out


def _symbol_pool(max_index):
    pool = [Sym(GAMMA), Sym(DELTA), Sym(XI, 0), Sym(ZETA, 0), Sym(ALPHA, INF), Sym(BETA, INF)]
    for i in range(1, max_index + 1):
        pool += [Sym(XI, i), Sym(ALPHA, i), Sym(ZETA, i), Sym(BETA, i)]
    return pool


def enumerate_full_words(max_symbols: int, max_index: int):
    """All valid full words with at most max_symbols symbols, each class (w, w^o) once."""
    pool = _symbol_pool(max_index)
    found = []

    def extend(syms, rels):
        try:
            found.append(FullWord(tuple(syms), tuple(rels)))
        except InvalidWord:
            pass
        if len(syms) == max_symbols:
            return
        options = (SIM, DASH) if not rels else ((DASH,) if rels[-1] == SIM else (SIM,))
        for rel in options:
            if not rels and rel == DASH and syms[0].paired:
                continue
            for s in pool:
                if related(syms[-1], s, rel):
                    extend(syms + [s], rels + [rel])

    for s in pool:
        extend([s], [])
    uniq = {}
    for w in found:
        key = min(str(w), str(w.opposite()))
        uniq.setdefault(key, w if str(w) == key else w.opposite())
    return [uniq[k] for k in sorted(uniq)]


def enumerate_cyclic_words(max_symbols: int, max_index: int):
    """Cyclic words from band data whose symbol length is at most max_symbols."""
    out = []
    for w in enumerate_band_words(max_symbols // 4 or 1, max_index):
        c = module_to_bunch(BandDatum(w, 1, Fraction(1)))
        if len(c) <= max_symbols:
            out.append(c)
    return out
