"""Words, the deglex order, noncommutative polynomials and rewriting.

A word is stored as ``bytes``: letter ``k`` is the byte ``k`` (generators are
1-based, at most 255 of them).  That makes slicing, concatenation, hashing and
subword search (``u in w``) run at C speed, which matters because reduction
dominates every computation in this package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .coeffs import ONE, ZERO, ParamScalar, format_scalar, parse_scalar, scalar

Word = bytes
EMPTY: Word = b""


def word(*letters: int) -> Word:
    """``word(1, 2, 1)`` is p1*p2*p1."""
    if len(letters) == 1 and not isinstance(letters[0], int):
        letters = tuple(letters[0])
    for a in letters:
        if not 1 <= a <= 255:
            raise ValueError(f"generator index out of range: {a}")
    return bytes(letters)


def parse_word(text: str) -> Word:
    """Parse the comma-separated index syntax ``"2,3,4,2,1,5"``."""
    text = text.strip()
    if not text:
        return EMPTY
    try:
        return word(*(int(tok) for tok in text.split(",")))
    except ValueError as exc:
        raise ValueError(f"bad word {text!r}: {exc}") from None


def format_word(w: Word) -> str:
    return ",".join(str(a) for a in w)


def word_str(w: Word) -> str:
    """Render as ``p1*p2*p1`` (``1`` for the empty word)."""
    return "*".join(f"p{a}" for a in w) if w else "1"


def check_letters(w: Word, n: int) -> None:
    if w and max(w) > n:
        raise ValueError(f"word {format_word(w)} uses a generator beyond p{n}")


# -- order -------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """Degree-lexicographic order.

    ``precedence`` lists the letters from smallest to greatest; ``None`` means
    the natural order p1 < p2 < ... (higher index is the greater letter).
    """

    precedence: tuple[int, ...] | None = None
    _table: bytes | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.precedence is not None:
            prec = tuple(self.precedence)
            if sorted(prec) != list(range(1, len(prec) + 1)):
                raise ValueError("precedence must be a permutation of 1..n")
            table = bytearray(range(256))
            for rank, letter in enumerate(prec, start=1):
                table[letter] = rank
            object.__setattr__(self, "precedence", prec)
            object.__setattr__(self, "_table", bytes(table))

    def key(self, w: Word):
        if self._table is None:
            return (len(w), w)
        return (len(w), w.translate(self._table))

    def compare(self, u: Word, v: Word) -> int:
        """-1, 0 or 1 as u is less than, equal to or greater than v."""
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def describe(self) -> str:
        if self.precedence is None:
            return "deglex p1<p2<...<pn"
        return "deglex " + "<".join(f"p{a}" for a in self.precedence)


DEGLEX = MonomialOrder()


def compare(u: Word, v: Word, order: MonomialOrder = DEGLEX) -> int:
    return order.compare(u, v)


# -- polynomials -----------------------------------------------------------------

class NCPoly:
    """Noncommutative polynomial: a mapping word -> nonzero ParamScalar."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, object] | None = None):
        out = {}
        for w, c in (terms or {}).items():
            c = scalar(c)
            if c:
                out[bytes(w)] = c
        self.terms = out

    @classmethod
    def _wrap(cls, terms: dict) -> "NCPoly":
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, w: Word, c=ONE) -> "NCPoly":
        c = scalar(c)
        return cls._wrap({bytes(w): c} if c else {})

    @classmethod
    def gen(cls, k: int) -> "NCPoly":
        return cls._wrap({word(k): ONE})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Word, ParamScalar]]:
        return iter(self.terms.items())

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, w: Word) -> ParamScalar:
        return self.terms.get(w, ZERO)

    def leading_word(self, order: MonomialOrder = DEGLEX) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self.terms, key=order.key)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def __add__(self, other: "NCPoly") -> "NCPoly":
        return NCPoly._wrap(_add_terms(self.terms, other.terms, ONE))

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return NCPoly._wrap(_add_terms(self.terms, other.terms, -ONE))

    def __neg__(self):
        return NCPoly._wrap({w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "NCPoly":
        c = scalar(c)
        if not c:
            return NCPoly()
        return NCPoly._wrap({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def specialize(self, assignment) -> "NCPoly":
        out = {}
        for w, c in self.terms.items():
            v = c.specialize(assignment)
            if v:
                out[w] = v
        return NCPoly._wrap(out)

    def sorted_terms(self, order: MonomialOrder = DEGLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __repr__(self):
        return f"NCPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _add_terms(a: dict, b: dict, sign: ParamScalar) -> dict:
    out = dict(a)
    for w, c in b.items():
        if sign is not ONE:
            c = -c
        v = out.get(w)
        v = c if v is None else v + c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def multiply(f: NCPoly, g: NCPoly) -> NCPoly:
    """Bilinear concatenation product."""
    out: dict = {}
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            w = u + v
            c = a * b
            prev = out.get(w)
            out[w] = c if prev is None else prev + c
    return NCPoly._wrap({w: c for w, c in out.items() if c})


# -- text syntax ---------------------------------------------------------------

def _coef_str(c: ParamScalar) -> tuple[bool, str]:
    """Split a coefficient into (negative, body-without-sign)."""
    if len(c.num) == 1 and c.den == ONE.den:
        (e, q), = c.num.items()
        if q < 0:
            return True, format_scalar(-c)
    return False, format_scalar(c)


def format_poly(f: NCPoly, order: MonomialOrder = DEGLEX) -> str:
    """Render as ``p1*p2*p1 - t*p1``; terms in decreasing order."""
    if not f.terms:
        return "0"
    parts = []
    for w, c in f.sorted_terms(order):
        neg, body = _coef_str(c)
        if " " in body or "/" in body:
            body = f"({body})"
        if not w:
            text = body
        elif body == "1":
            text = word_str(w)
        else:
            text = f"{body}*{word_str(w)}"
        if not parts:
            parts.append(f"-{text}" if neg else text)
        else:
            parts.append(f" - {text}" if neg else f" + {text}")
    return "".join(parts)


_PTOKEN = re.compile(r"\s*(?:p(\d+)|(\d+)|(t2|t1|t|τ₁|τ₂|τ)|(\*\*|[-+*/^()]))")


def parse_poly(text: str) -> NCPoly:
    """Parse polynomial text such as ``"p1*p2*p1 - t*p1"`` or ``"(t1 - 1)/t*p2"``."""
    toks = []
    pos = 0
    src = text.rstrip()
    while pos < len(src):
        m = _PTOKEN.match(src, pos)
        if not m:
            raise ValueError(f"unexpected character at position {pos} in {text!r}")
        if m.group(1):
            toks.append(("gen", int(m.group(1)), m.start(1)))
        elif m.group(2):
            toks.append(("num", int(m.group(2)), m.start(2)))
        elif m.group(3):
            toks.append(("par", m.group(3), m.start(3)))
        else:
            toks.append(("op", "^" if m.group(4) == "**" else m.group(4), m.start(4)))
        pos = m.end()
    state = {"i": 0}

    def peek():
        i = state["i"]
        return toks[i] if i < len(toks) else (None, None, len(src))

    def take():
        tok = peek()
        state["i"] += 1
        return tok

    def expr() -> NCPoly:
        kind, val, _ = peek()
        neg = False
        if kind == "op" and val in "+-":
            take()
            neg = val == "-"
        acc = term()
        if neg:
            acc = -acc
        while True:
            kind, val, _ = peek()
            if kind == "op" and val in "+-":
                take()
                rhs = term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term() -> NCPoly:
        acc = power()
        while True:
            kind, val, pos_ = peek()
            if kind == "op" and val in "*/":
                take()
                rhs = power()
                if val == "*":
                    acc = multiply(acc, rhs)
                else:
                    if any(rhs.terms) and list(rhs.terms) != [EMPTY]:
                        raise ValueError(f"can only divide by scalars (position {pos_})")
                    acc = acc.scale(rhs.coefficient(EMPTY).inverse())
            else:
                return acc

    def power() -> NCPoly:
        base = atom()
        kind, val, _ = peek()
        if kind == "op" and val == "^":
            take()
            k, e, p = take()
            if k != "num":
                raise ValueError(f"expected integer exponent at position {p}")
            out = NCPoly.monomial(EMPTY)
            for _ in range(e):
                out = multiply(out, base)
            return out
        return base

    def atom() -> NCPoly:
        kind, val, p = take()
        if kind == "gen":
            if val < 1:
                raise ValueError(f"generator index must be positive (position {p})")
            return NCPoly.gen(val)
        if kind == "num":
            return NCPoly.monomial(EMPTY, ParamScalar(val))
        if kind == "par":
            return NCPoly.monomial(EMPTY, parse_scalar(val))
        if kind == "op" and val == "(":
            inner = expr()
            k, v, p2 = take()
            if v != ")":
                raise ValueError(f"expected ')' at position {p2}")
            return inner
        if kind == "op" and val == "-":
            return -atom()
        raise ValueError(f"unexpected token at position {p} in {text!r}")

    out = expr()
    if state["i"] != len(toks):
        raise ValueError(f"trailing input at position {peek()[2]} in {text!r}")
    return out


# -- rewriting -----------------------------------------------------------------

@dataclass(frozen=True)
class RewriteRule:
    """``lhs -> rhs``; encodes the monic polynomial lhs - rhs."""

    lhs: Word
    rhs: NCPoly

    def polynomial(self) -> NCPoly:
        return NCPoly.monomial(self.lhs) - self.rhs

    def __str__(self):
        return f"{word_str(self.lhs)} -> {format_poly(self.rhs)}"


class RuleIndex:
    """Mutable rule store with subword lookup and memoised normal forms.

    Left-hand sides are bucketed by first letter, then by length, so finding
    an occurrence in a word costs one dict probe per (position, length).
    """

    def __init__(self, rules: Iterable[RewriteRule] = ()):
        self.rules: dict[Word, tuple[tuple[Word, ParamScalar], ...]] = {}
        self._by_first: dict[int, dict[int, set]] = {}
        self._cache: dict[Word, dict] = {}
        for r in rules:
            self.add(r.lhs, r.rhs.terms)

    def __len__(self):
        return len(self.rules)

    def __contains__(self, lhs: Word):
        return lhs in self.rules

    def add(self, lhs: Word, rhs: Mapping[Word, ParamScalar]) -> None:
        self.rules[lhs] = tuple(rhs.items())
        bucket = self._by_first.setdefault(lhs[0], {})
        bucket.setdefault(len(lhs), set()).add(lhs)
        self._cache.clear()

    def set_rhs(self, lhs: Word, rhs: Mapping[Word, ParamScalar]) -> None:
        self.rules[lhs] = tuple(rhs.items())
        self._cache.clear()

    def remove(self, lhs: Word) -> None:
        del self.rules[lhs]
        bucket = self._by_first[lhs[0]]
        group = bucket[len(lhs)]
        group.discard(lhs)
        if not group:
            del bucket[len(lhs)]
        if not bucket:
            del self._by_first[lhs[0]]
        self._cache.clear()

    def find(self, w: Word):
        """Leftmost occurrence ``(position, lhs)``; longest lhs on ties."""
        by_first = self._by_first
        n = len(w)
        for i in range(n):
            bucket = by_first.get(w[i])
            if bucket is None:
                continue
            best = None
            for length, group in bucket.items():
                if i + length <= n and (best is None or length > len(best)):
                    piece = w[i:i + length]
                    if piece in group:
                        best = piece
            if best is not None:
                return i, best
        return None

    def is_normal(self, w: Word) -> bool:
        return self.find(w) is None

    def normal_form(self, w: Word) -> dict:
        """Normal form of a single word as a dict word -> coefficient."""
        cache = self._cache
        hit = cache.get(w)
        if hit is not None:
            return hit
        stack = [w]
        rules = self.rules
        while stack:
            x = stack[-1]
            if x in cache:
                stack.pop()
                continue
            occ = self.find(x)
            if occ is None:
                cache[x] = {x: ONE}
                stack.pop()
                continue
            i, lhs = occ
            a, b = x[:i], x[i + len(lhs):]
            rhs = rules[lhs]
            missing = [a + v + b for v, _ in rhs if a + v + b not in cache]
            if missing:
                stack.extend(missing)
                continue
            acc: dict = {}
            for v, c in rhs:
                for u, d in cache[a + v + b].items():
                    e = c * d if c is not ONE else d
                    prev = acc.get(u)
                    if prev is None:
                        acc[u] = e
                    else:
                        s = prev + e
                        if s:
                            acc[u] = s
                        else:
                            del acc[u]
            cache[x] = acc
            stack.pop()
        return cache[w]

    def reduce_terms(self, terms: Mapping[Word, ParamScalar]) -> dict:
        acc: dict = {}
        for w, c in terms.items():
            for u, d in self.normal_form(w).items():
                e = c * d
                prev = acc.get(u)
                if prev is None:
                    acc[u] = e
                else:
                    s = prev + e
                    if s:
                        acc[u] = s
                    else:
                        del acc[u]
        return acc

    def to_rules(self) -> list[RewriteRule]:
        return [RewriteRule(l, NCPoly._wrap(dict(r))) for l, r in self.rules.items()]


def as_index(rules) -> RuleIndex:
    if isinstance(rules, RuleIndex):
        return rules
    if hasattr(rules, "rule_list"):  # a GroebnerBasis
        return rules.index()
    return RuleIndex(rules)


def reduce(f: NCPoly, rules, order: MonomialOrder = DEGLEX) -> NCPoly:
    """Normal form of ``f`` modulo the rules (leftmost rewriting, memoised).

    ``order`` is only used to validate a plain list of rules; the rewriting
    itself never compares words.
    """
    if isinstance(rules, (list, tuple)):
        for r in rules:
            check_rule(r, order)
    idx = as_index(rules)
    return NCPoly._wrap(idx.reduce_terms(f.terms))


def is_normal(w: Word, leading: Iterable[Word]) -> bool:
    """True iff no word of ``leading`` occurs as a contiguous subword of ``w``."""
    return not any(u in w for u in leading)


def check_rule(rule: RewriteRule, order: MonomialOrder = DEGLEX) -> None:
    k = order.key(rule.lhs)
    for w in rule.rhs.terms:
        if order.key(w) >= k:
            raise ValueError(f"rule {rule} does not decrease: {word_str(w)} >= {word_str(rule.lhs)}")


def words_of_length(n: int, length: int) -> Iterator[Word]:
    """All words over 1..n of exactly the given length (lexicographic)."""
    from itertools import product

    for tup in product(range(1, n + 1), repeat=length):
        yield bytes(tup)


def sort_words(ws: Sequence[Word], order: MonomialOrder = DEGLEX) -> list[Word]:
    return sorted(ws, key=order.key)
