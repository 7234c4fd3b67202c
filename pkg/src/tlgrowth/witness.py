"""Free-pair certificates for exponential growth.

Two distinct words q1, q2 with q1 q2 != q2 q1 generate a free monoid.  If in
addition every product of them is normal, those products are linearly
independent in the quotient and the algebra contains a free subalgebra on two
generators.  Normality of *all* products follows from checking the products
of ``window`` consecutive factors: any forbidden word has length at most L,
so each of its occurrences sits inside some block of that many factors.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

from .freealg import Word, format_word
from .growth import build_automaton
from .presets import figure, figure_table, figure_tags

FAILS_AS_PRINTED = "paper-verbatim: fails as printed"


@dataclass(frozen=True)
class FreePairCertificate:
    q1: Word
    q2: Word
    window: int
    checked_count: int

    def __post_init__(self):
        if not self.q1 or not self.q2:
            raise ValueError("certificate words must be nonempty")
        if self.q1 == self.q2:
            raise ValueError("certificate words must differ")

    def to_json(self) -> dict:
        return {
            "q1": format_word(self.q1),
            "q2": format_word(self.q2),
            "window": self.window,
            "checked_count": self.checked_count,
        }


@dataclass(frozen=True)
class Rejection:
    reason: str

    def __bool__(self):
        return False


def window_size(q1: Word, q2: Word, longest: int) -> int:
    return math.ceil((longest - 1) / min(len(q1), len(q2))) + 1


def _products(q1: Word, q2: Word, k: int):
    for choice in itertools.product((q1, q2), repeat=k):
        yield b"".join(choice)


def verify_free_pair(
    q1: Word,
    q2: Word,
    leading: Iterable[Word],
    complete: bool = True,
    n_generators: int | None = None,
) -> FreePairCertificate | Rejection:
    """Accept (q1, q2) as a free pair for the algebra with these leading words."""
    if not complete:
        return Rejection("unverifiable: the Gröbner basis is capped, normality cannot be certified")
    lead = frozenset(leading)
    if not lead:
        return Rejection("empty leading-word set")
    if not q1 or not q2:
        return Rejection("empty word")
    n = n_generators or max(max(w) for w in lead | {q1, q2})
    auto = build_automaton(lead, n)
    for name, q in (("q1", q1), ("q2", q2)):
        if max(q) > n:
            return Rejection(f"{name} uses a letter outside 1..{n}")
        if not auto.accepts(q):
            bad = next(w for w in sorted(lead, key=lambda w: (len(w), w)) if w in q)
            return Rejection(f"{name} = {format_word(q)} is not normal (contains {format_word(bad)})")
    if q1 + q2 == q2 + q1:
        return Rejection("q1 and q2 commute as words, so they do not generate a free monoid")
    longest = max(len(w) for w in lead)
    w = window_size(q1, q2, longest)
    checked = 0
    for prod in _products(q1, q2, w):
        checked += 1
        if not auto.accepts(prod):
            bad = next(x for x in sorted(lead, key=lambda x: (len(x), x)) if x in prod)
            return Rejection(f"product {format_word(prod)} of {w} factors contains {format_word(bad)}")
    return FreePairCertificate(q1, q2, w, checked)


def window_self_test(cert: FreePairCertificate, leading: Iterable[Word], extra: int = 2) -> list[Word]:
    """Products of up to ``window + extra`` factors that fail to be normal (should be none)."""
    lead = frozenset(leading)
    n = max(max(w) for w in lead | {cert.q1, cert.q2})
    auto = build_automaton(lead, n)
    bad = []
    for k in range(1, cert.window + extra + 1):
        for prod in _products(cert.q1, cert.q2, k):
            if not auto.accepts(prod):
                bad.append(prod)
    return bad


def exponential_lower_bound(cert: FreePairCertificate, max_degree: int) -> list[int]:
    """Number of q1/q2 products of each word length 0..max_degree."""
    a, b = len(cert.q1), len(cert.q2)
    out = [0] * (max_degree + 1)
    out[0] = 1
    for d in range(1, max_degree + 1):
        if d >= a:
            out[d] += out[d - a]
        if d >= b:
            out[d] += out[d - b]
    return out


# -- fixture table ----------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessFixture:
    tag: str
    q1: Word
    q2: Word
    note: str = ""
    detail: str = ""

    @property
    def expected_to_fail(self) -> bool:
        return self.note == FAILS_AS_PRINTED

    def graph(self):
        return figure(self.tag)


def _parse(text: str) -> Word:
    return bytes(int(x) for x in text.split(","))


def witness_fixtures() -> list[WitnessFixture]:
    table = figure_table()
    return [
        WitnessFixture(
            tag,
            _parse(table[tag]["q1"]),
            _parse(table[tag]["q2"]),
            table[tag].get("note", ""),
            table[tag].get("detail", ""),
        )
        for tag in figure_tags()
    ]


def fixture(tag: str) -> WitnessFixture:
    for f in witness_fixtures():
        if f.tag == tag:
            return f
    raise KeyError(f"no witness fixture for figure {tag!r}")
