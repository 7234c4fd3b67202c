"""Two-sided Gröbner basis completion in the free algebra.

The loop is the classical one: normalise each input relation into a rule,
reduce, then resolve every overlap ambiguity between left-hand sides.
Ambiguities are processed in increasing length of the ambiguity word (FIFO
within a length), new rules are inter-reduced eagerly, and a rule whose lhs
would be longer than ``degree_cap`` is discarded and the run marked capped.
"""

from __future__ import annotations

import heapq
import logging
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coeffs import ONE, ParamScalar
from .freealg import (
    DEGLEX,
    MonomialOrder,
    NCPoly,
    RewriteRule,
    RuleIndex,
    Word,
    format_poly,
    word_str,
)

log = logging.getLogger(__name__)

CAP_ENV = "TLGROWTH_DEGREE_CAP"
DEFAULT_MAX_RULES = 200_000
# "degree": shortest ambiguity first, FIFO within a length; "fifo": creation order only
SELECTIONS = ("degree", "fifo")


class GroebnerError(ValueError):
    pass


@dataclass
class GroebnerBasis:
    rules: dict  # lhs -> NCPoly rhs
    order: MonomialOrder = DEGLEX
    complete: bool = True
    cap: int | None = None
    stats: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "complete" if self.complete else f"capped({self.cap})"

    def leading_words(self) -> frozenset:
        return frozenset(self.rules)

    def rule_list(self) -> list[RewriteRule]:
        return [RewriteRule(l, self.rules[l]) for l in sorted(self.rules, key=self.order.key)]

    def polynomials(self) -> list[NCPoly]:
        return [r.polynomial() for r in self.rule_list()]

    def index(self) -> RuleIndex:
        return RuleIndex(self.rule_list())

    def reduce(self, f: NCPoly) -> NCPoly:
        return NCPoly._wrap(self.index().reduce_terms(f.terms))

    def max_degree(self) -> int:
        return max((len(l) for l in self.rules), default=0)

    def serialize(self) -> str:
        """One rule per line, ``lhs -> rhs``, sorted by (degree, lex)."""
        return "".join(f"{word_str(r.lhs)} -> {format_poly(r.rhs, self.order)}\n" for r in self.rule_list())

    def __len__(self):
        return len(self.rules)


def normalize(f: NCPoly, order: MonomialOrder = DEGLEX) -> RewriteRule:
    """Make ``f`` monic and orient it as ``leading word -> lower terms``."""
    if not f:
        raise GroebnerError("cannot normalize the zero polynomial")
    lead = f.leading_word(order)
    inv = f.terms[lead].inverse()
    rhs = {w: -(c * inv) for w, c in f.terms.items() if w != lead}
    return RewriteRule(lead, NCPoly._wrap(rhs))


def overlaps(u: Word, v: Word):
    """Lengths k with 0 < k < min(|u|,|v|) and suffix_k(u) == prefix_k(v)."""
    m = min(len(u), len(v))
    return [k for k in range(1, m) if u[len(u) - k:] == v[:k]]


def _spoly_overlap(idx: RuleIndex, l1: Word, l2: Word, k: int) -> dict:
    # l1 = a s, l2 = s b, ambiguity a s b
    a = l1[: len(l1) - k]
    b = l2[k:]
    left = {w + b: c for w, c in idx.rules[l1]}
    right = {a + w: -c for w, c in idx.rules[l2]}
    out = idx.reduce_terms(left)
    for w, c in idx.reduce_terms(right).items():
        prev = out.get(w)
        if prev is None:
            out[w] = c
        else:
            s = prev + c
            if s:
                out[w] = s
            else:
                del out[w]
    return out


def compositions(a: RewriteRule, b: RewriteRule) -> list[tuple[Word, NCPoly]]:
    """All S-polynomials between two rules, unreduced.

    Returns ``(ambiguity word, a-rewrite minus b-rewrite)`` for every proper
    overlap in either direction and for inclusions of one lhs in the other.
    """
    out = []

    def ext(left: Word, poly: NCPoly, right: Word) -> NCPoly:
        return NCPoly._wrap({left + w + right: c for w, c in poly.terms.items()})

    for k in overlaps(a.lhs, b.lhs):
        s_a = a.lhs[: len(a.lhs) - k]
        t_b = b.lhs[k:]
        out.append((a.lhs + t_b, ext(b"", a.rhs, t_b) - ext(s_a, b.rhs, b"")))
    if a is not b and a.lhs != b.lhs:
        for k in overlaps(b.lhs, a.lhs):
            s_b = b.lhs[: len(b.lhs) - k]
            t_a = a.lhs[k:]
            out.append((b.lhs + t_a, ext(s_b, a.rhs, b"") - ext(b"", b.rhs, t_a)))
    for big, small, sign in ((a, b, 1), (b, a, -1)):
        if big.lhs == small.lhs and big is not small:
            if sign == 1:
                out.append((big.lhs, big.rhs - small.rhs))
            continue
        if len(small.lhs) < len(big.lhs):
            start = big.lhs.find(small.lhs)
            while start != -1:
                pre, post = big.lhs[:start], big.lhs[start + len(small.lhs):]
                diff = big.rhs - ext(pre, small.rhs, post)
                out.append((big.lhs, diff if sign == 1 else -diff))
                start = big.lhs.find(small.lhs, start + 1)
    return out


def default_cap(relations: Sequence[NCPoly], order: MonomialOrder = DEGLEX) -> int:
    """``$TLGROWTH_DEGREE_CAP`` if set, else max(2L + 2, 4n).

    L is the longest input leading word and n the number of letters used.
    """
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise GroebnerError(f"{CAP_ENV} must be an integer, got {env!r}") from None
    longest = max(len(f.leading_word(order)) for f in relations if f)
    letters = max(max(w) for f in relations for w in f.terms if w)
    # 2L+2 alone cuts off the E_n and large tree bases (their longest lhs
    # grows with the rank), so the cap also scales with the alphabet
    return max(2 * longest + 2, 4 * letters)


class _Completion:
    def __init__(self, order: MonomialOrder, cap: int, max_rules: int, selection: str = "degree"):
        if selection not in SELECTIONS:
            raise GroebnerError(f"unknown pair selection {selection!r}; use one of {', '.join(SELECTIONS)}")
        self.by_degree = selection == "degree"
        self.order = order
        self.cap = cap
        self.max_rules = max_rules
        self.idx = RuleIndex()
        self.ids: dict[Word, int] = {}
        self.heap: list = []
        self.seq = 0
        self.next_id = 0
        self.capped = False
        self.pairs_done = 0
        self.max_lhs_seen = 0

    def _push_pairs(self, lhs: Word) -> None:
        nid = self.ids[lhs]
        for other, oid in self.ids.items():
            for k in overlaps(lhs, other):
                amb = len(lhs) + len(other) - k if self.by_degree else 0
                self.seq += 1
                heapq.heappush(self.heap, (amb, self.seq, lhs, nid, other, oid, k))
            if other != lhs:
                for k in overlaps(other, lhs):
                    amb = len(lhs) + len(other) - k if self.by_degree else 0
                    self.seq += 1
                    heapq.heappush(self.heap, (amb, self.seq, other, oid, lhs, nid, k))

    def _orient(self, terms: dict):
        key = self.order.key
        lead = max(terms, key=key)
        inv = terms[lead].inverse()
        if inv == ONE:
            rhs = {w: -c for w, c in terms.items() if w != lead}
        else:
            rhs = {w: -(c * inv) for w, c in terms.items() if w != lead}
        return lead, rhs

    def insert(self, terms: dict) -> None:
        """Reduce ``terms`` and add the result (and all fallout) as rules."""
        work = [terms]
        idx = self.idx
        while work:
            t = idx.reduce_terms(work.pop())
            if not t:
                continue
            lhs, rhs = self._orient(t)
            self.max_lhs_seen = max(self.max_lhs_seen, len(lhs))
            if len(lhs) > self.cap:
                if not self.capped:
                    log.info("degree cap %d exceeded by %s", self.cap, word_str(lhs))
                self.capped = True
                continue
            if len(idx) >= self.max_rules:
                raise GroebnerError(f"rule limit {self.max_rules} reached")
            # rules whose lhs contains the new lhs are removed and re-queued
            for old in [l for l in idx.rules if lhs in l]:
                poly = {old: ONE}
                for w, c in idx.rules[old]:
                    poly[w] = -c
                idx.remove(old)
                del self.ids[old]
                work.append(poly)
            idx.add(lhs, rhs)
            self.next_id += 1
            self.ids[lhs] = self.next_id
            # eager inter-reduction of right-hand sides
            for other, orhs in list(idx.rules.items()):
                if other != lhs and any(lhs in w for w, _ in orhs):
                    idx.set_rhs(other, idx.reduce_terms(dict(orhs)))
            self._push_pairs(lhs)

    def run(self) -> None:
        idx = self.idx
        while self.heap:
            amb, _, l1, id1, l2, id2, k = heapq.heappop(self.heap)
            if self.ids.get(l1) != id1 or self.ids.get(l2) != id2:
                continue
            self.pairs_done += 1
            s = _spoly_overlap(idx, l1, l2, k)
            if s:
                self.insert(s)


def complete(
    relations: Iterable[NCPoly],
    order: MonomialOrder = DEGLEX,
    degree_cap: int | None = None,
    max_rules: int = DEFAULT_MAX_RULES,
    selection: str = "degree",
) -> GroebnerBasis:
    """Complete the relations to a reduced Gröbner basis (or a capped prefix)."""
    rels = [f for f in relations]
    if not rels:
        raise GroebnerError("empty relation list")
    rels = [f for f in rels if f]
    if not rels:
        raise GroebnerError("all relations are zero")
    cap = default_cap(rels, order) if degree_cap is None else degree_cap
    longest = max(len(f.leading_word(order)) for f in rels)
    if cap < longest:
        raise GroebnerError(f"degree cap {cap} is below the input degree {longest}")
    run = _Completion(order, cap, max_rules, selection)
    for f in sorted(rels, key=lambda f: order.key(f.leading_word(order))):
        run.insert(dict(f.terms))
    run.run()
    rules = {l: NCPoly._wrap(dict(r)) for l, r in run.idx.rules.items()}
    return GroebnerBasis(
        rules=rules,
        order=order,
        complete=not run.capped,
        cap=cap,
        stats={"pairs": run.pairs_done, "rules": len(rules), "max_lhs_seen": run.max_lhs_seen},
    )


def leading_words(gb: GroebnerBasis) -> frozenset:
    return gb.leading_words()


def verify_complete(gb: GroebnerBasis) -> list[tuple[Word, NCPoly]]:
    """Independent pass: every composition of every pair must reduce to zero.

    Returns the offending (ambiguity, remainder) pairs; empty means complete.
    """
    idx = gb.index()
    rules = gb.rule_list()
    bad = []
    for i, a in enumerate(rules):
        for b in rules[i:]:
            for amb, s in compositions(a, b):
                r = idx.reduce_terms(s.terms)
                if r:
                    bad.append((amb, NCPoly._wrap(r)))
    return bad


def is_interreduced(gb: GroebnerBasis) -> bool:
    lhs = list(gb.rules)
    for u in lhs:
        for v in lhs:
            if u != v and u in v:
                return False
    for l, rhs in gb.rules.items():
        for w in rhs.terms:
            if any(u in w for u in lhs):
                return False
    return True
