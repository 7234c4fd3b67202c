"""Exact scalars: rational functions in the parameters t, t1, t2 over Q.

Polynomials are plain dicts mapping exponent triples ``(e_t, e_t1, e_t2)`` to
``gmpy2.mpq`` coefficients.  :class:`ParamScalar` keeps numerator and
denominator coprime with a monic denominator (leading term taken in
degree-lexicographic order with t < t1 < t2), so two scalars are equal iff
their stored forms are equal.

Almost every coefficient met in practice has a monomial denominator; those are
canonicalised with a componentwise-minimum gcd.  Genuine polynomial gcds are
delegated to sympy's sparse polynomial rings.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Union

from gmpy2 import mpq

PARAM_NAMES = ("t", "t1", "t2")
_NVARS = 3
_ONE_EXP = (0, 0, 0)

Poly = dict  # exponent triple -> mpq, no zero values
Number = Union[int, Fraction, "mpq"]


class ParamError(ArithmeticError):
    """Division by zero or a pole hit during specialisation."""


def _lead_key(exp):
    return (exp[0] + exp[1] + exp[2], exp[2], exp[1], exp[0])


def _leading(p: Poly):
    return max(p, key=_lead_key)


def _padd(a: Poly, b: Poly, sign: int = 1) -> Poly:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e)
        v = c * sign if v is None else v + c * sign
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _pmul(a: Poly, b: Poly) -> Poly:
    if len(a) == 1 and len(b) == 1:
        (ea, ca), = a.items()
        (eb, cb), = b.items()
        return {(ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]): ca * cb}
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            v = out.get(e)
            out[e] = ca * cb if v is None else v + ca * cb
    return {e: c for e, c in out.items() if c}


def _pscale(a: Poly, c) -> Poly:
    return {e: v * c for e, v in a.items()}


def _shift(a: Poly, g) -> Poly:
    return {(e[0] - g[0], e[1] - g[1], e[2] - g[2]): c for e, c in a.items()}


def _mono_gcd(a: Poly, b: Poly):
    g = None
    for p in (a, b):
        for e in p:
            if g is None:
                g = list(e)
            else:
                for k in range(_NVARS):
                    if e[k] < g[k]:
                        g[k] = e[k]
    return tuple(g)


_sympy_ring = None


def _ring():
    global _sympy_ring
    if _sympy_ring is None:
        from sympy.polys.domains import QQ
        from sympy.polys.orderings import grlex
        from sympy.polys.rings import ring

        _sympy_ring = ring(",".join(PARAM_NAMES), QQ, grlex)[0]
    return _sympy_ring


def _poly_gcd_cofactors(a: Poly, b: Poly):
    R = _ring()
    dom = R.domain
    fa = R.from_dict({e: dom.convert(c) for e, c in a.items()})
    fb = R.from_dict({e: dom.convert(c) for e, c in b.items()})
    _, ca, cb = fa.cofactors(fb)
    back = lambda f: {tuple(e): mpq(int(c.numerator), int(c.denominator)) for e, c in f.items()}
    return back(ca), back(cb)


def _canonical(num: Poly, den: Poly) -> "ParamScalar":
    if not den:
        raise ParamError("division by zero")
    if not num:
        return ZERO
    if len(den) == 1 or len(num) == 1:
        g = _mono_gcd(num, den)
        if g != _ONE_EXP:
            num = _shift(num, g)
            den = _shift(den, g)
        if len(den) > 1 and len(num) > 1:
            num, den = _poly_gcd_cofactors(num, den)
    elif num == den:
        return ONE
    else:
        num, den = _poly_gcd_cofactors(num, den)
    lc = den[_leading(den)]
    if lc != 1:
        inv = 1 / lc
        num = _pscale(num, inv)
        den = _pscale(den, inv)
    return ParamScalar._raw(num, den)


def _to_mpq(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


class ParamScalar:
    """Element of Q(t, t1, t2) in canonical num/den form.  Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, value: Number = 0):
        v = _to_mpq(value)
        self.num = {_ONE_EXP: v} if v else {}
        self.den = {_ONE_EXP: mpq(1)}
        self._hash = None

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "ParamScalar":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_polys(cls, num: Mapping, den: Mapping | None = None) -> "ParamScalar":
        n = {tuple(e): _to_mpq(c) for e, c in num.items() if c}
        d = {_ONE_EXP: mpq(1)} if den is None else {tuple(e): _to_mpq(c) for e, c in den.items() if c}
        return _canonical(n, d)

    @classmethod
    def param(cls, name: str) -> "ParamScalar":
        exp = [0, 0, 0]
        exp[PARAM_NAMES.index(name)] = 1
        return cls._raw({tuple(exp): mpq(1)}, {_ONE_EXP: mpq(1)})

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.den) == 1 and _ONE_EXP in self.den and all(e == _ONE_EXP for e in self.num)

    def is_monomial(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        v = self.num.get(_ONE_EXP, mpq(0))
        return Fraction(int(v.numerator), int(v.denominator))

    def parameters(self) -> frozenset:
        used = set()
        for p in (self.num, self.den):
            for e in p:
                used.update(PARAM_NAMES[k] for k in range(_NVARS) if e[k])
        return frozenset(used)

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "ParamScalar":
        if isinstance(other, ParamScalar):
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(_ONE_Q):
            return ParamScalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            num = _padd(self.num, other.num)
            if len(self.den) == 1 and _ONE_EXP in self.den:
                return ParamScalar._raw(num, self.den) if num else ZERO
            return _canonical(num, self.den)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return _canonical(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return ParamScalar._raw({e: -c for e, c in self.num.items()}, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        sd, od = self.den, other.den
        if len(sd) == 1 and len(od) == 1 and _ONE_EXP in sd and _ONE_EXP in od:
            return ParamScalar._raw(_pmul(self.num, other.num), sd)
        return _canonical(_pmul(self.num, other.num), _pmul(sd, od))

    __rmul__ = __mul__

    def inverse(self) -> "ParamScalar":
        if not self.num:
            raise ParamError("division by zero")
        return _canonical(dict(self.den), dict(self.num))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, ParamScalar):
            other = self._coerce(other)
            if other is NotImplemented:
                return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    def __repr__(self):
        return f"ParamScalar({str(self)!r})"

    def __str__(self):
        return format_scalar(self)

    # -- specialisation ---------------------------------------------------
    def specialize(self, assignment: Mapping[str, Number]) -> "ParamScalar":
        """Substitute rational values for some of t, t1, t2."""
        vals = {}
        for name, value in assignment.items():
            if name not in PARAM_NAMES:
                raise KeyError(f"unknown parameter {name!r}")
            vals[PARAM_NAMES.index(name)] = _to_mpq(value)
        num = _substitute(self.num, vals)
        den = _substitute(self.den, vals)
        if not den:
            culprits = sorted(PARAM_NAMES[k] for k in vals if any(e[k] for e in self.den))
            raise ParamError(f"denominator vanishes at {', '.join(culprits)}")
        return _canonical(num, den)


def _substitute(p: Poly, vals) -> Poly:
    out: Poly = {}
    for e, c in p.items():
        e2 = list(e)
        for k, v in vals.items():
            if e2[k]:
                c = c * v ** e2[k]
                e2[k] = 0
        if not c:
            continue
        e2 = tuple(e2)
        s = out.get(e2)
        out[e2] = c if s is None else s + c
    return {e: c for e, c in out.items() if c}


_ONE_Q = mpq(1)
ZERO = ParamScalar._raw({}, {_ONE_EXP: mpq(1)})
ONE = ParamScalar._raw({_ONE_EXP: mpq(1)}, {_ONE_EXP: mpq(1)})
T = ParamScalar.param("t")
T1 = ParamScalar.param("t1")
T2 = ParamScalar.param("t2")


def scalar(value) -> ParamScalar:
    """Coerce an int, Fraction, mpq, string or ParamScalar."""
    if isinstance(value, ParamScalar):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    return ParamScalar(value)


# -- text form ----------------------------------------------------------------

def _fmt_q(c) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly) -> str:
    if not p:
        return "0"
    parts = []
    for e in sorted(p, key=_lead_key, reverse=True):
        c = p[e]
        mono = "*".join(
            name if k == 1 else f"{name}^{k}" for name, k in zip(PARAM_NAMES, e) if k
        )
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = _fmt_q(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_q(a)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def format_scalar(a: ParamScalar) -> str:
    """Render as e.g. ``(-2*t^2 + 1)/(t1 - 1)``; denominators of 1 are omitted."""
    if a.den == {_ONE_EXP: 1}:
        return format_poly(a.num)
    return f"({format_poly(a.num)})/({format_poly(a.den)})"


_TOKEN = re.compile(r"\s*(?:(\d+)|(t2|t1|t|τ₁|τ₂|τ)|(\*\*|[-+*/^()]))")
_ALIASES = {"τ": "t", "τ₁": "t1", "τ₂": "t2"}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"unexpected character at position {pos}: {text[pos:pos + 10]!r}")
            if m.group(1):
                self.tokens.append(("num", int(m.group(1)), m.start(1)))
            elif m.group(2):
                self.tokens.append(("var", _ALIASES.get(m.group(2), m.group(2)), m.start(2)))
            else:
                op = "^" if m.group(3) == "**" else m.group(3)
                self.tokens.append(("op", op, m.start(3)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self) -> ParamScalar:
        kind, val, _ = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term(self) -> ParamScalar:
        acc = self.power()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.power()
                acc = acc * rhs if val == "*" else acc / rhs
            else:
                return acc

    def power(self) -> ParamScalar:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k, e, pos = self.take()
            if k != "num":
                raise ValueError(f"expected integer exponent at position {pos}")
            return base ** e
        return base

    def atom(self) -> ParamScalar:
        kind, val, pos = self.take()
        if kind == "num":
            return ParamScalar(val)
        if kind == "var":
            return ParamScalar.param(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            k, v, p = self.take()
            if v != ")":
                raise ValueError(f"expected ')' at position {p}")
            return inner
        if kind == "op" and val == "-":
            return -self.atom()
        raise ValueError(f"unexpected token at position {pos}")


def parse_scalar(text: str) -> ParamScalar:
    """Inverse of :func:`format_scalar` (accepts any rational expression)."""
    p = _Parser(text)
    out = p.expr()
    if p.i != len(p.tokens):
        raise ValueError(f"trailing input at position {p.peek()[2]}")
    return out
