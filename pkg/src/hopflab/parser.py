"""Expression parser for elements of a presentation (and its tensor powers).

Grammar (whitespace insignificant)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (['*'] factor)*
    factor := atom ('^' ['-'] int)*
    atom   := number | ident | '(' expr ')'
            | 'tensor(' expr (',' expr)+ ')'
            | 'qexp(' expr ';' expr ')'

``number`` is an integer or a literal fraction ``n/m``.  Identifiers are
letters of the presentation, abbreviations registered on it, or the scalar
names ``s`` (square root of q), ``q``, ``mu`` (= 1 - q^-2), ``lam``, ``t``
and ``i``/``I``.  Negative powers are allowed on scalars and on letters
that have an inverse letter.  ``qexp(b; x)`` is the q-exponential
``sum_k x^k / [k; b]!`` and is only available in series modes, where the
sum is cut off once every term vanishes at the working order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .ncalg import Algebra, NCElement, TensorElement

__all__ = ["parse", "ParseError", "UnknownIdentifier", "ModeViolation", "render", "qexp"]


class ParseError(SyntaxError):
    def __init__(self, msg, text, pos):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{msg} at line {line}, column {col}")
        self.line = line
        self.column = col


class UnknownIdentifier(ParseError):
    pass


class ModeViolation(ValueError):
    pass


SCALAR_NAMES = ("s", "q", "mu", "lam", "t", "i", "I")

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*(?:(?<=_)[+-])?)
  | (?P<op>[-+*^(),;])
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append(_Tok(kind, m.group(), pos))
        pos = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


class _Scalar:
    """A ring scalar that has not yet met an algebra element."""

    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v


def _is_scalar_element(x: NCElement) -> bool:
    return all(not w for w in x.terms)


class _Parser:
    def __init__(self, text: str, alg: Algebra):
        self.text = text
        self.alg = alg
        self.ring = alg.ring
        self.toks = _tokenize(text)
        self.i = 0

    # -- token helpers ----------------------------------------------------
    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def _advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def _accept(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def _expect(self, text: str):
        if not self._accept(text):
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.text, self.tok.pos)

    def _error(self, msg):
        raise ParseError(msg, self.text, self.tok.pos)

    # -- value algebra ----------------------------------------------------
    def _promote(self, x):
        if isinstance(x, _Scalar):
            return self.alg.scalar(x.v)
        return x

    def _add(self, a, b, sign=1):
        if isinstance(a, _Scalar) and isinstance(b, _Scalar):
            return _Scalar(a.v + b.v if sign > 0 else a.v - b.v)
        a, b = self._tensor_pair(self._promote(a), self._promote(b))
        return a + b if sign > 0 else a - b

    def _tensor_pair(self, a, b):
        if isinstance(a, TensorElement) and isinstance(b, NCElement):
            b = self._scalar_to_tensor(b, a.legs)
        elif isinstance(b, TensorElement) and isinstance(a, NCElement):
            a = self._scalar_to_tensor(a, b.legs)
        elif isinstance(a, TensorElement) and isinstance(b, TensorElement):
            if len(a.legs) != len(b.legs):
                self._error("tensor elements with different numbers of legs")
        return a, b

    def _scalar_to_tensor(self, x: NCElement, legs):
        if not _is_scalar_element(x):
            self._error("cannot combine an algebra element with a tensor element")
        c = x.terms.get((), self.ring.zero)
        return TensorElement.unit(legs).scale(c) if c else TensorElement.zero(legs)

    def _mul(self, a, b):
        if isinstance(a, _Scalar) and isinstance(b, _Scalar):
            return _Scalar(a.v * b.v)
        if isinstance(a, _Scalar):
            return b.scale(a.v)
        if isinstance(b, _Scalar):
            return a.scale(b.v)
        if isinstance(a, TensorElement) and isinstance(b, NCElement):
            if _is_scalar_element(b):
                return a.scale(b.terms.get((), self.ring.zero))
            self._error("cannot multiply a tensor element by an algebra element")
        if isinstance(b, TensorElement) and isinstance(a, NCElement):
            if _is_scalar_element(a):
                return b.scale(a.terms.get((), self.ring.zero))
            self._error("cannot multiply an algebra element by a tensor element")
        a, b = self._tensor_pair(a, b)
        return a * b

    def _pow(self, x, n: int, pos: int):
        if n >= 0:
            if isinstance(x, _Scalar):
                return _Scalar(x.v**n)
            return x**n
        if isinstance(x, _Scalar):
            return _Scalar(_scalar_inverse(x.v) ** (-n))
        if isinstance(x, NCElement):
            if _is_scalar_element(x):
                c = x.terms.get((), self.ring.zero)
                return self.alg.scalar(_scalar_inverse(c) ** (-n))
            for name, inv in getattr(self.alg, "abbreviation_inverses", {}).items():
                if x == self.alg.abbreviations[name]:
                    return inv ** (-n)
            if len(x.terms) == 1:
                (w, c), = x.terms.items()
                if len(w) == 1 and w[0] in self.alg.inverse:
                    inv = NCElement(self.alg, {(self.alg.inverse[w[0]],): self.ring.one})
                    return (inv ** (-n)).scale(_scalar_inverse(c) ** (-n))
        raise ParseError("negative power of a non-invertible factor", self.text, pos)

    # -- grammar ----------------------------------------------------------
    def parse(self):
        v = self.expr()
        if self.tok.kind != "end":
            self._error(f"unexpected {self.tok.text!r}")
        return self._promote(v)

    def expr(self):
        neg = self._accept("-")
        v = self.term()
        if neg:
            v = self._neg(v)
        while True:
            if self._accept("+"):
                v = self._add(v, self.term(), 1)
            elif self._accept("-"):
                v = self._add(v, self.term(), -1)
            else:
                return v

    def _neg(self, v):
        if isinstance(v, _Scalar):
            return _Scalar(-v.v)
        return -v

    def _starts_factor(self) -> bool:
        t = self.tok
        return t.kind in ("num", "ident") or (t.kind == "op" and t.text == "(")

    def term(self):
        v = self.factor()
        while True:
            if self._accept("*"):
                v = self._mul(v, self.factor())
            elif self._starts_factor():
                v = self._mul(v, self.factor())
            else:
                return v

    def factor(self):
        v = self.atom()
        while self.tok.kind == "op" and self.tok.text == "^":
            pos = self.tok.pos
            self._advance()
            neg = self._accept("-")
            if self.tok.kind != "num" or "/" in self.tok.text:
                self._error("exponent must be an integer")
            n = int(self._advance().text)
            v = self._pow(v, -n if neg else n, pos)
        return v

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self._advance()
            return _Scalar(self.ring.coerce(Fraction(t.text)))
        if t.kind == "op" and t.text == "(":
            self._advance()
            v = self.expr()
            self._expect(")")
            return v
        if t.kind == "ident":
            self._advance()
            if t.text == "tensor" and self._accept("("):
                return self._tensor()
            if t.text == "qexp" and self._accept("("):
                return self._qexp(t.pos)
            return self._ident(t)
        if t.kind == "end":
            self._error("unexpected end of input")
        self._error(f"unexpected {t.text!r}")

    def _tensor(self):
        parts = [self._promote(self.expr())]
        while self._accept(","):
            parts.append(self._promote(self.expr()))
        self._expect(")")
        if len(parts) < 2:
            self._error("tensor(...) needs at least two legs")
        for p in parts:
            if not isinstance(p, NCElement):
                self._error("tensor legs must be algebra elements")
        return TensorElement.pure(*parts)

    def _qexp(self, pos):
        base = self.expr()
        self._expect(";")
        arg = self.expr()
        self._expect(")")
        if not isinstance(base, _Scalar):
            base = self._promote(base)
            if not _is_scalar_element(base):
                raise ParseError("q-exponential base must be a scalar", self.text, pos)
            base = _Scalar(base.terms.get((), self.ring.zero))
        if not self.ring.is_series:
            raise ModeViolation("qexp(...) is only available in series modes")
        return qexp(base.v, self._promote(arg))

    def _ident(self, t: _Tok):
        name = t.text
        alg = self.alg
        if name in alg.index:
            return alg.gen(name)
        abbrev = getattr(alg, "abbreviations", {})
        if name in abbrev:
            return abbrev[name]
        ring = self.ring
        if name == "s":
            if getattr(ring, "classical", False):
                return _Scalar(ring.one)
            return _Scalar(ring.s)
        if name == "q":
            return _Scalar(ring.q(1))
        if name == "mu":
            return _Scalar(ring.mu)
        if name in ("i", "I"):
            return _Scalar(ring.I)
        if name == "lam":
            try:
                return _Scalar(ring.lam)
            except ValueError as exc:
                raise ModeViolation(str(exc)) from None
        if name == "t":
            if not ring.is_series or ring.var != "t":
                raise ModeViolation("t is only available in the t-adic mode")
            return _Scalar(ring.gen)
        raise UnknownIdentifier(f"unknown identifier {name!r}", self.text, t.pos)


def _scalar_inverse(c):
    if hasattr(c, "inverse"):
        return c.inverse()
    return 1 / c


def q_factorial_weights(base, n_max: int):
    """``1/[k; base]!`` for ``k = 0..n_max``."""
    out = [None] * (n_max + 1)
    one = base * 0 + 1
    fact = one
    out[0] = one
    power = one
    partial = one * 0
    for k in range(1, n_max + 1):
        partial = partial + power  # [k; b] = 1 + b + ... + b^(k-1)
        power = power * base
        fact = fact * partial
        out[k] = _scalar_inverse(fact)
    return out


def qexp(base, x):
    """``e_base^x = sum_k x^k / [k; base]!`` truncated at the working order.

    ``x`` must have positive valuation in every term so that the sum is finite.
    """
    ring = (x.alg if isinstance(x, NCElement) else x.legs[0]).ring
    if not ring.is_series:
        raise ModeViolation("q-exponentials of general elements need a series mode")
    vmin = min((c.valuation for c in x.terms.values()), default=ring.N + 1)
    if vmin < 1:
        raise ModeViolation("q-exponential argument must vanish at order zero")
    n_max = ring.N // vmin
    weights = q_factorial_weights(ring.coerce(base), n_max)
    if isinstance(x, NCElement):
        out = x.alg.one()
        power = x.alg.one()
    else:
        out = TensorElement.unit(x.legs)
        power = TensorElement.unit(x.legs)
    for k in range(1, n_max + 1):
        power = power * x
        if not power:
            break
        out = out + power.scale(weights[k])
    return out


def parse(text: str, alg: Algebra):
    """Parse ``text`` into a normalized element of ``alg`` (or a tensor power)."""
    return _Parser(text, alg).parse()


def render(x) -> str:
    """Text in the grammar above; ``parse(render(x), alg) == x``."""
    return str(x)
