"""Exact scalar arithmetic used throughout the package.

Three coefficient types live here:

* :class:`GaussianRational` -- numbers ``re + I*im`` with rational parts.
* :class:`RationalFunction` -- quotients of polynomials in ``s`` (with
  ``q = s**2``) and ``lam`` over the Gaussian rationals.  The imaginary unit
  is carried as a separate real/imaginary numerator pair over a common real
  denominator, so inverses go through the complex conjugate.
* :class:`TruncSeries` -- power series in ``t`` or ``lam`` truncated at a
  fixed order, used by the t-adic and lambda-adic evaluation modes.

A *ring* object (:class:`ExactRing`, :class:`SeriesRing`) bundles the
constants a model needs (``q**c``, ``mu``, ``lam``, ``I``) for one mode so
that presentation builders can be written once and instantiated per mode.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import flint
import gmpy2
from gmpy2 import mpq

__all__ = [
    "SeriesValuationError",
    "GaussianRational",
    "RationalFunction",
    "TruncSeries",
    "expand_q",
    "exp_series",
    "ExactRing",
    "SeriesRing",
    "to_mpq",
]


class SeriesValuationError(ArithmeticError):
    """Raised when a truncated series would need a negative power."""


_RATIONAL_TYPES = (int, Fraction, type(mpq(0)))


def to_mpq(x) -> mpq:
    if isinstance(x, type(mpq(0))):
        return x
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, flint.fmpq):
        return mpq(int(x.p), int(x.q))
    raise TypeError(f"not a rational: {x!r}")


def _fmt_rational(x: mpq) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------


class GaussianRational:
    """An element ``re + I*im`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = to_mpq(re)
        self.im = to_mpq(im)

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, _RATIONAL_TYPES):
            return GaussianRational(x)
        return None

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_zero(self):
        return not self

    def is_real(self):
        return not self.im

    def __eq__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        base = self if n >= 0 else self.inverse()
        out = GaussianRational(1)
        for _ in range(abs(n)):
            out = out * base
        return out

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if not self.im:
            return _fmt_rational(self.re)
        im = "I" if self.im == 1 else f"{_fmt_rational(self.im)}*I"
        if not self.re:
            return im if self.im != -1 else "-I"
        sign = "-" if self.im < 0 else "+"
        mag = abs(self.im)
        im = "I" if mag == 1 else f"{_fmt_rational(mag)}*I"
        return f"({_fmt_rational(self.re)} {sign} {im})"


# ---------------------------------------------------------------------------
# Rational functions in s and lam over Q(i)
# ---------------------------------------------------------------------------

_CTX = flint.fmpq_mpoly_ctx.get(("s", "lam"), "degrevlex")
_S, _LAM = _CTX.gens()
_ZERO_P = _CTX.constant(0)
_ONE_P = _CTX.constant(1)


def _poly_const(x) -> flint.fmpq_mpoly:
    x = to_mpq(x)
    return _CTX.constant(flint.fmpq(int(x.numerator), int(x.denominator)))


class RationalFunction:
    """A canonical quotient ``(re + I*im) / den`` of polynomials in s, lam.

    Invariants: ``den`` is real and has leading coefficient one, and the
    three polynomials share no common factor.  Equal values therefore have
    identical representations.
    """

    __slots__ = ("re", "im", "den", "_hash")

    def __init__(self, re, im=None, den=None, *, _canonical=False):
        if not isinstance(re, flint.fmpq_mpoly):
            re = _poly_const(re)
        if im is None:
            im = _ZERO_P
        elif not isinstance(im, flint.fmpq_mpoly):
            im = _poly_const(im)
        if den is None:
            den = _ONE_P
        elif not isinstance(den, flint.fmpq_mpoly):
            den = _poly_const(den)
        if not _canonical:
            re, im, den = _canonicalize(re, im, den)
        self.re = re
        self.im = im
        self.den = den
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, GaussianRational):
            return cls(_poly_const(x.re), _poly_const(x.im), _ONE_P, _canonical=True)
        return cls(_poly_const(x), _ZERO_P, _ONE_P, _canonical=True)

    @classmethod
    def s(cls) -> "RationalFunction":
        return cls(_S, _ZERO_P, _ONE_P, _canonical=True)

    @classmethod
    def lam(cls) -> "RationalFunction":
        return cls(_LAM, _ZERO_P, _ONE_P, _canonical=True)

    @classmethod
    def imag_unit(cls) -> "RationalFunction":
        return cls(_ZERO_P, _ONE_P, _ONE_P, _canonical=True)

    @classmethod
    def q_power(cls, c) -> "RationalFunction":
        """``q**c`` for ``c`` in (1/2)Z, i.e. ``s**(2c)``."""
        e = Fraction(c) * 2
        if e.denominator != 1:
            raise ValueError(f"q power {c} is not a half-integer")
        n = int(e)
        if n >= 0:
            return cls(_S**n, _ZERO_P, _ONE_P, _canonical=True)
        return cls(_ONE_P, _ZERO_P, _S ** (-n), _canonical=True)

    @staticmethod
    def _coerce(x):
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (GaussianRational,) + _RATIONAL_TYPES):
            return RationalFunction.const(x)
        return None

    # -- predicates ---------------------------------------------------------
    def __bool__(self):
        return not (self.re.is_zero() and self.im.is_zero())

    def is_zero(self):
        return not self

    def is_real(self):
        return self.im.is_zero()

    def is_constant(self):
        return self.den.is_one() and self.re.is_constant() and self.im.is_constant()

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return GaussianRational(to_mpq(_const_of(self.re)), to_mpq(_const_of(self.im)))

    def __eq__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (
                    tuple(self.re.to_dict().items()),
                    tuple(self.im.to_dict().items()),
                    tuple(self.den.to_dict().items()),
                )
            )
        return self._hash

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self):
        return RationalFunction(-self.re, -self.im, self.den, _canonical=True)

    def __add__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            return self
        if not self:
            return o
        if self.den == o.den:
            return RationalFunction(self.re + o.re, self.im + o.im, self.den)
        if self.den.is_one():
            d = o.den
            return RationalFunction(self.re * d + o.re, self.im * d + o.im, d)
        if o.den.is_one():
            d = self.den
            return RationalFunction(self.re + o.re * d, self.im + o.im * d, d)
        g = self.den.gcd(o.den)
        a = o.den / g
        b = self.den / g
        return RationalFunction(
            self.re * a + o.re * b, self.im * a + o.im * b, self.den * a
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        if not self or not o:
            return _RF_ZERO
        if self.im.is_zero() and o.im.is_zero():
            re = self.re * o.re
            im = _ZERO_P
        else:
            re = self.re * o.re - self.im * o.im
            im = self.re * o.im + self.im * o.re
        if self.den.is_one() and o.den.is_one():
            return RationalFunction(re, im, _ONE_P, _canonical=True)
        return RationalFunction(re, im, self.den * o.den)

    __rmul__ = __mul__

    def conjugate(self):
        return RationalFunction(self.re, -self.im, self.den, _canonical=True)

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero rational function")
        if self.im.is_zero():
            return RationalFunction(self.den, _ZERO_P, self.re)
        norm = self.re * self.re + self.im * self.im
        return RationalFunction(self.re * self.den, -self.im * self.den, norm)

    def __truediv__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = RationalFunction._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self.im.is_zero():
            return RationalFunction(self.re**n, _ZERO_P, self.den**n, _canonical=True)
        out = _RF_ONE
        for _ in range(n):
            out = out * self
        return out

    # -- evaluation ---------------------------------------------------------
    def evaluate(self, s=None, lam=None) -> "RationalFunction":
        """Substitute rational values for ``s`` and/or ``lam``."""
        vals = {}
        if s is not None:
            vals["s"] = flint.fmpq(*_frac_pair(s))
        if lam is not None:
            vals["lam"] = flint.fmpq(*_frac_pair(lam))
        if not vals:
            return self
        den = self.den.subs(vals)
        if den.is_zero():
            raise ZeroDivisionError(f"pole of {self} at {vals}")
        return RationalFunction(self.re.subs(vals), self.im.subs(vals), den)

    def numerator_terms(self):
        """Yield ``(s_exp, lam_exp, GaussianRational)`` for the numerator."""
        out = {}
        for (es, el), c in self.re.to_dict().items():
            out[(es, el)] = GaussianRational(to_mpq(c))
        for (es, el), c in self.im.to_dict().items():
            g = out.get((es, el), GaussianRational(0))
            out[(es, el)] = g + GaussianRational(0, to_mpq(c))
        return sorted(out.items())

    def denominator_terms(self):
        return sorted(
            ((es, el), to_mpq(c)) for (es, el), c in self.den.to_dict().items()
        )

    # -- display ------------------------------------------------------------
    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        return render_rational_function(self)


def _const_of(p: flint.fmpq_mpoly):
    if p.is_zero():
        return 0
    d = p.to_dict()
    return d.get((0, 0), 0)


def _frac_pair(x):
    x = to_mpq(x)
    return int(x.numerator), int(x.denominator)


def _canonicalize(re, im, den):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if re.is_zero() and im.is_zero():
        return _ZERO_P, _ZERO_P, _ONE_P
    if not den.is_constant():
        g = den.gcd(re)
        if not im.is_zero():
            g = g.gcd(im)
        if not g.is_one():
            re = re / g
            if not im.is_zero():
                im = im / g
            den = den / g
    lc = den.leading_coefficient()
    if lc != 1:
        inv = 1 / lc
        re = re * inv
        im = im * inv
        den = den * inv
    return re, im, den


_RF_ZERO = RationalFunction(_ZERO_P, _ZERO_P, _ONE_P, _canonical=True)
_RF_ONE = RationalFunction(_ONE_P, _ZERO_P, _ONE_P, _canonical=True)


def _mono(es: int, el: int) -> str:
    parts = []
    if es:
        parts.append("s" if es == 1 else f"s^{es}")
    if el:
        parts.append("lam" if el == 1 else f"lam^{el}")
    return "*".join(parts)


def _poly_terms(p: flint.fmpq_mpoly, shift=(0, 0)) -> list[tuple[mpq, str]]:
    """Terms of a real polynomial as (coefficient, monomial text)."""
    items = sorted(p.to_dict().items(), key=lambda kv: (-kv[0][1], -kv[0][0]))
    return [(to_mpq(c), _mono(es - shift[0], el - shift[1])) for (es, el), c in items]


def _join_terms(terms: list[tuple[mpq, str]], unit: str = "") -> str:
    pieces = []
    for c, mono in terms:
        mono = "*".join(x for x in (mono, unit) if x)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{_fmt_rational(mag)}*{mono}"
        else:
            body = _fmt_rational(mag)
        pieces.append(("-" if c < 0 else "+", body))
    if not pieces:
        return "0"
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def render_rational_function(x: RationalFunction) -> str:
    """Render in the expression syntax accepted by the parser."""
    shift = (0, 0)
    den_terms = list(x.den.to_dict().items())
    monomial_den = len(den_terms) == 1
    if monomial_den:
        shift = den_terms[0][0]
    re_text = _join_terms(_poly_terms(x.re, shift)) if not x.re.is_zero() else ""
    im_text = _join_terms(_poly_terms(x.im, shift), "I") if not x.im.is_zero() else ""
    if re_text and im_text:
        num = f"{re_text} - {im_text[1:]}" if im_text.startswith("-") else f"{re_text} + {im_text}"
    else:
        num = re_text or im_text or "0"
    if monomial_den:
        return num
    return f"({num})*({_join_terms(_poly_terms(x.den))})^-1"


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


def _coerce_coeff(x):
    if isinstance(x, GaussianRational):
        return x.re if not x.im else x
    return to_mpq(x)


class TruncSeries:
    """A power series ``sum_k c_k var**k`` known modulo ``var**(prec+1)``.

    Coefficients are rationals (``mpq``) or :class:`GaussianRational`.
    Arithmetic between series of different precision keeps the smaller one.
    """

    __slots__ = ("var", "coeffs", "prec")

    def __init__(self, var: str, coeffs: Sequence, prec: int):
        self.var = var
        self.prec = prec
        cs = [_coerce_coeff(c) for c in coeffs[: prec + 1]]
        cs.extend([mpq(0)] * (prec + 1 - len(cs)))
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, var, coeffs, prec):
        obj = cls.__new__(cls)
        obj.var = var
        obj.coeffs = coeffs
        obj.prec = prec
        return obj

    @classmethod
    def const(cls, var: str, c, prec: int) -> "TruncSeries":
        return cls(var, [c], prec)

    @classmethod
    def gen(cls, var: str, prec: int) -> "TruncSeries":
        return cls(var, [0, 1], prec)

    @property
    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.prec + 1

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self):
        return not self

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            if other.var != self.var:
                raise ValueError(f"mixing series in {self.var} and {other.var}")
            return other
        if isinstance(other, (GaussianRational,) + _RATIONAL_TYPES):
            return TruncSeries(self.var, [other], self.prec)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.prec, o.prec) + 1
        return self.coeffs[:n] == o.coeffs[:n]

    __hash__ = None

    def __neg__(self):
        return TruncSeries._raw(self.var, tuple(-c for c in self.coeffs), self.prec)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = min(self.prec, o.prec)
        a, b = self.coeffs, o.coeffs
        return TruncSeries._raw(self.var, tuple(a[k] + b[k] for k in range(p + 1)), p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = min(self.prec, o.prec)
        a, b = self.coeffs, o.coeffs
        return TruncSeries._raw(self.var, tuple(a[k] - b[k] for k in range(p + 1)), p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = min(self.prec, o.prec)
        a, b = self.coeffs, o.coeffs
        va, vb = self.valuation, o.valuation
        zero = mpq(0)
        out = [zero] * (p + 1)
        for i in range(va, p + 1 - vb):
            ai = a[i]
            if not ai:
                continue
            for j in range(vb, p + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return TruncSeries._raw(self.var, tuple(out), p)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        a = self.coeffs
        if not a[0]:
            raise SeriesValuationError(
                f"series {self} has zero constant term and cannot be inverted"
            )
        inv0 = 1 / a[0] if not isinstance(a[0], GaussianRational) else a[0].inverse()
        out = [inv0]
        for n in range(1, self.prec + 1):
            acc = mpq(0)
            for k in range(1, n + 1):
                if a[k]:
                    acc = acc + a[k] * out[n - k]
            out.append(-(acc * inv0))
        return TruncSeries._raw(self.var, tuple(out), self.prec)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        v = o.valuation
        if v > o.prec:
            raise ZeroDivisionError("division by a zero series")
        if v == 0:
            return self * o.inverse()
        if self.valuation < v:
            raise SeriesValuationError(
                f"valuation of {self} is below {v}; quotient would not be a power series"
            )
        p = min(self.prec, o.prec) - v
        num = TruncSeries._raw(self.var, self.coeffs[v : v + p + 1], p)
        den = TruncSeries._raw(self.var, o.coeffs[v : v + p + 1], p)
        return num * den.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = TruncSeries(self.var, [1], self.prec)
        for _ in range(n):
            out = out * self
        return out

    def truncate(self, prec: int) -> "TruncSeries":
        if prec > self.prec:
            raise SeriesValuationError(
                f"cannot raise precision of a series from {self.prec} to {prec}"
            )
        return TruncSeries._raw(self.var, self.coeffs[: prec + 1], prec)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by ``var**k`` (k >= 0), keeping the precision."""
        zero = mpq(0)
        cs = (zero,) * k + self.coeffs[: self.prec + 1 - k]
        return TruncSeries._raw(self.var, cs, self.prec)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __repr__(self):
        return f"TruncSeries({self}, prec={self.prec})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            parts.append((c, mono))
        if not parts:
            return "0"
        out = []
        for c, mono in parts:
            if isinstance(c, GaussianRational):
                body = f"{c}*{mono}" if mono else str(c)
                out.append(("+", body))
                continue
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{_fmt_rational(mag)}*{mono}"
            else:
                body = _fmt_rational(mag)
            out.append(("-" if c < 0 else "+", body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


@lru_cache(maxsize=None)
def _exp_coeffs(rate: mpq, prec: int) -> tuple:
    out = [mpq(1)]
    term = mpq(1)
    for k in range(1, prec + 1):
        term = term * rate / k
        out.append(term)
    return tuple(out)


def exp_series(rate, var: str, prec: int) -> TruncSeries:
    """``exp(rate * var)`` truncated at ``var**prec``."""
    return TruncSeries._raw(var, _exp_coeffs(to_mpq(rate), prec), prec)


def expand_q(c, kappa=Fraction(1, 2), N: int = 4, var: str = "t") -> TruncSeries:
    """Truncation of ``q**c`` with ``q = exp(kappa * var)``."""
    return exp_series(to_mpq(Fraction(c)) * to_mpq(Fraction(kappa)), var, N)


# ---------------------------------------------------------------------------
# Scalar rings (one per evaluation mode)
# ---------------------------------------------------------------------------


class ExactRing:
    """Rational functions in s and lam; ``q = s**2`` unless ``classical``."""

    is_series = False

    def __init__(self, classical: bool = False):
        self.classical = classical
        self.zero = _RF_ZERO
        self.one = _RF_ONE

    @property
    def name(self):
        return "exact-lambda" if self.classical else "exact-q"

    def coerce(self, x):
        if isinstance(x, RationalFunction):
            return x
        return RationalFunction.const(x)

    def q(self, c=1):
        if self.classical:
            return _RF_ONE
        return RationalFunction.q_power(c)

    @property
    def s(self):
        return RationalFunction.s()

    @property
    def mu(self):
        return self.one - self.q(-2)

    @property
    def lam(self):
        return RationalFunction.lam()

    @property
    def I(self):
        return RationalFunction.imag_unit()

    def valuation(self, x) -> int:
        return 0

    def __eq__(self, other):
        return isinstance(other, ExactRing) and other.classical == self.classical

    def __hash__(self):
        return hash(("exact", self.classical))

    def __repr__(self):
        return f"ExactRing({self.name})"


class SeriesRing:
    """Truncated series in ``var`` (``'t'`` or ``'lam'``) to order ``N``.

    In the t-adic ring ``q = exp(kappa * t)``; in the lambda-adic ring the
    deformation parameter of the model is ``lam`` and ``q = 1``.
    """

    is_series = True

    def __init__(self, var: str = "t", N: int = 4, kappa=Fraction(1, 2)):
        if var not in ("t", "lam"):
            raise ValueError(f"unknown series variable {var!r}")
        self.var = var
        self.N = N
        self.kappa = Fraction(kappa)
        self.zero = TruncSeries.const(var, 0, N)
        self.one = TruncSeries.const(var, 1, N)

    @property
    def name(self):
        return "t-adic" if self.var == "t" else "lambda-adic"

    def coerce(self, x):
        if isinstance(x, TruncSeries):
            if x.prec > self.N:
                return x.truncate(self.N)
            if x.prec < self.N:
                raise SeriesValuationError(
                    f"series known only to order {x.prec}, ring needs {self.N}"
                )
            return x
        return TruncSeries.const(self.var, x, self.N)

    def q(self, c=1):
        if self.var == "lam":
            return self.one
        return expand_q(c, self.kappa, self.N, "t")

    @property
    def s(self):
        return self.q(Fraction(1, 2))

    @property
    def mu(self):
        return self.one - self.q(-2)

    @property
    def gen(self):
        return TruncSeries.gen(self.var, self.N)

    @property
    def lam(self):
        if self.var != "lam":
            raise ValueError("lam is not the series variable of this ring")
        return self.gen

    @property
    def I(self):
        return TruncSeries.const(self.var, GaussianRational(0, 1), self.N)

    def exp(self, rate):
        return exp_series(rate, self.var, self.N)

    def valuation(self, x) -> int:
        return x.valuation

    def __eq__(self, other):
        return (
            isinstance(other, SeriesRing)
            and (other.var, other.N, other.kappa) == (self.var, self.N, self.kappa)
        )

    def __hash__(self):
        return hash(("series", self.var, self.N, self.kappa))

    def __repr__(self):
        return f"SeriesRing({self.name}, N={self.N})"
