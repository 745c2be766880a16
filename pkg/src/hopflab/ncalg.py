"""Noncommutative polynomials with PBW-style normal forms.

An :class:`Algebra` is an ordered alphabet plus a table of two-letter
rewrite rules ``(x, y) -> rhs``.  A word is *normal* when no adjacent pair
is the left side of a rule.  Words are stored flat, as tuples of letter
indices; an invertible letter and its inverse are separate indices, so
``K^3`` is the tuple ``(k, k, k)``.

Straightening multiplies a normal word by one letter at a time, with the
results memoized per algebra, so repeated products reuse earlier work.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .coeffs import ExactRing, SeriesRing

__all__ = [
    "Letter",
    "Algebra",
    "NCElement",
    "TensorElement",
    "RewriteBudgetExceeded",
    "MixedAlgebraError",
    "normal_form",
    "confluence_probe",
    "ConfluenceReport",
]

DEFAULT_BUDGET = 10**6

Word = tuple  # tuple[int, ...]


class RewriteBudgetExceeded(RuntimeError):
    """Straightening did not terminate within the step budget."""


class MixedAlgebraError(TypeError):
    """Operands belong to different algebras."""


@dataclass(frozen=True)
class Letter:
    name: str
    inverse_of: str | None = None
    #: display stem and power, e.g. ("K", -1) for the inverse of K
    stem: str = ""
    power: int = 1


class Algebra:
    """An ordered alphabet with two-letter rewrite rules over a scalar ring.

    ``letters`` lists generator names in PBW order.  ``invertible`` lists
    names that get an inverse letter (named ``name^-1``), placed just
    before the letter itself.  Inverse cancellation rules are added
    automatically; other rules are registered with :meth:`add_rule`.
    """

    def __init__(
        self,
        name: str,
        ring,
        letters: Sequence[str],
        invertible: Iterable[str] = (),
        budget: int = DEFAULT_BUDGET,
    ):
        self.name = name
        self.ring = ring
        invertible = set(invertible)
        self.letters: list[Letter] = []
        for n in letters:
            if n in invertible:
                self.letters.append(Letter(f"{n}^-1", n, n, -1))
                self.letters.append(Letter(n, f"{n}^-1", n, 1))
            else:
                self.letters.append(Letter(n, None, n, 1))
        self.index = {l.name: i for i, l in enumerate(self.letters)}
        self.inverse: dict[int, int] = {}
        for i, l in enumerate(self.letters):
            if l.inverse_of is not None:
                self.inverse[i] = self.index[l.inverse_of]
        self.rules: dict[tuple[int, int], dict[Word, object]] = {}
        self.relations: list[tuple[str, str]] = []  # documentation strings
        self.budget = budget
        self._mul_letter_memo: dict = {}
        self._mul_word_memo: dict = {}
        self._active: set = set()
        self._steps = 0
        for i, j in self.inverse.items():
            self.rules[(i, j)] = {(): ring.one}
        self.frozen = False

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------
    def letter_index(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise KeyError(f"unknown letter {name!r} in {self.name}") from None

    def parse_word(self, text: str | Sequence[str]) -> Word:
        """Word from whitespace-separated letter names; ``K^-2`` style powers allowed."""
        if isinstance(text, str):
            tokens = text.split()
        else:
            tokens = list(text)
        out: list[int] = []
        for tok in tokens:
            if tok in self.index:
                out.append(self.index[tok])
                continue
            if "^" in tok:
                stem, _, p = tok.rpartition("^")
                p = int(p)
                if p < 0:
                    out.extend([self.letter_index(f"{stem}^-1")] * (-p))
                else:
                    out.extend([self.letter_index(stem)] * p)
                continue
            raise KeyError(f"unknown letter {tok!r} in {self.name}")
        return tuple(out)

    def add_rule(self, lhs: str, rhs, doc: str | None = None):
        """Register ``lhs -> rhs``; ``rhs`` is an element, a scalar, or a list
        of ``(coefficient, word-text)`` pairs."""
        w = self.parse_word(lhs)
        if len(w) != 2:
            raise ValueError(f"rule left side must have two letters: {lhs!r}")
        self.rules[w] = self._rhs_terms(rhs)
        self._invalidate()
        if doc:
            self.relations.append((lhs, doc))

    def _rhs_terms(self, rhs) -> dict[Word, object]:
        if isinstance(rhs, NCElement):
            if rhs.alg is not self:
                raise MixedAlgebraError("rule right side from another algebra")
            return dict(rhs.terms)
        if isinstance(rhs, (list, tuple)):
            out: dict[Word, object] = {}
            for c, wtext in rhs:
                w = self.parse_word(wtext)
                c = self.ring.coerce(c)
                out[w] = out[w] + c if w in out else c
            return {w: c for w, c in out.items() if c}
        c = self.ring.coerce(rhs)
        return {(): c} if c else {}

    def _invalidate(self):
        self._mul_letter_memo.clear()
        self._mul_word_memo.clear()

    # ------------------------------------------------------------------
    # elements
    # ------------------------------------------------------------------
    def zero(self) -> "NCElement":
        return NCElement(self, {})

    def one(self) -> "NCElement":
        return NCElement(self, {(): self.ring.one})

    def scalar(self, c) -> "NCElement":
        c = self.ring.coerce(c)
        return NCElement(self, {(): c} if c else {})

    def gen(self, name: str) -> "NCElement":
        """The generator (or inverse letter) called ``name``."""
        return NCElement(self, {(self.letter_index(name),): self.ring.one})

    def __getitem__(self, name: str) -> "NCElement":
        return self.gen(name)

    def word(self, text) -> "NCElement":
        """Normal form of the product of the letters in ``text``."""
        return NCElement(self, self.mul_words((), self.parse_word(text)))

    def raw(self, terms: Mapping[Word, object]) -> "NCElement":
        """Element from arbitrary words, straightened."""
        out: dict = {}
        for w, c in terms.items():
            c = self.ring.coerce(c)
            if not c:
                continue
            for v, d in self.mul_words((), tuple(w)).items():
                _acc(out, v, c * d)
        return NCElement(self, out)

    # ------------------------------------------------------------------
    # straightening
    # ------------------------------------------------------------------
    def is_normal(self, w: Word) -> bool:
        rules = self.rules
        return not any((w[k], w[k + 1]) in rules for k in range(len(w) - 1))

    def mul_letter(self, u: Word, x: int) -> dict[Word, object]:
        """Normal form of ``u * x`` for a normal word ``u``."""
        key = (u, x)
        memo = self._mul_letter_memo
        hit = memo.get(key)
        if hit is not None:
            return hit
        if not u or (u[-1], x) not in self.rules:
            res = {u + (x,): self.ring.one}
            memo[key] = res
            return res
        if key in self._active:
            raise RewriteBudgetExceeded(
                f"rewriting loops on {self.render_word(u + (x,))} in {self.name}"
            )
        self._active.add(key)
        try:
            self._steps += 1
            if self._steps > self.budget:
                raise RewriteBudgetExceeded(
                    f"more than {self.budget} rewrite steps in {self.name}"
                )
            rhs = self.rules[(u[-1], x)]
            prefix = u[:-1]
            res: dict = {}
            for w, c in rhs.items():
                for v, d in self.mul_words(prefix, w).items():
                    _acc(res, v, c * d)
        finally:
            self._active.discard(key)
        memo[key] = res
        return res

    def mul_words(self, u: Word, w: Word) -> dict[Word, object]:
        """Normal form of ``u * w`` where ``u`` is normal and ``w`` arbitrary."""
        if not w:
            return {u: self.ring.one}
        if len(w) == 1:
            return self.mul_letter(u, w[0])
        key = (u, w)
        memo = self._mul_word_memo
        hit = memo.get(key)
        if hit is not None:
            return hit
        cur = self.mul_letter(u, w[0])
        for x in w[1:]:
            nxt: dict = {}
            for v, c in cur.items():
                for v2, d in self.mul_letter(v, x).items():
                    _acc(nxt, v2, c * d)
            cur = nxt
        memo[key] = cur
        return cur

    def reset_budget(self):
        self._steps = 0

    # ------------------------------------------------------------------
    # bases and display
    # ------------------------------------------------------------------
    def normal_words(self, max_degree: int) -> list[Word]:
        """All normal words of length at most ``max_degree``."""
        out = [()]
        layer = [()]
        n = len(self.letters)
        for _ in range(max_degree):
            nxt = []
            for u in layer:
                for x in range(n):
                    if not u or (u[-1], x) not in self.rules:
                        nxt.append(u + (x,))
            out.extend(nxt)
            layer = nxt
        return out

    def render_word(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        for idx, grp in itertools.groupby(w):
            n = len(list(grp))
            l = self.letters[idx]
            p = l.power * n
            parts.append(l.stem if p == 1 else f"{l.stem}^{p}")
        return "*".join(parts)

    def __repr__(self):
        return f"Algebra({self.name}, {[l.name for l in self.letters]}, {self.ring!r})"


def _acc(d: dict, k, c):
    if k in d:
        v = d[k] + c
        if v:
            d[k] = v
        else:
            del d[k]
    elif c:
        d[k] = c


def _fmt_coeff(c) -> str:
    text = str(c)
    if any(ch in text[1:] for ch in "+-") or text.startswith("("):
        if not (text.startswith("(") and text.endswith(")") and text.count("(") == 1):
            return f"({text})"
    return text


def render_terms(terms: Sequence[tuple[str, object]]) -> str:
    """Join ``(word-text, coefficient)`` pairs as a sum in parser syntax."""
    if not terms:
        return "0"
    pieces = []
    for wtext, c in terms:
        ctext = _fmt_coeff(c)
        if wtext == "1":
            body = ctext
        elif ctext == "1":
            body = wtext
        elif ctext == "-1":
            body = "-" + wtext
        else:
            body = f"{ctext}*{wtext}"
        pieces.append(body)
    text = pieces[0]
    for p in pieces[1:]:
        text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return text


def _word_key(w: Word):
    return (len(w), w)


class NCElement:
    """A finite combination of normal words of one :class:`Algebra`."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms: dict):
        self.alg = alg
        self.terms = terms

    # -- helpers ------------------------------------------------------------
    def _same(self, other: "NCElement"):
        if other.alg is not self.alg:
            raise MixedAlgebraError(f"{self.alg.name} vs {other.alg.name}")

    def _lift(self, other):
        if isinstance(other, NCElement):
            self._same(other)
            return other
        if isinstance(other, TensorElement):
            return None
        try:
            return self.alg.scalar(other)
        except TypeError:
            return None

    def copy(self):
        return NCElement(self.alg, dict(self.terms))

    # -- predicates ---------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return not (self - o).terms

    __hash__ = None

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def coefficient(self, word) -> object:
        if isinstance(word, str):
            word = self.alg.parse_word(word)
        return self.terms.get(tuple(word), self.alg.ring.zero)

    def scalar_part(self):
        return self.coefficient(())

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self):
        return NCElement(self.alg, {w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in o.terms.items():
            _acc(out, w, c)
        return NCElement(self.alg, out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in o.terms.items():
            _acc(out, w, -c)
        return NCElement(self.alg, out)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c) -> "NCElement":
        c = self.alg.ring.coerce(c)
        if not c:
            return self.alg.zero()
        out = {}
        for w, d in self.terms.items():
            e = c * d
            if e:
                out[w] = e
        return NCElement(self.alg, out)

    def __mul__(self, other):
        if isinstance(other, NCElement):
            self._same(other)
            return self._mul(other)
        if isinstance(other, TensorElement):
            return NotImplemented
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, (NCElement, TensorElement)):
            return NotImplemented
        return self.scale(other)

    def _mul(self, other: "NCElement") -> "NCElement":
        alg = self.alg
        ring = alg.ring
        series = ring.is_series
        N = ring.N if series else 0
        out: dict = {}
        for u, c in self.terms.items():
            vc = c.valuation if series else 0
            for v, d in other.terms.items():
                if series and vc + d.valuation > N:
                    continue
                cd = c * d
                for w, e in alg.mul_words(u, v).items():
                    _acc(out, w, cd * e)
        return NCElement(alg, out)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of general elements are not supported")
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def commutator(self, other: "NCElement") -> "NCElement":
        return self * other - other * self

    def map_coefficients(self, f) -> "NCElement":
        out = {}
        for w, c in self.terms.items():
            d = f(c)
            if d:
                out[w] = d
        return NCElement(self.alg, out)

    # -- display ------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _word_key(kv[0]))

    def __str__(self):
        return render_terms([(self.alg.render_word(w), c) for w, c in self.sorted_terms()])

    def __repr__(self):
        return f"<{self.alg.name}: {self}>"


def normal_form(x: NCElement) -> NCElement:
    """Re-straighten every word of ``x`` (idempotent on public elements)."""
    return x.alg.raw(x.terms)


class TensorElement:
    """An element of ``P_1 (x) ... (x) P_n`` stored by tuples of normal words."""

    __slots__ = ("legs", "terms")

    def __init__(self, legs: Sequence[Algebra], terms: dict):
        self.legs = tuple(legs)
        self.terms = terms

    @property
    def ring(self):
        return self.legs[0].ring

    @classmethod
    def unit(cls, legs: Sequence[Algebra]) -> "TensorElement":
        legs = tuple(legs)
        return cls(legs, {tuple(() for _ in legs): legs[0].ring.one})

    @classmethod
    def zero(cls, legs: Sequence[Algebra]) -> "TensorElement":
        return cls(tuple(legs), {})

    @classmethod
    def pure(cls, *factors: NCElement) -> "TensorElement":
        """``f_1 (x) f_2 (x) ...`` for elements of the respective legs."""
        legs = tuple(f.alg for f in factors)
        terms: dict = {(): legs[0].ring.one}
        for f in factors:
            nxt: dict = {}
            for key, c in terms.items():
                for w, d in f.terms.items():
                    _acc(nxt, key + (w,), c * d)
            terms = nxt
        return cls(legs, terms)

    def _same(self, other: "TensorElement"):
        if len(other.legs) != len(self.legs) or any(
            a is not b for a, b in zip(self.legs, other.legs)
        ):
            raise MixedAlgebraError("tensor legs differ")

    def _lift(self, other):
        if isinstance(other, TensorElement):
            self._same(other)
            return other
        if isinstance(other, NCElement):
            return None
        try:
            c = self.ring.coerce(other)
        except TypeError:
            return None
        return TensorElement(self.legs, {tuple(() for _ in self.legs): c} if c else {})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return not (self - o).terms

    __hash__ = None

    def __neg__(self):
        return TensorElement(self.legs, {k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            _acc(out, k, c)
        return TensorElement(self.legs, out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            _acc(out, k, -c)
        return TensorElement(self.legs, out)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c) -> "TensorElement":
        c = self.ring.coerce(c)
        out = {}
        for k, d in self.terms.items():
            e = c * d
            if e:
                out[k] = e
        return TensorElement(self.legs, out)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            self._same(other)
            return self._mul(other)
        if isinstance(other, NCElement):
            return NotImplemented
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, (TensorElement, NCElement)):
            return NotImplemented
        return self.scale(other)

    def _mul(self, other: "TensorElement") -> "TensorElement":
        ring = self.ring
        series = ring.is_series
        N = ring.N if series else 0
        legs = self.legs
        out: dict = {}
        for k1, c in self.terms.items():
            vc = c.valuation if series else 0
            for k2, d in other.terms.items():
                if series and vc + d.valuation > N:
                    continue
                parts = [(((), c * d),)]
                partial: list = [((), c * d)]
                for alg, u, v in zip(legs, k1, k2):
                    prod = alg.mul_words(u, v)
                    nxt = []
                    for key, e in partial:
                        ve = e.valuation if series else 0
                        for w, f in prod.items():
                            if series and ve + f.valuation > N:
                                continue
                            g = e * f
                            if g:
                                nxt.append((key + (w,), g))
                    partial = nxt
                    if not partial:
                        break
                del parts
                for key, g in partial:
                    _acc(out, key, g)
        return TensorElement(legs, out)

    def __pow__(self, n: int):
        out = TensorElement.unit(self.legs)
        for _ in range(n):
            out = out * self
        return out

    # -- leg manipulation ---------------------------------------------------
    def permute(self, perm: Sequence[int]) -> "TensorElement":
        """New element whose leg ``i`` is old leg ``perm[i]``."""
        legs = tuple(self.legs[p] for p in perm)
        return TensorElement(
            legs, {tuple(k[p] for p in perm): c for k, c in self.terms.items()}
        )

    def flip(self) -> "TensorElement":
        if len(self.legs) != 2:
            raise ValueError("flip needs two legs")
        return self.permute((1, 0))

    def embed(self, positions: Sequence[int], legs: Sequence[Algebra]) -> "TensorElement":
        """Place leg ``i`` at ``positions[i]`` of a tensor with ``legs``;
        other positions get the unit."""
        legs = tuple(legs)
        for i, p in enumerate(positions):
            if legs[p] is not self.legs[i]:
                raise MixedAlgebraError(f"leg {i} does not match position {p}")
        out = {}
        empty = [() for _ in legs]
        for k, c in self.terms.items():
            key = list(empty)
            for i, p in enumerate(positions):
                key[p] = k[i]
            out[tuple(key)] = c
        return TensorElement(legs, out)

    def map_legs(self, maps: Sequence) -> "TensorElement":
        """Apply a linear map on words to each leg.

        ``maps[i]`` is ``None`` (identity) or a callable taking a normal
        word and returning an :class:`NCElement` or :class:`TensorElement`;
        tensor-valued maps splice their legs in place.
        """
        new_legs: list | None = None
        out: dict = {}
        ring = self.ring
        series = ring.is_series
        N = ring.N if series else 0
        for k, c in self.terms.items():
            partial = [((), c)]
            legs_here = []
            for i, w in enumerate(k):
                f = maps[i]
                if f is None:
                    legs_here.append(self.legs[i])
                    partial = [(key + (w,), e) for key, e in partial]
                    continue
                img = f(w)
                if isinstance(img, NCElement):
                    legs_here.append(img.alg)
                    items = [((v,), d) for v, d in img.terms.items()]
                else:
                    legs_here.extend(img.legs)
                    items = list(img.terms.items())
                nxt = []
                for key, e in partial:
                    ve = e.valuation if series else 0
                    for kk, d in items:
                        if series and ve + d.valuation > N:
                            continue
                        g = e * d
                        if g:
                            nxt.append((key + tuple(kk), g))
                partial = nxt
            if new_legs is None:
                new_legs = legs_here
            for key, g in partial:
                _acc(out, key, g)
        if new_legs is None:
            new_legs = self._image_legs(maps)
        return TensorElement(new_legs, out)

    def _image_legs(self, maps):
        legs = []
        for i, alg in enumerate(self.legs):
            f = maps[i]
            if f is None:
                legs.append(alg)
            else:
                img = f(())
                legs.extend([img.alg] if isinstance(img, NCElement) else img.legs)
        return legs

    def contract(self, leg: int, functional) -> "TensorElement | NCElement":
        """Apply a scalar-valued functional on words to one leg."""
        out: dict = {}
        for k, c in self.terms.items():
            v = functional(k[leg])
            if v:
                _acc(out, k[:leg] + k[leg + 1 :], c * v)
        legs = self.legs[:leg] + self.legs[leg + 1 :]
        if len(legs) == 1:
            return NCElement(legs[0], {k[0]: c for k, c in out.items()})
        return TensorElement(legs, out)

    def truncate(self, valuation_limit: int) -> "TensorElement":
        """Drop terms whose coefficient valuation exceeds the limit."""
        return TensorElement(
            self.legs,
            {k: c for k, c in self.terms.items() if c.valuation <= valuation_limit},
        )

    def map_coefficients(self, f) -> "TensorElement":
        out = {}
        for k, c in self.terms.items():
            d = f(c)
            if d:
                out[k] = d
        return TensorElement(self.legs, out)

    # -- display ------------------------------------------------------------
    def sorted_terms(self):
        return sorted(
            self.terms.items(), key=lambda kv: tuple(_word_key(w) for w in kv[0])
        )

    def __str__(self):
        items = []
        for k, c in self.sorted_terms():
            text = "tensor(" + ", ".join(
                alg.render_word(w) for alg, w in zip(self.legs, k)
            ) + ")"
            items.append((text, c))
        return render_terms(items)

    def __repr__(self):
        return f"<{'⊗'.join(a.name for a in self.legs)}: {self}>"


# ---------------------------------------------------------------------------
# Confluence probing
# ---------------------------------------------------------------------------


@dataclass
class ConfluenceReport:
    algebra: str
    probed: int
    failures: list  # (word-text, left-first, right-first)

    @property
    def ok(self) -> bool:
        return not self.failures


def _reduce_once(alg: Algebra, w: Word, pos: int) -> dict:
    """Apply the rule at position ``pos`` of ``w`` once, then straighten."""
    rhs = alg.rules[(w[pos], w[pos + 1])]
    prefix, suffix = w[:pos], w[pos + 2 :]
    out: dict = {}
    for mid, c in rhs.items():
        for v, d in alg.mul_words((), prefix + mid + suffix).items():
            _acc(out, v, c * d)
    return out


def confluence_probe(alg: Algebra, max_degree: int = 3) -> ConfluenceReport:
    """Check every overlap ``xyz`` where both ``xy`` and ``yz`` are rule sides.

    Both one-step reductions are straightened and compared; by the diamond
    lemma the rule set is confluent when all overlaps resolve.  The
    ``max_degree`` bound is accepted for interface symmetry; overlaps of two
    two-letter rules always have length three.
    """
    del max_degree
    n = len(alg.letters)
    failures = []
    probed = 0
    for x in range(n):
        for y in range(n):
            if (x, y) not in alg.rules:
                continue
            for z in range(n):
                if (y, z) not in alg.rules:
                    continue
                probed += 1
                w = (x, y, z)
                left = _reduce_once(alg, w, 0)
                right = _reduce_once(alg, w, 1)
                diff = dict(left)
                for k, c in right.items():
                    _acc(diff, k, -c)
                if diff:
                    failures.append(
                        (
                            alg.render_word(w),
                            str(NCElement(alg, left)),
                            str(NCElement(alg, right)),
                        )
                    )
    return ConfluenceReport(alg.name, probed, failures)


# ---------------------------------------------------------------------------
# Orienting linear relation systems into rewrite rules
# ---------------------------------------------------------------------------


class OrientationError(ValueError):
    """A relation system cannot be solved for the requested words."""


def _is_unit(ring, c) -> bool:
    if ring.is_series:
        return bool(c.coeffs[0])
    return bool(c)


def orient_relations(ring, relations: Sequence[dict], unknowns: Sequence[Word]) -> dict[Word, dict]:
    """Solve ``sum_j M_ij u_j + rest_i = 0`` for the words ``u_j``.

    ``relations`` are term dicts (word -> coefficient) each asserted to vanish;
    every word listed in ``unknowns`` is eliminated and expressed through the
    remaining words.  Returns ``{unknown_word: {word: coeff}}``.
    """
    unknowns = list(unknowns)
    pos = {u: j for j, u in enumerate(unknowns)}
    rows = []
    for rel in relations:
        vec = [ring.zero] * len(unknowns)
        rest: dict = {}
        for w, c in rel.items():
            if w in pos:
                vec[pos[w]] = vec[pos[w]] + c
            else:
                _acc(rest, w, c)
        rows.append((vec, rest))
    n = len(unknowns)
    pivots: list[int] = []
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, len(rows)):
            if _is_unit(ring, rows[i][0][col]):
                piv = i
                break
        if piv is None:
            raise OrientationError(f"relations do not determine unknown #{col}")
        rows[r], rows[piv] = rows[piv], rows[r]
        vec, rest = rows[r]
        inv = 1 / vec[col] if not hasattr(vec[col], "inverse") else vec[col].inverse()
        vec = [v * inv for v in vec]
        rest = {w: c * inv for w, c in rest.items()}
        rows[r] = (vec, rest)
        for i in range(len(rows)):
            if i == r:
                continue
            f = rows[i][0][col]
            if not f:
                continue
            v2 = [a - f * b for a, b in zip(rows[i][0], vec)]
            rest2 = dict(rows[i][1])
            for w, c in rest.items():
                _acc(rest2, w, -(f * c))
            rows[i] = (v2, rest2)
        pivots.append(col)
        r += 1
    for vec, rest in rows[r:]:
        if rest:
            raise OrientationError("relation system is inconsistent")
    out = {}
    for i, col in enumerate(pivots):
        out[unknowns[col]] = {w: -c for w, c in rows[i][1].items() if c}
    return out
