"""Hopf structure on presentations: coproduct, counit, antipode, star,
dual pairings, covariant actions, and the verifiers for their axioms.

Structure maps are given on letters and extended to words by
(anti-)multiplicativity with per-word memoization.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .ncalg import Algebra, NCElement, TensorElement, MixedAlgebraError, _acc
from .report import Report

__all__ = [
    "HopfAlgebra",
    "AntipodeUndefined",
    "AntipodeNotInvertible",
    "UnregisteredPair",
    "UnregisteredLetter",
    "PairingTable",
    "ActionTable",
    "opposite_algebra",
    "verify_hopf_axioms",
    "verify_pairing",
    "verify_module_algebra",
    "verify_star",
    "flip_action",
    "tensor_power_legs",
    "apply_coproduct_leg",
    "multiply_legs",
]


class AntipodeUndefined(KeyError):
    pass


class AntipodeNotInvertible(KeyError):
    pass


class UnregisteredPair(KeyError):
    pass


class UnregisteredLetter(KeyError):
    pass


class HopfAlgebra(Algebra):
    """An :class:`Algebra` with coproduct, counit, antipode (and optional star)
    on letters."""

    def __init__(self, name, ring, letters, invertible=(), **kw):
        super().__init__(name, ring, letters, invertible, **kw)
        self.delta_gen: dict[int, dict] = {}
        self.eps_gen: dict[int, object] = {}
        self.S_gen: dict[int, dict] = {}
        self.Sinv_gen: dict[int, dict] = {}
        self.star_gen: dict[int, dict] = {}
        self._delta_memo: dict = {}
        self._S_memo: dict = {}
        self._Sinv_memo: dict = {}
        self._star_memo: dict = {}
        self.mode = ring.name

    # ------------------------------------------------------------------
    # registration
    # ------------------------------------------------------------------
    def _idx(self, name):
        return self.letter_index(name) if isinstance(name, str) else name

    def set_coproduct(self, name, value: TensorElement):
        if value.legs != (self, self):
            raise MixedAlgebraError("coproduct must live in P (x) P")
        self.delta_gen[self._idx(name)] = dict(value.terms)
        self._delta_memo.clear()

    def set_counit(self, name, value):
        self.eps_gen[self._idx(name)] = self.ring.coerce(value)

    def set_antipode(self, name, value: NCElement):
        self.S_gen[self._idx(name)] = dict(self._as_elem(value).terms)
        self._S_memo.clear()

    def set_antipode_inverse(self, name, value: NCElement):
        self.Sinv_gen[self._idx(name)] = dict(self._as_elem(value).terms)
        self._Sinv_memo.clear()

    def set_star(self, name, value: NCElement):
        self.star_gen[self._idx(name)] = dict(self._as_elem(value).terms)
        self._star_memo.clear()

    def _as_elem(self, value):
        if isinstance(value, NCElement):
            if value.alg is not self:
                raise MixedAlgebraError("structure map value from another algebra")
            return value
        return self.scalar(value)

    def set_group_like(self, name):
        """Declare ``name`` (and its inverse letter, if any) group-like."""
        i = self._idx(name)
        g = self.gen(self.letters[i].name)
        self.set_coproduct(i, TensorElement.pure(g, g))
        self.set_counit(i, 1)
        if i in self.inverse:
            j = self.inverse[i]
            gi = self.gen(self.letters[j].name)
            self.set_coproduct(j, TensorElement.pure(gi, gi))
            self.set_counit(j, 1)
            self.set_antipode(i, gi)
            self.set_antipode(j, g)
            self.set_antipode_inverse(i, gi)
            self.set_antipode_inverse(j, g)
        else:
            self.set_antipode(i, g)

    def set_primitive(self, name):
        i = self._idx(name)
        x = self.gen(self.letters[i].name)
        one = self.one()
        self.set_coproduct(i, TensorElement.pure(x, one) + TensorElement.pure(one, x))
        self.set_counit(i, 0)
        self.set_antipode(i, -x)
        self.set_antipode_inverse(i, -x)

    def complete_inverse_tables(self):
        """Derive the antipode inverse on letters where S maps a letter to a
        multiple of a single letter (so inversion is a table lookup)."""
        for i, img in self.S_gen.items():
            if len(img) != 1:
                continue
            (w, c), = img.items()
            if len(w) == 1 and w[0] not in self.Sinv_gen:
                self.Sinv_gen[w[0]] = {(i,): 1 / c if not hasattr(c, "inverse") else c.inverse()}
        self._Sinv_memo.clear()

    # ------------------------------------------------------------------
    # extension to words
    # ------------------------------------------------------------------
    def coproduct_word(self, w) -> dict:
        memo = self._delta_memo
        hit = memo.get(w)
        if hit is not None:
            return hit
        if not w:
            res = {((), ()): self.ring.one}
        elif len(w) == 1:
            try:
                res = self.delta_gen[w[0]]
            except KeyError:
                raise KeyError(
                    f"no coproduct for {self.letters[w[0]].name} in {self.name}"
                ) from None
        else:
            left = TensorElement((self, self), self.coproduct_word(w[:-1]))
            right = TensorElement((self, self), self.coproduct_word(w[-1:]))
            res = (left * right).terms
        memo[w] = res
        return res

    def coproduct(self, x: NCElement) -> TensorElement:
        self._check(x)
        out: dict = {}
        for w, c in x.terms.items():
            for k, d in self.coproduct_word(w).items():
                _acc(out, k, c * d)
        return TensorElement((self, self), out)

    def counit_word(self, w):
        out = self.ring.one
        for x in w:
            try:
                e = self.eps_gen[x]
            except KeyError:
                raise KeyError(f"no counit for {self.letters[x].name}") from None
            if not e:
                return self.ring.zero
            out = out * e
        return out

    def counit(self, x: NCElement):
        self._check(x)
        out = self.ring.zero
        for w, c in x.terms.items():
            e = self.counit_word(w)
            if e:
                out = out + c * e
        return out

    def _anti(self, w, table, memo, what):
        hit = memo.get(w)
        if hit is not None:
            return hit
        if not w:
            res = {(): self.ring.one}
        elif len(w) == 1:
            try:
                res = table[w[0]]
            except KeyError:
                exc = AntipodeUndefined if what == "antipode" else AntipodeNotInvertible
                raise exc(f"no {what} for {self.letters[w[0]].name} in {self.name}") from None
        else:
            head = NCElement(self, self._anti(w[1:], table, memo, what))
            tail = NCElement(self, self._anti(w[:1], table, memo, what))
            res = (head * tail).terms
        memo[w] = res
        return res

    def antipode_word(self, w) -> dict:
        return self._anti(w, self.S_gen, self._S_memo, "antipode")

    def antipode(self, x: NCElement) -> NCElement:
        return self._apply_word_map(x, self.antipode_word)

    def antipode_inverse_word(self, w) -> dict:
        return self._anti(w, self.Sinv_gen, self._Sinv_memo, "antipode inverse")

    def antipode_inverse(self, x: NCElement) -> NCElement:
        return self._apply_word_map(x, self.antipode_inverse_word)

    def star_word(self, w) -> dict:
        memo = self._star_memo
        hit = memo.get(w)
        if hit is not None:
            return hit
        if not w:
            res = {(): self.ring.one}
        elif len(w) == 1:
            try:
                res = self.star_gen[w[0]]
            except KeyError:
                raise KeyError(f"no star for {self.letters[w[0]].name}") from None
        else:
            head = NCElement(self, self.star_word(w[1:]))
            tail = NCElement(self, self.star_word(w[:1]))
            res = (head * tail).terms
        memo[w] = res
        return res

    def star(self, x: NCElement) -> NCElement:
        self._check(x)
        out: dict = {}
        for w, c in x.terms.items():
            cc = _conj(c)
            for v, d in self.star_word(w).items():
                _acc(out, v, cc * d)
        return NCElement(self, out)

    def _apply_word_map(self, x: NCElement, f) -> NCElement:
        self._check(x)
        out: dict = {}
        for w, c in x.terms.items():
            for v, d in f(w).items():
                _acc(out, v, c * d)
        return NCElement(self, out)

    def _check(self, x):
        if not isinstance(x, NCElement) or x.alg is not self:
            raise MixedAlgebraError(f"element not in {self.name}")

    def has_star(self) -> bool:
        return len(self.star_gen) == len(self.letters)


def _conj(c):
    if hasattr(c, "conjugate"):
        return c.conjugate()
    if hasattr(c, "coeffs"):  # TruncSeries
        from .coeffs import TruncSeries, GaussianRational

        return TruncSeries._raw(
            c.var,
            tuple(x.conjugate() if isinstance(x, GaussianRational) else x for x in c.coeffs),
            c.prec,
        )
    return c


# ---------------------------------------------------------------------------
# tensor helpers
# ---------------------------------------------------------------------------


def tensor_power_legs(P: Algebra, n: int) -> tuple:
    return tuple([P] * n)


def apply_coproduct_leg(T: TensorElement, leg: int) -> TensorElement:
    """Apply the coproduct of leg ``leg`` (splitting it in two)."""
    P = T.legs[leg]
    maps = [None] * len(T.legs)

    def delta(w):
        return TensorElement((P, P), P.coproduct_word(w))

    maps[leg] = delta
    return T.map_legs(maps)


def multiply_legs(T: TensorElement, i: int, j: int) -> TensorElement | NCElement:
    """Multiply adjacent legs ``i`` and ``j = i + 1`` into one leg."""
    if j != i + 1 or T.legs[i] is not T.legs[j]:
        raise ValueError("can only multiply adjacent legs of one algebra")
    P = T.legs[i]
    out: dict = {}
    for k, c in T.terms.items():
        for w, d in P.mul_words(k[i], k[j]).items():
            _acc(out, k[:i] + (w,) + k[j + 1 :], c * d)
    legs = T.legs[:i] + (P,) + T.legs[j + 1 :]
    if len(legs) == 1:
        return NCElement(P, {k[0]: c for k, c in out.items()})
    return TensorElement(legs, out)


def _as_tensor(x: NCElement) -> TensorElement:
    return TensorElement((x.alg,), {(w,): c for w, c in x.terms.items()})


# ---------------------------------------------------------------------------
# Hopf axioms
# ---------------------------------------------------------------------------


def verify_hopf_axioms(P: HopfAlgebra, max_degree: int = 3, label: str = "") -> Report:
    """Coassociativity, counit and antipode laws on every normal word up to
    ``max_degree``, plus compatibility of Delta, epsilon and S with each
    rewrite rule (so the structure maps are well defined)."""
    rep = Report("hopf-axioms", P.name, P.ring.name, getattr(P.ring, "N", None))
    label = label or P.name
    one = P.one()
    # well-definedness on relations
    for (x, y), rhs in sorted(P.rules.items()):
        rhs_el = P.raw(rhs)
        tag = f"{P.letters[x].name}*{P.letters[y].name}"
        dl = TensorElement((P, P), P.coproduct_word((x,))) * TensorElement(
            (P, P), P.coproduct_word((y,))
        )
        rep.compare(f"coproduct respects {tag}", label, dl, P.coproduct(rhs_el))
        el = P.counit_word((x,)) * P.counit_word((y,))
        rep.compare(f"counit respects {tag}", label, P.scalar(el), P.scalar(P.counit(rhs_el)))
        sl = NCElement(P, P.antipode_word((y,))) * NCElement(P, P.antipode_word((x,)))
        rep.compare(f"antipode respects {tag}", label, sl, P.antipode(rhs_el))
    for w in P.normal_words(max_degree):
        x = NCElement(P, {w: P.ring.one})
        name = P.render_word(w)
        D = P.coproduct(x)
        left = apply_coproduct_leg(D, 0)
        right = apply_coproduct_leg(D, 1)
        rep.compare(f"coassociativity {name}", label, left, right)
        c1 = D.contract(0, P.counit_word)
        c2 = D.contract(1, P.counit_word)
        rep.compare(f"left counit {name}", label, c1, x)
        rep.compare(f"right counit {name}", label, c2, x)
        eps = P.scalar(P.counit(x))
        SL = multiply_legs(D.map_legs([lambda v: NCElement(P, P.antipode_word(v)), None]), 0, 1)
        SR = multiply_legs(D.map_legs([None, lambda v: NCElement(P, P.antipode_word(v))]), 0, 1)
        rep.compare(f"left antipode {name}", label, SL, eps)
        rep.compare(f"right antipode {name}", label, SR, eps)
    del one
    return rep


# ---------------------------------------------------------------------------
# Pairings
# ---------------------------------------------------------------------------


class PairingTable:
    """A duality pairing ``<h, phi>`` between two Hopf presentations, given on
    letters and extended by ``<h, ab> = <h1,a><h2,b>``,
    ``<hg, a> = <h,a1><g,a2>``."""

    def __init__(self, H: HopfAlgebra, Hd: HopfAlgebra, table: Mapping[tuple[str, str], object]):
        self.H = H
        self.Hd = Hd
        self.table = {}
        for (x, y), v in table.items():
            self.table[(H.letter_index(x), Hd.letter_index(y))] = H.ring.coerce(v)
        self._memo: dict = {}

    def letter_value(self, x: int, y: int):
        return self.table.get((x, y), self.H.ring.zero)

    def pair_words(self, u, v):
        key = (u, v)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        H, Hd = self.H, self.Hd
        ring = H.ring
        if not v:
            res = H.counit_word(u)
        elif not u:
            res = Hd.counit_word(v)
        elif len(u) == 1 and len(v) == 1:
            res = self.letter_value(u[0], v[0])
        elif len(u) >= 2:
            res = ring.zero
            for (v1, v2), c in Hd.coproduct_word(v).items():
                a = self.pair_words(u[:-1], v1)
                if not a:
                    continue
                b = self.pair_words(u[-1:], v2)
                if b:
                    res = res + c * a * b
        else:
            res = ring.zero
            for (u1, u2), c in H.coproduct_word(u).items():
                a = self.pair_words(u1, v[:-1])
                if not a:
                    continue
                b = self.pair_words(u2, v[-1:])
                if b:
                    res = res + c * a * b
        self._memo[key] = res
        return res

    def pair(self, h: NCElement, a: NCElement):
        if h.alg is not self.H or a.alg is not self.Hd:
            raise UnregisteredPair(f"pairing of {h.alg.name} with {a.alg.name} not registered")
        out = self.H.ring.zero
        for u, c in h.terms.items():
            for v, d in a.terms.items():
                p = self.pair_words(u, v)
                if p:
                    out = out + c * d * p
        return out


def verify_pairing(pt: PairingTable, max_degree: int = 2, label: str = "qpairing") -> Report:
    """Duality axioms on products of normal words with total degree bound."""
    H, Hd = pt.H, pt.Hd
    rep = Report("pairing", f"{H.name}|{Hd.name}", H.ring.name)
    hw = H.normal_words(max_degree)
    dw = Hd.normal_words(max_degree)
    lh = [(i,) for i in range(len(H.letters))]
    ld = [(i,) for i in range(len(Hd.letters))]
    for u in hw:
        for a in ld:
            for b in dw:
                if len(b) + 1 > max_degree + 1:
                    continue
                lhs = pt.pair(NCElement(H, {u: H.ring.one}), Hd.raw({a + b: 1}))
                rhs = H.ring.zero
                for (u1, u2), c in H.coproduct_word(u).items():
                    rhs = rhs + c * pt.pair_words(u1, a) * pt.pair_words(u2, b)
                rep.compare(
                    f"<{H.render_word(u)}, {Hd.render_word(a)}*{Hd.render_word(b)}>",
                    label, H.scalar(lhs), H.scalar(rhs),
                )
    for g in lh:
        for u in hw:
            for v in dw:
                lhs = pt.pair(H.raw({g + u: 1}), NCElement(Hd, {v: Hd.ring.one}))
                rhs = H.ring.zero
                for (v1, v2), c in Hd.coproduct_word(v).items():
                    rhs = rhs + c * pt.pair_words(g, v1) * pt.pair_words(u, v2)
                rep.compare(
                    f"<{H.render_word(g)}*{H.render_word(u)}, {Hd.render_word(v)}>",
                    label, H.scalar(lhs), H.scalar(rhs),
                )
    for u in hw:
        for v in dw:
            lhs = pt.pair(H.antipode(NCElement(H, {u: H.ring.one})), NCElement(Hd, {v: Hd.ring.one}))
            rhs = pt.pair(NCElement(H, {u: H.ring.one}), Hd.antipode(NCElement(Hd, {v: Hd.ring.one})))
            rep.compare(
                f"<S {H.render_word(u)}, {Hd.render_word(v)}> = <{H.render_word(u)}, S {Hd.render_word(v)}>",
                label, H.scalar(lhs), H.scalar(rhs),
            )
    return rep


# ---------------------------------------------------------------------------
# Actions
# ---------------------------------------------------------------------------


class ActionTable:
    """A left (or right) action of a Hopf presentation on an algebra, given
    on letter pairs and extended by the module-algebra law."""

    def __init__(self, acting: HopfAlgebra, target: Algebra,
                 table: Mapping[tuple[str, str], NCElement], side: str = "left",
                 name: str = ""):
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        self.acting = acting
        self.target = target
        self.side = side
        self.name = name or f"{acting.name} on {target.name}"
        self.table: dict[tuple[int, int], dict] = {}
        for (h, a), v in table.items():
            if isinstance(v, NCElement):
                if v.alg is not target:
                    raise MixedAlgebraError("action value outside target algebra")
                terms = dict(v.terms)
            else:
                c = target.ring.coerce(v)
                terms = {(): c} if c else {}
            self.table[(acting.letter_index(h), target.letter_index(a))] = terms
        self._memo: dict = {}

    def _letter(self, x: int, a: int) -> dict:
        try:
            return self.table[(x, a)]
        except KeyError:
            raise UnregisteredLetter(
                f"no action of {self.acting.letters[x].name} on {self.target.letters[a].name}"
            ) from None

    def act_words(self, hw, aw) -> dict:
        """``hw |> aw`` (or ``aw <| hw`` for a right action) as a term dict."""
        key = (hw, aw)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        H, A = self.acting, self.target
        ring = A.ring
        if not hw:
            res = {aw: ring.one}
        elif len(hw) > 1:
            if self.side == "left":
                first, rest = hw[:1], hw[1:]
            else:
                first, rest = hw[-1:], hw[:-1]
            res = {}
            for v, c in self.act_words(rest, aw).items():
                for v2, d in self.act_words(first, v).items():
                    _acc(res, v2, c * d)
        elif not aw:
            e = H.counit_word(hw)
            res = {(): e} if e else {}
        elif len(aw) == 1:
            res = self._letter(hw[0], aw[0])
        else:
            res = {}
            head, tail = aw[:1], aw[1:]
            for (h1, h2), c in H.coproduct_word(hw).items():
                left = self.act_words(h1, head)
                if not left:
                    continue
                right = self.act_words(h2, tail)
                if not right:
                    continue
                prod = NCElement(A, left) * NCElement(A, right)
                for v, d in prod.terms.items():
                    _acc(res, v, c * d)
        self._memo[key] = res
        return res

    def act(self, h: NCElement, a: NCElement) -> NCElement:
        if h.alg is not self.acting:
            raise MixedAlgebraError(f"{h.alg.name} does not act via {self.name}")
        if a.alg is not self.target:
            raise MixedAlgebraError(f"{a.alg.name} is not the target of {self.name}")
        out: dict = {}
        for u, c in h.terms.items():
            for v, d in a.terms.items():
                cd = c * d
                for w, e in self.act_words(u, v).items():
                    _acc(out, w, cd * e)
        return NCElement(self.target, out)

    def act_tensor(self, X: TensorElement, Y: TensorElement) -> TensorElement:
        """Legwise action of a tensor element on a tensor element."""
        out: dict = {}
        for k, c in X.terms.items():
            for m, d in Y.terms.items():
                partial = [((), c * d)]
                for hw, aw in zip(k, m):
                    res = self.act_words(hw, aw)
                    partial = [
                        (key + (w,), e * f) for key, e in partial for w, f in res.items()
                    ]
                    if not partial:
                        break
                for key, g in partial:
                    _acc(out, key, g)
        return TensorElement(Y.legs, out)


def verify_module_algebra(T: ActionTable, max_degree: int = 2, label: str = "") -> Report:
    """Check ``h|>(ab) = (h1|>a)(h2|>b)`` on normal words and the
    representation law ``(hg)|>a = h|>(g|>a)`` (right-handed analogues for
    right actions)."""
    H, A = T.acting, T.target
    rep = Report("module-algebra", T.name, A.ring.name)
    label = label or T.name
    hl = [(i,) for i in range(len(H.letters))]
    aw = A.normal_words(max_degree)
    al = [(i,) for i in range(len(A.letters))]
    for h in hl:
        for a in al:
            for b in aw:
                if len(b) + 1 > max_degree:
                    continue
                prod = A.raw({a + b: 1})
                lhs = T.act(NCElement(H, {h: H.ring.one}), prod)
                rhs = A.zero()
                for (h1, h2), c in H.coproduct_word(h).items():
                    if T.side == "left":
                        x = NCElement(A, T.act_words(h1, a)) * NCElement(A, T.act_words(h2, b))
                    else:
                        x = NCElement(A, T.act_words(h1, a)) * NCElement(A, T.act_words(h2, b))
                    rhs = rhs + x.scale(c)
                rep.compare(
                    f"{H.render_word(h)} on {A.render_word(a)}*{A.render_word(b)}", label, lhs, rhs
                )
    for h in hl:
        for g in hl:
            hg = H.raw({h + g: 1})
            for a in aw:
                if len(a) > max(1, max_degree - 1):
                    continue
                lhs = T.act(hg, NCElement(A, {a: A.ring.one}))
                if T.side == "left":
                    inner = NCElement(A, T.act_words(g, a))
                    rhs = T.act(NCElement(H, {h: H.ring.one}), inner)
                else:
                    inner = NCElement(A, T.act_words(h, a))
                    rhs = T.act(NCElement(H, {g: H.ring.one}), inner)
                rep.compare(
                    f"({H.render_word(h)}*{H.render_word(g)}) on {A.render_word(a)}", label, lhs, rhs
                )
    return rep


def opposite_algebra(A: Algebra, name: str | None = None) -> Algebra:
    """The opposite algebra: letters in reversed order, rules reversed."""
    op = Algebra(name or f"{A.name}^op", A.ring, [], ())
    op.letters = list(reversed(A.letters))
    op.index = {l.name: i for i, l in enumerate(op.letters)}
    n = len(A.letters)
    flip = lambda i: n - 1 - i  # noqa: E731
    op.inverse = {flip(i): flip(j) for i, j in A.inverse.items()}
    op.rules = {
        (flip(y), flip(x)): {tuple(flip(i) for i in reversed(w)): c for w, c in rhs.items()}
        for (x, y), rhs in A.rules.items()
    }
    op._invalidate()
    return op


def flip_action(T: ActionTable) -> ActionTable:
    """Turn a right action into the left action ``h|>a = a<|S^{-1}h`` on the
    opposite algebra."""
    if T.side != "right":
        raise ValueError("flip_action expects a right action")
    H, A = T.acting, T.target
    op = opposite_algebra(A)
    n = len(A.letters)
    table = {}
    for x in range(len(H.letters)):
        sinv = H.antipode_inverse_word((x,))
        for a in range(n):
            res: dict = {}
            for w, c in sinv.items():
                for v, d in T.act_words(w, (a,)).items():
                    _acc(res, tuple(n - 1 - i for i in reversed(v)), c * d)
            table[(H.letters[x].name, A.letters[a].name)] = NCElement(op, res)
    return ActionTable(H, op, table, "left", name=f"flip of {T.name}")


def verify_star(P: HopfAlgebra, max_degree: int = 2, label: str = "") -> Report:
    """Star is an antilinear anti-homomorphism respecting every rule,
    involutive on normal words, and compatible with the coproduct."""
    rep = Report("star", P.name, P.ring.name)
    label = label or P.name
    for (x, y), rhs in sorted(P.rules.items()):
        lhs = NCElement(P, P.star_word((y,))) * NCElement(P, P.star_word((x,)))
        rep.compare(f"star respects {P.letters[x].name}*{P.letters[y].name}", label,
                    lhs, P.star(P.raw(rhs)))
    for w in P.normal_words(max_degree):
        x = NCElement(P, {w: P.ring.one})
        rep.compare(f"star involutive {P.render_word(w)}", label, P.star(P.star(x)), x)
    for i, l in enumerate(P.letters):
        x = P.gen(l.name)
        lhs = P.coproduct(P.star(x))
        D = P.coproduct(x)
        rhs = TensorElement((P, P), {})
        for (u, v), c in D.terms.items():
            rhs = rhs + TensorElement.pure(P.star(NCElement(P, {u: P.ring.one})),
                                           P.star(NCElement(P, {v: P.ring.one}))).scale(_conj(c))
        rep.compare(f"coproduct commutes with star on {l.name}", label, lhs, rhs)
    return rep
