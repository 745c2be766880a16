"""Presentation-level constructions: the quantum double, the mirror
bicrossproduct and its general bicrossproduct form, the factor map between
H^cop (x) H and the mirror product, cocycle twists of coproducts, R-matrices
and module algebras, Yang-Baxter and quasitriangularity checks, and the
closed-form q-exponential conjugation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .hopf import (
    ActionTable,
    HopfAlgebra,
    PairingTable,
    apply_coproduct_leg,
    multiply_legs,
)
from .ncalg import (
    Algebra,
    MixedAlgebraError,
    NCElement,
    OrientationError,
    TensorElement,
    _acc,
    orient_relations,
)
from .report import Report

__all__ = [
    "NonPolynomialCrossRelation",
    "CocycleFailed",
    "ModeUnsupported",
    "RelationNotSatisfied",
    "NonTerminatingActionSeries",
    "letter_stems",
    "tilde_name",
    "build_double",
    "build_mirror",
    "adjoint_action",
    "theta1",
    "theta1_inverse",
    "Cocycle",
    "verify_cocycle",
    "twist_hopf",
    "twist_R",
    "twist_module_algebra",
    "verify_qybe",
    "verify_quasitriangular",
    "q_exp_conjugate",
    "verify_hom",
    "AlgebraMap",
    "tilde_copy",
    "embed_element",
    "ExpFactor",
    "product_of_factors",
    "place",
    "relabel_legs",
    "multiply_factor_pairs",
    "inverse_antipode_on_leg",
    "TwistedHopf",
    "TwistedAlgebra",
]


class NonPolynomialCrossRelation(ValueError):
    """A derived cross relation cannot be written in the combined alphabet."""


class CocycleFailed(ValueError):
    pass


class ModeUnsupported(ValueError):
    pass


class RelationNotSatisfied(ValueError):
    pass


class NonTerminatingActionSeries(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# alphabet plumbing
# ---------------------------------------------------------------------------


def letter_stems(A: Algebra, rename: Callable[[str], str] = lambda n: n):
    """``(stems, invertible)`` that rebuild the alphabet of ``A`` in order."""
    stems, inv = [], []
    for l in A.letters:
        if l.power == -1:
            continue
        stems.append(rename(l.name))
        if l.inverse_of is not None:
            inv.append(rename(l.name))
    return stems, inv


def tilde_name(name: str) -> str:
    """``X_+`` -> ``Xt_+``, ``K`` -> ``Kt``, ``K^-1`` -> ``Kt^-1``."""
    base, sep, power = name.partition("^")
    stem, us, tail = base.partition("_")
    out = stem + "t" + (us + tail if us else "")
    return out + (sep + power if sep else "")


def _word_map(src: Algebra, dst: Algebra, rename=lambda n: n):
    table = [dst.index[rename(l.name)] for l in src.letters]

    def f(w):
        return tuple(table[i] for i in w)

    return f


def _copy_rules(src: Algebra, dst: Algebra, emb):
    for (x, y), rhs in src.rules.items():
        if src.inverse.get(x) == y:
            continue
        dst.rules[emb((x, y))] = {emb(w): c for w, c in rhs.items()}
    dst._invalidate()


def _terms_map(terms: dict, emb) -> dict:
    out: dict = {}
    for w, c in terms.items():
        _acc(out, emb(w), c)
    return out


def _raw_elem(P: Algebra, terms: dict) -> NCElement:
    return P.raw(terms)


def _tensor_raw(legs, terms: dict) -> TensorElement:
    """Tensor element from possibly non-normal leg words."""
    out: dict = {}
    for key, c in terms.items():
        partial = [((), c)]
        for alg, w in zip(legs, key):
            nf = alg.mul_words((), w)
            partial = [(k + (v,), e * d) for k, e in partial for v, d in nf.items()]
        for k, e in partial:
            _acc(out, k, e)
    return TensorElement(tuple(legs), out)


def _double_coproduct(H: HopfAlgebra, w) -> dict:
    """``(Delta (x) id) Delta`` of a word as ``{(w1, w2, w3): c}``."""
    D = TensorElement((H, H), H.coproduct_word(w))
    return apply_coproduct_leg(D, 0).terms


# ---------------------------------------------------------------------------
# quantum double
# ---------------------------------------------------------------------------


def build_double(pairing: PairingTable, name: str = "double") -> HopfAlgebra:
    """The double cross product ``H |><| H*^op`` of a dually paired pair.

    Dual letters come first in the alphabet.  The dual factor carries the
    opposite product, so each dual rule is reversed and re-solved for the
    out-of-order words; the cross relations come from evaluating
    ``phi g = <g1,phi1><S g3,phi3> g2 phi2`` on letter pairs and solving the
    resulting linear system for the words ``g phi``.
    """
    H, Hd = pairing.H, pairing.Hd
    ring = H.ring
    ds, dinv = letter_stems(Hd)
    hs, hinv = letter_stems(H)
    clash = set(ds) & set(hs)
    if clash:
        raise ValueError(f"letter names shared by both factors: {sorted(clash)}")
    D = HopfAlgebra(name, ring, ds + hs, invertible=dinv + hinv)
    eh = _word_map(H, D)
    ed = _word_map(Hd, D)

    def ed_rev(w):
        return ed(tuple(reversed(w)))

    _copy_rules(H, D, eh)

    # opposite product on the dual letters
    rels, unknowns = [], []
    for (y, x), rhs in Hd.rules.items():
        if Hd.inverse.get(y) == x:
            continue
        rel = {ed((x, y)): ring.one}
        for w, c in rhs.items():
            _acc(rel, ed_rev(w), -c)
        rels.append(rel)
        unknowns.append(ed((y, x)))
    try:
        sol = orient_relations(ring, rels, unknowns)
    except OrientationError as exc:
        raise NonPolynomialCrossRelation(f"opposite dual product: {exc}") from None
    for w, rhs in sol.items():
        D.rules[w] = rhs

    # cross relations
    rels, unknowns = [], []
    for g in range(len(H.letters)):
        dg = _double_coproduct(H, (g,))
        for f in range(len(Hd.letters)):
            df = _double_coproduct(Hd, (f,))
            rel = {ed((f,)) + eh((g,)): ring.one}
            for (g1, g2, g3), cg in dg.items():
                sg3 = H.antipode_word(g3)
                for (f1, f2, f3), cf in df.items():
                    p1 = pairing.pair_words(g1, f1)
                    if not p1:
                        continue
                    p3 = ring.zero
                    for v, d in sg3.items():
                        e = pairing.pair_words(v, f3)
                        if e:
                            p3 = p3 + d * e
                    if not p3:
                        continue
                    _acc(rel, eh(g2) + ed_rev(f2), -(cg * cf * p1 * p3))
            rels.append(rel)
            unknowns.append(eh((g,)) + ed((f,)))
    try:
        sol = orient_relations(ring, rels, unknowns)
    except OrientationError as exc:
        raise NonPolynomialCrossRelation(str(exc)) from None
    for w, rhs in sol.items():
        D.rules[w] = rhs
    D._invalidate()

    # Hopf structure: tensor product coproduct, antipode from the factors
    for x in range(len(H.letters)):
        D.delta_gen[eh((x,))[0]] = {
            (eh(u), eh(v)): c for (u, v), c in H.coproduct_word((x,)).items()
        }
        D.eps_gen[eh((x,))[0]] = H.eps_gen[x]
        D.S_gen[eh((x,))[0]] = _terms_map(H.antipode_word((x,)), eh)
        if x in H.Sinv_gen:
            D.Sinv_gen[eh((x,))[0]] = _terms_map(H.antipode_inverse_word((x,)), eh)
    for x in range(len(Hd.letters)):
        i = ed((x,))[0]
        D.delta_gen[i] = _tensor_raw(
            (D, D), {(ed_rev(u), ed_rev(v)): c for (u, v), c in Hd.coproduct_word((x,)).items()}
        ).terms
        D.eps_gen[i] = Hd.eps_gen[x]
        D.S_gen[i] = D.raw(_terms_map(Hd.antipode_inverse_word((x,)), ed_rev)).terms
        D.Sinv_gen[i] = D.raw(_terms_map(Hd.antipode_word((x,)), ed_rev)).terms
    D.factors = {"H": (H, eh), "dual": (Hd, ed_rev)}
    D.abbreviations = dict(getattr(H, "abbreviations", {}))
    D.abbreviations = {k: NCElement(D, _terms_map(v.terms, eh)) for k, v in D.abbreviations.items()}
    inv = getattr(H, "abbreviation_inverses", {})
    D.abbreviation_inverses = {k: NCElement(D, _terms_map(v.terms, eh)) for k, v in inv.items()}
    return D


def embed_element(P: Algebra, x: NCElement, emb) -> NCElement:
    """Image of ``x`` under a letter-level word map into ``P``."""
    return P.raw(_terms_map(x.terms, emb))


# ---------------------------------------------------------------------------
# algebra maps
# ---------------------------------------------------------------------------


class AlgebraMap:
    """A map given on letters and extended multiplicatively.

    ``images`` sends letter names of ``source`` to elements of ``target``.
    Nothing is assumed about relations; :func:`verify_hom` checks them.
    """

    def __init__(self, source: Algebra, target: Algebra, images: Mapping[str, NCElement], name: str = ""):
        self.source = source
        self.target = target
        self.name = name or f"{source.name}->{target.name}"
        self.letter_images: dict[int, dict] = {}
        for n, v in images.items():
            if isinstance(v, NCElement):
                if v.alg is not target:
                    raise ValueError(f"image of {n} is not in {target.name}")
                terms = dict(v.terms)
            else:
                c = target.ring.coerce(v)
                terms = {(): c} if c else {}
            self.letter_images[source.letter_index(n)] = terms
        self._memo: dict = {}
        self._inverse: dict | None = None

    def word(self, w) -> dict:
        hit = self._memo.get(w)
        if hit is not None:
            return hit
        if not w:
            res = {(): self.target.ring.one}
        elif len(w) == 1:
            try:
                res = self.letter_images[w[0]]
            except KeyError:
                raise KeyError(
                    f"{self.name} has no image for {self.source.letters[w[0]].name}"
                ) from None
        else:
            res = (NCElement(self.target, self.word(w[:-1]))
                   * NCElement(self.target, self.word(w[-1:]))).terms
        self._memo[w] = res
        return res

    def __call__(self, x):
        if isinstance(x, TensorElement):
            return self.on_legs(x, range(len(x.legs)))
        out: dict = {}
        for w, c in x.terms.items():
            for v, d in self.word(w).items():
                _acc(out, v, c * d)
        return NCElement(self.target, out)

    def on_legs(self, X: TensorElement, legs) -> TensorElement:
        """Apply the map to the listed legs of a tensor element."""
        legs = set(legs)
        maps = [
            (lambda w: NCElement(self.target, self.word(w))) if i in legs else None
            for i in range(len(X.legs))
        ]
        return X.map_legs(maps)

    # -- inversion on monomial images ---------------------------------------
    def monomial_inverse(self, max_degree: int = 6) -> dict:
        """``{target word: (source word, coefficient)}`` for maps that send
        normal words to scalar multiples of distinct normal words."""
        if self._inverse is None:
            table: dict = {}
            for w in self.source.normal_words(max_degree):
                img = self.word(w)
                if len(img) != 1:
                    raise ValueError(f"{self.name} does not map {self.source.render_word(w)} to a monomial")
                (v, c), = img.items()
                if v in table:
                    continue
                table[v] = (w, 1 / c if not hasattr(c, "inverse") else c.inverse())
            self._inverse = table
        return self._inverse

    def invert(self, y: NCElement) -> NCElement:
        """Preimage of ``y`` when the map is monomial (see :meth:`monomial_inverse`)."""
        table = self.monomial_inverse()
        out: dict = {}
        for v, c in y.terms.items():
            try:
                w, d = table[v]
            except KeyError:
                raise ValueError(
                    f"{self.target.render_word(v)} is not in the image of {self.name}"
                ) from None
            _acc(out, w, c * d)
        return NCElement(self.source, out)


def verify_hom(f: AlgebraMap, label: str = "", relations=None) -> Report:
    """Every rewrite rule ``lhs -> rhs`` of the source maps to zero.

    ``relations`` optionally adds ``(name, element-of-free-words)`` pairs given
    as term dicts over source words that must vanish under the map.
    """
    src, tgt = f.source, f.target
    rep = Report("isomorphism", f.name, tgt.ring.name)
    label = label or f.name
    for (x, y), rhs in sorted(src.rules.items()):
        lhs = NCElement(tgt, f.word((x, y)))
        image = tgt.zero()
        for w, c in rhs.items():
            image = image + NCElement(tgt, f.word(w)).scale(c)
        rep.compare(f"{f.name}({src.letters[x].name}*{src.letters[y].name})", label, lhs, image)
    for name, terms in relations or ():
        val = tgt.zero()
        for w, c in terms.items():
            val = val + NCElement(tgt, f.word(w)).scale(c)
        rep.assert_zero(name, label, val)
    return rep


# ---------------------------------------------------------------------------
# mirror bicrossproduct
# ---------------------------------------------------------------------------


def tilde_copy(H: HopfAlgebra, name: str | None = None) -> HopfAlgebra:
    """``H^cop`` on renamed letters (``K`` -> ``Kt``): same algebra, opposite
    coproduct, antipode ``S^-1``."""
    stems, inv = letter_stems(H, tilde_name)
    T = HopfAlgebra(name or f"{H.name}~", H.ring, stems, invertible=inv)
    e = _word_map(H, T, tilde_name)
    _copy_rules(H, T, e)
    for x in range(len(H.letters)):
        i = e((x,))[0]
        T.delta_gen[i] = {(e(v), e(u)): c for (u, v), c in H.coproduct_word((x,)).items()}
        T.eps_gen[i] = H.eps_gen[x]
        if x in H.Sinv_gen:
            T.S_gen[i] = _terms_map(H.antipode_inverse_word((x,)), e)
        T.Sinv_gen[i] = _terms_map(H.antipode_word((x,)), e)
    T.abbreviations = {tilde_name(k): embed_element(T, v, e)
                       for k, v in getattr(H, "abbreviations", {}).items()}
    T.abbreviation_inverses = {tilde_name(k): embed_element(T, v, e)
                               for k, v in getattr(H, "abbreviation_inverses", {}).items()}
    return T


class _Rename(AlgebraMap):
    """Letter-renaming isomorphism ``source -> target`` where ``rename``
    sends target names to source names; inverted by renaming back."""

    def __init__(self, source, target, rename, name=""):
        images = {rename(l.name): target.gen(l.name) for l in target.letters}
        super().__init__(source, target, images, name)
        self._back = _word_map(target, source, rename)

    def invert(self, y):
        return NCElement(self.source, _terms_map(y.terms, self._back))


def adjoint_action(H: HopfAlgebra, hw, x: NCElement) -> NCElement:
    """``Ad_h(x) = h1 x S(h2)`` for a word ``hw`` of ``H``."""
    out = H.zero()
    for (u, v), c in H.coproduct_word(hw).items():
        out = out + (NCElement(H, {u: H.ring.one}) * x * NCElement(H, H.antipode_word(v))).scale(c)
    return out


def _triple_coproduct(H: HopfAlgebra, w) -> dict:
    T = TensorElement((H, H, H), _double_coproduct(H, w))
    return apply_coproduct_leg(T, 2).terms


def build_mirror(H: HopfAlgebra, first: HopfAlgebra | None = None,
                 chart: AlgebraMap | None = None, name: str = "mirror") -> HopfAlgebra:
    """The mirror product ``H^cop >|< H``.

    The first factor is ``first`` (a Hopf algebra isomorphic to ``H^cop``
    through ``chart: first -> H``, which must send normal words to
    monomials) or, by default, a tilde-renamed copy of ``H^cop``.  Its letters
    come first.  Cross relations are ``h psi = (h1 |> psi) h2`` with the
    adjoint action, the coproduct of ``h`` is ``h2 (x) (h1 S h3)~ h4`` and its
    antipode ``S(h2) S~((h1 S h3)~)``.
    """
    if first is None:
        first = tilde_copy(H)
        chart = _Rename(first, H, tilde_name, name=f"{first.name}->{H.name}")
    elif chart is None:
        raise ValueError("a first factor needs a chart into H")
    A = first
    ring = H.ring
    as_, ainv = letter_stems(A)
    hs, hinv = letter_stems(H)
    M = HopfAlgebra(name, ring, as_ + hs, invertible=ainv + hinv)
    ea = _word_map(A, M)
    eh = _word_map(H, M)
    _copy_rules(A, M, ea)
    _copy_rules(H, M, eh)

    def to_first(y: NCElement) -> dict:
        return _terms_map(chart.invert(y).terms, ea)

    for h in range(len(H.letters)):
        for p in range(len(A.letters)):
            img = NCElement(H, chart.word((p,)))
            rhs: dict = {}
            for (h1, h2), c in H.coproduct_word((h,)).items():
                for u, d in to_first(adjoint_action(H, h1, img)).items():
                    _acc(rhs, u + eh(h2), c * d)
            M.rules[eh((h,)) + ea((p,))] = rhs
    M._invalidate()

    for p in range(len(A.letters)):
        i = ea((p,))[0]
        M.delta_gen[i] = {(ea(u), ea(v)): c for (u, v), c in A.coproduct_word((p,)).items()}
        M.eps_gen[i] = A.eps_gen[p]
        M.S_gen[i] = _terms_map(A.antipode_word((p,)), ea)
        if p in A.Sinv_gen:
            M.Sinv_gen[i] = _terms_map(A.antipode_inverse_word((p,)), ea)

    for h in range(len(H.letters)):
        i = eh((h,))[0]
        delta: dict = {}
        anti = M.zero()
        for (h1, h2, h3, h4), c in _triple_coproduct(H, (h,)).items():
            mid = NCElement(H, {h1: ring.one}) * NCElement(H, H.antipode_word(h3))
            if not mid:
                continue
            for u, d in to_first(mid).items():
                _acc(delta, (eh(h2), u + eh(h4)), c * d)
        for (h1, h2, h3), c in _double_coproduct(H, (h,)).items():
            mid = NCElement(H, {h1: ring.one}) * NCElement(H, H.antipode_word(h3))
            if not mid:
                continue
            left = M.raw(_terms_map(H.antipode_word(h2), eh))
            right = M.raw(_terms_map(A.antipode(chart.invert(mid)).terms, ea))
            anti = anti + (left * right).scale(c)
        M.delta_gen[i] = delta
        M.eps_gen[i] = H.eps_gen[h]
        M.S_gen[i] = anti.terms
    M.factors = {"first": (A, ea), "H": (H, eh)}
    M.chart = chart
    M.abbreviations = {}
    M.abbreviation_inverses = {}
    for src, emb in ((A, ea), (H, eh)):
        for k, v in getattr(src, "abbreviations", {}).items():
            M.abbreviations[k] = embed_element(M, v, emb)
        for k, v in getattr(src, "abbreviation_inverses", {}).items():
            M.abbreviation_inverses[k] = embed_element(M, v, emb)
    return M


# ---------------------------------------------------------------------------
# the factor map theta_1 between H^cop (x) H and the mirror product
# ---------------------------------------------------------------------------


def _first_of(M: HopfAlgebra, y: NCElement) -> NCElement:
    """An element of ``H`` carried into the first factor of ``M`` by the chart."""
    A, ea = M.factors["first"]
    return embed_element(M, M.chart.invert(y), ea)


def _from_factor(M: HopfAlgebra, key: str, w) -> NCElement:
    _, emb = M.factors[key]
    return M.raw({emb(w): M.ring.one})


def theta1(M: HopfAlgebra, X: TensorElement) -> NCElement | TensorElement:
    """``phi (x) h -> phi (S h1)~ h2`` applied to consecutive leg pairs.

    ``X`` has legs ``(first, H, first, H, ...)`` where ``first`` is the first
    factor of the mirror product ``M``; the result has one ``M`` leg per pair.
    """
    A, _ = M.factors["first"]
    H, _ = M.factors["H"]
    n = len(X.legs)
    if n % 2 or any(X.legs[i] is not A or X.legs[i + 1] is not H for i in range(0, n, 2)):
        raise ValueError("theta1 needs legs alternating between the two factors")
    memo: dict = {}

    def pair(u, w) -> dict:
        key = (u, w)
        hit = memo.get(key)
        if hit is None:
            out = M.zero()
            for (w1, w2), c in H.coproduct_word(w).items():
                s = NCElement(H, H.antipode_word(w1))
                if not s:
                    continue
                out = out + (_first_of(M, s) * _from_factor(M, "H", w2)).scale(c)
            hit = (_from_factor(M, "first", u) * out).terms
            memo[key] = hit
        return hit

    return _pairwise(M, X, pair)


def theta1_inverse(M: HopfAlgebra, x: NCElement | TensorElement) -> TensorElement:
    """``phi h -> phi h1~ (x) h2``: the inverse of :func:`theta1`, one leg
    pair per ``M`` leg."""
    A, _ = M.factors["first"]
    H, _ = M.factors["H"]
    nA = len(A.letters)

    def one(w) -> TensorElement:
        u, v = w[: _split(w, nA)], w[_split(w, nA):]
        u = tuple(u)
        v = tuple(i - nA for i in v)
        out = TensorElement.zero((A, H))
        for (v1, v2), c in H.coproduct_word(v).items():
            left = NCElement(A, {u: A.ring.one}) * M.chart.invert(NCElement(H, {v1: H.ring.one}))
            out = out + TensorElement.pure(left, NCElement(H, {v2: H.ring.one})).scale(c)
        return out

    if isinstance(x, NCElement):
        X = TensorElement((M,), {(w,): c for w, c in x.terms.items()})
    else:
        X = x
    return X.map_legs([one] * len(X.legs))


def _split(w, nA: int) -> int:
    k = 0
    while k < len(w) and w[k] < nA:
        k += 1
    return k


def _pairwise(M: HopfAlgebra, X: TensorElement, pair) -> NCElement | TensorElement:
    n = len(X.legs) // 2
    out: dict = {}
    for key, c in X.terms.items():
        partial = [((), c)]
        for i in range(n):
            img = pair(key[2 * i], key[2 * i + 1])
            partial = [(k + (v,), e * d) for k, e in partial for v, d in img.items()]
        for k, e in partial:
            _acc(out, k, e)
    if n == 1:
        return NCElement(M, {k[0]: c for k, c in out.items()})
    return TensorElement((M,) * n, out)


def multiply_factor_pairs(M: HopfAlgebra, X: TensorElement) -> NCElement | TensorElement:
    """``phi (x) h -> phi h`` on consecutive leg pairs (the identification
    of ``H^cop (x) H`` with ``M`` as vector spaces)."""

    def pair(u, w):
        return (_from_factor(M, "first", u) * _from_factor(M, "H", w)).terms

    return _pairwise(M, X, pair)


def relabel_legs(X: TensorElement, legs) -> TensorElement:
    """Reinterpret the legs of ``X`` in letter-aligned copies of the same
    algebras (such as a tilde copy made by :func:`tilde_copy`)."""
    legs = tuple(legs)
    for a, b in zip(X.legs, legs):
        if len(a.letters) != len(b.letters):
            raise MixedAlgebraError("legs are not letter-aligned copies")
    return TensorElement(legs, dict(X.terms))


def inverse_antipode_on_leg(X: TensorElement, leg: int) -> TensorElement:
    """``S^-1`` applied to one leg."""
    P = X.legs[leg]
    maps = [None] * len(X.legs)
    maps[leg] = lambda w: NCElement(P, P.antipode_inverse_word(w))
    return X.map_legs(maps)


def place(X: TensorElement, positions, legs) -> TensorElement:
    """``X_{ij...}``: leg ``k`` of ``X`` goes to ``positions[k]`` of a tensor
    with the given legs (relabeling into letter-aligned copies as needed)."""
    legs = tuple(legs)
    Y = relabel_legs(X, [legs[p] for p in positions])
    return Y.embed(positions, legs)


# ---------------------------------------------------------------------------
# exponential factors, cocycles and twisting
# ---------------------------------------------------------------------------


@dataclass
class ExpFactor:
    """One exponential factor ``e^{rate Y}`` (kind ``exp``), ``e_base^{Y}``
    (kind ``qexp``) or ``q^{rate Y}`` (kind ``qpow``, t-adic only)."""

    kind: str
    Y: TensorElement
    param: object = 1

    def inverse(self) -> "ExpFactor":
        if self.kind == "exp":
            return ExpFactor("exp", self.Y, -self.param)
        if self.kind == "qpow":
            return ExpFactor("qpow", self.Y, -self.param)
        base = self.param
        inv = base.inverse() if hasattr(base, "inverse") else 1 / base
        return ExpFactor("qexp", -self.Y, inv)

    def weights(self, ring, n_max: int):
        from fractions import Fraction
        from math import factorial

        from .parser import q_factorial_weights

        if self.kind == "qexp":
            return q_factorial_weights(ring.coerce(self.param), n_max)
        p = ring.coerce(self.param)
        return [p**n * ring.coerce(Fraction(1, factorial(n))) for n in range(n_max + 1)]

    def element(self) -> TensorElement:
        """The factor as a tensor, truncated at the working order."""
        Y = self.Y
        ring = Y.ring
        if self.kind == "qpow":
            if not ring.is_series or ring.var != "t":
                raise ModeUnsupported("q^{...} factors need the t-adic mode")
            Y = Y.scale(ring.gen * ring.kappa)
            return ExpFactor("exp", Y, self.param).element()
        if not ring.is_series:
            raise ModeUnsupported("exponential factors are only materialized in series modes")
        vmin = min((c.valuation for c in Y.terms.values()), default=ring.N + 1)
        if vmin < 1:
            raise ModeUnsupported("exponent must vanish at order zero to be materialized")
        n_max = ring.N // vmin
        w = self.weights(ring, n_max)
        out = TensorElement.unit(Y.legs)
        power = TensorElement.unit(Y.legs)
        for n in range(1, n_max + 1):
            power = power * Y
            if not power:
                break
            out = out + power.scale(w[n])
        return out

    def act(self, T: ActionTable, V: TensorElement, budget: int = 1000) -> TensorElement:
        """``factor |> V`` by iterating the legwise action until it vanishes."""
        if self.kind == "qpow":
            raise ModeUnsupported("q^{...} factors do not act termwise")
        ring = V.ring
        out = V
        term = V
        n = 0
        w = [ring.one]
        while True:
            term = T.act_tensor(self.Y, term)
            if not term:
                return out
            n += 1
            if n > budget:
                raise NonTerminatingActionSeries(f"no termination after {budget} terms")
            if len(w) <= n:
                w = self.weights(ring, 2 * n + 2)
            out = out + term.scale(w[n])


def product_of_factors(factors: Sequence[ExpFactor]) -> TensorElement:
    out = None
    for f in factors:
        e = f.element()
        out = e if out is None else out * e
    return out


class Cocycle:
    """A candidate 2-cocycle given as an ordered product of exponential
    factors.  In series modes the element and its inverse are materialized;
    in exact modes only its action (which must terminate) is available."""

    def __init__(self, factors: Sequence[ExpFactor], name: str = "chi", inverse=None):
        self.factors = list(factors)
        self.name = name
        self.inverse_factors = list(inverse) if inverse is not None else [f.inverse() for f in reversed(self.factors)]
        self.legs = self.factors[0].Y.legs if self.factors else None
        self._elem = None
        self._inv = None

    @classmethod
    def from_element(cls, chi: TensorElement, inverse: TensorElement, name="chi"):
        c = cls([], name, inverse=[])
        c.legs = chi.legs
        c._elem, c._inv = chi, inverse
        return c

    @property
    def element(self) -> TensorElement:
        if self._elem is None:
            self._elem = product_of_factors(self.factors) if self.factors else TensorElement.unit(self.legs)
        return self._elem

    @property
    def inverse(self) -> TensorElement:
        if self._inv is None:
            self._inv = (product_of_factors(self.inverse_factors)
                         if self.inverse_factors else TensorElement.unit(self.legs))
        return self._inv

    def mapped(self, f) -> "Cocycle":
        """Image under a leg map ``f`` (applied to every exponent)."""
        def m(F):
            return ExpFactor(F.kind, f(F.Y), F.param)
        out = Cocycle([m(F) for F in self.factors], self.name, [m(F) for F in self.inverse_factors])
        return out

    def act(self, T: ActionTable, V: TensorElement, inverse: bool = False) -> TensorElement:
        factors = self.inverse_factors if inverse else self.factors
        for F in reversed(factors):
            V = F.act(T, V)
        return V


def _coproduct_on_leg(X: TensorElement, leg: int) -> TensorElement:
    return apply_coproduct_leg(X, leg)


def verify_cocycle(chi: Cocycle, label: str = "", action: ActionTable | None = None,
                   max_degree: int = 1) -> Report:
    """The 2-cocycle identity ``chi_12 (Delta (x) id) chi = chi_23 (id (x) Delta) chi``
    and ``(eps (x) id) chi = 1 = (id (x) eps) chi``.

    Series modes compare the materialized elements.  With ``action`` the
    two sides are compared by their action on every triple of normal words
    of the target up to ``max_degree`` (exact when the action terminates).
    """
    P = chi.legs[0]
    rep = Report("twist-cocycle", P.name, P.ring.name, getattr(P.ring, "N", None))
    label = label or chi.name
    legs3 = (P, P, P)
    if action is None:
        X = chi.element
        lhs = X.embed((0, 1), legs3) * _coproduct_on_leg(X, 0)
        rhs = X.embed((1, 2), legs3) * _coproduct_on_leg(X, 1)
        rep.compare(f"{chi.name} cocycle identity", label, lhs, rhs)
        rep.compare(f"{chi.name} times inverse", label, X * chi.inverse, TensorElement.unit(X.legs))
        for leg in (0, 1):
            e = X.contract(leg, P.counit_word)
            rep.compare(f"{chi.name} counit on leg {leg + 1}", label, e, P.one())
        return rep
    A = action.target
    words = A.normal_words(max_degree)
    d_left = chi.mapped(lambda Y: _coproduct_on_leg(Y, 0))
    d_right = chi.mapped(lambda Y: _coproduct_on_leg(Y, 1))
    c12 = chi.mapped(lambda Y: Y.embed((0, 1), legs3))
    c23 = chi.mapped(lambda Y: Y.embed((1, 2), legs3))
    for u in words:
        for v in words:
            for w in words:
                V = TensorElement((A, A, A), {(u, v, w): A.ring.one})
                lhs = c12.act(action, d_left.act(action, V))
                rhs = c23.act(action, d_right.act(action, V))
                name = f"{chi.name} cocycle on {A.render_word(u) or '1'} (x) {A.render_word(v) or '1'} (x) {A.render_word(w) or '1'}"
                rep.compare(name, label, lhs, rhs)
    for u in words:
        for v in words:
            V = TensorElement((A, A), {(u, v): A.ring.one})
            for leg in (0, 1):
                epsd = chi.mapped(lambda Y, leg=leg: _counit_leg_to_unit(Y, leg))
                rep.compare(f"{chi.name} counit on leg {leg + 1} acting on "
                            f"{A.render_word(u) or '1'} (x) {A.render_word(v) or '1'}",
                            label, epsd.act(action, V), V)
    return rep


def _counit_leg_to_unit(Y: TensorElement, leg: int) -> TensorElement:
    """``(eps on leg) Y`` placed back as ``1`` on that leg."""
    P = Y.legs[leg]
    out: dict = {}
    for k, c in Y.terms.items():
        e = P.counit_word(k[leg])
        if e:
            kk = list(k)
            kk[leg] = ()
            _acc(out, tuple(kk), c * e)
    return TensorElement(Y.legs, out)


class TwistedHopf:
    """``P`` with coproduct ``chi Delta( ) chi^-1`` and antipode ``U S( ) U^-1``."""

    def __init__(self, P: HopfAlgebra, chi: Cocycle):
        self.P = P
        self.chi = chi
        X, Xi = chi.element, chi.inverse
        self.U = multiply_legs(X.map_legs([None, lambda w: NCElement(P, P.antipode_word(w))]), 0, 1)
        self.U_inv = multiply_legs(Xi.map_legs([lambda w: NCElement(P, P.antipode_word(w)), None]), 0, 1)

    def coproduct(self, x: NCElement) -> TensorElement:
        return self.chi.element * self.P.coproduct(x) * self.chi.inverse

    def antipode(self, x: NCElement) -> NCElement:
        return self.U * self.P.antipode(x) * self.U_inv


def twist_hopf(P: HopfAlgebra, chi: Cocycle, check: bool = True) -> TwistedHopf:
    """The twisted Hopf algebra ``P_chi`` (series modes)."""
    if check:
        rep = verify_cocycle(chi)
        if not rep.ok:
            raise CocycleFailed(f"{chi.name} is not a 2-cocycle: {rep.failures[0].name}")
    return TwistedHopf(P, chi)


def twist_R(R: TensorElement, chi: Cocycle) -> TensorElement:
    """``chi_21 R chi^-1``."""
    return chi.element.flip() * R * chi.inverse


class TwistedAlgebra:
    """``A_chi`` with product ``a . b = mult(chi^-1 |> (a (x) b))``, written
    back as a presentation on the letters of ``A``.

    ``presentation`` is an :class:`Algebra` whose rules are the twisted
    relations and whose normal words stand for twisted products of letters.
    """

    def __init__(self, T: ActionTable, chi: Cocycle, name: str | None = None):
        self.T = T
        self.chi = chi
        A = T.target
        self.A = A
        stems, inv = letter_stems(A)
        self.presentation = Algebra(name or f"{A.name}_chi", A.ring, stems, invertible=inv)
        self._word_memo: dict = {}
        for y in range(len(A.letters)):
            for x in range(y):
                if A.inverse.get(y) == x:
                    continue
                prod = self.mul(A.raw({(y,): 1}), A.raw({(x,): 1}))
                self.presentation.rules[(y, x)] = self.to_twisted(prod).terms
        self.presentation._invalidate()

    def mul(self, a: NCElement, b: NCElement) -> NCElement:
        V = TensorElement.pure(a, b)
        W = self.chi.act(self.T, V, inverse=True)
        return multiply_legs(W, 0, 1)

    def twisted_word(self, w) -> NCElement:
        """The twisted product of the letters of ``w``, in the old product."""
        hit = self._word_memo.get(w)
        if hit is None:
            A = self.A
            if len(w) <= 1:
                hit = A.raw({w: A.ring.one})
            else:
                hit = self.mul(A.raw({w[:1]: A.ring.one}), self.twisted_word(w[1:]))
            self._word_memo[w] = hit
        return hit

    def to_twisted(self, x: NCElement) -> NCElement:
        """Rewrite an element of ``A`` as a combination of twisted products of
        letters; the twisted product of a normal word differs from the word
        by lower-degree terms, so this is triangular."""
        P = self.presentation
        out: dict = {}
        rest = x
        steps = 0
        while rest:
            steps += 1
            if steps > 10_000:
                raise NonTerminatingActionSeries("twisted rewrite did not terminate")
            w = max(rest.terms, key=lambda u: (len(u), u))
            c = rest.terms[w]
            _acc(out, w, c)
            rest = rest - self.twisted_word(w).scale(c)
        return NCElement(P, out)

    def from_twisted(self, y: NCElement) -> NCElement:
        out = self.A.zero()
        for w, c in y.terms.items():
            out = out + self.twisted_word(w).scale(c)
        return out


def twist_module_algebra(T: ActionTable, chi: Cocycle, name: str | None = None) -> TwistedAlgebra:
    return TwistedAlgebra(T, chi, name)


# ---------------------------------------------------------------------------
# quasitriangular structures
# ---------------------------------------------------------------------------


def verify_qybe(R, label: str = "qybe", mode: str | None = None, name: str = "R") -> Report:
    """``R12 R13 R23 = R23 R13 R12`` for a tensor element or a representation
    matrix (``RepMatrix`` on a product of two equal spaces)."""
    if isinstance(R, TensorElement):
        P = R.legs[0]
        rep = Report("qybe", P.name, mode or P.ring.name, getattr(P.ring, "N", None))
        legs = (P, P, P)
        r12 = R.embed((0, 1), legs)
        r13 = R.embed((0, 2), legs)
        r23 = R.embed((1, 2), legs)
        rep.compare(f"{name}12 {name}13 {name}23 = {name}23 {name}13 {name}12", label,
                    r12 * r13 * r23, r23 * r13 * r12)
        return rep
    if hasattr(R, "qybe_sides"):
        rep = Report("qybe", getattr(R, "model", ""), mode or "rep", None)
        lhs, rhs = R.qybe_sides()
        rep.compare(f"{name}12 {name}13 {name}23 = {name}23 {name}13 {name}12 (representation)",
                    label, lhs, rhs)
        return rep
    raise ModeUnsupported(f"cannot check the Yang-Baxter equation for {type(R).__name__}")


def verify_quasitriangular(R: TensorElement, P: HopfAlgebra, R_inv: TensorElement | None = None,
                           label: str = "quasitriangular", name: str = "R") -> Report:
    """``(Delta (x) id) R = R13 R23``, ``(id (x) Delta) R = R13 R12`` and
    ``Delta^cop(x) R = R Delta(x)`` on every letter of ``P``."""
    rep = Report("quasitriangular", P.name, P.ring.name, getattr(P.ring, "N", None))
    legs = (P, P, P)
    r12 = R.embed((0, 1), legs)
    r13 = R.embed((0, 2), legs)
    r23 = R.embed((1, 2), legs)
    rep.compare(f"(Delta x id) {name} = {name}13 {name}23", label, apply_coproduct_leg(R, 0), r13 * r23)
    rep.compare(f"(id x Delta) {name} = {name}13 {name}12", label, apply_coproduct_leg(R, 1), r13 * r12)
    if R_inv is not None:
        rep.compare(f"{name} times inverse", label, R * R_inv, TensorElement.unit(R.legs))
    for l in P.letters:
        D = P.coproduct(P.gen(l.name))
        rep.compare(f"{name} intertwines Delta and Delta^cop on {l.name}", label, D.flip() * R, R * D)
    return rep


# ---------------------------------------------------------------------------
# closed-form q-exponential conjugation
# ---------------------------------------------------------------------------


def q_exp_conjugate(A, B, sign: int = 1):
    """``e_{q^2}^A B e_{q^-2}^{-A} = B + (q^2 - 1) B A + C`` when
    ``A B = q^2 B A + C`` and ``A C = C A``.

    ``sign = -1`` selects the mirror identity with ``q`` replaced by ``q^-1``.
    The relation is checked in normal form first; if it fails,
    :class:`RelationNotSatisfied` is raised.
    """
    ring = B.ring if isinstance(B, TensorElement) else B.alg.ring
    q2 = ring.q(2 * sign)
    C = A * B - (B * A).scale(q2)
    if not (A * C - C * A).is_zero():
        raise RelationNotSatisfied("A does not commute with C = AB - q^2 BA")
    return B + (B * A).scale(q2 - ring.one) + C
