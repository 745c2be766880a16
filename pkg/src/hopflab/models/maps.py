"""The isomorphisms between the double and the bicrossproduct (q-deformed
and limit), the quantum Killing form, the map identifying U(su2) with the
twisted U(su2*), and the matrix identities behind them."""

from __future__ import annotations

from functools import lru_cache

from ..constructions import (
    AlgebraMap,
    ModeUnsupported,
    _first_of,
    q_exp_conjugate,
    verify_hom,
)
from ..ncalg import NCElement, TensorElement
from ..parser import parse
from ..report import Report
from .registry import get_model

__all__ = ["THETA_Q_IMAGES", "THETA_0_IMAGES", "theta_q_map", "theta_q", "theta_0_map",
           "theta_0", "killing_Q", "theta_q_from_l_matrices", "l_matrix_report",
           "killing_matrix_report", "twisted_coproduct_report", "TWIST_EXPONENT"]

# second expression of the theta display, row by row
THETA_Q_IMAGES = {
    "a": "q^2*(delta - mu*alpha)*K - q^2*s*mu*beta*X_+",
    "b": "-q^2*beta*K^-1",
    "c": "-q^2*gamma*K + s*mu*alpha*X_+",
    "d": "alpha*K^-1",
}

THETA_0_IMAGES = {"a": "delta", "b": "-beta", "c": "-gamma", "d": "alpha"}

# exponent A of the q-exponential factor of chi_B
TWIST_EXPONENT = "tensor(-s^-1*K*X_+, alpha^-1*beta)"

# alpha, beta, gamma as seen through Q in the tilde alphabet of the t-adic mirror
_TILDE_SUBST = {
    "alpha": "Kt^2",
    "beta": "s^-1*(q - q^-1)*Kt*Xt_-",
    "gamma": "s^-1*(q - q^-1)*Xt_+*Kt",
    "delta": "(Kt^-2 + q^2*Kt^-2*(s^-1*(q - q^-1))^2*Xt_+*Kt*Kt*Xt_-)",
}


def _tilde(text: str) -> str:
    import re

    return re.sub(r"\b(alpha|beta|gamma|delta)\b", lambda m: _TILDE_SUBST[m.group(1)], text)


@lru_cache(maxsize=None)
def _theta_q_map(mode: str, order: int) -> AlgebraMap:
    D = get_model("double_q", mode, order)
    M = get_model("bicross_q", mode, order)
    H, _ = M.factors["H"]
    images = {}
    for l in H.letters:
        images[l.name] = parse(l.name, M)
    for k, v in THETA_Q_IMAGES.items():
        images[k] = parse(v if mode == "exact-q" else _tilde(v), M)
    return AlgebraMap(D, M, images, "theta_q")


def theta_q_map(mode: str = "exact-q", order: int = 4) -> AlgebraMap:
    """``D(U_q(su2)) -> C_q[SU2*]^cop >|< U_q(su2)``; identity on the
    U_q(su2) letters."""
    return _theta_q_map(mode, order if mode == "t-adic" else 0)


def theta_q(x: NCElement) -> NCElement:
    mode = getattr(x.alg, "mode", "exact-q")
    order = getattr(x.alg.ring, "N", 4)
    return theta_q_map(mode, order)(x)


@lru_cache(maxsize=None)
def theta_0_map() -> AlgebraMap:
    """``D(U(su2)) -> C[SU2*]^cop >|< U(su2)``: ``a -> delta``,
    ``b -> -beta``, ``c -> -gamma``, ``d -> alpha``, identity on ``H, X_+-``."""
    D = get_model("double_0")
    B = get_model("bicross_0", "exact-lambda")
    images = {k: parse(v, B) for k, v in THETA_0_IMAGES.items()}
    for n in ("H", "X_+", "X_-"):
        images[n] = B.gen(n)
    return AlgebraMap(D, B, images, "theta_0")


def theta_0(x: NCElement) -> NCElement:
    return theta_0_map()(x)


# ---------------------------------------------------------------------------
# quantum Killing form
# ---------------------------------------------------------------------------

_Q_COVARIANT = {
    # U_q(su2*) generators, exact-q
    "uq_su2_star": ("uq_su2", {"a": "K^2", "x_-": "K*X_-", "x_+": "q^-1*X_+*K",
                               "d": "K^-2 + mu^2*X_+*X_-"}),
    # the q -> 1 limit
    "u_su2_star": ("u_su2", {"z": "H", "x_+": "X_+", "x_-": "X_-"}),
}


def killing_Q(x: NCElement) -> NCElement:
    """The quantum Killing form into U_q(su2) (or U(su2) in the limit).

    On the braided-matrix generators it is the algebra map ``killing_chart``.
    On U_q(su2*) it is not multiplicative and is defined on the span of the
    unit and the generators only.
    """
    src = x.alg
    if src.name == "cq_su2_star_cop":
        from .registry import killing_chart

        return killing_chart(src, get_model("uq_su2"))(x)
    try:
        target, table = _Q_COVARIANT[src.name]
    except KeyError:
        raise ModeUnsupported(f"no Killing form on {src.name}") from None
    H = get_model(target)
    out = H.zero()
    for w, c in x.terms.items():
        if not w:
            out = out + H.one().scale(c)
        elif len(w) == 1:
            out = out + parse(table[src.letters[w[0]].name], H).scale(c)
        else:
            raise ModeUnsupported("Q is only linear on U_q(su2*); products need the transmuted product")
    return out


def killing_matrix_report() -> Report:
    """The Killing form on the braided matrix and on the U_q(su2*) matrix,
    entry by entry against the closed forms."""
    H = get_model("uq_su2")
    A = get_model("cq_su2_star_cop")
    U = get_model("uq_su2_star")
    rep = Report("isomorphism", "uq_su2", "exact-q")
    braided = [("alpha", "K^2"), ("beta", "s^-1*(q - q^-1)*K*X_-"),
               ("gamma", "s^-1*(q - q^-1)*X_+*K"),
               ("delta", "K^-2 + q^-1*(q - q^-1)^2*X_+*X_-")]
    for src, want in braided:
        rep.compare(f"Q({src})", "qkillingform", killing_Q(parse(src, A)), parse(want, H))
    covariant = [("a", "K^2"), ("s*mu*x_-", "s*mu*K*X_-"), ("s^3*mu*x_+", "s*mu*X_+*K"),
                 ("d", "K^-2 + mu^2*X_+*X_-")]
    for src, want in covariant:
        rep.compare(f"Q({src})", "qcovmap", killing_Q(parse(src, U)), parse(want, H))
    return rep


# ---------------------------------------------------------------------------
# L-matrices
# ---------------------------------------------------------------------------


def _l_combination(H):
    from .rep import _matmul, antipode_matrix, l_matrices

    Lp, Lm = l_matrices(H)
    return _matmul(Lm, antipode_matrix(H, Lp)), Lp


def l_matrix_report() -> Report:
    """``L- S L+`` against the first expression of the theta display and
    against ``Q`` of the braided matrix in the second expression."""
    H = get_model("uq_su2")
    A = get_model("cq_su2_star_cop")
    comb, _ = _l_combination(H)
    first = [["K^-2 + q^3*mu^2*X_-*X_+", "-q*s*mu*X_-*K"],
             ["-q*s*mu*K*X_+", "K^2"]]
    second = [["q^2*(delta - mu*alpha)", "-q^2*beta"], ["-q^2*gamma", "alpha"]]
    rep = Report("isomorphism", "uq_su2", "exact-q")
    for i in range(2):
        for j in range(2):
            rep.compare(f"(L- S L+)[{i + 1}{j + 1}] closed form", "theta",
                        comb[i][j], parse(first[i][j], H))
            rep.compare(f"(L- S L+)[{i + 1}{j + 1}] = Q(braided entry)", "theta",
                        comb[i][j], killing_Q(parse(second[i][j], A)))
    return rep


def theta_q_from_l_matrices() -> dict[str, NCElement]:
    """``theta(t^i_j) = Q^-1((L- S L+)^i_k) L+^k_j`` in the mirror product,
    computed from the representation rather than typed in."""
    M = get_model("bicross_q")
    H, emb = M.factors["H"]
    comb, Lp = _l_combination(H)
    names = [["a", "b"], ["c", "d"]]
    out = {}
    for i in range(2):
        for j in range(2):
            acc = M.zero()
            for k in range(2):
                left = _first_of(M, comb[i][k])
                right = M.raw({emb(w): c for w, c in Lp[k][j].terms.items()})
                acc = acc + left * right
            out[names[i][j]] = acc
    return out


# ---------------------------------------------------------------------------
# twisted coproduct of the image of the double
# ---------------------------------------------------------------------------


def _commutes_with_q_power(M, B: TensorElement) -> bool:
    """Every term ``u (x) v`` of ``B`` has ``K u = u K`` and
    ``alpha v = v alpha``, so ``q^{c H (x) H~}`` commutes with ``B``."""
    K, Ki = M.gen("K"), M.gen("K^-1")
    al, ali = M.gen("alpha"), M.gen("alpha^-1")
    for (u, v), _ in B.terms.items():
        x, y = M.raw({u: 1}), M.raw({v: 1})
        if K * x * Ki != x or al * y * ali != y:
            return False
    return True


def twisted_coproduct_exact(name: str) -> TensorElement:
    """``chi_B Delta(theta(x)) chi_B^-1`` by the closed-form q-exponential
    conjugation; valid when the ``q^{-H (x) H~ / 2}`` factor commutes with
    ``Delta theta(x)``."""
    M = get_model("bicross_q")
    D = get_model("double_q")
    B = M.coproduct(theta_q_map()(D.gen(name)))
    if not _commutes_with_q_power(M, B):
        raise ModeUnsupported(f"Delta theta({name}) does not commute with the q-power factor")
    return q_exp_conjugate(parse(TWIST_EXPONENT, M), B)


def twisted_coproduct_report(letters=("a", "b", "c", "d"), exact=("d",)) -> Report:
    """``chi_B Delta(theta x) chi_B^-1 = (theta (x) theta) Delta x``.

    Every letter is checked as a 16x16 matrix identity in the spin-1/2
    representation of the mirror product, where the q-exponential stops
    after its linear term and ``q^{c H (x) H~}`` is diagonal.  Letters in
    ``exact`` are also checked by the closed-form conjugation in the algebra.
    """
    from fractions import Fraction

    from ..coeffs import RationalFunction
    from .rep import MirrorSpinHalf, RepMatrix

    M = get_model("bicross_q")
    D = get_model("double_q")
    H, _ = M.factors["H"]
    th = theta_q_map()
    rep = Report("twisted-coproduct", "bicross_q", "exact-q")
    mr = MirrorSpinHalf(M, H)
    s = RationalFunction.s()

    def spow(k):
        return s**k if k >= 0 else s.inverse() ** (-k)

    def weight(letter):
        diag = mr.word((M.letter_index(letter),))
        out = []
        for i in range(4):
            v = diag.rows[i][i]
            for k in range(-8, 9):
                if v == spow(k):
                    out.append(k)
                    break
            else:
                raise ValueError(f"{letter} is not diagonal with a power of s")
        return out

    h = weight("K")          # K = s^h
    ht = weight("alpha")     # alpha = s^{2 h~}
    # q^{c H (x) H~} = s^{2c * h * h~/2} with H = h, H~ = h~/2
    def qpow(c):
        return RepMatrix.diag([spow(int(2 * c * a * b / 2)) for a in h for b in ht])

    A = mr.tensor(parse(TWIST_EXPONENT, M))
    I16 = RepMatrix.identity(16)
    if not (A * A).is_zero():
        raise ModeUnsupported("the twist exponent is not nilpotent in the representation")
    chi = (I16 + A) * qpow(Fraction(-1, 2))
    chi_inv = qpow(Fraction(1, 2)) * (I16 - A)
    for x in letters:
        target = th.on_legs(D.coproduct(D.gen(x)), [0, 1])
        lhs = chi * mr.tensor(M.coproduct(th(D.gen(x)))) * chi_inv
        rep.compare(f"chi_B Delta theta({x}) chi_B^-1 (representation)", "theta",
                    lhs, mr.tensor(target))
        if x in exact:
            rep.compare(f"chi_B Delta theta({x}) chi_B^-1 (q-exponential conjugation)", "theta",
                        twisted_coproduct_exact(x), target)
    return rep
