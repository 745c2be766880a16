"""q-deformed presentations: U_q(su2), its dual C_q[SU2], the rescaled dual
U_q(su2*), and the braided-matrix form C_q[SU2*]^cop of U_q(su2).

Exact presentations work over rational functions in ``s`` with ``q = s^2``
and use the group-like letter ``K`` (= q^{H/2}); the t-adic form of U_q(su2)
keeps ``H`` as a letter and expands ``K = exp(kappa t H / 2)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..coeffs import ExactRing, SeriesRing
from ..hopf import HopfAlgebra, PairingTable
from ..ncalg import NCElement, TensorElement
from ._build import Presenter, exp_element, series_quotient


def uq_su2(ring=None) -> HopfAlgebra:
    """U_q(su2) with letters ``K^-1 < K < X_+ < X_-`` (exact) or
    ``H < X_+ < X_-`` (t-adic)."""
    ring = ring or ExactRing()
    if ring.is_series:
        return _uq_su2_tadic(ring)
    P = HopfAlgebra("uq_su2", ring, ["K", "X_+", "X_-"], invertible=["K"])
    p = Presenter(P)
    p.rules({
        "X_+ K": "q^-1*K*X_+",
        "X_+ K^-1": "q*K^-1*X_+",
        "X_- K": "q*K*X_-",
        "X_- K^-1": "q^-1*K^-1*X_-",
        "X_- X_+": "X_+*X_- - (q - q^-1)^-1*(K^2 - K^-2)",
    })
    P.set_group_like("K")
    p.coproducts({
        "X_+": "tensor(K^-1, X_+) + tensor(X_+, K)",
        "X_-": "tensor(K^-1, X_-) + tensor(X_-, K)",
    })
    p.counits({"X_+": 0, "X_-": 0})
    p.antipodes({"X_+": "-q*X_+", "X_-": "-q^-1*X_-"})
    P.complete_inverse_tables()
    p.stars({"K": "K", "K^-1": "K^-1", "X_+": "X_-", "X_-": "X_+"})
    return P


def q_power_of_h(P: HopfAlgebra, h: NCElement, c) -> NCElement:
    """``q^{c h}`` for an element ``h`` in the t-adic ring (q = exp(kappa t))."""
    return exp_element(P, h, Fraction(c) * P.ring.kappa)


def _uq_su2_tadic(ring: SeriesRing) -> HopfAlgebra:
    P = HopfAlgebra("uq_su2", ring, ["H", "X_+", "X_-"])
    p = Presenter(P)
    H = P.gen("H")
    bracket = P.zero()
    kappa = ring.kappa
    for n in range(1, ring.N + 2, 2):
        c = series_quotient(
            ring,
            lambda R, n=n: R.gen ** n * Fraction(2) * kappa**n / factorial(n),
            lambda R: R.q(1) - R.q(-1),
        )
        bracket = bracket + (H**n).scale(c)
    p.rules({
        "X_+ H": "H*X_+ - 2*X_+",
        "X_- H": "H*X_- + 2*X_-",
    })
    P.add_rule("X_- X_+", P.word("X_+ X_-") - bracket, doc="X_- X_+ = X_+*X_- - [q^H]")
    K = q_power_of_h(P, H, Fraction(1, 2))
    Kinv = q_power_of_h(P, H, Fraction(-1, 2))
    p.abbreviate("K", K, inverse=Kinv)
    P.set_primitive("H")
    p.coproducts({
        "X_+": "tensor(K^-1, X_+) + tensor(X_+, K)",
        "X_-": "tensor(K^-1, X_-) + tensor(X_-, K)",
    })
    p.counits({"X_+": 0, "X_-": 0})
    p.antipodes({"X_+": "-q*X_+", "X_-": "-q^-1*X_-"})
    P.complete_inverse_tables()
    p.stars({"H": "H", "X_+": "X_-", "X_-": "X_+"})
    return P


def cq_su2(ring=None) -> HopfAlgebra:
    """C_q[SU2] with letters ``b < c < a < d``, so that normal words are
    ``b^j c^k`` times a power of ``a`` or of ``d``; the q-determinant gives
    the rules ``a d -> 1 + q^-1 b c`` and ``d a -> 1 + q b c``."""
    ring = ring or ExactRing()
    P = HopfAlgebra("cq_su2", ring, ["b", "c", "a", "d"])
    p = Presenter(P)
    p.rules({
        "a b": "q^-1*b*a",
        "a c": "q^-1*c*a",
        "c b": "b*c",
        "d b": "q*b*d",
        "d c": "q*c*d",
        "a d": "1 + q^-1*b*c",
        "d a": "1 + q*b*c",
    })
    p.coproducts({
        "a": "tensor(a,a) + tensor(b,c)",
        "b": "tensor(a,b) + tensor(b,d)",
        "c": "tensor(c,a) + tensor(d,c)",
        "d": "tensor(c,b) + tensor(d,d)",
    })
    p.counits({"a": 1, "b": 0, "c": 0, "d": 1})
    p.antipodes({"a": "d", "d": "a", "b": "-q*b", "c": "-q^-1*c"})
    P.complete_inverse_tables()
    p.stars({"a": "d", "d": "a", "b": "-q^-1*c", "c": "-q*b"})
    return P


def uq_su2_star(ring=None) -> HopfAlgebra:
    """U_q(su2*) with letters ``x_+ < x_- < a < d``: C_q[SU2] rescaled by ``b = q^{1/2} mu x_-``,
    ``c = q^{3/2} mu x_+``; ``a`` stands for ``q^z`` and ``d`` for
    ``q^{-z}(1 + q mu^2 x_+ x_-)``."""
    ring = ring or ExactRing()
    P = HopfAlgebra("uq_su2_star", ring, ["x_+", "x_-", "a", "d"])
    p = Presenter(P)
    p.rules({
        "a x_+": "q^-1*x_+*a",
        "a x_-": "q^-1*x_-*a",
        "x_- x_+": "x_+*x_-",
        "d x_+": "q*x_+*d",
        "d x_-": "q*x_-*d",
        "a d": "1 + q*mu^2*x_+*x_-",
        "d a": "1 + q^3*mu^2*x_+*x_-",
    })
    p.coproducts({
        "a": "tensor(a,a) + q^2*mu^2*tensor(x_-,x_+)",
        "x_-": "tensor(a,x_-) + tensor(x_-,d)",
        "x_+": "tensor(x_+,a) + tensor(d,x_+)",
        "d": "q^2*mu^2*tensor(x_+,x_-) + tensor(d,d)",
    })
    p.counits({"a": 1, "x_+": 0, "x_-": 0, "d": 1})
    p.antipodes({"a": "d", "d": "a", "x_+": "-q^-1*x_+", "x_-": "-q*x_-"})
    P.complete_inverse_tables()
    p.stars({"a": "d", "d": "a", "x_+": "-x_-", "x_-": "-x_+"})
    return P


def cq_su2_star_cop(ring=None) -> HopfAlgebra:
    """C_q[SU2*]^cop: the braided-matrix generators ``alpha`` (invertible),
    ``gamma``, ``beta`` in the order ``alpha^-1 < alpha < gamma < beta``, with
    ``delta = alpha^-1 (1 + q^2 gamma beta)`` as an abbreviation and the
    opposite coproduct."""
    ring = ring or ExactRing()
    P = HopfAlgebra("cq_su2_star_cop", ring, ["alpha", "gamma", "beta"], invertible=["alpha"])
    p = Presenter(P)
    p.rules({
        "gamma alpha": "q^-2*alpha*gamma",
        "gamma alpha^-1": "q^2*alpha^-1*gamma",
        "beta alpha": "q^2*alpha*beta",
        "beta alpha^-1": "q^-2*alpha^-1*beta",
        "beta gamma": "q^2*gamma*beta + mu - mu*alpha^2",
    })
    P.set_group_like("alpha")
    p.coproducts({
        "beta": "tensor(beta, 1) + tensor(alpha, beta)",
        "gamma": "tensor(gamma, 1) + tensor(alpha, gamma)",
    })
    p.counits({"beta": 0, "gamma": 0})
    p.antipodes({"beta": "-alpha^-1*beta", "gamma": "-alpha^-1*gamma"})
    p.antipode_inverses({"beta": "-beta*alpha^-1", "gamma": "-gamma*alpha^-1"})
    p.stars({"alpha": "alpha", "alpha^-1": "alpha^-1", "beta": "gamma", "gamma": "beta"})
    p.abbreviate("delta", "alpha^-1 + q^2*alpha^-1*gamma*beta")
    return P


def quantum_pairing(H: HopfAlgebra, D: HopfAlgebra) -> PairingTable:
    """The spin-1/2 duality between U_q(su2) (exact) and C_q[SU2]."""
    ring = H.ring
    s = ring.s
    return PairingTable(H, D, {
        ("K", "a"): s,
        ("K", "d"): s.inverse(),
        ("K^-1", "a"): s.inverse(),
        ("K^-1", "d"): s,
        ("X_+", "b"): 1,
        ("X_-", "c"): 1,
    })
