"""The universal R-matrix of U_q(su2), the Drinfeld twist of the mirror
product and its two quasitriangular structures (t-adic), and the q -> 1
twist and R-matrix of the limit bicrossproduct.

R_BD and R_BL are computed along two independent routes: pushing
``R13^-1 R24`` (or ``R31 R24``) through the factor map onto the mirror
product, and applying ``S^-1`` to the second leg of the five-fold product
before identifying ``H^cop (x) H`` with the mirror product as vector spaces.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..constructions import (
    Cocycle,
    ExpFactor,
    ModeUnsupported,
    inverse_antipode_on_leg,
    multiply_factor_pairs,
    place,
    product_of_factors,
    theta1,
)
from ..ncalg import Algebra, TensorElement, _acc
from ..parser import parse
from .registry import get_model

__all__ = ["uq_R", "chi_B", "chi_B_from_R", "R_BD", "R_BL", "chi_B0", "chi_B0_series",
           "R_B0", "momentum_factors"]


def _half(ring):
    return ring.coerce(Fraction(1, 2))


# ---------------------------------------------------------------------------
# U_q(su2)
# ---------------------------------------------------------------------------


def _R_factors(H):
    ring = H.ring
    return [ExpFactor("qpow", parse("tensor(H, H)", H), _half(ring)),
            ExpFactor("qexp", parse("mu*tensor(K*X_+, K^-1*X_-)", H), ring.q(-2))]


@lru_cache(maxsize=None)
def uq_R(order: int = 4):
    """``(R, R^-1)`` for t-adic U_q(su2): ``R = q^{H (x) H / 2} e_{q^-2}^{mu K X_+ (x) K^-1 X_-}``."""
    H = get_model("uq_su2", "t-adic", order)
    f = _R_factors(H)
    R = product_of_factors(f)
    R_inv = product_of_factors([x.inverse() for x in reversed(f)])
    return R, R_inv


# ---------------------------------------------------------------------------
# the twist of the mirror product and its R-matrices
# ---------------------------------------------------------------------------


def _mirror(order):
    M = get_model("bicross_q", "t-adic", order)
    T, _ = M.factors["first"]
    H, _ = M.factors["H"]
    return M, T, H, (T, H, T, H)


@lru_cache(maxsize=None)
def chi_B(order: int = 4) -> Cocycle:
    """``e_{q^2}^{-mu K X_+ (x) K~^-1 X~_-} q^{-H (x) H~ / 2}``: the display's
    ``-q^{-1/2} K X_+ (x) alpha^-1 beta`` with ``alpha^-1 beta = q^{1/2} mu K~^-1 X~_-``."""
    M, *_ = _mirror(order)
    ring = M.ring
    return Cocycle([
        ExpFactor("qexp", parse("-mu*tensor(K*X_+, Kt^-1*Xt_-)", M), ring.q(2)),
        ExpFactor("qpow", parse("tensor(H, Ht)", M), -_half(ring)),
    ], "chi_B")


@lru_cache(maxsize=None)
def chi_B_from_R(order: int = 4) -> TensorElement:
    """The twist as the image of ``R^-1`` between the second and third
    factors of ``(H^cop (x) H)^2``, composed with the ``R^-1`` of the two
    ``H^cop`` factors that the factor map produces."""
    M, T, H, legs4 = _mirror(order)
    _, Ri = uq_R(order)
    return theta1(M, place(Ri, (1, 2), legs4) * place(Ri, (0, 2), legs4))


def _quasitriangular(order, route, first):
    M, T, H, legs4 = _mirror(order)
    R, Ri = uq_R(order)
    head = place(Ri, (0, 2), legs4) if first == "inverse13" else place(R, (2, 0), legs4)
    if route == "theta1":
        return theta1(M, head * place(R, (1, 3), legs4))
    if route == "antipode":
        prod = (head * place(R, (1, 2), legs4) * place(R, (0, 2), legs4)
                * place(Ri, (0, 3), legs4) * place(Ri, (1, 3), legs4))
        return multiply_factor_pairs(M, inverse_antipode_on_leg(prod, 1))
    raise ValueError(f"unknown route {route!r}")


@lru_cache(maxsize=None)
def R_BD(order: int = 4, route: str = "theta1") -> TensorElement:
    """``R13^-1 R24`` carried to the mirror product (route ``theta1``) or
    ``(id (x) S^-1 (x) id (x) id)(R13^-1 R23 R13 R14^-1 R24^-1)`` read in the
    mirror product (route ``antipode``)."""
    return _quasitriangular(order, route, "inverse13")


@lru_cache(maxsize=None)
def R_BL(order: int = 4, route: str = "theta1") -> TensorElement:
    """As :func:`R_BD` with ``R31`` in place of ``R13^-1``."""
    return _quasitriangular(order, route, "flip31")


# ---------------------------------------------------------------------------
# q -> 1
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def chi_B0() -> Cocycle:
    """``e^{-X_+ (x) alpha^-1 beta} e^{-H (x) (alpha - 1) / 2}`` on the exact-lambda
    limit bicrossproduct.  Only its action is available in this mode; the
    inverse is ``e^{H (x) (alpha - 1) / 2} e^{X_+ (x) alpha^-1 beta}``."""
    B = get_model("bicross_0", "exact-lambda")
    return Cocycle([
        ExpFactor("exp", parse("tensor(X_+, alpha^-1*beta)", B), -1),
        ExpFactor("exp", parse("tensor(H, alpha - 1)", B), Fraction(-1, 2)),
    ], "chi_B0")


@lru_cache(maxsize=None)
def chi_B0_series(order: int = 4, log_alpha: bool = False) -> Cocycle:
    """The limit twist in the momentum basis over lambda-adic series:
    ``e^{-X_+ (x) lam P_+ e^{-lam p_0}} e^{-M (x) (e^{lam p_0} - 1)}``.

    ``log_alpha`` puts ``ln alpha = lam p_0`` in place of ``alpha - 1``,
    which is what the limit of ``q^{-H (x) H~ / 2}`` gives; only that form
    satisfies the cocycle identity beyond first order in ``lam``."""
    P = get_model("bicross_0", "lambda-adic", order)
    second = "lam*tensor(M, p_0)" if log_alpha else "tensor(M, exp_lp0 - 1)"
    return Cocycle([
        ExpFactor("exp", parse("lam*tensor(N_2 - i*N_1, (p_2 + i*p_1)*exp_mlp0)", P), -1),
        ExpFactor("exp", parse(second, P), -1),
    ], "chi_B0 (log alpha)" if log_alpha else "chi_B0")


def momentum_factors(P):
    """The momentum letters and the rotation/boost letters of the momentum
    basis as two separate algebras, so that exponentials can be multiplied
    in the tensor product algebra before the factors are recombined."""
    ring = P.ring
    mom = Algebra("momenta", ring, ["p_0", "p_1", "p_2"])
    mom.add_rule("p_1 p_0", parse("p_0*p_1", mom))
    mom.add_rule("p_2 p_0", parse("p_0*p_2", mom))
    mom.add_rule("p_2 p_1", parse("p_1*p_2", mom))
    lor = Algebra("rotations", ring, ["M", "N_1", "N_2"])
    lor.add_rule("N_1 M", parse("M*N_1 - i*N_2", lor))
    lor.add_rule("N_2 M", parse("M*N_2 + i*N_1", lor))
    lor.add_rule("N_2 N_1", parse("N_1*N_2 - i*M", lor))
    return mom, lor


def _recombine(P, X: TensorElement) -> TensorElement:
    """``(u (x) h (x) v (x) k) -> u h (x) v k``; momentum words precede the
    rotation letters in the normal order of ``P``, so concatenation is normal."""
    shift = 3
    out: dict = {}
    for (u, h, v, k), c in X.terms.items():
        key = (u + tuple(i + shift for i in h), v + tuple(i + shift for i in k))
        _acc(out, key, c)
    return TensorElement((P, P), out)


@lru_cache(maxsize=None)
def R_B0(order: int = 4, log_alpha: bool = False) -> TensorElement:
    """The limit R-matrix in the momentum basis, all exponentials multiplied
    in the tensor product algebra of momenta and rotations:

    ``e^{lam P_- M (x) lam P_+ e^{-lam p0}} :e^{-e^{lam p0} X_+ (x) lam P_+ e^{-lam p0}}:
    e^{-M (x) (e^{lam p0} - 1)} e^{-lam P_- (x) X_-} e^{-(e^{lam p0} - 1) (x) M}``.

    ``log_alpha`` replaces both ``e^{lam p0} - 1`` by ``lam p0``.
    """
    P = get_model("bicross_0", "lambda-adic", order)
    ring = P.ring
    if not ring.is_series or ring.var != "lam":
        raise ModeUnsupported("R_B0 is materialized over lambda-adic series")
    mom, lor = momentum_factors(P)
    legs = (mom, lor, mom, lor)

    from ._build import exp_element

    p0 = parse("p_0", mom)
    e_plus = exp_element(mom, p0, 1)
    e_minus = exp_element(mom, p0, -1)
    one_m, one_l = mom.one(), lor.one()
    P_plus = parse("lam*(p_2 + i*p_1)", mom)
    P_minus = parse("lam*(p_2 - i*p_1)", mom)
    X_plus = parse("N_2 - i*N_1", lor)
    X_minus = parse("N_2 + i*N_1", lor)
    M_ = parse("M", lor)
    alpha_part = parse("lam*p_0", mom) if log_alpha else e_plus - one_m
    factors = [
        TensorElement.pure(P_minus, M_, P_plus * e_minus, one_l),
        TensorElement.pure(e_plus, X_plus, P_plus * e_minus, one_l).scale(-1),
        TensorElement.pure(one_m, M_, alpha_part, one_l).scale(-1),
        TensorElement.pure(P_minus, one_l, one_m, X_minus).scale(-1),
        TensorElement.pure(alpha_part, one_l, one_m, M_).scale(-1),
    ]
    out = TensorElement.unit(legs)
    for Y in factors:
        out = out * ExpFactor("exp", Y, 1).element()
    return _recombine(P, out)
