"""The q -> 1 presentations: U(su2), C[SU2], U(su2*), C[SU2*]^cop, and the
limit bicrossproduct in its braided-matrix letters and in the
(p_a, M, N_i) basis.

Limit models default to the exact-lambda ring (q = 1, coefficients in
Q(i)(lam)).  The same builders accept a lambda-adic :class:`SeriesRing`.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..coeffs import ExactRing, SeriesRing, TruncSeries
from ..hopf import HopfAlgebra, PairingTable
from ._build import Presenter, exp_element
from .quantum import cq_su2, cq_su2_star_cop


def classical_ring():
    return ExactRing(classical=True)


def u_su2(ring=None) -> HopfAlgebra:
    """U(su2) on ``H < X_+ < X_-`` with primitive generators."""
    ring = ring or classical_ring()
    P = HopfAlgebra("u_su2", ring, ["H", "X_+", "X_-"])
    p = Presenter(P)
    p.rules({
        "X_+ H": "H*X_+ - 2*X_+",
        "X_- H": "H*X_- + 2*X_-",
        "X_- X_+": "X_+*X_- - H",
    })
    for name in ("H", "X_+", "X_-"):
        P.set_primitive(name)
    p.stars({"H": "H", "X_+": "X_-", "X_-": "X_+"})
    return P


def c_su2(ring=None) -> HopfAlgebra:
    """C[SU2]: the commutative specialization of C_q[SU2]."""
    P = cq_su2(ring or classical_ring())
    P.name = "c_su2"
    return P


def u_su2_star(ring=None) -> HopfAlgebra:
    """U(su2*) on ``z < x_+ < x_-`` with ``[x_+-, z] = x_+-`` and ``[x_+, x_-] = 0``."""
    ring = ring or classical_ring()
    P = HopfAlgebra("u_su2_star", ring, ["z", "x_+", "x_-"])
    p = Presenter(P)
    p.rules({
        "x_+ z": "z*x_+ + x_+",
        "x_- z": "z*x_- + x_-",
        "x_- x_+": "x_+*x_-",
    })
    for name in ("z", "x_+", "x_-"):
        P.set_primitive(name)
    p.stars({"z": "-z", "x_+": "-x_-", "x_-": "-x_+"})
    return P


def c_su2_star_cop(ring=None) -> HopfAlgebra:
    """C[SU2*]^cop: commutative ``alpha^{+-1}, gamma, beta``."""
    P = cq_su2_star_cop(ring or classical_ring())
    P.name = "c_su2_star_cop"
    return P


def classical_pairing(H: HopfAlgebra, D: HopfAlgebra) -> PairingTable:
    """The spin-1/2 duality between U(su2) and C[SU2]."""
    return PairingTable(H, D, {
        ("H", "a"): 1,
        ("H", "d"): -1,
        ("X_+", "b"): 1,
        ("X_-", "c"): 1,
    })


# ---------------------------------------------------------------------------
# limit bicrossproduct, braided-matrix letters
# ---------------------------------------------------------------------------

BICROSS0_CROSS = {
    "H alpha": "alpha*H",
    "H alpha^-1": "alpha^-1*H",
    "H gamma": "gamma*H + 2*gamma",
    "H beta": "beta*H - 2*beta",
    "X_+ alpha": "alpha*X_+ - gamma",
    "X_+ alpha^-1": "alpha^-1*X_+ + alpha^-2*gamma",
    "X_+ gamma": "gamma*X_+",
    "X_+ beta": "beta*X_+ - delta + alpha",
    "X_- alpha": "alpha*X_- + beta",
    "X_- alpha^-1": "alpha^-1*X_- - alpha^-2*beta",
    "X_- gamma": "gamma*X_- + delta - alpha",
    "X_- beta": "beta*X_-",
}


def bicross_0_matrix(ring=None, cross: dict | None = None) -> HopfAlgebra:
    """C[SU2*]^cop >|< U(su2) on ``alpha^-1 < alpha < gamma < beta < H < X_+ < X_-``.

    ``cross`` replaces the table of cross rules (used to install rules
    obtained by specializing the q-deformed mirror product).
    """
    ring = ring or classical_ring()
    P = HopfAlgebra("bicross_0", ring, ["alpha", "gamma", "beta", "H", "X_+", "X_-"],
                    invertible=["alpha"])
    p = Presenter(P)
    p.rules({
        "gamma alpha": "alpha*gamma",
        "gamma alpha^-1": "alpha^-1*gamma",
        "beta alpha": "alpha*beta",
        "beta alpha^-1": "alpha^-1*beta",
        "beta gamma": "gamma*beta",
    })
    p.abbreviate("delta", "alpha^-1 + alpha^-1*gamma*beta")
    p.rules({
        "X_+ H": "H*X_+ - 2*X_+",
        "X_- H": "H*X_- + 2*X_-",
        "X_- X_+": "X_+*X_- - H",
    })
    if cross is None:
        p.rules(BICROSS0_CROSS)
    else:
        for lhs, rhs in cross.items():
            P.add_rule(lhs, rhs)
    P.set_group_like("alpha")
    P.set_primitive("H")
    p.coproducts({
        "beta": "tensor(beta, 1) + tensor(alpha, beta)",
        "gamma": "tensor(gamma, 1) + tensor(alpha, gamma)",
        "X_+": "tensor(1, X_+) + tensor(X_+, alpha^-1) + 1/2*tensor(H, gamma*alpha^-1)",
        "X_-": "tensor(1, X_-) + tensor(X_-, alpha^-1) + 1/2*tensor(H, alpha^-1*beta)",
    })
    p.counits({"beta": 0, "gamma": 0, "X_+": 0, "X_-": 0})
    p.antipodes({
        "beta": "-alpha^-1*beta",
        "gamma": "-alpha^-1*gamma",
        "X_+": "-X_+*alpha + 1/2*H*gamma",
        "X_-": "-X_-*alpha + 1/2*H*beta",
    })
    p.antipode_inverses({
        "beta": "-beta*alpha^-1",
        "gamma": "-gamma*alpha^-1",
        "X_+": "-alpha*X_+ + 1/2*gamma*H",
        "X_-": "-alpha*X_- + 1/2*beta*H",
    })
    return P


# ---------------------------------------------------------------------------
# limit bicrossproduct, (p_a, M, N_i) letters, lambda-adic
# ---------------------------------------------------------------------------


def bicross_0_momentum(ring: SeriesRing | None = None) -> HopfAlgebra:
    """The limit bicrossproduct on ``p_0 < p_1 < p_2 < M < N_1 < N_2`` over
    lambda-adic series; ``e^{+-lam p_0}`` are expanded to the ring order."""
    ring = ring or SeriesRing("lam", 4)
    if not ring.is_series or ring.var != "lam":
        raise ValueError("the momentum basis needs the lambda-adic ring")
    P = HopfAlgebra("bicross_0", ring, ["p_0", "p_1", "p_2", "M", "N_1", "N_2"])
    p = Presenter(P)
    p.rules({"p_1 p_0": "p_0*p_1", "p_2 p_0": "p_0*p_2", "p_2 p_1": "p_1*p_2"})
    p0 = P.gen("p_0")
    e_plus = exp_element(P, p0, 1)
    e_minus = exp_element(P, p0, -1)
    p.abbreviate("exp_lp0", e_plus, inverse=e_minus)
    P.abbreviations["exp_mlp0"] = e_minus
    # (e^{lam p0} - e^{-lam p0}) / lam, exact to the ring order
    sinh = P.zero()
    for k in range(1, ring.N + 2, 2):
        c = TruncSeries(ring.var, [0] * (k - 1) + [Fraction(2, factorial(k))], ring.N)
        sinh = sinh + (p0**k).scale(c)
    lam = ring.lam
    psq = P.word("p_1 p_1") + P.word("p_2 p_2")
    energy = sinh - (e_minus * psq).scale(lam)
    P.abbreviations["E"] = energy
    I = ring.I
    half_i = I * Fraction(1, 2)
    p.rules({
        "M p_0": "p_0*M",
        "M p_1": "p_1*M + i*p_2",
        "M p_2": "p_2*M - i*p_1",
    })
    P.add_rule("N_1 p_0", P.word("p_0 N_1") - (P.gen("p_2") * e_minus).scale(I))
    P.add_rule("N_2 p_0", P.word("p_0 N_2") + (P.gen("p_1") * e_minus).scale(I))
    P.add_rule("N_1 p_1", P.word("p_1 N_1"))
    P.add_rule("N_1 p_2", P.word("p_2 N_1") + energy.scale(half_i))
    P.add_rule("N_2 p_1", P.word("p_1 N_2") - energy.scale(half_i))
    P.add_rule("N_2 p_2", P.word("p_2 N_2"))
    p.rules({
        "N_1 M": "M*N_1 - i*N_2",
        "N_2 M": "M*N_2 + i*N_1",
        "N_2 N_1": "N_1*N_2 - i*M",
    })
    P.set_primitive("p_0")
    P.set_primitive("M")
    p.coproducts({
        "p_1": "tensor(p_1, 1) + tensor(exp_lp0, p_1)",
        "p_2": "tensor(p_2, 1) + tensor(exp_lp0, p_2)",
        "N_1": "tensor(1, N_1) + tensor(N_1, exp_mlp0) + lam*tensor(M, p_1*exp_mlp0)",
        "N_2": "tensor(1, N_2) + tensor(N_2, exp_mlp0) + lam*tensor(M, p_2*exp_mlp0)",
    })
    p.counits({"p_1": 0, "p_2": 0, "N_1": 0, "N_2": 0})
    p.antipodes({
        "p_1": "-exp_mlp0*p_1",
        "p_2": "-exp_mlp0*p_2",
        "N_1": "-N_1*exp_lp0 + lam*M*p_1",
        "N_2": "-N_2*exp_lp0 + lam*M*p_2",
    })
    p.antipode_inverses({
        "p_1": "-p_1*exp_mlp0",
        "p_2": "-p_2*exp_mlp0",
        "N_1": "-exp_lp0*N_1 + lam*p_1*M",
        "N_2": "-exp_lp0*N_2 + lam*p_2*M",
    })
    return P


def momentum_chart(src: HopfAlgebra, dst: HopfAlgebra):
    """Images of the braided-matrix letters in the momentum basis:
    ``alpha = e^{lam p_0}``, ``beta = lam P_+``, ``gamma = lam P_-`` with
    ``P_+- = p_2 +- i p_1``, ``H = 2M``, ``X_+- = N_2 -+ i N_1``."""
    from ..constructions import AlgebraMap
    from ..parser import parse

    imgs = {
        "alpha": dst.abbreviations["exp_lp0"],
        "alpha^-1": dst.abbreviations["exp_mlp0"],
        "beta": parse("lam*(p_2 + i*p_1)", dst),
        "gamma": parse("lam*(p_2 - i*p_1)", dst),
        "H": parse("2*M", dst),
        "X_+": parse("N_2 - i*N_1", dst),
        "X_-": parse("N_2 + i*N_1", dst),
    }
    return AlgebraMap(src, dst, imgs, name="limitGEN")
